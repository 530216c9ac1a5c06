#pragma once

// Dataset files.
//
// JSON (version 1):
//   {"version": 1, "alternatives": ["x", "y"],
//    "choices": [{"menu": ["x", "y"], "choice": "y"}, ...]}
// Text, one row per line, '#' starts a comment:
//   alternatives: x, y, z      (optional; otherwise order of first appearance)
//   x, y, z -> x

#include <string>
#include <string_view>

#include "harmchoice/core.hpp"

namespace harmchoice {

inline constexpr int kDatasetFormatVersion = 1;

Dataset parse_dataset_json(std::string_view text);
Dataset parse_dataset_text(std::string_view text);
/// Picks the format from the first non-blank character ('{' means JSON).
Dataset parse_dataset(std::string_view text);
/// Reads a file, or standard input when path is "-".
Dataset load_dataset(const std::string& path);

/// Every menu in canonical order, singletons included.
std::string dataset_to_json(const GroundSet& ground, const ChoiceFunction& choice);
std::string dataset_to_text(const GroundSet& ground, const ChoiceFunction& choice);

}  // namespace harmchoice
