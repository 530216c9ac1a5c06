#pragma once

#include <string>
#include <vector>

#include "doctest.h"
#include "harmchoice/core.hpp"
#include "harmchoice/io.hpp"

namespace fixture {

inline harmchoice::Dataset load(const std::string& name) {
  return harmchoice::load_dataset(std::string(HARMCHOICE_TEST_DATA) + "/" + name + ".json");
}

inline std::string data_path(const std::string& name) { return std::string(HARMCHOICE_TEST_DATA) + "/" + name; }

inline harmchoice::Alternative id(const harmchoice::GroundSet& g, const std::string& label) {
  return *g.find(label);
}

inline harmchoice::Menu menu(const harmchoice::GroundSet& g, std::initializer_list<const char*> labels) {
  std::vector<harmchoice::Alternative> m;
  for (const char* l : labels) m.push_back(id(g, l));
  return harmchoice::Menu::of(m);
}

inline harmchoice::LinearOrder order(const harmchoice::GroundSet& g, const std::string& spec) {
  return harmchoice::parse_order(spec, g);
}

/// Code of the harmchoice::Error thrown by fn; fails the test if none is thrown.
template <class Fn>
harmchoice::ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (const harmchoice::Error& e) {
    return e.code();
  }
  FAIL("expected harmchoice::Error");
  return harmchoice::ErrorCode::ParseError;
}

}  // namespace fixture
