#pragma once

#include <cstddef>
#include <vector>

#include "harmchoice/core.hpp"

namespace harmchoice {

/// i-th harmful distortion: the top i alternatives of `order` move to the
/// bottom in reversed relative order; the rest keep their order and lead.
/// Index 0 is the order itself. Throws IndexOutOfRange unless 0 <= i < n.
LinearOrder harmful_distortion(const LinearOrder& order, int index);

/// All n harmful distortions of a base order; members()[i] is the i-th.
class DistortionFamily {
 public:
  explicit DistortionFamily(const LinearOrder& base);

  const LinearOrder& base() const noexcept { return members_.front(); }
  const LinearOrder& operator[](std::size_t i) const { return members_.at(i); }
  std::size_t size() const noexcept { return members_.size(); }
  const std::vector<LinearOrder>& members() const noexcept { return members_; }

 private:
  std::vector<LinearOrder> members_;
};

DistortionFamily harm_family(const LinearOrder& order);

}  // namespace harmchoice
