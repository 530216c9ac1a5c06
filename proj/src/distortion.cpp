#include "harmchoice/distortion.hpp"

#include <string>

namespace harmchoice {

LinearOrder harmful_distortion(const LinearOrder& order, int index) {
  const std::size_t n = order.size();
  if (index < 0 || static_cast<std::size_t>(index) >= n)
    throw Error(ErrorCode::IndexOutOfRange,
                "distortion index " + std::to_string(index) + " outside 0.." +
                    std::to_string(n - 1));
  const auto i = static_cast<std::size_t>(index);
  const auto& r = order.ranking();
  std::vector<Alternative> out;
  out.reserve(n);
  out.insert(out.end(), r.begin() + static_cast<std::ptrdiff_t>(i), r.end());
  out.insert(out.end(), std::make_reverse_iterator(r.begin() + static_cast<std::ptrdiff_t>(i)),
             r.rend());
  return LinearOrder(std::move(out));
}

DistortionFamily::DistortionFamily(const LinearOrder& base) {
  members_.reserve(base.size());
  for (std::size_t i = 0; i < base.size(); ++i)
    members_.push_back(harmful_distortion(base, static_cast<int>(i)));
}

DistortionFamily harm_family(const LinearOrder& order) { return DistortionFamily(order); }

}  // namespace harmchoice
