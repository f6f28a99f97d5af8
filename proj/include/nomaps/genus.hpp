#pragma once

#include <compare>
#include <stdexcept>
#include <string>

namespace nomaps {

/// Genus of a (possibly non-orientable) surface, stored doubled so that
/// half-integer genera stay integral. Euler characteristic is 2 - twice().
class Genus2 {
 public:
  constexpr Genus2() = default;
  constexpr explicit Genus2(int twice_genus) : twice_(twice_genus) {
    if (twice_genus < 0) throw std::invalid_argument("Genus2: negative genus");
  }

  constexpr int twice() const { return twice_; }
  constexpr int euler_characteristic() const { return 2 - twice_; }
  constexpr bool orientable_class() const { return twice_ % 2 == 0; }

  /// "2", "3/2", "0".
  std::string str() const {
    if (twice_ % 2 == 0) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
  }

  constexpr auto operator<=>(const Genus2&) const = default;

 private:
  int twice_ = 0;
};

}  // namespace nomaps
