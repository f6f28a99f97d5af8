#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace nomaps {

/// Values indexed by (size n, doubled genus g2).
///
/// Reads outside the support (negative indices, or g2 > n + g2_slack) yield
/// zero; the (0, 0) slot holds the boundary constant of the recurrence that
/// owns the table. Any other unset in-support entry is a missing dependency.
template <class V>
class GenusTable {
 public:
  explicit GenusTable(int g2_slack = 0, V boundary = V{})
      : g2_slack_(g2_slack), boundary_(std::move(boundary)) {}

  bool in_support(int n, int g2) const { return n >= 0 && g2 >= 0 && g2 <= n + g2_slack_; }

  const V& at(int n, int g2) const {
    if (!in_support(n, g2)) return zero_;
    if (n == 0) return g2 == 0 ? boundary_ : zero_;
    auto it = entries_.find({n, g2});
    if (it == entries_.end()) {
      throw std::out_of_range("missing table entry n=" + std::to_string(n) + " 2g=" + std::to_string(g2));
    }
    return it->second;
  }

  bool contains(int n, int g2) const { return entries_.count({n, g2}) != 0; }
  void set(int n, int g2, V value) { entries_[{n, g2}] = std::move(value); }
  V& mutable_at(int n, int g2) { return entries_.at({n, g2}); }

  const V& boundary() const { return boundary_; }
  int g2_slack() const { return g2_slack_; }
  const std::map<std::pair<int, int>, V>& entries() const { return entries_; }

 private:
  int g2_slack_;
  V boundary_;
  V zero_{};
  std::map<std::pair<int, int>, V> entries_;
};

}  // namespace nomaps
