#pragma once

#include <map>
#include <tuple>

#include "nomaps/arith.hpp"
#include "nomaps/exec.hpp"
#include "nomaps/genus.hpp"
#include "nomaps/mpoly.hpp"
#include "nomaps/table.hpp"

namespace nomaps {

/// K_n^g(u, v, z): rooted bipartite maps, u per black vertex (the root is
/// black), v per white vertex, z per face.
using BipTable = GenusTable<MPoly>;

BipTable bip_initial_table();
/// One recurrence step for n > 2; needs every entry with fewer edges.
MPoly bip_rec(int n, Genus2 g, const BipTable& table);
BipTable build_bip_table(int n_max, int g2_max, Exec exec = Exec::parallel);

/// b_n^{i,j}: one-face bipartite maps with n edges, i black and j white vertices.
class BipOneFaceTable {
 public:
  /// Zero outside 1 <= i, 1 <= j, i + j <= n + 1; throws on a missing entry.
  const Integer& at(int n, int i, int j) const;
  bool in_support(int n, int i, int j) const { return n >= 1 && i >= 1 && j >= 1 && i + j <= n + 1; }
  void set(int n, int i, int j, Integer value) { entries_[{n, i, j}] = std::move(value); }
  Integer& mutable_at(int n, int i, int j) { return entries_.at({n, i, j}); }
  const std::map<std::tuple<int, int, int>, Integer>& entries() const { return entries_; }

 private:
  std::map<std::tuple<int, int, int>, Integer> entries_;
};

BipOneFaceTable bip_oneface_initial_table();
/// One step for n > 3; needs rows n-1 .. n-4.
Integer bip_oneface(int n, int i, int j, const BipOneFaceTable& table);
BipOneFaceTable build_bip_oneface(int n_max);

}  // namespace nomaps
