#pragma once

#include "nomaps/arith.hpp"
#include "nomaps/genus.hpp"
#include "nomaps/table.hpp"

namespace nomaps {

/// t_n^g: rooted triangulations with 2n faces (3n edges) of genus g.
/// Nonzero only for 2g <= n + 1.
using TriTable = GenusTable<Integer>;

/// Raised when the genus-dependent divisor of the recurrence vanishes.
class DegenerateStepError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

TriTable tri_initial_table();
/// The divisor 2n^2 + (3 - 2g)n + (1 - g)(1 - 2g), doubled to stay integral.
Integer tri_divisor_doubled(int n, Genus2 g);
/// One step for n > 2; needs all smaller n and the same n at lower genus.
Integer tri_rec(int n, Genus2 g, const TriTable& table);
TriTable build_tri_table(int n_max, int g2_max);

}  // namespace nomaps
