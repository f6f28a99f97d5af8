#pragma once

#include <array>
#include <map>

#include "nomaps/arith.hpp"
#include "nomaps/exec.hpp"
#include "nomaps/genus.hpp"
#include "nomaps/mpoly.hpp"

namespace nomaps {

/// Brute-force count of rooted maps on all surfaces in the flag model: three
/// fixed-point-free involutions on 4n flags, tau0 and tau2 commuting with
/// tau0 tau2 fixed-point-free, acting transitively. Vertices are orbits of
/// <tau1, tau2>, faces orbits of <tau0, tau1>.
enum class OracleFilter { none, bipartite, triangulation };

const char* filter_name(OracleFilter f);

struct OracleCounts {
  int n = 0;
  OracleFilter filter = OracleFilter::none;
  /// (vertices, faces, black vertices) -> rooted count. Black is only
  /// tracked under the bipartite filter (the root vertex is black) and is 0
  /// otherwise.
  std::map<std::array<int, 3>, Integer> cells;

  static int g2_of(int n, int vertices, int faces) { return 2 - vertices + n - faces; }
  /// Totals per doubled genus.
  std::map<int, Integer> by_genus() const;
  /// Generating polynomial of one genus: u^v z^f, or u^black v^white z^f
  /// under the bipartite filter.
  MPoly polynomial(int g2) const;
};

/// Largest n accepted; the cost grows super-exponentially.
inline constexpr int kOracleMaxEdges = 3;

OracleCounts oracle_count(int n, OracleFilter filter = OracleFilter::none, Exec exec = Exec::parallel);

namespace detail {
/// Same enumeration without the size guard (n <= 4 fits the flag encoding).
OracleCounts oracle_count_unguarded(int n, OracleFilter filter, Exec exec);
}  // namespace detail

}  // namespace nomaps
