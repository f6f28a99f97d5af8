#pragma once

#include "nomaps/arith.hpp"
#include "nomaps/exec.hpp"
#include "nomaps/genus.hpp"
#include "nomaps/mpoly.hpp"
#include "nomaps/table.hpp"

namespace nomaps {

/// H_n^g(u, z): rooted maps with n edges and genus g, u per vertex, z per face.
using MapsTable = GenusTable<MPoly>;
/// Integer tables (univariate counts, one-face counts).
using CountGrid = GenusTable<Integer>;

/// The two bivariate recurrences. They differ in their value of H_0^0
/// (0 for kz, uz for cc), which each table carries as its boundary.
enum class MapsEngine { kz, cc };

const char* engine_name(MapsEngine e);

/// A table holding only the initial conditions (n <= 2) of the engine.
MapsTable maps_initial_table(MapsEngine e);

/// One step of each recurrence for n > 2. The table must hold every entry
/// with fewer edges; kz also needs the same-n entries of lower genus.
MPoly maps_rec_kz(int n, Genus2 g, const MapsTable& table);
MPoly maps_rec_cc(int n, Genus2 g, const MapsTable& table);

/// Fills H_n^g for 1 <= n <= n_max and 2g <= g2_max.
MapsTable build_maps_table(MapsEngine e, int n_max, int g2_max, Exec exec = Exec::parallel);

/// Integer-only recurrence for h_n^g = H_n^g(1, 1).
CountGrid build_maps_univariate(int n_max, int g2_max);
Integer maps_count_univariate(int n, Genus2 g, const CountGrid& table);

/// One-face maps u_n^g = [u^(n+1-2g) z] H_n^g.
using OneFaceTable = CountGrid;
OneFaceTable ledoux_initial_table();
Integer ledoux(int n, Genus2 g, const OneFaceTable& table);
OneFaceTable build_ledoux(int n_max);

/// Rejects any non-integral coefficient.
void require_integral(const MPoly& p, const char* what);

}  // namespace nomaps
