#pragma once

#include <map>

#include "sptq/partitions.hpp"

namespace sptq {

enum class SBFamily { SB, SB1, SB2, S2B };
SBFamily sb_family_from_name(const std::string& name);

// Single-variable spt generating functions (integer ring).
QSeries spt_gf(SptVariant v, int trunc);

// Two-variable generating functions, z kept symbolic.
ZLaurentSeries sbar_series(SBFamily f, int trunc);
ZLaurentSeries stat_series(StatFamily f, int trunc);  // Eulerian sums / crank products
ZLaurentSeries epsilon_series(int trunc);             // doubled extra series 2*E(z,q)

// Canonical tables: the series expansions (crank families) / Eulerian sums
// (rank families). Equality with the enumeration route is a tested invariant.
TwoVarTable stat_table(StatFamily f, int max_n);
TwoVarTable nsb_table_series(SBFamily f, int max_n);

// Specializations z = zeta_t, built directly over Z[zeta_t].
QSeries nbar_lambert_at_root(int t, int trunc);
QSeries nbar_eulerian_at_root(int t, int trunc);
QSeries n2_lambert_at_root(int t, int trunc);
QSeries n2_eulerian_at_root(int t, int trunc);
QSeries mbar_at_root(int t, int trunc);
QSeries m2crank_at_root(int t, int trunc);
QSeries epsilon_at_root(int t, int trunc);  // doubled
QSeries sbar_at_root(SBFamily f, int t, int trunc);

// Dissection theorems 2.5..2.14: modulus, left side at zeta_t, and the printed
// component products (in the component variable, coefficients in Z[zeta_t]).
int dissection_modulus(int theorem);
QSeries dissection_left_side(int theorem, int overall_trunc);
std::map<int, QSeries> dissection_components(int theorem, int trunc);

// Section 6 generating function for N_SB(0,n).
QSeries nsb_zero_gf(int trunc);

}  // namespace sptq
