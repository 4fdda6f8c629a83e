#ifndef RATCURVE_GENUS_INVARIANTS_HPP
#define RATCURVE_GENUS_INVARIANTS_HPP

// Closed-form genus and count formulas for the one-parameter family C_d of
// degree-d rational plane curves through 3d-2 general points, its model
// C^_d in the space of stable maps, and their common normalization C~_d.
//
// Every formula is a rational combination of N_d and the convolution
//   sum_{i=1}^{d-1} N_i N_{d-i} w(i) C(3d-2, 3i-1)
// for a degree-specific weight w. Evaluation is exact; integrality is checked
// at the end and a failure raises NonIntegralError.
//
// All functions read from a const GWTable and throw std::out_of_range if it
// does not reach degree d. They are safe to call concurrently on a shared
// table.

#include "ratcurve/exact_arith.hpp"
#include "ratcurve/gw_counts.hpp"

#include <optional>

namespace ratcurve {

// 2g_d - 2 from the closed form; d >= 3.
Rational arithmetic_genus_g_expr(int d, const GWTable& table);
// g_d. Degrees 1 and 2 return the base value 0.
ExactInt arithmetic_genus_g(int d, const GWTable& table);

// 2g^_d - 2; d >= 3.
Rational arithmetic_genus_g_hat_expr(int d, const GWTable& table);
// g^_d, the arithmetic genus of C^_d; d >= 3.
ExactInt arithmetic_genus_g_hat(int d, const GWTable& table);

// 2g~_d - 2; valid for every d >= 1 with no special cases.
Rational geometric_genus_expr(int d, const GWTable& table);
ExactInt geometric_genus(int d, const GWTable& table);

// Number of 1-cuspidal rational curves of degree d through 3d-2 points.
Rational cusp_count_expr(int d, const GWTable& table);
ExactInt cusp_count(int d, const GWTable& table);

// Genus contribution of the reducible-curve singularities of C_d.
Rational lemma5_node_contribution_expr(int d, const GWTable& table);
ExactInt lemma5_node_contribution(int d, const GWTable& table);

// M_d = (g^_d - g~_d) / (3d - 2); d >= 3. Throws NonIntegralError if the
// division is inexact.
ExactInt m_via_relation(int d, const GWTable& table);

// The alternative printed closed form for M_d, evaluated verbatim. It is not
// required to agree with m_via_relation; callers compare the two.
Rational m_closed_form(int d, const GWTable& table);

struct IdentityFlags {
  // g = g^ + cusps + lemma5 nodes; absent for d < 3.
  std::optional<bool> decomposition;
  // (g^ - g~) divisible by 3d - 2; absent for d < 3.
  std::optional<bool> node_relation;
  // Every reported genus and count is >= 0.
  bool nonnegative = false;

  bool all_hold() const {
    return decomposition.value_or(true) && node_relation.value_or(true) &&
           nonnegative;
  }
};

struct GenusReport {
  int d = 0;
  ExactInt N;
  ExactInt g;
  // For d < 3 this is the base value 0.
  ExactInt g_hat;
  ExactInt g_tilde;
  ExactInt cusps;
  ExactInt lemma5_nodes;
  // Absent for d < 3.
  std::optional<ExactInt> m_relation;
  std::optional<Rational> m_closed_form;
  // m_closed_form / m_relation.
  std::optional<Rational> m_ratio;
  IdentityFlags flags;
};

GenusReport genus_report(int d, const GWTable& table);

}  // namespace ratcurve

#endif  // RATCURVE_GENUS_INVARIANTS_HPP
