#include "ratcurve/genus_invariants.hpp"

#include <string>

namespace ratcurve {

namespace {

void require_degree(int d, int min_degree, const char* what) {
  if (d < min_degree) {
    throw std::invalid_argument(std::string(what) + ": degree must be >= " +
                                std::to_string(min_degree) + ", got " +
                                std::to_string(d));
  }
}

// sum_{i=1}^{d-1} N_i N_{d-i} w(i) C(3d-2, 3i-1)
template <typename Value, typename Weight>
Value convolution(int d, const GWTable& table, Weight weight) {
  Value total = 0;
  if (d < 2) return total;
  (void)table.at(d - 1);
  const auto row = binomial_row(3 * d - 2);
  for (int i = 1; i < d; ++i) {
    ExactInt outer = table.at(i) * table.at(d - i) * row[static_cast<std::size_t>(3 * i - 1)];
    total += Value(outer) * weight(ExactInt(i));
  }
  return total;
}

ExactInt genus_from_expr(const Rational& twice_minus_two, const char* what) {
  ExactInt value = to_integer(twice_minus_two, std::string("2*") + what + "-2");
  return to_integer(Rational(value + 2, 2), what);
}

}  // namespace

Rational arithmetic_genus_g_expr(int d, const GWTable& table) {
  require_degree(d, 3, "arithmetic_genus_g_expr");
  const ExactInt dd = d;
  auto sum = convolution<ExactInt>(d, table, [&](const ExactInt& i) -> ExactInt {
    ExactInt j = dd - i;
    return 15 * i * i * j * j - 8 * dd * i * j - 4 * dd;
  });
  return Rational(6 * dd * dd + 5 * dd - 15, 2 * dd) * table.at(d) +
         Rational(sum, 4 * dd);
}

ExactInt arithmetic_genus_g(int d, const GWTable& table) {
  require_degree(d, 1, "arithmetic_genus_g");
  if (d <= 2) return 0;
  return genus_from_expr(arithmetic_genus_g_expr(d, table), "g");
}

Rational arithmetic_genus_g_hat_expr(int d, const GWTable& table) {
  require_degree(d, 3, "arithmetic_genus_g_hat");
  const ExactInt dd = d;
  auto sum = convolution<ExactInt>(d, table, [&](const ExactInt& i) -> ExactInt {
    ExactInt j = dd - i;
    return 3 * i * i * j * j - 4 * dd * i * j;
  });
  return Rational((2 * dd - 3) * (3 * dd + 1), 2 * dd) * table.at(d) +
         Rational(sum, 4 * dd);
}

ExactInt arithmetic_genus_g_hat(int d, const GWTable& table) {
  return genus_from_expr(arithmetic_genus_g_hat_expr(d, table), "g_hat");
}

Rational geometric_genus_expr(int d, const GWTable& table) {
  require_degree(d, 1, "geometric_genus");
  const ExactInt dd = d;
  auto sum = convolution<ExactInt>(d, table, [&](const ExactInt& i) -> ExactInt {
    ExactInt j = dd - i;
    return (i * dd - i * i) * ((9 * dd + 4) * i * j - 6 * dd * dd);
  });
  return -Rational(3 * dd * dd - 3 * dd + 4, 2 * dd * dd) * table.at(d) +
         Rational(sum, 4 * dd * dd);
}

ExactInt geometric_genus(int d, const GWTable& table) {
  return genus_from_expr(geometric_genus_expr(d, table), "g_tilde");
}

Rational cusp_count_expr(int d, const GWTable& table) {
  require_degree(d, 1, "cusp_count");
  const ExactInt dd = d;
  auto sum = convolution<ExactInt>(d, table, [&](const ExactInt& i) -> ExactInt {
    ExactInt j = dd - i;
    return 3 * i * i * j * j - 2 * dd * i * j;
  });
  return Rational(3 * dd - 3, dd) * table.at(d) + Rational(sum, 2 * dd);
}

ExactInt cusp_count(int d, const GWTable& table) {
  return to_integer(cusp_count_expr(d, table), "cusp count");
}

Rational lemma5_node_contribution_expr(int d, const GWTable& table) {
  require_degree(d, 1, "lemma5_node_contribution");
  (void)table.at(d);
  const ExactInt dd = d;
  auto sum = convolution<ExactInt>(d, table, [&](const ExactInt& i) -> ExactInt {
    return i * (dd - i) - 1;
  });
  return Rational(sum, 2);
}

ExactInt lemma5_node_contribution(int d, const GWTable& table) {
  return to_integer(lemma5_node_contribution_expr(d, table),
                    "reducible-locus contribution");
}

ExactInt m_via_relation(int d, const GWTable& table) {
  require_degree(d, 3, "m_via_relation");
  ExactInt diff = arithmetic_genus_g_hat(d, table) - geometric_genus(d, table);
  return to_integer(Rational(diff, ExactInt(3 * d - 2)), "(g_hat - g_tilde)/(3d-2)");
}

Rational m_closed_form(int d, const GWTable& table) {
  require_degree(d, 3, "m_closed_form");
  const ExactInt dd = d;
  const Rational inv_3d_minus_2(1, 3 * dd - 2);
  auto sum = convolution<Rational>(d, table, [&](const ExactInt& i) -> Rational {
    ExactInt j = dd - i;
    return Rational((i * dd - i * i) * ((6 * dd + 4) * i * j - 2 * dd * dd)) *
           inv_3d_minus_2;
  });
  return Rational(dd * dd - 1, dd * dd) * table.at(d) -
         Rational(1, 4 * dd * dd) * sum;
}

GenusReport genus_report(int d, const GWTable& table) {
  require_degree(d, 1, "genus_report");
  GenusReport report;
  report.d = d;
  report.N = table.at(d);
  report.g = arithmetic_genus_g(d, table);
  report.g_tilde = geometric_genus(d, table);
  report.cusps = cusp_count(d, table);
  report.lemma5_nodes = lemma5_node_contribution(d, table);
  report.g_hat = d >= 3 ? arithmetic_genus_g_hat(d, table) : ExactInt(0);

  if (d >= 3) {
    report.flags.decomposition =
        report.g == report.g_hat + report.cusps + report.lemma5_nodes;
    Rational quotient(report.g_hat - report.g_tilde, ExactInt(3 * d - 2));
    report.flags.node_relation = quotient.is_integer();
    if (quotient.is_integer()) report.m_relation = quotient.numerator();
    report.m_closed_form = m_closed_form(d, table);
    if (report.m_relation && *report.m_relation != 0) {
      report.m_ratio = *report.m_closed_form / Rational(*report.m_relation);
    }
  }

  bool nonnegative = report.g >= 0 && report.g_hat >= 0 &&
                     report.g_tilde >= 0 && report.cusps >= 0 &&
                     report.lemma5_nodes >= 0;
  if (report.m_relation) nonnegative = nonnegative && *report.m_relation >= 0;
  report.flags.nonnegative = nonnegative;
  return report;
}

}  // namespace ratcurve
