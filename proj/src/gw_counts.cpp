#include "ratcurve/gw_counts.hpp"

#include <string>

namespace ratcurve {

namespace {

ExactInt summand_with_row(int d, int i, const GWTable& table,
                          const std::vector<ExactInt>& row) {
  const int j = d - i;
  const auto pick = [&row](int k) -> ExactInt {
    if (k < 0 || k >= static_cast<int>(row.size())) return 0;
    return row[static_cast<std::size_t>(k)];
  };
  ExactInt ii = i;
  ExactInt jj = j;
  ExactInt weight = ii * ii * jj * jj * pick(3 * i - 2) - ii * ii * ii * jj * pick(3 * i - 1);
  return table.at(i) * table.at(j) * weight;
}

}  // namespace

const ExactInt& GWTable::at(int d) const {
  if (d < 1 || d > max_degree()) {
    throw std::out_of_range("GWTable: degree " + std::to_string(d) +
                            " outside 1.." + std::to_string(max_degree()));
  }
  return values_[static_cast<std::size_t>(d - 1)];
}

void GWTable::extend_to(int d) {
  if (d < 1) {
    throw std::invalid_argument("GWTable: degree must be positive, got " +
                                std::to_string(d));
  }
  values_.reserve(static_cast<std::size_t>(d));
  if (values_.empty()) values_.emplace_back(1);
  for (int e = max_degree() + 1; e <= d; ++e) {
    const auto row = binomial_row(3 * e - 4);
    ExactInt total = 0;
    for (int i = 1; i < e; ++i) total += summand_with_row(e, i, *this, row);
    values_.push_back(std::move(total));
  }
}

const ExactInt& compute_N(int d, GWTable& table) {
  if (d < 1) {
    throw std::invalid_argument("compute_N: degree must be positive, got " +
                                std::to_string(d));
  }
  table.extend_to(d);
  return table.at(d);
}

GWTable n_table(int dmax) {
  GWTable table;
  table.extend_to(dmax);
  return table;
}

ExactInt recursion_summand(int d, int i, const GWTable& table) {
  if (d < 2 || i < 1 || i >= d) {
    throw std::invalid_argument("recursion_summand: need 1 <= i < d");
  }
  return summand_with_row(d, i, table, binomial_row(3 * d - 4));
}

}  // namespace ratcurve
