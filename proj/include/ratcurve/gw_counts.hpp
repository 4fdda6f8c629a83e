#ifndef RATCURVE_GW_COUNTS_HPP
#define RATCURVE_GW_COUNTS_HPP

#include "ratcurve/exact_arith.hpp"

#include <span>
#include <vector>

namespace ratcurve {

// Memo table of N_1..N_max, the number of rational plane curves of degree d
// through 3d-1 general points. Entries are filled bottom-up; a table never
// shrinks, and an entry never changes once written.
//
// Growing a table is single-writer. A table that is no longer being grown may
// be read from any number of threads.
class GWTable {
 public:
  GWTable() = default;

  int max_degree() const { return static_cast<int>(values_.size()); }

  // N_d for 1 <= d <= max_degree(). Throws std::out_of_range otherwise.
  const ExactInt& at(int d) const;

  // Values indexed from degree 1.
  std::span<const ExactInt> values() const { return values_; }

  // Fills every degree up to and including d.
  void extend_to(int d);

 private:
  std::vector<ExactInt> values_;
};

// N_d, extending `table` as needed. Throws std::invalid_argument for d < 1.
const ExactInt& compute_N(int d, GWTable& table);

// A fresh table holding N_1..N_dmax. Throws std::invalid_argument for dmax < 1.
GWTable n_table(int dmax);

// The (i, d-i) term of the recursion for N_d, for 1 <= i <= d-1:
//   N_i N_j (i^2 j^2 C(3d-4, 3i-2) - i^3 j C(3d-4, 3i-1)),  j = d - i.
// Requires table.max_degree() >= d - 1.
ExactInt recursion_summand(int d, int i, const GWTable& table);

}  // namespace ratcurve

#endif  // RATCURVE_GW_COUNTS_HPP
