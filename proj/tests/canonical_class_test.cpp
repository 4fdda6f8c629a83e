#include "ratcurve/canonical_class.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>
#include <utility>

namespace ratcurve {
namespace {

using Key = BoundaryClassKey;
using Boundary = std::map<Key, Rational>;

Rational Q(std::int64_t p, std::int64_t q = 1) { return Rational(ExactInt(p), ExactInt(q)); }

TEST(BoundaryClassTest, Enumerate) {
  EXPECT_EQ(enumerate_boundary_classes(4, 0), (std::vector<Key>{{0, 2}}));
  EXPECT_EQ(enumerate_boundary_classes(0, 2), (std::vector<Key>{{1, 0}}));
  EXPECT_TRUE(enumerate_boundary_classes(1, 1).empty());
  EXPECT_EQ(enumerate_boundary_classes(3, 2), (std::vector<Key>{{0, 2}, {0, 3}, {1, 0}, {1, 1}}));
  EXPECT_THROW(enumerate_boundary_classes(2, 0), std::invalid_argument);
}

TEST(BoundaryClassTest, StabilityZeroClasses) {
  for (int n = 0; n <= 6; ++n) {
    for (int d = 1; d <= 5; ++d) {
      EXPECT_FALSE(is_stable_split(n, d, 0, 0));
      EXPECT_FALSE(is_stable_split(n, d, 0, 1));
      if (n >= 1) EXPECT_FALSE(is_stable_split(n, d, d, n - 1));
      EXPECT_FALSE(is_stable_split(n, d, d, n));
    }
  }
  EXPECT_THROW(canonical_key(3, 2, 0, 1), std::invalid_argument);
}

// Brute force over unordered weighted partitions {(A, d_A), (B, d_B)} of
// {1..n} with the stability condition, grouped by the (d_A, |A|) label.
std::map<Key, int> brute_force_components(int n, int d) {
  std::set<std::pair<std::pair<unsigned, int>, std::pair<unsigned, int>>> splits;
  const unsigned all = (1u << n) - 1;
  for (unsigned a = 0; a <= all; ++a) {
    for (int da = 0; da <= d; ++da) {
      const unsigned b = all & ~a;
      const int db = d - da;
      if (da == 0 && __builtin_popcount(a) < 2) continue;
      if (db == 0 && __builtin_popcount(b) < 2) continue;
      auto p = std::make_pair(a, da);
      auto q = std::make_pair(b, db);
      splits.insert(std::min(p, q) == p ? std::make_pair(p, q) : std::make_pair(q, p));
    }
  }
  std::map<Key, int> counts;
  for (const auto& [p, q] : splits) {
    ++counts[canonical_key(n, d, p.second, __builtin_popcount(p.first))];
  }
  return counts;
}

TEST(BoundaryClassTest, MatchesBruteForcePartitions) {
  for (int n = 0; n <= 6; ++n) {
    for (int d = 0; d <= 4; ++d) {
      if (d == 0 && n < 3) continue;
      SCOPED_TRACE(testing::Message() << "n=" << n << " d=" << d);
      const auto brute = brute_force_components(n, d);
      const auto keys = enumerate_boundary_classes(n, d);
      ASSERT_EQ(keys.size(), brute.size());
      for (const auto& key : keys) {
        ASSERT_TRUE(brute.count(key));
        EXPECT_EQ(component_count(n, d, key), brute.at(key));
      }
    }
  }
}

TEST(CanonicalClassTest, ModuliOfPointedCurves) {
  EXPECT_TRUE(canonical_class_m0n(3).boundary.empty());
  EXPECT_EQ(canonical_class_m0n(4).boundary, (Boundary{{{0, 2}, Q(-2, 3)}}));
  EXPECT_EQ(canonical_class_m0n(5).boundary, (Boundary{{{0, 2}, Q(-1, 2)}}));
  EXPECT_EQ(canonical_class_m0n(6).boundary, (Boundary{{{0, 2}, Q(-2, 5)}, {{0, 3}, Q(-1, 5)}}));
  // j(n-j)/(n-1) - 2 vanishes at n=7, j=3.
  EXPECT_EQ(canonical_class_m0n(7).boundary, (Boundary{{{0, 2}, Q(-1, 3)}}));
  EXPECT_THROW(canonical_class_m0n(2), std::invalid_argument);
  const auto k = canonical_class_m0n(6);
  EXPECT_TRUE(k.h_coeff.is_zero());
  EXPECT_TRUE(k.l_coeff.is_zero());
}

TEST(CanonicalClassTest, M04IsTheProjectiveLine) {
  const auto k = canonical_class_m0n(4);
  Rational degree = 0;
  for (const auto& [key, c] : k.boundary) degree += c * Rational(component_count(4, 0, key));
  EXPECT_EQ(component_count(4, 0, {0, 2}), 3);
  EXPECT_EQ(degree, Q(-2));
}

TEST(CanonicalClassTest, Unmarked) {
  const auto dual_plane = canonical_class_unmarked(2, 1);
  EXPECT_EQ(dual_plane.h_coeff, Q(-3));
  EXPECT_TRUE(dual_plane.boundary.empty());
  EXPECT_TRUE(dual_plane.notes.empty());

  const auto conics = canonical_class_unmarked(2, 2);
  EXPECT_EQ(conics.h_coeff, Q(-9, 4));
  EXPECT_EQ(conics.boundary, (Boundary{{{1, 0}, Q(-5, 4)}}));
  EXPECT_TRUE(conics.has_note(ExpansionNote::kExcludedCoarseCase));

  const auto space_conics = canonical_class_unmarked(3, 2);
  EXPECT_EQ(space_conics.h_coeff, Q(-3));
  EXPECT_EQ(space_conics.boundary, (Boundary{{{1, 0}, Q(-1)}}));
  EXPECT_FALSE(space_conics.has_note(ExpansionNote::kExcludedCoarseCase));

  EXPECT_THROW(canonical_class_unmarked(2, 0), std::invalid_argument);
  EXPECT_THROW(canonical_class_unmarked(1, 3), std::invalid_argument);
}

TEST(CanonicalClassTest, MarkedUniversalLine) {
  const auto k = canonical_class_marked(1, 2, 1);
  EXPECT_EQ(k.h_coeff, Q(-2));
  EXPECT_EQ(k.l_coeff, Q(-2));
  EXPECT_TRUE(k.boundary.empty());
}

// Expected expansions evaluated independently with fractions.Fraction.
TEST(CanonicalClassTest, MarkedExpansions) {
  const auto a = canonical_class_marked(2, 2, 2);
  EXPECT_EQ(a.h_coeff, Q(-7, 4));
  EXPECT_EQ(a.l_coeff, Q(-1));
  // (0,2) has coefficient 0 and is dropped; (1,2) is the same class as (1,0).
  EXPECT_EQ(a.boundary, (Boundary{{{1, 0}, Q(-3, 4)}, {{1, 1}, Q(-3, 4)}}));
  EXPECT_EQ(a.coefficient({0, 2}), Q(0));

  const auto b = canonical_class_marked(3, 2, 2);
  EXPECT_EQ(b.h_coeff, Q(-3, 2));
  EXPECT_EQ(b.boundary, (Boundary{{{0, 3}, Q(1)}, {{1, 0}, Q(-1, 2)}, {{1, 1}, Q(-1, 2)}}));

  const auto c = canonical_class_marked(5, 4, 3);
  EXPECT_EQ(c.h_coeff, Q(-25, 9));
  EXPECT_EQ(c.l_coeff, Q(-2, 3));
  EXPECT_EQ(c.boundary, (Boundary{{{0, 3}, Q(1)},
                                  {{0, 4}, Q(2)},
                                  {{0, 5}, Q(3)},
                                  {{1, 0}, Q(2, 9)},
                                  {{1, 1}, Q(5, 9)},
                                  {{1, 2}, Q(8, 9)},
                                  {{1, 3}, Q(11, 9)},
                                  {{1, 4}, Q(14, 9)},
                                  {{1, 5}, Q(17, 9)}}));

  EXPECT_THROW(canonical_class_marked(0, 2, 2), std::invalid_argument);
  EXPECT_THROW(canonical_class_marked(2, 2, 0), std::invalid_argument);
}

TEST(CanonicalClassTest, Dispatch) {
  const auto product = canonical_class({4, 2, 0});
  EXPECT_EQ(product.boundary, (Boundary{{{0, 2}, Q(-2, 3)}}));
  EXPECT_TRUE(product.has_note(ExpansionNote::kTargetFactorOmitted));
  EXPECT_TRUE(canonical_class({0, 2, 2}).has_note(ExpansionNote::kExcludedCoarseCase));
  EXPECT_EQ(canonical_class({1, 2, 1}).h_coeff, Q(-2));
  EXPECT_THROW(canonical_class({2, 2, 0}), std::invalid_argument);
  EXPECT_THROW(canonical_class({1, 1, 1}), std::invalid_argument);
  EXPECT_THROW(canonical_class({-1, 2, 1}), std::invalid_argument);
}

TEST(CanonicalClassTest, MarkedReducesToUnmarkedAtNZero) {
  for (int r = 2; r <= 5; ++r) {
    for (int d = 1; d <= 6; ++d) {
      const auto k = canonical_class_unmarked(r, d);
      EXPECT_EQ(marked_h_coefficient(0, r, d), k.h_coeff);
      for (int i = 0; i <= d; ++i) {
        EXPECT_EQ(marked_boundary_coefficient(0, r, d, i, 0), unmarked_boundary_coefficient(r, d, i));
      }
    }
  }
  // (n=0, r=3, d=2) through the marked expression
  EXPECT_EQ(marked_boundary_coefficient(0, 3, 2, 1, 0), Q(-1));
}

TEST(CanonicalClassTest, SymmetryCheck) {
  EXPECT_TRUE(coefficient_symmetry_check(3, 2, 2));
  EXPECT_TRUE(coefficient_symmetry_check(0, 2, 4));
  EXPECT_TRUE(coefficient_symmetry_check(5, 4, 3));
  for (int n = 0; n <= 8; ++n) {
    for (int r = 2; r <= 5; ++r) {
      for (int d = (n >= 3 ? 0 : 1); d <= 6; ++d) EXPECT_TRUE(coefficient_symmetry_check(n, r, d));
    }
  }
  // Any class can be looked up through either label.
  const auto k = canonical_class_marked(4, 3, 3);
  for (const auto& [key, c] : k.boundary) {
    EXPECT_EQ(canonical_key(4, 3, 3 - key.i, 4 - key.j), key);
    EXPECT_EQ(marked_boundary_coefficient(4, 3, 3, 3 - key.i, 4 - key.j), c);
  }
}

TEST(CanonicalClassTest, ExpansionShapeOnGrid) {
  for (int n = 0; n <= 8; ++n) {
    for (int r = 2; r <= 5; ++r) {
      for (int d = (n >= 3 ? 0 : 1); d <= 6; ++d) {
        SCOPED_TRACE(testing::Message() << n << "," << r << "," << d);
        const auto k = canonical_class({n, r, d});
        const ExactInt bound = d >= 1 ? ExactInt(2 * d * d) : ExactInt(n - 1);
        if (d == 0) EXPECT_TRUE(k.h_coeff.is_zero());
        EXPECT_EQ(bound % k.h_coeff.denominator(), 0);
        for (const auto& [key, c] : k.boundary) {
          EXPECT_TRUE(is_stable_split(n, d, key.i, key.j));
          EXPECT_EQ(canonical_key(n, d, key.i, key.j), key);
          EXPECT_FALSE(c.is_zero());
          EXPECT_EQ(bound % c.denominator(), 0);
        }
      }
    }
  }
}

}  // namespace
}  // namespace ratcurve
