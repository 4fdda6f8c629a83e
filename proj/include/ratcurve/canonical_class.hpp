#ifndef RATCURVE_CANONICAL_CLASS_HPP
#define RATCURVE_CANONICAL_CLASS_HPP

// Canonical class of the space of genus-0 stable maps M_{0,n}(P^r, d),
// expanded in the spanning set {L_p} u {boundary D_{i,j}} u {H} of
// Pic (x) Q.
//
// D_{i,j} is the reduced sum of boundary components whose domain splits into
// a piece of degree i carrying j markings and a piece of degree d-i carrying
// the other n-j. D_{i,j} = D_{d-i,n-j}, and the splittings with a degree-0
// piece carrying fewer than two markings do not exist.

#include "ratcurve/exact_arith.hpp"

#include <compare>
#include <map>
#include <vector>

namespace ratcurve {

struct ModuliSignature {
  int n = 0;  // marked points
  int r = 2;  // target dimension
  int d = 0;  // map degree

  // Throws std::invalid_argument unless r >= 2, n >= 0, d >= 0 and
  // (d > 0 or n >= 3).
  void validate() const;

  friend bool operator==(const ModuliSignature&, const ModuliSignature&) = default;
};

// Canonical representative (i, j) of a boundary class: (i, j) <= (d-i, n-j).
struct BoundaryClassKey {
  int i = 0;  // degree on the A side
  int j = 0;  // markings on the A side

  friend auto operator<=>(const BoundaryClassKey&, const BoundaryClassKey&) = default;
};

// True when the splitting (i, j) of (n, d) is stable, i.e. the class is not
// identically zero. Does not require (i, j) to be canonical.
bool is_stable_split(int n, int d, int i, int j);

// Maps any valid (i, j) to its canonical key.
BoundaryClassKey canonical_key(int n, int d, int i, int j);

// Number of boundary components in the class D_{i,j}.
ExactInt component_count(int n, int d, BoundaryClassKey key);

// Every nonzero boundary class exactly once, in increasing key order.
// Throws std::invalid_argument if d == 0 and n < 3.
std::vector<BoundaryClassKey> enumerate_boundary_classes(int n, int d);

enum class ExpansionNote {
  // (n, r, d) = (0, 2, 2): the automorphism-free locus has a divisorial
  // complement, so the formula has no coarse-moduli interpretation here.
  kExcludedCoarseCase,
  // d = 0: only the M_{0,n} factor of M_{0,n} x P^r is expanded.
  kTargetFactorOmitted,
};

struct CanonicalExpansion {
  ModuliSignature signature;
  Rational h_coeff;
  // Uniform coefficient of every L_p, p = 1..n.
  Rational l_coeff;
  // Sparse: zero coefficients are never stored.
  std::map<BoundaryClassKey, Rational> boundary;
  std::vector<ExpansionNote> notes;

  // 0 for classes not present.
  Rational coefficient(BoundaryClassKey key) const;
  bool has_note(ExpansionNote note) const;
};

// Boundary coefficient of D_{i,j} on M_{0,n}(P^r, d), d >= 1:
//   ((r+1)(d-i)di + 2d^2 j - 4dij + 2ni^2) / (2d^2) - 2
Rational marked_boundary_coefficient(int n, int r, int d, int i, int j);
// H coefficient of K on M_{0,n}(P^r, d), d >= 1: -((d+1)(r+1)d - 2n) / (2d^2)
Rational marked_h_coefficient(int n, int r, int d);
// H coefficient of K on M_{0,0}(P^r, d), d >= 1: -(d+1)(r+1) / (2d)
Rational unmarked_h_coefficient(int r, int d);
// Boundary coefficient of D_{i,0} on M_{0,0}(P^r, d), d >= 1:
//   (r+1)(d-i)i / (2d) - 2
Rational unmarked_boundary_coefficient(int r, int d, int i);
// Boundary coefficient of D_{0,j} on M_{0,n}: j(n-j)/(n-1) - 2, n >= 2.
Rational m0n_boundary_coefficient(int n, int j);

// K of M_{0,n}; n >= 3.
CanonicalExpansion canonical_class_m0n(int n);
// K of M_{0,0}(P^r, d); r >= 2, d >= 1.
CanonicalExpansion canonical_class_unmarked(int r, int d);
// K of M_{0,n}(P^r, d); n >= 1, r >= 2, d >= 1.
CanonicalExpansion canonical_class_marked(int n, int r, int d);

// Dispatches on the signature. For d == 0 the result is the M_{0,n} part,
// tagged kTargetFactorOmitted.
CanonicalExpansion canonical_class(const ModuliSignature& sig);

// True iff the boundary coefficient expression for the signature is
// invariant under (i, j) -> (d-i, n-j) on all of 0..d x 0..n. For d == 0 the
// M_{0,n} expression and j -> n-j are checked.
bool coefficient_symmetry_check(int n, int r, int d);

}  // namespace ratcurve

#endif  // RATCURVE_CANONICAL_CLASS_HPP
