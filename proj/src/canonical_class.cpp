#include "ratcurve/canonical_class.hpp"

#include <algorithm>
#include <string>

namespace ratcurve {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

void insert_nonzero(CanonicalExpansion& k, BoundaryClassKey key, Rational c) {
  if (!c.is_zero()) k.boundary.emplace(key, std::move(c));
}

}  // namespace

void ModuliSignature::validate() const {
  require(r >= 2, "signature: r must be >= 2, got " + std::to_string(r));
  require(n >= 0, "signature: n must be >= 0, got " + std::to_string(n));
  require(d >= 0, "signature: d must be >= 0, got " + std::to_string(d));
  require(d > 0 || n >= 3, "signature: d = 0 requires n >= 3");
}

bool is_stable_split(int n, int d, int i, int j) {
  if (i < 0 || i > d || j < 0 || j > n) return false;
  if (i == 0 && j <= 1) return false;
  if (i == d && j >= n - 1) return false;
  return true;
}

BoundaryClassKey canonical_key(int n, int d, int i, int j) {
  require(is_stable_split(n, d, i, j), "canonical_key: (" + std::to_string(i) +
                                           "," + std::to_string(j) +
                                           ") is not a boundary class");
  BoundaryClassKey a{i, j};
  BoundaryClassKey b{d - i, n - j};
  return std::min(a, b);
}

ExactInt component_count(int n, int d, BoundaryClassKey key) {
  require(is_stable_split(n, d, key.i, key.j), "component_count: not a boundary class");
  ExactInt subsets = binomial(n, key.j);
  // A self-complementary label counts each {A, B} twice, except when
  // A = B = {} (n = 0).
  if (n > 0 && key.i * 2 == d && key.j * 2 == n) return subsets / 2;
  return subsets;
}

std::vector<BoundaryClassKey> enumerate_boundary_classes(int n, int d) {
  require(n >= 0 && d >= 0, "enumerate_boundary_classes: negative argument");
  require(d > 0 || n >= 3, "enumerate_boundary_classes: d = 0 requires n >= 3");
  std::vector<BoundaryClassKey> keys;
  for (int i = 0; i <= d; ++i) {
    for (int j = 0; j <= n; ++j) {
      if (!is_stable_split(n, d, i, j)) continue;
      BoundaryClassKey key{i, j};
      if (key <= BoundaryClassKey{d - i, n - j}) keys.push_back(key);
    }
  }
  return keys;
}

Rational CanonicalExpansion::coefficient(BoundaryClassKey key) const {
  auto it = boundary.find(key);
  return it == boundary.end() ? Rational(0) : it->second;
}

bool CanonicalExpansion::has_note(ExpansionNote note) const {
  return std::find(notes.begin(), notes.end(), note) != notes.end();
}

Rational marked_boundary_coefficient(int n, int r, int d, int i, int j) {
  require(d >= 1, "marked_boundary_coefficient: d must be >= 1");
  const ExactInt N = n, R = r, D = d, I = i, J = j;
  ExactInt numerator = (R + 1) * (D - I) * D * I + 2 * D * D * J - 4 * D * I * J + 2 * N * I * I;
  return Rational(numerator, 2 * D * D) - 2;
}

Rational marked_h_coefficient(int n, int r, int d) {
  require(d >= 1, "marked_h_coefficient: d must be >= 1");
  const ExactInt N = n, R = r, D = d;
  return -Rational((D + 1) * (R + 1) * D - 2 * N, 2 * D * D);
}

Rational unmarked_h_coefficient(int r, int d) {
  require(d >= 1, "unmarked_h_coefficient: d must be >= 1");
  return -Rational(ExactInt(d + 1) * (r + 1), ExactInt(2 * d));
}

Rational unmarked_boundary_coefficient(int r, int d, int i) {
  require(d >= 1, "unmarked_boundary_coefficient: d must be >= 1");
  const ExactInt R = r, D = d, I = i;
  return Rational((R + 1) * (D - I) * I, 2 * D) - 2;
}

Rational m0n_boundary_coefficient(int n, int j) {
  require(n >= 2, "m0n_boundary_coefficient: n must be >= 2");
  const ExactInt N = n, J = j;
  return Rational(J * (N - J), N - 1) - 2;
}

CanonicalExpansion canonical_class_m0n(int n) {
  require(n >= 3, "canonical_class_m0n: n must be >= 3, got " + std::to_string(n));
  CanonicalExpansion k;
  k.signature = ModuliSignature{n, 2, 0};
  for (int j = 2; j <= n / 2; ++j) {
    insert_nonzero(k, BoundaryClassKey{0, j}, m0n_boundary_coefficient(n, j));
  }
  return k;
}

CanonicalExpansion canonical_class_unmarked(int r, int d) {
  require(r >= 2, "canonical_class_unmarked: r must be >= 2");
  require(d >= 1, "canonical_class_unmarked: d must be >= 1 (use canonical_class_m0n)");
  CanonicalExpansion k;
  k.signature = ModuliSignature{0, r, d};
  k.h_coeff = unmarked_h_coefficient(r, d);
  for (const auto& key : enumerate_boundary_classes(0, d)) {
    insert_nonzero(k, key, unmarked_boundary_coefficient(r, d, key.i));
  }
  if (r == 2 && d == 2) k.notes.push_back(ExpansionNote::kExcludedCoarseCase);
  return k;
}

CanonicalExpansion canonical_class_marked(int n, int r, int d) {
  require(n >= 1, "canonical_class_marked: n must be >= 1");
  ModuliSignature sig{n, r, d};
  sig.validate();
  require(d >= 1, "canonical_class_marked: d must be >= 1");
  CanonicalExpansion k;
  k.signature = sig;
  k.h_coeff = marked_h_coefficient(n, r, d);
  k.l_coeff = Rational(-2, d);
  for (const auto& key : enumerate_boundary_classes(n, d)) {
    insert_nonzero(k, key, marked_boundary_coefficient(n, r, d, key.i, key.j));
  }
  return k;
}

CanonicalExpansion canonical_class(const ModuliSignature& sig) {
  sig.validate();
  if (sig.d == 0) {
    CanonicalExpansion k = canonical_class_m0n(sig.n);
    k.signature = sig;
    k.notes.push_back(ExpansionNote::kTargetFactorOmitted);
    return k;
  }
  if (sig.n == 0) return canonical_class_unmarked(sig.r, sig.d);
  return canonical_class_marked(sig.n, sig.r, sig.d);
}

bool coefficient_symmetry_check(int n, int r, int d) {
  ModuliSignature{n, r, d}.validate();
  if (d == 0) {
    for (int j = 0; j <= n; ++j) {
      if (m0n_boundary_coefficient(n, j) != m0n_boundary_coefficient(n, n - j)) {
        return false;
      }
    }
    return true;
  }
  for (int i = 0; i <= d; ++i) {
    for (int j = 0; j <= n; ++j) {
      if (marked_boundary_coefficient(n, r, d, i, j) !=
          marked_boundary_coefficient(n, r, d, d - i, n - j)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace ratcurve
