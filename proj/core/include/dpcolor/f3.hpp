#pragma once

#include "dpcolor/permutation.hpp"

namespace dpc {

// Element of the field with three elements.
struct F3 {
  int v = 0;  // always 0, 1 or 2

  static F3 of(int x) {
    int r = x % 3;
    return F3{r < 0 ? r + 3 : r};
  }

  friend F3 operator+(F3 a, F3 b) { return of(a.v + b.v); }
  friend F3 operator-(F3 a, F3 b) { return of(a.v - b.v); }
  friend F3 operator*(F3 a, F3 b) { return of(a.v * b.v); }
  friend F3 operator-(F3 a) { return of(-a.v); }
  bool operator==(const F3&) const = default;
  bool nonzero() const { return v != 0; }
};

// The polynomial x_i + (-1)^c x_j - a over F3, with i < j. Its zero set in
// F3 x F3 is the graph of a permutation: c = 1 encodes the shift
// sigma(z) = z - a, c = 0 the reflection sigma(z) = a - z.
struct LinearFactor {
  int i = 0;
  int j = 0;
  int c = 1;
  F3 a{};

  F3 evaluate(F3 xi, F3 xj) const { return c == 1 ? xi - xj - a : xi + xj - a; }
  bool operator==(const LinearFactor&) const = default;
};

// Encode a permutation of {0,1,2} as the factor vanishing exactly where
// sigma(x_i) = x_j. Every such permutation has z - sigma(z) or z + sigma(z)
// constant, so the (c, a) pair exists and is unique. Requires i < j and
// modulus 3; throws std::invalid_argument otherwise.
LinearFactor perm_to_factor(const Permutation& sigma, int i, int j);

// Inverse direction; ignores the variable indices. Roundtrips with
// perm_to_factor over all six permutations.
Permutation factor_to_perm(const LinearFactor& f);

}  // namespace dpc
