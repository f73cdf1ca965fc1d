#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dpcolor/cover.hpp"
#include "dpcolor/f3.hpp"
#include "dpcolor/limits.hpp"
#include "dpcolor/multigraph.hpp"

namespace dpc {

// Product of linear factors over F3, one per edge instance of the source
// graph. Vanishes at a point exactly when some edge constraint is hit, so
// its non-zeros are the cover's colorings.
struct CoverPolynomial {
  int n = 0;
  std::vector<LinearFactor> factors;
  bool operator==(const CoverPolynomial&) const = default;
};

// Same values on the grid, written as a sum of monomials with every
// exponent at most 2 (x^3 = x on F3). Zero coefficients are dropped, so
// equal maps mean equal functions.
struct ReducedPoly {
  int n = 0;
  std::map<std::vector<std::uint8_t>, F3> terms;
  bool operator==(const ReducedPoly&) const = default;
};

// One factor per edge in edge order. Requires fold size 3.
CoverPolynomial build_polynomial(const Multigraph& g, const FullCover& c);

F3 evaluate(const CoverPolynomial& p, const std::vector<F3>& point);
F3 evaluate(const ReducedPoly& p, const std::vector<F3>& point);

// Points of F3^n with nonzero value. The grid is walked in lexicographic
// order with x_0 the most significant ternary digit. Guarded by
// lim.max_states grid points.
std::uint64_t count_nonzeros(const CoverPolynomial& p, const Limits& lim = {});

// Expand the product and reduce exponents via x^3 = x. Monomial count is
// guarded by lim.max_states.
ReducedPoly expand_reduced(const CoverPolynomial& p, const Limits& lim = {});

// Largest total degree over the stored monomials (0 for a constant).
int reduced_degree(const ReducedPoly& p);

// Dump formats: one "i j c a" line per factor; one "e0 e1 ... coeff" line
// per monomial in map order.
std::string serialize_factors(const CoverPolynomial& p);
std::string serialize_reduced(const ReducedPoly& p);

}  // namespace dpc
