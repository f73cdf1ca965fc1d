#include "dpcolor/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace dpc {

namespace {

std::uint64_t pow3_guarded(int n, std::uint64_t cap) {
  std::uint64_t v = 1;
  for (int i = 0; i < n; ++i) {
    if (v > cap / 3) return cap + 1;
    v *= 3;
  }
  return v;
}

}  // namespace

CoverPolynomial build_polynomial(const Multigraph& g, const FullCover& c) {
  if (c.m != 3) throw std::invalid_argument("polynomial encoding needs fold size 3");
  if (static_cast<int>(c.perms.size()) != g.edge_count()) {
    throw std::invalid_argument("cover has wrong number of permutations");
  }
  CoverPolynomial p;
  p.n = g.vertex_count();
  p.factors.reserve(c.perms.size());
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    p.factors.push_back(perm_to_factor(c.perms[static_cast<std::size_t>(e)], ed.u, ed.v));
  }
  return p;
}

F3 evaluate(const CoverPolynomial& p, const std::vector<F3>& point) {
  if (static_cast<int>(point.size()) != p.n) throw std::invalid_argument("point length mismatch");
  F3 prod{1};
  for (const LinearFactor& f : p.factors) {
    prod = prod * f.evaluate(point[static_cast<std::size_t>(f.i)], point[static_cast<std::size_t>(f.j)]);
    if (!prod.nonzero()) return prod;
  }
  return prod;
}

F3 evaluate(const ReducedPoly& p, const std::vector<F3>& point) {
  if (static_cast<int>(point.size()) != p.n) throw std::invalid_argument("point length mismatch");
  F3 sum{0};
  for (const auto& [exps, coeff] : p.terms) {
    F3 term = coeff;
    for (int v = 0; v < p.n; ++v) {
      switch (exps[static_cast<std::size_t>(v)]) {
        case 0:
          break;
        case 1:
          term = term * point[static_cast<std::size_t>(v)];
          break;
        default:
          term = term * point[static_cast<std::size_t>(v)] * point[static_cast<std::size_t>(v)];
          break;
      }
    }
    sum = sum + term;
  }
  return sum;
}

std::uint64_t count_nonzeros(const CoverPolynomial& p, const Limits& lim) {
  std::uint64_t grid = pow3_guarded(p.n, lim.max_states);
  if (grid > lim.max_states) throw GuardExceeded("3^n exceeds the state guard");
  // Walk the grid as ternary counters with x_0 the most significant digit.
  std::vector<F3> point(static_cast<std::size_t>(p.n), F3{0});
  std::uint64_t nonzeros = 0;
  for (std::uint64_t k = 0;; ++k) {
    if (evaluate(p, point).nonzero()) ++nonzeros;
    if (k + 1 == grid) break;
    for (int v = p.n - 1; v >= 0; --v) {
      auto& d = point[static_cast<std::size_t>(v)];
      if (d.v < 2) {
        d.v += 1;
        break;
      }
      d.v = 0;
    }
  }
  return nonzeros;
}

ReducedPoly expand_reduced(const CoverPolynomial& p, const Limits& lim) {
  ReducedPoly out;
  out.n = p.n;
  std::vector<std::uint8_t> constant(static_cast<std::size_t>(p.n), 0);
  out.terms[constant] = F3{1};
  for (const LinearFactor& f : p.factors) {
    std::map<std::vector<std::uint8_t>, F3> next;
    auto add = [&](std::vector<std::uint8_t> exps, F3 coeff) {
      if (!coeff.nonzero()) return;
      auto [it, inserted] = next.try_emplace(std::move(exps), coeff);
      if (!inserted) {
        it->second = it->second + coeff;
        if (!it->second.nonzero()) next.erase(it);
      }
    };
    for (const auto& [exps, coeff] : out.terms) {
      // x^3 = x on the grid, so a bump from exponent 2 lands back on 1.
      auto bump = [&](int var) {
        std::vector<std::uint8_t> e = exps;
        e[static_cast<std::size_t>(var)] = e[static_cast<std::size_t>(var)] == 2 ? 1 : e[static_cast<std::size_t>(var)] + 1;
        return e;
      };
      add(bump(f.i), coeff);
      add(bump(f.j), f.c == 1 ? -coeff : coeff);
      add(exps, -(f.a * coeff));
    }
    if (next.size() > lim.max_states) throw GuardExceeded("reduced expansion exceeds the state guard");
    out.terms = std::move(next);
  }
  return out;
}

int reduced_degree(const ReducedPoly& p) {
  int best = 0;
  for (const auto& [exps, coeff] : p.terms) {
    int total = 0;
    for (std::uint8_t e : exps) total += e;
    best = std::max(best, total);
  }
  return best;
}

std::string serialize_factors(const CoverPolynomial& p) {
  std::ostringstream out;
  for (const LinearFactor& f : p.factors) {
    out << f.i << ' ' << f.j << ' ' << f.c << ' ' << f.a.v << '\n';
  }
  return out.str();
}

std::string serialize_reduced(const ReducedPoly& p) {
  std::ostringstream out;
  for (const auto& [exps, coeff] : p.terms) {
    for (std::uint8_t e : exps) out << static_cast<int>(e) << ' ';
    out << coeff.v << '\n';
  }
  return out.str();
}

}  // namespace dpc
