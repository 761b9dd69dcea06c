#pragma once

// Test-side reference computations. Nothing here calls the library's normal
// forms; groups are rebuilt from prime-power decompositions and finite groups
// are enumerated directly.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "bunpic/exact_algebra.hpp"
#include "bunpic/root_datum.hpp"

namespace oracle {

using bunpic::FGAbelianGroup;
using bunpic::Int;
using bunpic::IntVector;

// Invariant factors of Z/o_1 + ... (0 = Z) via p-primary parts.
inline FGAbelianGroup group(std::vector<long> orders) {
  FGAbelianGroup g;
  std::map<long, std::vector<int>> primary;
  for (long o : orders) {
    if (o == 0) {
      ++g.free_rank;
      continue;
    }
    o = std::labs(o);
    for (long p = 2; o > 1; ++p) {
      int e = 0;
      while (o % p == 0) {
        o /= p;
        ++e;
      }
      if (e) primary[p].push_back(e);
    }
  }
  std::size_t len = 0;
  for (auto& [p, es] : primary) {
    std::sort(es.begin(), es.end(), std::greater<>());
    len = std::max(len, es.size());
  }
  std::vector<long> inv(len, 1);
  for (auto& [p, es] : primary)
    for (std::size_t i = 0; i < es.size(); ++i)
      for (int k = 0; k < es[i]; ++k) inv[i] *= p;
  std::reverse(inv.begin(), inv.end());
  for (long x : inv) g.torsion.emplace_back(x);
  return g;
}

inline std::vector<long> zeros_then(long k, std::size_t reps, long first) {
  std::vector<long> v{first};
  for (std::size_t i = 1; i < reps; ++i) v.push_back(k);
  return v;
}

// Closed-form evaluation cokernel for the simply connected cover of an almost simple type,
// with the class of pi_1(G^ad) given in invariant-factor coordinates.
inline FGAbelianGroup evaluation_table(const bunpic::SimpleType& t, const IntVector& c) {
  using bunpic::Family;
  auto nonzero = [&] { return std::any_of(c.begin(), c.end(), [](const Int& x) { return x != 0; }); };
  switch (t.family) {
    case Family::A: {
      long n = t.rank + 1;
      long delta = c.empty() ? 0 : c[0].get_si();
      return group({std::gcd(n, delta)});
    }
    case Family::B:
      return group({2});
    case Family::C:
      return (!nonzero() || t.rank % 2 == 0) ? group({2}) : group({});
    case Family::D: {
      const int n = t.rank;
      if (!nonzero()) return n % 2 ? group({4}) : group({2, 2});
      long ord = 2;
      if (n % 2) ord = 4 / std::gcd(4L, c[0].get_si());
      return ord == 2 ? group({2}) : group({});
    }
    case Family::E:
      if (t.rank == 6) return nonzero() ? group({}) : group({3});
      if (t.rank == 7) return nonzero() ? group({}) : group({2});
      return group({});
    default:
      return group({});
  }
}

// |{x : k x = 0}| for the canonical group; these counts determine a finite
// abelian group.
inline std::vector<Int> torsion_profile(const FGAbelianGroup& g, long up_to) {
  std::vector<Int> out;
  for (long k = 1; k <= up_to; ++k) {
    Int c = 1;
    for (const auto& m : g.torsion) c *= bunpic::gcd(Int(k), m);
    out.push_back(c);
  }
  return out;
}

// Subgroup of (Z/delta)^n generated by `gens`, enumerated by closure.
inline std::set<std::vector<long>> span_mod(const std::vector<std::vector<long>>& gens, std::size_t n, long delta) {
  std::set<std::vector<long>> seen{std::vector<long>(n, 0)};
  std::vector<std::vector<long>> frontier{std::vector<long>(n, 0)};
  while (!frontier.empty()) {
    std::vector<std::vector<long>> next;
    for (const auto& v : frontier)
      for (const auto& gvec : gens) {
        std::vector<long> w(n);
        for (std::size_t i = 0; i < n; ++i) w[i] = ((v[i] + gvec[i]) % delta + delta) % delta;
        if (seen.insert(w).second) next.push_back(w);
      }
    frontier = std::move(next);
  }
  return seen;
}

// Torsion profile of (Z/delta)^n / H, counted as |{x : k x in H}| / |H|.
inline std::vector<Int> quotient_profile(const std::set<std::vector<long>>& h, std::size_t n, long delta,
                                         long up_to) {
  std::vector<Int> out;
  std::vector<long> x(n, 0);
  std::vector<long> counts(up_to, 0);
  long total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= delta;
  for (long idx = 0; idx < total; ++idx) {
    long r = idx;
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = r % delta;
      r /= delta;
    }
    for (long k = 1; k <= up_to; ++k) {
      std::vector<long> kx(n);
      for (std::size_t i = 0; i < n; ++i) kx[i] = (k * x[i]) % delta;
      if (h.count(kx)) ++counts[k - 1];
    }
  }
  for (long k = 0; k < up_to; ++k) out.emplace_back(counts[k] / static_cast<long>(h.size()));
  return out;
}

// Values of the composite Bil^s(Z^n) -> Hom(Z^n, Z/delta) for d = div e_1,
// b -> (x -> b(d, x) + (1 - g) b(x, x)) on the basis E_ii, E_ij + E_ji.
inline std::vector<std::vector<long>> torus_dbar_columns(std::size_t n, long div, int genus, long delta) {
  std::vector<std::vector<long>> cols;
  auto md = [&](long v) { return delta ? ((v % delta) + delta) % delta : v; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      std::vector<std::vector<long>> b(n, std::vector<long>(n, 0));
      b[i][j] = 1;
      b[j][i] = 1;
      std::vector<long> col(n);
      for (std::size_t k = 0; k < n; ++k) col[k] = md(div * b[0][k] + (1 - genus) * b[k][k]);
      cols.push_back(col);
    }
  return cols;
}

inline long ipow(long b, std::size_t e) {
  long r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace oracle
