#include <doctest.h>

#include <random>

#include "bunpic/exact_algebra.hpp"
#include "oracles.hpp"

using namespace bunpic;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

Int det(IntMatrix m) {
  const std::size_t n = m.rows();
  RatMatrix q(m);
  Rat d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && q(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(q(p, j), q(c, j));
      d = -d;
    }
    d *= q(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      Rat f = q(i, c) / q(c, c);
      for (std::size_t j = c; j < n; ++j) q(i, j) -= f * q(c, j);
    }
  }
  return d.get_num();
}

}  // namespace

TEST_CASE("hermite form reproduces the input and is unimodular") {
  std::mt19937 rng(7);
  for (int t = 0; t < 60; ++t) {
    IntMatrix m = random_matrix(rng, 1 + t % 4, 1 + (t / 4) % 5, 6);
    HermiteResult hr = hermite_normal_form(m);
    CHECK(m * hr.u == hr.h);
    CHECK(abs(det(hr.u)) == 1);
    for (std::size_t j = 0; j < hr.rank; ++j) {
      const std::size_t p = hr.pivot_rows[j];
      CHECK(hr.h(p, j) > 0);
      for (std::size_t i = 0; i < p; ++i) CHECK(hr.h(i, j) == 0);
      for (std::size_t k = 0; k < j; ++k) {
        CHECK(hr.h(p, k) >= 0);
        CHECK(hr.h(p, k) < hr.h(p, j));
      }
    }
    for (std::size_t j = hr.rank; j < m.cols(); ++j) CHECK(is_zero(hr.h.column(j)));
  }
}

TEST_CASE("smith form has a divisibility chain and unimodular transforms") {
  std::mt19937 rng(11);
  for (int t = 0; t < 60; ++t) {
    IntMatrix m = random_matrix(rng, 1 + t % 4, 1 + (t / 3) % 4, 9);
    SmithResult sr = smith_normal_form(m);
    CHECK(sr.u * m * sr.v == sr.s);
    CHECK(abs(det(sr.u)) == 1);
    CHECK(abs(det(sr.v)) == 1);
    IntVector d = sr.diagonal();
    for (std::size_t i = 0; i + 1 < d.size(); ++i)
      if (d[i + 1] != 0) CHECK(mod_floor(d[i + 1], d[i]) == 0);
    for (std::size_t i = 0; i < sr.s.rows(); ++i)
      for (std::size_t j = 0; j < sr.s.cols(); ++j)
        if (i != j) CHECK(sr.s(i, j) == 0);
  }
}

TEST_CASE("square determinant equals product of invariant factors up to sign") {
  std::mt19937 rng(3);
  for (int t = 0; t < 40; ++t) {
    IntMatrix m = random_matrix(rng, 3, 3, 7);
    Int prod = 1;
    for (const auto& x : smith_normal_form(m).diagonal()) prod *= x;
    CHECK(abs(det(m)) == abs(prod));
  }
}

TEST_CASE("integer kernel spans the rational kernel and is saturated") {
  std::mt19937 rng(5);
  for (int t = 0; t < 40; ++t) {
    IntMatrix m = random_matrix(rng, 2, 4, 5);
    IntMatrix k = integer_kernel(m);
    CHECK((m * k).is_zero());
    Lattice l = Lattice::from_generators(4, k);
    CHECK(saturation(l) == l);
  }
}

TEST_CASE("cyclic-order presentations agree with the prime-power oracle") {
  std::vector<std::vector<long>> cases{{}, {1}, {0}, {2, 3}, {4, 6}, {12, 18, 0}, {2, 2, 2}, {8, 4, 2, 1}, {9, 27, 5}};
  for (const auto& c : cases) {
    IntVector v;
    for (long x : c) v.emplace_back(x);
    CHECK(FGAbelianGroup::from_cyclic_orders(v) == oracle::group(c));
  }
  CHECK(FGAbelianGroup::cyclic(0) == FGAbelianGroup::free(1));
  CHECK(FGAbelianGroup::cyclic(1).is_trivial());
  CHECK(*oracle::group({4, 6}).order() == 24);
  CHECK(!FGAbelianGroup::free(2).order());
}

TEST_CASE("congruence sublattice matches enumeration in a box") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> coef(-3, 3), mod(0, 5);
  for (int t = 0; t < 25; ++t) {
    std::vector<Congruence> conds;
    for (int k = 0; k < 2; ++k) conds.push_back({{Int(coef(rng)), Int(coef(rng)), Int(coef(rng))}, Int(mod(rng))});
    Lattice l = solve_congruence_sublattice(3, conds);
    for (int a = -4; a <= 4; ++a)
      for (int b = -4; b <= 4; ++b)
        for (int c = -4; c <= 4; ++c) {
          IntVector x{a, b, c};
          bool ok = true;
          for (const auto& cd : conds) {
            Int v = cd.functional[0] * a + cd.functional[1] * b + cd.functional[2] * c;
            ok = ok && (cd.modulus == 0 ? v == 0 : mod_floor(v, cd.modulus) == 0);
          }
          CHECK(l.contains(x) == ok);
        }
  }
}

TEST_CASE("rational congruence clears denominators") {
  Congruence c = rational_congruence({Rat(1, 2), Rat(1, 3)}, Int(1));
  Lattice l = solve_congruence_sublattice(2, {c});
  CHECK(l.contains(IntVector{2, 3}));
  CHECK(l.contains(IntVector{-2, 0}));
  CHECK(!l.contains(IntVector{1, 0}));
  CHECK(!l.contains(IntVector{0, 1}));
  CHECK(Lattice::full(2).index_of(l) == 6);
}

TEST_CASE("lattice operations") {
  Lattice a = Lattice::from_generators(2, IntMatrix{{2, 0}, {0, 3}});
  Lattice b = Lattice::from_generators(2, IntMatrix{{3, 0}, {0, 2}});
  CHECK(Lattice::full(2).index_of(a) == 6);
  CHECK(Lattice::full(2).index_of(intersection(a, b)) == 36);
  CHECK(sum(a, b) == Lattice::full(2));
  CHECK(Lattice::full(2).quotient(a) == oracle::group({6}));
  CHECK(Lattice::full(2).index_of(Lattice::from_generators(2, IntMatrix{{1}, {1}})) == 0);
  CHECK(Lattice::full(3).quotient(Lattice::zero(3)) == FGAbelianGroup::free(3));
  CHECK(divisibility(IntVector{4, 6}, Lattice::full(2)) == 2);
  CHECK(a.coordinates(IntVector{1, 0}) == std::nullopt);
}

TEST_CASE("group homomorphism kernel, image and cokernel") {
  // Z -> Z/6, 1 -> 2: kernel 3Z, image Z/3, cokernel Z/2.
  GroupHom f(Presentation::free(1), Presentation(1, IntMatrix{{6}}), IntMatrix{{2}});
  CHECK(cokernel(f) == oracle::group({2}));
  CHECK(image(f) == oracle::group({3}));
  CHECK(kernel(f).group == FGAbelianGroup::free(1));
  CHECK(f.respects_relations());
  // Z/4 -> Z/2 reduction is well defined; Z/3 -> Z/2 inclusion is not.
  CHECK(GroupHom(Presentation(1, IntMatrix{{4}}), Presentation(1, IntMatrix{{2}}), IntMatrix{{1}}).respects_relations());
  CHECK(!GroupHom(Presentation(1, IntMatrix{{3}}), Presentation(1, IntMatrix{{2}}), IntMatrix{{1}}).respects_relations());
}
