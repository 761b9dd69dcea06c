#include <doctest.h>

#include "bunpic/group_spec.hpp"
#include "bunpic/root_datum.hpp"
#include "oracles.hpp"

using namespace bunpic;

namespace {

Int det_of(const IntMatrix& m) {
  // Bareiss elimination.
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int prev = 1, sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(p, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::vector<SimpleType> all_types() {
  std::vector<SimpleType> t;
  for (int r = 1; r <= 6; ++r) t.push_back({Family::A, r});
  for (int r = 2; r <= 6; ++r) t.push_back({Family::B, r});
  for (int r = 2; r <= 6; ++r) t.push_back({Family::C, r});
  for (int r = 4; r <= 6; ++r) t.push_back({Family::D, r});
  for (int r : {6, 7, 8}) t.push_back({Family::E, r});
  t.push_back({Family::F, 4});
  t.push_back({Family::G, 2});
  return t;
}

long center_order(const SimpleType& t) {
  switch (t.family) {
    case Family::A: return t.rank + 1;
    case Family::B: case Family::C: return 2;
    case Family::D: return 4;
    case Family::E: return t.rank == 6 ? 3 : t.rank == 7 ? 2 : 1;
    default: return 1;
  }
}

}  // namespace

TEST_CASE("Cartan determinants equal the center orders") {
  for (const auto& t : all_types()) {
    CAPTURE(t.name());
    CHECK(det_of(cartan_matrix(t)) == center_order(t));
    IntMatrix a = cartan_matrix(t);
    for (std::size_t i = 0; i < a.rows(); ++i) CHECK(a(i, i) == 2);
  }
}

TEST_CASE("simply connected and adjoint data have trivial and full pi_1") {
  for (const auto& t : all_types()) {
    CAPTURE(t.name());
    CHECK(fundamental_group(simply_connected_group(t)).group.is_trivial());
    CHECK(*fundamental_group(adjoint_group(t)).group.order() == center_order(t));
    validate_root_datum(simply_connected_group(t));
    validate_root_datum(adjoint_group(t));
  }
}

TEST_CASE("named groups have the expected fundamental groups") {
  auto pi1 = [](const std::string& s) { return fundamental_group(build_group(s)).group; };
  CHECK(pi1("SL(4)").is_trivial());
  CHECK(pi1("PGL(4)") == oracle::group({4}));
  CHECK(pi1("GL(3)") == oracle::group({0}));
  CHECK(pi1("SO(5)") == oracle::group({2}));
  CHECK(pi1("SO(8)") == oracle::group({2}));
  CHECK(pi1("Sp(6)").is_trivial());
  CHECK(pi1("PSp(6)") == oracle::group({2}));
  CHECK(pi1("Spin(10)").is_trivial());
  CHECK(pi1("PSO(10)") == oracle::group({4}));
  CHECK(pi1("PSO(8)") == oracle::group({2, 2}));
  CHECK(pi1("E6ad") == oracle::group({3}));
  CHECK(pi1("E7ad") == oracle::group({2}));
  CHECK(pi1("E8").is_trivial());
  CHECK(pi1("GL(2)*PGL(3)*T(2)") == oracle::group({3, 0, 0, 0}));
}

TEST_CASE("reflections are involutions preserving the coroot lattice") {
  for (const char* s : {"GL(3)", "SO(7)", "Sp(4)*T(1)", "G2", "PSO(8)"}) {
    ReductiveGroupData g = build_group(s);
    IntMatrix id = IntMatrix::identity(g.cochar_rank);
    for (std::size_t i = 0; i < g.semisimple_rank(); ++i) {
      IntMatrix r = g.reflection(i);
      CHECK(r * r == id);
      IntVector c = g.simple_coroots.column(i);
      IntVector rc = r.apply(c);
      for (std::size_t k = 0; k < c.size(); ++k) CHECK(rc[k] == -c[k]);
    }
  }
}

TEST_CASE("cross diagram indices") {
  for (const char* s : {"GL(4)", "SO(5)", "PGL(3)*T(1)", "Sp(4)*T(1)", "SL(2)*SL(3)", "E6ad", "PSO(8)"}) {
    CAPTURE(s);
    ReductiveGroupData g = build_group(s);
    CrossDiagram c = cross_diagram(g);
    const std::size_t r = g.semisimple_rank();
    CHECK(c.derived.rank() == r);
    CHECK(c.radical.rank() == g.cochar_rank - r);
    CHECK(c.ab_map.rows() == g.cochar_rank - r);
    CHECK((c.ab_map * c.ab_section) == IntMatrix::identity(g.cochar_rank - r));
    // Lambda(T_sc) in Lambda(T_D) in Lambda(T_ss) in Lambda(T_ad).
    CHECK(c.derived_ss.contains(c.sc));
    CHECK(c.ss.contains(c.derived_ss));
    CHECK(c.ad.contains(c.ss));
    CHECK(c.ad.index_of(c.sc) == det_of(g.cartan()));
  }
}

TEST_CASE("pi_1 coordinates round-trip") {
  for (const char* s : {"PGL(4)", "GL(2)*PGL(2)", "PSO(8)", "SO(6)*T(1)"}) {
    ReductiveGroupData g = build_group(s);
    FundamentalGroup fg = fundamental_group(g);
    for (const auto& c : std::vector<IntVector>{IntVector(fg.generator_count(), Int(1)),
                                                 IntVector(fg.generator_count(), Int(3))}) {
      IntVector red = fg.reduce(c);
      CHECK(fg.classify(fg.lift(red)) == red);
      IntVector d = generic_lift(g, Pi1Element{red});
      CHECK(fg.classify(d) == red);
      CHECK(is_generic(g, d));
    }
  }
}

TEST_CASE("raw root datum JSON round-trips") {
  for (const char* s : {"GL(3)", "SO(7)*T(1)", "PSO(8)"}) {
    ReductiveGroupData g = build_group(s);
    ReductiveGroupData h = root_datum_from_json(root_datum_to_json(g));
    CHECK(h.simple_coroots == g.simple_coroots);
    CHECK(h.simple_roots == g.simple_roots);
    CHECK(h.factor_types == g.factor_types);
  }
  nlohmann::json bad = root_datum_to_json(build_group("SL(3)"));
  bad["simple_roots"][0][0] = 5;
  CHECK_THROWS_AS(root_datum_from_json(bad), InvalidSpec);
}

TEST_CASE("gl_like groups have simply connected derived group and free pi_1") {
  for (const auto& t : all_types()) {
    ReductiveGroupData g = gl_like_group({t});
    CHECK(derived_simply_connected(g));
    CHECK(fundamental_group(g).group.torsion.empty());
  }
}
