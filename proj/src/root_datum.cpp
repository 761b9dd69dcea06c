#include "bunpic/root_datum.hpp"

#include <cctype>

namespace bunpic {

namespace {

const char* family_letter(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E: return "E";
    case Family::F: return "F";
    case Family::G: return "G";
  }
  return "?";
}

// Gram matrix of the simple roots (any positive multiple of the invariant form).
IntMatrix root_gram(const SimpleType& t) {
  const int n = t.rank;
  auto from_vectors = [](const std::vector<IntVector>& v) {
    IntMatrix s(v.size(), v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = 0; j < v.size(); ++j) {
        Int x = 0;
        for (std::size_t k = 0; k < v[i].size(); ++k) x += v[i][k] * v[j][k];
        s(i, j) = x;
      }
    return s;
  };
  auto unit_diff = [n](int i) {
    IntVector v(n, Int(0));
    v[i] = 1;
    v[i + 1] = -1;
    return v;
  };
  switch (t.family) {
    case Family::A: {
      IntMatrix s(n, n);
      for (int i = 0; i < n; ++i) {
        s(i, i) = 2;
        if (i + 1 < n) s(i, i + 1) = s(i + 1, i) = -1;
      }
      return s;
    }
    case Family::B:
    case Family::C:
    case Family::D: {
      std::vector<IntVector> v;
      for (int i = 0; i + 1 < n; ++i) v.push_back(unit_diff(i));
      IntVector last(n, Int(0));
      if (t.family == Family::B) last[n - 1] = 1;
      if (t.family == Family::C) last[n - 1] = 2;
      if (t.family == Family::D) last[n - 2] = last[n - 1] = 1;
      v.push_back(last);
      return from_vectors(v);
    }
    case Family::E: {
      IntMatrix s = Int(2) * IntMatrix::identity(n);
      const int edges[][2] = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}};
      for (const auto& e : edges)
        if (e[0] <= n && e[1] <= n) s(e[0] - 1, e[1] - 1) = s(e[1] - 1, e[0] - 1) = -1;
      return s;
    }
    case Family::F:
      return IntMatrix{{4, -2, 0, 0}, {-2, 4, -2, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}};
    case Family::G:
      return IntMatrix{{2, -3}, {-3, 6}};
  }
  throw InvalidSpec("unknown family");
}

IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks) {
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  IntMatrix m(rows, cols);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m(r0 + i, c0 + j) = b(i, j);
    r0 += b.rows();
    c0 += b.cols();
  }
  return m;
}

SimpleType normalized(SimpleType t) {
  if (t.rank == 1 && (t.family == Family::B || t.family == Family::C)) t.family = Family::A;
  return t;
}

IntMatrix unimodular_inverse(const IntMatrix& u) { return RatMatrix(u).inverse().to_integral(); }

}  // namespace

std::string SimpleType::name() const { return family_letter(family) + std::to_string(rank); }

SimpleType SimpleType::parse(const std::string& s) {
  if (s.size() < 2) throw InvalidSpec("bad simple type '" + s + "'");
  SimpleType t;
  switch (s[0]) {
    case 'A': t.family = Family::A; break;
    case 'B': t.family = Family::B; break;
    case 'C': t.family = Family::C; break;
    case 'D': t.family = Family::D; break;
    case 'E': t.family = Family::E; break;
    case 'F': t.family = Family::F; break;
    case 'G': t.family = Family::G; break;
    default: throw InvalidSpec("bad simple type '" + s + "'");
  }
  for (std::size_t i = 1; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw InvalidSpec("bad simple type '" + s + "'");
  t.rank = std::stoi(s.substr(1));
  validate_type(t);
  return t;
}

void validate_type(const SimpleType& t) {
  bool ok = false;
  switch (t.family) {
    case Family::A: ok = t.rank >= 1; break;
    case Family::B: ok = t.rank >= 2; break;
    case Family::C: ok = t.rank >= 2; break;
    case Family::D: ok = t.rank >= 3; break;
    case Family::E: ok = t.rank >= 6 && t.rank <= 8; break;
    case Family::F: ok = t.rank == 4; break;
    case Family::G: ok = t.rank == 2; break;
  }
  if (!ok) throw InvalidSpec("invalid rank for simple type " + t.name());
}

IntMatrix cartan_matrix(const SimpleType& t) {
  validate_type(t);
  IntMatrix s = root_gram(t);
  IntMatrix a(s.rows(), s.cols());
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < s.cols(); ++j) a(i, j) = Int(2) * s(i, j) / s(j, j);
  return a;
}

IntMatrix ReductiveGroupData::cartan() const { return simple_roots.transpose() * simple_coroots; }

std::vector<std::pair<std::size_t, std::size_t>> ReductiveGroupData::factor_blocks() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::size_t start = 0;
  for (const auto& t : factor_types) {
    out.emplace_back(start, start + t.rank);
    start += t.rank;
  }
  return out;
}

IntMatrix ReductiveGroupData::reflection(std::size_t i) const {
  IntMatrix s = IntMatrix::identity(cochar_rank);
  for (std::size_t a = 0; a < cochar_rank; ++a)
    for (std::size_t b = 0; b < cochar_rank; ++b) s(a, b) -= simple_coroots(a, i) * simple_roots(b, i);
  return s;
}

void validate_root_datum(const ReductiveGroupData& g) {
  const std::size_t n = g.cochar_rank;
  if (g.simple_coroots.rows() != n || g.simple_roots.rows() != n)
    throw InvalidSpec("root datum: vectors must have length cochar_rank");
  if (g.simple_coroots.cols() != g.simple_roots.cols())
    throw InvalidSpec("root datum: number of roots and coroots differ");
  std::size_t r = 0;
  std::vector<IntMatrix> blocks;
  for (const auto& t : g.factor_types) {
    validate_type(t);
    r += t.rank;
    blocks.push_back(cartan_matrix(t));
  }
  if (r != g.semisimple_rank()) throw InvalidSpec("root datum: factor ranks do not match the number of roots");
  if (r > n) throw InvalidSpec("root datum: more roots than cochar_rank");
  if (hermite_normal_form(g.simple_coroots).rank != r) throw InvalidSpec("root datum: coroots are dependent");
  if (!(g.cartan() == block_diagonal(blocks)))
    throw InvalidSpec("root datum: pairing does not reproduce the Cartan matrix of the factor types");
}

ReductiveGroupData torus_group(std::size_t rank) {
  ReductiveGroupData g;
  g.cochar_rank = rank;
  g.simple_coroots = IntMatrix(rank, 0);
  g.simple_roots = IntMatrix(rank, 0);
  g.label = "T(" + std::to_string(rank) + ")";
  return g;
}

ReductiveGroupData simply_connected_group(const SimpleType& t0) {
  SimpleType t = normalized(t0);
  IntMatrix a = cartan_matrix(t);
  ReductiveGroupData g;
  g.cochar_rank = t.rank;
  g.simple_coroots = IntMatrix::identity(t.rank);
  g.simple_roots = a.transpose();
  g.factor_types = {t};
  g.label = t.name() + "sc";
  return g;
}

ReductiveGroupData adjoint_group(const SimpleType& t0) {
  SimpleType t = normalized(t0);
  IntMatrix a = cartan_matrix(t);
  ReductiveGroupData g;
  g.cochar_rank = t.rank;
  g.simple_coroots = a;
  g.simple_roots = IntMatrix::identity(t.rank);
  g.factor_types = {t};
  g.label = t.name() + "ad";
  return g;
}

ReductiveGroupData product(const ReductiveGroupData& a, const ReductiveGroupData& b) {
  ReductiveGroupData g;
  g.cochar_rank = a.cochar_rank + b.cochar_rank;
  g.simple_coroots = block_diagonal({a.simple_coroots, b.simple_coroots});
  g.simple_roots = block_diagonal({a.simple_roots, b.simple_roots});
  g.factor_types = a.factor_types;
  g.factor_types.insert(g.factor_types.end(), b.factor_types.begin(), b.factor_types.end());
  g.label = a.label.empty() ? b.label : (b.label.empty() ? a.label : a.label + "*" + b.label);
  return g;
}

ReductiveGroupData product(const std::vector<ReductiveGroupData>& factors) {
  ReductiveGroupData g = torus_group(0);
  g.label.clear();
  for (const auto& f : factors) g = product(g, f);
  return g;
}

namespace {

ReductiveGroupData standard_classical(int n, const std::vector<IntVector>& coroots, const std::vector<IntVector>& roots,
                                      SimpleType type, std::string label) {
  ReductiveGroupData g;
  g.cochar_rank = n;
  g.simple_coroots = IntMatrix::from_columns(n, coroots);
  g.simple_roots = IntMatrix::from_columns(n, roots);
  if (!coroots.empty()) g.factor_types = {normalized(type)};
  g.label = std::move(label);
  return g;
}

IntVector diff_vector(int n, int i) {
  IntVector v(n, Int(0));
  v[i] = 1;
  v[i + 1] = -1;
  return v;
}

}  // namespace

ReductiveGroupData gl_group(int n) {
  if (n < 1) throw InvalidSpec("GL(n) requires n >= 1");
  std::vector<IntVector> v;
  for (int i = 0; i + 1 < n; ++i) v.push_back(diff_vector(n, i));
  return standard_classical(n, v, v, {Family::A, std::max(1, n - 1)}, "GL(" + std::to_string(n) + ")");
}

ReductiveGroupData sp_group(int n) {
  if (n < 1) throw InvalidSpec("Sp(2n) requires n >= 1");
  std::vector<IntVector> co, ro;
  for (int i = 0; i + 1 < n; ++i) co.push_back(diff_vector(n, i));
  ro = co;
  IntVector e(n, Int(0));
  e[n - 1] = 1;
  co.push_back(e);
  e[n - 1] = 2;
  ro.push_back(e);
  return standard_classical(n, co, ro, {n == 1 ? Family::A : Family::C, n}, "Sp(" + std::to_string(2 * n) + ")");
}

ReductiveGroupData so_odd_group(int n) {
  if (n < 1) throw InvalidSpec("SO(2n+1) requires n >= 1");
  std::vector<IntVector> co, ro;
  for (int i = 0; i + 1 < n; ++i) co.push_back(diff_vector(n, i));
  ro = co;
  IntVector e(n, Int(0));
  e[n - 1] = 2;
  co.push_back(e);
  e[n - 1] = 1;
  ro.push_back(e);
  return standard_classical(n, co, ro, {n == 1 ? Family::A : Family::B, n}, "SO(" + std::to_string(2 * n + 1) + ")");
}

ReductiveGroupData so_even_group(int n) {
  if (n < 3) throw InvalidSpec("SO(2n) requires n >= 3");
  std::vector<IntVector> v;
  for (int i = 0; i + 1 < n; ++i) v.push_back(diff_vector(n, i));
  IntVector e(n, Int(0));
  e[n - 2] = e[n - 1] = 1;
  v.push_back(e);
  return standard_classical(n, v, v, {Family::D, n}, "SO(" + std::to_string(2 * n) + ")");
}

ReductiveGroupData simply_connected_cover(const ReductiveGroupData& g) {
  std::vector<ReductiveGroupData> f;
  for (const auto& t : g.factor_types) f.push_back(simply_connected_group(t));
  return product(f);
}

ReductiveGroupData adjoint_quotient(const ReductiveGroupData& g) {
  std::vector<ReductiveGroupData> f;
  for (const auto& t : g.factor_types) f.push_back(adjoint_group(t));
  return product(f);
}

ReductiveGroupData gl_like_group(const std::vector<SimpleType>& types) {
  std::vector<IntMatrix> blocks;
  std::vector<SimpleType> norm;
  for (const auto& t : types) {
    norm.push_back(normalized(t));
    blocks.push_back(cartan_matrix(norm.back()));
  }
  IntMatrix a = block_diagonal(blocks);
  const std::size_t r = a.rows();
  // Generators of pi_1(G^ad) = Z^r / A Z^r in coweight coordinates.
  SmithResult sr = smith_normal_form(a);
  IntMatrix uinv = unimodular_inverse(sr.u);
  std::vector<IntVector> gens;
  for (std::size_t i = 0; i < r; ++i)
    if (sr.s(i, i) != 1) gens.push_back(uinv.column(i));
  const std::size_t k = gens.size();
  // L = {(w, t) : w - sum t_j g_j in A Z^r}.
  IntMatrix m(r, r + k + r);
  for (std::size_t i = 0; i < r; ++i) {
    m(i, i) = 1;
    for (std::size_t j = 0; j < k; ++j) m(i, r + j) = -gens[j][i];
    for (std::size_t j = 0; j < r; ++j) m(i, r + k + j) = -a(i, j);
  }
  IntMatrix ker = integer_kernel(m);
  IntMatrix proj(r + k, ker.cols());
  for (std::size_t i = 0; i < r + k; ++i)
    for (std::size_t j = 0; j < ker.cols(); ++j) proj(i, j) = ker(i, j);
  Lattice l = Lattice::from_generators(r + k, proj);
  const IntMatrix& p = l.basis();
  IntMatrix ambient_coroots(r + k, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) ambient_coroots(i, j) = a(i, j);
  ReductiveGroupData g;
  g.cochar_rank = r + k;
  g.simple_coroots = l.coordinates_of(ambient_coroots);
  g.simple_roots = IntMatrix(r + k, r);
  for (std::size_t i = 0; i < r + k; ++i)
    for (std::size_t j = 0; j < r; ++j) g.simple_roots(i, j) = p(j, i);
  g.factor_types = norm;
  std::string label;
  for (const auto& t : norm) label += (label.empty() ? "" : "*") + t.name();
  g.label = "GLlike(" + label + ")";
  validate_root_datum(g);
  return g;
}

ReductiveGroupData root_datum_from_json(const nlohmann::json& j) {
  try {
    ReductiveGroupData g;
    g.cochar_rank = j.at("cochar_rank").get<std::size_t>();
    auto read_vectors = [&](const char* key) {
      std::vector<IntVector> cols;
      for (const auto& v : j.at(key)) {
        IntVector c;
        for (const auto& x : v) c.emplace_back(x.is_string() ? x.get<std::string>() : std::to_string(x.get<long long>()));
        cols.push_back(c);
      }
      return IntMatrix::from_columns(g.cochar_rank, cols);
    };
    g.simple_coroots = read_vectors("simple_coroots");
    g.simple_roots = read_vectors("simple_roots");
    for (const auto& t : j.at("factor_types")) g.factor_types.push_back(SimpleType::parse(t.get<std::string>()));
    g.label = j.value("label", std::string("raw"));
    validate_root_datum(g);
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidSpec(std::string("root datum JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InvalidSpec(std::string("root datum JSON: ") + e.what());
  }
}

nlohmann::json root_datum_to_json(const ReductiveGroupData& g) {
  auto vectors = [](const IntMatrix& m) {
    nlohmann::json out = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      nlohmann::json v = nlohmann::json::array();
      for (std::size_t i = 0; i < m.rows(); ++i) v.push_back(m(i, j).get_si());
      out.push_back(v);
    }
    return out;
  };
  nlohmann::json types = nlohmann::json::array();
  for (const auto& t : g.factor_types) types.push_back(t.name());
  return {{"cochar_rank", g.cochar_rank},
          {"simple_coroots", vectors(g.simple_coroots)},
          {"simple_roots", vectors(g.simple_roots)},
          {"factor_types", types},
          {"label", g.label}};
}

CrossDiagram cross_diagram(const ReductiveGroupData& g) {
  const std::size_t n = g.cochar_rank;
  const std::size_t r = g.semisimple_rank();
  CrossDiagram c;
  c.derived = saturation(Lattice::from_generators(n, g.simple_coroots));
  c.radical = Lattice::from_generators(n, integer_kernel(g.simple_roots.transpose()));
  IntMatrix ab_chars = integer_kernel(g.simple_coroots.transpose());
  c.ab_map = ab_chars.transpose();
  HermiteResult hr = hermite_normal_form(c.ab_map);
  c.ab_section = hr.u.column_range(0, n - r);
  c.ss_map = g.simple_roots.transpose();
  c.derived_cw = c.ss_map * c.derived.basis();
  c.sc = Lattice::from_generators(r, g.cartan());
  c.derived_ss = Lattice::from_generators(r, c.derived_cw);
  c.ss = Lattice::from_generators(r, c.ss_map);
  c.ad = Lattice::full(r);
  return c;
}

bool derived_simply_connected(const ReductiveGroupData& g) {
  CrossDiagram c = cross_diagram(g);
  return c.derived == Lattice::from_generators(g.cochar_rank, g.simple_coroots);
}

IntVector FundamentalGroup::reduce(const IntVector& coords) const {
  if (coords.size() != generator_count())
    throw InvalidSpec("delta has " + std::to_string(coords.size()) + " coordinates, pi_1 has " +
                      std::to_string(generator_count()) + " generators");
  IntVector out = coords;
  for (std::size_t i = 0; i < group.torsion.size(); ++i) out[i] = mod_floor(out[i], group.torsion[i]);
  return out;
}

IntVector FundamentalGroup::classify(const IntVector& cocharacter) const {
  return reduce(coordinate_map.apply(cocharacter));
}

IntVector FundamentalGroup::lift(const IntVector& coords) const { return generators.apply(reduce(coords)); }

FundamentalGroup fundamental_group(const ReductiveGroupData& g) {
  const std::size_t n = g.cochar_rank;
  const std::size_t r = g.semisimple_rank();
  SmithResult sr = smith_normal_form(g.simple_coroots);
  IntMatrix uinv = unimodular_inverse(sr.u);
  FundamentalGroup p;
  std::vector<IntVector> gens;
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < n; ++i) {
    Int d = i < r ? sr.s(i, i) : Int(0);
    if (d == 1) continue;
    if (d == 0)
      ++p.group.free_rank;
    else
      p.group.torsion.push_back(d);
    gens.push_back(uinv.column(i));
    rows.push_back(sr.u.row(i));
  }
  p.generators = IntMatrix::from_columns(n, gens);
  p.coordinate_map = IntMatrix::from_rows(n, rows);
  return p;
}

bool is_generic(const ReductiveGroupData& g, const IntVector& d) {
  IntVector w = g.simple_roots.transpose().apply(d);
  for (const auto& [b, e] : g.factor_blocks()) {
    bool nonzero = false;
    for (std::size_t i = b; i < e; ++i) nonzero = nonzero || w[i] != 0;
    if (!nonzero) return false;
  }
  return true;
}

IntVector plain_lift(const ReductiveGroupData& g, const Pi1Element& delta) {
  return fundamental_group(g).lift(delta.coords);
}

IntVector generic_lift(const ReductiveGroupData& g, const Pi1Element& delta) {
  IntVector d = plain_lift(g, delta);
  IntVector w = g.simple_roots.transpose().apply(d);
  for (const auto& [b, e] : g.factor_blocks()) {
    bool nonzero = false;
    for (std::size_t i = b; i < e; ++i) nonzero = nonzero || w[i] != 0;
    if (nonzero) continue;
    for (std::size_t i = 0; i < g.cochar_rank; ++i) d[i] += g.simple_coroots(i, b);
  }
  return d;
}

}  // namespace bunpic
