#include "bunpic/exact_algebra.hpp"

#include <algorithm>

namespace bunpic {

namespace {

// Index of the nonzero entry of minimal absolute value in row r, columns >= from.
std::optional<std::size_t> min_abs_in_row(const IntMatrix& h, std::size_t r, std::size_t from) {
  std::optional<std::size_t> best;
  for (std::size_t j = from; j < h.cols(); ++j) {
    if (h(r, j) == 0) continue;
    if (!best || abs(h(r, j)) < abs(h(r, *best))) best = j;
  }
  return best;
}

}  // namespace

HermiteResult hermite_normal_form(const IntMatrix& m) {
  HermiteResult res{m, IntMatrix::identity(m.cols()), 0, {}};
  IntMatrix& h = res.h;
  IntMatrix& u = res.u;
  std::size_t k = 0;
  for (std::size_t r = 0; r < h.rows() && k < h.cols(); ++r) {
    while (true) {
      auto piv = min_abs_in_row(h, r, k);
      if (!piv) break;
      h.swap_columns(*piv, k);
      u.swap_columns(*piv, k);
      bool done = true;
      for (std::size_t j = k + 1; j < h.cols(); ++j) {
        if (h(r, j) == 0) continue;
        Int q = floor_div(h(r, j), h(r, k));
        h.add_column_multiple(j, k, -q);
        u.add_column_multiple(j, k, -q);
        if (h(r, j) != 0) done = false;
      }
      if (done) break;
    }
    if (h(r, k) == 0) continue;
    if (h(r, k) < 0) {
      h.negate_column(k);
      u.negate_column(k);
    }
    for (std::size_t j = 0; j < k; ++j) {
      Int q = floor_div(h(r, j), h(r, k));
      h.add_column_multiple(j, k, -q);
      u.add_column_multiple(j, k, -q);
    }
    res.pivot_rows.push_back(r);
    ++k;
  }
  res.rank = k;
  return res;
}

IntVector SmithResult::diagonal() const {
  IntVector d;
  for (std::size_t i = 0; i < std::min(s.rows(), s.cols()); ++i) d.push_back(s(i, i));
  return d;
}

SmithResult smith_normal_form(const IntMatrix& m) {
  SmithResult res{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  IntMatrix& s = res.s;
  const std::size_t n = std::min(s.rows(), s.cols());
  for (std::size_t t = 0; t < n; ++t) {
    while (true) {
      // Minimal absolute value pivot in the trailing block.
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t i = t; i < s.rows(); ++i)
        for (std::size_t j = t; j < s.cols(); ++j)
          if (s(i, j) != 0 && (!best || abs(s(i, j)) < abs(s(best->first, best->second))))
            best = {i, j};
      if (!best) return res;
      s.swap_rows(best->first, t);
      res.u.swap_rows(best->first, t);
      s.swap_columns(best->second, t);
      res.v.swap_columns(best->second, t);

      bool clean = true;
      for (std::size_t i = t + 1; i < s.rows(); ++i) {
        if (s(i, t) == 0) continue;
        Int q = floor_div(s(i, t), s(t, t));
        s.add_row_multiple(i, t, -q);
        res.u.add_row_multiple(i, t, -q);
        if (s(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < s.cols(); ++j) {
        if (s(t, j) == 0) continue;
        Int q = floor_div(s(t, j), s(t, t));
        s.add_column_multiple(j, t, -q);
        res.v.add_column_multiple(j, t, -q);
        if (s(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      std::optional<std::size_t> bad_row;
      for (std::size_t i = t + 1; i < s.rows() && !bad_row; ++i)
        for (std::size_t j = t + 1; j < s.cols(); ++j)
          if (s(i, j) % s(t, t) != 0) {
            bad_row = i;
            break;
          }
      if (!bad_row) break;
      s.add_row_multiple(t, *bad_row, Int(1));
      res.u.add_row_multiple(t, *bad_row, Int(1));
    }
    if (s(t, t) < 0) {
      s.negate_row(t);
      res.u.negate_row(t);
    }
  }
  return res;
}

IntMatrix integer_kernel(const IntMatrix& m) {
  HermiteResult hr = hermite_normal_form(m);
  IntMatrix k = hr.u.column_range(hr.rank, m.cols());
  return hermite_normal_form(k).h.column_range(0, k.cols());
}

std::optional<Int> FGAbelianGroup::order() const {
  if (free_rank) return std::nullopt;
  Int o = 1;
  for (const auto& d : torsion) o *= d;
  return o;
}

std::string FGAbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::string s;
  for (const auto& d : torsion) {
    if (!s.empty()) s += " + ";
    s += "Z/" + d.get_str();
  }
  if (free_rank) {
    if (!s.empty()) s += " + ";
    s += free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
  }
  return s;
}

FGAbelianGroup FGAbelianGroup::cyclic(const Int& n) { return from_cyclic_orders({n}); }

FGAbelianGroup FGAbelianGroup::free(std::size_t rank) {
  FGAbelianGroup g;
  g.free_rank = rank;
  return g;
}

FGAbelianGroup FGAbelianGroup::from_cyclic_orders(const IntVector& orders) {
  return Presentation(orders.size(), IntMatrix::diagonal(orders)).group();
}

FGAbelianGroup direct_sum(const FGAbelianGroup& a, const FGAbelianGroup& b) {
  IntVector orders;
  for (const auto& d : a.torsion) orders.push_back(d);
  for (const auto& d : b.torsion) orders.push_back(d);
  for (std::size_t i = 0; i < a.free_rank + b.free_rank; ++i) orders.push_back(0);
  return FGAbelianGroup::from_cyclic_orders(orders);
}

Presentation::Presentation(std::size_t gens, IntMatrix rels) : generators(gens), relations(std::move(rels)) {
  if (relations.rows() != generators) throw std::invalid_argument("presentation: relation length mismatch");
}

Presentation Presentation::free(std::size_t gens) { return Presentation(gens, IntMatrix(gens, 0)); }

FGAbelianGroup Presentation::group() const {
  FGAbelianGroup g;
  if (relations.cols() == 0) {
    g.free_rank = generators;
    return g;
  }
  IntVector d = smith_normal_form(relations).diagonal();
  std::size_t nonzero = 0;
  for (const auto& x : d) {
    if (x == 0) continue;
    ++nonzero;
    if (x != 1) g.torsion.push_back(x);
  }
  g.free_rank = generators - nonzero;
  return g;
}

bool Presentation::is_zero(const IntVector& v) const {
  return Lattice::from_generators(generators, relations).contains(v);
}

GroupHom::GroupHom(Presentation s, Presentation t, IntMatrix m)
    : source(std::move(s)), target(std::move(t)), matrix(std::move(m)) {
  if (matrix.rows() != target.generators || matrix.cols() != source.generators)
    throw std::invalid_argument("group hom: matrix shape mismatch");
}

bool GroupHom::respects_relations() const {
  Lattice rel = Lattice::from_generators(target.generators, target.relations);
  IntMatrix img = matrix * source.relations;
  for (std::size_t j = 0; j < img.cols(); ++j)
    if (!rel.contains(img.column(j))) return false;
  return true;
}

FGAbelianGroup cokernel(const GroupHom& f) {
  return Presentation(f.target.generators, IntMatrix::hstack(f.matrix, f.target.relations)).group();
}

KernelResult kernel(const GroupHom& f) {
  const std::size_t s = f.source.generators;
  IntMatrix ker = integer_kernel(IntMatrix::hstack(f.matrix, f.target.relations));
  IntMatrix proj(s, ker.cols());
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < ker.cols(); ++j) proj(i, j) = ker(i, j);
  Lattice k = Lattice::from_generators(s, proj);
  IntMatrix rel = k.coordinates_of(f.source.relations);
  Presentation p(k.rank(), rel);
  return {k.basis(), p, p.group()};
}

FGAbelianGroup image(const GroupHom& f) {
  KernelResult k = kernel(f);
  return Presentation(f.source.generators, k.lattice).group();
}

Lattice Lattice::from_generators(std::size_t ambient_rank, const IntMatrix& gens) {
  if (gens.rows() != ambient_rank) throw std::invalid_argument("lattice: generator length mismatch");
  Lattice l;
  l.ambient_rank_ = ambient_rank;
  HermiteResult hr = hermite_normal_form(gens);
  l.basis_ = hr.h.column_range(0, hr.rank);
  return l;
}

Lattice Lattice::full(std::size_t ambient_rank) {
  return from_generators(ambient_rank, IntMatrix::identity(ambient_rank));
}

Lattice Lattice::zero(std::size_t ambient_rank) { return from_generators(ambient_rank, IntMatrix(ambient_rank, 0)); }

std::optional<IntVector> Lattice::coordinates(const IntVector& v) const {
  if (v.size() != ambient_rank_) throw std::invalid_argument("lattice: vector length mismatch");
  const std::size_t k = basis_.cols();
  IntVector c(k, Int(0));
  IntVector rest = v;
  // Pivot row of column j is the first nonzero entry.
  for (std::size_t j = 0; j < k; ++j) {
    std::size_t r = 0;
    while (basis_(r, j) == 0) ++r;
    for (std::size_t i = 0; i < r; ++i)
      if (rest[i] != 0) return std::nullopt;
    if (rest[r] % basis_(r, j) != 0) return std::nullopt;
    c[j] = rest[r] / basis_(r, j);
    for (std::size_t i = r; i < ambient_rank_; ++i) rest[i] -= c[j] * basis_(i, j);
  }
  if (!bunpic::is_zero(rest)) return std::nullopt;
  return c;
}

bool Lattice::contains(const Lattice& other) const {
  for (std::size_t j = 0; j < other.rank(); ++j)
    if (!contains(other.basis_.column(j))) return false;
  return true;
}

IntMatrix Lattice::coordinates_of(const IntMatrix& m) const {
  IntMatrix out(rank(), m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    auto c = coordinates(m.column(j));
    if (!c) throw std::domain_error("vector " + to_string(m.column(j)) + " is not in the lattice");
    for (std::size_t i = 0; i < rank(); ++i) out(i, j) = (*c)[i];
  }
  return out;
}

FGAbelianGroup Lattice::quotient(const Lattice& sub) const { return quotient(sub.basis()); }

FGAbelianGroup Lattice::quotient(const IntMatrix& sub_generators) const {
  return Presentation(rank(), coordinates_of(sub_generators)).group();
}

Int Lattice::index_of(const Lattice& sub) const {
  FGAbelianGroup q = quotient(sub);
  auto o = q.order();
  return o ? *o : Int(0);
}

Lattice sum(const Lattice& a, const Lattice& b) {
  return Lattice::from_generators(a.ambient_rank(), IntMatrix::hstack(a.basis(), b.basis()));
}

Lattice intersection(const Lattice& a, const Lattice& b) {
  IntMatrix k = integer_kernel(IntMatrix::hstack(a.basis(), Int(-1) * b.basis()));
  IntMatrix coeff(a.rank(), k.cols());
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = 0; j < k.cols(); ++j) coeff(i, j) = k(i, j);
  return Lattice::from_generators(a.ambient_rank(), a.basis() * coeff);
}

Lattice Lattice::image(const IntMatrix& map) const {
  return from_generators(map.rows(), map * basis_);
}

Lattice solve_congruence_sublattice(std::size_t n, const std::vector<Congruence>& conditions) {
  // Unknowns (x, t): functional . x - modulus * t = 0, then project to x.
  const std::size_t c = conditions.size();
  IntMatrix m(c, n + c);
  for (std::size_t i = 0; i < c; ++i) {
    if (conditions[i].functional.size() != n) throw std::invalid_argument("congruence: functional length mismatch");
    if (conditions[i].modulus < 0) throw std::invalid_argument("congruence: negative modulus");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = conditions[i].functional[j];
    m(i, n + i) = -conditions[i].modulus;
  }
  IntMatrix k = integer_kernel(m);
  IntMatrix x(n, k.cols());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k.cols(); ++j) x(i, j) = k(i, j);
  return Lattice::from_generators(n, x);
}

Congruence rational_congruence(const RatVector& functional, const Int& modulus) {
  Int l = 1;
  for (const auto& q : functional) l = lcm(l, q.get_den());
  Congruence c;
  for (const auto& q : functional) c.functional.push_back(q.get_num() * (l / q.get_den()));
  c.modulus = modulus * l;
  return c;
}

Lattice saturation(const Lattice& l) {
  const std::size_t n = l.ambient_rank();
  if (l.rank() == 0) return Lattice::zero(n);
  IntMatrix annihilator = integer_kernel(l.basis().transpose());
  return Lattice::from_generators(n, integer_kernel(annihilator.transpose()));
}

Int divisibility(const IntVector& d, const Lattice& l) {
  auto c = l.coordinates(d);
  if (!c) throw std::domain_error("divisibility: vector not in lattice");
  return content(*c);
}

}  // namespace bunpic
