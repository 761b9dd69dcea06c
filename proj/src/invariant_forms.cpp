#include "bunpic/invariant_forms.hpp"

#include <deque>

namespace bunpic {

namespace {

IntMatrix form_from_lattice_coords(const FormLattice& base, const IntVector& c) {
  IntMatrix sum(base.ambient_rank, base.ambient_rank);
  for (std::size_t j = 0; j < c.size(); ++j)
    if (c[j] != 0) sum = sum + c[j] * base.basis_forms[j];
  return sum;
}

FormLattice sym2_lattice(std::size_t n, const Lattice& coords) {
  FormLattice f;
  f.ambient_rank = n;
  f.coordinate_system = FormCoordinates::Sym2;
  f.coordinates = coords;
  for (std::size_t j = 0; j < coords.rank(); ++j) f.basis_forms.push_back(gram_from_sym2(coords.basis().column(j), n));
  return f;
}

// Sub-lattice of a Sym2 form lattice cut out by parity of q(B) for each quadratic functional q.
FormLattice even_on(const FormLattice& base, const std::vector<IntVector>& vectors) {
  const std::size_t k = base.rank();
  std::vector<Congruence> conds;
  for (const auto& v : vectors) {
    Congruence c;
    c.modulus = 2;
    for (std::size_t j = 0; j < k; ++j) c.functional.push_back(bilinear(RatMatrix(base.basis_forms[j]), v, v).get_num());
    conds.push_back(c);
  }
  Lattice sub = solve_congruence_sublattice(k, conds);
  Lattice coords = Lattice::from_generators(base.coordinates.ambient_rank(), base.coordinates.basis() * sub.basis());
  return sym2_lattice(base.ambient_rank, coords);
}

RatVector column_of(const RatMatrix& m, std::size_t j) {
  RatVector v(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m(i, j);
  return v;
}

Rat rat_bilinear(const RatMatrix& g, const RatVector& x, const IntVector& y) {
  Rat s = 0;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < g.cols(); ++j)
      if (y[j] != 0) s += x[i] * g(i, j) * Rat(y[j]);
  }
  return s;
}

IntVector concat(const IntVector& a, const IntVector& b) {
  IntVector v = a;
  v.insert(v.end(), b.begin(), b.end());
  return v;
}

}  // namespace

bool BilinearForm::is_symmetric() const { return gram == gram.transpose(); }

bool BilinearForm::is_even() const {
  if (!is_integral()) return false;
  for (std::size_t i = 0; i < gram.rows(); ++i)
    if (gram(i, i).get_num() % 2 != 0) return false;
  return true;
}

BilinearForm basic_inner_product(const SimpleType& t) {
  IntMatrix a = cartan_matrix(t);
  const std::size_t r = a.rows();
  // Coroot lengths l_j with l_j A_ji = l_i A_ij, propagated over the Dynkin graph.
  std::vector<Rat> len(r, Rat(0));
  len[0] = 1;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t i = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < r; ++j) {
      if (i == j || a(i, j) == 0 || len[j] != 0) continue;
      len[j] = len[i] * Rat(a(i, j)) / Rat(a(j, i));
      queue.push_back(j);
    }
  }
  Rat shortest = len[0];
  for (const auto& l : len) shortest = l < shortest ? l : shortest;
  BilinearForm b{RatMatrix(r, r)};
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) b.gram(i, j) = (len[j] * 2 / shortest) * Rat(a(j, i)) / 2;
  return b;
}

std::size_t sym2_dimension(std::size_t n) { return n * (n + 1) / 2; }

IntVector sym2_coordinates(const IntMatrix& gram) {
  IntVector v;
  for (std::size_t i = 0; i < gram.rows(); ++i)
    for (std::size_t j = i; j < gram.cols(); ++j) v.push_back(gram(i, j));
  return v;
}

IntMatrix gram_from_sym2(const IntVector& coords, std::size_t n) {
  IntMatrix m(n, n);
  std::size_t p = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = coords[p++];
  return m;
}

FormLattice invariant_sym_forms(const ReductiveGroupData& g) {
  const std::size_t n = g.cochar_rank;
  const std::size_t dim = sym2_dimension(n);
  // Rows: coordinates of s^T B s - B for every simple reflection s.
  std::vector<IntMatrix> reflections;
  for (std::size_t i = 0; i < g.semisimple_rank(); ++i) reflections.push_back(g.reflection(i));
  IntMatrix constraints(reflections.size() * dim, dim);
  for (std::size_t p = 0; p < dim; ++p) {
    IntVector unit(dim, Int(0));
    unit[p] = 1;
    IntMatrix b = gram_from_sym2(unit, n);
    for (std::size_t r = 0; r < reflections.size(); ++r) {
      const IntMatrix& s = reflections[r];
      IntVector diff = sym2_coordinates(s.transpose() * b * s - b);
      for (std::size_t q = 0; q < dim; ++q) constraints(r * dim + q, p) = diff[q];
    }
  }
  Lattice coords = Lattice::from_generators(dim, integer_kernel(constraints));
  return sym2_lattice(n, coords);
}

FormLattice even_invariant_forms(const ReductiveGroupData& g) {
  std::vector<IntVector> basis;
  for (std::size_t i = 0; i < g.cochar_rank; ++i) {
    IntVector e(g.cochar_rank, Int(0));
    e[i] = 1;
    basis.push_back(e);
  }
  return even_on(invariant_sym_forms(g), basis);
}

FormLattice d_even_forms(const ReductiveGroupData& g) {
  CrossDiagram c = cross_diagram(g);
  return even_on(invariant_sym_forms(g), c.derived.basis().columns());
}

std::vector<RatMatrix> basic_forms_coweight(const ReductiveGroupData& g) {
  const std::size_t r = g.semisimple_rank();
  std::vector<RatMatrix> out;
  if (r == 0) return out;
  RatMatrix ainv = RatMatrix(g.cartan()).inverse();
  for (const auto& [b, e] : g.factor_blocks()) {
    BilinearForm basic = basic_inner_product(g.factor_types[out.size()]);
    RatMatrix block(r, r);
    for (std::size_t i = b; i < e; ++i)
      for (std::size_t j = b; j < e; ++j) block(i, j) = basic.gram(i - b, j - b);
    out.push_back(ainv.transpose() * block * ainv);
  }
  return out;
}

RatMatrix basic_combination_on_torus(const ReductiveGroupData& g, const IntVector& m) {
  const std::size_t r = g.semisimple_rank();
  RatMatrix sum(r, r);
  auto forms = basic_forms_coweight(g);
  for (std::size_t k = 0; k < forms.size(); ++k)
    if (m[k] != 0) sum = sum + Rat(m[k]) * forms[k];
  RatMatrix roots(g.simple_roots);
  return roots * sum * roots.transpose();
}

FormLattice conditional_form_lattice(const ReductiveGroupData& g) {
  const std::size_t s = g.factor_count();
  CrossDiagram c = cross_diagram(g);
  auto forms = basic_forms_coweight(g);
  const IntMatrix& u = c.derived_cw;
  const IntMatrix& v = c.ss.basis();
  std::vector<Congruence> conds;
  for (std::size_t a = 0; a < u.cols(); ++a) {
    IntVector ua = u.column(a);
    RatVector q;
    for (const auto& f : forms) q.push_back(bilinear(f, ua, ua));
    conds.push_back(rational_congruence(q, Int(2)));
    for (std::size_t b = 0; b < v.cols(); ++b) {
      IntVector vb = v.column(b);
      RatVector p;
      for (const auto& f : forms) p.push_back(bilinear(f, ua, vb));
      conds.push_back(rational_congruence(p, Int(1)));
    }
  }
  FormLattice out;
  out.ambient_rank = u.cols();
  out.coordinate_system = FormCoordinates::BasicForms;
  out.coordinates = solve_congruence_sublattice(s, conds);
  RatMatrix ur(u);
  for (std::size_t j = 0; j < out.coordinates.rank(); ++j) {
    IntVector m = out.coordinates.basis().column(j);
    RatMatrix sum(u.rows(), u.rows());
    for (std::size_t k = 0; k < s; ++k)
      if (m[k] != 0) sum = sum + Rat(m[k]) * forms[k];
    out.basis_forms.push_back((ur.transpose() * sum * ur).to_integral());
  }
  return out;
}

RatVector evaluation_on_derived(const ReductiveGroupData& g, const IntVector& d, const IntVector& m) {
  CrossDiagram c = cross_diagram(g);
  auto forms = basic_forms_coweight(g);
  IntVector dss = c.ss_map.apply(d);
  RatVector out;
  for (std::size_t a = 0; a < c.derived_cw.cols(); ++a) {
    IntVector ua = c.derived_cw.column(a);
    Rat x = 0;
    for (std::size_t k = 0; k < forms.size(); ++k)
      if (m[k] != 0) x += Rat(m[k]) * bilinear(forms[k], dss, ua);
    out.push_back(x);
  }
  return out;
}

NSGroup ns_bun(const ReductiveGroupData& g, const IntVector& d) {
  const std::size_t n = g.cochar_rank;
  const std::size_t r = g.semisimple_rank();
  CrossDiagram c = cross_diagram(g);
  FormLattice f = d_even_forms(g);
  const std::size_t k = f.rank();
  const IntMatrix& s = c.derived.basis();
  // Source: (chi, coefficients) modulo roots in the chi block.
  IntMatrix src_rel(n + k, r);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < r; ++j) src_rel(i, j) = g.simple_roots(i, j);
  // Target: Lambda*(T_D) on the dual basis of s, modulo restricted roots.
  Presentation target(r, c.derived_cw.transpose());
  IntMatrix map(r, n + k);
  IntMatrix st = s.transpose();
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t i = 0; i < n; ++i) map(a, i) = st(a, i);
  for (std::size_t j = 0; j < k; ++j) {
    IntVector bd = f.basis_forms[j].apply(d);
    IntVector vals = st.apply(bd);
    for (std::size_t a = 0; a < r; ++a) map(a, n + j) = -vals[a];
  }
  GroupHom h(Presentation(n + k, src_rel), target, map);
  KernelResult kr = kernel(h);
  NSGroup out;
  out.coordinates = "character (mod roots) + D-even form coefficients";
  out.chi_rank = n;
  out.form_rank = k;
  out.lattice = Lattice::from_generators(n + k, kr.lattice);
  out.presentation = kr.presentation;
  out.group = kr.group;
  for (std::size_t j = 0; j < kr.lattice.cols(); ++j) {
    IntVector v = kr.lattice.column(j);
    NSGenerator gen;
    gen.chi.assign(v.begin(), v.begin() + n);
    gen.form_coords.assign(v.begin() + n, v.end());
    IntMatrix fm(n, n);
    for (std::size_t i = 0; i < k; ++i)
      if (gen.form_coords[i] != 0) fm = fm + gen.form_coords[i] * f.basis_forms[i];
    gen.form = RatMatrix(fm);
    out.generators.push_back(gen);
  }
  return out;
}

NSGroup ns_bun(const ReductiveGroupData& g, const Pi1Element& delta) { return ns_bun(g, generic_lift(g, delta)); }

NSGroup ns_rigidified(const ReductiveGroupData& g, const IntVector& d) {
  const std::size_t n = g.cochar_rank;
  const std::size_t r = g.semisimple_rank();
  CrossDiagram c = cross_diagram(g);
  FormLattice f = d_even_forms(g);
  const std::size_t k = f.rank();
  IntMatrix st = c.derived.basis().transpose();
  IntMatrix map(r, k);
  for (std::size_t j = 0; j < k; ++j) {
    IntVector vals = st.apply(f.basis_forms[j].apply(d));
    for (std::size_t a = 0; a < r; ++a) map(a, j) = vals[a];
  }
  GroupHom h(Presentation::free(k), Presentation(r, c.derived_cw.transpose()), map);
  KernelResult kr = kernel(h);
  NSGroup out;
  out.coordinates = "D-even form coefficients";
  out.form_rank = k;
  out.lattice = Lattice::from_generators(k, kr.lattice);
  out.presentation = kr.presentation;
  out.group = kr.group;
  for (std::size_t j = 0; j < kr.lattice.cols(); ++j) {
    NSGenerator gen;
    gen.form_coords = kr.lattice.column(j);
    IntMatrix fm(n, n);
    for (std::size_t i = 0; i < k; ++i)
      if (gen.form_coords[i] != 0) fm = fm + gen.form_coords[i] * f.basis_forms[i];
    gen.form = RatMatrix(fm);
    out.generators.push_back(gen);
  }
  return out;
}

NSGroup ns_rigidified(const ReductiveGroupData& g, const Pi1Element& delta) {
  return ns_rigidified(g, generic_lift(g, delta));
}

NSGroup ns_bun_p1(const ReductiveGroupData& g, const IntVector& d) {
  const std::size_t n = g.cochar_rank;
  const std::size_t s = g.factor_count();
  CrossDiagram c = cross_diagram(g);
  auto forms = basic_forms_coweight(g);
  IntVector dss = c.ss_map.apply(d);
  const IntMatrix& sb = c.derived.basis();
  // chi(s_a) = sum_k m_k b_k(d^ss, u_a) for every basis vector of Lambda(T_D).
  IntMatrix eq(sb.cols(), n + s);
  for (std::size_t a = 0; a < sb.cols(); ++a) {
    IntVector ua = c.derived_cw.column(a);
    RatVector row;
    for (std::size_t i = 0; i < n; ++i) row.push_back(Rat(sb(i, a)));
    for (std::size_t k = 0; k < s; ++k) row.push_back(-bilinear(forms[k], dss, ua));
    Congruence cl = rational_congruence(row, Int(0));
    for (std::size_t j = 0; j < n + s; ++j) eq(a, j) = cl.functional[j];
  }
  NSGroup out;
  out.coordinates = "character chi = l + b(d^ss, -) + basic-form multiplicities";
  out.chi_rank = n;
  out.form_rank = s;
  out.lattice = Lattice::from_generators(n + s, integer_kernel(eq));
  out.presentation = Presentation::free(out.lattice.rank());
  out.group = out.presentation.group();
  for (std::size_t j = 0; j < out.lattice.rank(); ++j) {
    IntVector v = out.lattice.basis().column(j);
    NSGenerator gen;
    gen.chi.assign(v.begin(), v.begin() + n);
    gen.form_coords.assign(v.begin() + n, v.end());
    gen.form = basic_combination_on_torus(g, gen.form_coords);
    out.generators.push_back(gen);
  }
  return out;
}

NSGroup ns_bun_p1(const ReductiveGroupData& g, const Pi1Element& delta) { return ns_bun_p1(g, generic_lift(g, delta)); }

}  // namespace bunpic
