#include "bunpic/picard.hpp"

namespace bunpic {

namespace {

Int dot(const IntVector& a, const IntVector& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void check_length(const IntVector& v, std::size_t n, const char* what) {
  if (v.size() != n)
    throw InvalidSpec(std::string(what) + " has length " + std::to_string(v.size()) + ", expected " + std::to_string(n));
}

void add_scaled(IntVector& acc, const IntVector& v, const Int& k) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += k * v[i];
}

IntMatrix outer_sym(const IntVector& a, const IntVector& b) {
  IntMatrix m(a.size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) m(i, j) = a[i] * b[j] + b[i] * a[j];
  return m;
}

FGAbelianGroup elementary_two_group(std::size_t n) {
  return FGAbelianGroup::from_cyclic_orders(IntVector(n, Int(2)));
}

// Rows of m beyond the first `skip`, as a lattice of generators.
Lattice project_tail(const Lattice& l, std::size_t skip) {
  const IntMatrix& b = l.basis();
  IntMatrix p(b.rows() - skip, b.cols());
  for (std::size_t i = skip; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) p(i - skip, j) = b(i, j);
  return Lattice::from_generators(b.rows() - skip, p);
}

Lattice project_head(const Lattice& l, std::size_t keep) {
  const IntMatrix& b = l.basis();
  IntMatrix p(keep, b.cols());
  for (std::size_t i = 0; i < keep; ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) p(i, j) = b(i, j);
  return Lattice::from_generators(keep, p);
}

IntVector unit(std::size_t n, std::size_t i) {
  IntVector e(n, Int(0));
  e[i] = 1;
  return e;
}

}  // namespace

// Modulo delta | 2g - 2 the cross term 2(g - 1) b(x, y) vanishes, so the
// condition is additive and basis vectors suffice; pairs are kept as a check.
std::vector<IntVector> quadratic_test_points(std::size_t n, long delta) {
  std::vector<IntVector> pts;
  for (std::size_t i = 0; i < n; ++i) pts.push_back(unit(n, i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      IntVector x = unit(n, i);
      x[j] = 1;
      pts.push_back(x);
    }
  if (delta == 0)
    for (std::size_t i = 0; i < n; ++i) {
      IntVector x = unit(n, i);
      x[i] = 2;
      pts.push_back(x);
    }
  return pts;
}

IntVector taut_weight(const IntVector& d, int genus, const TautClass& c) {
  check_length(d, c.rank, "cocharacter");
  IntVector w(c.rank, Int(0));
  for (const auto& t : c.det_terms) {
    check_length(t.chi, c.rank, "character");
    add_scaled(w, t.chi, t.mult * (dot(t.chi, d) + t.deg_m + 1 - genus));
  }
  for (const auto& t : c.pair_terms) {
    check_length(t.chi, c.rank, "character");
    check_length(t.mu, c.rank, "character");
    add_scaled(w, t.chi, t.mult * (dot(t.mu, d) + t.deg_n));
    add_scaled(w, t.mu, t.mult * (dot(t.chi, d) + t.deg_m));
  }
  return w;
}

IntMatrix taut_gamma(const TautClass& c, int genus) {
  if (genus == 0) throw WrongGenus("gamma is defined for positive genus only");
  IntMatrix g(c.rank, c.rank);
  for (const auto& t : c.det_terms) {
    check_length(t.chi, c.rank, "character");
    IntMatrix o(c.rank, c.rank);
    for (std::size_t i = 0; i < c.rank; ++i)
      for (std::size_t j = 0; j < c.rank; ++j) o(i, j) = t.chi[i] * t.chi[j];
    g = g + t.mult * o;
  }
  for (const auto& t : c.pair_terms) g = g + t.mult * outer_sym(t.chi, t.mu);
  return g;
}

std::vector<int> taut_rho(const TautClass& c, int genus) {
  if (genus == 0) throw WrongGenus("rho is defined for positive genus only");
  std::vector<int> out(c.rank, 0);
  for (std::size_t i = 0; i < c.rank; ++i) {
    Int s = 0;
    for (const auto& t : c.det_terms) s += t.mult * t.chi[i] * t.chi[i];
    for (const auto& t : c.pair_terms) s += t.mult * 2 * t.chi[i] * t.mu[i];
    out[i] = mod_floor(s, Int(2)) == 0 ? 0 : 1;
  }
  return out;
}

TautInvariants taut_invariants(const IntVector& d, int genus, const TautClass& c) {
  return {taut_weight(d, genus, c), taut_gamma(c, genus), taut_rho(c, genus)};
}

std::pair<TautClass, TautClass> deligne_pairing_relation(const IntVector& chi, const IntVector& mu, const Int& deg_m,
                                                         const Int& deg_n, RelationVariant v) {
  const std::size_t n = chi.size();
  check_length(mu, n, "character");
  TautClass lhs{n, {}, {{chi, mu, deg_m, deg_n, 1}}};
  const Int m = v == RelationVariant::ShiftDegree ? deg_m + 1 : deg_m;
  IntVector sum(n);
  for (std::size_t i = 0; i < n; ++i) sum[i] = chi[i] + mu[i];
  TautClass rhs{n, {}, {}};
  if (v != RelationVariant::DropSum) rhs.det_terms.push_back({sum, m + deg_n, 1});
  rhs.det_terms.push_back({chi, m, -1});
  rhs.det_terms.push_back({mu, deg_n, -1});
  if (v != RelationVariant::DropConstant) rhs.det_terms.push_back({IntVector(n, Int(0)), 0, 1});
  return {lhs, rhs};
}

bool deligne_pairing_relation_check(const IntVector& chi, const IntVector& mu, const Int& deg_m, const Int& deg_n,
                                    const IntVector& d, int genus, RelationVariant v) {
  auto [lhs, rhs] = deligne_pairing_relation(chi, mu, deg_m, deg_n, v);
  return taut_invariants(d, genus, lhs) == taut_invariants(d, genus, rhs);
}

LatticeImage make_lattice_image(std::string ambient, const Lattice& ambient_lattice, const IntMatrix& relations,
                                const Lattice& image) {
  LatticeImage li;
  li.ambient = std::move(ambient);
  li.ambient_lattice = ambient_lattice;
  li.relations = relations.cols() ? relations : IntMatrix(ambient_lattice.ambient_rank(), 0);
  Lattice rel = Lattice::from_generators(ambient_lattice.ambient_rank(), li.relations);
  li.image = sum(image, rel);
  li.ambient_group = ambient_lattice.quotient(rel);
  li.image_group = li.image.quotient(rel);
  li.cokernel = ambient_lattice.quotient(li.image);
  return li;
}

PicardReport torus_picard_genus0(std::size_t rank, const IntVector& d, const CurveFamily& f) {
  if (f.genus != 0) throw WrongGenus("torus_picard_genus0 requires genus 0");
  check_length(d, rank, "cocharacter");
  Lattice image = f.zariski_locally_trivial ? Lattice::full(rank)
                                            : solve_congruence_sublattice(rank, {{d, Int(2)}});
  PicardReport r;
  r.kind = "torus_genus0";
  r.kernel_summand = "0 (weight map injective on RPic)";
  r.image = make_lattice_image("Lambda*(T)", Lattice::full(rank), IntMatrix(rank, 0), image);
  r.cokernel_of = "weight map RPic Bun_T -> Lambda*(T)";
  r.cokernel = r.image->cokernel;
  r.rows.push_back({"0", "image of the weight map in Lambda*(T)", r.image->image_group, false});
  r.tautological_complete = true;
  r.notes.push_back(f.zariski_locally_trivial ? "Zariski locally trivial: weight map onto Lambda*(T)"
                                              : "not Zariski locally trivial: image is {chi : chi(d) even}");
  return r;
}

std::vector<Congruence> torus_image_conditions(std::size_t n, const IntVector& d, int genus, long delta) {
  check_length(d, n, "cocharacter");
  const std::size_t dim = sym2_dimension(n);
  const Int gm1 = genus - 1;
  std::vector<Congruence> out;
  for (const auto& x : quadratic_test_points(n, delta)) {
    Congruence c;
    c.modulus = delta;
    c.functional.assign(n + dim, Int(0));
    for (std::size_t i = 0; i < n; ++i) c.functional[i] = x[i];
    std::size_t p = n;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j, ++p) {
        if (i == j)
          c.functional[p] = -d[i] * x[i] + gm1 * x[i] * x[i];
        else
          c.functional[p] = -(d[i] * x[j] + d[j] * x[i]) + 2 * gm1 * x[i] * x[j];
      }
    out.push_back(c);
  }
  return out;
}

PicardReport torus_picard(std::size_t n, const IntVector& d, const CurveFamily& f) {
  if (f.genus <= 0) throw WrongGenus("torus_picard requires positive genus");
  const std::size_t dim = sym2_dimension(n);
  Lattice image = solve_congruence_sublattice(n + dim, torus_image_conditions(n, d, f.genus, f.delta));
  PicardReport r;
  r.kind = "torus";
  r.hypotheses = hypothesis_check(f, torus_group(n), Gate::TautologicalComplete);
  r.tautological_complete = r.hypotheses->satisfied;
  r.kernel_summand = "Lambda*(T) (x) RPic0(C/S)";
  r.image = make_lattice_image("Lambda*(T) + Bil^s(Lambda(T)) [chi coordinates, then Sym2 Gram entries]",
                               Lattice::full(n + dim), IntMatrix(n + dim, 0), image);
  r.cokernel_of = "w + gamma into Lambda*(T) + Bil^s(Lambda(T))";
  r.cokernel = r.image->cokernel;
  r.rows.push_back({"Lambda*(T) (x) RPic0(C/S)", "image of w + gamma", r.image->image_group, false});
  r.rows.push_back({"Lambda*(T) (x) RPic(C/S)", "Bil^s(Lambda(T))", FGAbelianGroup::free(dim), true});
  r.rows.push_back({"Lambda*(T) (x) RPic(C/S) + Sym2 Lambda*(T)", "Hom(Lambda(T), Z/2)", elementary_two_group(n), true});
  if (f.delta == 0) r.notes.push_back("delta(C/S) = 0: divisibility conditions are exact equalities");
  if (!r.hypotheses->satisfied) r.notes.push_back("Pic may be larger than the tautological subgroup");
  return r;
}

Lattice ns_image_lattice(const ReductiveGroupData& g, const IntVector& d, const CurveFamily& f, const NSGroup& ns) {
  const std::size_t n = g.cochar_rank;
  const std::size_t r = g.semisimple_rank();
  const std::size_t k = ns.form_rank;
  FormLattice forms = d_even_forms(g);
  CrossDiagram c = cross_diagram(g);
  const IntMatrix& s = c.derived.basis();
  const std::size_t vars = n + k + r;
  std::vector<IntVector> bd;
  for (const auto& b : forms.basis_forms) bd.push_back(b.apply(d));
  std::vector<Congruence> conds;
  // psi = chi - b(d, -) - roots.z vanishes on Lambda(T_D).
  for (std::size_t a = 0; a < s.cols(); ++a) {
    IntVector sa = s.column(a);
    Congruence e;
    e.modulus = 0;
    e.functional.assign(vars, Int(0));
    for (std::size_t i = 0; i < n; ++i) e.functional[i] = sa[i];
    for (std::size_t j = 0; j < k; ++j) e.functional[n + j] = -dot(bd[j], sa);
    for (std::size_t l = 0; l < r; ++l) e.functional[n + k + l] = -c.derived_cw(l, a);
    conds.push_back(e);
  }
  // delta | psi(x) + (g - 1) b(x, x).
  const Int gm1 = f.genus - 1;
  IntMatrix rt = g.simple_roots.transpose();
  for (const auto& x : quadratic_test_points(n, f.delta)) {
    Congruence e;
    e.modulus = f.delta;
    e.functional.assign(vars, Int(0));
    for (std::size_t i = 0; i < n; ++i) e.functional[i] = x[i];
    for (std::size_t j = 0; j < k; ++j)
      e.functional[n + j] = -dot(bd[j], x) + gm1 * dot(x, forms.basis_forms[j].apply(x));
    IntVector rx = rt.apply(x);
    for (std::size_t l = 0; l < r; ++l) e.functional[n + k + l] = -rx[l];
    conds.push_back(e);
  }
  Lattice sol = solve_congruence_sublattice(vars, conds);
  Lattice proj = project_head(sol, n + k);
  IntMatrix rel(n + k, r);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < r; ++j) rel(i, j) = g.simple_roots(i, j);
  return sum(proj, Lattice::from_generators(n + k, rel));
}

Genus0Picard genus0_picard(const ReductiveGroupData& g, const IntVector& d, const CurveFamily& f) {
  if (f.genus != 0) throw WrongGenus("genus0_picard requires genus 0");
  const std::size_t n = g.cochar_rank;
  const std::size_t s = g.factor_count();
  check_length(d, n, "cocharacter");
  Genus0Picard out;
  out.ns = ns_bun_p1(g, d);
  // chi(d) = l(delta^ab) + b(d^ss, d^ss) for chi = l + b(d^ss, -).
  IntVector parity(n + s, Int(0));
  for (std::size_t i = 0; i < n; ++i) parity[i] = d[i];
  Lattice even = solve_congruence_sublattice(n + s, {{parity, Int(2)}});
  out.image = f.zariski_locally_trivial ? out.ns.lattice : intersection(out.ns.lattice, even);
  out.index = out.ns.lattice.index_of(out.image);
  // Q = {m : b_m(d^ss, -) integral on Lambda(T_D)}.
  CrossDiagram c = cross_diagram(g);
  auto forms = basic_forms_coweight(g);
  IntVector dss = c.ss_map.apply(d);
  std::vector<Congruence> conds;
  for (std::size_t a = 0; a < c.derived_cw.cols(); ++a) {
    IntVector ua = c.derived_cw.column(a);
    RatVector q;
    for (const auto& fk : forms) q.push_back(bilinear(fk, dss, ua));
    conds.push_back(rational_congruence(q, Int(1)));
  }
  out.q_lattice = solve_congruence_sublattice(s, conds);
  out.p_image = project_tail(out.image, n);
  out.p_cokernel = out.q_lattice.quotient(out.p_image);
  IntMatrix chi_only(n + s, n);
  for (std::size_t i = 0; i < n; ++i) chi_only(i, i) = 1;
  out.ab_kernel = intersection(out.image, Lattice::from_generators(n + s, chi_only));
  return out;
}

PicardReport reductive_picard(const ReductiveGroupData& g, const Pi1Element& delta, const CurveFamily& f) {
  return reductive_picard(g, generic_lift(g, delta), f);
}

PicardReport reductive_picard(const ReductiveGroupData& g, const IntVector& d, const CurveFamily& f) {
  check_length(d, g.cochar_rank, "cocharacter");
  PicardReport r;
  const bool dsc = derived_simply_connected(g);
  if (f.genus == 0) {
    Genus0Picard p = genus0_picard(g, d, f);
    r.kind = "reductive_genus0";
    r.kernel_summand = "0 (c injective on RPic)";
    r.image = make_lattice_image("NS Bun_G(P^1) [chi coordinates, then basic-form multiplicities]", p.ns.lattice,
                                 IntMatrix(g.cochar_rank + g.factor_count(), 0), p.image);
    r.cokernel_of = "c: RPic Bun_G -> NS Bun_G(P^1)";
    r.cokernel = r.image->cokernel;
    r.rows.push_back({"Pic Bun_{G^ab}", "forms b with b(d^ss, -) integral on Lambda(T_D)",
                      FGAbelianGroup::free(p.q_lattice.rank()), p.p_cokernel.is_trivial()});
    r.splitting_known = dsc;
    r.notes.push_back("cokernel of p: " + p.p_cokernel.to_string());
    for (const auto& gen : p.ns.generators)
      if (gen.form.is_integral()) r.generator_forms.push_back(gen.form.to_integral());
    return r;
  }
  r.hypotheses = hypothesis_check(f, g, Gate::Pushout);
  if (!r.hypotheses->satisfied) throw HypothesisNotSatisfied(*r.hypotheses);
  FormLattice cond = conditional_form_lattice(g);
  r.kind = "reductive";
  r.kernel_summand = "Pic Bun_{G^ab}";
  r.cokernel_of = "ab pullback Pic Bun_{G^ab} -> Pic Bun_G";
  r.cokernel = FGAbelianGroup::free(cond.rank());
  r.splitting_known = dsc;
  r.rows.push_back({"Pic Bun_{G^ab}", "Bil^{s,ev}(Lambda(T_D) | Lambda(T_ss))^W", r.cokernel, true});
  if (g.is_semisimple()) {
    FormLattice ev = even_invariant_forms(g);
    r.generator_forms = ev.basis_forms;
    r.notes.push_back("semisimple: transgression (Sym2 Lambda*(T_G))^W -> Pic Bun_G is an isomorphism");
  } else {
    r.generator_forms = cond.basis_forms;
  }
  HypothesisResult ns_gate = hypothesis_check(f, g, Gate::NsImage);
  if (ns_gate.satisfied) {
    NSGroup ns = ns_bun(g, d);
    IntMatrix rel(g.cochar_rank + ns.form_rank, g.semisimple_rank());
    for (std::size_t i = 0; i < g.cochar_rank; ++i)
      for (std::size_t j = 0; j < g.semisimple_rank(); ++j) rel(i, j) = g.simple_roots(i, j);
    r.image = make_lattice_image("NS(Bun_G) [chi coordinates, then D-even form coordinates]", ns.lattice, rel,
                                 ns_image_lattice(g, d, f, ns));
    r.rows.push_back({"Lambda*(G^ab) (x) RPic0(C/S)", "image of omega + gamma in NS(Bun_G)", r.image->image_group,
                      false});
  } else {
    r.notes.push_back("NS-level image not computed: " + std::string(HypothesisNotSatisfied(ns_gate).what()));
  }
  if (f.delta == 0) r.notes.push_back("delta(C/S) = 0: divisibility conditions are exact equalities");
  return r;
}

}  // namespace bunpic
