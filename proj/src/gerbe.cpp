#include "bunpic/gerbe.hpp"

namespace bunpic {

namespace {

Int dot(const IntVector& a, const IntVector& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVector to_integral(const RatVector& v, const char* what) {
  IntVector out;
  for (const auto& x : v) {
    if (x.get_den() != 1) throw std::logic_error(std::string(what) + ": non-integral value " + x.get_str());
    out.push_back(x.get_num());
  }
  return out;
}

std::optional<Int> order_of(const FGAbelianGroup& g) { return g.order(); }

IntMatrix form_sum(const FormLattice& forms, const IntVector& coeffs, std::size_t n) {
  IntMatrix b(n, n);
  for (std::size_t j = 0; j < coeffs.size(); ++j)
    if (coeffs[j] != 0) b = b + coeffs[j] * forms.basis_forms[j];
  return b;
}

Presentation hom_to_cyclic(std::size_t rank, long delta) {
  return Presentation(rank, IntMatrix::diagonal(IntVector(rank, Int(delta))));
}

std::optional<Int> product_order(const std::optional<Int>& a, const std::optional<Int>& b) {
  if (!a || !b) return std::nullopt;
  return *a * *b;
}

}  // namespace

IntVector preimage_under(const IntMatrix& m, const IntVector& w) {
  if (w.size() != m.rows()) throw InvalidSpec("preimage: length mismatch");
  HermiteResult hr = hermite_normal_form(m);
  IntVector c(m.cols(), Int(0));
  for (std::size_t j = 0; j < hr.rank; ++j) {
    const std::size_t p = hr.pivot_rows[j];
    Int rest = w[p];
    for (std::size_t i = 0; i < j; ++i) rest -= hr.h(p, i) * c[i];
    if (mod_floor(rest, hr.h(p, j)) != 0) throw InvalidSpec("preimage: vector not in the image");
    c[j] = rest / hr.h(p, j);
  }
  if (hr.h.apply(c) != w) throw InvalidSpec("preimage: vector not in the image");
  return hr.u.apply(c);
}

IntVector lift_adjoint_class(const ReductiveGroupData& g, const IntVector& adjoint_coords) {
  FundamentalGroup ad = fundamental_group(adjoint_quotient(g));
  if (adjoint_coords.size() != ad.generator_count())
    throw InvalidSpec("adjoint class has " + std::to_string(adjoint_coords.size()) + " coordinates, expected " +
                      std::to_string(ad.generator_count()));
  return preimage_under(cross_diagram(g).ss_map, ad.lift(adjoint_coords));
}

GroupHom evaluation_map(const ReductiveGroupData& g, const IntVector& d) {
  if (d.size() != g.cochar_rank) throw InvalidSpec("cocharacter length mismatch");
  CrossDiagram c = cross_diagram(g);
  FormLattice cond = conditional_form_lattice(g);
  const std::size_t r = c.derived_cw.cols();
  IntMatrix map(r, cond.rank());
  for (std::size_t j = 0; j < cond.rank(); ++j) {
    IntVector v = to_integral(evaluation_on_derived(g, d, cond.coordinates.basis().column(j)), "evaluation");
    for (std::size_t a = 0; a < r; ++a) map(a, j) = v[a];
  }
  return GroupHom(Presentation::free(cond.rank()), Presentation(r, c.derived_cw.transpose()), map);
}

FGAbelianGroup evaluation_cokernel(const ReductiveGroupData& g, const IntVector& d) {
  return cokernel(evaluation_map(g, d));
}

FGAbelianGroup evaluation_cokernel(const ReductiveGroupData& g, const Pi1Element& delta) {
  return evaluation_cokernel(g, generic_lift(g, delta));
}

FGAbelianGroup cover_evaluation_cokernel(const ReductiveGroupData& g, const IntVector& d) {
  if (d.size() != g.cochar_rank) throw InvalidSpec("cocharacter length mismatch");
  CrossDiagram c = cross_diagram(g);
  IntMatrix a = g.cartan();
  auto forms = basic_forms_coweight(g);
  IntVector dss = c.ss_map.apply(d);
  const std::size_t r = a.rows();
  IntMatrix map(r, forms.size());
  for (std::size_t k = 0; k < forms.size(); ++k)
    for (std::size_t j = 0; j < r; ++j) {
      Rat v = bilinear(forms[k], dss, a.column(j));
      map(j, k) = to_integral({v}, "cover evaluation")[0];
    }
  return cokernel(GroupHom(Presentation::free(forms.size()), Presentation(r, a.transpose()), map));
}

HatEvaluation hat_evaluation(const ReductiveGroupData& g, const IntVector& d) {
  if (d.size() != g.cochar_rank) throw InvalidSpec("cocharacter length mismatch");
  CrossDiagram c = cross_diagram(g);
  auto forms = basic_forms_coweight(g);
  IntVector dss = c.ss_map.apply(d);
  const std::size_t r = c.derived_cw.cols();
  std::vector<Congruence> conds;
  for (std::size_t a = 0; a < r; ++a) {
    RatVector q;
    for (const auto& fk : forms) q.push_back(bilinear(fk, dss, c.derived_cw.column(a)));
    conds.push_back(rational_congruence(q, Int(1)));
  }
  Lattice dom = solve_congruence_sublattice(forms.size(), conds);
  IntMatrix map(r, dom.rank());
  for (std::size_t j = 0; j < dom.rank(); ++j) {
    IntVector v = to_integral(evaluation_on_derived(g, d, dom.basis().column(j)), "hat evaluation");
    for (std::size_t a = 0; a < r; ++a) map(a, j) = v[a];
  }
  return {dom, GroupHom(Presentation::free(dom.rank()), Presentation(r, c.derived_cw.transpose()), map)};
}

IntMatrix dbar_matrix(const ReductiveGroupData& g, const IntVector& d, const CurveFamily& f, const NSGroup& ns_rig) {
  const std::size_t n = g.cochar_rank;
  CrossDiagram c = cross_diagram(g);
  FormLattice forms = d_even_forms(g);
  const IntMatrix& sect = c.ab_section;
  RatMatrix ut_inv = RatMatrix(c.derived_cw.transpose()).inverse();
  IntMatrix rt = g.simple_roots.transpose();
  const IntMatrix& nb = ns_rig.lattice.basis();
  IntMatrix out(sect.cols(), nb.cols());
  for (std::size_t col = 0; col < nb.cols(); ++col) {
    IntMatrix b = form_sum(forms, nb.column(col), n);
    IntVector bd = b.apply(d);
    // Representative of b(d, -) modulo roots that vanishes on Lambda(T_D).
    IntVector vals = c.derived.basis().transpose().apply(bd);
    RatVector zq(vals.size());
    for (std::size_t i = 0; i < vals.size(); ++i)
      for (std::size_t j = 0; j < vals.size(); ++j) zq[i] -= ut_inv(i, j) * vals[j];
    IntVector z = to_integral(zq, "root correction");
    for (std::size_t j = 0; j < sect.cols(); ++j) {
      IntVector x = sect.column(j);
      out(j, col) = dot(bd, x) + dot(z, rt.apply(x)) + (1 - f.genus) * dot(x, b.apply(x));
    }
  }
  return out;
}

IntMatrix torus_dbar_basis_matrix(std::size_t n, const Int& div, int genus) {
  std::vector<IntVector> cols;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector v(n, Int(0));
    v[i] = i == 0 ? div + 1 - genus : Int(1 - genus);
    cols.push_back(v);
  }
  for (std::size_t i = 1; i < n; ++i) {
    IntVector v(n, Int(0));
    v[i] = div;
    cols.push_back(v);
  }
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) cols.push_back(IntVector(n, Int(0)));
  return IntMatrix::from_columns(n, cols);
}

FGAbelianGroup torus_weight_cokernel_from_basis(std::size_t n, const Int& div, int genus, long delta) {
  return Presentation(n, IntMatrix::hstack(torus_dbar_basis_matrix(n, div, genus), hom_to_cyclic(n, delta).relations))
      .group();
}

FGAbelianGroup closed_form_weight_cokernel(std::size_t n, const Int& div, int genus, long delta) {
  IntVector orders;
  if (n == 0) return {};
  orders.push_back(gcd(Int(delta), div + 1 - genus));
  for (std::size_t i = 1; i < n; ++i) orders.push_back(gcd(gcd(Int(delta), Int(genus - 1)), div));
  return FGAbelianGroup::from_cyclic_orders(orders);
}

FGAbelianGroup closed_form_gamma_bar_cokernel(std::size_t n, const Int& div, int genus, long delta) {
  if (delta == 0) return {};
  return closed_form_weight_cokernel(n, div, genus, delta);
}

Lattice rigidified_image_lattice(const ReductiveGroupData& g, const IntVector& d, const CurveFamily& f,
                                 const NSGroup& ns_rig) {
  // On NS of the rigidification the image is the kernel of dbar: the value at
  // x in Lambda(T_D) is (g - 1) b(x, x), a multiple of delta for D-even b.
  IntMatrix m = dbar_matrix(g, d, f, ns_rig);
  std::vector<Congruence> conds;
  for (std::size_t i = 0; i < m.rows(); ++i) conds.push_back({m.row(i), Int(f.delta)});
  Lattice coeff = solve_congruence_sublattice(m.cols(), conds);
  if (coeff.rank() == 0) return Lattice::zero(ns_rig.form_rank);
  return Lattice::from_generators(ns_rig.form_rank, ns_rig.lattice.basis() * coeff.basis());
}

PicardReport rigidified_picard(const ReductiveGroupData& g, const Pi1Element& delta, const CurveFamily& f) {
  return rigidified_picard(g, generic_lift(g, delta), f);
}

PicardReport rigidified_picard(const ReductiveGroupData& g, const IntVector& d, const CurveFamily& f) {
  if (d.size() != g.cochar_rank) throw InvalidSpec("cocharacter length mismatch");
  PicardReport r;
  if (f.genus == 0) {
    r.hypotheses = hypothesis_check(f, g, Gate::Genus0Rigidified);
    if (!r.hypotheses->satisfied) throw HypothesisNotSatisfied(*r.hypotheses);
    HatEvaluation he = hat_evaluation(g, d);
    KernelResult k = kernel(he.map);
    Lattice ker = Lattice::from_generators(he.domain.ambient_rank(), he.domain.basis() * k.lattice);
    r.kind = "rigidified_genus0";
    r.kernel_summand = "0";
    r.image = make_lattice_image("basic-form multiplicities m with b_m(d^ss, -) integral on Lambda(T_D)", he.domain,
                                 IntMatrix(he.domain.ambient_rank(), 0), ker);
    r.cokernel_of = "ker(hat ev) inside its domain";
    r.cokernel = r.image->cokernel;
    r.rows.push_back({"0", "ker(hat ev)", r.image->image_group, true});
    r.splitting_known = true;
    return r;
  }
  r.hypotheses = hypothesis_check(f, g, Gate::RigidifiedPicard);
  if (!r.hypotheses->satisfied) throw HypothesisNotSatisfied(*r.hypotheses);
  NSGroup ns = ns_rigidified(g, d);
  r.kind = "rigidified";
  r.kernel_summand = "Lambda*(G^ab) (x) RPic0(C/S)";
  r.image = make_lattice_image("NS of the rigidification [D-even form coordinates]", ns.lattice,
                               IntMatrix(ns.form_rank, 0), rigidified_image_lattice(g, d, f, ns));
  r.cokernel_of = "gamma-bar into NS of the rigidification";
  r.cokernel = r.image->cokernel;
  r.rows.push_back({"Lambda*(G^ab) (x) RPic0(C/S)", "image of gamma-bar", r.image->image_group, false});
  for (const auto& gen : ns.generators) r.generator_forms.push_back(gen.form.to_integral());
  if (f.delta == 1) r.notes.push_back("delta(C/S) = 1: gamma-bar is onto");
  return r;
}

bool poincare_bundle_exists(const Int& d, const CurveFamily& f) {
  return gcd(Int(f.delta), d + 1 - f.genus) == 1;
}

GerbeReport weight_cokernel(const ReductiveGroupData& g, const Pi1Element& delta, const CurveFamily& f) {
  return weight_cokernel(g, generic_lift(g, delta), f);
}

GerbeReport weight_cokernel(const ReductiveGroupData& g, const IntVector& d, const CurveFamily& f) {
  if (d.size() != g.cochar_rank) throw InvalidSpec("cocharacter length mismatch");
  GerbeReport rep;
  rep.cocharacter = d;
  rep.cover_ev_cokernel = cover_evaluation_cokernel(g, d);
  CrossDiagram c = cross_diagram(g);
  const std::size_t a = c.ab_section.cols();
  if (g.is_torus() && g.cochar_rank == 1) rep.poincare_exists = poincare_bundle_exists(d[0], f);

  if (f.genus == 0) {
    rep.kind = "genus0";
    rep.hypotheses = hypothesis_check(f, g, Gate::Genus0Rigidified);
    if (!rep.hypotheses->satisfied) throw HypothesisNotSatisfied(*rep.hypotheses);
    rep.ev_cokernel = cokernel(hat_evaluation(g, d).map);
    IntVector dab = c.ab_map.apply(d);
    const bool two_divisible = mod_floor(content(dab), Int(2)) == 0;
    rep.pieces.sub = (f.delta == 2 && !two_divisible) ? FGAbelianGroup::cyclic(2) : FGAbelianGroup{};
    rep.pieces.quotient = rep.ev_cokernel;
    rep.pieces.total_order = product_order(order_of(rep.pieces.sub), order_of(rep.pieces.quotient));
    rep.hom_group = FGAbelianGroup::from_cyclic_orders(IntVector(a, Int(f.delta)));
    if (rep.pieces.sub.is_trivial() || rep.pieces.quotient.is_trivial()) {
      rep.coker_wt_exact = true;
      rep.coker_wt = rep.pieces.sub.is_trivial() ? rep.pieces.quotient : rep.pieces.sub;
    } else {
      rep.notes.push_back("extension of coker(hat ev) by Z/2 not determined; graded pieces only");
    }
    rep.certificate.ev_cokernel_order = order_of(rep.ev_cokernel);
    rep.certificate.coker_wt_order = rep.coker_wt ? order_of(*rep.coker_wt) : rep.pieces.total_order;
    return rep;
  }

  rep.kind = "positive_genus";
  rep.hypotheses = hypothesis_check(f, g, Gate::WeightCokernel);
  if (!rep.hypotheses->satisfied) throw HypothesisNotSatisfied(*rep.hypotheses);
  rep.ev_cokernel = evaluation_cokernel(g, d);

  NSGroup ns = ns_rigidified(g, d);
  Lattice im = rigidified_image_lattice(g, d, f, ns);
  rep.coker_gamma_bar = ns.lattice.quotient(im);
  IntMatrix dbar = dbar_matrix(g, d, f, ns);
  Presentation hom = hom_to_cyclic(a, f.delta);
  GroupHom dh(Presentation::free(dbar.cols()), hom, dbar);
  rep.dbar_image = image(dh);
  rep.hom_group = hom.group();
  rep.pieces.sub = cokernel(dh);
  rep.pieces.quotient = rep.ev_cokernel;
  rep.pieces.total_order = product_order(order_of(rep.pieces.sub), order_of(rep.pieces.quotient));
  if (f.delta == 1) {
    rep.coker_wt_exact = true;
    rep.coker_wt = rep.ev_cokernel;
    rep.notes.push_back("delta(C/S) = 1: coker(wt) is isomorphic to coker(ev)");
  } else if (g.is_torus() || rep.pieces.quotient.is_trivial()) {
    rep.coker_wt_exact = true;
    rep.coker_wt = rep.pieces.sub;
  } else if (rep.pieces.sub.is_trivial()) {
    rep.coker_wt_exact = true;
    rep.coker_wt = rep.pieces.quotient;
  } else {
    rep.notes.push_back("extension of coker(ev) by Hom/Im(dbar) not determined; graded pieces only");
  }

  auto& cert = rep.certificate;
  cert.coker_gamma_bar_order = order_of(*rep.coker_gamma_bar);
  cert.dbar_image_order = order_of(*rep.dbar_image);
  cert.hom_order = order_of(rep.hom_group);
  cert.ev_cokernel_order = order_of(rep.ev_cokernel);
  cert.coker_wt_order = rep.coker_wt ? order_of(*rep.coker_wt) : rep.pieces.total_order;
  cert.injective_check = *rep.coker_gamma_bar == *rep.dbar_image;
  if (rep.coker_wt_exact && cert.dbar_image_order && cert.coker_wt_order && cert.hom_order && cert.ev_cokernel_order)
    cert.order_check = *cert.dbar_image_order * *cert.coker_wt_order == *cert.hom_order * *cert.ev_cokernel_order;

  if (g.is_torus()) {
    ClosedFormDiagnostic diag;
    diag.divisibility = content(d);
    diag.coker_wt_formula = closed_form_weight_cokernel(g.cochar_rank, diag.divisibility, f.genus, f.delta);
    diag.coker_gamma_bar_formula = closed_form_gamma_bar_cokernel(g.cochar_rank, diag.divisibility, f.genus, f.delta);
    diag.coker_wt_matches = rep.coker_wt && *rep.coker_wt == diag.coker_wt_formula;
    diag.coker_gamma_bar_matches = *rep.coker_gamma_bar == diag.coker_gamma_bar_formula;
    if (!diag.coker_gamma_bar_matches)
      rep.notes.push_back("printed closed form for coker(gamma-bar) gives " + diag.coker_gamma_bar_formula.to_string() +
                          ", computed " + rep.coker_gamma_bar->to_string());
    rep.closed_form = diag;
  }
  return rep;
}

}  // namespace bunpic
