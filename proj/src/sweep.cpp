#include "bunpic/sweep.hpp"

namespace bunpic {

std::vector<TorusGridPoint> torus_grid(int max_genus, long max_div, std::size_t max_rank) {
  std::vector<TorusGridPoint> pts;
  for (int g = 1; g <= max_genus; ++g) {
    std::vector<long> deltas;
    if (g == 1) {
      for (long d = 0; d <= 6; ++d) deltas.push_back(d);
    } else {
      for (long d = 1; d <= 2 * g - 2; ++d)
        if ((2 * g - 2) % d == 0) deltas.push_back(d);
    }
    for (long delta : deltas)
      for (long div = 0; div <= max_div; ++div)
        for (std::size_t r = 1; r <= max_rank; ++r) pts.push_back({g, delta, div, r});
  }
  return pts;
}

CurveFamily grid_family(int genus, long delta) {
  CurveFamily f;
  f.genus = genus;
  f.delta = delta;
  f.has_section = delta == 1;
  f.end_jacobian_trivial = true;
  f.rpic_surjective = true;
  f.rpic0_torsion_free = true;
  f.label = "grid(g=" + std::to_string(genus) + ",delta=" + std::to_string(delta) + ")";
  return f;
}

TorusGridResult evaluate_torus_point(const TorusGridPoint& p) {
  ReductiveGroupData t = torus_group(p.rank);
  IntVector d(p.rank, Int(0));
  d[0] = p.divisibility;
  GerbeReport rep = weight_cokernel(t, d, grid_family(p.genus, p.delta));
  TorusGridResult res;
  res.point = p;
  res.coker_wt = *rep.coker_wt;
  res.coker_wt_from_basis = torus_weight_cokernel_from_basis(p.rank, p.divisibility, p.genus, p.delta);
  res.coker_gamma_bar = *rep.coker_gamma_bar;
  res.coker_wt_formula = closed_form_weight_cokernel(p.rank, p.divisibility, p.genus, p.delta);
  res.coker_gamma_bar_formula = closed_form_gamma_bar_cokernel(p.rank, p.divisibility, p.genus, p.delta);
  res.certificate_holds = rep.certificate.holds();
  if (p.delta > 0) {
    auto a = res.coker_gamma_bar.order();
    auto b = res.coker_wt.order();
    Int expected = 1;
    for (std::size_t i = 0; i < p.rank; ++i) expected *= p.delta;
    res.order_product_holds = a && b && *a * *b == expected;
  } else {
    res.order_product_holds = true;
  }
  return res;
}

std::vector<TorusGridResult> evaluate_torus_grid(const std::vector<TorusGridPoint>& pts, Execution exec) {
  return map_indices<TorusGridResult>(pts.size(), [&](std::size_t i) { return evaluate_torus_point(pts[i]); }, exec);
}

std::vector<IntVector> enumerate_classes(const FGAbelianGroup& g) {
  if (g.free_rank != 0) throw InvalidSpec("enumerate_classes: infinite group");
  std::vector<IntVector> out{IntVector{}};
  for (const auto& m : g.torsion) {
    std::vector<IntVector> next;
    for (const auto& v : out)
      for (Int k = 0; k < m; ++k) {
        IntVector w = v;
        w.push_back(k);
        next.push_back(w);
      }
    out = std::move(next);
  }
  return out;
}

std::vector<GoldenCase> golden_cases() {
  std::vector<SimpleType> types;
  for (int n = 2; n <= 8; ++n) types.push_back({Family::A, n - 1});
  for (int n = 2; n <= 5; ++n) types.push_back({Family::B, n});
  for (int n = 2; n <= 5; ++n) types.push_back({Family::C, n});
  for (int n = 3; n <= 6; ++n) types.push_back({Family::D, n});
  types.push_back({Family::E, 6});
  types.push_back({Family::E, 7});
  types.push_back({Family::E, 8});
  types.push_back({Family::F, 4});
  types.push_back({Family::G, 2});
  std::vector<GoldenCase> out;
  for (const auto& t : types) {
    FundamentalGroup ad = fundamental_group(adjoint_group(t));
    for (const auto& c : enumerate_classes(ad.group)) {
      std::string label = t.name() + "[";
      for (std::size_t i = 0; i < c.size(); ++i) label += (i ? "," : "") + c[i].get_str();
      out.push_back({label + "]", t, c});
    }
  }
  return out;
}

GoldenResult evaluate_golden_case(const GoldenCase& c) {
  ReductiveGroupData g = gl_like_group({c.type});
  IntVector d = lift_adjoint_class(g, c.adjoint_coords);
  GoldenResult r;
  r.which = c;
  r.ev_cokernel = evaluation_cokernel(g, d);
  r.cover_ev_cokernel = cover_evaluation_cokernel(g, d);
  return r;
}

std::vector<GoldenResult> evaluate_golden(const std::vector<GoldenCase>& cases, Execution exec) {
  return map_indices<GoldenResult>(cases.size(), [&](std::size_t i) { return evaluate_golden_case(cases[i]); }, exec);
}

}  // namespace bunpic
