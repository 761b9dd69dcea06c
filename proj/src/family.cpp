#include "bunpic/family.hpp"

#include <numeric>
#include <sstream>

namespace bunpic {

namespace {

long gcd_long(long a, long b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

void expect_count(const std::string& name, const std::vector<long>& p, std::size_t lo, std::size_t hi) {
  if (p.size() < lo || p.size() > hi)
    throw InvalidPreset(name + ": expected " + std::to_string(lo) + (lo == hi ? "" : "-" + std::to_string(hi)) +
                        " parameters, got " + std::to_string(p.size()));
  for (long x : p)
    if (x < 0) throw InvalidPreset(name + ": parameters must be non-negative");
}

std::string label_of(const std::string& name, const std::vector<long>& p) {
  std::string s = name + "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

// Families with a line bundle of relative degree 1 or a section have a
// surjective relative Picard map.
void derive_surjectivity(CurveFamily& f) {
  if (f.has_section || f.delta == 1) f.rpic_surjective = true;
}

CurveFamily positive_genus(const std::string& label, int g, long delta) {
  CurveFamily f;
  f.genus = g;
  f.delta = delta;
  f.label = label;
  derive_surjectivity(f);
  return f;
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"universal",     "plane_curve", "complete_intersection",
                                                 "k3_hyperplane", "hyperelliptic", "hurwitz",
                                                 "severi",        "fixed_curve", "genus0_trivial",
                                                 "genus0_nontrivial"};
  return names;
}

CurveFamily family_from_preset(const std::string& name, const std::vector<long>& p) {
  const std::string label = label_of(name, p);
  if (name == "universal") {
    expect_count(name, p, 2, 2);
    const int g = static_cast<int>(p[0]);
    const long n = p[1];
    CurveFamily f;
    f.genus = g;
    f.delta = n == 0 ? std::labs(2L * g - 2) : 1;
    f.has_section = n > 0;
    f.zariski_locally_trivial = g == 0 ? n > 0 : f.has_section;
    f.end_jacobian_trivial = true;
    f.rpic_surjective = n > 0 || g >= 2;
    f.rpic0_torsion_free = true;
    f.label = label;
    derive_surjectivity(f);
    return f;
  }
  if (name == "plane_curve") {
    expect_count(name, p, 1, 1);
    const long d = p[0];
    if (d < 1) throw InvalidPreset("plane_curve requires d >= 1");
    CurveFamily f = positive_genus(label, static_cast<int>((d - 1) * (d - 2) / 2), d);
    if (f.genus == 0) f.has_section = f.zariski_locally_trivial = d == 1;
    // Curves in a linear system on a smooth surface.
    f.end_jacobian_trivial = f.genus > 0;
    derive_surjectivity(f);
    return f;
  }
  if (name == "complete_intersection") {
    if (p.empty()) throw InvalidPreset("complete_intersection needs at least one degree");
    expect_count(name, p, 1, 16);
    long prod = 1, sum = 0;
    for (long d : p) {
      if (d < 1) throw InvalidPreset("complete_intersection degrees must be >= 1");
      prod *= d;
      sum += d;
    }
    const long r = static_cast<long>(p.size()) + 1;
    const long two_g_minus_2 = prod * (sum - r - 1);
    if (two_g_minus_2 < -2 || two_g_minus_2 % 2 != 0)
      throw InvalidPreset("complete_intersection: degrees do not define a smooth curve");
    CurveFamily f = positive_genus(label, static_cast<int>(two_g_minus_2 / 2 + 1), prod);
    if (f.genus == 0) f.has_section = f.zariski_locally_trivial = prod == 1;
    derive_surjectivity(f);
    return f;
  }
  if (name == "k3_hyperplane") {
    expect_count(name, p, 1, 1);
    if (p[0] < 3) throw InvalidPreset("k3_hyperplane requires g >= 3");
    return positive_genus(label, static_cast<int>(p[0]), 2 * p[0] - 2);
  }
  if (name == "hyperelliptic") {
    expect_count(name, p, 1, 1);
    if (p[0] < 2) throw InvalidPreset("hyperelliptic requires g >= 2");
    CurveFamily f = positive_genus(label, static_cast<int>(p[0]), p[0] % 2 ? 4 : 2);
    f.end_jacobian_trivial = true;
    return f;
  }
  if (name == "hurwitz" || name == "severi") {
    expect_count(name, p, 2, 2);
    const long g = p[0], d = p[1];
    const long rho = name == "hurwitz" ? 2 * d - g - 2 : 3 * d - 2 * g - 6;
    if (g < 1) throw InvalidPreset(name + " requires g >= 1");
    if (rho < 2) throw InvalidPreset(name + ": Brill-Noether number " + std::to_string(rho) + " < 2");
    return positive_genus(label, static_cast<int>(g), gcd_long(2 * g - 2, d));
  }
  if (name == "fixed_curve") {
    expect_count(name, p, 1, 2);
    if (p[0] < 1) throw InvalidPreset("fixed_curve requires g >= 1");
    CurveFamily f = positive_genus(label, static_cast<int>(p[0]), 1);
    f.has_section = f.zariski_locally_trivial = true;
    f.end_jacobian_trivial = p.size() < 2 || p[1] != 0;
    f.rpic_surjective = true;
    f.rpic0_torsion_free = false;
    return f;
  }
  if (name == "genus0_trivial" || name == "genus0_nontrivial") {
    expect_count(name, p, 0, 0);
    CurveFamily f;
    f.genus = 0;
    const bool trivial = name == "genus0_trivial";
    f.delta = trivial ? 1 : 2;
    f.has_section = f.zariski_locally_trivial = trivial;
    f.rpic0_torsion_free = true;
    f.label = name;
    derive_surjectivity(f);
    return f;
  }
  throw InvalidPreset("unknown family preset '" + name + "'");
}

CurveFamily family_from_string(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  std::vector<long> params;
  if (colon != std::string::npos) {
    std::stringstream ss(spec.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        long v = std::stol(item, &used);
        if (used != item.size()) throw std::invalid_argument(item);
        params.push_back(v);
      } catch (const std::exception&) {
        throw InvalidPreset("bad preset parameter '" + item + "'");
      }
    }
  }
  return family_from_preset(name, params);
}

std::vector<Violation> validate_family(const CurveFamily& f) {
  std::vector<Violation> out;
  auto add = [&](const std::string& rule, const std::string& msg) { out.push_back({rule, msg}); };
  if (f.genus < 0) add("genus_nonnegative", "genus " + std::to_string(f.genus) + " < 0");
  if (f.delta < 0) add("delta_nonnegative", "delta " + std::to_string(f.delta) + " < 0");
  const long two_g_minus_2 = 2L * f.genus - 2;
  if (f.genus >= 2 && f.delta > 0 && two_g_minus_2 % f.delta != 0)
    add("delta_divides_2g_minus_2", std::to_string(f.delta) + " does not divide " + std::to_string(two_g_minus_2));
  if (f.delta == 0 && f.genus != 1)
    add("delta_zero_only_genus_one", "delta = 0 (not locally projective) requires genus 1");
  if (f.genus == 0) {
    if (f.delta != 1 && f.delta != 2) add("genus0_delta", "genus 0 requires delta in {1, 2}");
    if ((f.delta == 1) != f.zariski_locally_trivial)
      add("genus0_delta_zariski", "genus 0: delta = 1 exactly when Zariski locally trivial");
    if (f.zariski_locally_trivial != f.has_section)
      add("genus0_zariski_section", "genus 0: Zariski locally trivial exactly when there is a section");
  }
  if (f.has_section && f.delta != 1)
    add("section_degree_one", "a section gives a line bundle of relative degree 1, so delta = 1");
  if (f.has_section && !f.rpic_surjective)
    add("section_rpic_surjective", "a family with a section has Pic(C) -> Pic_{C/S}(S) surjective");
  if (f.delta == 1 && !f.rpic_surjective)
    add("delta_one_rpic_surjective", "delta = 1 forces Pic(C) -> Pic_{C/S}(S) surjective");
  return out;
}

nlohmann::json family_to_json(const CurveFamily& f) {
  return {{"genus", f.genus},
          {"delta", f.delta},
          {"has_section", f.has_section},
          {"zariski_locally_trivial", f.zariski_locally_trivial},
          {"end_jacobian_trivial", f.end_jacobian_trivial},
          {"rpic_surjective", f.rpic_surjective},
          {"rpic0_torsion_free", f.rpic0_torsion_free},
          {"label", f.label}};
}

CurveFamily family_from_json(const nlohmann::json& j) {
  try {
    CurveFamily f;
    f.genus = j.at("genus").get<int>();
    f.delta = j.at("delta").get<long>();
    f.has_section = j.value("has_section", false);
    f.zariski_locally_trivial = j.value("zariski_locally_trivial", false);
    f.end_jacobian_trivial = j.value("end_jacobian_trivial", false);
    f.rpic_surjective = j.value("rpic_surjective", false);
    f.rpic0_torsion_free = j.value("rpic0_torsion_free", false);
    f.label = j.value("label", std::string("custom"));
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidSpec(std::string("family JSON: ") + e.what());
  }
}

std::string gate_name(Gate g) {
  switch (g) {
    case Gate::TautologicalComplete: return "tautological_complete";
    case Gate::Pushout: return "pushout";
    case Gate::Faltings: return "faltings";
    case Gate::NsImage: return "ns_image";
    case Gate::RigidifiedPicard: return "rigidified_picard";
    case Gate::WeightCokernel: return "weight_cokernel";
    case Gate::Genus0Rigidified: return "genus0_rigidified";
  }
  return "unknown";
}

Gate gate_from_name(const std::string& s) {
  for (Gate g : {Gate::TautologicalComplete, Gate::Pushout, Gate::Faltings, Gate::NsImage, Gate::RigidifiedPicard,
                 Gate::WeightCokernel, Gate::Genus0Rigidified})
    if (gate_name(g) == s) return g;
  throw InvalidSpec("unknown theorem gate '" + s + "'");
}

HypothesisResult hypothesis_check(const CurveFamily& f, const ReductiveGroupData& g, Gate gate) {
  HypothesisResult r;
  r.gate = gate;
  auto need = [&](bool ok, const std::string& what) {
    if (!ok) r.missing.push_back(what);
  };
  const bool end_j = f.end_jacobian_trivial;
  const bool surj = f.rpic_surjective;
  const bool tf = f.rpic0_torsion_free;
  const bool dsc = derived_simply_connected(g);
  const std::string jac = "End(J) = Z at the geometric generic point";
  const std::string onto = "Pic(C) -> Pic_{C/S}(S) surjective";
  switch (gate) {
    case Gate::TautologicalComplete:
      need(f.genus > 0, "genus > 0");
      need(end_j, jac);
      need(surj, onto);
      break;
    case Gate::Pushout:
      need(f.genus > 0, "genus > 0");
      if (!dsc && !(end_j && surj && tf))
        r.missing.push_back("either D(G) simply connected, or End(J) = Z, Pic(C) -> Pic_{C/S}(S) surjective and RPic^0 torsion-free");
      break;
    case Gate::Faltings:
      need(f.genus > 0, "genus > 0");
      need(g.is_semisimple(), "G semisimple");
      if (!dsc && !(end_j && surj && tf))
        r.missing.push_back("either G simply connected, or End(J) = Z, Pic(C) -> Pic_{C/S}(S) surjective and RPic^0 torsion-free");
      break;
    case Gate::NsImage:
    case Gate::RigidifiedPicard:
    case Gate::WeightCokernel:
      need(f.genus > 0, "genus > 0");
      need(end_j, jac);
      need(surj, onto);
      need(tf || dsc, "either RPic^0(C/S) torsion-free or D(G) simply connected");
      break;
    case Gate::Genus0Rigidified:
      need(f.genus == 0, "genus 0");
      need(f.zariski_locally_trivial || dsc, "either C/S Zariski locally trivial or D(G) simply connected");
      break;
  }
  r.satisfied = r.missing.empty();
  return r;
}

namespace {
std::string describe(const HypothesisResult& r) {
  std::string s = "hypotheses of gate '" + gate_name(r.gate) + "' not satisfied:";
  for (const auto& m : r.missing) s += " [" + m + "]";
  return s;
}
}  // namespace

HypothesisNotSatisfied::HypothesisNotSatisfied(HypothesisResult r)
    : std::runtime_error(describe(r)), result_(std::move(r)) {}

void require(const CurveFamily& f, const ReductiveGroupData& g, Gate gate) {
  HypothesisResult r = hypothesis_check(f, g, gate);
  if (!r.satisfied) throw HypothesisNotSatisfied(r);
}

}  // namespace bunpic
