#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "bunpic/root_datum.hpp"

namespace bunpic {

class InvalidPreset : public InvalidSpec {
 public:
  using InvalidSpec::InvalidSpec;
};

// Numerical invariants of a family of curves C/S. delta = 0 encodes a family
// that is not locally projective.
struct CurveFamily {
  int genus = 0;
  long delta = 1;
  bool has_section = false;
  bool zariski_locally_trivial = false;  // meaningful for genus 0
  bool end_jacobian_trivial = false;     // End(J) = Z at the geometric generic point
  bool rpic_surjective = false;          // Pic(C) -> Pic_{C/S}(S) onto
  bool rpic0_torsion_free = false;
  std::string label;

  friend bool operator==(const CurveFamily&, const CurveFamily&) = default;
};

// Presets: universal(g,n), plane_curve(d), complete_intersection(d1,...),
// k3_hyperplane(g), hyperelliptic(g), hurwitz(g,d), severi(g,d),
// fixed_curve(g[,end_trivial]), genus0_trivial, genus0_nontrivial.
CurveFamily family_from_preset(const std::string& name, const std::vector<long>& params);
// "name" or "name:p1,p2,...".
CurveFamily family_from_string(const std::string& spec);
const std::vector<std::string>& preset_names();

struct Violation {
  std::string rule;
  std::string message;
};

std::vector<Violation> validate_family(const CurveFamily& f);

nlohmann::json family_to_json(const CurveFamily& f);
// Missing flags default to false; genus and delta are required.
CurveFamily family_from_json(const nlohmann::json& j);

enum class Gate {
  TautologicalComplete,  // torus Picard group generated by tautological classes
  Pushout,               // Pic Bun_G generated by transgression and Pic Bun_{G^ab}
  Faltings,              // semisimple: transgression is an isomorphism
  NsImage,               // image of (weight, gamma) inside NS(Bun_G)
  RigidifiedPicard,      // Picard group of the rigidification, positive genus
  WeightCokernel,        // cokernel of the weight map, positive genus
  Genus0Rigidified,      // rigidification and weight cokernel, genus 0
};

std::string gate_name(Gate g);
Gate gate_from_name(const std::string& s);  // throws InvalidSpec

struct HypothesisResult {
  Gate gate = Gate::TautologicalComplete;
  bool satisfied = false;
  std::vector<std::string> missing;  // failing hypotheses, human readable
};

HypothesisResult hypothesis_check(const CurveFamily& f, const ReductiveGroupData& g, Gate gate);

class HypothesisNotSatisfied : public std::runtime_error {
 public:
  explicit HypothesisNotSatisfied(HypothesisResult r);
  const HypothesisResult& result() const { return result_; }

 private:
  HypothesisResult result_;
};

// Throws HypothesisNotSatisfied when the gate fails.
void require(const CurveFamily& f, const ReductiveGroupData& g, Gate gate);

}  // namespace bunpic
