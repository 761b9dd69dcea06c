#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bunpic/picard.hpp"

namespace bunpic {

// Cocharacter d of g with ss_map * d = w; throws InvalidSpec when w is not in
// the image of Lambda(T_G).
IntVector preimage_under(const IntMatrix& m, const IntVector& w);

// For groups whose pi_1 surjects onto pi_1(G^ad): a cocharacter lifting the
// class with the given coordinates in pi_1(G^ad).
IntVector lift_adjoint_class(const ReductiveGroupData& g, const IntVector& adjoint_coords);

// ev on the conditional form lattice, target Lambda*(T_D) / Lambda*(T_ad).
GroupHom evaluation_map(const ReductiveGroupData& g, const IntVector& d);
FGAbelianGroup evaluation_cokernel(const ReductiveGroupData& g, const IntVector& d);
FGAbelianGroup evaluation_cokernel(const ReductiveGroupData& g, const Pi1Element& delta);

// Same map for the simply connected cover at the image of d in pi_1(G^ad):
// domain all basic-form multiplicities, target Lambda*(T_sc) / Lambda*(T_ad).
FGAbelianGroup cover_evaluation_cokernel(const ReductiveGroupData& g, const IntVector& d);

// Genus 0: the hat evaluation on {m : b_m(d^ss, -) integral on Lambda(T_D)}.
struct HatEvaluation {
  Lattice domain;  // in basic-form multiplicities
  GroupHom map;    // on the domain basis
};
HatEvaluation hat_evaluation(const ReductiveGroupData& g, const IntVector& d);

struct GradedPieces {
  FGAbelianGroup sub;
  FGAbelianGroup quotient;
  std::optional<Int> total_order;  // empty when infinite
};

// Order bookkeeping for 0 -> coker gbar -> Hom -> coker wt -> coker ev -> 0.
struct ExactnessCertificate {
  std::optional<Int> coker_gamma_bar_order;
  std::optional<Int> dbar_image_order;
  std::optional<Int> hom_order;
  std::optional<Int> coker_wt_order;
  std::optional<Int> ev_cokernel_order;
  bool injective_check = true;  // |coker gbar| == |Im dbar|
  bool order_check = true;      // |Im dbar| |coker wt| == |Hom| |coker ev| when exact and finite
  bool holds() const { return injective_check && order_check; }
};

// Torus only: the printed closed forms against the computed groups.
struct ClosedFormDiagnostic {
  Int divisibility = 0;
  FGAbelianGroup coker_wt_formula;
  FGAbelianGroup coker_gamma_bar_formula;
  bool coker_wt_matches = false;
  bool coker_gamma_bar_matches = false;
};

struct GerbeReport {
  std::string kind;  // "positive_genus" or "genus0"
  std::optional<HypothesisResult> hypotheses;
  IntVector cocharacter;
  FGAbelianGroup ev_cokernel;        // D(G) evaluation (hat version in genus 0)
  FGAbelianGroup cover_ev_cokernel;  // simply connected cover
  std::optional<FGAbelianGroup> coker_gamma_bar;
  std::optional<FGAbelianGroup> dbar_image;
  FGAbelianGroup hom_group;          // Hom(Lambda(G^ab), Z/delta)
  GradedPieces pieces;
  bool coker_wt_exact = false;
  std::optional<FGAbelianGroup> coker_wt;
  std::optional<bool> poincare_exists;
  ExactnessCertificate certificate;
  std::optional<ClosedFormDiagnostic> closed_form;
  std::vector<std::string> notes;
};

// The composite Bil -> coker gbar -> Hom(Lambda(G^ab), Z/delta) on the basis of
// NS of the rigidification; rows indexed by the standard basis of Lambda(G^ab).
IntMatrix dbar_matrix(const ReductiveGroupData& g, const IntVector& d, const CurveFamily& f, const NSGroup& ns_rig);

// Torus in a basis with d = div(d) e_1; columns e_i*e_i (i = 1..n) then
// e_1 e_i + e_i e_1 (i = 2..n) then the remaining pairs.
IntMatrix torus_dbar_basis_matrix(std::size_t rank, const Int& divisibility, int genus);
FGAbelianGroup torus_weight_cokernel_from_basis(std::size_t rank, const Int& divisibility, int genus, long delta);

FGAbelianGroup closed_form_weight_cokernel(std::size_t rank, const Int& divisibility, int genus, long delta);
FGAbelianGroup closed_form_gamma_bar_cokernel(std::size_t rank, const Int& divisibility, int genus, long delta);

// Image of gbar inside NS of the rigidification, on its form coordinates.
Lattice rigidified_image_lattice(const ReductiveGroupData& g, const IntVector& d, const CurveFamily& f,
                                 const NSGroup& ns_rig);

PicardReport rigidified_picard(const ReductiveGroupData& g, const IntVector& d, const CurveFamily& f);
PicardReport rigidified_picard(const ReductiveGroupData& g, const Pi1Element& delta, const CurveFamily& f);

GerbeReport weight_cokernel(const ReductiveGroupData& g, const IntVector& d, const CurveFamily& f);
GerbeReport weight_cokernel(const ReductiveGroupData& g, const Pi1Element& delta, const CurveFamily& f);

// gcd(delta, d + 1 - g) == 1 with gcd(0, m) = |m|.
bool poincare_bundle_exists(const Int& d, const CurveFamily& f);

}  // namespace bunpic
