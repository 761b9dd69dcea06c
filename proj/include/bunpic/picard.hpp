#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bunpic/family.hpp"
#include "bunpic/invariant_forms.hpp"

namespace bunpic {

class WrongGenus : public InvalidSpec {
 public:
  using InvalidSpec::InvalidSpec;
};

// d(L_chi(M)) with multiplicity; M enters only through its relative degree.
struct DetTerm {
  IntVector chi;
  Int deg_m = 0;
  Int mult = 1;
};

// <L_chi(M), L_mu(N)> with multiplicity.
struct PairTerm {
  IntVector chi;
  IntVector mu;
  Int deg_m = 0;
  Int deg_n = 0;
  Int mult = 1;
};

struct TautClass {
  std::size_t rank = 0;
  std::vector<DetTerm> det_terms;
  std::vector<PairTerm> pair_terms;
};

IntVector taut_weight(const IntVector& d, int genus, const TautClass& c);
// Throws WrongGenus when genus == 0.
IntMatrix taut_gamma(const TautClass& c, int genus);
// x -> sum mult chi(x)^2 (+ cross terms) mod 2 on the standard basis.
std::vector<int> taut_rho(const TautClass& c, int genus);

struct TautInvariants {
  IntVector weight;
  IntMatrix gamma;
  std::vector<int> rho;
  friend bool operator==(const TautInvariants&, const TautInvariants&) = default;
};

TautInvariants taut_invariants(const IntVector& d, int genus, const TautClass& c);

enum class RelationVariant {
  Exact,
  DropSum,        // omit d(L_{chi+mu}(M+N))
  ShiftDegree,    // right side uses deg M + 1
  DropConstant,   // omit d(O); invisible to the invariants
};

// Pairing expressed through determinants:
// <L_chi(M), L_mu(N)> = d(L_{chi+mu}(M+N)) - d(L_chi(M)) - d(L_mu(N)) + d(O).
std::pair<TautClass, TautClass> deligne_pairing_relation(const IntVector& chi, const IntVector& mu, const Int& deg_m,
                                                         const Int& deg_n, RelationVariant v = RelationVariant::Exact);
bool deligne_pairing_relation_check(const IntVector& chi, const IntVector& mu, const Int& deg_m, const Int& deg_n,
                                    const IntVector& d, int genus, RelationVariant v = RelationVariant::Exact);

struct ExtensionRow {
  std::string sub;       // formal kernel summand
  std::string quotient;  // description of the discrete quotient
  FGAbelianGroup quotient_group;
  bool onto = true;      // false: only the image is described
};

// A sublattice of a coordinate space, both taken modulo common relations.
struct LatticeImage {
  std::string ambient;          // what the coordinate space parametrizes
  Lattice ambient_lattice;
  IntMatrix relations;          // columns; contained in both lattices
  FGAbelianGroup ambient_group;
  Lattice image;
  FGAbelianGroup image_group;
  FGAbelianGroup cokernel;      // ambient / image
};

LatticeImage make_lattice_image(std::string ambient, const Lattice& ambient_lattice, const IntMatrix& relations,
                                const Lattice& image);

struct PicardReport {
  std::string kind;
  std::optional<HypothesisResult> hypotheses;
  std::vector<ExtensionRow> rows;
  std::string kernel_summand;
  std::optional<LatticeImage> image;
  std::string cokernel_of;  // the map whose cokernel is reported
  FGAbelianGroup cokernel;
  bool splitting_known = false;
  std::optional<bool> tautological_complete;
  std::vector<IntMatrix> generator_forms;
  std::vector<std::string> notes;
};

// Genus 0 torus: image of the weight map inside Lambda*(T).
PicardReport torus_picard_genus0(std::size_t rank, const IntVector& d, const CurveFamily& f);

// Points at which a condition delta | l(x) + (g - 1) b(x, x) is imposed: basis
// vectors and pairwise sums, plus doubled basis vectors when delta = 0.
std::vector<IntVector> quadratic_test_points(std::size_t n, long delta);

// Linear conditions on (chi, b) in Z^n + Sym2 coordinates:
// delta | chi(x) - b(d, x) + (g - 1) b(x, x) at basis vectors and pairwise sums.
std::vector<Congruence> torus_image_conditions(std::size_t rank, const IntVector& d, int genus, long delta);
PicardReport torus_picard(std::size_t rank, const IntVector& d, const CurveFamily& f);

// Positive genus: Pic Bun_{G^ab} -> Pic Bun_G -> conditional forms; adds the
// NS-level image when its hypotheses hold. Genus 0: image of c inside the
// genus-0 NS group.
PicardReport reductive_picard(const ReductiveGroupData& g, const Pi1Element& delta, const CurveFamily& f);
PicardReport reductive_picard(const ReductiveGroupData& g, const IntVector& d, const CurveFamily& f);

// Image of (weight, gamma) inside NS(Bun_G) on ns_bun coordinates.
Lattice ns_image_lattice(const ReductiveGroupData& g, const IntVector& d, const CurveFamily& f, const NSGroup& ns);

struct Genus0Picard {
  NSGroup ns;                // genus-0 NS group
  Lattice image;             // image of c
  Int index = 1;             // [NS : Im c]
  Lattice q_lattice;         // {m : b_m(d^ss, -) integral on Lambda(T_D)} in basic-form multiplicities
  Lattice p_image;           // projection of Im c to the form coordinates
  FGAbelianGroup p_cokernel;
  Lattice ab_kernel;         // Pic Bun_{G^ab} as (chi, 0)
};

Genus0Picard genus0_picard(const ReductiveGroupData& g, const IntVector& d, const CurveFamily& f);

}  // namespace bunpic
