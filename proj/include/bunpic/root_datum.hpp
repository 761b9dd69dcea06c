#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bunpic/exact_algebra.hpp"

namespace bunpic {

class InvalidSpec : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Family { A, B, C, D, E, F, G };

struct SimpleType {
  Family family = Family::A;
  int rank = 1;

  std::string name() const;  // "A3", "E6", ...
  static SimpleType parse(const std::string& s);
  friend bool operator==(const SimpleType&, const SimpleType&) = default;
};

void validate_type(const SimpleType& t);

// Entry (i, j) is <alpha_i, alpha_j^vee>, Bourbaki numbering.
IntMatrix cartan_matrix(const SimpleType& t);

struct ReductiveGroupData {
  std::size_t cochar_rank = 0;
  IntMatrix simple_coroots;  // cochar_rank x r, columns in Lambda(T)
  IntMatrix simple_roots;    // cochar_rank x r, columns in the dual basis
  std::vector<SimpleType> factor_types;
  std::string label;

  std::size_t semisimple_rank() const { return simple_coroots.cols(); }
  std::size_t factor_count() const { return factor_types.size(); }
  bool is_torus() const { return semisimple_rank() == 0; }
  bool is_semisimple() const { return semisimple_rank() == cochar_rank; }
  IntMatrix cartan() const;  // roots^T * coroots
  // Half-open ranges of simple-root indices, one per factor.
  std::vector<std::pair<std::size_t, std::size_t>> factor_blocks() const;
  // s_i(x) = x - <alpha_i, x> alpha_i^vee as a matrix on Lambda(T).
  IntMatrix reflection(std::size_t i) const;
};

// Throws InvalidSpec unless the pairing reproduces the block Cartan matrix.
void validate_root_datum(const ReductiveGroupData& g);

ReductiveGroupData torus_group(std::size_t rank);
ReductiveGroupData simply_connected_group(const SimpleType& t);
ReductiveGroupData adjoint_group(const SimpleType& t);
ReductiveGroupData product(const ReductiveGroupData& a, const ReductiveGroupData& b);
ReductiveGroupData product(const std::vector<ReductiveGroupData>& factors);

ReductiveGroupData gl_group(int n);
ReductiveGroupData sp_group(int n);    // Sp(2n)
ReductiveGroupData so_odd_group(int n);   // SO(2n+1)
ReductiveGroupData so_even_group(int n);  // SO(2n)

// Simply connected cover and adjoint quotient of the derived group.
ReductiveGroupData simply_connected_cover(const ReductiveGroupData& g);
ReductiveGroupData adjoint_quotient(const ReductiveGroupData& g);

// (G^sc x T)/Z(G^sc) generalizing GL(n) = (SL(n) x G_m)/mu_n: derived group
// simply connected, semisimplification adjoint, pi_1 free with image all of
// pi_1(G^ad).
ReductiveGroupData gl_like_group(const std::vector<SimpleType>& types);

// { "cochar_rank": n, "simple_coroots": [[...]], "simple_roots": [[...]], "factor_types": ["A3", ...] }
// Coroots and roots are given as lists of vectors of length n.
ReductiveGroupData root_datum_from_json(const nlohmann::json& j);
nlohmann::json root_datum_to_json(const ReductiveGroupData& g);

struct CrossDiagram {
  Lattice derived;       // Lambda(T_D) inside Lambda(T_G)
  Lattice radical;       // Lambda(T_R) inside Lambda(T_G)
  IntMatrix ab_map;      // Lambda(T_G) -> Lambda(G^ab) = Z^(n-r)
  IntMatrix ab_section;  // n x (n-r), lifts of the standard basis of Lambda(G^ab)
  IntMatrix ss_map;      // Lambda(T_G) -> Lambda(T_ad), fundamental coweight coordinates
  IntMatrix derived_cw;  // ss_map * derived.basis(): basis of Lambda(T_D) in coweight coordinates
  // Semisimple chain inside Z^r (coweight coordinates).
  Lattice sc;
  Lattice derived_ss;
  Lattice ss;
  Lattice ad;
};

CrossDiagram cross_diagram(const ReductiveGroupData& g);

bool derived_simply_connected(const ReductiveGroupData& g);

struct Pi1Element {
  IntVector coords;
};

// pi_1(G) = Lambda(T_G) / coroots, with generators in invariant-factor order
// (torsion first, then free).
struct FundamentalGroup {
  FGAbelianGroup group;
  IntMatrix generators;  // n x k cocharacters
  IntMatrix coordinate_map;  // k x n

  std::size_t generator_count() const { return generators.cols(); }
  IntVector reduce(const IntVector& coords) const;
  IntVector classify(const IntVector& cocharacter) const;
  IntVector lift(const IntVector& coords) const;
};

FundamentalGroup fundamental_group(const ReductiveGroupData& g);

// Every simple factor component of d in Lambda(T_ad) is nonzero.
bool is_generic(const ReductiveGroupData& g, const IntVector& d);
IntVector generic_lift(const ReductiveGroupData& g, const Pi1Element& delta);
// Lift of delta without the genericity adjustment.
IntVector plain_lift(const ReductiveGroupData& g, const Pi1Element& delta);

}  // namespace bunpic
