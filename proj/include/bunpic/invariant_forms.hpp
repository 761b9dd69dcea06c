#pragma once

#include <string>
#include <vector>

#include "bunpic/root_datum.hpp"

namespace bunpic {

struct BilinearForm {
  RatMatrix gram;

  bool is_symmetric() const;
  bool is_integral() const { return gram.is_integral(); }
  bool is_even() const;  // integral with even diagonal
  Rat operator()(const IntVector& x, const IntVector& y) const { return bilinear(gram, x, y); }
};

// Gram matrix on the simple coroots of the minimal invariant even form,
// normalized so short coroots have square length 2.
BilinearForm basic_inner_product(const SimpleType& t);

// Coordinates of symmetric n x n matrices: entries (i, j) with i <= j, row by row.
std::size_t sym2_dimension(std::size_t n);
IntVector sym2_coordinates(const IntMatrix& gram);
IntMatrix gram_from_sym2(const IntVector& coords, std::size_t n);

enum class FormCoordinates {
  Sym2,        // Gram entries on the standard basis of Lambda(T_G)
  BasicForms,  // multiplicities of the basic forms of the simple factors
};

struct FormLattice {
  std::size_t ambient_rank = 0;  // rank of the lattice carrying the Gram matrices
  FormCoordinates coordinate_system = FormCoordinates::Sym2;
  Lattice coordinates;
  std::vector<IntMatrix> basis_forms;

  std::size_t rank() const { return basis_forms.size(); }
};

// W-invariant integral symmetric forms on Lambda(T_G).
FormLattice invariant_sym_forms(const ReductiveGroupData& g);
// ... with even diagonal.
FormLattice even_invariant_forms(const ReductiveGroupData& g);
// ... whose restriction to Lambda(T_D) is even.
FormLattice d_even_forms(const ReductiveGroupData& g);
// Even invariant forms on Lambda(T_D) whose rational extension is integral on
// Lambda(T_D) x Lambda(T_ss). Coordinates: basic-form multiplicities; Gram
// matrices on the basis cross_diagram(g).derived.
FormLattice conditional_form_lattice(const ReductiveGroupData& g);

// Basic form of each simple factor on coweight coordinates of the semisimple span.
std::vector<RatMatrix> basic_forms_coweight(const ReductiveGroupData& g);
// Rational Gram on Lambda(T_G) of sum m_k b_k, pulled back through Lambda(T_G) -> Lambda(T_ad).
RatMatrix basic_combination_on_torus(const ReductiveGroupData& g, const IntVector& m);

struct NSGenerator {
  IntVector chi;          // character representative (empty when there is none)
  IntVector form_coords;  // coordinates in the form lattice used by the group
  RatMatrix form;         // Gram on Lambda(T_G)
};

struct NSGroup {
  std::string coordinates;  // description of the ambient coordinate space
  std::size_t chi_rank = 0;  // leading character coordinates
  std::size_t form_rank = 0;  // trailing form coordinates
  Lattice lattice;            // sub-lattice of the coordinate space
  Presentation presentation;  // quotient of `lattice` by relations, on its basis
  FGAbelianGroup group;
  std::vector<NSGenerator> generators;
};

// Pairs ([chi], b) with chi in Lambda*(T)/Lambda*(T_ad), b D-even, and
// [chi|_D] = [b(d, -)|_D] in Lambda*(T_D)/Lambda*(T_ad).
NSGroup ns_bun(const ReductiveGroupData& g, const IntVector& d);
NSGroup ns_bun(const ReductiveGroupData& g, const Pi1Element& delta);
// D-even b with [b(d, -)|_D] = 0.
NSGroup ns_rigidified(const ReductiveGroupData& g, const IntVector& d);
NSGroup ns_rigidified(const ReductiveGroupData& g, const Pi1Element& delta);
// Genus 0: pairs (l, b), l a character of the radical, b = sum m_k b_k, with
// l + b(d^ss, -) integral on Lambda(T_G). Stored as (chi, m), chi = l + b(d^ss, -).
NSGroup ns_bun_p1(const ReductiveGroupData& g, const IntVector& d);
NSGroup ns_bun_p1(const ReductiveGroupData& g, const Pi1Element& delta);

// b(d^ss, -) restricted to the basis of Lambda(T_D), for b = sum m_k b_k.
RatVector evaluation_on_derived(const ReductiveGroupData& g, const IntVector& d, const IntVector& m);

}  // namespace bunpic
