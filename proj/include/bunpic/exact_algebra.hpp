#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bunpic/matrix.hpp"

namespace bunpic {

struct HermiteResult {
  IntMatrix h;  // column Hermite normal form, h = m * u
  IntMatrix u;  // unimodular
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_rows;
};

// Column HNF: pivot rows strictly increase, pivots positive, entries to the
// left of a pivot reduced into [0, pivot). Zero columns come last.
HermiteResult hermite_normal_form(const IntMatrix& m);

struct SmithResult {
  IntMatrix s;  // s = u * m * v, diagonal with d1 | d2 | ...
  IntMatrix u;
  IntMatrix v;
  IntVector diagonal() const;
};

SmithResult smith_normal_form(const IntMatrix& m);

// Basis (columns, HNF) of {x in Z^cols : m x = 0}.
IntMatrix integer_kernel(const IntMatrix& m);

// Finitely generated abelian group Z^free_rank + sum Z/torsion_i, d1 | d2 | ...
struct FGAbelianGroup {
  std::size_t free_rank = 0;
  IntVector torsion;

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  bool is_finite() const { return free_rank == 0; }
  // Order; nullopt when infinite.
  std::optional<Int> order() const;
  std::string to_string() const;

  static FGAbelianGroup cyclic(const Int& n);  // Z/n, with Z/0 = Z and Z/1 = 0
  static FGAbelianGroup free(std::size_t rank);
  // Canonical form of a direct sum of cyclic groups Z/n_i.
  static FGAbelianGroup from_cyclic_orders(const IntVector& orders);
  friend FGAbelianGroup direct_sum(const FGAbelianGroup& a, const FGAbelianGroup& b);
  friend bool operator==(const FGAbelianGroup& a, const FGAbelianGroup& b) {
    return a.free_rank == b.free_rank && a.torsion == b.torsion;
  }
};

// Z^generators / column span of relations.
struct Presentation {
  std::size_t generators = 0;
  IntMatrix relations;  // generators x k

  Presentation() = default;
  Presentation(std::size_t gens, IntMatrix rels);
  static Presentation free(std::size_t gens);
  FGAbelianGroup group() const;
  // Reduced representative test: is v zero in the group.
  bool is_zero(const IntVector& v) const;
};

// Homomorphism between presented groups: generator images as matrix columns.
struct GroupHom {
  Presentation source;
  Presentation target;
  IntMatrix matrix;  // target.generators x source.generators

  GroupHom(Presentation s, Presentation t, IntMatrix m);
  // Every source relation maps into the target relation lattice.
  bool respects_relations() const;
};

FGAbelianGroup cokernel(const GroupHom& f);

struct KernelResult {
  IntMatrix lattice;          // basis of {x : f(x) = 0 in target}, contains source relations
  Presentation presentation;  // kernel as a group, on the lattice basis
  FGAbelianGroup group;
};

KernelResult kernel(const GroupHom& f);

// Image of f as an abstract group.
FGAbelianGroup image(const GroupHom& f);

// Full-rank or not: a sublattice of Z^ambient_rank with HNF basis.
class Lattice {
 public:
  Lattice() = default;
  // Lattice generated by the columns of gens.
  static Lattice from_generators(std::size_t ambient_rank, const IntMatrix& gens);
  static Lattice full(std::size_t ambient_rank);
  static Lattice zero(std::size_t ambient_rank);

  std::size_t ambient_rank() const { return ambient_rank_; }
  std::size_t rank() const { return basis_.cols(); }
  const IntMatrix& basis() const { return basis_; }

  std::optional<IntVector> coordinates(const IntVector& v) const;
  bool contains(const IntVector& v) const { return coordinates(v).has_value(); }
  bool contains(const Lattice& other) const;
  // Coordinates of the columns of m in this basis; throws if some column is outside.
  IntMatrix coordinates_of(const IntMatrix& m) const;
  // [this : sub] as an abelian group (sub must be contained in this).
  FGAbelianGroup quotient(const Lattice& sub) const;
  FGAbelianGroup quotient(const IntMatrix& sub_generators) const;
  Int index_of(const Lattice& sub) const;  // 0 when infinite

  friend Lattice sum(const Lattice& a, const Lattice& b);
  friend Lattice intersection(const Lattice& a, const Lattice& b);
  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.ambient_rank_ == b.ambient_rank_ && a.basis_ == b.basis_;
  }
  Lattice image(const IntMatrix& map) const;  // map: target x ambient

 private:
  std::size_t ambient_rank_ = 0;
  IntMatrix basis_;
};

struct Congruence {
  IntVector functional;
  Int modulus;  // 0: exact vanishing, 1: vacuous
};

// {x in Z^n : functional . x = 0 mod modulus for every condition}.
Lattice solve_congruence_sublattice(std::size_t ambient_rank, const std::vector<Congruence>& conditions);

// Rational functional q . x in modulus * Z, cleared to an integral congruence.
Congruence rational_congruence(const RatVector& functional, const Int& modulus);

// (Q-span of l) intersected with Z^n.
Lattice saturation(const Lattice& l);

// Largest k with d in k * l; 0 when d = 0. Throws if d is not in l.
Int divisibility(const IntVector& d, const Lattice& l);

}  // namespace bunpic
