#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qlab/lattice.hpp"

namespace qlab {

// Finite quantale: a lattice with an associative product that distributes
// over joins in both arguments and has a two-sided unit.  On a finite
// lattice the infinite distributivity laws reduce to the binary ones plus
// absorption of bottom, which is what validation checks.
class Quantale {
 public:
  // Throws Trivial / AssocFail / DistribFail / UnitFail, with the first
  // violated law in scan order carried as code + witness.
  static Quantale make(LatticePtr lattice, std::vector<Elem> product,
                       Elem unit, std::string name = "");

  // Every law with status, for reporting.  Scan order matches make().
  static std::vector<LawStatus> laws(const FiniteLattice& L,
                                     const std::vector<Elem>& product,
                                     Elem unit);

  const FiniteLattice& lattice() const { return *lattice_; }
  LatticePtr lattice_ptr() const { return lattice_; }
  int size() const { return lattice_->size(); }
  Elem times(Elem a, Elem b) const { return product_[a * size() + b]; }
  Elem unit() const noexcept { return unit_; }
  Elem bottom() const { return lattice_->bottom(); }
  Elem top() const { return lattice_->top(); }
  bool leq(Elem a, Elem b) const { return lattice_->leq(a, b); }
  Elem join(Elem a, Elem b) const { return lattice_->join(a, b); }
  const std::string& label(Elem a) const { return lattice_->label(a); }
  const std::string& name() const { return name_; }
  const std::vector<Elem>& product_table() const { return product_; }

  bool commutative() const;
  std::optional<std::pair<Elem, Elem>> commutativity_witness() const;

 private:
  Quantale() = default;
  LatticePtr lattice_;
  std::vector<Elem> product_;
  Elem unit_ = 0;
  std::string name_;
};

using QuantalePtr = std::shared_ptr<const Quantale>;

// Map preserving joins, products and the unit, stored as a value table.
struct QuantaleHom {
  QuantalePtr source;
  QuantalePtr target;
  std::vector<Elem> values;

  Elem operator()(Elem a) const { return values[a]; }
};

// Validating constructor; throws JoinFail / ProductFail / UnitFail.
QuantaleHom check_quantale_hom(QuantalePtr src, QuantalePtr dst,
                               std::vector<Elem> values);
std::vector<LawStatus> quantale_hom_laws(const Quantale& src,
                                         const Quantale& dst,
                                         const std::vector<Elem>& values);

// members must contain bottom (empty join) and the unit and be closed under
// binary joins and products.
bool is_subquantale(const Quantale& Q, const std::vector<Elem>& members);

// Value set of a hom, ascending; asserts it passes is_subquantale.
std::vector<Elem> image_subquantale(const QuantaleHom& h);

// Restriction of Q to a subquantale, revalidated.  `index_in_sub` maps
// ambient elements to sub indices (-1 when absent).
struct SubQuantale {
  QuantalePtr quantale;
  std::vector<Elem> members;       // ambient indices, ascending
  std::vector<Elem> index_in_sub;  // ambient -> sub, -1 if not a member
};
SubQuantale restrict_quantale(const Quantale& Q, std::vector<Elem> members,
                              std::string name);

struct PrimeResult {
  bool prime = false;
  // First pair (alpha, beta), both nonzero, with alpha*gamma*beta = bottom
  // for every gamma.
  std::optional<std::pair<Elem, Elem>> witness;
};
PrimeResult is_prime(const Quantale& Q);

struct DivisionResult {
  bool division = false;
  // inverse[a] for nonzero a when division; unique when it exists.
  std::vector<Elem> inverse;
  std::optional<Elem> witness;  // first nonzero element with no inverse
};
DivisionResult is_division(const Quantale& Q);

struct FieldResult {
  bool field = false;
  bool commutative = false;
  DivisionResult division;
  std::optional<std::pair<Elem, Elem>> comm_witness;
};
FieldResult is_field(const Quantale& Q);

// All left ideals (subsets closed under joins of arbitrary subsets of
// members and under left multiplication), as ascending member lists in
// canonical order (ascending member bitmask).  Enumerated by closing the
// principal left ideals under pairwise ideal join.
std::vector<std::vector<Elem>> left_ideals(const Quantale& Q);
// Nonzero left ideals minimal among nonzero ones.
std::vector<std::vector<Elem>> minimal_left_ideals(const Quantale& Q);
std::vector<Elem> principal_left_ideal(const Quantale& Q, Elem a);

// The quantale of join-preserving endomaps of N: pointwise joins,
// composition as product, identity as unit.  `tables[i]` is the value table
// of element i; elements are in ascending lexicographic table order.
struct EndomorphismQuantale {
  QuantalePtr quantale;
  LatticePtr base;
  std::vector<std::vector<Elem>> tables;

  Elem apply(Elem f, Elem x) const { return tables[f][x]; }
  std::optional<Elem> index_of_table(const std::vector<Elem>& t) const;
};
// Throws Trivial when |N| < 2.  The result passes Quantale::make.
EndomorphismQuantale end_quantale(LatticePtr N);

// Bijection preserving order, product and unit; nullopt if none.
std::optional<std::vector<Elem>> quantale_isomorphism(const Quantale& A,
                                                      const Quantale& B);

}  // namespace qlab
