#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qlab/quantale.hpp"

namespace qlab {

// Module over a quantale: a lattice M with an action Q x M -> M that
// preserves joins in each component (checked in the binary + bottom form),
// is associative over the product and fixes M under the unit.
class QModule {
 public:
  // action is a |Q| x |M| table in row-major order.
  // Throws JoinFail / AssocActionFail / UnitActionFail.
  static QModule make(QuantalePtr quantale, LatticePtr carrier,
                      std::vector<Elem> action, std::string name = "");
  static std::vector<LawStatus> laws(const Quantale& Q,
                                     const FiniteLattice& M,
                                     const std::vector<Elem>& action);

  const Quantale& quantale() const { return *quantale_; }
  QuantalePtr quantale_ptr() const { return quantale_; }
  const FiniteLattice& carrier() const { return *carrier_; }
  LatticePtr carrier_ptr() const { return carrier_; }
  Elem act(Elem alpha, Elem m) const {
    return action_[alpha * carrier_->size() + m];
  }
  const std::vector<Elem>& action_table() const { return action_; }
  const std::string& name() const { return name_; }
  bool degenerate() const { return carrier_->size() == 1; }

 private:
  QModule() = default;
  QuantalePtr quantale_;
  LatticePtr carrier_;
  std::vector<Elem> action_;
  std::string name_;
};

using QModulePtr = std::shared_ptr<const QModule>;

// Q acting on itself by the product.
QModule self_module(QuantalePtr Q);
// A two-element quantale (unit = top) acting on any lattice: bottom acts as
// the constant bottom map, top as the identity.
QModule truth_value_module(QuantalePtr two, LatticePtr N);

bool same_quantale(const Quantale& A, const Quantale& B);

// Join-preserving equivariant map between modules over one quantale.
struct ModuleHom {
  QModulePtr source;
  QModulePtr target;
  std::vector<Elem> values;

  Elem operator()(Elem m) const { return values[m]; }
};
// Throws JoinFail / EquivarianceFail; InvariantFail if the quantales differ.
ModuleHom check_module_hom(QModulePtr src, QModulePtr dst,
                           std::vector<Elem> values);
std::vector<LawStatus> module_hom_laws(const QModule& src, const QModule& dst,
                                       const std::vector<Elem>& values);

// Preimage of the target bottom; asserted to be a submodule of the source.
std::vector<Elem> hom_kernel(const ModuleHom& h);
// Value set; asserted to be a submodule of the target.
std::vector<Elem> hom_image(const ModuleHom& h);

// Subset closed under joins of arbitrary subsets of members (hence contains
// bottom) and under the action.
bool is_submodule(const QModule& M, const std::vector<Elem>& members);

// {alpha . m : alpha in Q}, ascending; closed by the module laws, asserted.
std::vector<Elem> generated_submodule(const QModule& M, Elem m);

// All submodules as ascending member lists in ascending-bitmask order,
// enumerated by closing generated submodules under pairwise join.
std::vector<std::vector<Elem>> submodules(const QModule& M);

struct SimpleResult {
  bool simple = false;
  // One-element modules are flagged here and reported not simple even
  // though they have no proper nonzero submodule.
  bool degenerate = false;
  std::optional<std::vector<Elem>> witness;  // a proper nonzero submodule
};
// Also asserts the equivalence: no proper nonzero submodule iff every
// nonzero element generates the whole module.
SimpleResult is_simple(const QModule& M);

struct FaithfulResult {
  bool faithful = false;
  std::optional<Elem> witness;  // first nonzero alpha acting as bottom
};
FaithfulResult is_faithful(const QModule& M);

struct StronglyFaithfulResult {
  bool strongly_faithful = false;
  std::optional<std::pair<Elem, Elem>> witness;  // distinct, same column
};
// Asserts strongly faithful implies faithful.
StronglyFaithfulResult is_strongly_faithful(const QModule& M);

// {alpha : alpha . m = bottom for all m}, ascending.  Asserts: equals
// {bottom} iff faithful; is a left ideal; absorbs products on both sides.
std::vector<Elem> annihilator(const QModule& M);

// The action packaged as a quantale hom into End(carrier); the hom and the
// ambient endomorphism quantale are returned together.  Asserts the
// round trip through module_from_action_hom restores the action table.
struct ActionHom {
  QuantaleHom hom;
  EndomorphismQuantale end;
};
ActionHom action_hom(const QModule& M);
QModule module_from_action_hom(const QuantaleHom& hom,
                               const EndomorphismQuantale& end,
                               std::string name = "");

// Equivariant join-endomaps of M, as a subquantale of End(carrier)
// (asserted), restricted to its own quantale.  tables/base refer to the
// carrier of M.
EndomorphismQuantale end_q_quantale(const QModule& M);

// M as a module over an operator quantale acting by evaluation.
QModule evaluation_module(const EndomorphismQuantale& endq,
                          std::string name = "");

// Carrier lattice iso commuting with the action; modules must be over the
// same quantale (InvariantFail otherwise).
std::optional<std::vector<Elem>> module_isomorphism(const QModule& A,
                                                    const QModule& B);

}  // namespace qlab
