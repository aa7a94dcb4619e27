#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qlab/qmodule.hpp"
#include "qlab/report.hpp"

namespace qlab {

// Closure operator c on Q (monotone, inflationary, idempotent) satisfying
// c(a * c(b)) = c(a * b).  Its fixed points carry a module structure with
// join c(x v y) and action c(a * x); every simple module arises that way,
// because a simple module is generated by any nonzero element and is
// therefore a quotient of the self-module.
struct CompatibleClosure {
  QuantalePtr quantale;
  std::vector<Elem> table;

  Elem operator()(Elem a) const { return table[a]; }
};

// Validates all four laws; throws InvariantFail with the failing law.
CompatibleClosure check_compatible_closure(QuantalePtr Q,
                                           std::vector<Elem> table);

// All compatible closures, enumerated through their fixed-point sets
// (meet-closed subsets containing top), in ascending order of the
// fixed-point bitmask.
std::vector<CompatibleClosure> enumerate_compatible_closures(QuantalePtr Q);

// The module on Fix(c); carrier elements keep their Q labels.
QModule module_from_closure(const CompatibleClosure& c);

enum class Faithfulness { none, faithful, strongly_faithful };
std::string faithfulness_name(Faithfulness f);

struct SimpleModuleWitness {
  QModulePtr module;
  Faithfulness level = Faithfulness::none;
  std::vector<Elem> closure_table;  // the closure it came from
};

// All simple modules over Q up to module isomorphism, each tagged with its
// faithfulness level, in order of discovery.  Throws SearchBoundExceeded
// when |Q| > bound (the scan is over 2^|Q| subsets).
std::vector<SimpleModuleWitness> enumerate_simple_modules(QuantalePtr Q,
                                                          int bound = 16);

struct PrimitivityResult {
  bool value = false;
  std::optional<SimpleModuleWitness> witness;
};
// Primitive: some simple module is faithful.  Strongly primitive: some
// simple module is strongly faithful.
PrimitivityResult is_primitive(QuantalePtr Q, int bound = 16);
PrimitivityResult is_strongly_primitive(QuantalePtr Q, int bound = 16);

// Primitive implies prime; exhibits the interpolating gamma for up to three
// nonzero pairs (alpha, beta), covering all pairs when fewer exist.
TheoremReport verify_primitive_implies_prime(QuantalePtr Q, int bound = 16);

// A prime quantale with a minimal left ideal is primitive: each minimal
// left ideal carries a faithful simple module structure under the product.
TheoremReport verify_minimal_ideal_theorem(QuantalePtr Q, int bound = 16);

// A commutative strongly primitive quantale is a field; traces the inverse
// construction delta * alpha = e through the witness module.
TheoremReport verify_comm_strongly_primitive_field(QuantalePtr Q,
                                                   int bound = 16);

// ---- bases ----------------------------------------------------------------

struct WeakBasis {
  std::vector<Elem> members;  // ascending carrier elements
  bool finite_only = true;    // joins restricted to finite families; in a
                              // finite module this changes nothing
};

// Number of distinct representations m = \/ (alpha_j . t_j) with t_j drawn
// from T (as a subset) and all alpha_j nonzero.  Bottom always has the
// empty representation.
long long representation_count(const QModule& M, const std::vector<Elem>& T,
                               Elem m);

// First subset (by size, then lexicographic member order) giving every
// element exactly one representation; nullopt if none.
std::optional<WeakBasis> find_weak_basis(const QModule& M,
                                         bool finite_only = true,
                                         int bound = 8);
std::vector<std::vector<Elem>> enumerate_weak_bases(const QModule& M,
                                                    int bound = 8);

struct CompletableResult {
  bool completable = false;
  std::optional<std::vector<Elem>> basis;  // first basis containing S
};
CompletableResult completable_to_basis(const QModule& M,
                                       const std::vector<Elem>& S,
                                       int bound = 8);

// The unique hom sending basis member t_j to targets[j]; always exists for
// a weak basis and is validated as a ModuleHom.
ModuleHom extend_basis_assignment(QModulePtr M, const WeakBasis& basis,
                                  QModulePtr target,
                                  const std::vector<Elem>& targets);

// ---- operator quantales and density ----------------------------------------

// A subquantale D of the equivariant endomorphism quantale of M, acting on
// M by evaluation.
struct OperatorQuantale {
  QModulePtr module;
  EndomorphismQuantale end_q;
  std::vector<Elem> members;  // indices into end_q, ascending

  Elem apply(Elem member_pos, Elem m) const {
    return end_q.tables[members[member_pos]][m];
  }
};
OperatorQuantale make_operator_quantale(QModulePtr M,
                                        EndomorphismQuantale end_q,
                                        std::vector<Elem> members);
// D = all of End_Q(M).
OperatorQuantale full_operator_quantale(QModulePtr M);

struct DensityCheck {
  bool value = false;
  Witness witness;  // failing (t, m) or (tuple, targets)
};

// Every nonzero t reaches every m through some f in D.
DensityCheck is_weakly_dense(const OperatorQuantale& D);

// Every tuple drawn from a subset completable to a basis reaches every
// target tuple through a single f in D.  Throws NoBasis when the module has
// no basis.
DensityCheck is_dense(const OperatorQuantale& D, int bound = 8);

// Over a division quantale, on a module with a basis: dense implies weakly
// dense; traces the constructed f on spot-check pairs.
TheoremReport verify_dense_implies_weakly_dense(const OperatorQuantale& D,
                                                int bound = 8);

// A weakly dense operator quantale is strongly primitive: the evaluation
// module is strongly faithful and simple.
TheoremReport density_theorem_part1(const OperatorQuantale& D);

// A strongly primitive quantale embeds, via alpha -> (alpha . -), as a
// weakly dense operator quantale on its witness module over the equivariant
// endomorphism quantale of that module.
TheoremReport density_theorem_part2(QuantalePtr Q, int bound = 16);

// Fixed instance on the eight-element power set over the two-element
// quantale: the cyclic submodules generated by {1,2} and {1} meet only in
// bottom, yet no equivariant join-endomap sends {1,2} to {1} and {1} to
// {2}; every map sending {1} to {2} sends {1,2} above {2}.
TheoremReport counterexample_no_extension();

}  // namespace qlab
