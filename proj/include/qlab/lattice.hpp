#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qlab/errors.hpp"

namespace qlab {

// Canonical element index.  Elements of every structure are indexed by
// declaration order; all tables, witnesses and enumerations use these indices.
using Elem = int;

enum class RelationMode { covers, full_leq };

// Finite bounded lattice with precomputed order and join/meet tables.
// Immutable after construction; construction validates that the input
// relation is a partial order in which every pair has a least upper bound
// and a greatest lower bound.
class FiniteLattice {
 public:
  // `relation` lists pairs (lo, hi) of element indices.
  //   covers:   leq is the reflexive-transitive closure of the pairs
  //   full_leq: the pairs are the order itself (diagonal implied)
  // Throws NotAPoset / NotALattice / NoBottom with a witness on failure.
  static FiniteLattice build(std::vector<std::string> labels,
                             const std::vector<std::pair<Elem, Elem>>& relation,
                             RelationMode mode, std::string name = "");

  // Same validation, starting from a full n*n order matrix.
  static FiniteLattice from_leq(std::vector<std::string> labels,
                                std::vector<uint8_t> leq, std::string name);

  int size() const noexcept { return n_; }
  bool trivial() const noexcept { return n_ == 1; }
  bool leq(Elem a, Elem b) const { return leq_[a * n_ + b] != 0; }
  Elem join(Elem a, Elem b) const { return join_[a * n_ + b]; }
  Elem meet(Elem a, Elem b) const { return meet_[a * n_ + b]; }
  Elem bottom() const noexcept { return bottom_; }
  Elem top() const noexcept { return top_; }

  Elem join_of(const std::vector<Elem>& subset) const;  // empty -> bottom
  Elem meet_of(const std::vector<Elem>& subset) const;  // empty -> top

  std::vector<Elem> atoms() const;  // upper covers of bottom, ascending
  // Elements with exactly one lower cover (bottom excluded).  Every element
  // is the join of the join-irreducibles below it.
  std::vector<Elem> join_irreducibles() const;
  // Covering pairs (a, b) with a covered by b, for emission.
  std::vector<std::pair<Elem, Elem>> cover_pairs() const;

  const std::string& label(Elem a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& name() const { return name_; }
  std::optional<Elem> index_of(const std::string& label) const;

  // Table equality; labels and name are ignored.
  bool same_tables(const FiniteLattice& other) const;

 private:
  FiniteLattice() = default;

  int n_ = 0;
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<uint8_t> leq_;
  std::vector<Elem> join_;
  std::vector<Elem> meet_;
  Elem bottom_ = 0;
  Elem top_ = 0;
};

using LatticePtr = std::shared_ptr<const FiniteLattice>;

// Law-by-law report for the `check` command: re-derives poset laws and
// lub/glb existence from the order matrix.
std::vector<LawStatus> lattice_laws(const FiniteLattice& L);

// Join-preserving map between lattices, stored as a value table indexed by
// source element.
struct JoinMap {
  LatticePtr source;
  LatticePtr target;
  std::vector<Elem> values;

  Elem operator()(Elem a) const { return values[a]; }
};

// True iff table preserves bottom and all binary joins (hence all joins of
// subsets, by iteration).
bool is_join_preserving(const std::vector<Elem>& table,
                        const FiniteLattice& src, const FiniteLattice& dst);

// Validating constructor for JoinMap; throws JoinFail.
JoinMap check_join_map(LatticePtr src, LatticePtr dst,
                       std::vector<Elem> values);

// All join-preserving endomaps of L, as value tables in ascending
// lexicographic order.  Works by assigning images to the join-irreducibles
// and extending by joins; assignments whose extension is not join-preserving
// or disagrees with the assignment are discarded.
std::vector<std::vector<Elem>> enumerate_join_endomorphisms(
    const FiniteLattice& L);

struct AtomicFrameResult {
  bool atomic_frame = false;
  // First violation found, in scan order: either the frame law (element a
  // and subset S with a /\ \/S != \/{a /\ s}) or an element that is not the
  // join of the atoms below it.
  std::optional<std::pair<Elem, std::vector<Elem>>> frame_violation;
  std::optional<Elem> non_atomic;
  std::string certificate;
};

// Checks the frame law over every subset, then atomicity.
AtomicFrameResult is_atomic_frame(const FiniteLattice& L);

// Order isomorphism search by backtracking; nullopt if none exists.  The
// returned vector maps A-indices to B-indices.
std::optional<std::vector<Elem>> lattice_isomorphism(const FiniteLattice& A,
                                                     const FiniteLattice& B);

// Sub-poset on `members` (kept in the given order, labels inherited),
// validated as a lattice.  For join-closed subsets containing their own
// bottom the restricted joins agree with the ambient ones.
FiniteLattice restrict_lattice(const FiniteLattice& L,
                               const std::vector<Elem>& members,
                               std::string name);

}  // namespace qlab
