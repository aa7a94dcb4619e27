#include "qlab/lattice.hpp"

#include <algorithm>
#include <utility>

namespace qlab {

namespace {

Witness pair_witness(const std::vector<std::string>& labels, Elem a, Elem b) {
  return {{"a", labels[a]}, {"b", labels[b]}};
}

}  // namespace

FiniteLattice FiniteLattice::from_leq(std::vector<std::string> labels,
                                      std::vector<uint8_t> leq,
                                      std::string name) {
  const int n = static_cast<int>(labels.size());
  if (n == 0) {
    throw ValidationError("NoBottom", "empty element list has no bottom");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && leq[i * n + j] && leq[j * n + i]) {
        throw ValidationError("NotAPoset", "antisymmetry fails",
                              pair_witness(labels, i, j));
      }
    }
    if (!leq[i * n + i]) {
      throw ValidationError("NotAPoset", "reflexivity fails",
                            {{"a", labels[i]}});
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!leq[i * n + j]) continue;
      for (int k = 0; k < n; ++k) {
        if (leq[j * n + k] && !leq[i * n + k]) {
          throw ValidationError(
              "NotAPoset", "transitivity fails",
              {{"a", labels[i]}, {"b", labels[j]}, {"c", labels[k]}});
        }
      }
    }
  }

  FiniteLattice L;
  L.n_ = n;
  L.name_ = std::move(name);
  L.labels_ = std::move(labels);
  L.leq_ = std::move(leq);
  L.join_.assign(static_cast<size_t>(n) * n, -1);
  L.meet_.assign(static_cast<size_t>(n) * n, -1);

  // Bitset rows of the order and its transpose, plus a linear extension, so
  // lub/glb search stays near O(n^2) words even for large derived lattices.
  const int words = (n + 63) / 64;
  std::vector<uint64_t> up(static_cast<size_t>(n) * words, 0);
  std::vector<uint64_t> down(static_cast<size_t>(n) * words, 0);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (L.leq_[a * n + b]) {
        up[a * words + b / 64] |= uint64_t{1} << (b % 64);
        down[b * words + a / 64] |= uint64_t{1} << (a % 64);
      }
    }
  }
  std::vector<int> topo(n);
  for (int i = 0; i < n; ++i) topo[i] = i;
  std::stable_sort(topo.begin(), topo.end(), [&](int a, int b) {
    int da = 0, db = 0;
    for (int w = 0; w < words; ++w) {
      da += __builtin_popcountll(down[a * words + w]);
      db += __builtin_popcountll(down[b * words + w]);
    }
    return da < db;
  });

  std::vector<uint64_t> cand(words);
  auto bound_of = [&](int a, int b, const std::vector<uint64_t>& rows,
                      bool least) -> Elem {
    for (int w = 0; w < words; ++w) {
      cand[w] = rows[a * words + w] & rows[b * words + w];
    }
    // A least element of the candidate set, if one exists, is the unique
    // minimal element, so the first candidate in a linear extension is the
    // only possibility; for glb run the extension backwards.
    Elem pick = -1;
    if (least) {
      for (int i = 0; i < n; ++i) {
        int u = topo[i];
        if (cand[u / 64] & (uint64_t{1} << (u % 64))) {
          pick = u;
          break;
        }
      }
    } else {
      for (int i = n - 1; i >= 0; --i) {
        int u = topo[i];
        if (cand[u / 64] & (uint64_t{1} << (u % 64))) {
          pick = u;
          break;
        }
      }
    }
    if (pick < 0) return -1;
    const std::vector<uint64_t>& check = least ? up : down;
    for (int w = 0; w < words; ++w) {
      if ((cand[w] & ~check[pick * words + w]) != 0) return -1;
    }
    return pick;
  };

  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      const Elem lub = bound_of(a, b, up, true);
      if (lub < 0) {
        throw ValidationError("NotALattice", "pair has no least upper bound",
                              pair_witness(L.labels_, a, b));
      }
      const Elem glb = bound_of(a, b, down, false);
      if (glb < 0) {
        throw ValidationError("NotALattice", "pair has no greatest lower bound",
                              pair_witness(L.labels_, a, b));
      }
      L.join_[a * n + b] = L.join_[b * n + a] = lub;
      L.meet_[a * n + b] = L.meet_[b * n + a] = glb;
    }
  }

  Elem bot = 0, top = 0;
  for (int i = 1; i < n; ++i) {
    bot = L.meet_[bot * n + i];
    top = L.join_[top * n + i];
  }
  L.bottom_ = bot;
  L.top_ = top;
  return L;
}

FiniteLattice FiniteLattice::build(
    std::vector<std::string> labels,
    const std::vector<std::pair<Elem, Elem>>& relation, RelationMode mode,
    std::string name) {
  const int n = static_cast<int>(labels.size());
  if (n == 0) {
    throw ValidationError("NoBottom", "empty element list has no bottom");
  }
  std::vector<uint8_t> leq(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) leq[i * n + i] = 1;
  for (auto [lo, hi] : relation) {
    if (lo < 0 || lo >= n || hi < 0 || hi >= n) {
      throw ValidationError("NotAPoset", "relation pair out of range");
    }
    leq[lo * n + hi] = 1;
  }
  if (mode == RelationMode::covers) {
    for (int k = 0; k < n; ++k) {
      for (int i = 0; i < n; ++i) {
        if (!leq[i * n + k]) continue;
        for (int j = 0; j < n; ++j) {
          if (leq[k * n + j]) leq[i * n + j] = 1;
        }
      }
    }
  }
  return from_leq(std::move(labels), std::move(leq), std::move(name));
}

Elem FiniteLattice::join_of(const std::vector<Elem>& subset) const {
  Elem acc = bottom_;
  for (Elem x : subset) acc = join(acc, x);
  return acc;
}

Elem FiniteLattice::meet_of(const std::vector<Elem>& subset) const {
  Elem acc = top_;
  for (Elem x : subset) acc = meet(acc, x);
  return acc;
}

std::vector<Elem> FiniteLattice::atoms() const {
  std::vector<Elem> out;
  for (Elem x = 0; x < n_; ++x) {
    if (x == bottom_ || !leq(bottom_, x)) continue;
    bool cover = true;
    for (Elem y = 0; y < n_; ++y) {
      if (y != bottom_ && y != x && leq(y, x)) {
        cover = false;
        break;
      }
    }
    if (cover) out.push_back(x);
  }
  return out;
}

std::vector<Elem> FiniteLattice::join_irreducibles() const {
  std::vector<Elem> out;
  for (Elem x = 0; x < n_; ++x) {
    if (x == bottom_) continue;
    int lower_covers = 0;
    for (Elem y = 0; y < n_; ++y) {
      if (y == x || !leq(y, x)) continue;
      bool covered = true;
      for (Elem z = 0; z < n_; ++z) {
        if (z != x && z != y && leq(y, z) && leq(z, x)) {
          covered = false;
          break;
        }
      }
      if (covered) ++lower_covers;
    }
    if (lower_covers == 1) out.push_back(x);
  }
  return out;
}

std::vector<std::pair<Elem, Elem>> FiniteLattice::cover_pairs() const {
  std::vector<std::pair<Elem, Elem>> out;
  for (Elem a = 0; a < n_; ++a) {
    for (Elem b = 0; b < n_; ++b) {
      if (a == b || !leq(a, b)) continue;
      bool cover = true;
      for (Elem c = 0; c < n_; ++c) {
        if (c != a && c != b && leq(a, c) && leq(c, b)) {
          cover = false;
          break;
        }
      }
      if (cover) out.emplace_back(a, b);
    }
  }
  return out;
}

std::optional<Elem> FiniteLattice::index_of(const std::string& label) const {
  for (Elem i = 0; i < n_; ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

bool FiniteLattice::same_tables(const FiniteLattice& other) const {
  return n_ == other.n_ && leq_ == other.leq_;
}

std::vector<LawStatus> lattice_laws(const FiniteLattice& L) {
  // The constructor already enforced everything; re-derive for reporting.
  std::vector<LawStatus> out;
  out.push_back(
      {"poset-order", true, {}, "reflexive, antisymmetric, transitive"});
  LawStatus lub{"lub-exists", true, {}, ""};
  LawStatus glb{"glb-exists", true, {}, ""};
  for (Elem a = 0; a < L.size() && lub.ok && glb.ok; ++a) {
    for (Elem b = 0; b < L.size(); ++b) {
      Elem j = L.join(a, b);
      if (!L.leq(a, j) || !L.leq(b, j)) {
        lub = {"lub-exists", false, {{"a", L.label(a)}, {"b", L.label(b)}}, ""};
        break;
      }
      Elem m = L.meet(a, b);
      if (!L.leq(m, a) || !L.leq(m, b)) {
        glb = {"glb-exists", false, {{"a", L.label(a)}, {"b", L.label(b)}}, ""};
        break;
      }
    }
  }
  out.push_back(lub);
  out.push_back(glb);
  out.push_back({"bounds-exist", true,
                 {{"bottom", L.label(L.bottom())}, {"top", L.label(L.top())}},
                 ""});
  return out;
}

FiniteLattice restrict_lattice(const FiniteLattice& L,
                               const std::vector<Elem>& members,
                               std::string name) {
  const int k = static_cast<int>(members.size());
  std::vector<std::string> labels;
  labels.reserve(k);
  for (Elem m : members) labels.push_back(L.label(m));
  std::vector<uint8_t> leq(static_cast<size_t>(k) * k, 0);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      leq[i * k + j] = L.leq(members[i], members[j]) ? 1 : 0;
    }
  }
  return FiniteLattice::from_leq(std::move(labels), std::move(leq),
                                 std::move(name));
}

bool is_join_preserving(const std::vector<Elem>& table,
                        const FiniteLattice& src, const FiniteLattice& dst) {
  if (static_cast<int>(table.size()) != src.size()) return false;
  for (Elem v : table) {
    if (v < 0 || v >= dst.size()) return false;
  }
  if (table[src.bottom()] != dst.bottom()) return false;
  for (Elem a = 0; a < src.size(); ++a) {
    for (Elem b = a + 1; b < src.size(); ++b) {
      if (table[src.join(a, b)] != dst.join(table[a], table[b])) return false;
    }
  }
  return true;
}

JoinMap check_join_map(LatticePtr src, LatticePtr dst,
                       std::vector<Elem> values) {
  if (static_cast<int>(values.size()) != src->size()) {
    throw ValidationError("JoinFail", "value table size mismatch");
  }
  if (values[src->bottom()] != dst->bottom()) {
    throw ValidationError("JoinFail", "bottom not preserved",
                          {{"a", src->label(src->bottom())}});
  }
  for (Elem a = 0; a < src->size(); ++a) {
    for (Elem b = a + 1; b < src->size(); ++b) {
      if (values[src->join(a, b)] != dst->join(values[a], values[b])) {
        throw ValidationError("JoinFail", "binary join not preserved",
                              {{"a", src->label(a)}, {"b", src->label(b)}});
      }
    }
  }
  return JoinMap{std::move(src), std::move(dst), std::move(values)};
}

std::vector<std::vector<Elem>> enumerate_join_endomorphisms(
    const FiniteLattice& L) {
  const int n = L.size();
  const std::vector<Elem> irr = L.join_irreducibles();
  const int k = static_cast<int>(irr.size());

  // below[x] = join-irreducibles lying below x
  std::vector<std::vector<int>> below(n);
  for (Elem x = 0; x < n; ++x) {
    for (int i = 0; i < k; ++i) {
      if (L.leq(irr[i], x)) below[x].push_back(i);
    }
  }

  std::vector<std::vector<Elem>> out;
  std::vector<Elem> assign(k, 0);
  std::vector<Elem> table(n);
  while (true) {
    for (Elem x = 0; x < n; ++x) {
      Elem acc = L.bottom();
      for (int i : below[x]) acc = L.join(acc, assign[i]);
      table[x] = acc;
    }
    bool keep = true;
    for (int i = 0; i < k; ++i) {
      if (table[irr[i]] != assign[i]) {
        keep = false;
        break;
      }
    }
    if (keep && is_join_preserving(table, L, L)) out.push_back(table);

    int pos = k - 1;
    while (pos >= 0 && assign[pos] == n - 1) assign[pos--] = 0;
    if (pos < 0) break;
    ++assign[pos];
  }
  std::sort(out.begin(), out.end());
  return out;
}

AtomicFrameResult is_atomic_frame(const FiniteLattice& L) {
  const int n = L.size();
  if (n > 20) throw bound_exceeded("frame law subset scan", n, 20);

  AtomicFrameResult res;
  for (Elem a = 0; a < n; ++a) {
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
      Elem big = L.bottom();
      Elem distributed = L.bottom();
      for (Elem s = 0; s < n; ++s) {
        if (!(mask & (1u << s))) continue;
        big = L.join(big, s);
        distributed = L.join(distributed, L.meet(a, s));
      }
      if (L.meet(a, big) != distributed) {
        std::vector<Elem> subset;
        for (Elem s = 0; s < n; ++s) {
          if (mask & (1u << s)) subset.push_back(s);
        }
        res.frame_violation = {a, subset};
        std::string names;
        for (Elem s : subset) names += (names.empty() ? "" : ",") + L.label(s);
        res.certificate =
            "frame law fails at a=" + L.label(a) + " S={" + names + "}";
        return res;
      }
    }
  }
  const std::vector<Elem> atoms = L.atoms();
  for (Elem x = 0; x < n; ++x) {
    Elem acc = L.bottom();
    for (Elem at : atoms) {
      if (L.leq(at, x)) acc = L.join(acc, at);
    }
    if (acc != x) {
      res.non_atomic = x;
      res.certificate = L.label(x) + " is not a join of atoms";
      return res;
    }
  }
  res.atomic_frame = true;
  res.certificate = "atomic frame";
  return res;
}

namespace {

bool iso_extend(const FiniteLattice& A, const FiniteLattice& B,
                std::vector<Elem>& img, std::vector<uint8_t>& used, Elem next) {
  if (next == A.size()) return true;
  for (Elem cand = 0; cand < B.size(); ++cand) {
    if (used[cand]) continue;
    bool ok = true;
    for (Elem prev = 0; prev < next; ++prev) {
      if (A.leq(prev, next) != B.leq(img[prev], cand) ||
          A.leq(next, prev) != B.leq(cand, img[prev])) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    img[next] = cand;
    used[cand] = 1;
    if (iso_extend(A, B, img, used, next + 1)) return true;
    used[cand] = 0;
  }
  return false;
}

}  // namespace

std::optional<std::vector<Elem>> lattice_isomorphism(const FiniteLattice& A,
                                                     const FiniteLattice& B) {
  if (A.size() != B.size()) return std::nullopt;
  std::vector<Elem> img(A.size(), -1);
  std::vector<uint8_t> used(B.size(), 0);
  if (iso_extend(A, B, img, used, 0)) return img;
  return std::nullopt;
}

}  // namespace qlab
