#include "qlab/quantale.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <unordered_map>
#include <utility>

namespace qlab {

namespace {

std::string elem_list_label(const FiniteLattice& N,
                            const std::vector<Elem>& table) {
  std::string s = "[";
  for (size_t i = 0; i < table.size(); ++i) {
    if (i) s += ",";
    s += N.label(table[i]);
  }
  return s + "]";
}

}  // namespace

std::vector<LawStatus> Quantale::laws(const FiniteLattice& L,
                                      const std::vector<Elem>& product,
                                      Elem unit) {
  const int n = L.size();
  if (static_cast<int>(product.size()) != n * n || unit < 0 || unit >= n) {
    throw ValidationError("InvariantFail", "product table or unit malformed");
  }
  for (Elem v : product) {
    if (v < 0 || v >= n) {
      throw ValidationError("InvariantFail", "product value out of range");
    }
  }
  const Elem* p = product.data();
  auto lbl = [&](Elem x) { return L.label(x); };

  std::vector<LawStatus> out;
  out.push_back({"non-trivial", n >= 2, {}, n >= 2 ? "" : "one-element lattice"});

  LawStatus assoc{"product-associative", true, {}, ""};
  for (Elem a = 0; a < n && assoc.ok; ++a) {
    for (Elem b = 0; b < n && assoc.ok; ++b) {
      const Elem ab = p[a * n + b];
      for (Elem c = 0; c < n; ++c) {
        if (p[ab * n + c] != p[a * n + p[b * n + c]]) {
          assoc = {"product-associative",
                   false,
                   {{"alpha", lbl(a)}, {"beta", lbl(b)}, {"gamma", lbl(c)}},
                   ""};
          break;
        }
      }
    }
  }
  out.push_back(assoc);

  LawStatus dl{"distributes-left", true, {}, "a*(b v c) = a*b v a*c"};
  for (Elem a = 0; a < n && dl.ok; ++a) {
    for (Elem b = 0; b < n && dl.ok; ++b) {
      for (Elem c = 0; c < n; ++c) {
        if (p[a * n + L.join(b, c)] != L.join(p[a * n + b], p[a * n + c])) {
          dl = {"distributes-left",
                false,
                {{"alpha", lbl(a)}, {"beta", lbl(b)}, {"gamma", lbl(c)}},
                "a*(b v c) = a*b v a*c"};
          break;
        }
      }
    }
  }
  out.push_back(dl);

  LawStatus dr{"distributes-right", true, {}, "(a v b)*c = a*c v b*c"};
  for (Elem a = 0; a < n && dr.ok; ++a) {
    for (Elem b = 0; b < n && dr.ok; ++b) {
      for (Elem c = 0; c < n; ++c) {
        if (p[L.join(a, b) * n + c] != L.join(p[a * n + c], p[b * n + c])) {
          dr = {"distributes-right",
                false,
                {{"alpha", lbl(a)}, {"beta", lbl(b)}, {"gamma", lbl(c)}},
                "(a v b)*c = a*c v b*c"};
          break;
        }
      }
    }
  }
  out.push_back(dr);

  // Empty-join case of distributivity: bottom absorbs on both sides.
  LawStatus babs{"bottom-absorbs", true, {}, ""};
  const Elem bot = L.bottom();
  for (Elem a = 0; a < n; ++a) {
    if (p[a * n + bot] != bot || p[bot * n + a] != bot) {
      babs = {"bottom-absorbs", false, {{"alpha", lbl(a)}}, ""};
      break;
    }
  }
  out.push_back(babs);

  LawStatus ul{"unit-law", true, {{"unit", lbl(unit)}}, ""};
  for (Elem a = 0; a < n; ++a) {
    if (p[unit * n + a] != a || p[a * n + unit] != a) {
      ul = {"unit-law", false, {{"unit", lbl(unit)}, {"alpha", lbl(a)}}, ""};
      break;
    }
  }
  out.push_back(ul);
  return out;
}

Quantale Quantale::make(LatticePtr lattice, std::vector<Elem> product,
                        Elem unit, std::string name) {
  static const std::unordered_map<std::string, std::string> kCode = {
      {"non-trivial", "Trivial"},
      {"product-associative", "AssocFail"},
      {"distributes-left", "DistribFail"},
      {"distributes-right", "DistribFail"},
      {"bottom-absorbs", "DistribFail"},
      {"unit-law", "UnitFail"},
  };
  for (const LawStatus& law : laws(*lattice, product, unit)) {
    if (!law.ok) {
      throw ValidationError(kCode.at(law.law), law.law + " fails",
                            law.witness);
    }
  }
  Quantale Q;
  Q.lattice_ = std::move(lattice);
  Q.product_ = std::move(product);
  Q.unit_ = unit;
  Q.name_ = std::move(name);
  return Q;
}

std::optional<std::pair<Elem, Elem>> Quantale::commutativity_witness() const {
  for (Elem a = 0; a < size(); ++a) {
    for (Elem b = a + 1; b < size(); ++b) {
      if (times(a, b) != times(b, a)) return std::make_pair(a, b);
    }
  }
  return std::nullopt;
}

bool Quantale::commutative() const { return !commutativity_witness(); }

std::vector<LawStatus> quantale_hom_laws(const Quantale& src,
                                         const Quantale& dst,
                                         const std::vector<Elem>& values) {
  if (static_cast<int>(values.size()) != src.size()) {
    throw ValidationError("InvariantFail", "hom value table size mismatch");
  }
  const FiniteLattice& S = src.lattice();
  const FiniteLattice& D = dst.lattice();
  std::vector<LawStatus> out;

  LawStatus joins{"preserves-joins", true, {}, "includes bottom (empty join)"};
  if (values[S.bottom()] != D.bottom()) {
    joins = {"preserves-joins",
             false,
             {{"a", S.label(S.bottom())}},
             "bottom not preserved"};
  } else {
    for (Elem a = 0; a < src.size() && joins.ok; ++a) {
      for (Elem b = a + 1; b < src.size(); ++b) {
        if (values[S.join(a, b)] != D.join(values[a], values[b])) {
          joins = {"preserves-joins",
                   false,
                   {{"a", S.label(a)}, {"b", S.label(b)}},
                   ""};
          break;
        }
      }
    }
  }
  out.push_back(joins);

  LawStatus prod{"preserves-product", true, {}, ""};
  for (Elem a = 0; a < src.size() && prod.ok; ++a) {
    for (Elem b = 0; b < src.size(); ++b) {
      if (values[src.times(a, b)] != dst.times(values[a], values[b])) {
        prod = {"preserves-product",
                false,
                {{"a", S.label(a)}, {"b", S.label(b)}},
                ""};
        break;
      }
    }
  }
  out.push_back(prod);

  out.push_back({"preserves-unit",
                 values[src.unit()] == dst.unit(),
                 {{"unit", S.label(src.unit())}},
                 ""});
  return out;
}

QuantaleHom check_quantale_hom(QuantalePtr src, QuantalePtr dst,
                               std::vector<Elem> values) {
  static const std::unordered_map<std::string, std::string> kCode = {
      {"preserves-joins", "JoinFail"},
      {"preserves-product", "ProductFail"},
      {"preserves-unit", "UnitFail"},
  };
  for (const LawStatus& law : quantale_hom_laws(*src, *dst, values)) {
    if (!law.ok) {
      throw ValidationError(kCode.at(law.law), law.law + " fails", law.witness);
    }
  }
  return QuantaleHom{std::move(src), std::move(dst), std::move(values)};
}

bool is_subquantale(const Quantale& Q, const std::vector<Elem>& members) {
  std::vector<uint8_t> in(Q.size(), 0);
  for (Elem m : members) {
    if (m < 0 || m >= Q.size()) return false;
    in[m] = 1;
  }
  if (!in[Q.bottom()] || !in[Q.unit()]) return false;
  for (Elem a : members) {
    for (Elem b : members) {
      if (!in[Q.join(a, b)] || !in[Q.times(a, b)]) return false;
    }
  }
  return true;
}

std::vector<Elem> image_subquantale(const QuantaleHom& h) {
  std::vector<Elem> img(h.values);
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  if (!is_subquantale(*h.target, img)) {
    throw TheoremViolation("image of a quantale hom is not a subquantale");
  }
  return img;
}

SubQuantale restrict_quantale(const Quantale& Q, std::vector<Elem> members,
                              std::string name) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (!is_subquantale(Q, members)) {
    throw ValidationError("InvariantFail",
                          "member set is not a subquantale of " + Q.name());
  }
  std::vector<Elem> index_in_sub(Q.size(), -1);
  for (size_t i = 0; i < members.size(); ++i) {
    index_in_sub[members[i]] = static_cast<Elem>(i);
  }
  const int k = static_cast<int>(members.size());
  std::vector<Elem> product(static_cast<size_t>(k) * k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      product[i * k + j] = index_in_sub[Q.times(members[i], members[j])];
    }
  }
  auto lattice = std::make_shared<const FiniteLattice>(
      restrict_lattice(Q.lattice(), members, name + ".lattice"));
  auto quantale = std::make_shared<const Quantale>(
      Quantale::make(lattice, std::move(product), index_in_sub[Q.unit()],
                     std::move(name)));
  return SubQuantale{quantale, std::move(members), std::move(index_in_sub)};
}

PrimeResult is_prime(const Quantale& Q) {
  const Elem bot = Q.bottom();
  for (Elem a = 0; a < Q.size(); ++a) {
    if (a == bot) continue;
    for (Elem b = 0; b < Q.size(); ++b) {
      if (b == bot) continue;
      bool all_bottom = true;
      for (Elem g = 0; g < Q.size(); ++g) {
        if (Q.times(Q.times(a, g), b) != bot) {
          all_bottom = false;
          break;
        }
      }
      if (all_bottom) return {false, std::make_pair(a, b)};
    }
  }
  return {true, std::nullopt};
}

DivisionResult is_division(const Quantale& Q) {
  const Elem bot = Q.bottom();
  const Elem e = Q.unit();
  DivisionResult res;
  res.inverse.assign(Q.size(), -1);
  for (Elem a = 0; a < Q.size(); ++a) {
    if (a == bot) continue;
    Elem found = -1;
    for (Elem b = 0; b < Q.size(); ++b) {
      if (Q.times(a, b) == e && Q.times(b, a) == e) {
        if (found >= 0) {
          throw TheoremViolation("two-sided inverse is not unique",
                                 {{"alpha", Q.label(a)}});
        }
        found = b;
      }
    }
    if (found < 0) {
      res.division = false;
      res.witness = a;
      res.inverse.clear();
      return res;
    }
    res.inverse[a] = found;
  }
  res.division = true;
  return res;
}

FieldResult is_field(const Quantale& Q) {
  FieldResult res;
  res.comm_witness = Q.commutativity_witness();
  res.commutative = !res.comm_witness;
  res.division = is_division(Q);
  res.field = res.commutative && res.division.division;
  return res;
}

namespace {

uint64_t members_to_mask(const std::vector<Elem>& members) {
  uint64_t m = 0;
  for (Elem x : members) m |= uint64_t{1} << x;
  return m;
}

std::vector<Elem> mask_to_members(uint64_t mask, int n) {
  std::vector<Elem> out;
  for (Elem x = 0; x < n; ++x) {
    if (mask & (uint64_t{1} << x)) out.push_back(x);
  }
  return out;
}

// Close a subset under binary joins and left multiplication by all of Q.
uint64_t left_ideal_closure(const Quantale& Q, uint64_t mask) {
  const int n = Q.size();
  mask |= uint64_t{1} << Q.bottom();
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Elem> cur = mask_to_members(mask, n);
    for (Elem s : cur) {
      for (Elem a = 0; a < n; ++a) {
        uint64_t bit = uint64_t{1} << Q.times(a, s);
        if (!(mask & bit)) {
          mask |= bit;
          changed = true;
        }
      }
      for (Elem t : cur) {
        uint64_t bit = uint64_t{1} << Q.join(s, t);
        if (!(mask & bit)) {
          mask |= bit;
          changed = true;
        }
      }
    }
  }
  return mask;
}

}  // namespace

std::vector<Elem> principal_left_ideal(const Quantale& Q, Elem a) {
  if (Q.size() > 60) throw bound_exceeded("left ideal closure", Q.size(), 60);
  return mask_to_members(left_ideal_closure(Q, uint64_t{1} << a), Q.size());
}

std::vector<std::vector<Elem>> left_ideals(const Quantale& Q) {
  const int n = Q.size();
  if (n > 60) throw bound_exceeded("left ideal enumeration", n, 60);

  // Every left ideal is the ideal join of the principal ideals of its
  // members, so closing the principal ones under pairwise join is complete.
  std::vector<uint64_t> found;
  auto add = [&](uint64_t m) {
    if (std::find(found.begin(), found.end(), m) == found.end()) {
      found.push_back(m);
      return true;
    }
    return false;
  };
  add(uint64_t{1} << Q.bottom());
  for (Elem a = 0; a < n; ++a) {
    add(left_ideal_closure(Q, uint64_t{1} << a));
  }
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<uint64_t> snapshot = found;
    for (size_t i = 0; i < snapshot.size(); ++i) {
      for (size_t j = i + 1; j < snapshot.size(); ++j) {
        if (add(left_ideal_closure(Q, snapshot[i] | snapshot[j]))) grew = true;
      }
    }
  }
  std::sort(found.begin(), found.end());
  std::vector<std::vector<Elem>> out;
  out.reserve(found.size());
  for (uint64_t m : found) out.push_back(mask_to_members(m, n));
  return out;
}

std::vector<std::vector<Elem>> minimal_left_ideals(const Quantale& Q) {
  const std::vector<std::vector<Elem>> all = left_ideals(Q);
  std::vector<uint64_t> masks;
  masks.reserve(all.size());
  for (const auto& ideal : all) masks.push_back(members_to_mask(ideal));
  const uint64_t zero = uint64_t{1} << Q.bottom();

  std::vector<std::vector<Elem>> out;
  for (size_t i = 0; i < all.size(); ++i) {
    if (masks[i] == zero) continue;
    bool minimal = true;
    for (size_t j = 0; j < all.size(); ++j) {
      if (j == i || masks[j] == zero) continue;
      if ((masks[j] & masks[i]) == masks[j] && masks[j] != masks[i]) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(all[i]);
  }
  return out;
}

std::optional<Elem> EndomorphismQuantale::index_of_table(
    const std::vector<Elem>& t) const {
  auto it = std::lower_bound(tables.begin(), tables.end(), t);
  if (it != tables.end() && *it == t) {
    return static_cast<Elem>(it - tables.begin());
  }
  return std::nullopt;
}

EndomorphismQuantale end_quantale(LatticePtr N) {
  if (N->size() < 2) {
    throw ValidationError("Trivial",
                          "endomorphism quantale of a one-element lattice");
  }
  std::vector<std::vector<Elem>> tables = enumerate_join_endomorphisms(*N);
  const int m = static_cast<int>(tables.size());
  const int nb = N->size();

  std::vector<std::string> labels;
  labels.reserve(m);
  for (const auto& t : tables) labels.push_back(elem_list_label(*N, t));

  std::vector<uint8_t> leq(static_cast<size_t>(m) * m, 0);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      bool le = true;
      for (int x = 0; x < nb; ++x) {
        if (!N->leq(tables[i][x], tables[j][x])) {
          le = false;
          break;
        }
      }
      leq[i * m + j] = le ? 1 : 0;
    }
  }
  auto lattice = std::make_shared<const FiniteLattice>(FiniteLattice::from_leq(
      std::move(labels), std::move(leq), "end(" + N->name() + ")"));

  // Product is composition: (f*g)(x) = f(g(x)).
  std::vector<Elem> product(static_cast<size_t>(m) * m, -1);
  std::vector<Elem> composed(nb);
  for (int f = 0; f < m; ++f) {
    for (int g = 0; g < m; ++g) {
      for (int x = 0; x < nb; ++x) composed[x] = tables[f][tables[g][x]];
      auto it = std::lower_bound(tables.begin(), tables.end(), composed);
      if (it == tables.end() || *it != composed) {
        throw TheoremViolation("composite of join-endomorphisms not found");
      }
      product[f * m + g] = static_cast<Elem>(it - tables.begin());
    }
  }
  std::vector<Elem> identity(nb);
  for (int x = 0; x < nb; ++x) identity[x] = x;
  auto idx = std::lower_bound(tables.begin(), tables.end(), identity);
  if (idx == tables.end() || *idx != identity) {
    throw TheoremViolation("identity map missing from endomorphism lattice");
  }
  const Elem unit = static_cast<Elem>(idx - tables.begin());

  auto quantale = std::make_shared<const Quantale>(Quantale::make(
      lattice, std::move(product), unit, "end(" + N->name() + ")"));
  return EndomorphismQuantale{quantale, std::move(N), std::move(tables)};
}

namespace {

void order_iso_search(const FiniteLattice& A, const FiniteLattice& B,
                      std::vector<Elem>& img, std::vector<uint8_t>& used,
                      Elem next, const std::function<bool()>& on_complete,
                      bool& stop) {
  if (stop) return;
  if (next == A.size()) {
    stop = on_complete();
    return;
  }
  for (Elem cand = 0; cand < B.size() && !stop; ++cand) {
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
    order_iso_search(A, B, img, used, next + 1, on_complete, stop);
    used[cand] = 0;
  }
}

}  // namespace

std::optional<std::vector<Elem>> quantale_isomorphism(const Quantale& A,
                                                      const Quantale& B) {
  if (A.size() != B.size()) return std::nullopt;
  std::vector<Elem> img(A.size(), -1);
  std::vector<uint8_t> used(B.size(), 0);
  std::optional<std::vector<Elem>> result;
  bool stop = false;
  auto on_complete = [&]() {
    if (img[A.unit()] != B.unit()) return false;
    for (Elem a = 0; a < A.size(); ++a) {
      for (Elem b = 0; b < A.size(); ++b) {
        if (img[A.times(a, b)] != B.times(img[a], img[b])) return false;
      }
    }
    result = img;
    return true;
  };
  order_iso_search(A.lattice(), B.lattice(), img, used, 0, on_complete, stop);
  return result;
}

}  // namespace qlab
