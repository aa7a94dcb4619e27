#include "qlab/qmodule.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>
#include <utility>

namespace qlab {

std::vector<LawStatus> QModule::laws(const Quantale& Q, const FiniteLattice& M,
                                     const std::vector<Elem>& action) {
  const int nq = Q.size();
  const int nm = M.size();
  if (static_cast<int>(action.size()) != nq * nm) {
    throw ValidationError("InvariantFail", "action table size mismatch");
  }
  for (Elem v : action) {
    if (v < 0 || v >= nm) {
      throw ValidationError("InvariantFail", "action value out of range");
    }
  }
  const Elem* act = action.data();
  std::vector<LawStatus> out;

  LawStatus js{"action-join-scalar", true, {}, "(a v b).m = a.m v b.m"};
  for (Elem a = 0; a < nq && js.ok; ++a) {
    for (Elem b = a + 1; b < nq && js.ok; ++b) {
      const Elem ab = Q.join(a, b);
      for (Elem m = 0; m < nm; ++m) {
        if (act[ab * nm + m] != M.join(act[a * nm + m], act[b * nm + m])) {
          js = {"action-join-scalar",
                false,
                {{"alpha", Q.label(a)}, {"beta", Q.label(b)}, {"m", M.label(m)}},
                "(a v b).m = a.m v b.m"};
          break;
        }
      }
    }
  }
  out.push_back(js);

  LawStatus je{"action-join-element", true, {}, "a.(m v n) = a.m v a.n"};
  for (Elem a = 0; a < nq && je.ok; ++a) {
    for (Elem m = 0; m < nm && je.ok; ++m) {
      for (Elem n = m + 1; n < nm; ++n) {
        if (act[a * nm + M.join(m, n)] !=
            M.join(act[a * nm + m], act[a * nm + n])) {
          je = {"action-join-element",
                false,
                {{"alpha", Q.label(a)}, {"m", M.label(m)}, {"n", M.label(n)}},
                "a.(m v n) = a.m v a.n"};
          break;
        }
      }
    }
  }
  out.push_back(je);

  LawStatus bs{"action-bottom-scalar", true, {}, "bottom of Q acts as bottom"};
  for (Elem m = 0; m < nm; ++m) {
    if (act[Q.bottom() * nm + m] != M.bottom()) {
      bs = {"action-bottom-scalar", false, {{"m", M.label(m)}}, ""};
      break;
    }
  }
  out.push_back(bs);

  LawStatus be{"action-bottom-element", true, {}, "a . bottom = bottom"};
  for (Elem a = 0; a < nq; ++a) {
    if (act[a * nm + M.bottom()] != M.bottom()) {
      be = {"action-bottom-element", false, {{"alpha", Q.label(a)}}, ""};
      break;
    }
  }
  out.push_back(be);

  LawStatus as{"action-associative", true, {}, "(a*b).m = a.(b.m)"};
  for (Elem a = 0; a < nq && as.ok; ++a) {
    for (Elem b = 0; b < nq && as.ok; ++b) {
      const Elem ab = Q.times(a, b);
      for (Elem m = 0; m < nm; ++m) {
        if (act[ab * nm + m] != act[a * nm + act[b * nm + m]]) {
          as = {"action-associative",
                false,
                {{"alpha", Q.label(a)}, {"beta", Q.label(b)}, {"m", M.label(m)}},
                "(a*b).m = a.(b.m)"};
          break;
        }
      }
    }
  }
  out.push_back(as);

  LawStatus un{"action-unit", true, {}, "e.m = m"};
  for (Elem m = 0; m < nm; ++m) {
    if (act[Q.unit() * nm + m] != m) {
      un = {"action-unit", false, {{"m", M.label(m)}}, "e.m = m"};
      break;
    }
  }
  out.push_back(un);
  return out;
}

QModule QModule::make(QuantalePtr quantale, LatticePtr carrier,
                      std::vector<Elem> action, std::string name) {
  static const std::unordered_map<std::string, std::string> kCode = {
      {"action-join-scalar", "JoinFail"},
      {"action-join-element", "JoinFail"},
      {"action-bottom-scalar", "JoinFail"},
      {"action-bottom-element", "JoinFail"},
      {"action-associative", "AssocActionFail"},
      {"action-unit", "UnitActionFail"},
  };
  for (const LawStatus& law : laws(*quantale, *carrier, action)) {
    if (!law.ok) {
      throw ValidationError(kCode.at(law.law), law.law + " fails",
                            law.witness);
    }
  }
  QModule M;
  M.quantale_ = std::move(quantale);
  M.carrier_ = std::move(carrier);
  M.action_ = std::move(action);
  M.name_ = std::move(name);
  return M;
}

QModule self_module(QuantalePtr Q) {
  std::vector<Elem> action(Q->product_table());
  LatticePtr carrier = Q->lattice_ptr();
  std::string name = Q->name() + ".self";
  return QModule::make(std::move(Q), std::move(carrier), std::move(action),
                       std::move(name));
}

QModule truth_value_module(QuantalePtr two, LatticePtr N) {
  if (two->size() != 2 || two->unit() != two->top()) {
    throw ValidationError("InvariantFail",
                          "truth-value action needs a two-element quantale "
                          "with unit = top");
  }
  const int nm = N->size();
  std::vector<Elem> action(static_cast<size_t>(2) * nm);
  for (Elem m = 0; m < nm; ++m) {
    action[two->bottom() * nm + m] = N->bottom();
    action[two->unit() * nm + m] = m;
  }
  std::string name = "tv(" + N->name() + ")";
  return QModule::make(std::move(two), std::move(N), std::move(action),
                       std::move(name));
}

bool same_quantale(const Quantale& A, const Quantale& B) {
  if (&A == &B) return true;
  return A.unit() == B.unit() && A.product_table() == B.product_table() &&
         A.lattice().same_tables(B.lattice());
}

std::vector<LawStatus> module_hom_laws(const QModule& src, const QModule& dst,
                                       const std::vector<Elem>& values) {
  if (!same_quantale(src.quantale(), dst.quantale())) {
    throw ValidationError("InvariantFail",
                          "module hom endpoints lie over different quantales");
  }
  if (static_cast<int>(values.size()) != src.carrier().size()) {
    throw ValidationError("InvariantFail", "hom value table size mismatch");
  }
  const FiniteLattice& S = src.carrier();
  const FiniteLattice& D = dst.carrier();
  std::vector<LawStatus> out;

  LawStatus joins{"preserves-joins", true, {}, "includes bottom (empty join)"};
  if (values[S.bottom()] != D.bottom()) {
    joins = {"preserves-joins",
             false,
             {{"m", S.label(S.bottom())}},
             "bottom not preserved"};
  } else {
    for (Elem m = 0; m < S.size() && joins.ok; ++m) {
      for (Elem n = m + 1; n < S.size(); ++n) {
        if (values[S.join(m, n)] != D.join(values[m], values[n])) {
          joins = {"preserves-joins",
                   false,
                   {{"m", S.label(m)}, {"n", S.label(n)}},
                   ""};
          break;
        }
      }
    }
  }
  out.push_back(joins);

  LawStatus eq{"equivariant", true, {}, "f(a.m) = a.f(m)"};
  const Quantale& Q = src.quantale();
  for (Elem a = 0; a < Q.size() && eq.ok; ++a) {
    for (Elem m = 0; m < S.size(); ++m) {
      if (values[src.act(a, m)] != dst.act(a, values[m])) {
        eq = {"equivariant",
              false,
              {{"alpha", Q.label(a)}, {"m", S.label(m)}},
              "f(a.m) = a.f(m)"};
        break;
      }
    }
  }
  out.push_back(eq);
  return out;
}

ModuleHom check_module_hom(QModulePtr src, QModulePtr dst,
                           std::vector<Elem> values) {
  static const std::unordered_map<std::string, std::string> kCode = {
      {"preserves-joins", "JoinFail"},
      {"equivariant", "EquivarianceFail"},
  };
  for (const LawStatus& law : module_hom_laws(*src, *dst, values)) {
    if (!law.ok) {
      throw ValidationError(kCode.at(law.law), law.law + " fails", law.witness);
    }
  }
  return ModuleHom{std::move(src), std::move(dst), std::move(values)};
}

std::vector<Elem> hom_kernel(const ModuleHom& h) {
  std::vector<Elem> out;
  const Elem bot = h.target->carrier().bottom();
  for (Elem m = 0; m < h.source->carrier().size(); ++m) {
    if (h.values[m] == bot) out.push_back(m);
  }
  if (!is_submodule(*h.source, out)) {
    throw TheoremViolation("kernel of a module hom is not a submodule");
  }
  return out;
}

std::vector<Elem> hom_image(const ModuleHom& h) {
  std::vector<Elem> out(h.values);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (!is_submodule(*h.target, out)) {
    throw TheoremViolation("image of a module hom is not a submodule");
  }
  return out;
}

bool is_submodule(const QModule& M, const std::vector<Elem>& members) {
  const FiniteLattice& L = M.carrier();
  std::vector<uint8_t> in(L.size(), 0);
  for (Elem m : members) {
    if (m < 0 || m >= L.size()) return false;
    in[m] = 1;
  }
  if (!in[L.bottom()]) return false;  // empty join
  for (Elem m : members) {
    for (Elem n : members) {
      if (!in[L.join(m, n)]) return false;
    }
    for (Elem a = 0; a < M.quantale().size(); ++a) {
      if (!in[M.act(a, m)]) return false;
    }
  }
  return true;
}

std::vector<Elem> generated_submodule(const QModule& M, Elem m) {
  // The orbit {alpha . m} is already join- and action-closed by the module
  // laws, so no iteration is needed.
  std::vector<Elem> out;
  out.reserve(M.quantale().size());
  for (Elem a = 0; a < M.quantale().size(); ++a) out.push_back(M.act(a, m));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (!is_submodule(M, out)) {
    throw TheoremViolation("generated orbit is not a submodule",
                           {{"m", M.carrier().label(m)}});
  }
  return out;
}

namespace {

uint64_t close_submodule(const QModule& M, uint64_t mask) {
  const FiniteLattice& L = M.carrier();
  const int n = L.size();
  mask |= uint64_t{1} << L.bottom();
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Elem> cur;
    for (Elem x = 0; x < n; ++x) {
      if (mask & (uint64_t{1} << x)) cur.push_back(x);
    }
    for (Elem s : cur) {
      for (Elem a = 0; a < M.quantale().size(); ++a) {
        uint64_t bit = uint64_t{1} << M.act(a, s);
        if (!(mask & bit)) {
          mask |= bit;
          changed = true;
        }
      }
      for (Elem t : cur) {
        uint64_t bit = uint64_t{1} << L.join(s, t);
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

std::vector<std::vector<Elem>> submodules(const QModule& M) {
  const int n = M.carrier().size();
  if (n > 60) throw bound_exceeded("submodule enumeration", n, 60);

  std::vector<uint64_t> found;
  auto add = [&](uint64_t m) {
    if (std::find(found.begin(), found.end(), m) == found.end()) {
      found.push_back(m);
      return true;
    }
    return false;
  };
  add(uint64_t{1} << M.carrier().bottom());
  for (Elem m = 0; m < n; ++m) {
    add(close_submodule(M, uint64_t{1} << m));
  }
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<uint64_t> snapshot = found;
    for (size_t i = 0; i < snapshot.size(); ++i) {
      for (size_t j = i + 1; j < snapshot.size(); ++j) {
        if (add(close_submodule(M, snapshot[i] | snapshot[j]))) grew = true;
      }
    }
  }
  std::sort(found.begin(), found.end());
  std::vector<std::vector<Elem>> out;
  out.reserve(found.size());
  for (uint64_t mask : found) {
    std::vector<Elem> members;
    for (Elem x = 0; x < n; ++x) {
      if (mask & (uint64_t{1} << x)) members.push_back(x);
    }
    out.push_back(std::move(members));
  }
  return out;
}

SimpleResult is_simple(const QModule& M) {
  SimpleResult res;
  const int n = M.carrier().size();
  const Elem bot = M.carrier().bottom();
  const std::vector<std::vector<Elem>> subs = submodules(M);

  bool raw_simple = true;
  for (const auto& sub : subs) {
    const bool zero = (sub.size() == 1 && sub[0] == bot);
    const bool full = (static_cast<int>(sub.size()) == n);
    if (!zero && !full) {
      raw_simple = false;
      res.witness = sub;
      break;
    }
  }

  // Equivalent formulation: every nonzero element generates everything.
  bool every_generates = true;
  for (Elem m = 0; m < n && every_generates; ++m) {
    if (m == bot) continue;
    if (static_cast<int>(generated_submodule(M, m).size()) != n) {
      every_generates = false;
    }
  }
  if (raw_simple != every_generates) {
    throw TheoremViolation(
        "simplicity and every-nonzero-element-generates disagree");
  }

  res.degenerate = (n == 1);
  res.simple = raw_simple && !res.degenerate;
  return res;
}

FaithfulResult is_faithful(const QModule& M) {
  const int nm = M.carrier().size();
  const Elem bot = M.carrier().bottom();
  for (Elem a = 0; a < M.quantale().size(); ++a) {
    if (a == M.quantale().bottom()) continue;
    bool kills_all = true;
    for (Elem m = 0; m < nm; ++m) {
      if (M.act(a, m) != bot) {
        kills_all = false;
        break;
      }
    }
    if (kills_all) return {false, a};
  }
  return {true, std::nullopt};
}

StronglyFaithfulResult is_strongly_faithful(const QModule& M) {
  const int nm = M.carrier().size();
  StronglyFaithfulResult res;
  for (Elem a = 0; a < M.quantale().size(); ++a) {
    for (Elem b = a + 1; b < M.quantale().size(); ++b) {
      bool equal = true;
      for (Elem m = 0; m < nm; ++m) {
        if (M.act(a, m) != M.act(b, m)) {
          equal = false;
          break;
        }
      }
      if (equal) {
        res.strongly_faithful = false;
        res.witness = std::make_pair(a, b);
        return res;
      }
    }
  }
  res.strongly_faithful = true;
  if (!is_faithful(M).faithful) {
    throw TheoremViolation("strongly faithful module is not faithful");
  }
  return res;
}

std::vector<Elem> annihilator(const QModule& M) {
  const Quantale& Q = M.quantale();
  const int nm = M.carrier().size();
  const Elem mbot = M.carrier().bottom();
  std::vector<Elem> ann;
  for (Elem a = 0; a < Q.size(); ++a) {
    bool kills_all = true;
    for (Elem m = 0; m < nm; ++m) {
      if (M.act(a, m) != mbot) {
        kills_all = false;
        break;
      }
    }
    if (kills_all) ann.push_back(a);
  }

  const bool trivial_ann = (ann.size() == 1 && ann[0] == Q.bottom());
  if (trivial_ann != is_faithful(M).faithful) {
    throw TheoremViolation("faithfulness and trivial annihilator disagree");
  }
  std::vector<uint8_t> in(Q.size(), 0);
  for (Elem a : ann) in[a] = 1;
  for (Elem a : ann) {
    for (Elem b : ann) {
      if (!in[Q.join(a, b)]) {
        throw TheoremViolation("annihilator not join-closed");
      }
    }
    for (Elem q = 0; q < Q.size(); ++q) {
      if (!in[Q.times(q, a)] || !in[Q.times(a, q)]) {
        throw TheoremViolation("annihilator not absorbing under product");
      }
    }
  }
  return ann;
}

ActionHom action_hom(const QModule& M) {
  EndomorphismQuantale end = end_quantale(M.carrier_ptr());
  const int nm = M.carrier().size();
  std::vector<Elem> values;
  values.reserve(M.quantale().size());
  std::vector<Elem> column(nm);
  for (Elem a = 0; a < M.quantale().size(); ++a) {
    for (Elem m = 0; m < nm; ++m) column[m] = M.act(a, m);
    std::optional<Elem> idx = end.index_of_table(column);
    if (!idx) {
      throw TheoremViolation("action column is not a join-endomorphism",
                             {{"alpha", M.quantale().label(a)}});
    }
    values.push_back(*idx);
  }
  QuantaleHom hom =
      check_quantale_hom(M.quantale_ptr(), end.quantale, std::move(values));
  QModule roundtrip = module_from_action_hom(hom, end, M.name());
  if (roundtrip.action_table() != M.action_table()) {
    throw TheoremViolation("action hom round trip changed the action");
  }
  return ActionHom{std::move(hom), std::move(end)};
}

QModule module_from_action_hom(const QuantaleHom& hom,
                               const EndomorphismQuantale& end,
                               std::string name) {
  const int nm = end.base->size();
  const int nq = hom.source->size();
  std::vector<Elem> action(static_cast<size_t>(nq) * nm);
  for (Elem a = 0; a < nq; ++a) {
    for (Elem m = 0; m < nm; ++m) {
      action[a * nm + m] = end.apply(hom.values[a], m);
    }
  }
  return QModule::make(hom.source, end.base, std::move(action),
                       std::move(name));
}

EndomorphismQuantale end_q_quantale(const QModule& M) {
  EndomorphismQuantale ambient = end_quantale(M.carrier_ptr());
  const int nm = M.carrier().size();
  const Quantale& Q = M.quantale();

  std::vector<Elem> members;
  std::vector<std::vector<Elem>> tables;
  for (Elem f = 0; f < static_cast<Elem>(ambient.tables.size()); ++f) {
    const std::vector<Elem>& t = ambient.tables[f];
    bool equivariant = true;
    for (Elem a = 0; a < Q.size() && equivariant; ++a) {
      for (Elem m = 0; m < nm; ++m) {
        if (t[M.act(a, m)] != M.act(a, t[m])) {
          equivariant = false;
          break;
        }
      }
    }
    if (equivariant) {
      members.push_back(f);
      tables.push_back(t);
    }
  }
  if (!is_subquantale(*ambient.quantale, members)) {
    throw TheoremViolation(
        "equivariant endomorphisms do not form a subquantale");
  }
  const std::string name = "end_q(" + M.name() + ")";
  if (static_cast<int>(members.size()) == ambient.quantale->size()) {
    return EndomorphismQuantale{ambient.quantale, M.carrier_ptr(),
                                std::move(tables)};
  }
  SubQuantale sub = restrict_quantale(*ambient.quantale, members, name);
  return EndomorphismQuantale{sub.quantale, M.carrier_ptr(),
                              std::move(tables)};
}

QModule evaluation_module(const EndomorphismQuantale& endq,
                          std::string name) {
  const int nm = endq.base->size();
  const int nq = endq.quantale->size();
  std::vector<Elem> action(static_cast<size_t>(nq) * nm);
  for (Elem f = 0; f < nq; ++f) {
    for (Elem m = 0; m < nm; ++m) action[f * nm + m] = endq.apply(f, m);
  }
  if (name.empty()) name = "eval(" + endq.quantale->name() + ")";
  return QModule::make(endq.quantale, endq.base, std::move(action),
                       std::move(name));
}

namespace {

void module_iso_search(const FiniteLattice& A, const FiniteLattice& B,
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
    module_iso_search(A, B, img, used, next + 1, on_complete, stop);
    used[cand] = 0;
  }
}

}  // namespace

std::optional<std::vector<Elem>> module_isomorphism(const QModule& A,
                                                    const QModule& B) {
  if (!same_quantale(A.quantale(), B.quantale())) {
    throw ValidationError("InvariantFail",
                          "module isomorphism needs a common quantale");
  }
  if (A.carrier().size() != B.carrier().size()) return std::nullopt;

  std::vector<Elem> img(A.carrier().size(), -1);
  std::vector<uint8_t> used(B.carrier().size(), 0);
  std::optional<std::vector<Elem>> result;
  bool stop = false;
  auto on_complete = [&]() {
    for (Elem a = 0; a < A.quantale().size(); ++a) {
      for (Elem m = 0; m < A.carrier().size(); ++m) {
        if (img[A.act(a, m)] != B.act(a, img[m])) return false;
      }
    }
    result = img;
    return true;
  };
  module_iso_search(A.carrier(), B.carrier(), img, used, 0, on_complete, stop);
  return result;
}

}  // namespace qlab
