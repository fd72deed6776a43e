#include "ldcw/limits.hpp"

namespace ldcw::limits {

std::function<ProductWitness(Obj, Obj)> memo_products(
    std::function<ProductWitness(Obj, Obj)> f) {
  auto cache = std::make_shared<std::map<std::pair<int, int>, ProductWitness>>();
  return [cache, f](Obj a, Obj b) {
    auto key = std::make_pair(a.id, b.id);
    auto it = cache->find(key);
    if (it != cache->end()) return it->second;
    ProductWitness w = f(a, b);
    cache->emplace(key, w);
    return w;
  };
}

std::function<CoproductWitness(Obj, Obj)> memo_coproducts(
    std::function<CoproductWitness(Obj, Obj)> f) {
  auto cache =
      std::make_shared<std::map<std::pair<int, int>, CoproductWitness>>();
  return [cache, f](Obj a, Obj b) {
    auto key = std::make_pair(a.id, b.id);
    auto it = cache->find(key);
    if (it != cache->end()) return it->second;
    CoproductWitness w = f(a, b);
    cache->emplace(key, w);
    return w;
  };
}

std::optional<Obj> find_terminal(const Category& C,
                                 const std::vector<Obj>& objs) {
  for (Obj t : objs) {
    bool ok = true;
    for (Obj a : objs)
      if (C.hom(a, t).size() != 1) {
        ok = false;
        break;
      }
    if (ok) return t;
  }
  return std::nullopt;
}

std::optional<Obj> find_initial(const Category& C,
                                const std::vector<Obj>& objs) {
  for (Obj i : objs) {
    bool ok = true;
    for (Obj a : objs)
      if (C.hom(i, a).size() != 1) {
        ok = false;
        break;
      }
    if (ok) return i;
  }
  return std::nullopt;
}

namespace {

// Unique u: C->apex with u;p0 = f and u;p1 = g, or nullopt (also nullopt when
// not unique).
std::optional<Mor> unique_pairing(const Category& C, Obj apex, Mor p0, Mor p1,
                                  Mor f, Mor g) {
  std::optional<Mor> found;
  for (Mor u : C.hom(C.dom(f), apex)) {
    if (C.eq(C.compose(u, p0), f) && C.eq(C.compose(u, p1), g)) {
      if (found) return std::nullopt;  // not unique
      found = u;
    }
  }
  return found;
}

std::optional<Mor> unique_copairing(const Category& C, Obj apex, Mor i0, Mor i1,
                                    Mor f, Mor g) {
  std::optional<Mor> found;
  for (Mor u : C.hom(apex, C.cod(f))) {
    if (C.eq(C.compose(i0, u), f) && C.eq(C.compose(i1, u), g)) {
      if (found) return std::nullopt;
      found = u;
    }
  }
  return found;
}

}  // namespace

std::optional<ProductWitness> find_binary_product(const Category& C,
                                                  const std::vector<Obj>& objs,
                                                  Obj A, Obj B) {
  for (Obj apex : objs) {
    for (Mor p0 : C.hom(apex, A)) {
      for (Mor p1 : C.hom(apex, B)) {
        bool ok = true;
        for (Obj c : objs) {
          for (Mor f : C.hom(c, A)) {
            for (Mor g : C.hom(c, B)) {
              if (!unique_pairing(C, apex, p0, p1, f, g)) {
                ok = false;
                break;
              }
            }
            if (!ok) break;
          }
          if (!ok) break;
        }
        if (ok) {
          ProductWitness w;
          w.left = A;
          w.right = B;
          w.apex = apex;
          w.pi0 = p0;
          w.pi1 = p1;
          const Category* cp = &C;
          w.pair = [cp, apex, p0, p1](Mor f, Mor g) {
            auto u = unique_pairing(*cp, apex, p0, p1, f, g);
            if (!u) throw HardFailure("pairing vanished after certification");
            return *u;
          };
          return w;
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<CoproductWitness> find_binary_coproduct(
    const Category& C, const std::vector<Obj>& objs, Obj A, Obj B) {
  for (Obj apex : objs) {
    for (Mor i0 : C.hom(A, apex)) {
      for (Mor i1 : C.hom(B, apex)) {
        bool ok = true;
        for (Obj c : objs) {
          for (Mor f : C.hom(A, c)) {
            for (Mor g : C.hom(B, c)) {
              if (!unique_copairing(C, apex, i0, i1, f, g)) {
                ok = false;
                break;
              }
            }
            if (!ok) break;
          }
          if (!ok) break;
        }
        if (ok) {
          CoproductWitness w;
          w.left = A;
          w.right = B;
          w.apex = apex;
          w.i0 = i0;
          w.i1 = i1;
          const Category* cp = &C;
          w.copair = [cp, apex, i0, i1](Mor f, Mor g) {
            auto u = unique_copairing(*cp, apex, i0, i1, f, g);
            if (!u) throw HardFailure("copairing vanished after certification");
            return *u;
          };
          return w;
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<ChosenProducts> searched_products(CatPtr C,
                                                const std::vector<Obj>& objs) {
  auto term = find_terminal(*C, objs);
  if (!term) return std::nullopt;
  for (Obj a : objs)
    for (Obj b : objs)
      if (!find_binary_product(*C, objs, a, b)) return std::nullopt;
  ChosenProducts P;
  P.C = C;
  P.terminal = *term;
  Obj t = *term;
  P.bang = memo_fam(Fam1([C, t](Obj a) { return C->hom(a, t).at(0); }));
  P.at = memo_products([C, objs](Obj a, Obj b) {
    auto w = find_binary_product(*C, objs, a, b);
    if (!w) throw HardFailure("chosen product vanished after certification");
    return *w;
  });
  return P;
}

std::optional<ChosenCoproducts> searched_coproducts(
    CatPtr C, const std::vector<Obj>& objs) {
  auto init = find_initial(*C, objs);
  if (!init) return std::nullopt;
  for (Obj a : objs)
    for (Obj b : objs)
      if (!find_binary_coproduct(*C, objs, a, b)) return std::nullopt;
  ChosenCoproducts P;
  P.C = C;
  P.initial = *init;
  Obj i = *init;
  P.cobang = memo_fam(Fam1([C, i](Obj a) { return C->hom(i, a).at(0); }));
  P.at = memo_coproducts([C, objs](Obj a, Obj b) {
    auto w = find_binary_coproduct(*C, objs, a, b);
    if (!w) throw HardFailure("chosen coproduct vanished after certification");
    return *w;
  });
  return P;
}

ObjectFlags classify_object(const Category& C, const std::vector<Obj>& objs,
                            Obj A, const ChosenProducts* prods,
                            const ChosenCoproducts* cops) {
  ObjectFlags flags;
  bool pre = true, sub = true;
  for (Obj x : objs) {
    if (C.hom(A, x).size() > 1) pre = false;
    if (C.hom(x, A).size() > 1) sub = false;
  }
  flags.preinitial = pre;
  flags.subterminal = sub;
  flags.semizero = pre && sub;

  // Cross-check the fold/diagonal characterizations.
  if (cops) {
    auto w = cops->at(A, A);
    Mor nabla = w.copair(C.identity(A), C.identity(A));
    bool nabla_iso = fincat::is_isomorphism(C, nabla).has_value();
    bool iotas_equal = C.eq(w.i0, w.i1);
    if (nabla_iso != pre || iotas_equal != pre)
      throw HardFailure(
          "classify_object: preinitial characterizations disagree at " +
          C.obj_name(A));
  }
  if (prods) {
    auto w = prods->at(A, A);
    Mor delta = w.pair(C.identity(A), C.identity(A));
    bool delta_iso = fincat::is_isomorphism(C, delta).has_value();
    bool pis_equal = C.eq(w.pi0, w.pi1);
    if (delta_iso != sub || pis_equal != sub)
      throw HardFailure(
          "classify_object: subterminal characterizations disagree at " +
          C.obj_name(A));
  }

  // Strictness: A initial (w.r.t. objs) and every map into A is an iso.
  bool initial = true, terminal = true;
  for (Obj x : objs) {
    if (C.hom(A, x).size() != 1) initial = false;
    if (C.hom(x, A).size() != 1) terminal = false;
  }
  if (initial) {
    flags.strict_initial = true;
    for (Obj x : objs)
      for (Mor f : C.hom(x, A))
        if (!fincat::is_isomorphism(C, f)) flags.strict_initial = false;
  }
  if (terminal) {
    flags.costrict_terminal = true;
    for (Obj x : objs)
      for (Mor f : C.hom(A, x))
        if (!fincat::is_isomorphism(C, f)) flags.costrict_terminal = false;
  }
  return flags;
}

std::optional<ZeroStructure> zero_structure(const ChosenProducts& prods,
                                            const ChosenCoproducts& cops,
                                            const std::vector<Obj>& objs,
                                            std::vector<LawReport>* reports) {
  if (prods.terminal != cops.initial) return std::nullopt;
  const Category& C = *prods.C;
  ZeroStructure z;
  z.zero = prods.terminal;
  auto bang = prods.bang;
  auto cobang = cops.cobang;
  const Category* cp = prods.C.get();
  z.zero_mor = memo_fam(Fam2([cp, bang, cobang](Obj x, Obj y) {
    return cp->compose(bang(x), cobang(y));
  }));
  auto prods_at = prods.at;
  auto cops_at = cops.at;
  auto zm = z.zero_mor;
  z.psi = memo_fam(Fam2([cp, prods_at, cops_at, zm](Obj x, Obj y) {
    auto pw = prods_at(x, y);
    auto cw = cops_at(x, y);
    Mor left = pw.pair(cp->identity(x), zm(x, y));   // <1,0>: X -> X x Y
    Mor right = pw.pair(zm(y, x), cp->identity(y));  // <0,1>: Y -> X x Y
    return cw.copair(left, right);
  }));

  LawChecker chk(C);
  for (Obj x : objs)
    for (Obj y : objs) {
      auto pw = prods.at(x, y);
      auto cw = cops.at(x, y);
      // Pairing presentation <[1,0],[0,1]> must agree with the copairing one.
      Mor top = cw.copair(C.identity(x), z.zero_mor(y, x));
      Mor bot = cw.copair(z.zero_mor(x, y), C.identity(y));
      Mor via_pair = pw.pair(top, bot);
      chk.check_eq("psi:presentations", {x, y}, z.psi(x, y), "[<1,0>,<0,1>]",
                   via_pair, "<[1,0],[0,1]>");
    }
  // Absorption.
  for (Obj x : objs)
    for (Obj y : objs)
      for (Mor f : C.hom(x, y)) {
        for (Obj w : objs) {
          chk.check_eq("zero:absorb_left", {w, x, y},
                       C.compose(z.zero_mor(w, x), f), "0;f", z.zero_mor(w, y),
                       "0");
          chk.check_eq("zero:absorb_right", {x, y, w},
                       C.compose(f, z.zero_mor(y, w)), "f;0", z.zero_mor(x, w),
                       "0");
        }
      }
  if (reports) append_reports(*reports, chk.reports());
  if (!chk.all_pass()) return std::nullopt;
  return z;
}

std::vector<LawReport> check_biproduct(const Category& C,
                                       const ZeroStructure& zero,
                                       const BiproductCandidate& cand,
                                       const std::vector<Obj>& objs) {
  LawChecker chk(C);
  std::vector<Obj> idx = {cand.left, cand.right};
  chk.check_eq("biproduct:iota0_pi0", idx, C.compose(cand.i0, cand.pi0),
               "iota0;pi0", C.identity(cand.left), "id");
  chk.check_eq("biproduct:iota1_pi1", idx, C.compose(cand.i1, cand.pi1),
               "iota1;pi1", C.identity(cand.right), "id");
  chk.check_eq("biproduct:iota0_pi1", idx, C.compose(cand.i0, cand.pi1),
               "iota0;pi1", zero.zero_mor(cand.left, cand.right), "0");
  chk.check_eq("biproduct:iota1_pi0", idx, C.compose(cand.i1, cand.pi0),
               "iota1;pi0", zero.zero_mor(cand.right, cand.left), "0");
  // Universal properties, existence and uniqueness, against objs.
  for (Obj c : objs) {
    for (Mor f : C.hom(c, cand.left))
      for (Mor g : C.hom(c, cand.right)) {
        int count = 0;
        for (Mor u : C.hom(c, cand.apex))
          if (C.eq(C.compose(u, cand.pi0), f) &&
              C.eq(C.compose(u, cand.pi1), g))
            ++count;
        chk.check_that("biproduct:product", {c, cand.left, cand.right},
                       count == 1, "number of mediating maps",
                       "exactly one");
      }
    for (Mor f : C.hom(cand.left, c))
      for (Mor g : C.hom(cand.right, c)) {
        int count = 0;
        for (Mor u : C.hom(cand.apex, c))
          if (C.eq(C.compose(cand.i0, u), f) && C.eq(C.compose(cand.i1, u), g))
            ++count;
        chk.check_that("biproduct:coproduct", {cand.left, cand.right, c},
                       count == 1, "number of mediating maps",
                       "exactly one");
      }
  }
  return chk.take();
}

}  // namespace ldcw::limits
