// Total categories of lattice-valued functors and the Kleisli category of
// the exception monad, as interning wrapper engines over a base category.

#include <map>
#include <tuple>

#include "ldcw/construct.hpp"

namespace ldcw::construct {

using limits::ChosenCoproducts;
using limits::ChosenProducts;
using limits::CoproductWitness;
using limits::ProductWitness;

// --------------------------------------------------- lattice-valued F ----

std::vector<LawReport> check_lattice_valued_functor(
    const LatticeValuedFunctor& F, const std::vector<Obj>& objs) {
  const Category& B = *F.base;
  LawChecker ck(B);
  std::map<int, std::vector<long>> fibers;
  for (Obj A : objs) {
    try {
      fibers[A.id] = F.enumerate(A);
    } catch (const BudgetExceeded&) {
      ck.skip("lvf:lattice", "fiber of " + B.obj_name(A) +
                                 " is over the enumeration budget");
      continue;
    }
    const auto& es = fibers[A.id];
    long top = F.top(A), bot = F.bottom(A);
    for (long x : es) {
      ck.check_that("lvf:bounds", {A},
                    F.leq(A, bot, x) && F.leq(A, x, top) && F.leq(A, x, x),
                    "bottom <= " + F.elem_name(A, x) + " <= top",
                    "reflexive bounded order");
    }
    bool lattice_ok = true;
    std::string wtext;
    for (long x : es)
      for (long y : es) {
        long m = F.meet(A, x, y), j = F.join(A, x, y);
        if (!F.leq(A, m, x) || !F.leq(A, m, y) || !F.leq(A, x, j) ||
            !F.leq(A, y, j)) {
          lattice_ok = false;
          wtext = "meet/join not bounds at (" + F.elem_name(A, x) + "," +
                  F.elem_name(A, y) + ")";
        }
        for (long z : es) {
          if ((F.leq(A, z, x) && F.leq(A, z, y)) != F.leq(A, z, m)) {
            lattice_ok = false;
            wtext = "meet not a greatest lower bound at (" +
                    F.elem_name(A, x) + "," + F.elem_name(A, y) + "," +
                    F.elem_name(A, z) + ")";
          }
          if ((F.leq(A, x, z) && F.leq(A, y, z)) != F.leq(A, j, z)) {
            lattice_ok = false;
            wtext = "join not a least upper bound at (" + F.elem_name(A, x) +
                    "," + F.elem_name(A, y) + "," + F.elem_name(A, z) + ")";
          }
          if (F.meet(A, x, F.join(A, y, z)) !=
              F.join(A, F.meet(A, x, y), F.meet(A, x, z))) {
            lattice_ok = false;
            wtext = "distributivity fails at (" + F.elem_name(A, x) + "," +
                    F.elem_name(A, y) + "," + F.elem_name(A, z) + ")";
          }
        }
      }
    ck.check_that("lvf:lattice", {A}, lattice_ok,
                  "fiber of " + B.obj_name(A),
                  "bounded distributive lattice" +
                      (wtext.empty() ? std::string() : "; " + wtext));
  }

  for (Obj A : objs) {
    auto it = fibers.find(A.id);
    if (it == fibers.end()) continue;
    bool ok = true;
    Mor idA = B.identity(A);
    for (long x : it->second)
      if (F.apply(idA, x) != x) ok = false;
    ck.check_that("lvf:identity", {A}, ok, "F(1_A)", "identity on the fiber");
  }

  auto mors = fincat::morphisms_between(B, objs);
  for (Mor f : mors) {
    Obj A = B.dom(f), Bo = B.cod(f);
    auto ia = fibers.find(A.id);
    auto ib = fibers.find(Bo.id);
    if (ia == fibers.end() || ib == fibers.end()) continue;
    std::map<long, long> table;
    for (long x : ib->second) table[x] = F.apply(f, x);
    bool hm = true, hj = true;
    for (long x : ib->second)
      for (long y : ib->second) {
        if (table[F.meet(Bo, x, y)] != F.meet(A, table[x], table[y])) hm = false;
        if (table[F.join(Bo, x, y)] != F.join(A, table[x], table[y])) hj = false;
      }
    ck.check_that("lvf:hom_meet", {A, Bo}, hm,
                  "F(" + B.mor_name(f) + ") of a meet", "meet of images");
    ck.check_that("lvf:hom_join", {A, Bo}, hj,
                  "F(" + B.mor_name(f) + ") of a join", "join of images");
    ck.check_that("lvf:hom_top", {A, Bo}, table[F.top(Bo)] == F.top(A),
                  "F(" + B.mor_name(f) + ")(top)", "top");
    ck.check_that("lvf:hom_bottom", {A, Bo}, table[F.bottom(Bo)] == F.bottom(A),
                  "F(" + B.mor_name(f) + ")(bottom)", "bottom");
  }
  for (Mor f : mors)
    for (Mor g : mors) {
      if (B.cod(f) != B.dom(g)) continue;
      Obj A = B.dom(f), Co = B.cod(g);
      if (!fibers.count(A.id) || !fibers.count(Co.id)) continue;
      bool ok = true;
      Mor fg = B.compose(f, g);
      for (long x : fibers[Co.id])
        if (F.apply(fg, x) != F.apply(f, F.apply(g, x))) ok = false;
      ck.check_that("lvf:composition", {A, B.cod(f), Co}, ok,
                    "F(f;g)", "F(g); F(f)");
    }
  return ck.take();
}

// ------------------------------------------------------ total category ----

namespace {

class TotalCategory final : public Category {
 public:
  TotalCategory(CatPtr base, LatticeValuedFunctor F)
      : base_(std::move(base)), F_(std::move(F)) {}

  Obj make_obj(Obj A, long a) const {
    auto key = std::pair<int, long>(A.id, a);
    auto it = oidx_.find(key);
    if (it != oidx_.end()) return Obj{it->second};
    objs_.push_back(key);
    oidx_[key] = (int)objs_.size() - 1;
    return Obj{(int)objs_.size() - 1};
  }
  std::pair<Obj, long> split(Obj p) const {
    auto k = objs_.at((size_t)p.id);
    return {Obj{k.first}, k.second};
  }
  Mor base_of(Mor m) const { return Mor{std::get<0>(mors_.at((size_t)m.id))}; }

  Mor make_mor(Obj d, Obj c, Mor f) const {
    auto [A, a] = split(d);
    auto [B, b] = split(c);
    if (base_->dom(f) != A || base_->cod(f) != B)
      throw HardFailure("total category: base morphism endpoints mismatch");
    if (!F_.leq(A, a, F_.apply(f, b)))
      throw InputError("not a morphism of the total category: " +
                       base_->mor_name(f) + " : " + obj_name(d) + " -> " +
                       obj_name(c));
    auto key = std::tuple<int, int, int>(f.id, d.id, c.id);
    auto it = midx_.find(key);
    if (it != midx_.end()) return Mor{it->second};
    mors_.push_back(key);
    midx_[key] = (int)mors_.size() - 1;
    return Mor{(int)mors_.size() - 1};
  }

  int num_objects() const override { return (int)objs_.size(); }
  Obj dom(Mor m) const override {
    return Obj{std::get<1>(mors_.at((size_t)m.id))};
  }
  Obj cod(Mor m) const override {
    return Obj{std::get<2>(mors_.at((size_t)m.id))};
  }
  Mor identity(Obj p) const override {
    return make_mor(p, p, base_->identity(split(p).first));
  }
  Mor compose(Mor f, Mor g) const override {
    require_composable(f, g);
    return make_mor(dom(f), cod(g), base_->compose(base_of(f), base_of(g)));
  }
  std::vector<Mor> hom(Obj p, Obj q) const override {
    auto [A, a] = split(p);
    auto [B, b] = split(q);
    std::vector<Mor> out;
    for (Mor f : base_->hom(A, B))
      if (F_.leq(A, a, F_.apply(f, b))) out.push_back(make_mor(p, q, f));
    return out;
  }
  std::string obj_name(Obj p) const override {
    auto [A, a] = split(p);
    return "(" + base_->obj_name(A) + "," + F_.elem_name(A, a) + ")";
  }
  std::string mor_name(Mor m) const override {
    return base_->mor_name(base_of(m)) + ":" + obj_name(dom(m)) + "->" +
           obj_name(cod(m));
  }
  std::optional<Mor> find_inverse(Mor m) const override {
    auto bi = base_->find_inverse(base_of(m));
    if (!bi) return std::nullopt;
    try {
      return make_mor(cod(m), dom(m), *bi);
    } catch (const InputError&) {
      return std::nullopt;
    }
  }

 private:
  CatPtr base_;
  LatticeValuedFunctor F_;
  mutable std::vector<std::pair<int, long>> objs_;
  mutable std::map<std::pair<int, long>, int> oidx_;
  mutable std::vector<std::tuple<int, int, int>> mors_;
  mutable std::map<std::tuple<int, int, int>, int> midx_;
};

}  // namespace

GrothendieckResult grothendieck(const cldc::CldcStructure& B,
                                const limits::ZeroStructure& zero,
                                const LatticeValuedFunctor& F,
                                const cldc::CldcOptions& opt) {
  GrothendieckResult out;
  auto tc = std::make_shared<TotalCategory>(B.C, F);
  out.C = tc;
  out.make_obj = [tc](Obj A, long a) { return tc->make_obj(A, a); };
  out.split_obj = [tc](Obj p) { return tc->split(p); };
  out.make_mor = [tc](Obj d, Obj c, Mor f) { return tc->make_mor(d, c, f); };
  out.base_mor = [tc](Mor m) { return tc->base_of(m); };

  try {
    out.reports = check_lattice_valued_functor(F, B.objs);

    std::vector<Obj> objs;
    for (Obj A : B.objs)
      for (long a : F.enumerate(A)) objs.push_back(tc->make_obj(A, a));

    ChosenProducts prods;
    prods.C = tc;
    prods.terminal = tc->make_obj(Obj{B.top()}, F.top(Obj{B.top()}));
    prods.bang = memo_fam(Fam1(
        [tc, bb = B.prods.bang, term = prods.terminal](Obj p) {
          return tc->make_mor(p, term, bb(tc->split(p).first));
        }));
    prods.at = limits::memo_products([tc, bat = B.prods.at, F](Obj p, Obj q) {
      auto [A, a] = tc->split(p);
      auto [Bo, b] = tc->split(q);
      auto w = bat(A, Bo);
      long fib = F.meet(w.apex, F.apply(w.pi0, a), F.apply(w.pi1, b));
      ProductWitness r;
      r.left = p;
      r.right = q;
      r.apex = tc->make_obj(w.apex, fib);
      r.pi0 = tc->make_mor(r.apex, p, w.pi0);
      r.pi1 = tc->make_mor(r.apex, q, w.pi1);
      r.pair = [tc, w, apex = r.apex](Mor f, Mor g) {
        return tc->make_mor(tc->dom(f), apex,
                            w.pair(tc->base_of(f), tc->base_of(g)));
      };
      return r;
    });

    ChosenCoproducts cops;
    cops.C = tc;
    cops.initial = tc->make_obj(Obj{B.bot()}, F.bottom(Obj{B.bot()}));
    cops.cobang = memo_fam(Fam1(
        [tc, cb = B.cops.cobang, init = cops.initial](Obj p) {
          return tc->make_mor(init, p, cb(tc->split(p).first));
        }));
    cops.at = limits::memo_coproducts(
        [tc, bat = B.cops.at, bprod = B.prods.at, psi = zero.psi, F,
         C = B.C](Obj p, Obj q) {
          auto [A, a] = tc->split(p);
          auto [Bo, b] = tc->split(q);
          auto w = bat(A, Bo);
          auto pw = bprod(A, Bo);
          Mor s0 = C->compose(psi(A, Bo), pw.pi0);
          Mor s1 = C->compose(psi(A, Bo), pw.pi1);
          long fib = F.join(w.apex, F.apply(s0, a), F.apply(s1, b));
          CoproductWitness r;
          r.left = p;
          r.right = q;
          r.apex = tc->make_obj(w.apex, fib);
          r.i0 = tc->make_mor(p, r.apex, w.i0);
          r.i1 = tc->make_mor(q, r.apex, w.i1);
          r.copair = [tc, w, apex = r.apex](Mor f, Mor g) {
            return tc->make_mor(apex, tc->cod(f),
                                w.copair(tc->base_of(f), tc->base_of(g)));
          };
          return r;
        });

    Fam3 dl = memo_fam(Fam3([tc, prods, cops, bdl = B.L.deltaL](Obj a, Obj b,
                                                                Obj c) {
      Obj bc = cops.at(b, c).apex;
      Obj d = prods.at(a, bc).apex;
      Obj axb = prods.at(a, b).apex;
      Obj cd = cops.at(axb, c).apex;
      return tc->make_mor(d, cd,
                          bdl(tc->split(a).first, tc->split(b).first,
                              tc->split(c).first));
    }));
    Fam3 dr = memo_fam(Fam3([tc, prods, cops, bdr = B.L.deltaR](Obj a, Obj b,
                                                                Obj c) {
      Obj ab = cops.at(a, b).apex;
      Obj d = prods.at(ab, c).apex;
      Obj bxc = prods.at(b, c).apex;
      Obj cd = cops.at(a, bxc).apex;
      return tc->make_mor(d, cd,
                          bdr(tc->split(a).first, tc->split(b).first,
                              tc->split(c).first));
    }));

    auto res = cldc::assemble_cldc(tc, prods, cops, objs, dl, dr, opt);
    append_reports(out.reports, res.reports);
    if (!res.ok()) {
      out.failure = res.failure;
    } else {
      out.X = std::move(res.cldc);
      cldc::cldc_mix(*out.X, &out.reports, opt);
    }

    // The projection/injection adjunction on the fibers.
    LawChecker ck(*B.C);
    bool adj_noted = false;
    for (Obj A : B.objs)
      for (Obj Bo : B.objs) {
        auto w = B.cops.at(A, Bo);
        auto pw = B.prods.at(A, Bo);
        std::vector<long> fa, fb, fc;
        try {
          fa = F.enumerate(A);
          fb = F.enumerate(Bo);
          fc = F.enumerate(w.apex);
        } catch (const BudgetExceeded&) {
          ck.skip("grothendieck:projection_adjunction",
                  "fiber enumeration over budget at (" + B.C->obj_name(A) +
                      "," + B.C->obj_name(Bo) + ")");
          continue;
        }
        Mor s0 = B.C->compose(zero.psi(A, Bo), pw.pi0);
        Mor s1 = B.C->compose(zero.psi(A, Bo), pw.pi1);
        bool ok = true;
        std::string where;
        for (long c : fc) {
          long i0c = F.apply(w.i0, c);
          long i1c = F.apply(w.i1, c);
          for (long a : fa)
            if (F.leq(w.apex, F.apply(s0, a), c) != F.leq(A, a, i0c)) {
              ok = false;
              where = "x = " + F.elem_name(A, a) + " in F(" +
                      B.C->obj_name(A) + "), c = " + F.elem_name(w.apex, c);
            }
          for (long b : fb)
            if (F.leq(w.apex, F.apply(s1, b), c) != F.leq(Bo, b, i1c)) {
              ok = false;
              where = "x = " + F.elem_name(Bo, b) + " in F(" +
                      B.C->obj_name(Bo) + "), c = " + F.elem_name(w.apex, c);
            }
          if (!ok) break;
        }
        if (!ck.check_that("grothendieck:projection_adjunction", {A, Bo}, ok,
                           "F(psi;pi^j)(x) <= c", "x <= F(iota^j)(c)") &&
            !where.empty() && !adj_noted) {
          ck.note("grothendieck:projection_adjunction",
                  "first disagreement at " + where);
          adj_noted = true;
        }
      }
    append_reports(out.reports, ck.take());
  } catch (const InputError& e) {
    out.failure = e.what();
  } catch (const BudgetExceeded& e) {
    out.failure = e.what();
  }
  return out;
}

// -------------------------------------------------------------- Kleisli ----

namespace {

class KleisliCategory final : public Category {
 public:
  KleisliCategory(CatPtr D, ChosenProducts prods, ChosenCoproducts cops)
      : D_(std::move(D)), prods_(std::move(prods)), cops_(std::move(cops)) {
    top_ = prods_.terminal;
  }

  Obj plus_top(Obj b) const { return cops_.at(b, top_).apex; }
  Mor wrap(Mor f, Obj codb) const {
    if (D_->cod(f) != plus_top(codb))
      throw HardFailure("kleisli: base morphism does not land in B + top");
    auto key = std::pair<int, int>(f.id, codb.id);
    auto it = midx_.find(key);
    if (it != midx_.end()) return Mor{it->second};
    mors_.push_back(key);
    midx_[key] = (int)mors_.size() - 1;
    return Mor{(int)mors_.size() - 1};
  }
  Mor base_of(Mor m) const { return Mor{mors_.at((size_t)m.id).first}; }

  int num_objects() const override { return D_->num_objects(); }
  Obj dom(Mor m) const override { return D_->dom(base_of(m)); }
  Obj cod(Mor m) const override { return Obj{mors_.at((size_t)m.id).second}; }
  Mor identity(Obj a) const override { return wrap(cops_.at(a, top_).i0, a); }
  Mor compose(Mor f, Mor g) const override {
    require_composable(f, g);
    Obj b = cod(f), c = cod(g);
    Mor ext = cops_.at(b, top_).copair(base_of(g), cops_.at(c, top_).i1);
    return wrap(D_->compose(base_of(f), ext), c);
  }
  std::vector<Mor> hom(Obj a, Obj b) const override {
    std::vector<Mor> out;
    for (Mor f : D_->hom(a, plus_top(b))) out.push_back(wrap(f, b));
    return out;
  }
  std::string obj_name(Obj a) const override { return D_->obj_name(a); }
  std::string mor_name(Mor m) const override {
    return D_->mor_name(base_of(m)) + "|>" + D_->obj_name(cod(m));
  }
  // f is invertible iff its base map factors as an isomorphism followed by
  // the first injection; equivalently [f, iota1] : A + top -> B + top is an
  // isomorphism in the base.
  std::optional<Mor> find_inverse(Mor m) const override {
    Obj a = dom(m), b = cod(m);
    Mor u = cops_.at(a, top_).copair(base_of(m), cops_.at(b, top_).i1);
    auto uinv = D_->find_inverse(u);
    if (!uinv) return std::nullopt;
    Mor g = wrap(D_->compose(cops_.at(b, top_).i0, *uinv), a);
    if (compose(m, g) == identity(a) && compose(g, m) == identity(b)) return g;
    return Category::find_inverse(m);
  }

 private:
  CatPtr D_;
  ChosenProducts prods_;
  ChosenCoproducts cops_;
  Obj top_;
  mutable std::vector<std::pair<int, int>> mors_;
  mutable std::map<std::pair<int, int>, int> midx_;
};

}  // namespace

KleisliResult kleisli_exception(CatPtr D, const ChosenProducts& prods,
                                const ChosenCoproducts& cops,
                                const std::vector<Obj>& objs,
                                const cldc::CldcOptions& opt) {
  KleisliResult out;
  Obj top = prods.terminal;
  Obj bot = cops.initial;
  auto K = std::make_shared<KleisliCategory>(D, prods, cops);
  out.K = K;
  out.wrap = [K](Mor f, Obj codb) { return K->wrap(f, codb); };
  out.unwrap = [K](Mor m) { return K->base_of(m); };

  fincat::Functor J;
  J.source = D;
  J.target = K;
  J.obj = [](Obj a) { return a; };
  J.mor = [K, D, cops, top](Mor f) {
    return K->wrap(D->compose(f, cops.at(D->cod(f), top).i0), D->cod(f));
  };
  out.embed = J;

  try {
    // Coproducts of the Kleisli category.
    ChosenCoproducts kc;
    kc.C = K;
    kc.initial = bot;
    kc.cobang = memo_fam(Fam1([K, cops, top](Obj a) {
      return K->wrap(cops.cobang(K->plus_top(a)), a);
    }));
    kc.at = limits::memo_coproducts([K, D, cops, top](Obj a, Obj b) {
      auto w = cops.at(a, b);
      CoproductWitness r;
      r.left = a;
      r.right = b;
      r.apex = w.apex;
      r.i0 = K->wrap(D->compose(w.i0, cops.at(w.apex, top).i0), w.apex);
      r.i1 = K->wrap(D->compose(w.i1, cops.at(w.apex, top).i0), w.apex);
      r.copair = [K, w](Mor f, Mor g) {
        return K->wrap(w.copair(K->base_of(f), K->base_of(g)), K->cod(f));
      };
      return r;
    });
    out.cops = kc;

    // The bottom object is the Kleisli terminal; products are carried by
    // (A+B)+(A x B), with pairing resolved through the universal property.
    ChosenProducts amp;
    amp.C = K;
    amp.terminal = bot;
    amp.bang = memo_fam(Fam1([K, D, prods, cops, bot, top](Obj a) {
      return K->wrap(D->compose(prods.bang(a), cops.at(bot, top).i1), bot);
    }));
    amp.at = limits::memo_products([K, D, prods, cops, top](Obj a, Obj b) {
      Obj abPlus = cops.at(a, b).apex;
      Obj axb = prods.at(a, b).apex;
      auto outer = cops.at(abPlus, axb);
      Mor p0 = outer.copair(
          cops.at(a, b).copair(
              cops.at(a, top).i0,
              D->compose(prods.bang(b), cops.at(a, top).i1)),
          D->compose(prods.at(a, b).pi0, cops.at(a, top).i0));
      Mor p1 = outer.copair(
          cops.at(a, b).copair(
              D->compose(prods.bang(a), cops.at(b, top).i1),
              cops.at(b, top).i0),
          D->compose(prods.at(a, b).pi1, cops.at(b, top).i0));
      ProductWitness r;
      r.left = a;
      r.right = b;
      r.apex = outer.apex;
      r.pi0 = K->wrap(p0, a);
      r.pi1 = K->wrap(p1, b);
      r.pair = [K, apex = r.apex, pi0 = r.pi0, pi1 = r.pi1](Mor f, Mor g) {
        Obj c = K->dom(f);
        std::optional<Mor> found;
        for (Mor h : K->hom(c, apex)) {
          if (K->compose(h, pi0) == f && K->compose(h, pi1) == g) {
            if (found)
              throw InputError("kleisli pairing is not unique at " +
                               K->obj_name(c));
            found = h;
          }
        }
        if (!found)
          throw InputError("kleisli pairing does not exist at " +
                           K->obj_name(c));
        return *found;
      };
      return r;
    });
    out.amp = amp;

    LawChecker ck(*K);
    auto fun = fincat::check_functor(J, objs);
    for (auto& r : fun) r.law_id = "kleisli:embed_functor." + r.law_id;
    append_reports(out.reports, fun);

    for (Obj a : objs)
      ck.check_that("kleisli:terminal_bot", {a}, K->hom(a, bot).size() == 1,
                    "|hom(A, bot)|", "1");
    for (Obj a : objs)
      for (Obj b : objs) {
        auto w = kc.at(a, b);
        bool ok = true;
        for (Obj c : objs) {
          for (Mor f : K->hom(a, c))
            for (Mor g : K->hom(b, c)) {
              long count = 0;
              for (Mor h : K->hom(w.apex, c))
                if (K->compose(w.i0, h) == f && K->compose(w.i1, h) == g)
                  ++count;
              if (count != 1) ok = false;
            }
        }
        ck.check_that("kleisli:coproducts", {a, b}, ok,
                      "copairings out of A+B", "exist uniquely");
        auto pw = amp.at(a, b);
        bool pok = true;
        for (Obj c : objs) {
          for (Mor f : K->hom(c, a))
            for (Mor g : K->hom(c, b)) {
              long count = 0;
              for (Mor h : K->hom(c, pw.apex))
                if (K->compose(h, pw.pi0) == f && K->compose(h, pw.pi1) == g)
                  ++count;
              if (count != 1) pok = false;
            }
        }
        ck.check_that("kleisli:amp_product", {a, b}, pok,
                      "pairings into A & B", "exist uniquely");
      }

    // The x monoidal structure on the Kleisli category.
    auto T = monoidal::derive_cartesian_monoidal(prods);
    auto Pp = monoidal::derive_cocartesian_monoidal(cops);
    Fam3 bdL = memo_fam(Fam3([T, cops](Obj x, Obj y, Obj z) {
      auto w = cops.at(y, z);
      auto wt = cops.at(T.ten(x, y), T.ten(x, z));
      return wt.copair(T.lten(x, w.i0), T.lten(x, w.i1));
    }));
    Fam3 bdR = memo_fam(Fam3([T, cops](Obj x, Obj y, Obj z) {
      auto w = cops.at(x, y);
      auto wt = cops.at(T.ten(x, z), T.ten(y, z));
      return wt.copair(T.rten(w.i0, z), T.rten(w.i1, z));
    }));
    auto invert3 = [D](Fam3 f, const char* which) {
      std::string w(which);
      return memo_fam(Fam3([D, f, w](Obj x, Obj y, Obj z) {
        auto inv = D->find_inverse(f(x, y, z));
        if (!inv)
          throw InputError("base distributivity map " + w +
                           " is not invertible at (" + D->obj_name(x) + "," +
                           D->obj_name(y) + "," + D->obj_name(z) + ")");
        return *inv;
      }));
    };
    Fam3 bdLinv = invert3(bdL, "dL");
    Fam3 bdRinv = invert3(bdR, "dR");

    auto Jm = [K, D, cops, top](Mor m) {
      return K->wrap(D->compose(m, cops.at(D->cod(m), top).i0), D->cod(m));
    };

    monoidal::MonoidalStructure KS;
    KS.C = K;
    KS.unit = top;
    KS.ten = [prods](Obj a, Obj b) { return prods.at(a, b).apex; };
    KS.ten_mor = [K, D, T, Pp, prods, cops, top, bdLinv,
                  bdRinv](Mor kf, Mor kg) {
      Mor f = K->base_of(kf), g = K->base_of(kg);
      Obj a2 = K->cod(kf), b2 = K->cod(kg);
      Obj pb2 = cops.at(b2, top).apex;
      Mor s1 = T.ten_mor(f, g);
      Mor s2 = bdRinv(a2, top, pb2);
      Obj tB = T.ten(top, pb2);
      Mor s3 = Pp.ten_mor(bdLinv(a2, b2, top), D->identity(tB));
      Obj X = T.ten(a2, b2), Y = T.ten(a2, top);
      Mor s4 = Pp.assoc_lr(X, Y, tB);
      Mor s5 = Pp.ten_mor(D->identity(X), prods.bang(Pp.ten(Y, tB)));
      return K->wrap(D->compose_all({s1, s2, s3, s4, s5}), X);
    };
    KS.assoc_lr = memo_fam(Fam3([Jm, T](Obj a, Obj b, Obj c) {
      return Jm(T.assoc_lr(a, b, c));
    }));
    KS.assoc_rl = memo_fam(Fam3([Jm, T](Obj a, Obj b, Obj c) {
      return Jm(T.assoc_rl(a, b, c));
    }));
    KS.unitR_in = memo_fam(Fam1([Jm, T](Obj a) { return Jm(T.unitR_in(a)); }));
    KS.unitR_out = memo_fam(Fam1([Jm, T](Obj a) { return Jm(T.unitR_out(a)); }));
    KS.unitL_in = memo_fam(Fam1([Jm, T](Obj a) { return Jm(T.unitL_in(a)); }));
    KS.unitL_out = memo_fam(Fam1([Jm, T](Obj a) { return Jm(T.unitL_out(a)); }));
    KS.sym = memo_fam(Fam2([Jm, T](Obj a, Obj b) { return Jm(T.sym(a, b)); }));

    out.smc = make_distributive_smc(K, kc, KS, objs);
    append_reports(out.reports, check_distributive_smc(out.smc, objs));

    out.L = wedge_construction(out.smc);
    append_reports(out.reports, ldc::sldc_suite(*out.L, objs, opt.base));
    auto mix = ldc::mix_analysis(*out.L, objs, opt.base);
    append_reports(out.reports, mix.reports);
    {
      LawReport r;
      r.law_id = "kleisli:wedge_mix_class";
      r.status = (mix.cls == ldc::MixClass::Isomix ||
                  mix.cls == ldc::MixClass::Compact)
                     ? Status::Pass
                     : Status::Fail;
      r.note = "mix class: " + ldc::mix_class_name(mix.cls);
      out.reports.push_back(r);
    }

    // Negative certificate: A & B is not isomorphic to A + B (here A = B =
    // the base terminal object), so the Kleisli category has no genuine
    // products compatible with its coproducts unless the base is trivial.
    if (top == bot) {
      ck.skip("kleisli:not_cldc", "base category is trivial");
    } else {
      Obj ampApex = amp.at(top, top).apex;
      Obj plusApex = kc.at(top, top).apex;
      bool none = true;
      std::string iso_name;
      for (Mor f : K->hom(ampApex, plusApex))
        if (K->find_inverse(f)) {
          none = false;
          iso_name = K->mor_name(f);
        }
      ck.check_that("kleisli:not_cldc", {ampApex, plusApex}, none,
                    "no isomorphism top & top -> top + top",
                    none ? "hom-set scanned exhaustively" : iso_name);
    }
    append_reports(out.reports, ck.take());
  } catch (const InputError& e) {
    out.failure = e.what();
  } catch (const BudgetExceeded& e) {
    out.failure = e.what();
  }
  return out;
}

}  // namespace ldcw::construct
