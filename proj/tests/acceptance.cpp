// Acceptance gate: one line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cstdio>
#include <set>
#include <sstream>
#include <string>

#include "ldcw/zoo.hpp"

using namespace ldcw;

namespace {

struct Verdict {
  bool ok = true;
  std::string summary;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      summary = what;
    }
  }
};

int pass_count(const std::vector<LawReport>& rs) {
  int n = 0;
  for (const auto& r : rs)
    if (r.status == Status::Pass) ++n;
  return n;
}

std::string first_fail_text(const std::vector<LawReport>& rs) {
  const auto* f = first_failure(rs);
  if (!f) return "no failing law";
  std::string out = f->law_id;
  if (f->witness) {
    out += " @ (";
    for (size_t i = 0; i < f->witness->objects.size(); ++i) {
      if (i) out += ", ";
      out += f->witness->objects[i];
    }
    out += ")";
  }
  return out;
}

// ---- shared instances (computed once) ------------------------------------

const zoo::FinRelBundle& finrel2() {
  static zoo::FinRelBundle b = zoo::make_finrel(2);
  return b;
}

const cldc::AssembleResult& finrel2_cldc() {
  static cldc::AssembleResult res = [] {
    const auto& B = finrel2();
    construct::SemiAddInput SI{B.C, B.prods, B.cops, B.zero, B.objs};
    return construct::semiadditive_to_cldc(SI);
  }();
  return res;
}

const construct::GrothendieckResult& groth_p2up() {
  static construct::GrothendieckResult G = [] {
    const auto& B = finrel2();
    auto PF = zoo::powerset_functors(B);
    return construct::grothendieck(*finrel2_cldc().cldc, B.zero, PF.P2up);
  }();
  return G;
}

const construct::BdlCldcResult& b2_cldc() {
  static construct::BdlCldcResult res =
      construct::bdl_to_cldc(zoo::bdl_boolean(2));
  return res;
}

bool eight_flags_false(const collapse::Classification& c) {
  return !c.posetal && !c.distributive && !c.strict_initial &&
         !c.costrict_terminal && !c.semi_additive &&
         !c.invertible_distributors && !c.isomix && !c.compact;
}

// ---- criteria -------------------------------------------------------------

// 1. Every distributive lattice with at most six elements yields a fully
//    certified posetal instance.
Verdict criterion1() {
  Verdict v;
  auto all = zoo::all_distributive_lattices(6);
  v.require(all.size() == 13, "census size != 13");
  for (const auto& L : all) {
    auto res = construct::bdl_to_cldc(L);
    v.require(res.ok() && all_pass(res.reports),
              L.name + ": " + (res.ok() ? first_fail_text(res.reports)
                                        : res.failure));
    if (!v.ok) return v;
    auto cls = collapse::classify(*res.X);
    v.require(cls.posetal, L.name + ": not posetal");
  }
  v.summary = "13 lattices certified (posetal group throughout)";
  return v;
}

// 2. Relations on sets of size <= 3: a compact instance with the
//    semi-additive group true, the posetal group false, and the canonical
//    mix inverse to psi componentwise.
Verdict criterion2() {
  Verdict v;
  auto B = zoo::make_finrel(3);
  construct::SemiAddInput SI{B.C, B.prods, B.cops, B.zero, B.objs};
  auto res = construct::semiadditive_to_cldc(SI);
  v.require(res.ok(), "assembly failed: " + res.failure);
  if (!v.ok) return v;
  v.require(all_pass(res.reports), first_fail_text(res.reports));
  auto cls = collapse::classify(*res.cldc);
  v.require(cls.semi_additive && cls.compact && cls.isomix &&
                cls.invertible_distributors,
            "semi-additive group not fully true");
  v.require(!cls.posetal && !cls.distributive && !cls.strict_initial &&
                !cls.costrict_terminal,
            "posetal group not fully false");
  for (Obj a : B.objs) {
    for (Obj b : B.objs) {
      auto inv = B.C->find_inverse(res.cldc->mix->mix(a, b));
      v.require(inv.has_value() && *inv == B.zero.psi(a, b),
                "mix inverse != psi at (" + B.C->obj_name(a) + ", " +
                    B.C->obj_name(b) + ")");
    }
  }
  if (v.ok) v.summary = "compact; mix^{-1} = psi on all pairs";
  return v;
}

// 3. Partial maps three ways: the direct either-or-both tensor, the generic
//    wedge, and the Kleisli category of the exception monad agree morphism
//    by morphism; and no instance on this category can be cartesian
//    linearly distributive, witnessed by |1 & 1| = 3 != 2 = |1 + 1| with an
//    exhaustive no-isomorphism scan.
Verdict criterion3() {
  Verdict v;
  auto D = zoo::finpar_direct_ldc(2);
  auto W = construct::wedge_construction(D.base.smc);
  auto mors = fincat::morphisms_between(*D.base.C, D.base.objs);
  for (Obj a : D.base.objs)
    for (Obj b : D.base.objs)
      v.require(W.tensor.ten(a, b) == D.L.tensor.ten(a, b),
                "wedge/direct object mismatch");
  for (Mor f : mors)
    for (Mor g : mors)
      v.require(W.tensor.ten_mor(f, g) == D.L.tensor.ten_mor(f, g),
                "wedge/direct tensor action mismatch");
  for (Obj a : D.base.objs)
    for (Obj b : D.base.objs)
      for (Obj c : D.base.objs) {
        v.require(W.deltaL(a, b, c) == D.L.deltaL(a, b, c) &&
                      W.deltaR(a, b, c) == D.L.deltaR(a, b, c),
                  "wedge/direct distributor mismatch");
      }
  if (!v.ok) return v;

  // Kleisli route, compared through the wrapping functor.
  auto S = zoo::make_finset(2);
  auto KR = construct::kleisli_exception(S.C, S.prods, S.cops, S.objs);
  v.require(KR.failure.empty() && all_pass(KR.reports),
            "kleisli suite: " + (KR.failure.empty()
                                     ? first_fail_text(KR.reports)
                                     : KR.failure));
  if (!v.ok) return v;
  auto SC = std::dynamic_pointer_cast<const zoo::FinSetCategory>(S.C);
  for (Obj a : S.objs) {
    for (Obj b : S.objs) {
      std::set<Mor> image;
      for (Mor m : KR.K->hom(a, b))
        image.insert(zoo::kleisli_to_finpar(KR, *SC, *D.base.C, m));
      v.require(image.size() == D.base.C->hom(a, b).size(),
                "kleisli comparison not a hom bijection");
      for (Mor f : KR.K->hom(a, b)) {
        for (Mor g : KR.K->hom(a, b)) {
          Mor wk = zoo::kleisli_to_finpar(KR, *SC, *D.base.C,
                                          KR.L->tensor.ten_mor(f, g));
          Mor wp = D.L.tensor.ten_mor(
              zoo::kleisli_to_finpar(KR, *SC, *D.base.C, f),
              zoo::kleisli_to_finpar(KR, *SC, *D.base.C, g));
          v.require(wk == wp, "kleisli/direct tensor action mismatch");
        }
      }
    }
  }
  if (!v.ok) return v;

  // The refutation: a zero object forces any would-be instance to make
  // 1 & 1 and 1 + 1 isomorphic, but their sizes differ and the full scan of
  // hom(3, 2) finds no isomorphism.
  Obj ampApex = KR.amp.at(Obj{1}, Obj{1}).apex;
  Obj plusApex = KR.cops.at(Obj{1}, Obj{1}).apex;
  v.require(ampApex == Obj{3} && plusApex == Obj{2}, "apex sizes changed");
  auto FP = D.base.C;
  int scanned = 0;
  for (Mor f : FP->hom(ampApex, plusApex)) {
    ++scanned;
    v.require(!FP->find_inverse(f).has_value(),
              "unexpected isomorphism 3 -> 2");
  }
  v.require(scanned == 27, "hom(3, 2) scan incomplete");
  if (v.ok)
    v.summary =
        "three routes agree; no instance exists (|1 & 1| = 3 != 2 = |1 + 1|)";
  return v;
}

// 4. The total category of the up-closed double powerset over relations on
//    sets of size <= 2 certifies, both classifier groups are false, and mix
//    exists with a non-invertible nullary map.
Verdict criterion4() {
  Verdict v;
  const auto& G = groth_p2up();
  v.require(G.failure.empty(), "total category failed: " + G.failure);
  if (!v.ok) return v;
  v.require(all_pass(G.reports), first_fail_text(G.reports));
  auto cls = collapse::classify(*G.X);
  v.require(eight_flags_false(cls), "a classifier flag is unexpectedly true");
  v.require(G.X->mix.has_value(), "mix missing");
  if (v.ok) {
    v.require(!G.X->C->find_inverse(G.X->mix->m).has_value(),
              "nullary mix map unexpectedly invertible");
  }
  if (v.ok)
    v.summary = "total category certified; mix present, nullary map not iso";
  return v;
}

// 5. The theorem suite holds as a property across the certified instances,
//    including a product instance where every classifier flag is false.
Verdict criterion5() {
  Verdict v;
  v.require(all_pass(cldc::cldc_theorem_suite(*b2_cldc().X)),
            "B2: " + first_fail_text(cldc::cldc_theorem_suite(*b2_cldc().X)));
  auto rel = cldc::cldc_theorem_suite(*finrel2_cldc().cldc);
  v.require(all_pass(rel), "relations: " + first_fail_text(rel));
  auto tot = cldc::cldc_theorem_suite(*groth_p2up().X);
  v.require(all_pass(tot), "total category: " + first_fail_text(tot));

  auto chain2 = construct::bdl_to_cldc(zoo::bdl_chain(2));
  auto R1 = zoo::make_finrel(1);
  construct::SemiAddInput SI{R1.C, R1.prods, R1.cops, R1.zero, R1.objs};
  auto rel1 = construct::semiadditive_to_cldc(SI);
  auto prod = construct::product_cldc(*chain2.X, *rel1.cldc);
  v.require(prod.failure.empty() && all_pass(prod.reports),
            "product: " + (prod.failure.empty()
                               ? first_fail_text(prod.reports)
                               : prod.failure));
  if (!v.ok) return v;
  auto thm = cldc::cldc_theorem_suite(*prod.X);
  v.require(all_pass(thm), "product theorems: " + first_fail_text(thm));
  auto cls = collapse::classify(*prod.X);
  v.require(eight_flags_false(cls), "product: a classifier flag is true");
  if (v.ok) v.summary = "theorem suite holds on 4 instances; product mixed";
  return v;
}

// 6. The duoidal interchange suite passes exhaustively on relations and on
//    the four-element Boolean lattice.
Verdict criterion6() {
  Verdict v;
  auto rel = cldc::duoidal_suite(*finrel2_cldc().cldc);
  v.require(all_pass(rel), "relations: " + first_fail_text(rel));
  auto lat = cldc::duoidal_suite(*b2_cldc().X);
  v.require(all_pass(lat), "B2: " + first_fail_text(lat));
  if (v.ok) {
    v.summary = "interchange certified (" +
                std::to_string(pass_count(rel) + pass_count(lat)) +
                " law families)";
  }
  return v;
}

// 7. Among all lattices with at most six elements, a total negation exists
//    exactly on the Boolean ones; the three-chain fails at its middle
//    element; every instance carrying a negation is reported posetal.
Verdict criterion7() {
  Verdict v;
  int boolean_count = 0;
  for (const auto& L : zoo::all_distributive_lattices(6)) {
    auto res = construct::bdl_to_cldc(L);
    v.require(res.ok(), L.name + ": assembly failed");
    if (!v.ok) return v;
    auto neg = ldc::find_negation(res.X->L, res.X->objs);
    bool is_boolean = false;
    for (int k = 0; (1 << k) <= L.n; ++k) {
      if ((1 << k) == L.n && zoo::bdl_isomorphic(L, zoo::bdl_boolean(k)))
        is_boolean = true;
    }
    v.require(neg.total() == is_boolean,
              L.name + ": negation " + (neg.total() ? "found" : "missing") +
                  " but lattice is " + (is_boolean ? "" : "not ") + "Boolean");
    if (neg.total()) {
      ++boolean_count;
      v.require(collapse::classify(*res.X).posetal,
                L.name + ": negation found but not reported posetal");
    }
  }
  v.require(boolean_count == 3, "expected 3 Boolean lattices in the census");

  auto c3 = construct::bdl_to_cldc(zoo::bdl_chain(3));
  auto neg3 = ldc::find_negation(c3.X->L, c3.X->objs);
  v.require(!neg3.total() && neg3.failure == "1",
            "three-chain should fail at \"1\"");
  if (v.ok) v.summary = "negation on exactly the 3 Boolean lattices";
  return v;
}

// 8. The semizero subcategory is posetal on every instance; the slice over
//    bottom is semi-additive with psi inverse to mix; and on a semi-additive
//    instance the slice equivalence certifies.
Verdict criterion8() {
  Verdict v;
  int instances = 0;
  for (const auto& L : zoo::all_distributive_lattices(4)) {
    auto res = construct::bdl_to_cldc(L);
    auto sz = construct::sz_subcategory(*res.X);
    v.require(sz.failure.empty() && all_pass(sz.reports),
              L.name + " semizero: " + (sz.failure.empty()
                                            ? first_fail_text(sz.reports)
                                            : sz.failure));
    ++instances;
  }
  auto sz_rel = construct::sz_subcategory(*finrel2_cldc().cldc);
  v.require(sz_rel.failure.empty() && all_pass(sz_rel.reports),
            "relations semizero: " + (sz_rel.failure.empty()
                                          ? first_fail_text(sz_rel.reports)
                                          : sz_rel.failure));
  ++instances;

  auto sl = construct::slice_cldc(*finrel2_cldc().cldc);
  v.require(sl.failure.empty() && all_pass(sl.reports),
            "slice: " + (sl.failure.empty() ? first_fail_text(sl.reports)
                                            : sl.failure));
  if (!v.ok) return v;
  auto eq = construct::slice_equivalence(*finrel2_cldc().cldc, sl);
  v.require(all_pass(eq), "slice equivalence: " + first_fail_text(eq));
  if (v.ok) {
    v.summary = "semizero posetal on " + std::to_string(instances) +
                " instances; slice equivalence certified";
  }
  return v;
}

// 9. Ten single-component mutations, each caught with a counterexample.
Verdict criterion9() {
  Verdict v;
  int caught = 0;
  auto detects = [&](const std::vector<LawReport>& rs, const char* what) {
    const auto* f = first_failure(rs);
    bool ok = f != nullptr && f->witness.has_value();
    v.require(ok, std::string("mutation not detected: ") + what);
    if (ok) ++caught;
  };

  // Shared fixture for (1) and (6): X -> Y -> Z with c = a;b and a second
  // parallel morphism d : X -> Z.
  fincat::TableCategoryData routes;
  routes.objects = {"X", "Y", "Z"};
  routes.morphisms = {{"1X", 0, 0}, {"1Y", 1, 1}, {"1Z", 2, 2},
                      {"a", 0, 1},  {"b", 1, 2},  {"c", 0, 2},
                      {"d", 0, 2}};
  routes.identities = {0, 1, 2};
  routes.composition[{0, 0}] = 0;
  routes.composition[{1, 1}] = 1;
  routes.composition[{2, 2}] = 2;
  routes.composition[{0, 3}] = 3;
  routes.composition[{3, 1}] = 3;
  routes.composition[{1, 4}] = 4;
  routes.composition[{4, 2}] = 4;
  routes.composition[{0, 5}] = 5;
  routes.composition[{5, 2}] = 5;
  routes.composition[{0, 6}] = 6;
  routes.composition[{6, 2}] = 6;
  routes.composition[{3, 4}] = 5;

  // (1) one composition cell redirected to the parallel morphism
  {
    auto bad = routes;
    bad.composition[{0, 5}] = 6;  // 1X;c declared to be d
    fincat::TableCategory C(bad, false);
    detects(fincat::validate_category(C, C.objects()), "composition cell");
  }
  // (2) identity slot pointing at a non-identity idempotent
  {
    fincat::TableCategoryData d;
    d.objects = {"X"};
    d.morphisms = {{"1X", 0, 0}, {"e", 0, 0}};
    d.identities = {1};
    d.composition[{0, 0}] = 0;
    d.composition[{0, 1}] = 1;
    d.composition[{1, 0}] = 1;
    d.composition[{1, 1}] = 1;
    fincat::TableCategory C(d, false);
    detects(fincat::validate_category(C, C.objects()), "identity slot");
  }
  // (3) biproduct injections exchanged
  {
    auto B = zoo::make_finrel(1);
    auto pw = B.prods.at(Obj{1}, Obj{1});
    auto cw = B.cops.at(Obj{1}, Obj{1});
    limits::BiproductCandidate cand{Obj{1}, Obj{1}, pw.apex, pw.pi0, pw.pi1,
                                    cw.i1, cw.i0};
    detects(limits::check_biproduct(*B.C, B.zero, cand, B.objs),
            "swapped injections");
  }
  // (4) braiding replaced by the identity relation
  {
    auto B = zoo::make_finrel(1);
    auto M = monoidal::derive_cartesian_monoidal(B.prods);
    auto ten = M.ten;
    auto C = B.C;
    M.sym = [C, ten](Obj a, Obj b) { return C->identity(ten(a, b)); };
    detects(monoidal::check_monoidal_laws(M, B.objs), "identity braiding");
  }
  // (5) left distributor post-composed with the cocartesian swap
  {
    const auto& res = finrel2_cldc();
    ldc::LdcStructure L = res.cldc->L;
    auto orig = L.deltaL;
    auto par = L.par;
    auto ten = L.tensor;
    L.deltaL = [orig, par, ten](Obj a, Obj b, Obj c) {
      return par.C->compose(orig(a, b, c), par.sym(ten.ten(a, b), c));
    };
    detects(ldc::check_ldc_laws(L, {Obj{0}, Obj{1}}), "twisted distributor");
  }
  // (6) functor action sending the composite c to the parallel morphism d
  {
    auto D = std::make_shared<fincat::TableCategory>(routes);
    fincat::Functor F = fincat::identity_functor(D);
    F.mor = [D](Mor m) {
      return D->mor_name(m) == "c" ? D->hom(Obj{0}, Obj{2})[1] : m;
    };
    detects(fincat::check_functor(F, D->objects()), "functor action");
  }
  // (7) natural transformation component replaced by the swap
  {
    const auto& B = finrel2();
    auto C = B.C;
    fincat::NaturalTransformation eta{
        fincat::identity_functor(C), fincat::identity_functor(C),
        [C](Obj a) {
          if (a == Obj{2})
            return C->mor(Obj{2}, Obj{2},
                          std::vector<char>{0, 1, 1, 0});
          return C->identity(a);
        }};
    detects(fincat::check_natural(eta, B.objs), "natural component");
  }
  // (8) a non-distributive lattice (the diamond)
  {
    construct::FiniteBDL L;
    L.name = "M3";
    L.n = 5;
    L.elems = {"0", "a", "b", "c", "1"};
    L.leq.assign(5, std::vector<bool>(5, false));
    for (int i = 0; i < 5; ++i) {
      L.leq[i][i] = true;
      L.leq[0][i] = true;
      L.leq[i][4] = true;
    }
    auto val = construct::validate_bdl(L);
    bool ok = !val.ok && !val.failure.empty();
    v.require(ok, "mutation not detected: non-distributive lattice");
    if (ok) ++caught;
  }
  // (9) a supplied distributor table corrupted at one triple
  {
    auto B = zoo::make_finrel(1);
    construct::SemiAddInput SI{B.C, B.prods, B.cops, B.zero, B.objs};
    auto good = construct::semiadditive_to_cldc(SI);
    auto orig = good.cldc->L.deltaL;
    auto zero = B.zero;
    auto ten = good.cldc->L.tensor;
    auto par = good.cldc->L.par;
    Fam3 badL = [orig, zero, ten, par](Obj a, Obj b, Obj c) {
      if (a == Obj{1} && b == Obj{1} && c == Obj{1}) {
        return zero.zero_mor(ten.ten(a, par.ten(b, c)),
                             par.ten(ten.ten(a, b), c));
      }
      return orig(a, b, c);
    };
    auto res = cldc::assemble_cldc(B.C, B.prods, B.cops, B.objs, badL,
                                   good.cldc->L.deltaR);
    bool ok = !res.ok() && first_failure(res.reports) != nullptr &&
              first_failure(res.reports)->witness.has_value();
    v.require(ok, "mutation not detected: corrupted distributor table");
    if (ok) ++caught;
  }
  // (10) fiber order of a lattice-valued functor declared discrete
  {
    auto B = zoo::make_finrel(1);
    auto PF = zoo::powerset_functors(B);
    construct::LatticeValuedFunctor bad = PF.P2up;
    bad.leq = [](Obj, long x, long y) { return x == y; };
    detects(construct::check_lattice_valued_functor(bad, B.objs),
            "fiber order");
  }

  if (v.ok) v.summary = std::to_string(caught) + "/10 mutations detected";
  return v;
}

}  // namespace

int main() {
  using Clock = std::chrono::steady_clock;
  struct Entry {
    const char* name;
    Verdict (*fn)();
  };
  const Entry entries[] = {
      {"criterion 1", criterion1}, {"criterion 2", criterion2},
      {"criterion 3", criterion3}, {"criterion 4", criterion4},
      {"criterion 5", criterion5}, {"criterion 6", criterion6},
      {"criterion 7", criterion7}, {"criterion 8", criterion8},
      {"criterion 9", criterion9},
  };
  bool all_ok = true;
  for (const auto& e : entries) {
    auto t0 = Clock::now();
    Verdict v;
    try {
      v = e.fn();
    } catch (const std::exception& ex) {
      v.ok = false;
      v.summary = std::string("exception: ") + ex.what();
    }
    double secs =
        std::chrono::duration<double>(Clock::now() - t0).count();
    std::printf("%s: %s — %s (%.1fs)\n", e.name, v.ok ? "pass" : "FAIL",
                v.summary.c_str(), secs);
    std::fflush(stdout);
    all_ok = all_ok && v.ok;
  }
  return all_ok ? 0 : 1;
}
