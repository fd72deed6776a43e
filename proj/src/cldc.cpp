#include "ldcw/cldc.hpp"

namespace ldcw::cldc {

using limits::ChosenCoproducts;
using limits::ChosenProducts;

// ------------------------------------------------- determined distributors ----

Fam3 determined_deltaL(const ChosenProducts& prods, const ChosenCoproducts& cops) {
  return memo_fam(Fam3([prods, cops](Obj a, Obj b, Obj c) {
    const Category& C = *prods.C;
    auto Pab = prods.at(a, b);
    auto Cbc = cops.at(b, c);
    auto Pdom = prods.at(a, Cbc.apex);          // A x (B+C)
    auto Ccod = cops.at(Pab.apex, c);           // (A x B)+C
    auto Cbc2 = cops.at(b, c);
    // (pi1 + 1_C) : (A x B)+C -> B+C  as the copairing [pi1; i0, i1]
    Mor pi1_plus_1 = Ccod.copair(C.compose(Pab.pi1, Cbc2.i0), Cbc2.i1);
    Mor rhs1 = Pdom.pi1;                        // pi1_{A,B+C}
    // (1_A x i0) : A x B -> A x (B+C)
    Mor one_times_i0 = Pdom.pair(Pab.pi0, C.compose(Pab.pi1, Cbc.i0));
    Mor rhs2 = Ccod.i0;                         // i0_{A x B, C}
    std::vector<Mor> found;
    for (Mor h : C.hom(Pdom.apex, Ccod.apex)) {
      if (C.compose(h, pi1_plus_1) == rhs1 &&
          C.compose(one_times_i0, h) == rhs2)
        found.push_back(h);
    }
    std::string triple = "(" + C.obj_name(a) + "," + C.obj_name(b) + "," +
                         C.obj_name(c) + ")";
    if (found.empty())
      throw InputError("distributor search: no deltaL candidate at " + triple);
    if (found.size() > 1)
      throw InputError("distributor search: deltaL not determined at " + triple);
    return found.front();
  }));
}

Fam3 determined_deltaR(const ChosenProducts& prods, const ChosenCoproducts& cops) {
  return memo_fam(Fam3([prods, cops](Obj a, Obj b, Obj c) {
    const Category& C = *prods.C;
    auto Cab = cops.at(a, b);
    auto Pbc = prods.at(b, c);
    auto Pdom = prods.at(Cab.apex, c);          // (A+B) x C
    auto Ccod = cops.at(a, Pbc.apex);           // A+(B x C)
    // (1_A + pi0) : A+(B x C) -> A+B  as the copairing [i0, pi0; i1]
    Mor one_plus_pi0 = Ccod.copair(Cab.i0, C.compose(Pbc.pi0, Cab.i1));
    Mor rhs1 = Pdom.pi0;                        // pi0_{A+B, C}
    // (i1 x 1_C) : B x C -> (A+B) x C
    Mor i1_times_1 = Pdom.pair(C.compose(Pbc.pi0, Cab.i1), Pbc.pi1);
    Mor rhs2 = Ccod.i1;                         // i1_{A, B x C}
    std::vector<Mor> found;
    for (Mor h : C.hom(Pdom.apex, Ccod.apex)) {
      if (C.compose(h, one_plus_pi0) == rhs1 &&
          C.compose(i1_times_1, h) == rhs2)
        found.push_back(h);
    }
    std::string triple = "(" + C.obj_name(a) + "," + C.obj_name(b) + "," +
                         C.obj_name(c) + ")";
    if (found.empty())
      throw InputError("distributor search: no deltaR candidate at " + triple);
    if (found.size() > 1)
      throw InputError("distributor search: deltaR not determined at " + triple);
    return found.front();
  }));
}

// ----------------------------------------------------------------- assembly ----

AssembleResult assemble_cldc(CatPtr C, const ChosenProducts& prods,
                             const ChosenCoproducts& cops,
                             const std::vector<Obj>& objs,
                             std::optional<Fam3> deltaL,
                             std::optional<Fam3> deltaR,
                             const CldcOptions& opt) {
  AssembleResult out;
  CldcStructure X;
  X.C = C;
  X.prods = prods;
  X.cops = cops;
  X.objs = objs;
  X.L.tensor = monoidal::derive_cartesian_monoidal(prods);
  X.L.par = monoidal::derive_cocartesian_monoidal(cops);
  X.L.deltaL = deltaL ? memo_fam(*deltaL) : determined_deltaL(prods, cops);
  X.L.deltaR = deltaR ? memo_fam(*deltaR) : determined_deltaR(prods, cops);

  try {
    out.reports = ldc::sldc_suite(X.L, objs, opt.base);
  } catch (const InputError& e) {
    out.failure = e.what();
    return out;
  } catch (const BudgetExceeded& e) {
    out.failure = std::string("budget exceeded: ") + e.what();
    return out;
  }
  if (!all_pass(out.reports)) {
    out.failure = "law failure: " + first_failure(out.reports)->law_id;
    return out;
  }
  out.cldc = std::move(X);
  return out;
}

// ---------------------------------------------------------------------- mix ----

ldc::MixData cldc_mix(CldcStructure& X, std::vector<LawReport>* reports,
                      const CldcOptions& opt) {
  (void)opt;
  const Category& C = *X.C;
  Mor b_top = X.cops.cobang(X.top());
  Mor t_bot = X.prods.bang(X.bot());
  if (b_top != t_bot)
    throw HardFailure("cldc_mix: b_top and t_bot disagree");
  ldc::MixData data = ldc::mix_from_m(X.L, b_top);

  LawChecker ck(C);
  ck.check_eq("thm:mix_nullary_unique", {}, b_top, "b_top", t_bot, "t_bot");
  const auto& T = X.L.tensor;
  const auto& P = X.L.par;
  Obj one = T.unit;
  for (Obj a : X.objs)
    for (Obj b : X.objs) {
      Path lhs(C), rhs(C);
      lhs.step("1_A ten uL_par_inv(B)", T.lten(a, P.unitL_in(b)))
          .step("1_A ten (m par 1_B)", T.lten(a, P.rten(data.m, b)))
          .step("deltaL(A,top,B)", X.L.deltaL(a, one, b))
          .step("uR_ten_inv(A) par 1_B", P.rten(T.unitR_out(a), b));
      rhs.step("uR_par_inv(A) ten 1_B", T.rten(P.unitR_in(a), b))
          .step("(1_A par m) ten 1_B", T.rten(P.lten(a, data.m), b))
          .step("deltaR(A,top,B)", X.L.deltaR(a, one, b))
          .step("1_A par uL_ten_inv(B)", P.lten(a, T.unitL_out(b)));
      ck.check("cc:mix_LDC", {a, b}, lhs, rhs);
    }
  if (reports) append_reports(*reports, ck.reports());
  X.mix = data;
  return data;
}

// -------------------------------------------------------------- theorem suite ----

std::vector<LawReport> cldc_theorem_suite(const CldcStructure& X,
                                          const CldcOptions& opt) {
  (void)opt;
  const Category& C = *X.C;
  const auto& T = X.L.tensor;
  const auto& P = X.L.par;
  Obj top = X.top(), bot = X.bot();
  LawChecker ck(C);

  ldc::MixData mix =
      X.mix ? *X.mix : ldc::mix_from_m(X.L, X.cops.cobang(top));

  // (a) the four projection/injection equations.
  for (Obj a : X.objs)
    for (Obj b : X.objs)
      for (Obj c : X.objs) {
        auto Pab = X.prods.at(a, b);
        auto Cbc = X.cops.at(b, c);
        auto Cab = X.cops.at(a, b);
        auto Pbc = X.prods.at(b, c);
        {
          auto Ccod = X.cops.at(Pab.apex, c);
          Path lhs(C), rhs(C);
          lhs.step("deltaL(A,B,C)", X.L.deltaL(a, b, c))
              .step("pi1 + 1_C",
                    Ccod.copair(C.compose(Pab.pi1, Cbc.i0), Cbc.i1));
          rhs.step("pi1(A,B+C)", X.prods.at(a, Cbc.apex).pi1);
          ck.check("thm:delta_pi_iota.1", {a, b, c}, lhs, rhs);
        }
        {
          auto Pdom = X.prods.at(a, Cbc.apex);
          Path lhs(C), rhs(C);
          lhs.step("1_A x i0",
                   Pdom.pair(Pab.pi0, C.compose(Pab.pi1, Cbc.i0)))
              .step("deltaL(A,B,C)", X.L.deltaL(a, b, c));
          rhs.step("i0(AxB,C)", X.cops.at(Pab.apex, c).i0);
          ck.check("thm:delta_pi_iota.2", {a, b, c}, lhs, rhs);
        }
        {
          auto Ccod = X.cops.at(a, Pbc.apex);
          Path lhs(C), rhs(C);
          lhs.step("deltaR(A,B,C)", X.L.deltaR(a, b, c))
              .step("1_A + pi0",
                    Ccod.copair(Cab.i0, C.compose(Pbc.pi0, Cab.i1)));
          rhs.step("pi0(A+B,C)", X.prods.at(Cab.apex, c).pi0);
          ck.check("thm:delta_pi_iota.3", {a, b, c}, lhs, rhs);
        }
        {
          auto Pdom = X.prods.at(Cab.apex, c);
          Path lhs(C), rhs(C);
          lhs.step("i1 x 1_C",
                   Pdom.pair(C.compose(Pbc.pi0, Cab.i1), Pbc.pi1))
              .step("deltaR(A,B,C)", X.L.deltaR(a, b, c));
          rhs.step("i1(A,BxC)", X.cops.at(a, Pbc.apex).i1);
          ck.check("thm:delta_pi_iota.4", {a, b, c}, lhs, rhs);
        }
      }

  // (b) bot subterminal, top preinitial.
  {
    auto fb = limits::classify_object(C, X.objs, bot, &X.prods, &X.cops);
    ck.check_that("thm:bot_subterminal", {bot}, fb.subterminal,
                  "classify_object(bot).subterminal", "true");
    auto ft = limits::classify_object(C, X.objs, top, &X.prods, &X.cops);
    ck.check_that("thm:top_preinitial", {top}, ft.preinitial,
                  "classify_object(top).preinitial", "true");
  }

  // (c)(d) per-object equivalences.
  for (Obj a : X.objs) {
    bool to_bot = !C.hom(a, bot).empty();
    bool pi0_iso = C.find_inverse(X.prods.at(a, bot).pi0).has_value();
    ck.check_that("thm:hom_to_bot_iff_pi0_iso", {a}, to_bot == pi0_iso,
                  std::string("hom(A,bot) ") + (to_bot ? "nonempty" : "empty"),
                  std::string("pi0(A,bot) ") + (pi0_iso ? "iso" : "not iso"));
    bool from_top = !C.hom(top, a).empty();
    bool i0_iso = C.find_inverse(X.cops.at(a, top).i0).has_value();
    ck.check_that("thm:hom_from_top_iff_iota0_iso", {a}, from_top == i0_iso,
                  std::string("hom(top,A) ") + (from_top ? "nonempty" : "empty"),
                  std::string("i0(A,top) ") + (i0_iso ? "iso" : "not iso"));

    auto flags = limits::classify_object(C, X.objs, a, &X.prods, &X.cops);
    auto Paa = X.prods.at(a, a);
    auto Caa = X.cops.at(a, a);
    bool fact0 = C.compose(Paa.pi0, Caa.i0) == mix.mix(a, a);
    bool fact1 = C.compose(Paa.pi1, Caa.i1) == mix.mix(a, a);
    bool factor = fact0 && fact1;
    ck.check_that("thm:preinitial_iff_mix_factor", {a},
                  flags.preinitial == factor,
                  std::string("preinitial = ") +
                      (flags.preinitial ? "true" : "false"),
                  std::string("mix = pi;iota factorization = ") +
                      (factor ? "true" : "false"));
    ck.check_that("thm:subterminal_iff_mix_factor", {a},
                  flags.subterminal == factor,
                  std::string("subterminal = ") +
                      (flags.subterminal ? "true" : "false"),
                  std::string("mix = pi;iota factorization = ") +
                      (factor ? "true" : "false"));
  }

  // Units complementation pair and the adjunction route of the
  // subterminality proof.
  auto pair = ldc::units_pair(X.L);
  std::vector<LawReport> out = ck.take();
  append_reports(out, ldc::check_complementation_pair(X.L, pair));
  append_reports(out, ldc::complement_adjunction(X.L, pair, bot, bot));
  {
    LawChecker ck2(C);
    size_t n = C.hom(T.ten(bot, bot), bot).size();
    ck2.check_that("thm:unique_map_botbot", {bot}, n == 1,
                   "|hom(bot x bot, bot)| = " + std::to_string(n), "1");
    append_reports(out, ck2.take());
  }
  (void)P;
  return out;
}

// ------------------------------------------------------------------- duoidal ----

DuoidalData duoidal_data(const CldcStructure& X) {
  const Category& C = *X.C;
  ChosenProducts prods = X.prods;
  ChosenCoproducts cops = X.cops;
  const auto Tm = X.L.tensor.ten_mor;
  const auto Pm = X.L.par.ten_mor;
  Obj top = X.top(), bot = X.bot();

  DuoidalData d;
  d.Delta_bot = prods.at(bot, bot).pair(C.identity(bot), C.identity(bot));
  d.nabla_top = cops.at(top, top).copair(C.identity(top), C.identity(top));
  d.m = cops.cobang(top);
  d.mu = memo_fam(Fam4([prods, cops, Pm](Obj a, Obj b, Obj c, Obj d_) {
    const Category& cat = *prods.C;
    auto Pab = prods.at(a, b);
    auto Pcd = prods.at(c, d_);
    Obj ac = cops.at(a, c).apex, bd = cops.at(b, d_).apex;
    Mor f0 = Pm(Pab.pi0, Pcd.pi0);  // (AxB)+(CxD) -> A+C
    Mor f1 = Pm(Pab.pi1, Pcd.pi1);  // (AxB)+(CxD) -> B+D
    (void)cat;
    return prods.at(ac, bd).pair(f0, f1);
  }));
  d.tau_times = memo_fam(Fam4([prods, Tm](Obj w, Obj x, Obj y, Obj z) {
    auto Pwx = prods.at(w, x);
    auto Pyz = prods.at(y, z);
    Obj wy = prods.at(w, y).apex, xz = prods.at(x, z).apex;
    return prods.at(wy, xz).pair(Tm(Pwx.pi0, Pyz.pi0), Tm(Pwx.pi1, Pyz.pi1));
  }));
  d.tau_plus = memo_fam(Fam4([cops, Pm](Obj w, Obj x, Obj y, Obj z) {
    auto Cwy = cops.at(w, y);
    auto Cxz = cops.at(x, z);
    Obj wx = cops.at(w, x).apex, yz = cops.at(y, z).apex;
    return cops.at(wx, yz).copair(Pm(Cwy.i0, Cxz.i0), Pm(Cwy.i1, Cxz.i1));
  }));
  return d;
}

std::vector<LawReport> duoidal_suite(const CldcStructure& X,
                                     const CldcOptions& opt) {
  const Category& C = *X.C;
  const auto& T = X.L.tensor;
  const auto& P = X.L.par;
  Obj top = X.top(), bot = X.bot();
  DuoidalData d = duoidal_data(X);
  ldc::MixData mix =
      X.mix ? *X.mix : ldc::mix_from_m(X.L, X.cops.cobang(top));
  LawChecker ck(C);

  // Structure maps: both presentations agree.
  ck.check_eq("duoidal:Delta_presentations", {bot}, d.Delta_bot,
              "<1_bot, 1_bot>", X.cops.cobang(T.ten(bot, bot)),
              "b_(bot x bot)");
  ck.check_eq("duoidal:nabla_presentations", {top}, d.nabla_top,
              "[1_top, 1_top]", X.prods.bang(P.ten(top, top)),
              "t_(top + top)");
  ck.check_eq("duoidal:m_presentations", {}, d.m, "b_top",
              X.prods.bang(bot), "t_bot");

  std::vector<Obj> quad = strided_sample(X.objs, opt.base.bounds.quad_objects);
  if (quad.size() < X.objs.size()) {
    std::string note = "objects sampled " + std::to_string(quad.size()) + "/" +
                       std::to_string(X.objs.size());
    for (const char* id :
         {"duoidal:mu_presentations", "diag:interchange_canonicalflip_mix.1",
          "diag:interchange_canonicalflip_mix.2", "diag:interchange_braidings.1",
          "diag:interchange_braidings.2"})
      ck.note(id, note);
  }

  for (Obj a : quad)
    for (Obj b : quad)
      for (Obj c : quad)
        for (Obj e : quad) {
          // mu's copairing presentation [i0 x i0, i1 x i1].
          auto Cac = X.cops.at(a, c);
          auto Cbe = X.cops.at(b, e);
          Mor copaired = X.cops.at(T.ten(a, b), T.ten(c, e))
                             .copair(T.ten_mor(Cac.i0, Cbe.i0),
                                     T.ten_mor(Cac.i1, Cbe.i1));
          ck.check_eq("duoidal:mu_presentations", {a, b, c, e}, d.mu(a, b, c, e),
                      "<pi0+pi0, pi1+pi1>", copaired, "[i0 x i0, i1 x i1]");
          {
            Path lhs(C), rhs(C);
            lhs.step("mu(A,B,C,D)", d.mu(a, b, c, e))
                .step("mix(A+C,B+D)", mix.mix(P.ten(a, c), P.ten(b, e)));
            rhs.step("mix(A,B) + mix(C,D)",
                     P.ten_mor(mix.mix(a, b), mix.mix(c, e)))
                .step("tau_plus(A,B,C,D)", d.tau_plus(a, b, c, e));
            ck.check("diag:interchange_canonicalflip_mix.1", {a, b, c, e}, lhs,
                     rhs);
          }
          {
            Path lhs(C), rhs(C);
            lhs.step("tau_times(A,B,C,D)", d.tau_times(a, b, c, e))
                .step("mix(A,C) x mix(B,D)",
                      T.ten_mor(mix.mix(a, c), mix.mix(b, e)));
            rhs.step("mix(AxB,CxD)", mix.mix(T.ten(a, b), T.ten(c, e)))
                .step("mu(A,B,C,D)", d.mu(a, b, c, e));
            ck.check("diag:interchange_canonicalflip_mix.2", {a, b, c, e}, lhs,
                     rhs);
          }
          {
            Path lhs(C), rhs(C);
            lhs.step("mu(A,B,C,D)", d.mu(a, b, c, e))
                .step("sym_x(A+C,B+D)", T.sym(P.ten(a, c), P.ten(b, e)));
            rhs.step("sym_x(A,B) + sym_x(C,D)",
                     P.ten_mor(T.sym(a, b), T.sym(c, e)))
                .step("mu(B,A,D,C)", d.mu(b, a, e, c));
            ck.check("diag:interchange_braidings.1", {a, b, c, e}, lhs, rhs);
          }
          {
            Path lhs(C), rhs(C);
            lhs.step("mu(A,B,C,D)", d.mu(a, b, c, e))
                .step("sym_+(A,C) x sym_+(B,D)",
                      T.ten_mor(P.sym(a, c), P.sym(b, e)));
            rhs.step("sym_+(AxB,CxD)", P.sym(T.ten(a, b), T.ten(c, e)))
                .step("mu(C,D,A,B)", d.mu(c, e, a, b));
            ck.check("diag:interchange_braidings.2", {a, b, c, e}, lhs, rhs);
          }
        }

  // The four interchange/distributor equations (5-indexed).
  std::vector<Obj> quint = strided_sample(X.objs, opt.quint_objects);
  if (quint.size() < X.objs.size()) {
    std::string note = "objects sampled " + std::to_string(quint.size()) + "/" +
                       std::to_string(X.objs.size());
    for (const char* id :
         {"diag:interchange_lineardist.1", "diag:interchange_lineardist.2",
          "diag:interchange_lineardist.3", "diag:interchange_lineardist.4"})
      ck.note(id, note);
  }
  for (Obj x : quint)
    for (Obj a : quint)
      for (Obj b : quint)
        for (Obj c : quint)
          for (Obj e : quint) {
            Obj ac = P.ten(a, c), be = P.ten(b, e);
            {
              Path lhs(C), rhs(C);
              lhs.step("1_X x mu(A,B,C,D)", T.lten(x, d.mu(a, b, c, e)))
                  .step("assoc_x_inv(X,A+C,B+D)", T.assoc_rl(x, ac, be))
                  .step("deltaL(X,A,C) x 1_(B+D)",
                        T.rten(X.L.deltaL(x, a, c), be));
              rhs.step("deltaL(X,AxB,CxD)",
                       X.L.deltaL(x, T.ten(a, b), T.ten(c, e)))
                  .step("assoc_x_inv(X,A,B) + 1_(CxD)",
                        P.rten(T.assoc_rl(x, a, b), T.ten(c, e)))
                  .step("mu(XxA,B,C,D)", d.mu(T.ten(x, a), b, c, e));
              ck.check("diag:interchange_lineardist.1", {x, a, b, c, e}, lhs,
                       rhs);
            }
            {
              Path lhs(C), rhs(C);
              lhs.step("1_(AxB) + deltaL(C,D,X)",
                       P.lten(T.ten(a, b), X.L.deltaL(c, e, x)))
                  .step("assoc_+(AxB,CxD,X)",
                        P.assoc_rl(T.ten(a, b), T.ten(c, e), x))
                  .step("mu(A,B,C,D) + 1_X", P.rten(d.mu(a, b, c, e), x));
              rhs.step("mu(A,B,C,D+X)", d.mu(a, b, c, P.ten(e, x)))
                  .step("1_(A+C) x assoc_+(B,D,X)",
                        T.lten(ac, P.assoc_rl(b, e, x)))
                  .step("deltaL(A+C,B+D,X)", X.L.deltaL(ac, be, x));
              ck.check("diag:interchange_lineardist.2", {a, b, c, e, x}, lhs,
                       rhs);
            }
            {
              Path lhs(C), rhs(C);
              lhs.step("mu(A,B,C,D) x 1_X", T.rten(d.mu(a, b, c, e), x))
                  .step("assoc_x(A+C,B+D,X)", T.assoc_lr(ac, be, x))
                  .step("1_(A+C) x deltaR(B,D,X)",
                        T.lten(ac, X.L.deltaR(b, e, x)));
              rhs.step("deltaR(AxB,CxD,X)",
                       X.L.deltaR(T.ten(a, b), T.ten(c, e), x))
                  .step("1_(AxB) + assoc_x(C,D,X)",
                        P.lten(T.ten(a, b), T.assoc_lr(c, e, x)))
                  .step("mu(A,B,C,DxX)", d.mu(a, b, c, T.ten(e, x)));
              ck.check("diag:interchange_lineardist.3", {a, b, c, e, x}, lhs,
                       rhs);
            }
            {
              Path lhs(C), rhs(C);
              lhs.step("deltaR(X,A,B) + 1_(CxD)",
                       P.rten(X.L.deltaR(x, a, b), T.ten(c, e)))
                  .step("assoc_+_inv(X,AxB,CxD)",
                        P.assoc_lr(x, T.ten(a, b), T.ten(c, e)))
                  .step("1_X + mu(A,B,C,D)", P.lten(x, d.mu(a, b, c, e)));
              rhs.step("mu(X+A,B,C,D)", d.mu(P.ten(x, a), b, c, e))
                  .step("assoc_+_inv(X,A,C) x 1_(B+D)",
                        T.rten(P.assoc_lr(x, a, c), be))
                  .step("deltaR(X,A+C,B+D)", X.L.deltaR(x, ac, be));
              ck.check("diag:interchange_lineardist.4", {x, a, b, c, e}, lhs,
                       rhs);
            }
          }
  return ck.take();
}

}  // namespace ldcw::cldc
