#include "ldcw/collapse.hpp"

namespace ldcw::collapse {

using cldc::CldcStructure;

// --------------------------------------------------------------- the maps ----

DistributivityMaps distributivity_maps(const CldcStructure& X,
                                       std::optional<Mor> m_inv) {
  const auto prods = X.prods;
  const auto cops = X.cops;
  ldc::LdcStructure L = X.L;
  Obj top = X.top(), bot = X.bot();

  DistributivityMaps d;
  d.dL = memo_fam(Fam3([prods, cops](Obj a, Obj b, Obj c) {
    const Category& C = *prods.C;
    auto Pab = prods.at(a, b);
    auto Pac = prods.at(a, c);
    auto Cbc = cops.at(b, c);
    auto Pcod = prods.at(a, Cbc.apex);
    return cops.at(Pab.apex, Pac.apex)
        .copair(Pcod.pair(Pab.pi0, C.compose(Pab.pi1, Cbc.i0)),
                Pcod.pair(Pac.pi0, C.compose(Pac.pi1, Cbc.i1)));
  }));
  d.dR = memo_fam(Fam3([prods, cops](Obj a, Obj b, Obj c) {
    const Category& C = *prods.C;
    auto Pac = prods.at(a, c);
    auto Pbc = prods.at(b, c);
    auto Cab = cops.at(a, b);
    auto Pcod = prods.at(Cab.apex, c);
    return cops.at(Pac.apex, Pbc.apex)
        .copair(Pcod.pair(C.compose(Pac.pi0, Cab.i0), Pac.pi1),
                Pcod.pair(C.compose(Pbc.pi0, Cab.i1), Pbc.pi1));
  }));
  d.dL_flat = memo_fam(Fam3([prods, L](Obj a, Obj b, Obj c) {
    const Category& C = *prods.C;
    const auto& T = L.tensor;
    const auto& P = L.par;
    Obj bc = P.ten(b, c);
    Mor diag = prods.at(a, a).pair(C.identity(a), C.identity(a));
    return C.compose_all(
        {T.rten(diag, bc),                                // <1,1> x 1
         T.assoc_lr(a, a, bc),                            // assoc_x
         T.lten(a, L.deltaL(a, b, c)),                    // 1 x deltaL
         T.sym(a, P.ten(T.ten(a, b), c)),                 // sym_x
         L.deltaR(T.ten(a, b), c, a),                     // deltaR(AxB,C,A)
         P.lten(T.ten(a, b), T.sym(c, a))});              // 1 + sym_x
  }));
  if (m_inv) {
    Mor mi = *m_inv;  // top -> bot
    d.partialR = memo_fam(Fam3([prods, cops, mi, top, bot](Obj a, Obj b,
                                                           Obj c) {
      const Category& C = *prods.C;
      auto Pab = prods.at(a, b);
      auto Cbc = cops.at(b, c);
      // t_C; m_inv; b_A : C -> A
      Mor zca = C.compose_all({prods.bang(c), mi, cops.cobang(a)});
      Mor leg0 = cops.at(Pab.apex, c).copair(Pab.pi0, zca);    // -> A
      Mor leg1 = cops.at(Pab.apex, c)
                     .copair(C.compose(Pab.pi1, Cbc.i0), Cbc.i1);  // -> B+C
      (void)top;
      (void)bot;
      return prods.at(a, Cbc.apex).pair(leg0, leg1);
    }));
  }
  return d;
}

// ----------------------------------------------------------- classification ----

Classification classify(const CldcStructure& X) {
  const Category& C = *X.C;
  Obj top = X.top(), bot = X.bot();
  Classification r;

  r.posetal = true;
  r.trivial = true;
  for (Obj a : X.objs)
    for (Obj b : X.objs) {
      size_t n = C.hom(a, b).size();
      if (n != 1) r.trivial = false;
      if (n > 1) {
        r.posetal = false;
        if (r.posetal_witness.empty())
          r.posetal_witness = "|hom(" + C.obj_name(a) + "," + C.obj_name(b) +
                              ")| = " + std::to_string(n);
      }
    }

  DistributivityMaps maps = distributivity_maps(X);
  r.distributive = true;
  r.invertible_distributors = true;
  for (Obj a : X.objs)
    for (Obj b : X.objs)
      for (Obj c : X.objs) {
        if (!C.find_inverse(maps.dL(a, b, c)) ||
            !C.find_inverse(maps.dR(a, b, c)))
          r.distributive = false;
        if (!C.find_inverse(X.L.deltaL(a, b, c)) ||
            !C.find_inverse(X.L.deltaR(a, b, c)))
          r.invertible_distributors = false;
      }

  r.strict_initial = true;
  r.costrict_terminal = true;
  for (Obj a : X.objs) {
    for (Mor f : C.hom(a, bot))
      if (!C.find_inverse(f)) r.strict_initial = false;
    for (Mor f : C.hom(top, a))
      if (!C.find_inverse(f)) r.costrict_terminal = false;
  }

  Mor m = X.cops.cobang(top);
  std::optional<Mor> m_inv = C.find_inverse(m);
  r.isomix = m_inv.has_value();

  ldc::MixData mix = X.mix ? *X.mix : ldc::mix_from_m(X.L, m);
  r.compact = r.isomix;
  r.semi_additive = r.isomix;
  if (m_inv) {
    for (Obj a : X.objs)
      for (Obj b : X.objs) {
        if (!C.find_inverse(mix.mix(a, b))) r.compact = false;
        // psi = <[1, 0_{B,A}], [0_{A,B}, 1]> : A+B -> A x B
        Mor zab = C.compose_all({X.prods.bang(a), *m_inv, X.cops.cobang(b)});
        Mor zba = C.compose_all({X.prods.bang(b), *m_inv, X.cops.cobang(a)});
        auto Cab = X.cops.at(a, b);
        Mor psi = X.prods.at(a, b).pair(Cab.copair(C.identity(a), zba),
                                        Cab.copair(zab, C.identity(b)));
        if (!C.find_inverse(psi)) {
          r.semi_additive = false;
          if (r.semiadd_witness.empty())
            r.semiadd_witness = "psi(" + C.obj_name(a) + "," + C.obj_name(b) +
                                ") not invertible";
        }
      }
  } else if (r.semiadd_witness.empty()) {
    r.semiadd_witness = "nullary mix map not invertible";
  }

  auto require_group = [](std::initializer_list<std::pair<const char*, bool>> g,
                          const char* name) {
    bool first = g.begin()->second;
    for (auto& [label, v] : g)
      if (v != first)
        throw HardFailure(std::string("classification group disagreement (") +
                          name + "): " + g.begin()->first + " = " +
                          (first ? "true" : "false") + " but " + label + " = " +
                          (v ? "true" : "false"));
  };
  require_group({{"posetal", r.posetal},
                 {"distributive", r.distributive},
                 {"strict_initial", r.strict_initial},
                 {"costrict_terminal", r.costrict_terminal}},
                "posetal");
  require_group({{"semi_additive", r.semi_additive},
                 {"invertible_distributors", r.invertible_distributors},
                 {"isomix", r.isomix},
                 {"compact", r.compact}},
                "semi-additive");
  return r;
}

// ----------------------------------------------------------- posetal suite ----

std::vector<LawReport> posetal_collapse_suite(const CldcStructure& X,
                                              const cldc::CldcOptions& opt) {
  (void)opt;
  const Category& C = *X.C;
  const auto& T = X.L.tensor;
  const auto& P = X.L.par;
  Obj top = X.top();
  Classification cls = classify(X);
  DistributivityMaps maps = distributivity_maps(X);
  LawChecker ck(C);

  // (a) right inverse of dL(A,top,top) for every A  <=>  posetal.
  bool all_have = true;
  Obj missing = top;
  for (Obj a : X.objs) {
    // Right inverse in diagrammatic order: dL followed by h is the identity
    // on the coproduct side (the composite the collapse proof consumes).
    Mor dl = maps.dL(a, top, top);
    bool found = false;
    for (Mor h : C.hom(C.cod(dl), C.dom(dl))) {
      if (C.compose(dl, h) == C.identity(C.dom(dl))) {
        found = true;
        break;
      }
    }
    if (!found) {
      all_have = false;
      missing = a;
      break;
    }
  }
  ck.check_that("posetal:dL_top_right_inverse_iff_posetal", {missing},
                all_have == cls.posetal,
                std::string("dL(A,top,top) right inverse for all A = ") +
                    (all_have ? "true" : "false"),
                std::string("posetal = ") + (cls.posetal ? "true" : "false"));

  // (b) the strict-initial lemma square, globally, implies dL_flat is a
  // componentwise right inverse of dL.
  bool lemma_global = true;
  for (Obj a : X.objs)
    for (Obj b : X.objs)
      for (Obj c : X.objs) {
        Mor lhs = C.compose_all(
            {T.lten(a, X.cops.at(b, c).i0),            // 1 x i0
             T.sym(a, P.ten(b, c)),                    // sym_x
             X.L.deltaR(b, c, a),                      // deltaR(B,C,A)
             P.lten(b, T.sym(c, a))});                 // 1 + sym_x
        Mor rhs = C.compose(X.prods.at(a, b).pi1,
                            X.cops.at(b, T.ten(a, c)).i0);
        if (!C.eq(lhs, rhs)) lemma_global = false;
      }
  if (!lemma_global) {
    ck.skip("posetal:strict_initial_lemma_implies_right_inverse",
            "lemma square does not hold globally; implication vacuous");
  } else {
    for (Obj a : X.objs)
      for (Obj b : X.objs)
        for (Obj c : X.objs) {
          Path lhs(C), rhs(C);
          lhs.step("dL_flat(A,B,C)", maps.dL_flat(a, b, c))
              .step("dL(A,B,C)", maps.dL(a, b, c));
          rhs.step("1", C.identity(T.ten(a, P.ten(b, c))));
          ck.check("posetal:strict_initial_lemma_implies_right_inverse",
                   {a, b, c}, lhs, rhs);
        }
  }

  // (c)(d)(e) group equivalences as explicit reports.
  ck.check_that("posetal:strict_initial_iff_posetal", {},
                cls.strict_initial == cls.posetal,
                std::string("strict initial = ") +
                    (cls.strict_initial ? "true" : "false"),
                std::string("posetal = ") + (cls.posetal ? "true" : "false"));
  ck.check_that("posetal:distributive_iff_posetal", {},
                cls.distributive == cls.posetal,
                std::string("distributive = ") +
                    (cls.distributive ? "true" : "false"),
                std::string("posetal = ") + (cls.posetal ? "true" : "false"));
  ck.check_that("posetal:costrict_terminal_iff_posetal", {},
                cls.costrict_terminal == cls.posetal,
                std::string("costrict terminal = ") +
                    (cls.costrict_terminal ? "true" : "false"),
                std::string("posetal = ") + (cls.posetal ? "true" : "false"));
  return ck.take();
}

// ------------------------------------------------------ semi-additive suite ----

std::vector<LawReport> semiadditive_collapse_suite(
    const CldcStructure& X, const cldc::CldcOptions& opt) {
  (void)opt;
  const Category& C = *X.C;
  const auto& T = X.L.tensor;
  const auto& P = X.L.par;
  Obj top = X.top();
  Classification cls = classify(X);
  Mor m = X.cops.cobang(top);
  std::optional<Mor> m_inv = C.find_inverse(m);
  ldc::MixData mix = X.mix ? *X.mix : ldc::mix_from_m(X.L, m);
  LawChecker ck(C);

  // (a) when m is invertible: partialR inverts deltaL, and mix^{-1} = psi.
  if (!m_inv) {
    for (const char* id :
         {"semiadd:partialR_presentations", "semiadd:deltaL_partialR",
          "semiadd:partialR_deltaL", "semiadd:mix_inverse_is_psi",
          "semiadd:psi_presentations"})
      ck.skip(id, "nullary mix map not invertible");
  } else {
    DistributivityMaps maps = distributivity_maps(X, m_inv);
    auto zero_mor = [&](Obj x, Obj y) {
      return C.compose_all({X.prods.bang(x), *m_inv, X.cops.cobang(y)});
    };
    for (Obj a : X.objs)
      for (Obj b : X.objs) {
        // psi: both presentations.
        auto Cab = X.cops.at(a, b);
        auto Pab = X.prods.at(a, b);
        Mor psi_pair = Pab.pair(Cab.copair(C.identity(a), zero_mor(b, a)),
                                Cab.copair(zero_mor(a, b), C.identity(b)));
        Mor psi_copair = Cab.copair(Pab.pair(C.identity(a), zero_mor(a, b)),
                                    Pab.pair(zero_mor(b, a), C.identity(b)));
        ck.check_eq("semiadd:psi_presentations", {a, b}, psi_pair,
                    "<[1, 0], [0, 1]>", psi_copair, "[<1, 0>, <0, 1>]");
        {
          Path lhs(C), rhs(C);
          lhs.step("mix(A,B)", mix.mix(a, b)).step("psi(A,B)", psi_pair);
          rhs.step("1", C.identity(Pab.apex));
          ck.check("semiadd:mix_inverse_is_psi", {a, b}, lhs, rhs);
          Path lhs2(C), rhs2(C);
          lhs2.step("psi(A,B)", psi_pair).step("mix(A,B)", mix.mix(a, b));
          rhs2.step("1", C.identity(Cab.apex));
          ck.check("semiadd:mix_inverse_is_psi", {a, b}, lhs2, rhs2);
        }
        for (Obj c : X.objs) {
          Mor pr = maps.partialR(a, b, c);
          // Second presentation: [1 x i0, <t;m^{-1};b, i1>].
          auto Cbc = X.cops.at(b, c);
          auto Pcod = X.prods.at(a, Cbc.apex);
          Mor one_times_i0 = Pcod.pair(X.prods.at(a, b).pi0,
                                       C.compose(X.prods.at(a, b).pi1, Cbc.i0));
          Mor other = X.cops.at(T.ten(a, b), c)
                          .copair(one_times_i0,
                                  Pcod.pair(zero_mor(c, a), Cbc.i1));
          ck.check_eq("semiadd:partialR_presentations", {a, b, c}, pr,
                      "<[pi0, t;m_inv;b], pi1 + 1>", other,
                      "[1 x i0, <t;m_inv;b, i1>]");
          Path lhs(C), rhs(C);
          lhs.step("deltaL(A,B,C)", X.L.deltaL(a, b, c))
              .step("partialR(A,B,C)", pr);
          rhs.step("1", C.identity(T.ten(a, P.ten(b, c))));
          ck.check("semiadd:deltaL_partialR", {a, b, c}, lhs, rhs);
          Path lhs2(C), rhs2(C);
          lhs2.step("partialR(A,B,C)", pr)
              .step("deltaL(A,B,C)", X.L.deltaL(a, b, c));
          rhs2.step("1", C.identity(P.ten(T.ten(a, b), c)));
          ck.check("semiadd:partialR_deltaL", {a, b, c}, lhs2, rhs2);
        }
      }
  }

  // (b) invertible distributors force t_bot invertible.
  if (!cls.invertible_distributors) {
    ck.skip("semiadd:botinv_forces_terminal", "distributors not invertible");
  } else {
    bool t_bot_iso = C.find_inverse(X.prods.bang(X.bot())).has_value();
    ck.check_that("semiadd:botinv_forces_terminal", {X.bot()}, t_bot_iso,
                  "t_bot invertible", "required when distributors invert");
  }

  // (c) orthogonality: posetal and semi-additive together force triviality.
  if (!(cls.posetal && cls.semi_additive)) {
    ck.skip("semiadd:orthogonality_trivial",
            "instance is not both posetal and semi-additive");
  } else {
    for (Obj a : X.objs) {
      bool zero = C.find_inverse(X.prods.bang(a)).has_value() &&
                  C.find_inverse(X.cops.cobang(a)).has_value();
      ck.check_that("semiadd:orthogonality_trivial", {a}, zero,
                    "object is a zero object", "forced by orthogonality");
    }
  }
  return ck.take();
}

// ----------------------------------------------------- semi-additive functor ----

std::vector<LawReport> check_semiadditive_functor(
    const ldc::FrobeniusFunctorData& D, const limits::ZeroStructure& z_source,
    const limits::ZeroStructure& z_target, const std::vector<Obj>& objs) {
  const Category& Y = D.target.cat();
  LawChecker ck(Y);

  for (Obj a : objs)
    for (Obj b : objs) {
      Obj fa = D.F.obj(a), fb = D.F.obj(b);
      Mor psi_src = z_source.psi(a, b);
      Mor psi_tgt = z_target.psi(fa, fb);
      {
        Path lhs(Y), rhs(Y);
        lhs.step("n_plus(A,B)", D.n_par(a, b))
            .step("psi(FA,FB)", psi_tgt)
            .step("m_times(A,B)", D.m_ten(a, b));
        rhs.step("F(psi(A,B))", D.F.mor(psi_src));
        ck.check("cc:semi-add_functor.1", {a, b}, lhs, rhs);
      }
      {
        auto psi_src_inv = D.source.cat().find_inverse(psi_src);
        auto psi_tgt_inv = Y.find_inverse(psi_tgt);
        if (!psi_src_inv || !psi_tgt_inv) {
          ck.skip("cc:semi-add_functor.2", "psi not invertible");
        } else {
          Path lhs(Y), rhs(Y);
          lhs.step("m_times(A,B)", D.m_ten(a, b))
              .step("F(psi_inv(A,B))", D.F.mor(*psi_src_inv))
              .step("n_plus(A,B)", D.n_par(a, b));
          rhs.step("psi_inv(FA,FB)", *psi_tgt_inv);
          ck.check("cc:semi-add_functor.2", {a, b}, lhs, rhs);
        }
      }
    }

  std::vector<LawReport> mine = ck.take();
  std::vector<LawReport> frob = ldc::check_frobenius_linear(D, objs);

  // Agreement between the two notions on the same data: monoidality plus the
  // psi squares hold iff monoidality plus the Frobenius distributor squares
  // hold.
  bool mono_ok = true, frob_squares_ok = true;
  for (const auto& r : frob) {
    bool is_square = r.law_id.rfind("cc:Frobenius_linear_functor", 0) == 0;
    if (r.status == Status::Fail) {
      if (is_square)
        frob_squares_ok = false;
      else
        mono_ok = false;
    }
  }
  bool psi_ok = all_pass(mine);
  LawChecker ck2(Y);
  ck2.check_that("semiadd:frobenius_equivalence", {},
                 (mono_ok && psi_ok) == (mono_ok && frob_squares_ok),
                 std::string("semi-additive functor laws = ") +
                     ((mono_ok && psi_ok) ? "pass" : "fail"),
                 std::string("Frobenius laws = ") +
                     ((mono_ok && frob_squares_ok) ? "pass" : "fail"));
  append_reports(mine, frob);
  append_reports(mine, ck2.take());
  return mine;
}

}  // namespace ldcw::collapse
