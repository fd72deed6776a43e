#include "ldcw/ldc.hpp"

#include <algorithm>

namespace ldcw::ldc {

namespace {

// Prefix every law id in `reports` (used to distinguish the tensor and par
// monoidal suites inside an LDC report).
std::vector<LawReport> prefixed(std::vector<LawReport> reports,
                                const std::string& prefix) {
  for (auto& r : reports) r.law_id = prefix + r.law_id;
  return reports;
}

}  // namespace

// --------------------------------------------------------------- builders ----

LdcStructure degenerate_ldc(const MonoidalStructure& M) {
  LdcStructure L;
  L.tensor = M;
  L.par = M;
  L.deltaL = memo_fam(Fam3([M](Obj a, Obj b, Obj c) { return M.assoc_rl(a, b, c); }));
  L.deltaR = memo_fam(Fam3([M](Obj a, Obj b, Obj c) { return M.assoc_lr(a, b, c); }));
  L.deltaL_inv = L.deltaR;
  L.deltaR_inv = L.deltaL;
  return L;
}

LdcStructure shifted_tensor_ldc(const MonoidalStructure& M,
                                const monoidal::TensorInverseWitness& w) {
  LdcStructure L;
  L.tensor = M;
  L.par = monoidal::shifted_par_structure(M, w);
  Obj k = w.botinv;
  // A par B = A x (k x B); both distributors are pure associator composites.
  L.deltaL = memo_fam(Fam3([M, k](Obj a, Obj b, Obj c) {
    return M.assoc_rl(a, b, M.ten(k, c));
  }));
  L.deltaL_inv = memo_fam(Fam3([M, k](Obj a, Obj b, Obj c) {
    return M.assoc_lr(a, b, M.ten(k, c));
  }));
  L.deltaR = memo_fam(Fam3([M, k](Obj a, Obj b, Obj c) {
    return M.C->compose(M.assoc_lr(a, M.ten(k, b), c),
                        M.lten(a, M.assoc_lr(k, b, c)));
  }));
  L.deltaR_inv = memo_fam(Fam3([M, k](Obj a, Obj b, Obj c) {
    return M.C->compose(M.lten(a, M.assoc_rl(k, b, c)),
                        M.assoc_rl(a, M.ten(k, b), c));
  }));
  return L;
}

monoidal::TensorInverseWitness tensor_inverse_from_invertible(
    const LdcStructure& L, std::vector<LawReport>* reports) {
  if (!L.invertible_distributors())
    throw HardFailure("tensor_inverse_from_invertible: distributors lack inverses");
  const Category& C = L.cat();
  const auto& T = L.tensor;
  const auto& P = L.par;
  Obj one = T.unit, bot = P.unit;

  monoidal::TensorInverseWitness w;
  w.bot = bot;
  w.botinv = P.ten(one, one);
  // sR : (1 par 1) x bot -> 1, via deltaR and unitors.
  w.sR = C.compose_all({L.deltaR(one, one, bot),
                        P.lten(one, T.unitL_out(bot)), P.unitR_out(one)});
  w.sR_inv = C.compose_all({P.unitR_in(one), P.lten(one, T.unitL_in(bot)),
                            L.deltaR_inv(one, one, bot)});
  // sL : bot x (1 par 1) -> 1, via deltaL and unitors.
  w.sL = C.compose_all({L.deltaL(bot, one, one),
                        P.rten(T.unitR_out(bot), one), P.unitL_out(one)});
  w.sL_inv = C.compose_all({P.unitL_in(one), P.rten(T.unitR_in(bot), one),
                            L.deltaL_inv(bot, one, one)});

  auto certify = monoidal::check_tensor_inverse(T, w);
  if (reports) append_reports(*reports, certify);
  if (!all_pass(certify)) {
    const LawReport* f = first_failure(certify);
    throw HardFailure("tensor_inverse_from_invertible: certification failed at " +
                      (f ? f->law_id : std::string("?")));
  }
  return w;
}

// ------------------------------------------------------------------- laws ----

std::vector<LawReport> check_ldc_laws(const LdcStructure& L,
                                      const std::vector<Obj>& objs,
                                      const CheckOptions& opt) {
  const Category& C = L.cat();
  const auto& T = L.tensor;
  const auto& P = L.par;
  Obj one = T.unit, bot = P.unit;
  LawChecker ck(C);

  for (Obj a : objs) {
    for (Obj b : objs) {
      Obj id_a = a, id_b = b;  // readability only
      {
        Path lhs(C), rhs(C);
        lhs.step("uL_ten(A par B)", T.unitL_in(P.ten(a, b)))
            .step("deltaL(1,A,B)", L.deltaL(one, a, b));
        rhs.step("uL_ten(A) par 1_B", P.ten_mor(T.unitL_in(a), C.identity(id_b)));
        ck.check("cc:unit_lineardist.1", {a, b}, lhs, rhs);
      }
      {
        Path lhs(C), rhs(C);
        lhs.step("uR_ten(A par B)", T.unitR_in(P.ten(a, b)))
            .step("deltaR(A,B,1)", L.deltaR(a, b, one));
        rhs.step("1_A par uR_ten(B)", P.ten_mor(C.identity(id_a), T.unitR_in(b)));
        ck.check("cc:unit_lineardist.2", {a, b}, lhs, rhs);
      }
      {
        Path lhs(C), rhs(C);
        lhs.step("deltaL(A,B,bot)", L.deltaL(a, b, bot))
            .step("uR_par(A ten B)", P.unitR_out(T.ten(a, b)));
        rhs.step("1_A ten uR_par(B)", T.ten_mor(C.identity(id_a), P.unitR_out(b)));
        ck.check("cc:unit_lineardist.3", {a, b}, lhs, rhs);
      }
      {
        Path lhs(C), rhs(C);
        lhs.step("deltaR(bot,A,B)", L.deltaR(bot, a, b))
            .step("uL_par(A ten B)", P.unitL_out(T.ten(a, b)));
        rhs.step("uL_par(A) ten 1_B", T.ten_mor(P.unitL_out(a), C.identity(id_b)));
        ck.check("cc:unit_lineardist.4", {a, b}, lhs, rhs);
      }
    }
  }

  std::vector<Obj> quad = strided_sample(objs, opt.bounds.quad_objects);
  if (quad.size() < objs.size()) {
    std::string note = "objects sampled " + std::to_string(quad.size()) + "/" +
                       std::to_string(objs.size());
    for (const char* id :
         {"cc:assoc_lineardist.1", "cc:assoc_lineardist.2",
          "cc:assoc_lineardist.3", "cc:assoc_lineardist.4",
          "cc:leftright_lineardist.1", "cc:leftright_lineardist.2"})
      ck.note(id, note);
  }

  for (Obj a : quad)
    for (Obj b : quad)
      for (Obj c : quad)
        for (Obj d : quad) {
          {  // deltaL vs tensor associator
            Path lhs(C), rhs(C);
            lhs.step("deltaL(A ten B,C,D)", L.deltaL(T.ten(a, b), c, d))
                .step("assoc_ten(A,B,C) par 1_D",
                      P.rten(T.assoc_lr(a, b, c), d));
            rhs.step("assoc_ten(A,B,C par D)", T.assoc_lr(a, b, P.ten(c, d)))
                .step("1_A ten deltaL(B,C,D)", T.lten(a, L.deltaL(b, c, d)))
                .step("deltaL(A,B ten C,D)", L.deltaL(a, T.ten(b, c), d));
            ck.check("cc:assoc_lineardist.1", {a, b, c, d}, lhs, rhs);
          }
          {  // deltaR vs par associator
            Path lhs(C), rhs(C);
            lhs.step("assoc_par(A,B,C) ten 1_D", T.rten(P.assoc_rl(a, b, c), d))
                .step("deltaR(A par B,C,D)", L.deltaR(P.ten(a, b), c, d));
            rhs.step("deltaR(A,B par C,D)", L.deltaR(a, P.ten(b, c), d))
                .step("1_A par deltaR(B,C,D)", P.lten(a, L.deltaR(b, c, d)))
                .step("assoc_par(A,B,C ten D)", P.assoc_rl(a, b, T.ten(c, d)));
            ck.check("cc:assoc_lineardist.2", {a, b, c, d}, lhs, rhs);
          }
          {  // deltaR vs tensor associator
            Path lhs(C), rhs(C);
            lhs.step("assoc_ten(A par B,C,D)", T.assoc_lr(P.ten(a, b), c, d))
                .step("deltaR(A,B,C ten D)", L.deltaR(a, b, T.ten(c, d)));
            rhs.step("deltaR(A,B,C) ten 1_D", T.rten(L.deltaR(a, b, c), d))
                .step("deltaR(A,B ten C,D)", L.deltaR(a, T.ten(b, c), d))
                .step("1_A par assoc_ten(B,C,D)", P.lten(a, T.assoc_lr(b, c, d)));
            ck.check("cc:assoc_lineardist.3", {a, b, c, d}, lhs, rhs);
          }
          {  // deltaL vs par associator
            Path lhs(C), rhs(C);
            lhs.step("deltaL(A,B,C par D)", L.deltaL(a, b, P.ten(c, d)))
                .step("assoc_par(A ten B,C,D)", P.assoc_rl(T.ten(a, b), c, d));
            rhs.step("1_A ten assoc_par(B,C,D)", T.lten(a, P.assoc_rl(b, c, d)))
                .step("deltaL(A,B par C,D)", L.deltaL(a, P.ten(b, c), d))
                .step("deltaL(A,B,C) par 1_D", P.rten(L.deltaL(a, b, c), d));
            ck.check("cc:assoc_lineardist.4", {a, b, c, d}, lhs, rhs);
          }
          {  // the two distributors against each other, par side
            Path lhs(C), rhs(C);
            lhs.step("deltaL(A par B,C,D)", L.deltaL(P.ten(a, b), c, d))
                .step("deltaR(A,B,C) par 1_D", P.rten(L.deltaR(a, b, c), d));
            rhs.step("deltaR(A,B,C par D)", L.deltaR(a, b, P.ten(c, d)))
                .step("1_A par deltaL(B,C,D)", P.lten(a, L.deltaL(b, c, d)))
                .step("assoc_par(A,B ten C,D)", P.assoc_rl(a, T.ten(b, c), d));
            ck.check("cc:leftright_lineardist.1", {a, b, c, d}, lhs, rhs);
          }
          {  // the two distributors against each other, tensor side
            Path lhs(C), rhs(C);
            lhs.step("deltaL(A,B,C) ten 1_D", T.rten(L.deltaL(a, b, c), d))
                .step("deltaR(A ten B,C,D)", L.deltaR(T.ten(a, b), c, d));
            rhs.step("assoc_ten(A,B par C,D)", T.assoc_lr(a, P.ten(b, c), d))
                .step("1_A ten deltaR(B,C,D)", T.lten(a, L.deltaR(b, c, d)))
                .step("deltaL(A,B,C ten D)", L.deltaL(a, b, T.ten(c, d)));
            ck.check("cc:leftright_lineardist.2", {a, b, c, d}, lhs, rhs);
          }
        }
  return ck.take();
}

std::vector<LawReport> check_delta_natural(const LdcStructure& L,
                                           const std::vector<Obj>& objs,
                                           const CheckOptions& opt) {
  const Category& C = L.cat();
  const auto& T = L.tensor;
  const auto& P = L.par;
  LawChecker ck(C);

  std::vector<Obj> sample = strided_sample(objs, opt.nat_objects);
  if (sample.size() < objs.size()) {
    std::string note = "objects sampled " + std::to_string(sample.size()) +
                       "/" + std::to_string(objs.size());
    ck.note("ldc:deltaL_natural", note);
    ck.note("ldc:deltaR_natural", note);
  }
  std::vector<Mor> mors = fincat::morphisms_between(C, sample);

  for (Mor f : mors) {
    Obj x = C.dom(f), y = C.cod(f);
    for (Obj b : sample)
      for (Obj c : sample) {
        {  // deltaL, slot A
          Path lhs(C), rhs(C);
          lhs.step("f ten 1_(B par C)", T.rten(f, P.ten(b, c)))
              .step("deltaL(A',B,C)", L.deltaL(y, b, c));
          rhs.step("deltaL(A,B,C)", L.deltaL(x, b, c))
              .step("(f ten 1_B) par 1_C", P.rten(T.rten(f, b), c));
          ck.check("ldc:deltaL_natural", {x, y, b, c}, lhs, rhs);
        }
        {  // deltaL, slot B
          Path lhs(C), rhs(C);
          lhs.step("1_A ten (f par 1_C)", T.lten(b, P.rten(f, c)))
              .step("deltaL(A,B',C)", L.deltaL(b, y, c));
          rhs.step("deltaL(A,B,C)", L.deltaL(b, x, c))
              .step("(1_A ten f) par 1_C", P.rten(T.lten(b, f), c));
          ck.check("ldc:deltaL_natural", {b, x, y, c}, lhs, rhs);
        }
        {  // deltaL, slot C
          Path lhs(C), rhs(C);
          lhs.step("1_A ten (1_B par f)", T.lten(b, P.lten(c, f)))
              .step("deltaL(A,B,C')", L.deltaL(b, c, y));
          rhs.step("deltaL(A,B,C)", L.deltaL(b, c, x))
              .step("1_(A ten B) par f", P.lten(T.ten(b, c), f));
          ck.check("ldc:deltaL_natural", {b, c, x, y}, lhs, rhs);
        }
        {  // deltaR, slot A
          Path lhs(C), rhs(C);
          lhs.step("(f par 1_B) ten 1_C", T.rten(P.rten(f, b), c))
              .step("deltaR(A',B,C)", L.deltaR(y, b, c));
          rhs.step("deltaR(A,B,C)", L.deltaR(x, b, c))
              .step("f par 1_(B ten C)", P.rten(f, T.ten(b, c)));
          ck.check("ldc:deltaR_natural", {x, y, b, c}, lhs, rhs);
        }
        {  // deltaR, slot B
          Path lhs(C), rhs(C);
          lhs.step("(1_A par f) ten 1_C", T.rten(P.lten(b, f), c))
              .step("deltaR(A,B',C)", L.deltaR(b, y, c));
          rhs.step("deltaR(A,B,C)", L.deltaR(b, x, c))
              .step("1_A par (f ten 1_C)", P.lten(b, T.rten(f, c)));
          ck.check("ldc:deltaR_natural", {b, x, y, c}, lhs, rhs);
        }
        {  // deltaR, slot C
          Path lhs(C), rhs(C);
          lhs.step("1_(A par B) ten f", T.lten(P.ten(b, c), f))
              .step("deltaR(A,B,C')", L.deltaR(b, c, y));
          rhs.step("deltaR(A,B,C)", L.deltaR(b, c, x))
              .step("1_A par (1_B ten f)", P.lten(b, T.lten(c, f)));
          ck.check("ldc:deltaR_natural", {b, c, x, y}, lhs, rhs);
        }
      }
  }
  return ck.take();
}

std::vector<LawReport> check_sldc_symmetry(const LdcStructure& L,
                                           const std::vector<Obj>& objs) {
  const Category& C = L.cat();
  const auto& T = L.tensor;
  const auto& P = L.par;
  LawChecker ck(C);
  if (!L.symmetric()) {
    ck.skip("cc:lin_dist_braiding", "structure is not symmetric");
    return ck.take();
  }
  for (Obj a : objs)
    for (Obj b : objs)
      for (Obj c : objs) {
        Path lhs(C), rhs(C);
        lhs.step("deltaR(A,B,C)", L.deltaR(a, b, c));
        rhs.step("sym_ten(A par B,C)", T.sym(P.ten(a, b), c))
            .step("1_C ten sym_par(A,B)", T.lten(c, P.sym(a, b)))
            .step("deltaL(C,B,A)", L.deltaL(c, b, a))
            .step("sym_ten(C,B) par 1_A", P.rten(T.sym(c, b), a))
            .step("sym_par(B ten C,A)", P.sym(T.ten(b, c), a));
        ck.check("cc:lin_dist_braiding", {a, b, c}, lhs, rhs);
      }
  return ck.take();
}

std::vector<LawReport> sldc_suite(const LdcStructure& L,
                                  const std::vector<Obj>& objs,
                                  const CheckOptions& opt) {
  std::vector<LawReport> out;
  append_reports(out, prefixed(monoidal::check_monoidal_laws(L.tensor, objs, opt),
                               "tensor:"));
  append_reports(out,
                 prefixed(monoidal::check_monoidal_laws(L.par, objs, opt), "par:"));
  append_reports(out, check_ldc_laws(L, objs, opt));
  append_reports(out, check_delta_natural(L, objs, opt));
  append_reports(out, check_sldc_symmetry(L, objs));
  return out;
}

// -------------------------------------------------------------------- mix ----

std::string mix_class_name(MixClass c) {
  switch (c) {
    case MixClass::NonMix: return "non-mix";
    case MixClass::Mix: return "mix";
    case MixClass::Isomix: return "isomix";
    case MixClass::Compact: return "compact";
  }
  return "?";
}

namespace {

Mor mix_top_route(const LdcStructure& L, Mor m, Obj a, Obj b) {
  const Category& C = L.cat();
  const auto& T = L.tensor;
  const auto& P = L.par;
  return C.compose_all({T.lten(a, P.unitL_in(b)),
                        T.lten(a, P.rten(m, b)),
                        L.deltaL(a, T.unit, b),
                        P.rten(T.unitR_out(a), b)});
}

Mor mix_bottom_route(const LdcStructure& L, Mor m, Obj a, Obj b) {
  const Category& C = L.cat();
  const auto& T = L.tensor;
  const auto& P = L.par;
  return C.compose_all({T.rten(P.unitR_in(a), b),
                        T.rten(P.lten(a, m), b),
                        L.deltaR(a, T.unit, b),
                        P.lten(a, T.unitL_out(b))});
}

}  // namespace

MixData mix_from_m(const LdcStructure& L, Mor m) {
  MixData d;
  d.m = m;
  LdcStructure copy = L;  // captured by value in the family closure
  d.mix = memo_fam(Fam2(
      [copy, m](Obj a, Obj b) { return mix_top_route(copy, m, a, b); }));
  return d;
}

MixAnalysis mix_analysis(const LdcStructure& L, const std::vector<Obj>& objs,
                         const CheckOptions& opt) {
  const Category& C = L.cat();
  const auto& T = L.tensor;
  const auto& P = L.par;
  Obj one = T.unit, bot = P.unit;
  MixAnalysis out;
  LawChecker ck(C);

  auto square_at = [&](Mor m, Obj a, Obj b) {
    return mix_top_route(L, m, a, b) == mix_bottom_route(L, m, a, b);
  };
  auto square_everywhere = [&](Mor m) {
    for (Obj a : objs)
      for (Obj b : objs)
        if (!square_at(m, a, b)) return false;
    return true;
  };

  std::vector<Mor> candidates = C.hom(bot, one);
  std::vector<Mor> good;
  for (Mor m : candidates) {
    // Shortcut: instantiating the square at one unit pair suffices; the full
    // sweep must agree, otherwise the library is inconsistent.
    bool shortcut = square_at(m, bot, bot);
    bool full = square_everywhere(m);
    if (shortcut != full)
      throw HardFailure(
          "mix_analysis: unit-pair shortcut disagrees with the full mix "
          "square for candidate " + C.mor_name(m));
    if (full) good.push_back(m);
  }
  ck.check_that("ldc:mix_search", {}, true,
                std::to_string(candidates.size()) + " candidate(s) in hom(bot,1)",
                std::to_string(good.size()) + " satisfy the mix square");
  if (good.empty()) {
    ck.note("ldc:mix_search",
            candidates.empty() ? "hom(bot,1) is empty"
                               : "no candidate satisfies the mix square");
    out.cls = MixClass::NonMix;
    out.reports = ck.take();
    return out;
  }
  if (good.size() > 1)
    ck.note("ldc:mix_search", "multiple mix maps; first in canonical order kept");

  MixData data = mix_from_m(L, good.front());
  Mor m = data.m;

  for (Obj a : objs)
    for (Obj b : objs) {
      Path lhs(C), rhs(C);
      lhs.step("1_A ten uL_par_inv(B)", T.lten(a, P.unitL_in(b)))
          .step("1_A ten (m par 1_B)", T.lten(a, P.rten(m, b)))
          .step("deltaL(A,1,B)", L.deltaL(a, one, b))
          .step("uR_ten_inv(A) par 1_B", P.rten(T.unitR_out(a), b));
      rhs.step("uR_par_inv(A) ten 1_B", T.rten(P.unitR_in(a), b))
          .step("(1_A par m) ten 1_B", T.rten(P.lten(a, m), b))
          .step("deltaR(A,1,B)", L.deltaR(a, one, b))
          .step("1_A par uL_ten_inv(B)", P.lten(a, T.unitL_out(b)));
      ck.check("cc:mix_LDC", {a, b}, lhs, rhs);
    }

  // The four mix/associator squares.
  std::vector<Obj> tri = strided_sample(objs, opt.bounds.quad_objects);
  if (tri.size() < objs.size()) {
    std::string note = "objects sampled " + std::to_string(tri.size()) + "/" +
                       std::to_string(objs.size());
    for (const char* id :
         {"cc:mix_maps_associators.1", "cc:mix_maps_associators.2",
          "cc:mix_maps_associators.3", "cc:mix_maps_associators.4"})
      ck.note(id, note);
  }
  for (Obj a : tri)
    for (Obj b : tri)
      for (Obj c : tri) {
        {
          Path lhs(C), rhs(C);
          lhs.step("1_A ten mix(B,C)", T.lten(a, data.mix(b, c)))
              .step("deltaL(A,B,C)", L.deltaL(a, b, c));
          rhs.step("assoc_ten_inv(A,B,C)", T.assoc_rl(a, b, c))
              .step("mix(A ten B,C)", data.mix(T.ten(a, b), c));
          ck.check("cc:mix_maps_associators.1", {a, b, c}, lhs, rhs);
        }
        {
          Path lhs(C), rhs(C);
          lhs.step("deltaL(A,B,C)", L.deltaL(a, b, c))
              .step("mix(A,B) par 1_C", P.rten(data.mix(a, b), c));
          rhs.step("mix(A,B par C)", data.mix(a, P.ten(b, c)))
              .step("assoc_par(A,B,C)", P.assoc_rl(a, b, c));
          ck.check("cc:mix_maps_associators.2", {a, b, c}, lhs, rhs);
        }
        {
          Path lhs(C), rhs(C);
          lhs.step("mix(A,B) ten 1_C", T.rten(data.mix(a, b), c))
              .step("deltaR(A,B,C)", L.deltaR(a, b, c));
          rhs.step("assoc_ten(A,B,C)", T.assoc_lr(a, b, c))
              .step("mix(A,B ten C)", data.mix(a, T.ten(b, c)));
          ck.check("cc:mix_maps_associators.3", {a, b, c}, lhs, rhs);
        }
        {
          Path lhs(C), rhs(C);
          lhs.step("deltaR(A,B,C)", L.deltaR(a, b, c))
              .step("1_A par mix(B,C)", P.lten(a, data.mix(b, c)));
          rhs.step("mix(A par B,C)", data.mix(P.ten(a, b), c))
              .step("assoc_par_inv(A,B,C)", P.assoc_lr(a, b, c));
          ck.check("cc:mix_maps_associators.4", {a, b, c}, lhs, rhs);
        }
      }

  // Naturality of mix.
  std::vector<Obj> sample = strided_sample(objs, opt.nat_objects);
  std::vector<Mor> mors = fincat::morphisms_between(C, sample);
  for (Mor f : mors)
    for (Mor g : mors) {
      Obj a = C.dom(f), a2 = C.cod(f), b = C.dom(g), b2 = C.cod(g);
      Path lhs(C), rhs(C);
      lhs.step("f ten g", T.ten_mor(f, g)).step("mix(A',B')", data.mix(a2, b2));
      rhs.step("mix(A,B)", data.mix(a, b)).step("f par g", P.ten_mor(f, g));
      ck.check("ldc:mix_natural", {a, a2, b, b2}, lhs, rhs);
    }

  // Classification.
  out.cls = MixClass::Mix;
  if (C.find_inverse(m)) {
    out.cls = MixClass::Isomix;
    bool compact = true;
    for (Obj a : objs)
      for (Obj b : objs)
        if (!C.find_inverse(data.mix(a, b))) compact = false;
    if (compact) out.cls = MixClass::Compact;
  }
  out.data = std::move(data);
  out.reports = ck.take();
  return out;
}

// --------------------------------------------------------- complementation ----

std::vector<LawReport> check_complementation_pair(
    const LdcStructure& L, const ComplementationPair& pair) {
  const Category& C = L.cat();
  const auto& T = L.tensor;
  const auto& P = L.par;
  Obj a = pair.A, ac = pair.Ac;
  LawChecker ck(C);

  bool types_ok = C.dom(pair.gamma) == T.ten(a, ac) &&
                  C.cod(pair.gamma) == P.unit &&
                  C.dom(pair.tau) == T.unit && C.cod(pair.tau) == P.ten(ac, a);
  ck.check_that("complement:types", {a, ac}, types_ok,
                "gamma : A ten Ac -> bot", "tau : 1 -> Ac par A");
  if (!types_ok) return ck.take();

  {
    Path lhs(C), rhs(C);
    lhs.step("uR_ten(A)", T.unitR_in(a))
        .step("1_A ten tau", T.lten(a, pair.tau))
        .step("deltaL(A,Ac,A)", L.deltaL(a, ac, a))
        .step("gamma par 1_A", P.rten(pair.gamma, a))
        .step("uL_par(A)", P.unitL_out(a));
    rhs.step("1_A", C.identity(a));
    ck.check("cc:complement_LDC.1", {a, ac}, lhs, rhs);
  }
  {
    Path lhs(C), rhs(C);
    lhs.step("uL_ten(Ac)", T.unitL_in(ac))
        .step("tau ten 1_Ac", T.rten(pair.tau, ac))
        .step("deltaR(Ac,A,Ac)", L.deltaR(ac, a, ac))
        .step("1_Ac par gamma", P.lten(ac, pair.gamma))
        .step("uR_par(Ac)", P.unitR_out(ac));
    rhs.step("1_Ac", C.identity(ac));
    ck.check("cc:complement_LDC.2", {a, ac}, lhs, rhs);
  }
  return ck.take();
}

ComplementationPair units_pair(const LdcStructure& L) {
  ComplementationPair p;
  p.A = L.par.unit;
  p.Ac = L.tensor.unit;
  p.gamma = L.tensor.unitR_out(L.par.unit);  // bot ten 1 -> bot
  p.tau = L.par.unitR_in(L.tensor.unit);     // 1 -> 1 par bot
  return p;
}

std::vector<LawReport> complement_adjunction(const LdcStructure& L,
                                             const ComplementationPair& pair,
                                             Obj B, Obj C_) {
  const Category& C = L.cat();
  const auto& T = L.tensor;
  const auto& P = L.par;
  Obj a = pair.A, ac = pair.Ac;
  LawChecker ck(C);

  auto forward = [&](Mor f) {  // f : A ten B -> C
    return C.compose_all({T.unitL_in(B), T.rten(pair.tau, B),
                          L.deltaR(ac, a, B), P.lten(ac, f)});
  };
  auto backward = [&](Mor g) {  // g : B -> Ac par C
    return C.compose_all({T.lten(a, g), L.deltaL(a, ac, C_),
                          P.rten(pair.gamma, C_), P.unitL_out(C_)});
  };

  std::vector<Mor> homs_ten = C.hom(T.ten(a, B), C_);
  std::vector<Mor> homs_par = C.hom(B, P.ten(ac, C_));
  for (Mor f : homs_ten)
    ck.check_eq("ldc:adjunction_retract", {a, ac, B, C_}, backward(forward(f)),
                "backward(forward(f))", f, "f");
  for (Mor g : homs_par)
    ck.check_eq("ldc:adjunction_section", {a, ac, B, C_}, forward(backward(g)),
                "forward(backward(g))", g, "g");
  ck.check_that("ldc:adjunction_bijection", {a, ac, B, C_},
                homs_ten.size() == homs_par.size(),
                "|hom(A ten B, C)| = " + std::to_string(homs_ten.size()),
                "|hom(B, Ac par C)| = " + std::to_string(homs_par.size()));
  return ck.take();
}

NegationAssignment find_negation(const LdcStructure& L,
                                 const std::vector<Obj>& objs) {
  const Category& C = L.cat();
  const auto& T = L.tensor;
  const auto& P = L.par;
  NegationAssignment out;
  if (!L.symmetric()) {
    out.failure = "(structure is not symmetric)";
    return out;
  }
  for (Obj a : objs) {
    bool found = false;
    for (Obj ac : objs) {
      for (Mor gammaR : C.hom(T.ten(a, ac), P.unit)) {
        for (Mor tauR : C.hom(T.unit, P.ten(a, ac))) {
          Mor gammaL = C.compose(T.sym(ac, a), gammaR);  // Ac ten A -> bot
          Mor tauL = C.compose(tauR, P.sym(a, ac));      // 1 -> Ac par A
          ComplementationPair p1{a, ac, gammaR, tauL};
          ComplementationPair p2{ac, a, gammaL, tauR};
          if (all_pass(check_complementation_pair(L, p1)) &&
              all_pass(check_complementation_pair(L, p2))) {
            out.per_object.emplace_back(a, p1);
            found = true;
          }
          if (found) break;
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) {
      out.failure = C.obj_name(a);
      return out;
    }
  }
  return out;
}

// ------------------------------------------------------- Frobenius functors ----

std::vector<LawReport> check_frobenius_linear(const FrobeniusFunctorData& D,
                                              const std::vector<Obj>& objs) {
  const auto& S = D.source;
  const auto& G = D.target;
  const Category& CS = S.cat();
  const Category& CT = G.cat();
  const auto& ST = S.tensor;
  const auto& SP = S.par;
  const auto& TT = G.tensor;
  const auto& TP = G.par;
  auto F = [&](Obj a) { return D.F.obj(a); };
  auto Fm = [&](Mor f) { return D.F.mor(f); };
  LawChecker ck(CT);

  for (Obj a : objs) {
    {  // lax unit coherences
      Path lhs(CT), rhs(CT);
      lhs.step("uR_ten(FA)", TT.unitR_in(F(a)))
          .step("1_FA ten m_unit", TT.lten(F(a), D.m_unit))
          .step("m_ten(A,1)", D.m_ten(a, ST.unit));
      rhs.step("F(uR_ten(A))", Fm(ST.unitR_in(a)));
      ck.check("frobenius:lax_unitR", {a}, lhs, rhs);
    }
    {
      Path lhs(CT), rhs(CT);
      lhs.step("uL_ten(FA)", TT.unitL_in(F(a)))
          .step("m_unit ten 1_FA", TT.rten(D.m_unit, F(a)))
          .step("m_ten(1,A)", D.m_ten(ST.unit, a));
      rhs.step("F(uL_ten(A))", Fm(ST.unitL_in(a)));
      ck.check("frobenius:lax_unitL", {a}, lhs, rhs);
    }
    {  // colax unit coherences
      Path lhs(CT), rhs(CT);
      lhs.step("n_par(A,bot)", D.n_par(a, SP.unit))
          .step("1_FA par n_bot", TP.lten(F(a), D.n_bot))
          .step("uR_par(FA)", TP.unitR_out(F(a)));
      rhs.step("F(uR_par(A))", Fm(SP.unitR_out(a)));
      ck.check("frobenius:colax_unitR", {a}, lhs, rhs);
    }
    {
      Path lhs(CT), rhs(CT);
      lhs.step("n_par(bot,A)", D.n_par(SP.unit, a))
          .step("n_bot par 1_FA", TP.rten(D.n_bot, F(a)))
          .step("uL_par(FA)", TP.unitL_out(F(a)));
      rhs.step("F(uL_par(A))", Fm(SP.unitL_out(a)));
      ck.check("frobenius:colax_unitL", {a}, lhs, rhs);
    }
  }

  for (Obj a : objs)
    for (Obj b : objs)
      for (Obj c : objs) {
        {  // lax associativity
          Path lhs(CT), rhs(CT);
          lhs.step("m_ten(A,B) ten 1_FC", TT.rten(D.m_ten(a, b), F(c)))
              .step("m_ten(A ten B,C)", D.m_ten(ST.ten(a, b), c))
              .step("F(assoc_ten(A,B,C))", Fm(ST.assoc_lr(a, b, c)));
          rhs.step("assoc_ten(FA,FB,FC)", TT.assoc_lr(F(a), F(b), F(c)))
              .step("1_FA ten m_ten(B,C)", TT.lten(F(a), D.m_ten(b, c)))
              .step("m_ten(A,B ten C)", D.m_ten(a, ST.ten(b, c)));
          ck.check("frobenius:lax_assoc", {a, b, c}, lhs, rhs);
        }
        {  // colax associativity
          Path lhs(CT), rhs(CT);
          lhs.step("F(assoc_par(A,B,C))", Fm(SP.assoc_rl(a, b, c)))
              .step("n_par(A par B,C)", D.n_par(SP.ten(a, b), c))
              .step("n_par(A,B) par 1_FC", TP.rten(D.n_par(a, b), F(c)));
          rhs.step("n_par(A,B par C)", D.n_par(a, SP.ten(b, c)))
              .step("1_FA par n_par(B,C)", TP.lten(F(a), D.n_par(b, c)))
              .step("assoc_par(FA,FB,FC)", TP.assoc_rl(F(a), F(b), F(c)));
          ck.check("frobenius:colax_assoc", {a, b, c}, lhs, rhs);
        }
        {  // first distributor square
          Path lhs(CT), rhs(CT);
          lhs.step("m_ten(A,B par C)", D.m_ten(a, SP.ten(b, c)))
              .step("F(deltaL(A,B,C))", Fm(S.deltaL(a, b, c)))
              .step("n_par(A ten B,C)", D.n_par(ST.ten(a, b), c));
          rhs.step("1_FA ten n_par(B,C)", TT.lten(F(a), D.n_par(b, c)))
              .step("deltaL(FA,FB,FC)", G.deltaL(F(a), F(b), F(c)))
              .step("m_ten(A,B) par 1_FC", TP.rten(D.m_ten(a, b), F(c)));
          ck.check("cc:Frobenius_linear_functor.1", {a, b, c}, lhs, rhs);
        }
        {  // second distributor square
          Path lhs(CT), rhs(CT);
          lhs.step("m_ten(A par B,C)", D.m_ten(SP.ten(a, b), c))
              .step("F(deltaR(A,B,C))", Fm(S.deltaR(a, b, c)))
              .step("n_par(A,B ten C)", D.n_par(a, ST.ten(b, c)));
          rhs.step("n_par(A,B) ten 1_FC", TT.rten(D.n_par(a, b), F(c)))
              .step("deltaR(FA,FB,FC)", G.deltaR(F(a), F(b), F(c)))
              .step("1_FA par m_ten(B,C)", TP.lten(F(a), D.m_ten(b, c)));
          ck.check("cc:Frobenius_linear_functor.2", {a, b, c}, lhs, rhs);
        }
      }

  // Naturality of the (co)monoidal transformations.
  std::vector<Obj> sample = strided_sample(objs, CheckOptions{}.nat_objects);
  std::vector<Mor> mors = fincat::morphisms_between(CS, sample);
  for (Mor f : mors)
    for (Mor g : mors) {
      Obj a = CS.dom(f), a2 = CS.cod(f), b = CS.dom(g), b2 = CS.cod(g);
      {
        Path lhs(CT), rhs(CT);
        lhs.step("F(f) ten F(g)", TT.ten_mor(Fm(f), Fm(g)))
            .step("m_ten(A',B')", D.m_ten(a2, b2));
        rhs.step("m_ten(A,B)", D.m_ten(a, b))
            .step("F(f ten g)", Fm(ST.ten_mor(f, g)));
        ck.check("frobenius:m_ten_natural", {a, a2, b, b2}, lhs, rhs);
      }
      {
        Path lhs(CT), rhs(CT);
        lhs.step("F(f par g)", Fm(SP.ten_mor(f, g)))
            .step("n_par(A',B')", D.n_par(a2, b2));
        rhs.step("n_par(A,B)", D.n_par(a, b))
            .step("F(f) par F(g)", TP.ten_mor(Fm(f), Fm(g)));
        ck.check("frobenius:n_par_natural", {a, a2, b, b2}, lhs, rhs);
      }
    }
  return ck.take();
}

std::vector<LawReport> check_mix_frobenius(const FrobeniusFunctorData& D,
                                           Mor m_source, Mor m_target,
                                           const std::vector<Obj>& objs) {
  const Category& CT = D.target.cat();
  LawChecker ck(CT);
  {
    Path lhs(CT), rhs(CT);
    lhs.step("n_bot", D.n_bot).step("m", m_target).step("m_unit", D.m_unit);
    rhs.step("F(m)", D.F.mor(m_source));
    ck.check("cc:mix_Frobenius_functor", {}, lhs, rhs);
  }
  MixData ms = mix_from_m(D.source, m_source);
  MixData mt = mix_from_m(D.target, m_target);
  for (Obj a : objs)
    for (Obj b : objs) {
      Path lhs(CT), rhs(CT);
      lhs.step("m_ten(A,B)", D.m_ten(a, b))
          .step("F(mix(A,B))", D.F.mor(ms.mix(a, b)))
          .step("n_par(A,B)", D.n_par(a, b));
      rhs.step("mix(FA,FB)", mt.mix(D.F.obj(a), D.F.obj(b)));
      ck.check("frobenius:mix_preserved", {a, b}, lhs, rhs);
    }
  return ck.take();
}

// ----------------------------------------------------- equivalence witnesses ----

namespace {

FrobeniusFunctorData identity_carried(const LdcStructure& source,
                                      const LdcStructure& target, Mor n_bot,
                                      Fam2 n_par) {
  FrobeniusFunctorData D;
  D.source = source;
  D.target = target;
  D.F = fincat::identity_functor(source.tensor.C);
  D.m_unit = source.cat().identity(target.tensor.unit);
  MonoidalStructure T = source.tensor;
  D.m_ten = memo_fam(Fam2([T](Obj a, Obj b) {
    return T.C->identity(T.ten(a, b));
  }));
  D.n_bot = n_bot;
  D.n_par = std::move(n_par);
  return D;
}

}  // namespace

std::optional<EquivalenceWitness> degenerate_equivalence_witness(
    const LdcStructure& L, const MixAnalysis& mix,
    const std::vector<Obj>& objs) {
  if (mix.cls != MixClass::Compact || !mix.data) return std::nullopt;
  const Category& C = L.cat();
  Mor m = mix.data->m;
  auto m_inv = C.find_inverse(m);
  if (!m_inv) return std::nullopt;

  LdcStructure Dg = degenerate_ldc(L.tensor);
  MixData md = *mix.data;
  Fam2 mix_fam = md.mix;
  Fam2 mix_inv = memo_fam(Fam2([&C, mix_fam](Obj a, Obj b) {
    auto inv = C.find_inverse(mix_fam(a, b));
    if (!inv) throw HardFailure("degenerate_equivalence_witness: mix not invertible");
    return *inv;
  }));

  EquivalenceWitness w;
  w.forward = identity_carried(Dg, L, *m_inv, mix_fam);
  w.backward = identity_carried(L, Dg, m, mix_inv);
  append_reports(w.reports, prefixed(check_frobenius_linear(w.forward, objs),
                                     "forward:"));
  append_reports(w.reports, prefixed(check_frobenius_linear(w.backward, objs),
                                     "backward:"));

  LawChecker ck(C);
  ck.check_eq("ldc:equivalence_mutual_inverse", {}, C.compose(m, *m_inv),
              "m; m_inv", C.identity(L.par.unit), "1_bot");
  ck.check_eq("ldc:equivalence_mutual_inverse", {}, C.compose(*m_inv, m),
              "m_inv; m", C.identity(L.tensor.unit), "1_1");
  for (Obj a : objs)
    for (Obj b : objs) {
      ck.check_eq("ldc:equivalence_mutual_inverse", {a, b},
                  C.compose(mix_fam(a, b), mix_inv(a, b)), "mix; mix_inv",
                  C.identity(L.tensor.ten(a, b)), "1_(A ten B)");
      ck.check_eq("ldc:equivalence_mutual_inverse", {a, b},
                  C.compose(mix_inv(a, b), mix_fam(a, b)), "mix_inv; mix",
                  C.identity(L.par.ten(a, b)), "1_(A par B)");
    }
  append_reports(w.reports, ck.take());
  return w;
}

std::optional<EquivalenceWitness> shifted_equivalence_witness(
    const LdcStructure& L, const std::vector<Obj>& objs) {
  if (!L.invertible_distributors()) return std::nullopt;
  const Category& C = L.cat();
  const auto& T = L.tensor;
  const auto& P = L.par;
  Obj one = T.unit, bot = P.unit;

  EquivalenceWitness w;
  auto inv_w = tensor_inverse_from_invertible(L, &w.reports);
  LdcStructure Sh = shifted_tensor_ldc(T, inv_w);

  // beta : A x ((1 par 1) x B) -> A par B, and its structural inverse.
  LdcStructure Lc = L;  // value copies keep the closures self-contained
  Fam2 beta = memo_fam(Fam2([Lc, one](Obj a, Obj b) {
    const auto& T = Lc.tensor;
    const auto& P = Lc.par;
    return Lc.cat().compose_all({T.lten(a, Lc.deltaR(one, one, b)),
                                 Lc.deltaL(a, one, T.ten(one, b)),
                                 P.ten_mor(T.unitR_out(a), T.unitL_out(b))});
  }));
  Fam2 beta_inv = memo_fam(Fam2([Lc, one](Obj a, Obj b) {
    const auto& T = Lc.tensor;
    const auto& P = Lc.par;
    return Lc.cat().compose_all({P.ten_mor(T.unitR_in(a), T.unitL_in(b)),
                                 Lc.deltaL_inv(a, one, T.ten(one, b)),
                                 T.lten(a, Lc.deltaR_inv(one, one, b))});
  }));

  w.forward = identity_carried(L, Sh, C.identity(bot), beta_inv);
  w.backward = identity_carried(Sh, L, C.identity(bot), beta);
  append_reports(w.reports, prefixed(check_frobenius_linear(w.forward, objs),
                                     "forward:"));
  append_reports(w.reports, prefixed(check_frobenius_linear(w.backward, objs),
                                     "backward:"));

  LawChecker ck(C);
  for (Obj a : objs)
    for (Obj b : objs) {
      ck.check_eq("ldc:equivalence_mutual_inverse", {a, b},
                  C.compose(beta(a, b), beta_inv(a, b)), "beta; beta_inv",
                  C.identity(Sh.par.ten(a, b)), "1_(A shifted-par B)");
      ck.check_eq("ldc:equivalence_mutual_inverse", {a, b},
                  C.compose(beta_inv(a, b), beta(a, b)), "beta_inv; beta",
                  C.identity(P.ten(a, b)), "1_(A par B)");
    }
  append_reports(w.reports, ck.take());
  return w;
}

}  // namespace ldcw::ldc
