#include "ldcw/monoidal.hpp"

namespace ldcw::monoidal {

namespace {

std::function<Obj(Obj, Obj)> memo_obj2(std::function<Obj(Obj, Obj)> f) {
  auto cache = std::make_shared<std::map<std::pair<int, int>, Obj>>();
  return [cache, f](Obj a, Obj b) {
    auto key = std::make_pair(a.id, b.id);
    auto it = cache->find(key);
    if (it != cache->end()) return it->second;
    Obj o = f(a, b);
    cache->emplace(key, o);
    return o;
  };
}

}  // namespace

std::vector<LawReport> check_monoidal_laws(const MonoidalStructure& M,
                                           const std::vector<Obj>& objs,
                                           const CheckOptions& opt) {
  const Category& C = *M.C;
  LawChecker chk(C);

  // Family components are isomorphisms with the stored inverses.
  for (Obj a : objs)
    for (Obj b : objs)
      for (Obj c : objs) {
        Mor lr = M.assoc_lr(a, b, c), rl = M.assoc_rl(a, b, c);
        chk.check_eq("mon:assoc_iso", {a, b, c}, C.compose(lr, rl),
                     "assoc;assoc_inv", C.identity(C.dom(lr)), "id");
        chk.check_eq("mon:assoc_iso", {a, b, c}, C.compose(rl, lr),
                     "assoc_inv;assoc", C.identity(C.dom(rl)), "id");
      }
  for (Obj a : objs) {
    chk.check_eq("mon:unit_iso", {a}, C.compose(M.unitR_in(a), M.unitR_out(a)),
                 "uR_in;uR_out", C.identity(a), "id");
    chk.check_eq("mon:unit_iso", {a},
                 C.compose(M.unitR_out(a), M.unitR_in(a)), "uR_out;uR_in",
                 C.identity(C.dom(M.unitR_out(a))), "id");
    chk.check_eq("mon:unit_iso", {a}, C.compose(M.unitL_in(a), M.unitL_out(a)),
                 "uL_in;uL_out", C.identity(a), "id");
    chk.check_eq("mon:unit_iso", {a},
                 C.compose(M.unitL_out(a), M.unitL_in(a)), "uL_out;uL_in",
                 C.identity(C.dom(M.unitL_out(a))), "id");
  }

  // Bifunctoriality over a (possibly sampled) morphism set.
  std::vector<Obj> nat_objs = strided_sample(objs, opt.nat_objects);
  if (nat_objs.size() < objs.size())
    chk.skip("mon:bifunctor_comp",
             "morphism-indexed checks sampled to " +
                 std::to_string(nat_objs.size()) + " objects");
  std::vector<Mor> mors = fincat::morphisms_between(C, nat_objs);
  for (Obj a : objs)
    for (Obj b : objs)
      chk.check_eq("mon:bifunctor_id", {a, b},
                   M.ten_mor(C.identity(a), C.identity(b)), "id.id",
                   C.identity(M.ten(a, b)), "id");
  std::vector<std::pair<Mor, Mor>> comp;
  for (Mor f : mors)
    for (Mor f2 : mors) {
      if (C.cod(f) == C.dom(f2)) comp.emplace_back(f, f2);
    }
  if (comp.size() > opt.bifunctor_pairs) {
    size_t stride = (comp.size() + opt.bifunctor_pairs - 1) / opt.bifunctor_pairs;
    std::vector<std::pair<Mor, Mor>> sampled;
    for (size_t i = 0; i < comp.size(); i += stride) sampled.push_back(comp[i]);
    comp = std::move(sampled);
    chk.skip("mon:bifunctor_comp",
             "composable pairs sampled to " + std::to_string(comp.size()));
  }
  for (auto [f, f2] : comp)
    for (auto [g, g2] : comp) {
      chk.check_eq(
          "mon:bifunctor_comp", {C.dom(f), C.dom(g)},
          M.ten_mor(C.compose(f, f2), C.compose(g, g2)), "(f;f').(g;g')",
          C.compose(M.ten_mor(f, g), M.ten_mor(f2, g2)), "(f.g);(f'.g')");
    }

  // Naturality, one argument at a time (joint naturality follows from
  // bifunctoriality).
  for (Mor f : mors) {
    Obj x = C.dom(f), y = C.cod(f);
    for (Obj b : objs)
      for (Obj c : objs) {
        Path lhs(C), rhs(C);
        lhs.step("(f.1).1", M.rten(M.rten(f, b), c))
            .step("assoc", M.assoc_lr(y, b, c));
        rhs.step("assoc", M.assoc_lr(x, b, c))
            .step("f.(1.1)", M.rten(f, M.ten(b, c)));
        chk.check("mon:assoc_natural", {x, b, c}, lhs, rhs);

        Path lhs2(C), rhs2(C);
        lhs2.step("(1.f).1", M.rten(M.lten(b, f), c))
            .step("assoc", M.assoc_lr(b, y, c));
        rhs2.step("assoc", M.assoc_lr(b, x, c))
            .step("1.(f.1)", M.lten(b, M.rten(f, c)));
        chk.check("mon:assoc_natural", {b, x, c}, lhs2, rhs2);

        Path lhs3(C), rhs3(C);
        lhs3.step("(1.1).f", M.lten(M.ten(b, c), f))
            .step("assoc", M.assoc_lr(b, c, y));
        rhs3.step("assoc", M.assoc_lr(b, c, x))
            .step("1.(1.f)", M.lten(b, M.lten(c, f)));
        chk.check("mon:assoc_natural", {b, c, x}, lhs3, rhs3);
      }
    {
      Path lhs(C), rhs(C);
      lhs.step("f", f).step("uR_in", M.unitR_in(y));
      rhs.step("uR_in", M.unitR_in(x)).step("f.1", M.rten(f, M.unit));
      chk.check("mon:unit_natural", {x}, lhs, rhs);
      Path lhs2(C), rhs2(C);
      lhs2.step("f", f).step("uL_in", M.unitL_in(y));
      rhs2.step("uL_in", M.unitL_in(x)).step("1.f", M.lten(M.unit, f));
      chk.check("mon:unit_natural", {x}, lhs2, rhs2);
    }
    if (M.symmetric())
      for (Obj b : objs) {
        Path lhs(C), rhs(C);
        lhs.step("f.1", M.rten(f, b)).step("sym", M.sym(y, b));
        rhs.step("sym", M.sym(x, b)).step("1.f", M.lten(b, f));
        chk.check("mon:sym_natural", {x, b}, lhs, rhs);
      }
  }

  // Triangle.
  for (Obj a : objs)
    for (Obj b : objs) {
      Path lhs(C), rhs(C);
      lhs.step("uR_in.1", M.rten(M.unitR_in(a), b))
          .step("assoc", M.assoc_lr(a, M.unit, b));
      rhs.step("1.uL_in", M.lten(a, M.unitL_in(b)));
      chk.check("mon:triangle", {a, b}, lhs, rhs);
    }

  // Pentagon over (possibly sampled) quadruples.
  std::vector<Obj> quad = strided_sample(objs, opt.bounds.quad_objects);
  if (quad.size() < objs.size())
    chk.skip("mon:pentagon", "quadruples sampled to " +
                                 std::to_string(quad.size()) + " objects");
  for (Obj a : quad)
    for (Obj b : quad)
      for (Obj c : quad)
        for (Obj d : quad) {
          Path lhs(C), rhs(C);
          lhs.step("assoc(ab,c,d)", M.assoc_lr(M.ten(a, b), c, d))
              .step("assoc(a,b,cd)", M.assoc_lr(a, b, M.ten(c, d)));
          rhs.step("assoc(a,b,c).1", M.rten(M.assoc_lr(a, b, c), d))
              .step("assoc(a,bc,d)", M.assoc_lr(a, M.ten(b, c), d))
              .step("1.assoc(b,c,d)", M.lten(a, M.assoc_lr(b, c, d)));
          chk.check("mon:pentagon", {a, b, c, d}, lhs, rhs);
        }

  if (M.symmetric()) {
    for (Obj a : objs)
      for (Obj b : objs) {
        Path lhs(C), rhs(C);
        lhs.step("sym", M.sym(a, b)).step("sym", M.sym(b, a));
        rhs.step("id", C.identity(M.ten(a, b)));
        chk.check("mon:sym_involution", {a, b}, lhs, rhs);
      }
    for (Obj a : objs)
      for (Obj b : objs)
        for (Obj c : objs) {
          Path lhs(C), rhs(C);
          lhs.step("assoc(a,b,c)", M.assoc_lr(a, b, c))
              .step("sym(a,bc)", M.sym(a, M.ten(b, c)))
              .step("assoc(b,c,a)", M.assoc_lr(b, c, a));
          rhs.step("sym(a,b).1", M.rten(M.sym(a, b), c))
              .step("assoc(b,a,c)", M.assoc_lr(b, a, c))
              .step("1.sym(a,c)", M.lten(b, M.sym(a, c)));
          chk.check("mon:hexagon", {a, b, c}, lhs, rhs);
        }
  }
  return chk.take();
}

MonoidalStructure derive_cartesian_monoidal(const limits::ChosenProducts& P) {
  MonoidalStructure M;
  M.C = P.C;
  M.unit = P.terminal;
  const Category* C = P.C.get();
  auto at = P.at;
  auto bang = P.bang;
  M.ten = memo_obj2([at](Obj a, Obj b) { return at(a, b).apex; });
  M.ten_mor = [C, at](Mor f, Mor g) {
    auto src = at(C->dom(f), C->dom(g));
    auto dst = at(C->cod(f), C->cod(g));
    return dst.pair(C->compose(src.pi0, f), C->compose(src.pi1, g));
  };
  M.assoc_lr = memo_fam(Fam3([C, at](Obj a, Obj b, Obj c) {
    auto ab = at(a, b);
    auto abc = at(ab.apex, c);
    auto bc = at(b, c);
    auto out = at(a, bc.apex);
    Mor inner = bc.pair(C->compose(abc.pi0, ab.pi1), abc.pi1);
    return out.pair(C->compose(abc.pi0, ab.pi0), inner);
  }));
  M.assoc_rl = memo_fam(Fam3([C, at](Obj a, Obj b, Obj c) {
    auto bc = at(b, c);
    auto abc = at(a, bc.apex);
    auto ab = at(a, b);
    auto out = at(ab.apex, c);
    Mor inner = ab.pair(abc.pi0, C->compose(abc.pi1, bc.pi0));
    return out.pair(inner, C->compose(abc.pi1, bc.pi1));
  }));
  Obj unit = P.terminal;
  M.unitR_in = memo_fam(Fam1([C, at, bang, unit](Obj a) {
    return at(a, unit).pair(C->identity(a), bang(a));
  }));
  M.unitR_out = memo_fam(Fam1([at, unit](Obj a) { return at(a, unit).pi0; }));
  M.unitL_in = memo_fam(Fam1([C, at, bang, unit](Obj a) {
    return at(unit, a).pair(bang(a), C->identity(a));
  }));
  M.unitL_out = memo_fam(Fam1([at, unit](Obj a) { return at(unit, a).pi1; }));
  M.sym = memo_fam(Fam2([at](Obj a, Obj b) {
    auto ab = at(a, b);
    auto ba = at(b, a);
    return ba.pair(ab.pi1, ab.pi0);
  }));
  return M;
}

MonoidalStructure derive_cocartesian_monoidal(
    const limits::ChosenCoproducts& P) {
  MonoidalStructure M;
  M.C = P.C;
  M.unit = P.initial;
  const Category* C = P.C.get();
  auto at = P.at;
  auto cobang = P.cobang;
  M.ten = memo_obj2([at](Obj a, Obj b) { return at(a, b).apex; });
  M.ten_mor = [C, at](Mor f, Mor g) {
    auto src = at(C->dom(f), C->dom(g));
    auto dst = at(C->cod(f), C->cod(g));
    return src.copair(C->compose(f, dst.i0), C->compose(g, dst.i1));
  };
  M.assoc_lr = memo_fam(Fam3([C, at](Obj a, Obj b, Obj c) {
    auto ab = at(a, b);
    auto abc = at(ab.apex, c);
    auto bc = at(b, c);
    auto out = at(a, bc.apex);
    // (A+B)+C -> A+(B+C)
    Mor from_ab =
        ab.copair(out.i0, C->compose(bc.i0, out.i1));
    return abc.copair(from_ab, C->compose(bc.i1, out.i1));
  }));
  M.assoc_rl = memo_fam(Fam3([C, at](Obj a, Obj b, Obj c) {
    auto bc = at(b, c);
    auto abc = at(a, bc.apex);
    auto ab = at(a, b);
    auto out = at(ab.apex, c);
    // A+(B+C) -> (A+B)+C
    Mor from_bc =
        bc.copair(C->compose(ab.i1, out.i0), out.i1);
    return abc.copair(C->compose(ab.i0, out.i0), from_bc);
  }));
  Obj unit = P.initial;
  M.unitR_in = memo_fam(Fam1([at, unit](Obj a) { return at(a, unit).i0; }));
  M.unitR_out = memo_fam(Fam1([C, at, cobang, unit](Obj a) {
    return at(a, unit).copair(C->identity(a), cobang(a));
  }));
  M.unitL_in = memo_fam(Fam1([at, unit](Obj a) { return at(unit, a).i1; }));
  M.unitL_out = memo_fam(Fam1([C, at, cobang, unit](Obj a) {
    return at(unit, a).copair(cobang(a), C->identity(a));
  }));
  M.sym = memo_fam(Fam2([at](Obj a, Obj b) {
    auto ab = at(a, b);
    auto ba = at(b, a);
    return ab.copair(ba.i1, ba.i0);
  }));
  return M;
}

std::vector<LawReport> check_tensor_inverse(const MonoidalStructure& M,
                                            const TensorInverseWitness& w) {
  const Category& C = *M.C;
  LawChecker chk(C);
  std::vector<Obj> idx = {w.bot, w.botinv};
  chk.check_eq("tensor_inverse:sL_iso", idx, C.compose(w.sL, w.sL_inv),
               "sL;sL_inv", C.identity(C.dom(w.sL)), "id");
  chk.check_eq("tensor_inverse:sL_iso", idx, C.compose(w.sL_inv, w.sL),
               "sL_inv;sL", C.identity(M.unit), "id");
  chk.check_eq("tensor_inverse:sR_iso", idx, C.compose(w.sR, w.sR_inv),
               "sR;sR_inv", C.identity(C.dom(w.sR)), "id");
  chk.check_eq("tensor_inverse:sR_iso", idx, C.compose(w.sR_inv, w.sR),
               "sR_inv;sR", C.identity(M.unit), "id");
  Path lhs(C), rhs(C);
  lhs.step("sR.1", M.rten(w.sR, w.botinv)).step("uL_out", M.unitL_out(w.botinv));
  rhs.step("assoc", M.assoc_lr(w.botinv, w.bot, w.botinv))
      .step("1.sL", M.lten(w.botinv, w.sL))
      .step("uR_out", M.unitR_out(w.botinv));
  chk.check("cc:shifted_tensor", idx, lhs, rhs);
  return chk.take();
}

MonoidalStructure shifted_par_structure(const MonoidalStructure& M,
                                        const TensorInverseWitness& w) {
  const Category* C = M.C.get();
  MonoidalStructure S;
  S.C = M.C;
  S.unit = w.bot;
  Obj binv = w.botinv;
  auto ten = M.ten;
  S.ten = memo_obj2(
      [ten, binv](Obj a, Obj b) { return ten(a, ten(binv, b)); });
  auto mten = M.ten_mor;
  S.ten_mor = [C, mten, binv](Mor f, Mor g) {
    return mten(f, mten(C->identity(binv), g));
  };
  // (A par B) par C -> A par (B par C) is pure associator shuffling.
  MonoidalStructure base = M;  // copy of families for capture
  S.assoc_lr = memo_fam(Fam3([base, binv](Obj a, Obj b, Obj c) {
    Obj sc = base.ten(binv, c);
    Obj sb = base.ten(binv, b);
    const Category& cat = *base.C;
    return cat.compose(base.assoc_lr(a, sb, sc),
                       base.lten(a, base.assoc_lr(binv, b, sc)));
  }));
  S.assoc_rl = memo_fam(Fam3([base, binv](Obj a, Obj b, Obj c) {
    Obj sc = base.ten(binv, c);
    Obj sb = base.ten(binv, b);
    const Category& cat = *base.C;
    return cat.compose(base.lten(a, base.assoc_rl(binv, b, sc)),
                       base.assoc_rl(a, sb, sc));
  }));
  Mor sR = w.sR, sR_inv = w.sR_inv, sL = w.sL, sL_inv = w.sL_inv;
  Obj bot = w.bot;
  S.unitR_out = memo_fam(Fam1([base, sR](Obj a) {
    const Category& cat = *base.C;
    return cat.compose(base.lten(a, sR), base.unitR_out(a));
  }));
  S.unitR_in = memo_fam(Fam1([base, sR_inv](Obj a) {
    const Category& cat = *base.C;
    return cat.compose(base.unitR_in(a), base.lten(a, sR_inv));
  }));
  S.unitL_out = memo_fam(Fam1([base, binv, bot, sL](Obj a) {
    const Category& cat = *base.C;
    return cat.compose_all({base.assoc_rl(bot, binv, a),
                            base.rten(sL, a), base.unitL_out(a)});
  }));
  S.unitL_in = memo_fam(Fam1([base, binv, bot, sL_inv](Obj a) {
    const Category& cat = *base.C;
    return cat.compose_all({base.unitL_in(a), base.rten(sL_inv, a),
                            base.assoc_lr(bot, binv, a)});
  }));
  // No symmetry is constructed for the generic shifted structure.
  return S;
}

}  // namespace ldcw::monoidal
