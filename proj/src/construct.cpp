// Constructions on finite categories: lattice instances, semi-additive
// instances, the semizero core, (co)slices, binary products, and the
// either-or-both tensor over a distributive symmetric monoidal category with
// a zero object. The total-category and Kleisli constructions live in
// construct_total.cpp.

#include "ldcw/construct.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace ldcw::construct {

using fincat::FullSubcategory;
using fincat::PosetCategory;
using limits::ChosenCoproducts;
using limits::ChosenProducts;
using limits::CoproductWitness;
using limits::ProductWitness;

// ------------------------------------------------------------- lattices ----

BdlValidation validate_bdl(FiniteBDL& L) {
  BdlValidation v;
  const int n = L.n;
  if (n <= 0) {
    v.failure = "lattice must have at least one element";
    return v;
  }
  if ((int)L.elems.size() != n) {
    L.elems.clear();
    for (int i = 0; i < n; ++i) L.elems.push_back("e" + std::to_string(i));
  }
  if ((int)L.leq.size() != n) {
    v.failure = "leq table has wrong number of rows";
    return v;
  }
  for (const auto& row : L.leq)
    if ((int)row.size() != n) {
      v.failure = "leq table has wrong number of columns";
      return v;
    }
  auto name = [&](int x) { return L.elems[(size_t)x]; };
  for (int x = 0; x < n; ++x)
    if (!L.leq[x][x]) {
      v.failure = "not reflexive at " + name(x);
      return v;
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x != y && L.leq[x][y] && L.leq[y][x]) {
        v.failure = "not antisymmetric at (" + name(x) + "," + name(y) + ")";
        return v;
      }
      for (int z = 0; z < n; ++z)
        if (L.leq[x][y] && L.leq[y][z] && !L.leq[x][z]) {
          v.failure = "not transitive at (" + name(x) + "," + name(y) + "," +
                      name(z) + ")";
          return v;
        }
    }

  L.meet.assign((size_t)n, std::vector<int>((size_t)n, -1));
  L.join.assign((size_t)n, std::vector<int>((size_t)n, -1));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        if (!L.leq[z][x] || !L.leq[z][y]) continue;
        bool greatest = true;
        for (int w = 0; w < n; ++w)
          if (L.leq[w][x] && L.leq[w][y] && !L.leq[w][z]) greatest = false;
        if (greatest) {
          L.meet[(size_t)x][(size_t)y] = z;
          break;
        }
      }
      if (L.meet[(size_t)x][(size_t)y] < 0) {
        v.failure = "no meet of (" + name(x) + "," + name(y) + ")";
        return v;
      }
      for (int z = 0; z < n; ++z) {
        if (!L.leq[x][z] || !L.leq[y][z]) continue;
        bool least = true;
        for (int w = 0; w < n; ++w)
          if (L.leq[x][w] && L.leq[y][w] && !L.leq[z][w]) least = false;
        if (least) {
          L.join[(size_t)x][(size_t)y] = z;
          break;
        }
      }
      if (L.join[(size_t)x][(size_t)y] < 0) {
        v.failure = "no join of (" + name(x) + "," + name(y) + ")";
        return v;
      }
    }

  L.bottom = -1;
  L.top = -1;
  for (int x = 0; x < n; ++x) {
    bool bot = true, top = true;
    for (int y = 0; y < n; ++y) {
      if (!L.leq[x][y]) bot = false;
      if (!L.leq[y][x]) top = false;
    }
    if (bot) L.bottom = x;
    if (top) L.top = x;
  }
  if (L.bottom < 0) {
    v.failure = "no bottom element";
    return v;
  }
  if (L.top < 0) {
    v.failure = "no top element";
    return v;
  }

  auto mt = [&](int x, int y) { return L.meet[(size_t)x][(size_t)y]; };
  auto jn = [&](int x, int y) { return L.join[(size_t)x][(size_t)y]; };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (mt(x, jn(y, z)) != jn(mt(x, y), mt(x, z))) {
          v.failure = "not distributive: " + name(x) + " meet (" + name(y) +
                      " join " + name(z) + ") differs from (" + name(x) +
                      " meet " + name(y) + ") join (" + name(x) + " meet " +
                      name(z) + ")";
          return v;
        }
        if (jn(x, mt(y, z)) != mt(jn(x, y), jn(x, z))) {
          v.failure = "not distributive (dual law) at (" + name(x) + "," +
                      name(y) + "," + name(z) + ")";
          return v;
        }
      }
  v.ok = true;
  return v;
}

FiniteBDL bdl_from_json(const std::string& text, const std::string& name) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("lattice file is not valid JSON: ") +
                     e.what());
  }
  if (!j.is_object() || !j.contains("elements") || !j.contains("leq"))
    throw InputError("lattice file must be an object with 'elements' and 'leq'");
  FiniteBDL L;
  L.name = name;
  for (const auto& e : j.at("elements")) {
    if (e.is_string())
      L.elems.push_back(e.get<std::string>());
    else
      L.elems.push_back(e.dump());
  }
  L.n = (int)L.elems.size();
  if (L.n == 0) throw InputError("lattice file lists no elements");
  auto index_of = [&](const nlohmann::json& e) -> int {
    if (e.is_number_integer()) {
      int i = e.get<int>();
      if (i < 0 || i >= L.n)
        throw InputError("leq entry index out of range: " + e.dump());
      return i;
    }
    if (e.is_string()) {
      auto it = std::find(L.elems.begin(), L.elems.end(), e.get<std::string>());
      if (it == L.elems.end())
        throw InputError("leq entry names unknown element: " +
                         e.get<std::string>());
      return (int)(it - L.elems.begin());
    }
    throw InputError("leq entries must be element names or indices");
  };
  L.leq.assign((size_t)L.n, std::vector<bool>((size_t)L.n, false));
  for (int i = 0; i < L.n; ++i) L.leq[(size_t)i][(size_t)i] = true;
  for (const auto& p : j.at("leq")) {
    if (!p.is_array() || p.size() != 2)
      throw InputError("leq entries must be pairs");
    L.leq[(size_t)index_of(p[0])][(size_t)index_of(p[1])] = true;
  }
  // Transitive closure, so cover relations are accepted.
  for (int k = 0; k < L.n; ++k)
    for (int x = 0; x < L.n; ++x)
      for (int y = 0; y < L.n; ++y)
        if (L.leq[(size_t)x][(size_t)k] && L.leq[(size_t)k][(size_t)y])
          L.leq[(size_t)x][(size_t)y] = true;
  return L;
}

BdlCldcResult bdl_to_cldc(const FiniteBDL& Lin, const cldc::CldcOptions& opt) {
  FiniteBDL L = Lin;
  auto v = validate_bdl(L);
  if (!v.ok)
    throw InputError("invalid bounded distributive lattice" +
                     (L.name.empty() ? std::string() : " '" + L.name + "'") +
                     ": " + v.failure);

  auto cat = std::make_shared<PosetCategory>(L.elems, L.leq);
  std::vector<Obj> objs;
  for (int i = 0; i < L.n; ++i) objs.push_back(Obj{i});

  ChosenProducts prods;
  prods.C = cat;
  prods.terminal = Obj{L.top};
  prods.bang = memo_fam(Fam1([cat, top = L.top](Obj a) {
    return cat->arrow(a, Obj{top});
  }));
  prods.at = limits::memo_products(
      [cat, meet = L.meet](Obj a, Obj b) -> ProductWitness {
        Obj apex{meet[(size_t)a.id][(size_t)b.id]};
        ProductWitness w;
        w.left = a;
        w.right = b;
        w.apex = apex;
        w.pi0 = cat->arrow(apex, a);
        w.pi1 = cat->arrow(apex, b);
        w.pair = [cat, apex](Mor f, Mor) { return cat->arrow(cat->dom(f), apex); };
        return w;
      });

  ChosenCoproducts cops;
  cops.C = cat;
  cops.initial = Obj{L.bottom};
  cops.cobang = memo_fam(Fam1([cat, bot = L.bottom](Obj a) {
    return cat->arrow(Obj{bot}, a);
  }));
  cops.at = limits::memo_coproducts(
      [cat, join = L.join](Obj a, Obj b) -> CoproductWitness {
        Obj apex{join[(size_t)a.id][(size_t)b.id]};
        CoproductWitness w;
        w.left = a;
        w.right = b;
        w.apex = apex;
        w.i0 = cat->arrow(a, apex);
        w.i1 = cat->arrow(b, apex);
        w.copair = [cat, apex](Mor f, Mor) {
          return cat->arrow(apex, cat->cod(f));
        };
        return w;
      });

  BdlCldcResult out;
  auto res = cldc::assemble_cldc(cat, prods, cops, objs, std::nullopt,
                                 std::nullopt, opt);
  out.reports = res.reports;
  if (!res.ok()) {
    out.failure = res.failure;
    return out;
  }
  out.X = std::move(res.cldc);
  cldc::cldc_mix(*out.X, &out.reports, opt);
  return out;
}

// -------------------------------------------------- semi-additive bases ----

cldc::AssembleResult semiadditive_to_cldc(const SemiAddInput& B,
                                          const cldc::CldcOptions& opt) {
  auto C = B.C;
  auto T = monoidal::derive_cartesian_monoidal(B.prods);
  auto P = monoidal::derive_cocartesian_monoidal(B.cops);
  Fam2 psi = B.zero.psi;
  Fam2 psi_inv = memo_fam(Fam2([C, psi](Obj a, Obj b) {
    auto inv = C->find_inverse(psi(a, b));
    if (!inv)
      throw InputError("comparison map psi is not invertible at (" +
                       C->obj_name(a) + "," + C->obj_name(b) + ")");
    return *inv;
  }));

  // x-route presentations.
  Fam3 deltaR = memo_fam(Fam3([C, T, psi, psi_inv](Obj a, Obj b, Obj c) {
    return C->compose_all({T.ten_mor(psi(a, b), C->identity(c)),
                           T.assoc_lr(a, b, c), psi_inv(a, T.ten(b, c))});
  }));
  Fam3 deltaL = memo_fam(Fam3([C, T, psi, psi_inv](Obj a, Obj b, Obj c) {
    return C->compose_all({T.ten_mor(C->identity(a), psi(b, c)),
                           T.assoc_rl(a, b, c), psi_inv(T.ten(a, b), c)});
  }));

  // +-route presentations, checked equal.
  LawChecker ck(*C);
  for (Obj a : B.objs)
    for (Obj b : B.objs)
      for (Obj c : B.objs) {
        Path lhsR(*C), rhsR(*C);
        lhsR.step("deltaR(A,B,C)", deltaR(a, b, c));
        rhsR.step("psi_inv(A+B,C)", psi_inv(P.ten(a, b), c))
            .step("assocPlus_lr(A,B,C)", P.assoc_lr(a, b, c))
            .step("1_A + psi(B,C)", P.ten_mor(C->identity(a), psi(b, c)));
        ck.check("semiadd:deltaR_presentations", {a, b, c}, lhsR, rhsR);
        Path lhsL(*C), rhsL(*C);
        lhsL.step("deltaL(A,B,C)", deltaL(a, b, c));
        rhsL.step("psi_inv(A,B+C)", psi_inv(a, P.ten(b, c)))
            .step("assocPlus_rl(A,B,C)", P.assoc_rl(a, b, c))
            .step("psi(A,B) + 1_C", P.ten_mor(psi(a, b), C->identity(c)));
        ck.check("semiadd:deltaL_presentations", {a, b, c}, lhsL, rhsL);
      }

  auto res = cldc::assemble_cldc(C, B.prods, B.cops, B.objs, deltaL, deltaR, opt);
  std::vector<LawReport> pres = ck.take();
  append_reports(pres, res.reports);
  res.reports = std::move(pres);
  if (res.failure.empty() && !all_pass(res.reports)) {
    const LawReport* f = first_failure(res.reports);
    res.failure = "law failure: " + (f ? f->law_id : std::string("unknown"));
    res.cldc.reset();
  }
  if (res.ok()) {
    // Distributors of a semi-additive instance are invertible.
    res.cldc->L.deltaL_inv = memo_fam(Fam3([C, deltaL](Obj a, Obj b, Obj c) {
      auto inv = C->find_inverse(deltaL(a, b, c));
      if (!inv)
        throw InputError("deltaL is not invertible at (" + C->obj_name(a) +
                         "," + C->obj_name(b) + "," + C->obj_name(c) + ")");
      return *inv;
    }));
    res.cldc->L.deltaR_inv = memo_fam(Fam3([C, deltaR](Obj a, Obj b, Obj c) {
      auto inv = C->find_inverse(deltaR(a, b, c));
      if (!inv)
        throw InputError("deltaR is not invertible at (" + C->obj_name(a) +
                         "," + C->obj_name(b) + "," + C->obj_name(c) + ")");
      return *inv;
    }));
    cldc::cldc_mix(*res.cldc, &res.reports, opt);
  }
  return res;
}

// ------------------------------------------------------------- semizero ----

namespace {

// Chosen structure of a full subcategory, inherited from the base instance.
// Apex objects are interned through the subcategory, which re-checks the
// defining predicate (so closure failures surface as InputError).
ChosenProducts inherited_products(std::shared_ptr<const FullSubcategory> sub,
                                  const ChosenProducts& base, Obj terminal,
                                  Fam1 bang) {
  ChosenProducts p;
  p.C = sub;
  p.terminal = terminal;
  p.bang = std::move(bang);
  p.at = limits::memo_products([sub, at = base.at](Obj a, Obj b) {
    auto w = at(sub->to_base(a), sub->to_base(b));
    ProductWitness r;
    r.left = a;
    r.right = b;
    r.apex = sub->from_base(w.apex);
    r.pi0 = w.pi0;
    r.pi1 = w.pi1;
    r.pair = w.pair;
    return r;
  });
  return p;
}

ChosenCoproducts inherited_coproducts(
    std::shared_ptr<const FullSubcategory> sub, const ChosenCoproducts& base,
    Obj initial, Fam1 cobang) {
  ChosenCoproducts p;
  p.C = sub;
  p.initial = initial;
  p.cobang = std::move(cobang);
  p.at = limits::memo_coproducts([sub, at = base.at](Obj a, Obj b) {
    auto w = at(sub->to_base(a), sub->to_base(b));
    CoproductWitness r;
    r.left = a;
    r.right = b;
    r.apex = sub->from_base(w.apex);
    r.i0 = w.i0;
    r.i1 = w.i1;
    r.copair = w.copair;
    return r;
  });
  return p;
}

Fam3 inherited_fam3(std::shared_ptr<const FullSubcategory> sub, Fam3 f) {
  return memo_fam(Fam3([sub, f](Obj a, Obj b, Obj c) {
    return f(sub->to_base(a), sub->to_base(b), sub->to_base(c));
  }));
}

}  // namespace

SzResult sz_subcategory(const cldc::CldcStructure& X,
                        const cldc::CldcOptions& opt) {
  SzResult out;
  try {
    auto baseC = X.C;
    auto pred = [baseC, objs = X.objs, prods = X.prods,
                 cops = X.cops](Obj a) {
      return limits::classify_object(*baseC, objs, a, &prods, &cops).semizero;
    };
    std::vector<Obj> seed;
    for (Obj a : X.objs)
      if (pred(a)) seed.push_back(a);
    if (seed.empty()) {
      out.failure = "no semizero objects among the bounded objects";
      return out;
    }
    auto sub = std::make_shared<FullSubcategory>(baseC, pred, seed);
    out.sub = sub;
    std::vector<Obj> sobjs;
    for (Obj a : seed) sobjs.push_back(sub->from_base(a));

    ChosenProducts sprods = inherited_products(
        sub, X.prods, sub->from_base(Obj{X.top()}),
        memo_fam(Fam1([sub, bang = X.prods.bang](Obj a) {
          return bang(sub->to_base(a));
        })));
    ChosenCoproducts scops = inherited_coproducts(
        sub, X.cops, sub->from_base(Obj{X.bot()}),
        memo_fam(Fam1([sub, cobang = X.cops.cobang](Obj a) {
          return cobang(sub->to_base(a));
        })));
    Fam3 dl = inherited_fam3(sub, X.L.deltaL);
    Fam3 dr = inherited_fam3(sub, X.L.deltaR);

    auto res = cldc::assemble_cldc(sub, sprods, scops, sobjs, dl, dr, opt);
    out.reports = res.reports;
    if (!res.ok()) {
      out.failure = res.failure;
      return out;
    }
    out.X = std::move(res.cldc);
    cldc::cldc_mix(*out.X, &out.reports, opt);

    auto cls = collapse::classify(*out.X);
    LawChecker ck(*sub);
    ck.check_that("sz:posetal", {}, cls.posetal,
                  "semizero core is posetal", "every hom-set has at most one map");
    if (!cls.posetal) ck.note("sz:posetal", cls.posetal_witness);
    append_reports(out.reports, ck.take());
  } catch (const InputError& e) {
    out.failure = e.what();
  } catch (const BudgetExceeded& e) {
    out.failure = e.what();
  }
  return out;
}

LawReport sz_adjunction_check(const cldc::CldcStructure& L,
                              const cldc::CldcStructure& X,
                              const SzResult& sz) {
  if (!sz.X.has_value())
    throw InputError("sz_adjunction_check requires a certified semizero core");
  const auto& C = *X.C;
  const size_t nl = L.objs.size();
  // Strict preservation forces images with apex(F(a),F(a)) = F(a), hence at
  // most one map between images; a functor is therefore determined by its
  // object map and exists iff every required hom-set is inhabited.
  auto count_strict = [&](const std::vector<Obj>& targets) -> long {
    double total = 1;
    for (size_t i = 0; i < nl; ++i) total *= (double)targets.size();
    if (total > 200000)
      throw BudgetExceeded("sz_adjunction_check: too many object maps");
    std::vector<size_t> pick(nl, 0);
    long count = 0;
    bool done = targets.empty();
    while (!done) {
      auto img = [&](Obj a) {
        for (size_t i = 0; i < nl; ++i)
          if (L.objs[i] == a) return targets[pick[i]];
        throw HardFailure("sz_adjunction_check: object outside the bound");
      };
      bool ok = img(Obj{L.top()}) == Obj{X.top()} &&
                img(Obj{L.bot()}) == Obj{X.bot()};
      for (size_t i = 0; ok && i < nl; ++i)
        for (size_t j = 0; ok && j < nl; ++j) {
          Obj a = L.objs[i], b = L.objs[j];
          Obj fa = img(a), fb = img(b);
          if (img(L.prods.at(a, b).apex) != X.prods.at(fa, fb).apex) ok = false;
          if (ok && img(L.cops.at(a, b).apex) != X.cops.at(fa, fb).apex)
            ok = false;
          if (ok && !L.C->hom(a, b).empty() && C.hom(fa, fb).empty()) ok = false;
        }
      if (ok) ++count;
      size_t k = 0;
      while (k < nl && ++pick[k] == targets.size()) pick[k++] = 0;
      if (k == nl) done = true;
    }
    return count;
  };

  std::vector<Obj> into_all = X.objs;
  std::vector<Obj> into_sz;
  for (Obj a : sz.X->objs) into_sz.push_back(sz.sub->to_base(a));

  long nx = count_strict(into_all);
  long ns = count_strict(into_sz);
  LawReport r;
  r.law_id = "sz:adjunction_hom_bijection";
  r.status = (nx == ns) ? Status::Pass : Status::Fail;
  r.note = "strict lattice-structure preservers into the full category: " +
           std::to_string(nx) + "; into the semizero core: " +
           std::to_string(ns);
  double total = 1;
  for (size_t i = 0; i < nl; ++i) total *= (double)into_all.size();
  r.checked = (long)total;
  if (r.status == Status::Fail) {
    Witness w;
    w.lhs_mor = std::to_string(nx) + " preservers into the full category";
    w.rhs_mor = std::to_string(ns) + " preservers into the semizero core";
    r.witness = w;
  }
  return r;
}

// ----------------------------------------------------------- (co)slices ----

namespace {

SliceResult slice_impl(const cldc::CldcStructure& X,
                       const cldc::CldcOptions& opt, bool coslice) {
  SliceResult out;
  const char* tag = coslice ? "coslice" : "slice";
  try {
    auto baseC = X.C;
    Obj pivot = coslice ? Obj{X.top()} : Obj{X.bot()};
    auto pred = [baseC, pivot, coslice](Obj a) {
      return coslice ? !baseC->hom(pivot, a).empty()
                     : !baseC->hom(a, pivot).empty();
    };
    std::vector<Obj> seed;
    for (Obj a : X.objs)
      if (pred(a)) seed.push_back(a);
    auto sub = std::make_shared<FullSubcategory>(baseC, pred, seed);
    out.sub = sub;
    std::vector<Obj> sobjs;
    for (Obj a : seed) sobjs.push_back(sub->from_base(a));
    Obj spivot = sub->from_base(pivot);

    // The structural map to/from the pivot is unique: the bottom object is
    // subterminal, the top object preinitial.
    Fam1 pivot_map = memo_fam(Fam1([baseC, sub, pivot, coslice,
                                    tag = std::string(tag)](Obj a) {
      auto h = coslice ? baseC->hom(pivot, sub->to_base(a))
                       : baseC->hom(sub->to_base(a), pivot);
      if (h.size() != 1)
        throw InputError(tag + ": expected exactly one structural map at " +
                         baseC->obj_name(sub->to_base(a)) + ", found " +
                         std::to_string(h.size()));
      return h[0];
    }));

    ChosenProducts sprods = inherited_products(
        sub, X.prods, spivot,
        coslice ? memo_fam(Fam1([sub, bang = X.prods.bang](Obj a) {
          return bang(sub->to_base(a));
        }))
                : pivot_map);
    ChosenCoproducts scops = inherited_coproducts(
        sub, X.cops, spivot,
        coslice ? pivot_map : memo_fam(Fam1([sub, cobang = X.cops.cobang](
                                                Obj a) {
          return cobang(sub->to_base(a));
        })));
    Fam3 dl = inherited_fam3(sub, X.L.deltaL);
    Fam3 dr = inherited_fam3(sub, X.L.deltaR);

    auto res = cldc::assemble_cldc(sub, sprods, scops, sobjs, dl, dr, opt);
    out.reports = res.reports;
    if (!res.ok()) {
      out.failure = res.failure;
      return out;
    }
    out.X = std::move(res.cldc);
    auto mix = cldc::cldc_mix(*out.X, &out.reports, opt);

    auto zs = limits::zero_structure(sprods, scops, sobjs, &out.reports);
    if (!zs) {
      out.failure = std::string(tag) + ": pivot is not a zero object";
      return out;
    }
    LawChecker ck(*sub);
    std::string psi_law = std::string(tag) + ":psi_inverse_is_mix";
    for (Obj a : sobjs)
      for (Obj b : sobjs) {
        Obj plus = scops.at(a, b).apex;
        Obj times = sprods.at(a, b).apex;
        Path l1(*sub), r1(*sub);
        l1.step("psi(A,B)", zs->psi(a, b)).step("mix(A,B)", mix.mix(a, b));
        r1.step("1_{A+B}", sub->identity(plus));
        ck.check(psi_law, {a, b}, l1, r1);
        Path l2(*sub), r2(*sub);
        l2.step("mix(A,B)", mix.mix(a, b)).step("psi(A,B)", zs->psi(a, b));
        r2.step("1_{AxB}", sub->identity(times));
        ck.check(psi_law, {a, b}, l2, r2);
      }
    auto cls = collapse::classify(*out.X);
    ck.check_that(std::string(tag) + ":compact", {},
                  cls.compact && cls.semi_additive,
                  "the sliced instance is compact",
                  "semi-additive with invertible mix");
    if (!cls.compact) ck.note(std::string(tag) + ":compact", cls.semiadd_witness);
    append_reports(out.reports, ck.take());
  } catch (const InputError& e) {
    out.failure = e.what();
  } catch (const BudgetExceeded& e) {
    out.failure = e.what();
  }
  return out;
}

}  // namespace

SliceResult slice_cldc(const cldc::CldcStructure& X,
                       const cldc::CldcOptions& opt) {
  return slice_impl(X, opt, false);
}

SliceResult coslice_cldc(const cldc::CldcStructure& X,
                         const cldc::CldcOptions& opt) {
  return slice_impl(X, opt, true);
}

std::vector<LawReport> slice_equivalence(const cldc::CldcStructure& X,
                                         const SliceResult& slice) {
  (void)X;
  if (!slice.X.has_value())
    throw InputError("slice_equivalence requires a certified slice");
  const auto& S = *slice.X;
  CatPtr sc = S.C;
  Obj bot{S.bot()};
  const auto& T = S.L.tensor;  // derived cartesian structure on the slice

  fincat::Functor F;
  F.source = sc;
  F.target = sc;
  F.obj = [T, bot](Obj a) { return T.ten(a, bot); };
  F.mor = [sc, T, bot](Mor f) { return T.ten_mor(f, sc->identity(bot)); };

  std::vector<LawReport> out = fincat::check_functor(F, S.objs);
  for (auto& r : out) r.law_id = "slice:equiv_functor." + r.law_id;

  Fam1 alpha = memo_fam(Fam1([S, bot](Obj a) {
    auto w = S.prods.at(a, bot);
    return w.pair(S.C->identity(a), S.prods.bang(a));
  }));
  fincat::NaturalTransformation eta;
  eta.F = fincat::identity_functor(sc);
  eta.G = F;
  eta.at = alpha;
  auto nat = fincat::check_natural(eta, S.objs);
  for (auto& r : nat) r.law_id = "slice:equiv_alpha_natural." + r.law_id;
  append_reports(out, nat);

  LawChecker ck(*sc);
  for (Obj a : S.objs) {
    auto w = S.prods.at(a, bot);
    ck.check_eq("slice:equiv_alpha_iso", {a},
                sc->compose(alpha(a), w.pi0), "<1_A, a_A>; pi0(A,bot)",
                sc->identity(a), "1_A");
    ck.check_eq("slice:equiv_alpha_iso", {a},
                sc->compose(w.pi0, alpha(a)), "pi0(A,bot); <1_A, a_A>",
                sc->identity(w.apex), "1_{A x bot}");
  }
  append_reports(out, ck.take());
  return out;
}

// ------------------------------------------------------------- products ----

ProductCldcResult product_cldc(const cldc::CldcStructure& X,
                               const cldc::CldcStructure& Y,
                               const cldc::CldcOptions& opt) {
  ProductCldcResult out;
  auto P = std::make_shared<fincat::ProductCategory>(X.C, Y.C, X.objs, Y.objs);
  out.prod = P;
  std::vector<Obj> objs;
  for (Obj a : X.objs)
    for (Obj b : Y.objs) objs.push_back(P->pair_obj(a, b));

  ChosenProducts prods;
  prods.C = P;
  prods.terminal = P->pair_obj(Obj{X.top()}, Obj{Y.top()});
  prods.bang = memo_fam(Fam1([P, bx = X.prods.bang, by = Y.prods.bang](Obj p) {
    auto [a, b] = P->split_obj(p);
    return P->pair_mor(bx(a), by(b));
  }));
  prods.at = limits::memo_products(
      [P, atx = X.prods.at, aty = Y.prods.at](Obj p, Obj q) {
        auto [a1, b1] = P->split_obj(p);
        auto [a2, b2] = P->split_obj(q);
        auto wx = atx(a1, a2);
        auto wy = aty(b1, b2);
        ProductWitness w;
        w.left = p;
        w.right = q;
        w.apex = P->pair_obj(wx.apex, wy.apex);
        w.pi0 = P->pair_mor(wx.pi0, wy.pi0);
        w.pi1 = P->pair_mor(wx.pi1, wy.pi1);
        w.pair = [P, wx, wy](Mor f, Mor g) {
          auto [f1, f2] = P->split_mor(f);
          auto [g1, g2] = P->split_mor(g);
          return P->pair_mor(wx.pair(f1, g1), wy.pair(f2, g2));
        };
        return w;
      });

  ChosenCoproducts cops;
  cops.C = P;
  cops.initial = P->pair_obj(Obj{X.bot()}, Obj{Y.bot()});
  cops.cobang =
      memo_fam(Fam1([P, bx = X.cops.cobang, by = Y.cops.cobang](Obj p) {
        auto [a, b] = P->split_obj(p);
        return P->pair_mor(bx(a), by(b));
      }));
  cops.at = limits::memo_coproducts(
      [P, atx = X.cops.at, aty = Y.cops.at](Obj p, Obj q) {
        auto [a1, b1] = P->split_obj(p);
        auto [a2, b2] = P->split_obj(q);
        auto wx = atx(a1, a2);
        auto wy = aty(b1, b2);
        CoproductWitness w;
        w.left = p;
        w.right = q;
        w.apex = P->pair_obj(wx.apex, wy.apex);
        w.i0 = P->pair_mor(wx.i0, wy.i0);
        w.i1 = P->pair_mor(wx.i1, wy.i1);
        w.copair = [P, wx, wy](Mor f, Mor g) {
          auto [f1, f2] = P->split_mor(f);
          auto [g1, g2] = P->split_mor(g);
          return P->pair_mor(wx.copair(f1, g1), wy.copair(f2, g2));
        };
        return w;
      });

  Fam3 dl = memo_fam(Fam3([P, fx = X.L.deltaL, fy = Y.L.deltaL](Obj a, Obj b,
                                                                Obj c) {
    auto [a1, a2] = P->split_obj(a);
    auto [b1, b2] = P->split_obj(b);
    auto [c1, c2] = P->split_obj(c);
    return P->pair_mor(fx(a1, b1, c1), fy(a2, b2, c2));
  }));
  Fam3 dr = memo_fam(Fam3([P, fx = X.L.deltaR, fy = Y.L.deltaR](Obj a, Obj b,
                                                                Obj c) {
    auto [a1, a2] = P->split_obj(a);
    auto [b1, b2] = P->split_obj(b);
    auto [c1, c2] = P->split_obj(c);
    return P->pair_mor(fx(a1, b1, c1), fy(a2, b2, c2));
  }));

  auto res = cldc::assemble_cldc(P, prods, cops, objs, dl, dr, opt);
  out.reports = res.reports;
  if (!res.ok()) {
    out.failure = res.failure;
    return out;
  }
  out.X = std::move(res.cldc);
  cldc::cldc_mix(*out.X, &out.reports, opt);
  return out;
}

// --------------------------- distributive SMC with zero, and the wedge ----

DistributiveSmcWithZero make_distributive_smc(
    CatPtr C, const ChosenCoproducts& cops,
    const monoidal::MonoidalStructure& smash, const std::vector<Obj>& objs) {
  (void)objs;
  if (!smash.symmetric())
    throw InputError("the monoidal structure must be symmetric");
  DistributiveSmcWithZero M;
  M.C = C;
  M.cops = cops;
  M.smash = smash;
  M.zero = cops.initial;
  Obj zero = M.zero;
  M.bang = memo_fam(Fam1([C, zero](Obj a) {
    auto h = C->hom(a, zero);
    if (h.size() != 1)
      throw InputError("the initial object is not terminal: |hom(" +
                       C->obj_name(a) + ", zero)| = " +
                       std::to_string(h.size()));
    return h[0];
  }));

  M.dL = memo_fam(Fam3([C, cops, smash](Obj a, Obj b, Obj c) {
    auto w = cops.at(b, c);
    auto wt = cops.at(smash.ten(a, b), smash.ten(a, c));
    return wt.copair(smash.lten(a, w.i0), smash.lten(a, w.i1));
  }));
  M.dR = memo_fam(Fam3([C, cops, smash](Obj a, Obj b, Obj c) {
    auto w = cops.at(a, b);
    auto wt = cops.at(smash.ten(a, c), smash.ten(b, c));
    return wt.copair(smash.rten(w.i0, c), smash.rten(w.i1, c));
  }));
  auto invert3 = [C](Fam3 f, const char* which) {
    std::string w(which);
    return memo_fam(Fam3([C, f, w](Obj a, Obj b, Obj c) {
      auto inv = C->find_inverse(f(a, b, c));
      if (!inv)
        throw InputError("distributivity map " + w + " is not invertible at (" +
                         C->obj_name(a) + "," + C->obj_name(b) + "," +
                         C->obj_name(c) + ")");
      return *inv;
    }));
  };
  M.dL_inv = invert3(M.dL, "dL");
  M.dR_inv = invert3(M.dR, "dR");

  M.uL = memo_fam(Fam1([cops, smash, zero](Obj a) {
    return cops.cobang(smash.ten(zero, a));
  }));
  M.uR = memo_fam(Fam1([cops, smash, zero](Obj a) {
    return cops.cobang(smash.ten(a, zero));
  }));
  auto invert1 = [C, M](Fam1 f, bool left) {
    return memo_fam(Fam1([C, M, f, left](Obj a) {
      Obj x = left ? M.smash.ten(M.zero, a) : M.smash.ten(a, M.zero);
      Mor inv = M.bang(x);
      if (C->compose(inv, f(a)) != C->identity(x))
        throw InputError("zero absorption fails at " + C->obj_name(a) +
                         ": zero (x) A is not the zero object");
      return inv;
    }));
  };
  M.uL_inv = invert1(M.uL, true);
  M.uR_inv = invert1(M.uR, false);
  return M;
}

std::vector<LawReport> check_distributive_smc(const DistributiveSmcWithZero& M,
                                              const std::vector<Obj>& objs) {
  auto C = M.C;
  monoidal::CheckOptions mopt;
  std::vector<LawReport> out = monoidal::check_monoidal_laws(M.smash, objs, mopt);

  LawChecker ck(*C);
  for (Obj a : objs)
    ck.check_that("smc0:zero_terminal", {a}, C->hom(a, M.zero).size() == 1,
                  "|hom(A, zero)|", "1");
  for (Obj a : objs) {
    ck.check_eq("smc0:uL_iso", {a}, C->compose(M.uL(a), M.uL_inv(a)),
                "uL(A); uL_inv(A)", C->identity(M.zero), "1_zero");
    ck.check_eq("smc0:uL_iso", {a}, C->compose(M.uL_inv(a), M.uL(a)),
                "uL_inv(A); uL(A)", C->identity(M.smash.ten(M.zero, a)),
                "1_{zero (x) A}");
    ck.check_eq("smc0:uR_iso", {a}, C->compose(M.uR(a), M.uR_inv(a)),
                "uR(A); uR_inv(A)", C->identity(M.zero), "1_zero");
    ck.check_eq("smc0:uR_iso", {a}, C->compose(M.uR_inv(a), M.uR(a)),
                "uR_inv(A); uR(A)", C->identity(M.smash.ten(a, M.zero)),
                "1_{A (x) zero}");
  }
  for (Obj a : objs)
    for (Obj b : objs)
      for (Obj c : objs) {
        Mor dl = M.dL(a, b, c), dli = M.dL_inv(a, b, c);
        ck.check_eq("smc0:dL_iso", {a, b, c}, C->compose(dl, dli),
                    "dL; dL_inv", C->identity(C->dom(dl)), "1");
        ck.check_eq("smc0:dL_iso", {a, b, c}, C->compose(dli, dl),
                    "dL_inv; dL", C->identity(C->cod(dl)), "1");
        Mor dr = M.dR(a, b, c), dri = M.dR_inv(a, b, c);
        ck.check_eq("smc0:dR_iso", {a, b, c}, C->compose(dr, dri),
                    "dR; dR_inv", C->identity(C->dom(dr)), "1");
        ck.check_eq("smc0:dR_iso", {a, b, c}, C->compose(dri, dr),
                    "dR_inv; dR", C->identity(C->cod(dr)), "1");
      }

  // Naturality of the canonical distributivity maps.
  auto sample = strided_sample(objs, mopt.nat_objects);
  auto mors = fincat::morphisms_between(*C, sample);
  auto P = monoidal::derive_cocartesian_monoidal(M.cops);
  for (Mor f : mors)
    for (Mor g : mors)
      for (Mor h : mors) {
        Obj x = C->dom(f), x2 = C->cod(f);
        Obj y = C->dom(g), y2 = C->cod(g);
        Obj z = C->dom(h), z2 = C->cod(h);
        {
          Path lhs(*C), rhs(*C);
          lhs.step("(f(x)g) + (f(x)h)",
                   P.ten_mor(M.smash.ten_mor(f, g), M.smash.ten_mor(f, h)))
              .step("dL(X',Y',Z')", M.dL(x2, y2, z2));
          rhs.step("dL(X,Y,Z)", M.dL(x, y, z))
              .step("f (x) (g+h)", M.smash.ten_mor(f, P.ten_mor(g, h)));
          ck.check("smc0:dL_natural", {x, y, z}, lhs, rhs);
        }
        {
          Path lhs(*C), rhs(*C);
          lhs.step("(f(x)h) + (g(x)h)",
                   P.ten_mor(M.smash.ten_mor(f, h), M.smash.ten_mor(g, h)))
              .step("dR(X',Y',Z')", M.dR(x2, y2, z2));
          rhs.step("dR(X,Y,Z)", M.dR(x, y, z))
              .step("(f+g) (x) h", M.smash.ten_mor(P.ten_mor(f, g), h));
          ck.check("smc0:dR_natural", {x, y, z}, lhs, rhs);
        }
      }
  append_reports(out, ck.take());
  return out;
}

ldc::LdcStructure wedge_construction(const DistributiveSmcWithZero& M) {
  auto C = M.C;
  auto P = monoidal::derive_cocartesian_monoidal(M.cops);
  const auto S = M.smash;
  auto cop = M.cops.at;
  auto cobang = M.cops.cobang;
  auto plus = [P](Obj a, Obj b) { return P.ten(a, b); };
  auto i0 = [cop](Obj a, Obj b) { return cop(a, b).i0; };
  auto i1 = [cop](Obj a, Obj b) { return cop(a, b).i1; };

  monoidal::MonoidalStructure W;
  W.C = C;
  W.unit = M.zero;
  W.ten = [P, S](Obj a, Obj b) { return P.ten(P.ten(a, b), S.ten(a, b)); };
  W.ten_mor = [P, S](Mor f, Mor g) {
    return P.ten_mor(P.ten_mor(f, g), S.ten_mor(f, g));
  };
  W.assoc_lr = memo_fam(Fam3([C, P, S, M, cop, plus, i0, i1](Obj a, Obj b,
                                                             Obj c) {
    Obj ab = plus(a, b), tab = S.ten(a, b), wab = plus(ab, tab);
    Obj bc = plus(b, c), tbc = S.ten(b, c), wbc = plus(bc, tbc);
    Obj awbc = plus(a, wbc), tawbc = S.ten(a, wbc);
    Mor out0 = i0(awbc, tawbc), out1 = i1(awbc, tawbc);
    Mor leg_A = C->compose_all({i0(a, wbc), out0});
    Mor leg_B = C->compose_all({i0(b, c), i0(bc, tbc), i1(a, wbc), out0});
    Mor leg_C = C->compose_all({i1(b, c), i0(bc, tbc), i1(a, wbc), out0});
    Mor leg_AB =
        C->compose_all({S.lten(a, i0(b, c)), S.lten(a, i0(bc, tbc)), out1});
    Mor chi_AC =
        C->compose_all({S.lten(a, i1(b, c)), S.lten(a, i0(bc, tbc)), out1});
    Mor chi_BC = C->compose_all({i1(bc, tbc), i1(a, wbc), out0});
    Mor chi_ABC =
        C->compose_all({S.assoc_lr(a, b, c), S.lten(a, i1(bc, tbc)), out1});
    Mor chi_inner = cop(S.ten(a, c), S.ten(b, c)).copair(chi_AC, chi_BC);
    Mor chi = cop(plus(S.ten(a, c), S.ten(b, c)), S.ten(tab, c))
                  .copair(chi_inner, chi_ABC);
    Mor leg_tenC = C->compose_all(
        {M.dR_inv(ab, tab, c),
         P.ten_mor(M.dR_inv(a, b, c), C->identity(S.ten(tab, c))), chi});
    Mor m1 = cop(a, b).copair(leg_A, leg_B);
    Mor m2 = cop(ab, tab).copair(m1, leg_AB);
    Mor m3 = cop(wab, c).copair(m2, leg_C);
    return cop(plus(wab, c), S.ten(wab, c)).copair(m3, leg_tenC);
  }));

  W.assoc_rl = memo_fam(Fam3([C, P, S, M, cop, plus, i0, i1](Obj a, Obj b,
                                                             Obj c) {
    Obj ab = plus(a, b), tab = S.ten(a, b), wab = plus(ab, tab);
    Obj bc = plus(b, c), tbc = S.ten(b, c), wbc = plus(bc, tbc);
    Obj wabc = plus(wab, c), twabc = S.ten(wab, c);
    Mor out0 = i0(wabc, twabc), out1 = i1(wabc, twabc);
    Mor into_wab = C->compose(i0(wab, c), out0);
    Mor leg_A = C->compose_all({i0(a, b), i0(ab, tab), into_wab});
    Mor leg_B = C->compose_all({i1(a, b), i0(ab, tab), into_wab});
    Mor leg_C = C->compose(i1(wab, c), out0);
    Mor leg_BC = C->compose_all(
        {S.rten(C->compose(i1(a, b), i0(ab, tab)), c), out1});
    Mor sub_AB = C->compose_all({i1(ab, tab), into_wab});
    Mor sub_AC = C->compose_all(
        {S.rten(C->compose(i0(a, b), i0(ab, tab)), c), out1});
    Mor from_AxBC = C->compose(
        M.dL_inv(a, b, c),
        cop(S.ten(a, b), S.ten(a, c)).copair(sub_AB, sub_AC));
    Mor from_AxTBC = C->compose_all(
        {S.assoc_rl(a, b, c), S.rten(i1(ab, tab), c), out1});
    Mor leg_AxWBC = C->compose(
        M.dL_inv(a, bc, tbc),
        cop(S.ten(a, bc), S.ten(a, tbc)).copair(from_AxBC, from_AxTBC));
    Mor n1 = cop(b, c).copair(leg_B, leg_C);
    Mor n2 = cop(bc, tbc).copair(n1, leg_BC);
    Mor n3 = cop(a, wbc).copair(leg_A, n2);
    return cop(plus(a, wbc), S.ten(a, wbc)).copair(n3, leg_AxWBC);
  }));

  Obj zero = M.zero;
  W.unitR_in = memo_fam(Fam1([C, S, plus, i0, zero](Obj a) {
    return C->compose(i0(a, zero), i0(plus(a, zero), S.ten(a, zero)));
  }));
  W.unitR_out = memo_fam(Fam1([C, S, M, cop, plus, cobang, zero](Obj a) {
    Mor onPlus = cop(a, zero).copair(C->identity(a), cobang(a));
    Mor onTen = C->compose(M.uR_inv(a), cobang(a));
    return cop(plus(a, zero), S.ten(a, zero)).copair(onPlus, onTen);
  }));
  W.unitL_in = memo_fam(Fam1([C, S, plus, i0, i1, zero](Obj a) {
    return C->compose(i1(zero, a), i0(plus(zero, a), S.ten(zero, a)));
  }));
  W.unitL_out = memo_fam(Fam1([C, S, M, cop, plus, cobang, zero](Obj a) {
    Mor onPlus = cop(zero, a).copair(cobang(a), C->identity(a));
    Mor onTen = C->compose(M.uL_inv(a), cobang(a));
    return cop(plus(zero, a), S.ten(zero, a)).copair(onPlus, onTen);
  }));
  W.sym = memo_fam(Fam2([C, P, S, cop, plus, i0, i1](Obj a, Obj b) {
    Obj ba = plus(b, a), tba = S.ten(b, a);
    return cop(plus(a, b), S.ten(a, b))
        .copair(C->compose(P.sym(a, b), i0(ba, tba)),
                C->compose(S.sym(a, b), i1(ba, tba)));
  }));

  ldc::LdcStructure L;
  L.tensor = W;
  L.par = P;

  L.deltaL = memo_fam(Fam3([C, P, S, M, cop, plus, i0, i1,
                            cobang](Obj a, Obj b, Obj c) {
    Obj bc = plus(b, c);
    Obj ab = plus(a, b), tab = S.ten(a, b), wab = plus(ab, tab);
    Mor leg_A = C->compose_all({i0(a, b), i0(ab, tab), i0(wab, c)});
    Mor leg_B = C->compose_all({i1(a, b), i0(ab, tab), i0(wab, c)});
    Mor leg_C = i1(wab, c);
    Mor collapseC = P.ten_mor(C->identity(b), M.bang(c));
    Mor unitB = cop(b, M.zero).copair(C->identity(b), cobang(b));
    Mor leg_T = C->compose_all({S.lten(a, collapseC), S.lten(a, unitB),
                                i1(ab, tab), i0(wab, c)});
    Mor inner =
        cop(a, bc).copair(leg_A, cop(b, c).copair(leg_B, leg_C));
    return cop(plus(a, bc), S.ten(a, bc)).copair(inner, leg_T);
  }));

  L.deltaR = memo_fam(Fam3([C, P, S, M, cop, plus, i0, i1,
                            cobang](Obj a, Obj b, Obj c) {
    Obj ab = plus(a, b);
    Obj bc = plus(b, c), tbc = S.ten(b, c), wbc = plus(bc, tbc);
    Mor leg_A = i0(a, wbc);
    Mor leg_B = C->compose_all({i0(b, c), i0(bc, tbc), i1(a, wbc)});
    Mor leg_C = C->compose_all({i1(b, c), i0(bc, tbc), i1(a, wbc)});
    Mor collapseA = P.ten_mor(M.bang(a), C->identity(b));
    Mor unitB = cop(M.zero, b).copair(cobang(b), C->identity(b));
    Mor leg_T = C->compose_all({S.rten(collapseA, c), S.rten(unitB, c),
                                i1(bc, tbc), i1(a, wbc)});
    Mor inner =
        cop(ab, c).copair(cop(a, b).copair(leg_A, leg_B), leg_C);
    return cop(plus(ab, c), S.ten(ab, c)).copair(inner, leg_T);
  }));

  return L;
}

}  // namespace ldcw::construct
