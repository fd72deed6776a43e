#include "ldcw/fincat.hpp"

#include <algorithm>

namespace ldcw::fincat {

// ----------------------------------------------------------------- table ----

TableCategory::TableCategory(TableCategoryData data, bool strict)
    : data_(std::move(data)) {
  int nobj = (int)data_.objects.size();
  int nmor = (int)data_.morphisms.size();
  if ((int)data_.identities.size() != nobj)
    throw InputError("table category: identities must cover every object");
  for (int i = 0; i < nobj; ++i) {
    int id = data_.identities[i];
    if (id < 0 || id >= nmor)
      throw InputError("table category: identity of " + data_.objects[i] +
                       " is not a morphism");
    if (data_.morphisms[id].dom != i || data_.morphisms[id].cod != i)
      throw InputError("table category: identity of " + data_.objects[i] +
                       " has wrong endpoints");
  }
  for (const auto& m : data_.morphisms) {
    if (m.dom < 0 || m.dom >= nobj || m.cod < 0 || m.cod >= nobj)
      throw InputError("table category: morphism " + m.name +
                       " has unknown endpoint");
  }
  for (const auto& [pair, fg] : data_.composition) {
    auto [f, g] = pair;
    if (f < 0 || f >= nmor || g < 0 || g >= nmor || fg < 0 || fg >= nmor)
      throw InputError("table category: composition entry out of range");
    if (data_.morphisms[f].cod != data_.morphisms[g].dom)
      throw InputError("table category: composition entry for non-composable " +
                       data_.morphisms[f].name + ";" + data_.morphisms[g].name);
    if (data_.morphisms[fg].dom != data_.morphisms[f].dom ||
        data_.morphisms[fg].cod != data_.morphisms[g].cod)
      throw InputError("table category: composite " + data_.morphisms[fg].name +
                       " has wrong endpoints");
  }
  if (strict) {
    for (int f = 0; f < nmor; ++f)
      for (int g = 0; g < nmor; ++g)
        if (data_.morphisms[f].cod == data_.morphisms[g].dom &&
            !data_.composition.count({f, g}))
          throw InputError("table category: missing composition entry " +
                           data_.morphisms[f].name + ";" +
                           data_.morphisms[g].name);
  }
}

Mor TableCategory::compose(Mor f, Mor g) const {
  require_composable(f, g);
  auto it = data_.composition.find({f.id, g.id});
  if (it == data_.composition.end())
    throw InputError("table category: no composition entry for " +
                     mor_name(f) + ";" + mor_name(g));
  return Mor{it->second};
}

std::vector<Mor> TableCategory::hom(Obj a, Obj b) const {
  if (a.id < 0 || a.id >= num_objects() || b.id < 0 || b.id >= num_objects())
    throw InputError("table category: unknown object id");
  std::vector<Mor> out;
  for (int i = 0; i < (int)data_.morphisms.size(); ++i)
    if (data_.morphisms[i].dom == a.id && data_.morphisms[i].cod == b.id)
      out.push_back(Mor{i});
  return out;
}

// ----------------------------------------------------------------- poset ----

PosetCategory::PosetCategory(std::vector<std::string> names,
                             std::vector<std::vector<bool>> leq)
    : names_(std::move(names)), leq_(std::move(leq)) {
  int n = (int)names_.size();
  if ((int)leq_.size() != n)
    throw InputError("poset category: leq matrix shape mismatch");
  for (const auto& row : leq_)
    if ((int)row.size() != n)
      throw InputError("poset category: leq matrix shape mismatch");
  for (int a = 0; a < n; ++a) {
    if (!leq_[a][a]) throw InputError("poset category: order not reflexive");
    for (int b = 0; b < n; ++b) {
      if (a != b && leq_[a][b] && leq_[b][a])
        throw InputError("poset category: order not antisymmetric");
      for (int c = 0; c < n; ++c)
        if (leq_[a][b] && leq_[b][c] && !leq_[a][c])
          throw InputError("poset category: order not transitive");
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (leq_[a][b]) {
        mor_index_[{a, b}] = (int)mors_.size();
        mors_.push_back({a, b});
      }
}

Mor PosetCategory::identity(Obj a) const { return arrow(a, a); }

Mor PosetCategory::arrow(Obj a, Obj b) const {
  auto it = mor_index_.find({a.id, b.id});
  if (it == mor_index_.end())
    throw InputError("poset category: " + obj_name(a) + " is not below " +
                     obj_name(b));
  return Mor{it->second};
}

Mor PosetCategory::compose(Mor f, Mor g) const {
  require_composable(f, g);
  return arrow(dom(f), cod(g));
}

std::vector<Mor> PosetCategory::hom(Obj a, Obj b) const {
  if (a.id < 0 || a.id >= num_objects() || b.id < 0 || b.id >= num_objects())
    throw InputError("poset category: unknown object id");
  std::vector<Mor> out;
  if (leq_[a.id][b.id]) out.push_back(arrow(a, b));
  return out;
}

std::string PosetCategory::mor_name(Mor f) const {
  auto [a, b] = mors_.at(f.id);
  return names_[a] + "<=" + names_[b];
}

// --------------------------------------------------------------- product ----

ProductCategory::ProductCategory(CatPtr left, CatPtr right,
                                 const std::vector<Obj>& lobjs,
                                 const std::vector<Obj>& robjs)
    : left_(std::move(left)), right_(std::move(right)) {
  for (Obj a : lobjs)
    for (Obj x : robjs) pair_obj(a, x);
}

Obj ProductCategory::pair_obj(Obj a, Obj x) const {
  auto key = std::make_pair(a.id, x.id);
  auto it = obj_index_.find(key);
  if (it != obj_index_.end()) return Obj{it->second};
  int id = (int)obj_pairs_.size();
  obj_index_[key] = id;
  obj_pairs_.push_back(key);
  return Obj{id};
}

Mor ProductCategory::pair_mor(Mor f, Mor g) const {
  auto key = std::make_pair(f.id, g.id);
  auto it = mor_index_.find(key);
  if (it != mor_index_.end()) return Mor{it->second};
  int id = (int)mor_pairs_.size();
  mor_index_[key] = id;
  mor_pairs_.push_back(key);
  return Mor{id};
}

std::pair<Obj, Obj> ProductCategory::split_obj(Obj p) const {
  auto [a, x] = obj_pairs_.at(p.id);
  return {Obj{a}, Obj{x}};
}

std::pair<Mor, Mor> ProductCategory::split_mor(Mor m) const {
  auto [f, g] = mor_pairs_.at(m.id);
  return {Mor{f}, Mor{g}};
}

Obj ProductCategory::dom(Mor f) const {
  auto [l, r] = split_mor(f);
  return pair_obj(left_->dom(l), right_->dom(r));
}

Obj ProductCategory::cod(Mor f) const {
  auto [l, r] = split_mor(f);
  return pair_obj(left_->cod(l), right_->cod(r));
}

Mor ProductCategory::identity(Obj a) const {
  auto [l, r] = split_obj(a);
  return pair_mor(left_->identity(l), right_->identity(r));
}

Mor ProductCategory::compose(Mor f, Mor g) const {
  require_composable(f, g);
  auto [fl, fr] = split_mor(f);
  auto [gl, gr] = split_mor(g);
  return pair_mor(left_->compose(fl, gl), right_->compose(fr, gr));
}

std::vector<Mor> ProductCategory::hom(Obj a, Obj b) const {
  auto [al, ar] = split_obj(a);
  auto [bl, br] = split_obj(b);
  std::vector<Mor> out;
  for (Mor f : left_->hom(al, bl))
    for (Mor g : right_->hom(ar, br)) out.push_back(pair_mor(f, g));
  return out;
}

std::string ProductCategory::obj_name(Obj a) const {
  auto [l, r] = split_obj(a);
  return "(" + left_->obj_name(l) + "," + right_->obj_name(r) + ")";
}

std::string ProductCategory::mor_name(Mor f) const {
  auto [l, r] = split_mor(f);
  return "(" + left_->mor_name(l) + "," + right_->mor_name(r) + ")";
}

// ----------------------------------------------------------- subcategory ----

FullSubcategory::FullSubcategory(CatPtr base, std::function<bool(Obj)> pred,
                                 const std::vector<Obj>& seed)
    : base_(std::move(base)), pred_(std::move(pred)) {
  for (Obj a : seed) from_base(a);
}

Obj FullSubcategory::from_base(Obj base_obj) const {
  auto it = index_.find(base_obj.id);
  if (it != index_.end()) return Obj{it->second};
  if (pred_ && !pred_(base_obj))
    throw HardFailure("full subcategory: object " + base_->obj_name(base_obj) +
                      " does not satisfy the membership predicate");
  int id = (int)base_objs_.size();
  index_[base_obj.id] = id;
  base_objs_.push_back(base_obj.id);
  return Obj{id};
}

// -------------------------------------------------------------- functors ----

Functor identity_functor(CatPtr C) {
  Functor F;
  F.source = C;
  F.target = C;
  F.obj = [](Obj a) { return a; };
  F.mor = [](Mor f) { return f; };
  return F;
}

Functor compose_functors(const Functor& F, const Functor& G) {
  Functor H;
  H.source = F.source;
  H.target = G.target;
  auto fo = F.obj, go = G.obj;
  auto fm = F.mor, gm = G.mor;
  H.obj = [fo, go](Obj a) { return go(fo(a)); };
  H.mor = [fm, gm](Mor f) { return gm(fm(f)); };
  return H;
}

std::vector<Mor> morphisms_between(const Category& C,
                                   const std::vector<Obj>& objs) {
  std::vector<Mor> out;
  for (Obj a : objs)
    for (Obj b : objs)
      for (Mor f : C.hom(a, b)) out.push_back(f);
  return out;
}

std::vector<LawReport> check_functor(const Functor& F,
                                     const std::vector<Obj>& objs) {
  const Category& S = *F.source;
  const Category& T = *F.target;
  LawChecker chk(T);
  for (Obj a : objs) {
    chk.check_eq("functor:identity", {F.obj(a)}, F.mor(S.identity(a)),
                 "F(id)", T.identity(F.obj(a)), "id(F(A))");
  }
  std::vector<Mor> mors = morphisms_between(S, objs);
  for (Mor f : mors) {
    bool ok = T.dom(F.mor(f)) == F.obj(S.dom(f)) &&
              T.cod(F.mor(f)) == F.obj(S.cod(f));
    chk.check_that("functor:endpoints", {F.obj(S.dom(f)), F.obj(S.cod(f))}, ok,
                   "dom/cod of F(" + S.mor_name(f) + ")",
                   "F(dom)/F(cod)");
  }
  for (Mor f : mors)
    for (Mor g : mors) {
      if (S.cod(f) != S.dom(g)) continue;
      chk.check_eq("functor:composition",
                   {F.obj(S.dom(f)), F.obj(S.cod(f)), F.obj(S.cod(g))},
                   F.mor(S.compose(f, g)),
                   "F(" + S.mor_name(f) + ";" + S.mor_name(g) + ")",
                   T.compose(F.mor(f), F.mor(g)), "F(f);F(g)");
    }
  return chk.take();
}

std::vector<LawReport> check_natural(const NaturalTransformation& eta,
                                     const std::vector<Obj>& objs) {
  const Category& S = *eta.F.source;
  const Category& T = *eta.F.target;
  LawChecker chk(T);
  for (Obj a : objs)
    for (Obj b : objs)
      for (Mor f : S.hom(a, b)) {
        Path lhs(T), rhs(T);
        lhs.step("component(" + S.obj_name(a) + ")", eta.at(a))
            .step("G(" + S.mor_name(f) + ")", eta.G.mor(f));
        rhs.step("F(" + S.mor_name(f) + ")", eta.F.mor(f))
            .step("component(" + S.obj_name(b) + ")", eta.at(b));
        chk.check("natural:square", {a, b}, lhs, rhs);
      }
  return chk.take();
}

// ------------------------------------------------------------- validator ----

std::vector<LawReport> validate_category(const Category& C,
                                         const std::vector<Obj>& objs,
                                         const Bounds& bounds) {
  LawChecker chk(C);
  std::vector<Mor> mors = morphisms_between(C, objs);

  for (Mor f : mors) {
    Obj a = C.dom(f), b = C.cod(f);
    chk.check_eq("cat:identity_left", {a, b}, C.compose(C.identity(a), f),
                 "id;" + C.mor_name(f), f, C.mor_name(f));
    chk.check_eq("cat:identity_right", {a, b}, C.compose(f, C.identity(b)),
                 C.mor_name(f) + ";id", f, C.mor_name(f));
  }

  // Closure: composites have the right endpoints (composition itself throws
  // on non-composable pairs).
  for (Mor f : mors)
    for (Mor g : mors) {
      if (C.cod(f) != C.dom(g)) continue;
      Mor fg = C.compose(f, g);
      chk.check_that("cat:closure", {C.dom(f), C.cod(g)},
                     C.dom(fg) == C.dom(f) && C.cod(fg) == C.cod(g),
                     "dom/cod of " + C.mor_name(f) + ";" + C.mor_name(g),
                     "expected endpoints");
    }

  long triples = 0;
  bool budget_hit = false;
  for (Mor f : mors) {
    if (budget_hit) break;
    for (Mor g : mors) {
      if (C.cod(f) != C.dom(g)) continue;
      if (budget_hit) break;
      for (Mor h : mors) {
        if (C.cod(g) != C.dom(h)) continue;
        if (++triples > bounds.max_assoc_triples) {
          budget_hit = true;
          break;
        }
        Path lhs(C), rhs(C);
        lhs.step("(" + C.mor_name(f) + ";" + C.mor_name(g) + ")",
                 C.compose(f, g))
            .step(C.mor_name(h), h);
        rhs.step(C.mor_name(f), f)
            .step("(" + C.mor_name(g) + ";" + C.mor_name(h) + ")",
                  C.compose(g, h));
        chk.check("cat:associativity", {C.dom(f), C.cod(f), C.cod(g), C.cod(h)},
                  lhs, rhs);
      }
    }
  }
  if (budget_hit)
    chk.skip("cat:associativity", "triple budget exceeded; remainder skipped");
  else if (triples == 0)
    chk.check_that("cat:associativity", {}, true, "", "");
  return chk.take();
}

std::optional<Mor> is_isomorphism(const Category& C, Mor f) {
  return C.find_inverse(f);
}

}  // namespace ldcw::fincat
