#include "ldcw/serialize.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

namespace ldcw::serialize {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw InputError("malformed JSON");
  return j;
}

const json& field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) {
    throw InputError(std::string("missing field \"") + name + "\"");
  }
  return *it;
}

// Name index; uniquifies duplicate display names with #id suffixes so the
// written file round-trips even when an engine reuses names.
struct Namer {
  std::map<std::string, int> seen;
  std::map<int, std::string> by_id;
  std::map<std::string, int> by_name;

  std::string add(int id, std::string name) {
    if (seen.count(name)) name += "#" + std::to_string(id);
    seen[name] = 1;
    by_id[id] = name;
    by_name[name] = id;
    return name;
  }
  const std::string& name(int id) const {
    auto it = by_id.find(id);
    if (it == by_id.end()) {
      throw InputError("instance is not closed over its listed objects");
    }
    return it->second;
  }
  int id(const std::string& name, const char* what) const {
    auto it = by_name.find(name);
    if (it == by_name.end()) {
      throw InputError(std::string("unknown ") + what + " \"" + name + "\"");
    }
    return it->second;
  }
};

// Shared saver state over the full subgraph on `objs`.
struct Saver {
  const Category& C;
  std::vector<Obj> objs;
  Namer onames, mnames;
  std::vector<Mor> mors;

  Saver(const Category& c, const std::vector<Obj>& os) : C(c), objs(os) {
    for (Obj a : objs) onames.add(a.id, C.obj_name(a));
    mors = fincat::morphisms_between(C, objs);
    for (Mor m : mors) mnames.add(m.id, C.mor_name(m));
  }

  json category() const {
    json j;
    json jobjs = json::array();
    for (Obj a : objs) jobjs.push_back(onames.name(a.id));
    j["objects"] = jobjs;
    json jmors = json::array();
    for (Mor m : mors) {
      jmors.push_back({{"name", mnames.name(m.id)},
                       {"dom", onames.name(C.dom(m).id)},
                       {"cod", onames.name(C.cod(m).id)}});
    }
    j["morphisms"] = jmors;
    json jid = json::object();
    for (Obj a : objs) {
      jid[onames.name(a.id)] = mnames.name(C.identity(a).id);
    }
    j["identities"] = jid;
    json jcomp = json::array();
    for (Mor f : mors) {
      for (Mor g : mors) {
        if (C.cod(f) != C.dom(g)) continue;
        jcomp.push_back({mnames.name(f.id), mnames.name(g.id),
                         mnames.name(C.compose(f, g).id)});
      }
    }
    j["composition"] = jcomp;
    return j;
  }
};

}  // namespace

// ----------------------------------------------------------------- load ----

fincat::TableCategoryData category_from_json(const std::string& text) {
  json j = parse(text);
  fincat::TableCategoryData d;
  std::map<std::string, int> oid, mid;
  for (const auto& o : field(j, "objects")) {
    std::string name = o.get<std::string>();
    if (oid.count(name)) throw InputError("duplicate object \"" + name + "\"");
    oid[name] = (int)d.objects.size();
    d.objects.push_back(name);
  }
  for (const auto& m : field(j, "morphisms")) {
    fincat::TableCategoryData::M e;
    e.name = field(m, "name").get<std::string>();
    if (mid.count(e.name)) {
      throw InputError("duplicate morphism \"" + e.name + "\"");
    }
    auto oit = oid.find(field(m, "dom").get<std::string>());
    if (oit == oid.end()) throw InputError("morphism \"" + e.name + "\": unknown dom");
    e.dom = oit->second;
    oit = oid.find(field(m, "cod").get<std::string>());
    if (oit == oid.end()) throw InputError("morphism \"" + e.name + "\": unknown cod");
    e.cod = oit->second;
    mid[e.name] = (int)d.morphisms.size();
    d.morphisms.push_back(e);
  }
  auto mor = [&](const std::string& name) {
    auto it = mid.find(name);
    if (it == mid.end()) throw InputError("unknown morphism \"" + name + "\"");
    return it->second;
  };
  d.identities.assign(d.objects.size(), -1);
  for (const auto& [oname, mname] : field(j, "identities").items()) {
    auto it = oid.find(oname);
    if (it == oid.end()) throw InputError("identities: unknown object \"" + oname + "\"");
    d.identities[it->second] = mor(mname.get<std::string>());
  }
  for (size_t i = 0; i < d.identities.size(); ++i) {
    if (d.identities[i] < 0) {
      throw InputError("identities: no identity for \"" + d.objects[i] + "\"");
    }
  }
  for (const auto& t : field(j, "composition")) {
    if (!t.is_array() || t.size() != 3) {
      throw InputError("composition: entries must be [f, g, fg] triples");
    }
    d.composition[{mor(t[0].get<std::string>()), mor(t[1].get<std::string>())}] =
        mor(t[2].get<std::string>());
  }
  return d;
}

std::string category_to_json(const Category& C, const std::vector<Obj>& objs) {
  return Saver(C, objs).category().dump(2) + "\n";
}

// ----------------------------------------------------------------- cldc ----

CldcFile cldc_from_json(const std::string& text) {
  json j = parse(text);
  CldcFile out;
  auto C = std::make_shared<fincat::TableCategory>(category_from_json(text));
  out.C = C;
  out.objs = C->objects();
  auto oid = [&](const json& v, const char* what) {
    std::string name = v.get<std::string>();
    for (Obj a : out.objs) {
      if (C->obj_name(a) == name) return a;
    }
    throw InputError(std::string(what) + ": unknown object \"" + name + "\"");
  };
  auto mid = [&](const json& v, const char* what) {
    std::string name = v.get<std::string>();
    int n = C->num_morphisms();
    for (int i = 0; i < n; ++i) {
      if (C->mor_name(Mor{i}) == name) return Mor{i};
    }
    throw InputError(std::string(what) + ": unknown morphism \"" + name + "\"");
  };

  Obj terminal = oid(field(j, "terminal"), "terminal");
  Obj initial = oid(field(j, "initial"), "initial");
  // Unique-map families; a non-singleton hom-set disproves the claim.
  auto unique_to = [C](Obj a, Obj t, const char* what) {
    auto h = C->hom(a, t);
    if (h.size() != 1) {
      throw InputError(std::string(what) + ": |hom(" + C->obj_name(a) + "," +
                       C->obj_name(t) + ")| = " + std::to_string(h.size()) +
                       ", expected 1");
    }
    return h[0];
  };

  std::map<std::pair<int, int>, limits::ProductWitness> ptab;
  for (const auto& p : field(j, "products")) {
    limits::ProductWitness w;
    w.left = oid(field(p, "left"), "products.left");
    w.right = oid(field(p, "right"), "products.right");
    w.apex = oid(field(p, "apex"), "products.apex");
    w.pi0 = mid(field(p, "pi0"), "products.pi0");
    w.pi1 = mid(field(p, "pi1"), "products.pi1");
    Mor pi0 = w.pi0, pi1 = w.pi1;
    Obj apex = w.apex;
    // Pairing recovered by unique search against the table.
    w.pair = [C, pi0, pi1, apex](Mor f, Mor g) {
      std::optional<Mor> found;
      for (Mor h : C->hom(C->dom(f), apex)) {
        if (C->compose(h, pi0) == f && C->compose(h, pi1) == g) {
          if (found) throw InputError("products: pairing not unique");
          found = h;
        }
      }
      if (!found) throw InputError("products: no pairing morphism");
      return *found;
    };
    ptab[{w.left.id, w.right.id}] = w;
  }
  std::map<std::pair<int, int>, limits::CoproductWitness> ctab;
  for (const auto& p : field(j, "coproducts")) {
    limits::CoproductWitness w;
    w.left = oid(field(p, "left"), "coproducts.left");
    w.right = oid(field(p, "right"), "coproducts.right");
    w.apex = oid(field(p, "apex"), "coproducts.apex");
    w.i0 = mid(field(p, "iota0"), "coproducts.iota0");
    w.i1 = mid(field(p, "iota1"), "coproducts.iota1");
    Mor i0 = w.i0, i1 = w.i1;
    Obj apex = w.apex;
    w.copair = [C, i0, i1, apex](Mor f, Mor g) {
      std::optional<Mor> found;
      for (Mor h : C->hom(apex, C->cod(f))) {
        if (C->compose(i0, h) == f && C->compose(i1, h) == g) {
          if (found) throw InputError("coproducts: copairing not unique");
          found = h;
        }
      }
      if (!found) throw InputError("coproducts: no copairing morphism");
      return *found;
    };
    ctab[{w.left.id, w.right.id}] = w;
  }

  out.prods.C = C;
  out.prods.terminal = terminal;
  out.prods.bang = memo_fam(Fam1([C, terminal, unique_to](Obj a) {
    return unique_to(a, terminal, "terminal");
  }));
  out.prods.at = limits::memo_products([C, ptab](Obj a, Obj b) {
    auto it = ptab.find({a.id, b.id});
    if (it == ptab.end()) {
      throw InputError("products: no table entry for (" + C->obj_name(a) +
                       "," + C->obj_name(b) + ")");
    }
    return it->second;
  });
  out.cops.C = C;
  out.cops.initial = initial;
  out.cops.cobang = memo_fam(Fam1([C, initial, unique_to](Obj a) {
    auto h = C->hom(initial, a);
    if (h.size() != 1) {
      throw InputError(std::string("initial: |hom(") + C->obj_name(initial) +
                       "," + C->obj_name(a) + ")| = " +
                       std::to_string(h.size()) + ", expected 1");
    }
    return h[0];
  }));
  out.cops.at = limits::memo_coproducts([C, ctab](Obj a, Obj b) {
    auto it = ctab.find({a.id, b.id});
    if (it == ctab.end()) {
      throw InputError("coproducts: no table entry for (" + C->obj_name(a) +
                       "," + C->obj_name(b) + ")");
    }
    return it->second;
  });

  auto load_delta = [&](const char* name) -> std::optional<Fam3> {
    auto it = j.find(name);
    if (it == j.end()) return std::nullopt;
    auto tab = std::make_shared<std::map<std::tuple<int, int, int>, Mor>>();
    for (const auto& t : *it) {
      if (!t.is_array() || t.size() != 4) {
        throw InputError(std::string(name) + ": entries must be [A, B, C, mor]");
      }
      (*tab)[{oid(t[0], name).id, oid(t[1], name).id, oid(t[2], name).id}] =
          mid(t[3], name);
    }
    std::string nm = name;
    return Fam3([C, tab, nm](Obj a, Obj b, Obj c) {
      auto it2 = tab->find({a.id, b.id, c.id});
      if (it2 == tab->end()) {
        throw InputError(nm + ": no table entry for (" + C->obj_name(a) + "," +
                         C->obj_name(b) + "," + C->obj_name(c) + ")");
      }
      return it2->second;
    });
  };
  out.deltaL = load_delta("deltaL");
  out.deltaR = load_delta("deltaR");
  return out;
}

std::string cldc_to_json(const cldc::CldcStructure& X) {
  Saver sv(*X.C, X.objs);
  json j = sv.category();
  j["terminal"] = sv.onames.name(X.top().id);
  j["initial"] = sv.onames.name(X.bot().id);
  json jp = json::array(), jc = json::array();
  for (Obj a : X.objs) {
    for (Obj b : X.objs) {
      auto pw = X.prods.at(a, b);
      jp.push_back({{"left", sv.onames.name(a.id)},
                    {"right", sv.onames.name(b.id)},
                    {"apex", sv.onames.name(pw.apex.id)},
                    {"pi0", sv.mnames.name(pw.pi0.id)},
                    {"pi1", sv.mnames.name(pw.pi1.id)}});
      auto cw = X.cops.at(a, b);
      jc.push_back({{"left", sv.onames.name(a.id)},
                    {"right", sv.onames.name(b.id)},
                    {"apex", sv.onames.name(cw.apex.id)},
                    {"iota0", sv.mnames.name(cw.i0.id)},
                    {"iota1", sv.mnames.name(cw.i1.id)}});
    }
  }
  j["products"] = jp;
  j["coproducts"] = jc;
  json jl = json::array(), jr = json::array();
  for (Obj a : X.objs) {
    for (Obj b : X.objs) {
      for (Obj c : X.objs) {
        jl.push_back({sv.onames.name(a.id), sv.onames.name(b.id),
                      sv.onames.name(c.id),
                      sv.mnames.name(X.L.deltaL(a, b, c).id)});
        jr.push_back({sv.onames.name(a.id), sv.onames.name(b.id),
                      sv.onames.name(c.id),
                      sv.mnames.name(X.L.deltaR(a, b, c).id)});
      }
    }
  }
  j["deltaL"] = jl;
  j["deltaR"] = jr;
  return j.dump(2) + "\n";
}

// -------------------------------------------------------------- lattice ----

std::string bdl_to_json(const construct::FiniteBDL& L) {
  json j;
  json el = json::array();
  for (int i = 0; i < L.n; ++i) {
    el.push_back(L.elems.empty() ? std::to_string(i) : L.elems[i]);
  }
  j["elements"] = el;
  json leq = json::array();
  for (int x = 0; x < L.n; ++x) {
    for (int y = 0; y < L.n; ++y) {
      if (x != y && L.leq[x][y]) leq.push_back({el[x], el[y]});
    }
  }
  j["leq"] = leq;
  return j.dump(2) + "\n";
}

// -------------------------------------------------------------- functor ----

FunctorFile functor_from_json(const std::string& text) {
  json j = parse(text);
  FunctorFile out;
  for (const auto& [k, v] : field(j, "objects").items()) {
    out.objects[k] = v.get<std::string>();
  }
  for (const auto& [k, v] : field(j, "morphisms").items()) {
    out.morphisms[k] = v.get<std::string>();
  }
  return out;
}

ResolvedFunctor resolve_functor(const FunctorFile& ff, CatPtr source,
                                const std::vector<Obj>& source_objs,
                                CatPtr target,
                                const std::vector<Obj>& target_objs) {
  auto omap = std::make_shared<std::map<int, Obj>>();
  auto mmap = std::make_shared<std::map<int, Mor>>();
  auto find_obj = [](const Category& C, const std::vector<Obj>& objs,
                     const std::string& name) -> std::optional<Obj> {
    for (Obj a : objs) {
      if (C.obj_name(a) == name) return a;
    }
    return std::nullopt;
  };
  auto tmors = fincat::morphisms_between(*target, target_objs);
  auto find_mor = [&](const std::string& name) -> std::optional<Mor> {
    for (Mor m : tmors) {
      if (target->mor_name(m) == name) return m;
    }
    return std::nullopt;
  };
  for (Obj a : source_objs) {
    auto it = ff.objects.find(source->obj_name(a));
    if (it == ff.objects.end()) {
      throw InputError("functor: no image for object \"" +
                       source->obj_name(a) + "\"");
    }
    auto img = find_obj(*target, target_objs, it->second);
    if (!img) throw InputError("functor: unknown target object \"" + it->second + "\"");
    (*omap)[a.id] = *img;
  }
  for (Mor m : fincat::morphisms_between(*source, source_objs)) {
    auto it = ff.morphisms.find(source->mor_name(m));
    if (it == ff.morphisms.end()) {
      throw InputError("functor: no image for morphism \"" +
                       source->mor_name(m) + "\"");
    }
    auto img = find_mor(it->second);
    if (!img) throw InputError("functor: unknown target morphism \"" + it->second + "\"");
    (*mmap)[m.id] = *img;
  }
  ResolvedFunctor out;
  out.F.source = source;
  out.F.target = target;
  out.F.obj = [omap](Obj a) {
    auto it = omap->find(a.id);
    if (it == omap->end()) throw InputError("functor: unmapped object");
    return it->second;
  };
  out.F.mor = [mmap](Mor m) {
    auto it = mmap->find(m.id);
    if (it == mmap->end()) throw InputError("functor: unmapped morphism");
    return it->second;
  };
  out.reports = fincat::check_functor(out.F, source_objs);
  return out;
}

// -------------------------------------------------------------- reports ----

namespace {

json classification_json(const collapse::Classification& c) {
  json j;
  j["posetal"] = c.posetal;
  j["distributive"] = c.distributive;
  j["strict_initial"] = c.strict_initial;
  j["costrict_terminal"] = c.costrict_terminal;
  j["semi_additive"] = c.semi_additive;
  j["invertible_distributors"] = c.invertible_distributors;
  j["isomix"] = c.isomix;
  j["compact"] = c.compact;
  j["trivial"] = c.trivial;
  if (!c.posetal_witness.empty()) j["posetal_witness"] = c.posetal_witness;
  if (!c.semiadd_witness.empty()) j["semiadd_witness"] = c.semiadd_witness;
  return j;
}

}  // namespace

std::string report_json(const std::string& instance,
                        const std::vector<LawReport>& laws,
                        const collapse::Classification* cls) {
  json j;
  j["instance"] = instance;
  json jl = json::array();
  for (const auto& r : laws) {
    json e;
    e["id"] = r.law_id;
    e["status"] = status_name(r.status);
    e["checked"] = r.checked;
    if (!r.note.empty()) e["note"] = r.note;
    if (r.witness) {
      e["witness"] = {{"objects", r.witness->objects},
                      {"lhs_path", r.witness->lhs_path},
                      {"rhs_path", r.witness->rhs_path},
                      {"lhs", r.witness->lhs_mor},
                      {"rhs", r.witness->rhs_mor}};
    }
    jl.push_back(e);
  }
  j["laws"] = jl;
  if (cls) j["classification"] = classification_json(*cls);
  return j.dump(2) + "\n";
}

namespace {

std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += v[i];
  }
  return out;
}

}  // namespace

std::string report_text(const std::string& instance,
                        const std::vector<LawReport>& laws,
                        const collapse::Classification* cls) {
  std::ostringstream os;
  os << "instance: " << instance << "\n";
  for (const auto& r : laws) {
    const char* mark = r.status == Status::Pass   ? "✓"
                       : r.status == Status::Fail ? "✗"
                                                  : "-";
    os << mark << " " << r.law_id;
    if (r.status == Status::Skipped) {
      os << "  [skipped" << (r.note.empty() ? "" : ": " + r.note) << "]";
    } else if (r.status == Status::Fail && r.witness) {
      os << "  @ (" << join(r.witness->objects, ",") << ")  "
         << join(r.witness->lhs_path, ";") << " = " << r.witness->lhs_mor
         << "  vs  " << join(r.witness->rhs_path, ";") << " = "
         << r.witness->rhs_mor;
      if (!r.note.empty()) os << "  [" << r.note << "]";
    } else if (r.status == Status::Fail) {
      if (!r.note.empty()) os << "  " << r.note;
    } else {
      os << "  (" << r.checked << " tuples)";
    }
    os << "\n";
  }
  if (cls) {
    json c = classification_json(*cls);
    os << "classification:";
    for (const auto& [k, v] : c.items()) {
      if (v.is_boolean()) os << " " << k << "=" << (v.get<bool>() ? 1 : 0);
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace ldcw::serialize
