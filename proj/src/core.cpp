#include "ldcw/core.hpp"

#include <array>
#include <sstream>

namespace ldcw {

std::vector<Obj> Category::objects() const {
  std::vector<Obj> out;
  int n = num_objects();
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(Obj{i});
  return out;
}

Mor Category::compose_all(std::initializer_list<Mor> fs) const {
  Mor acc{};
  for (Mor f : fs) acc = acc.valid() ? compose(acc, f) : f;
  if (!acc.valid()) throw HardFailure("compose_all: empty composite");
  return acc;
}

std::optional<Mor> Category::find_inverse(Mor f) const {
  Obj a = dom(f), b = cod(f);
  for (Mor g : hom(b, a)) {
    if (compose(f, g) == identity(a) && compose(g, f) == identity(b)) return g;
  }
  return std::nullopt;
}

void Category::require_composable(Mor f, Mor g) const {
  if (cod(f) != dom(g)) {
    throw HardFailure("compose: not composable: " + mor_name(f) + " : " +
                      obj_name(dom(f)) + " -> " + obj_name(cod(f)) + "  then  " +
                      mor_name(g) + " : " + obj_name(dom(g)) + " -> " +
                      obj_name(cod(g)));
  }
}

bool all_pass(const std::vector<LawReport>& reports) {
  for (const auto& r : reports)
    if (r.status == Status::Fail) return false;
  return true;
}

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "?";
}

const LawReport* first_failure(const std::vector<LawReport>& reports) {
  for (const auto& r : reports)
    if (r.status == Status::Fail) return &r;
  return nullptr;
}

void append_reports(std::vector<LawReport>& into,
                    const std::vector<LawReport>& more) {
  into.insert(into.end(), more.begin(), more.end());
}

Path& Path::step(const std::string& label, Mor m) {
  value_ = value_.valid() ? cat_->compose(value_, m) : m;
  labels_.push_back(label);
  return *this;
}

Mor Path::value() const {
  if (!value_.valid()) throw HardFailure("Path: empty composite");
  return value_;
}

LawReport& LawChecker::slot(const std::string& law_id) {
  auto it = index_.find(law_id);
  if (it != index_.end()) return reports_[it->second];
  index_[law_id] = reports_.size();
  reports_.push_back(LawReport{law_id, Status::Pass, std::nullopt, "", 0});
  return reports_.back();
}

static std::vector<std::string> object_names(const Category& C,
                                             const std::vector<Obj>& index) {
  std::vector<std::string> out;
  out.reserve(index.size());
  for (Obj a : index) out.push_back(C.obj_name(a));
  return out;
}

bool LawChecker::check(const std::string& law_id, const std::vector<Obj>& index,
                       const Path& lhs, const Path& rhs) {
  LawReport& r = slot(law_id);
  Mor l = lhs.value(), h = rhs.value();
  if (cat_->dom(l) != cat_->dom(h) || cat_->cod(l) != cat_->cod(h)) {
    throw HardFailure(law_id + ": sides have different types: " +
                      cat_->obj_name(cat_->dom(l)) + " -> " +
                      cat_->obj_name(cat_->cod(l)) + "  vs  " +
                      cat_->obj_name(cat_->dom(h)) + " -> " +
                      cat_->obj_name(cat_->cod(h)));
  }
  ++r.checked;
  if (cat_->eq(l, h)) return true;
  if (r.status != Status::Fail) {
    r.status = Status::Fail;
    Witness w;
    w.objects = object_names(*cat_, index);
    w.lhs_path = lhs.labels();
    w.rhs_path = rhs.labels();
    w.lhs_mor = cat_->mor_name(l);
    w.rhs_mor = cat_->mor_name(h);
    r.witness = std::move(w);
  }
  return false;
}

bool LawChecker::check_eq(const std::string& law_id,
                          const std::vector<Obj>& index, Mor lhs,
                          const std::string& lhs_desc, Mor rhs,
                          const std::string& rhs_desc) {
  LawReport& r = slot(law_id);
  ++r.checked;
  if (cat_->eq(lhs, rhs)) return true;
  if (r.status != Status::Fail) {
    r.status = Status::Fail;
    Witness w;
    w.objects = object_names(*cat_, index);
    w.lhs_path = {lhs_desc};
    w.rhs_path = {rhs_desc};
    w.lhs_mor = cat_->mor_name(lhs);
    w.rhs_mor = cat_->mor_name(rhs);
    r.witness = std::move(w);
  }
  return false;
}

bool LawChecker::check_that(const std::string& law_id,
                            const std::vector<Obj>& index, bool ok,
                            const std::string& lhs_desc,
                            const std::string& rhs_desc) {
  LawReport& r = slot(law_id);
  ++r.checked;
  if (ok) return true;
  if (r.status != Status::Fail) {
    r.status = Status::Fail;
    Witness w;
    w.objects = object_names(*cat_, index);
    w.lhs_path = {lhs_desc};
    w.rhs_path = {rhs_desc};
    r.witness = std::move(w);
  }
  return false;
}

void LawChecker::skip(const std::string& law_id, const std::string& note) {
  LawReport& r = slot(law_id);
  if (r.status != Status::Fail) r.status = Status::Skipped;
  if (!r.note.empty()) r.note += "; ";
  r.note += note;
}

void LawChecker::note(const std::string& law_id, const std::string& note) {
  LawReport& r = slot(law_id);
  if (!r.note.empty()) r.note += "; ";
  r.note += note;
}

template <size_t N>
static std::function<Mor(const std::array<int32_t, N>&)> make_memo(
    std::function<Mor(const std::array<int32_t, N>&)> f) {
  auto cache = std::make_shared<std::map<std::array<int32_t, N>, Mor>>();
  return [cache, f](const std::array<int32_t, N>& key) {
    auto it = cache->find(key);
    if (it != cache->end()) return it->second;
    Mor m = f(key);
    cache->emplace(key, m);
    return m;
  };
}

Fam1 memo_fam(Fam1 f) {
  auto g = make_memo<1>([f](const std::array<int32_t, 1>& k) {
    return f(Obj{k[0]});
  });
  return [g](Obj a) { return g({a.id}); };
}

Fam2 memo_fam(Fam2 f) {
  auto g = make_memo<2>([f](const std::array<int32_t, 2>& k) {
    return f(Obj{k[0]}, Obj{k[1]});
  });
  return [g](Obj a, Obj b) { return g({a.id, b.id}); };
}

Fam3 memo_fam(Fam3 f) {
  auto g = make_memo<3>([f](const std::array<int32_t, 3>& k) {
    return f(Obj{k[0]}, Obj{k[1]}, Obj{k[2]});
  });
  return [g](Obj a, Obj b, Obj c) { return g({a.id, b.id, c.id}); };
}

Fam4 memo_fam(Fam4 f) {
  auto g = make_memo<4>([f](const std::array<int32_t, 4>& k) {
    return f(Obj{k[0]}, Obj{k[1]}, Obj{k[2]}, Obj{k[3]});
  });
  return [g](Obj a, Obj b, Obj c, Obj d) { return g({a.id, b.id, c.id, d.id}); };
}

std::vector<Obj> strided_sample(const std::vector<Obj>& objs, size_t cap) {
  if (objs.size() <= cap || cap == 0) return objs;
  std::vector<Obj> out;
  out.reserve(cap);
  // Uniform stride over the canonical order; first element always kept.
  double stride = static_cast<double>(objs.size()) / static_cast<double>(cap);
  for (size_t i = 0; i < cap; ++i) {
    out.push_back(objs[static_cast<size_t>(i * stride)]);
  }
  return out;
}

}  // namespace ldcw
