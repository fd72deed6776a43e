#include "ldcw/zoo.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>

namespace ldcw::zoo {

namespace {

long pow_budgeted(long base, long exp, long budget, const char* what) {
  long r = 1;
  for (long i = 0; i < exp; ++i) {
    if (base != 0 && r > budget / base) {
      throw BudgetExceeded(std::string(what) + ": enumeration budget exceeded");
    }
    r *= base;
    if (r > budget) {
      throw BudgetExceeded(std::string(what) + ": enumeration budget exceeded");
    }
  }
  return r;
}

std::string subset_name(long mask, int n) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < n; ++i) {
    if ((mask >> i) & 1) {
      if (!first) s += ",";
      s += std::to_string(i);
      first = false;
    }
  }
  return s + "}";
}

}  // namespace

// ============================================================== FinSet ====

FinSetCategory::FinSetCategory(int bound, Bounds bounds)
    : bound_(bound), bounds_(bounds) {
  if (bound < 0 || bound > 8) {
    throw InputError("FinSet: object bound must be between 0 and 8");
  }
}

Mor FinSetCategory::mor(Obj a, Obj b, std::vector<int> table) const {
  if (a.id < 0 || b.id < 0 || (int)table.size() != a.id) {
    throw InputError("FinSet: graph table has the wrong length");
  }
  for (int v : table) {
    if (v < 0 || v >= b.id) throw InputError("FinSet: table entry out of range");
  }
  auto key = std::make_tuple(a.id, b.id, std::move(table));
  auto it = midx_.find(key);
  if (it != midx_.end()) return Mor{it->second};
  int id = (int)mors_.size();
  midx_.emplace(key, id);
  mors_.push_back(std::move(key));
  return Mor{id};
}

const std::vector<int>& FinSetCategory::map_of(Mor f) const {
  return std::get<2>(mors_.at(f.id));
}

Obj FinSetCategory::dom(Mor f) const { return Obj{std::get<0>(mors_.at(f.id))}; }
Obj FinSetCategory::cod(Mor f) const { return Obj{std::get<1>(mors_.at(f.id))}; }

Mor FinSetCategory::identity(Obj a) const {
  std::vector<int> t(a.id);
  std::iota(t.begin(), t.end(), 0);
  return mor(a, a, std::move(t));
}

Mor FinSetCategory::compose(Mor f, Mor g) const {
  require_composable(f, g);
  const auto& ft = map_of(f);
  const auto& gt = map_of(g);
  std::vector<int> t(ft.size());
  for (size_t i = 0; i < ft.size(); ++i) t[i] = gt.at(ft[i]);
  return mor(dom(f), cod(g), std::move(t));
}

std::vector<Mor> FinSetCategory::hom(Obj a, Obj b) const {
  std::vector<Mor> out;
  if (b.id == 0) {
    if (a.id == 0) out.push_back(mor(a, b, {}));
    return out;
  }
  long count = pow_budgeted(b.id, a.id, bounds_.max_hom, "FinSet hom");
  std::vector<int> t(a.id, 0);
  for (long r = 0; r < count; ++r) {
    out.push_back(mor(a, b, t));
    for (int i = a.id - 1; i >= 0; --i) {
      if (++t[i] < b.id) break;
      t[i] = 0;
    }
  }
  return out;
}

std::string FinSetCategory::mor_name(Mor f) const {
  const auto& [a, b, t] = mors_.at(f.id);
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
  os << "]:" << a << "->" << b;
  return os.str();
}

std::optional<Mor> FinSetCategory::find_inverse(Mor f) const {
  const auto& [a, b, t] = mors_.at(f.id);
  if (a != b) return std::nullopt;
  std::vector<int> inv(a, -1);
  for (int i = 0; i < a; ++i) {
    if (inv[t[i]] != -1) return std::nullopt;
    inv[t[i]] = i;
  }
  return mor(Obj{b}, Obj{a}, std::move(inv));
}

FinSetBundle make_finset(int n, const Bounds& bounds) {
  FinSetBundle B;
  auto C = std::make_shared<FinSetCategory>(n, bounds);
  B.C = C;
  for (int i = 0; i <= n; ++i) B.objs.push_back(Obj{i});

  B.prods.C = C;
  B.prods.terminal = Obj{1};
  B.prods.bang = memo_fam(Fam1([C](Obj a) {
    return C->mor(a, Obj{1}, std::vector<int>(a.id, 0));
  }));
  B.prods.at = limits::memo_products([C](Obj a, Obj b) {
    limits::ProductWitness w;
    w.left = a;
    w.right = b;
    const int bs = b.id;
    w.apex = Obj{a.id * bs};
    std::vector<int> p0(w.apex.id), p1(w.apex.id);
    for (int k = 0; k < w.apex.id; ++k) {
      p0[k] = k / bs;
      p1[k] = k % bs;
    }
    w.pi0 = C->mor(w.apex, a, std::move(p0));
    w.pi1 = C->mor(w.apex, b, std::move(p1));
    w.pair = [C, apex = w.apex, bs](Mor f, Mor g) {
      const auto& ft = C->map_of(f);
      const auto& gt = C->map_of(g);
      if (C->dom(f) != C->dom(g)) throw HardFailure("FinSet pair: dom mismatch");
      std::vector<int> t(ft.size());
      for (size_t i = 0; i < ft.size(); ++i) t[i] = ft[i] * bs + gt[i];
      return C->mor(C->dom(f), apex, std::move(t));
    };
    return w;
  });

  B.cops.C = C;
  B.cops.initial = Obj{0};
  B.cops.cobang = memo_fam(Fam1([C](Obj a) { return C->mor(Obj{0}, a, {}); }));
  B.cops.at = limits::memo_coproducts([C](Obj a, Obj b) {
    limits::CoproductWitness w;
    w.left = a;
    w.right = b;
    w.apex = Obj{a.id + b.id};
    std::vector<int> j0(a.id), j1(b.id);
    std::iota(j0.begin(), j0.end(), 0);
    std::iota(j1.begin(), j1.end(), a.id);
    w.i0 = C->mor(a, w.apex, std::move(j0));
    w.i1 = C->mor(b, w.apex, std::move(j1));
    w.copair = [C, a, b, apex = w.apex](Mor f, Mor g) {
      if (C->dom(f) != a || C->dom(g) != b || C->cod(f) != C->cod(g)) {
        throw HardFailure("FinSet copair: endpoint mismatch");
      }
      std::vector<int> t = C->map_of(f);
      const auto& gt = C->map_of(g);
      t.insert(t.end(), gt.begin(), gt.end());
      return C->mor(apex, C->cod(f), std::move(t));
    };
    return w;
  });
  return B;
}

// ============================================================== FinPar ====

FinParCategory::FinParCategory(int bound, Bounds bounds)
    : bound_(bound), bounds_(bounds) {
  if (bound < 0 || bound > 8) {
    throw InputError("FinPar: object bound must be between 0 and 8");
  }
}

Mor FinParCategory::mor(Obj a, Obj b, std::vector<int> table) const {
  if (a.id < 0 || b.id < 0 || (int)table.size() != a.id) {
    throw InputError("FinPar: graph table has the wrong length");
  }
  for (int v : table) {
    if (v < -1 || v >= b.id) throw InputError("FinPar: table entry out of range");
  }
  auto key = std::make_tuple(a.id, b.id, std::move(table));
  auto it = midx_.find(key);
  if (it != midx_.end()) return Mor{it->second};
  int id = (int)mors_.size();
  midx_.emplace(key, id);
  mors_.push_back(std::move(key));
  return Mor{id};
}

const std::vector<int>& FinParCategory::map_of(Mor f) const {
  return std::get<2>(mors_.at(f.id));
}

Obj FinParCategory::dom(Mor f) const { return Obj{std::get<0>(mors_.at(f.id))}; }
Obj FinParCategory::cod(Mor f) const { return Obj{std::get<1>(mors_.at(f.id))}; }

Mor FinParCategory::identity(Obj a) const {
  std::vector<int> t(a.id);
  std::iota(t.begin(), t.end(), 0);
  return mor(a, a, std::move(t));
}

Mor FinParCategory::compose(Mor f, Mor g) const {
  require_composable(f, g);
  const auto& ft = map_of(f);
  const auto& gt = map_of(g);
  std::vector<int> t(ft.size());
  for (size_t i = 0; i < ft.size(); ++i) t[i] = ft[i] < 0 ? -1 : gt.at(ft[i]);
  return mor(dom(f), cod(g), std::move(t));
}

std::vector<Mor> FinParCategory::hom(Obj a, Obj b) const {
  long count = pow_budgeted(b.id + 1, a.id, bounds_.max_hom, "FinPar hom");
  std::vector<Mor> out;
  std::vector<int> t(a.id, -1);
  for (long r = 0; r < count; ++r) {
    out.push_back(mor(a, b, t));
    for (int i = a.id - 1; i >= 0; --i) {
      if (++t[i] < b.id) break;
      t[i] = -1;
    }
  }
  return out;
}

std::string FinParCategory::mor_name(Mor f) const {
  const auto& [a, b, t] = mors_.at(f.id);
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < t.size(); ++i) {
    os << (i ? "," : "");
    if (t[i] < 0) {
      os << "*";
    } else {
      os << t[i];
    }
  }
  os << "]:" << a << "->" << b;
  return os.str();
}

std::optional<Mor> FinParCategory::find_inverse(Mor f) const {
  const auto& [a, b, t] = mors_.at(f.id);
  if (a != b) return std::nullopt;
  std::vector<int> inv(a, -1);
  for (int i = 0; i < a; ++i) {
    if (t[i] < 0 || inv[t[i]] != -1) return std::nullopt;
    inv[t[i]] = i;
  }
  return mor(Obj{b}, Obj{a}, std::move(inv));
}

FinParBundle make_finpar(int n, const Bounds& bounds) {
  FinParBundle B;
  auto C = std::make_shared<FinParCategory>(n, bounds);
  B.C = C;
  for (int i = 0; i <= n; ++i) B.objs.push_back(Obj{i});

  B.cops.C = C;
  B.cops.initial = Obj{0};
  B.cops.cobang = memo_fam(Fam1([C](Obj a) { return C->mor(Obj{0}, a, {}); }));
  B.cops.at = limits::memo_coproducts([C](Obj a, Obj b) {
    limits::CoproductWitness w;
    w.left = a;
    w.right = b;
    w.apex = Obj{a.id + b.id};
    std::vector<int> j0(a.id), j1(b.id);
    std::iota(j0.begin(), j0.end(), 0);
    std::iota(j1.begin(), j1.end(), a.id);
    w.i0 = C->mor(a, w.apex, std::move(j0));
    w.i1 = C->mor(b, w.apex, std::move(j1));
    w.copair = [C, a, b, apex = w.apex](Mor f, Mor g) {
      if (C->dom(f) != a || C->dom(g) != b || C->cod(f) != C->cod(g)) {
        throw HardFailure("FinPar copair: endpoint mismatch");
      }
      std::vector<int> t = C->map_of(f);
      const auto& gt = C->map_of(g);
      t.insert(t.end(), gt.begin(), gt.end());
      return C->mor(apex, C->cod(f), std::move(t));
    };
    return w;
  });

  monoidal::MonoidalStructure S;
  S.C = C;
  S.unit = Obj{1};
  S.ten = [](Obj a, Obj b) { return Obj{a.id * b.id}; };
  S.ten_mor = [C](Mor f, Mor g) {
    const auto& ft = C->map_of(f);
    const auto& gt = C->map_of(g);
    int b = C->dom(g).id, b2 = C->cod(g).id;
    std::vector<int> t(ft.size() * gt.size());
    for (size_t x = 0; x < ft.size(); ++x) {
      for (size_t y = 0; y < gt.size(); ++y) {
        t[x * b + y] = (ft[x] >= 0 && gt[y] >= 0) ? ft[x] * b2 + gt[y] : -1;
      }
    }
    return C->mor(Obj{(int)ft.size() * b}, Obj{C->cod(f).id * b2}, std::move(t));
  };
  // The lexicographic layout makes the associator and both unitors literal
  // identity tables; only the braiding permutes.
  S.assoc_lr = memo_fam(Fam3([C](Obj a, Obj b, Obj c) {
    return C->identity(Obj{a.id * b.id * c.id});
  }));
  S.assoc_rl = S.assoc_lr;
  S.unitR_in = memo_fam(Fam1([C](Obj a) { return C->identity(a); }));
  S.unitR_out = S.unitR_in;
  S.unitL_in = S.unitR_in;
  S.unitL_out = S.unitR_in;
  S.sym = memo_fam(Fam2([C](Obj a, Obj b) {
    std::vector<int> t(a.id * b.id);
    for (int x = 0; x < a.id; ++x) {
      for (int y = 0; y < b.id; ++y) t[x * b.id + y] = y * a.id + x;
    }
    return C->mor(Obj{a.id * b.id}, Obj{a.id * b.id}, std::move(t));
  }));
  B.smash = S;

  std::vector<Obj> objs = B.objs;
  B.smc = construct::make_distributive_smc(C, B.cops, B.smash, objs);
  return B;
}

// ============================================================== FinRel ====

FinRelCategory::FinRelCategory(int bound, Bounds bounds)
    : bound_(bound), bounds_(bounds) {
  if (bound < 0 || bound > 6) {
    throw InputError("FinRel: object bound must be between 0 and 6");
  }
}

Mor FinRelCategory::mor(Obj a, Obj b, std::vector<char> matrix) const {
  if (a.id < 0 || b.id < 0 || (int)matrix.size() != a.id * b.id) {
    throw InputError("FinRel: incidence matrix has the wrong size");
  }
  for (char& v : matrix) v = v ? 1 : 0;
  auto key = std::make_tuple(a.id, b.id, std::move(matrix));
  auto it = midx_.find(key);
  if (it != midx_.end()) return Mor{it->second};
  int id = (int)mors_.size();
  midx_.emplace(key, id);
  mors_.push_back(std::move(key));
  return Mor{id};
}

const std::vector<char>& FinRelCategory::matrix_of(Mor f) const {
  return std::get<2>(mors_.at(f.id));
}

bool FinRelCategory::rel(Mor f, int x, int y) const {
  const auto& [a, b, m] = mors_.at(f.id);
  if (x < 0 || x >= a || y < 0 || y >= b) {
    throw InputError("FinRel: rel index out of range");
  }
  return m[x * b + y] != 0;
}

Obj FinRelCategory::dom(Mor f) const { return Obj{std::get<0>(mors_.at(f.id))}; }
Obj FinRelCategory::cod(Mor f) const { return Obj{std::get<1>(mors_.at(f.id))}; }

Mor FinRelCategory::identity(Obj a) const {
  std::vector<char> m(a.id * a.id, 0);
  for (int i = 0; i < a.id; ++i) m[i * a.id + i] = 1;
  return mor(a, a, std::move(m));
}

Mor FinRelCategory::compose(Mor f, Mor g) const {
  require_composable(f, g);
  const auto& [a, b, fm] = mors_.at(f.id);
  const auto& [b2, c, gm] = mors_.at(g.id);
  std::vector<char> m(a * c, 0);
  for (int x = 0; x < a; ++x) {
    for (int y = 0; y < b; ++y) {
      if (!fm[x * b + y]) continue;
      for (int z = 0; z < c; ++z) {
        if (gm[y * c + z]) m[x * c + z] = 1;
      }
    }
  }
  return mor(Obj{a}, Obj{c}, std::move(m));
}

std::vector<Mor> FinRelCategory::hom(Obj a, Obj b) const {
  int cells = a.id * b.id;
  long count = pow_budgeted(2, cells, bounds_.max_hom, "FinRel hom");
  std::vector<Mor> out;
  out.reserve(count);
  for (long r = 0; r < count; ++r) {
    std::vector<char> m(cells);
    for (int j = 0; j < cells; ++j) m[j] = (char)((r >> j) & 1);
    out.push_back(mor(a, b, std::move(m)));
  }
  return out;
}

std::string FinRelCategory::mor_name(Mor f) const {
  const auto& [a, b, m] = mors_.at(f.id);
  std::ostringstream os;
  os << "[";
  for (int x = 0; x < a; ++x) {
    if (x) os << "|";
    for (int y = 0; y < b; ++y) os << (m[x * b + y] ? '1' : '0');
  }
  os << "]:" << a << "->" << b;
  return os.str();
}

std::optional<Mor> FinRelCategory::find_inverse(Mor f) const {
  const auto& [a, b, m] = mors_.at(f.id);
  if (a != b) return std::nullopt;
  // Isomorphisms in the relational engine are exactly permutation matrices;
  // the inverse is the transpose.
  std::vector<char> inv(a * a, 0);
  std::vector<int> rowhit(a, 0), colhit(a, 0);
  for (int x = 0; x < a; ++x) {
    for (int y = 0; y < a; ++y) {
      if (!m[x * a + y]) continue;
      ++rowhit[x];
      ++colhit[y];
      inv[y * a + x] = 1;
    }
  }
  for (int i = 0; i < a; ++i) {
    if (rowhit[i] != 1 || colhit[i] != 1) return std::nullopt;
  }
  return mor(Obj{b}, Obj{a}, std::move(inv));
}

FinRelBundle make_finrel(int n, const Bounds& bounds) {
  FinRelBundle B;
  auto C = std::make_shared<FinRelCategory>(n, bounds);
  B.C = C;
  for (int i = 0; i <= n; ++i) B.objs.push_back(Obj{i});

  // Disjoint union is a biproduct; the projections are the converses of the
  // injections, and both chosen structures share the same apexes.
  B.prods.C = C;
  B.prods.terminal = Obj{0};
  B.prods.bang = memo_fam(Fam1([C](Obj a) { return C->mor(a, Obj{0}, {}); }));
  B.prods.at = limits::memo_products([C](Obj a, Obj b) {
    limits::ProductWitness w;
    w.left = a;
    w.right = b;
    w.apex = Obj{a.id + b.id};
    std::vector<char> p0(w.apex.id * a.id, 0), p1(w.apex.id * b.id, 0);
    for (int x = 0; x < a.id; ++x) p0[x * a.id + x] = 1;
    for (int y = 0; y < b.id; ++y) p1[(a.id + y) * b.id + y] = 1;
    w.pi0 = C->mor(w.apex, a, std::move(p0));
    w.pi1 = C->mor(w.apex, b, std::move(p1));
    w.pair = [C, a, b, apex = w.apex](Mor f, Mor g) {
      if (C->dom(f) != C->dom(g)) throw HardFailure("FinRel pair: dom mismatch");
      int x = C->dom(f).id;
      const auto& fm = C->matrix_of(f);
      const auto& gm = C->matrix_of(g);
      std::vector<char> m(x * apex.id, 0);
      for (int i = 0; i < x; ++i) {
        for (int j = 0; j < a.id; ++j) m[i * apex.id + j] = fm[i * a.id + j];
        for (int j = 0; j < b.id; ++j) {
          m[i * apex.id + a.id + j] = gm[i * b.id + j];
        }
      }
      return C->mor(C->dom(f), apex, std::move(m));
    };
    return w;
  });

  B.cops.C = C;
  B.cops.initial = Obj{0};
  B.cops.cobang = memo_fam(Fam1([C](Obj a) { return C->mor(Obj{0}, a, {}); }));
  B.cops.at = limits::memo_coproducts([C](Obj a, Obj b) {
    limits::CoproductWitness w;
    w.left = a;
    w.right = b;
    w.apex = Obj{a.id + b.id};
    std::vector<char> j0(a.id * w.apex.id, 0), j1(b.id * w.apex.id, 0);
    for (int x = 0; x < a.id; ++x) j0[x * w.apex.id + x] = 1;
    for (int y = 0; y < b.id; ++y) j1[y * w.apex.id + a.id + y] = 1;
    w.i0 = C->mor(a, w.apex, std::move(j0));
    w.i1 = C->mor(b, w.apex, std::move(j1));
    w.copair = [C, a, b, apex = w.apex](Mor f, Mor g) {
      if (C->dom(f) != a || C->dom(g) != b || C->cod(f) != C->cod(g)) {
        throw HardFailure("FinRel copair: endpoint mismatch");
      }
      std::vector<char> m = C->matrix_of(f);
      const auto& gm = C->matrix_of(g);
      m.insert(m.end(), gm.begin(), gm.end());
      return C->mor(apex, C->cod(f), std::move(m));
    };
    return w;
  });

  std::vector<LawReport> zr;
  auto z = limits::zero_structure(B.prods, B.cops, B.objs, &zr);
  if (!z || !all_pass(zr)) {
    throw HardFailure("FinRel: zero structure certification failed");
  }
  B.zero = *z;
  return B;
}

// ================================================= direct Par wedge ====

namespace {

// Parts of A (v) B under the canonical layout [0,a) = A, [a,a+b) = B,
// [a+b, a+b+ab) = pairs (x,y) at a+b+x*b+y.
struct WPart {
  int tag;  // 0 = left, 1 = right, 2 = pair
  int x = -1, y = -1;
};

WPart w_decode(int a, int b, int i) {
  if (i < a) return {0, i, -1};
  if (i < a + b) return {1, i - a, -1};
  int t = i - a - b;
  return {2, t / b, t % b};
}

int w_size(int a, int b) { return a + b + a * b; }

}  // namespace

FinParDirect finpar_direct_ldc(int n, const Bounds& bounds) {
  if (n < 0 || n > 2) {
    throw InputError("finpar_direct_ldc: object bound must be 0, 1 or 2");
  }
  FinParDirect D;
  D.base = make_finpar(n, bounds);
  auto C = D.base.C;

  auto wobj = [](Obj a, Obj b) { return Obj{w_size(a.id, b.id)}; };

  // f (v) g case analysis: left and right parts map within their parts (or
  // die); a pair survives only when both components are defined.
  auto ten_mor = [C, wobj](Mor f, Mor g) {
    Obj a = C->dom(f), b = C->dom(g), a2 = C->cod(f), b2 = C->cod(g);
    const auto& ft = C->map_of(f);
    const auto& gt = C->map_of(g);
    std::vector<int> t(w_size(a.id, b.id));
    for (int i = 0; i < (int)t.size(); ++i) {
      WPart p = w_decode(a.id, b.id, i);
      if (p.tag == 0) {
        t[i] = ft[p.x] < 0 ? -1 : ft[p.x];
      } else if (p.tag == 1) {
        t[i] = gt[p.x] < 0 ? -1 : a2.id + gt[p.x];
      } else {
        int fx = ft[p.x], gy = gt[p.y];
        t[i] = (fx >= 0 && gy >= 0) ? a2.id + b2.id + fx * b2.id + gy : -1;
      }
    }
    return C->mor(wobj(a, b), wobj(a2, b2), std::move(t));
  };

  auto assoc_lr = memo_fam(Fam3([C, wobj](Obj A, Obj B, Obj Cc) {
    int a = A.id, b = B.id, c = Cc.id;
    int ab = w_size(a, b), bc = w_size(b, c);
    std::vector<int> t(w_size(ab, c));
    for (int i = 0; i < (int)t.size(); ++i) {
      WPart o = w_decode(ab, c, i);
      if (o.tag == 0) {
        WPart p = w_decode(a, b, o.x);
        if (p.tag == 0) {
          t[i] = p.x;
        } else if (p.tag == 1) {
          t[i] = a + p.x;  // B sits first inside B (v) C
        } else {
          t[i] = a + bc + p.x * bc + p.y;  // (x, inl y)
        }
      } else if (o.tag == 1) {
        t[i] = a + b + o.x;  // C at offset b inside B (v) C
      } else {
        WPart p = w_decode(a, b, o.x);
        int z = o.y;
        if (p.tag == 0) {
          t[i] = a + bc + p.x * bc + (b + z);  // (x, inr z)
        } else if (p.tag == 1) {
          t[i] = a + (b + c + p.x * c + z);  // inr of the pair (y, z)
        } else {
          t[i] = a + bc + p.x * bc + (b + c + p.y * c + z);  // (x, (y, z))
        }
      }
    }
    return C->mor(Obj{w_size(ab, c)}, wobj(A, Obj{bc}), std::move(t));
  }));

  auto invert_perm = [C](Mor f) {
    auto inv = C->find_inverse(f);
    if (!inv) throw HardFailure("finpar_direct_ldc: associator not bijective");
    return *inv;
  };
  auto assoc_rl = memo_fam(Fam3([assoc_lr, invert_perm](Obj a, Obj b, Obj c) {
    return invert_perm(assoc_lr(a, b, c));
  }));

  monoidal::MonoidalStructure T;
  T.C = C;
  T.unit = Obj{0};
  T.ten = wobj;
  T.ten_mor = ten_mor;
  T.assoc_lr = assoc_lr;
  T.assoc_rl = assoc_rl;
  // A (v) 0 and 0 (v) A are literally A under the layout.
  T.unitR_in = memo_fam(Fam1([C](Obj a) { return C->identity(a); }));
  T.unitR_out = T.unitR_in;
  T.unitL_in = T.unitR_in;
  T.unitL_out = T.unitR_in;
  T.sym = memo_fam(Fam2([C, wobj](Obj a, Obj b) {
    std::vector<int> t(w_size(a.id, b.id));
    for (int i = 0; i < (int)t.size(); ++i) {
      WPart p = w_decode(a.id, b.id, i);
      if (p.tag == 0) {
        t[i] = b.id + p.x;
      } else if (p.tag == 1) {
        t[i] = p.x;
      } else {
        t[i] = a.id + b.id + p.y * a.id + p.x;
      }
    }
    return C->mor(wobj(a, b), wobj(b, a), std::move(t));
  }));

  D.L.tensor = T;
  D.L.par = monoidal::derive_cocartesian_monoidal(D.base.cops);

  // deltaL : A (v) (B+C) -> (A (v) B) + C, the identity on the A, B, C and
  // A x B parts and undefined on A x C.
  D.L.deltaL = memo_fam(Fam3([C, wobj](Obj A, Obj B, Obj Cc) {
    int a = A.id, b = B.id, c = Cc.id;
    int ab = w_size(a, b);
    std::vector<int> t(w_size(a, b + c));
    for (int i = 0; i < (int)t.size(); ++i) {
      WPart p = w_decode(a, b + c, i);
      if (p.tag == 0) {
        t[i] = p.x;
      } else if (p.tag == 1) {
        t[i] = p.x < b ? a + p.x : ab + (p.x - b);
      } else {
        t[i] = p.y < b ? a + b + p.x * b + p.y : -1;
      }
    }
    return C->mor(wobj(A, Obj{b + c}), Obj{ab + c}, std::move(t));
  }));

  // deltaR : (A+B) (v) C -> A + (B (v) C), undefined on A x C.
  D.L.deltaR = memo_fam(Fam3([C, wobj](Obj A, Obj B, Obj Cc) {
    int a = A.id, b = B.id, c = Cc.id;
    int bc = w_size(b, c);
    std::vector<int> t(w_size(a + b, c));
    for (int i = 0; i < (int)t.size(); ++i) {
      WPart p = w_decode(a + b, c, i);
      if (p.tag == 0) {
        t[i] = p.x < a ? p.x : a + (p.x - a);
      } else if (p.tag == 1) {
        t[i] = a + b + p.x;  // C at offset b inside B (v) C
      } else {
        t[i] = p.x < a ? -1 : a + (b + c + (p.x - a) * c + p.y);
      }
    }
    return C->mor(wobj(Obj{a + b}, Cc), Obj{a + bc}, std::move(t));
  }));

  D.amp = [wobj](Obj a, Obj b) { return wobj(a, b); };
  // The five-case A & B action: unlike (v), a pair with one defined
  // component falls back to the surviving part.
  D.amp_mor = [C, wobj](Mor f, Mor g) {
    Obj a = C->dom(f), b = C->dom(g), a2 = C->cod(f), b2 = C->cod(g);
    const auto& ft = C->map_of(f);
    const auto& gt = C->map_of(g);
    std::vector<int> t(w_size(a.id, b.id));
    for (int i = 0; i < (int)t.size(); ++i) {
      WPart p = w_decode(a.id, b.id, i);
      if (p.tag == 0) {
        t[i] = ft[p.x] < 0 ? -1 : ft[p.x];
      } else if (p.tag == 1) {
        t[i] = gt[p.x] < 0 ? -1 : a2.id + gt[p.x];
      } else {
        int fx = ft[p.x], gy = gt[p.y];
        if (fx >= 0 && gy >= 0) {
          t[i] = a2.id + b2.id + fx * b2.id + gy;
        } else if (fx >= 0) {
          t[i] = fx;
        } else if (gy >= 0) {
          t[i] = a2.id + gy;
        } else {
          t[i] = -1;
        }
      }
    }
    return C->mor(wobj(a, b), wobj(a2, b2), std::move(t));
  };
  return D;
}

Mor kleisli_to_finpar(const construct::KleisliResult& K,
                      const FinSetCategory& S, const FinParCategory& P,
                      Mor m) {
  Obj a = K.K->dom(m), b = K.K->cod(m);
  const auto& t = S.map_of(K.unwrap(m));
  std::vector<int> out(t.size());
  for (size_t i = 0; i < t.size(); ++i) {
    out[i] = t[i] == b.id ? -1 : t[i];
  }
  return P.mor(a, b, std::move(out));
}

// ==================================================== powerset functors ====

namespace {

struct P2State {
  // Interned elements: (fiber size n, bitset over the 2^n subsets).
  std::vector<std::pair<int, std::vector<std::uint64_t>>> elems;
  std::map<std::pair<int, std::vector<std::uint64_t>>, long> idx;

  long intern(int n, std::vector<std::uint64_t> bits) {
    auto key = std::make_pair(n, std::move(bits));
    auto it = idx.find(key);
    if (it != idx.end()) return it->second;
    long id = (long)elems.size();
    idx.emplace(key, id);
    elems.push_back(std::move(key));
    return id;
  }
  const std::pair<int, std::vector<std::uint64_t>>& at(Obj X, long id,
                                                       const char* who) const {
    const auto& e = elems.at((size_t)id);
    if (e.first != X.id) {
      throw HardFailure(std::string(who) + ": fiber element/object mismatch");
    }
    return e;
  }
};

std::vector<std::uint64_t> p2_zeros(int n) {
  return std::vector<std::uint64_t>(((size_t{1} << n) + 63) / 64, 0);
}

bool p2_get(const std::vector<std::uint64_t>& bits, long j) {
  return (bits[(size_t)(j >> 6)] >> (j & 63)) & 1;
}

void p2_set(std::vector<std::uint64_t>& bits, long j) {
  bits[(size_t)(j >> 6)] |= std::uint64_t{1} << (j & 63);
}

// An n-element base object has 2^n subsets; a fiber element is a family of
// subsets, stored as a bitset over those 2^n positions.  A family is
// up-closed when membership survives adding points to a subset; closure under
// single-point extensions suffices to check this.
bool p2_up_closed(std::uint64_t mask, int n) {
  long subsets = 1L << n;
  for (long j = 0; j < subsets; ++j) {
    if (!((mask >> j) & 1)) continue;
    for (int i = 0; i < n; ++i) {
      if (!((mask >> (j | (1L << i))) & 1)) return false;
    }
  }
  return true;
}

// Shared builder for the double-powerset functors; `up_closed` restricts the
// enumerated fibers (the lattice operations and the relational action both
// preserve up-closedness, so everything else is identical).
construct::LatticeValuedFunctor make_p2(
    std::shared_ptr<const FinRelCategory> RC, long budget, bool up_closed) {
  auto st = std::make_shared<P2State>();
  construct::LatticeValuedFunctor P2;
  P2.base = RC;
  P2.name = up_closed ? "up-closed double powerset" : "double powerset";
  P2.enumerate = [st, up_closed](Obj X) {
    if (X.id > 4) {
      throw BudgetExceeded("double powerset fiber: enumeration budget exceeded");
    }
    long subsets = 1L << X.id;
    long cnt = 1L << subsets;
    std::vector<long> out;
    for (long m = 0; m < cnt; ++m) {
      if (up_closed && !p2_up_closed((std::uint64_t)m, X.id)) continue;
      auto bits = p2_zeros(X.id);
      bits[0] = (std::uint64_t)m;
      out.push_back(st->intern(X.id, std::move(bits)));
    }
    return out;
  };
  P2.leq = [st](Obj X, long u, long v) {
    const auto& ub = st->at(X, u, "P2 leq").second;
    const auto& vb = st->at(X, v, "P2 leq").second;
    for (size_t w = 0; w < ub.size(); ++w) {
      if (ub[w] & ~vb[w]) return false;
    }
    return true;
  };
  P2.meet = [st](Obj X, long u, long v) {
    auto ub = st->at(X, u, "P2 meet").second;
    const auto& vb = st->at(X, v, "P2 meet").second;
    for (size_t w = 0; w < ub.size(); ++w) ub[w] &= vb[w];
    return st->intern(X.id, std::move(ub));
  };
  P2.join = [st](Obj X, long u, long v) {
    auto ub = st->at(X, u, "P2 join").second;
    const auto& vb = st->at(X, v, "P2 join").second;
    for (size_t w = 0; w < ub.size(); ++w) ub[w] |= vb[w];
    return st->intern(X.id, std::move(ub));
  };
  P2.top = [st](Obj X) {
    auto bits = p2_zeros(X.id);
    long subsets = 1L << X.id;
    for (long j = 0; j < subsets; ++j) p2_set(bits, j);
    return st->intern(X.id, std::move(bits));
  };
  P2.bottom = [st](Obj X) { return st->intern(X.id, p2_zeros(X.id)); };
  P2.elem_name = [st](Obj X, long u) {
    const auto& bits = st->at(X, u, "P2 name").second;
    long subsets = 1L << X.id;
    if (subsets > 64) return "#" + std::to_string(u);
    std::string s = "{";
    bool first = true;
    for (long j = 0; j < subsets; ++j) {
      if (p2_get(bits, j)) {
        if (!first) s += ",";
        s += subset_name(j, X.id);
        first = false;
      }
    }
    return s + "}";
  };
  // apply(R, V) = { U in P(X) | R(U) in V } where R(U) is the direct image.
  P2.apply = [st, RC, budget](Mor f, long v) {
    int x = RC->dom(f).id, y = RC->cod(f).id;
    if ((long)x >= 20 || (1L << x) > budget) {
      throw BudgetExceeded("double powerset action: budget exceeded");
    }
    const auto& vb = st->at(Obj{y}, v, "P2 apply").second;
    std::vector<long> row(x, 0);
    for (int i = 0; i < x; ++i) {
      for (int j = 0; j < y; ++j) {
        if (RC->rel(f, i, j)) row[i] |= 1L << j;
      }
    }
    auto res = p2_zeros(x);
    long subsets = 1L << x;
    for (long u = 0; u < subsets; ++u) {
      long image = 0;
      for (int i = 0; i < x; ++i) {
        if ((u >> i) & 1) image |= row[i];
      }
      if (p2_get(vb, image)) p2_set(res, u);
    }
    return st->intern(x, std::move(res));
  };
  return P2;
}

}  // namespace

PowersetFunctors powerset_functors(const FinRelBundle& R) {
  PowersetFunctors out;
  auto RC = R.C;
  long budget = 1L << 20;

  construct::LatticeValuedFunctor P;
  P.base = RC;
  P.name = "powerset";
  P.enumerate = [budget](Obj X) {
    long cnt = pow_budgeted(2, X.id, budget, "powerset fiber");
    std::vector<long> out(cnt);
    std::iota(out.begin(), out.end(), 0L);
    return out;
  };
  P.leq = [](Obj, long u, long v) { return (u & ~v) == 0; };
  P.meet = [](Obj, long u, long v) { return u & v; };
  P.join = [](Obj, long u, long v) { return u | v; };
  P.top = [](Obj X) { return (long)((1L << X.id) - 1); };
  P.bottom = [](Obj) { return 0L; };
  P.elem_name = [](Obj X, long u) { return subset_name(u, X.id); };
  // Contravariant preimage-style action: for R : X -> Y and V in P(Y),
  // apply(R, V) = { x | exists y in V with x R y }.
  P.apply = [RC](Mor f, long v) {
    int x = RC->dom(f).id, y = RC->cod(f).id;
    long res = 0;
    for (int i = 0; i < x; ++i) {
      for (int j = 0; j < y; ++j) {
        if (((v >> j) & 1) && RC->rel(f, i, j)) {
          res |= 1L << i;
          break;
        }
      }
    }
    return res;
  };
  out.P = P;

  out.P2 = make_p2(RC, budget, false);
  out.P2up = make_p2(RC, budget, true);
  return out;
}

// =================================================== lattice generators ====

namespace {

construct::FiniteBDL finish_bdl(construct::FiniteBDL L) {
  auto v = construct::validate_bdl(L);
  if (!v.ok) {
    throw HardFailure("lattice generator produced an invalid lattice (" +
                      L.name + "): " + v.failure);
  }
  return L;
}

}  // namespace

construct::FiniteBDL bdl_chain(int n) {
  if (n < 1) throw InputError("bdl_chain: need at least one element");
  construct::FiniteBDL L;
  L.name = "C" + std::to_string(n);
  L.n = n;
  L.leq.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) {
    L.elems.push_back(std::to_string(i));
    for (int j = i; j < n; ++j) L.leq[i][j] = true;
  }
  return finish_bdl(std::move(L));
}

construct::FiniteBDL bdl_boolean(int k) {
  if (k < 0 || k > 5) throw InputError("bdl_boolean: rank must be 0..5");
  construct::FiniteBDL L;
  L.name = "B" + std::to_string(k);
  L.n = 1 << k;
  L.leq.assign(L.n, std::vector<bool>(L.n, false));
  for (int u = 0; u < L.n; ++u) {
    L.elems.push_back(subset_name(u, k));
    for (int v = 0; v < L.n; ++v) L.leq[u][v] = (u & ~v) == 0;
  }
  return finish_bdl(std::move(L));
}

construct::FiniteBDL bdl_divisors(int n) {
  if (n < 1) throw InputError("bdl_divisors: need a positive integer");
  construct::FiniteBDL L;
  L.name = "D" + std::to_string(n);
  std::vector<int> div;
  for (int d = 1; d <= n; ++d) {
    if (n % d == 0) div.push_back(d);
  }
  L.n = (int)div.size();
  L.leq.assign(L.n, std::vector<bool>(L.n, false));
  for (int i = 0; i < L.n; ++i) {
    L.elems.push_back(std::to_string(div[i]));
    for (int j = 0; j < L.n; ++j) L.leq[i][j] = div[j] % div[i] == 0;
  }
  return finish_bdl(std::move(L));
}

construct::FiniteBDL bdl_product(const construct::FiniteBDL& A,
                                 const construct::FiniteBDL& B) {
  construct::FiniteBDL L;
  L.name = A.name + "x" + B.name;
  L.n = A.n * B.n;
  L.leq.assign(L.n, std::vector<bool>(L.n, false));
  auto ename = [](const construct::FiniteBDL& X, int i) {
    return i < (int)X.elems.size() ? X.elems[i] : std::to_string(i);
  };
  for (int x = 0; x < A.n; ++x) {
    for (int y = 0; y < B.n; ++y) {
      L.elems.push_back("(" + ename(A, x) + "," + ename(B, y) + ")");
      for (int x2 = 0; x2 < A.n; ++x2) {
        for (int y2 = 0; y2 < B.n; ++y2) {
          L.leq[x * B.n + y][x2 * B.n + y2] = A.leq[x][x2] && B.leq[y][y2];
        }
      }
    }
  }
  return finish_bdl(std::move(L));
}

bool bdl_isomorphic(const construct::FiniteBDL& A,
                    const construct::FiniteBDL& B) {
  if (A.n != B.n) return false;
  std::vector<int> perm(A.n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < A.n && ok; ++i) {
      for (int j = 0; j < A.n && ok; ++j) {
        if (A.leq[i][j] != B.leq[perm[i]][perm[j]]) ok = false;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

namespace {

// Enumerate relations in linear-extension form: only pairs (i, j) with
// i < j may be related, which every finite poset admits after relabelling.
template <typename Emit>
void for_each_poset(int n, Emit emit) {
  int pairs = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> pos;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pos.emplace_back(i, j);
  }
  for (long mask = 0; mask < (1L << pairs); ++mask) {
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) leq[i][i] = true;
    for (int p = 0; p < pairs; ++p) {
      if ((mask >> p) & 1) leq[pos[p].first][pos[p].second] = true;
    }
    bool transitive = true;
    for (int i = 0; i < n && transitive; ++i) {
      for (int j = i + 1; j < n && transitive; ++j) {
        if (!leq[i][j]) continue;
        for (int k = j + 1; k < n; ++k) {
          if (leq[j][k] && !leq[i][k]) {
            transitive = false;
            break;
          }
        }
      }
    }
    if (transitive) emit(leq);
  }
}

void push_if_new(std::vector<construct::FiniteBDL>& out,
                 construct::FiniteBDL L) {
  for (const auto& prev : out) {
    if (bdl_isomorphic(prev, L)) return;
  }
  out.push_back(std::move(L));
}

}  // namespace

std::vector<construct::FiniteBDL> all_distributive_lattices(int max_n) {
  if (max_n < 1 || max_n > 7) {
    throw InputError("all_distributive_lattices: size bound must be 1..7");
  }
  std::vector<construct::FiniteBDL> out;
  for (int n = 1; n <= max_n; ++n) {
    std::vector<construct::FiniteBDL> here;
    for_each_poset(n, [&](const std::vector<std::vector<bool>>& leq) {
      construct::FiniteBDL L;
      L.n = n;
      L.leq = leq;
      auto v = construct::validate_bdl(L);
      if (!v.ok) return;
      push_if_new(here, std::move(L));
    });
    for (auto& L : here) {
      L.name = "DL" + std::to_string(n) + "_" + std::to_string(&L - here.data());
      for (int i = 0; i < n; ++i) L.elems.push_back(std::to_string(i));
      out.push_back(std::move(L));
    }
  }
  return out;
}

std::vector<construct::FiniteBDL> distributive_lattices_by_downsets(int max_n) {
  if (max_n < 1 || max_n > 7) {
    throw InputError("distributive_lattices_by_downsets: size bound must be 1..7");
  }
  std::vector<construct::FiniteBDL> out;
  for (int p = 0; p + 1 <= max_n; ++p) {
    for_each_poset(p, [&](const std::vector<std::vector<bool>>& leq) {
      // Downsets of the poset, ordered by inclusion.
      std::vector<long> down;
      for (long mask = 0; mask < (1L << p); ++mask) {
        bool closed = true;
        for (int j = 0; j < p && closed; ++j) {
          if (!((mask >> j) & 1)) continue;
          for (int i = 0; i < p; ++i) {
            if (leq[i][j] && !((mask >> i) & 1)) {
              closed = false;
              break;
            }
          }
        }
        if (closed) down.push_back(mask);
      }
      if ((int)down.size() > max_n) return;
      construct::FiniteBDL L;
      L.n = (int)down.size();
      L.leq.assign(L.n, std::vector<bool>(L.n, false));
      for (int i = 0; i < L.n; ++i) {
        L.elems.push_back(subset_name(down[i], p));
        for (int j = 0; j < L.n; ++j) L.leq[i][j] = (down[i] & ~down[j]) == 0;
      }
      L.name = "O" + std::to_string(p) + "_" + std::to_string(out.size());
      push_if_new(out, finish_bdl(std::move(L)));
    });
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const construct::FiniteBDL& a,
                      const construct::FiniteBDL& b) { return a.n < b.n; });
  return out;
}

}  // namespace ldcw::zoo
