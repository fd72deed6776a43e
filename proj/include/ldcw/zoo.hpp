#pragma once
// Concrete instance factories: the categories of finite sets with total,
// partial, and relational maps (rule-backed engines with interned graph
// payloads), the single and double powerset functors, and bounded
// distributive lattice generators.

#include "ldcw/construct.hpp"

namespace ldcw::zoo {

// Objects are canonical sets {0,...,k-1}; the object id is the size, and
// sizes beyond the declared bound are valid (composites grow). num_objects
// reports bound+1 for canonical enumeration.

// ------------------------------------------------------------- FinSet ----

class FinSetCategory final : public Category {
 public:
  explicit FinSetCategory(int bound, Bounds bounds = {});

  int bound() const { return bound_; }
  // Graph payloads: table[i] in [0, cod).
  Mor mor(Obj a, Obj b, std::vector<int> table) const;
  const std::vector<int>& map_of(Mor f) const;

  int num_objects() const override { return bound_ + 1; }
  Obj dom(Mor f) const override;
  Obj cod(Mor f) const override;
  Mor identity(Obj a) const override;
  Mor compose(Mor f, Mor g) const override;
  std::vector<Mor> hom(Obj a, Obj b) const override;
  std::string obj_name(Obj a) const override { return std::to_string(a.id); }
  std::string mor_name(Mor f) const override;
  std::optional<Mor> find_inverse(Mor f) const override;

 private:
  int bound_;
  Bounds bounds_;
  mutable std::vector<std::tuple<int, int, std::vector<int>>> mors_;
  mutable std::map<std::tuple<int, int, std::vector<int>>, int> midx_;
};

struct FinSetBundle {
  std::shared_ptr<const FinSetCategory> C;
  limits::ChosenProducts prods;    // A x B lexicographic, terminal {0}
  limits::ChosenCoproducts cops;   // left-first disjoint union, initial {}
  std::vector<Obj> objs;
};

FinSetBundle make_finset(int n, const Bounds& bounds = {});

// ------------------------------------------------------------- FinPar ----

class FinParCategory final : public Category {
 public:
  explicit FinParCategory(int bound, Bounds bounds = {});

  int bound() const { return bound_; }
  // Graph payloads: table[i] in [0, cod) or -1 for undefined.
  Mor mor(Obj a, Obj b, std::vector<int> table) const;
  const std::vector<int>& map_of(Mor f) const;

  int num_objects() const override { return bound_ + 1; }
  Obj dom(Mor f) const override;
  Obj cod(Mor f) const override;
  Mor identity(Obj a) const override;
  Mor compose(Mor f, Mor g) const override;
  std::vector<Mor> hom(Obj a, Obj b) const override;
  std::string obj_name(Obj a) const override { return std::to_string(a.id); }
  std::string mor_name(Mor f) const override;
  std::optional<Mor> find_inverse(Mor f) const override;

 private:
  int bound_;
  Bounds bounds_;
  mutable std::vector<std::tuple<int, int, std::vector<int>>> mors_;
  mutable std::map<std::tuple<int, int, std::vector<int>>, int> midx_;
};

struct FinParBundle {
  std::shared_ptr<const FinParCategory> C;
  limits::ChosenCoproducts cops;          // disjoint union, initial = zero {}
  monoidal::MonoidalStructure smash;      // A (x) B lexicographic, unit {0}
  construct::DistributiveSmcWithZero smc;
  std::vector<Obj> objs;
};

FinParBundle make_finpar(int n, const Bounds& bounds = {});

// ------------------------------------------------------------- FinRel ----

class FinRelCategory final : public Category {
 public:
  explicit FinRelCategory(int bound, Bounds bounds = {});

  int bound() const { return bound_; }
  // Row-major incidence matrix: matrix[x * cod + y] != 0 iff x ~ y.
  Mor mor(Obj a, Obj b, std::vector<char> matrix) const;
  const std::vector<char>& matrix_of(Mor f) const;
  bool rel(Mor f, int x, int y) const;

  int num_objects() const override { return bound_ + 1; }
  Obj dom(Mor f) const override;
  Obj cod(Mor f) const override;
  Mor identity(Obj a) const override;
  Mor compose(Mor f, Mor g) const override;
  std::vector<Mor> hom(Obj a, Obj b) const override;
  std::string obj_name(Obj a) const override { return std::to_string(a.id); }
  std::string mor_name(Mor f) const override;
  std::optional<Mor> find_inverse(Mor f) const override;

 private:
  int bound_;
  Bounds bounds_;
  mutable std::vector<std::tuple<int, int, std::vector<char>>> mors_;
  mutable std::map<std::tuple<int, int, std::vector<char>>, int> midx_;
};

struct FinRelBundle {
  std::shared_ptr<const FinRelCategory> C;
  limits::ChosenProducts prods;   // biproduct: apex the disjoint union
  limits::ChosenCoproducts cops;  // same apexes; psi is the identity
  limits::ZeroStructure zero;     // zero object the empty set
  std::vector<Obj> objs;
};

FinRelBundle make_finrel(int n, const Bounds& bounds = {});

// --------------------------------------------------- direct Par tensor ----

// The wedge A (v) B = (A+B)+(A x B) on partial maps, with every structure
// map given by its pointwise case analysis (no generic construction); the
// left distributor is the identity on the A, B, C and A x B parts and
// undefined on the A x C part. Also carries the five-case A & B action for
// difference testing against (v).
struct FinParDirect {
  FinParBundle base;
  ldc::LdcStructure L;
  std::function<Obj(Obj, Obj)> amp;
  std::function<Mor(Mor, Mor)> amp_mor;
};

FinParDirect finpar_direct_ldc(int n, const Bounds& bounds = {});

// Comparison functor on morphisms: a Kleisli map over total functions,
// wrapped as base f : A -> B + {*}, becomes the partial map defined exactly
// where f lands in B.
Mor kleisli_to_finpar(const construct::KleisliResult& K,
                      const FinSetCategory& S, const FinParCategory& P, Mor m);

// ---------------------------------------------------- powerset functors ----

struct PowersetFunctors {
  construct::LatticeValuedFunctor P;   // fibers: subsets as bitmask ids
  construct::LatticeValuedFunctor P2;  // fibers: all sets of subsets, interned
  // Fibers restricted to up-closed families (U in F and U subset U' implies
  // U' in F).  These are closed under the relational action and under the
  // fiber meets/joins, and the projection/injection adjunction holds, so this
  // is the variant whose total category certifies.
  construct::LatticeValuedFunctor P2up;
};

PowersetFunctors powerset_functors(const FinRelBundle& R);

// --------------------------------------------------- lattice generators ----

construct::FiniteBDL bdl_chain(int n);
construct::FiniteBDL bdl_boolean(int k);
construct::FiniteBDL bdl_divisors(int n);
construct::FiniteBDL bdl_product(const construct::FiniteBDL& A,
                                 const construct::FiniteBDL& B);

// Every distributive lattice with at most max_n elements, one per
// isomorphism class, by exhaustive search over order matrices in
// linear-extension form.
std::vector<construct::FiniteBDL> all_distributive_lattices(int max_n);

// Independent route for the same census: downset lattices of all posets on
// at most max_n - 1 points (deduplicated up to isomorphism).
std::vector<construct::FiniteBDL> distributive_lattices_by_downsets(int max_n);

// Order isomorphism by exhaustive permutation search.
bool bdl_isomorphic(const construct::FiniteBDL& A,
                    const construct::FiniteBDL& B);

}  // namespace ldcw::zoo
