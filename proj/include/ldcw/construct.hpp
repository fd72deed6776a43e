#pragma once
// Category-building constructions: bounded distributive lattices,
// semi-additive bases, the semizero subcategory, (co)slices, products,
// Grothendieck totals of lattice-valued functors, the Kleisli category of
// the exception monad, and the either-or-both tensor on distributive
// symmetric monoidal categories with a zero object.

#include "ldcw/collapse.hpp"

namespace ldcw::construct {

// ------------------------------------------------------------- lattices ----

struct FiniteBDL {
  std::string name;
  int n = 0;                               // elements 0..n-1
  std::vector<std::string> elems;          // element names (defaulted if empty)
  std::vector<std::vector<bool>> leq;      // n x n
  // Derived by validate_bdl.
  std::vector<std::vector<int>> meet, join;
  int bottom = -1, top = -1;
};

struct BdlValidation {
  bool ok = false;
  std::string failure;  // includes the witness triple/pair on rejection
};

// Checks partial order, existence of all binary meets/joins and bounds
// (filling the derived tables), and both distributivity equations with a
// counterexample witness on failure (so M3 and N5 are rejected with
// evidence).
BdlValidation validate_bdl(FiniteBDL& L);

// { "elements": [...], "leq": [[x, y], ...] }  (reflexivity implied).
FiniteBDL bdl_from_json(const std::string& text, const std::string& name);

struct BdlCldcResult {
  std::optional<cldc::CldcStructure> X;
  std::vector<LawReport> reports;
  std::string failure;
  bool ok() const { return X.has_value() && failure.empty(); }
};

// Poset engine with morphism A -> B iff A <= B; products = meet, coproducts
// = join; distributors resolved by the determined search (unique since the
// engine is posetal); full suite certified.
BdlCldcResult bdl_to_cldc(const FiniteBDL& L, const cldc::CldcOptions& opt = {});

// -------------------------------------------------- semi-additive bases ----

struct SemiAddInput {
  CatPtr C;
  limits::ChosenProducts prods;
  limits::ChosenCoproducts cops;
  limits::ZeroStructure zero;
  std::vector<Obj> objs;
};

// Distributors built from the displayed psi/associator composites; both the
// x-route and +-route presentations are checked equal before certification;
// mix^{-1} = psi is certified through the semi-additive collapse suite.
cldc::AssembleResult semiadditive_to_cldc(const SemiAddInput& B,
                                          const cldc::CldcOptions& opt = {});

// ------------------------------------------------------------- semizero ----

struct SzResult {
  std::shared_ptr<const fincat::FullSubcategory> sub;
  std::optional<cldc::CldcStructure> X;  // the posetal CLDC on SZ
  std::vector<LawReport> reports;
  std::string failure;
};

// Full subcategory of semizero objects, certified closed under x, +, top,
// bot, posetal, and a CLDC.
SzResult sz_subcategory(const cldc::CldcStructure& X,
                        const cldc::CldcOptions& opt = {});

// Counts functors out of a posetal instance L that strictly preserve meets,
// joins, top and bottom: into SZ[X] versus into X itself; the two counts
// agree (restriction/extension are mutually inverse on strict preservers).
LawReport sz_adjunction_check(const cldc::CldcStructure& L,
                              const cldc::CldcStructure& X,
                              const SzResult& sz);

// ----------------------------------------------------------- (co)slices ----

struct SliceResult {
  std::shared_ptr<const fincat::FullSubcategory> sub;
  std::optional<cldc::CldcStructure> X;  // compact CLDC on the subcategory
  std::vector<LawReport> reports;        // incl. psi^{-1} = mix
  std::string failure;
};

// X/bot as the full subcategory of objects with a (unique) map to bot;
// terminal and initial both bot; certified compact with psi = <[1, b;b],
// [a;b, 1]> inverse to mix.
SliceResult slice_cldc(const cldc::CldcStructure& X,
                       const cldc::CldcOptions& opt = {});
// top/X dually: objects with a map from top; initial and terminal both top.
SliceResult coslice_cldc(const cldc::CldcStructure& X,
                         const cldc::CldcOptions& opt = {});

// The equivalence X/bot ~ X x bot: F(A) = A x bot, G inclusion,
// alpha_A = <1, a>, beta = pi0; functoriality, naturality and invertibility
// of the components certified.
std::vector<LawReport> slice_equivalence(const cldc::CldcStructure& X,
                                         const SliceResult& slice);

// ------------------------------------------------------------- products ----

struct ProductCldcResult {
  std::shared_ptr<const fincat::ProductCategory> prod;
  std::optional<cldc::CldcStructure> X;
  std::vector<LawReport> reports;
  std::string failure;
};

// Componentwise structure on the product category; certified.
ProductCldcResult product_cldc(const cldc::CldcStructure& X,
                               const cldc::CldcStructure& Y,
                               const cldc::CldcOptions& opt = {});

// --------------------------- distributive SMC with zero, and the wedge ----

struct DistributiveSmcWithZero {
  CatPtr C;
  limits::ChosenCoproducts cops;
  monoidal::MonoidalStructure smash;  // symmetric (oslash, I)
  Obj zero;                           // = cops.initial, also terminal
  Fam1 bang;                          // the unique map A -> zero
  // Canonical transformations, certified isomorphisms:
  Fam3 dL, dL_inv;  // (A oslash B)+(A oslash C) -> A oslash (B+C)
  Fam3 dR, dR_inv;  // (A oslash C)+(B oslash C) -> (A+B) oslash C
  Fam1 uL, uL_inv;  // bot -> bot oslash A
  Fam1 uR, uR_inv;  // bot -> A oslash bot
};

// Builds the canonical transformations and finds their inverses (InputError
// naming the index when one is not invertible); bang by uniqueness search.
DistributiveSmcWithZero make_distributive_smc(
    CatPtr C, const limits::ChosenCoproducts& cops,
    const monoidal::MonoidalStructure& smash, const std::vector<Obj>& objs);

std::vector<LawReport> check_distributive_smc(const DistributiveSmcWithZero& M,
                                              const std::vector<Obj>& objs);

// The either-or-both tensor A wedge B = (A+B)+(A oslash B) with unit the
// zero object; associator built from the displayed legs (chi included), the
// reverse associator from the dualized legs (certified mutually inverse by
// the monoidal suite); distributors from the four displayed legs each; the
// result is an isomix SLDC with nullary mix map the identity on the zero
// object.
ldc::LdcStructure wedge_construction(const DistributiveSmcWithZero& M);

// --------------------------------------------------- lattice-valued F ----

struct LatticeValuedFunctor {
  CatPtr base;
  std::string name;
  // Fiber elements are opaque ids per base object; enumerate may throw
  // BudgetExceeded for fibers beyond the enumeration bound (lattice
  // operations keep working on ids produced structurally).
  std::function<std::vector<long>(Obj)> enumerate;
  std::function<bool(Obj, long, long)> leq;
  std::function<long(Obj, long, long)> meet, join;
  std::function<long(Obj)> top, bottom;
  std::function<std::string(Obj, long)> elem_name;
  // Contravariant action: for f : A -> B, apply(f, -) : fiber(B) -> fiber(A).
  std::function<long(Mor, long)> apply;
};

// Functoriality and lattice-homomorphism laws, exhaustively on the listed
// base objects.
std::vector<LawReport> check_lattice_valued_functor(
    const LatticeValuedFunctor& F, const std::vector<Obj>& objs);

struct GrothendieckResult {
  CatPtr C;  // the total category
  std::function<Obj(Obj, long)> make_obj;              // (base obj, fiber elt)
  std::function<std::pair<Obj, long>(Obj)> split_obj;
  std::function<Mor(Obj, Obj, Mor)> make_mor;          // validated
  std::function<Mor(Mor)> base_mor;
  std::optional<cldc::CldcStructure> X;
  std::vector<LawReport> reports;  // incl. the projection/injection adjunction
  std::string failure;
};

// Total category of a contravariant lattice-valued functor on a
// semi-additive base: objects (A, a), morphisms base maps f with
// a <= F(f)(b); witnesses per the displayed formulas, distributors the
// base's; full suite certified.
GrothendieckResult grothendieck(const cldc::CldcStructure& B,
                                const limits::ZeroStructure& zero,
                                const LatticeValuedFunctor& F,
                                const cldc::CldcOptions& opt = {});

// -------------------------------------------------------------- Kleisli ----

struct KleisliResult {
  CatPtr K;  // Kleisli category of the (.+top) monad
  // base f : A -> B+top with declared codomain B  |->  Kleisli map A -> B
  std::function<Mor(Mor, Obj)> wrap;
  std::function<Mor(Mor)> unwrap;
  fincat::Functor embed;             // J(f) = f; eta
  limits::ChosenCoproducts cops;     // displayed injections/copairing
  limits::ChosenProducts amp;        // the & products (terminal = bot)
  DistributiveSmcWithZero smc;       // (K, x-as-monoidal, top), zero = bot
  std::optional<ldc::LdcStructure> L;  // the wedge isomix SLDC
  std::vector<LawReport> reports;    // suite + the not-a-CLDC certificate
  std::string failure;
};

// Kleisli category of the exception monad of a distributive category
// (objects those of the base, maps A -> B+top); coproducts, & products and
// the x monoidal product per the displayed formulas; the wedge tensor built
// through wedge_construction on the induced distributive SMC with zero; the
// negative certificate checks A & B is not isomorphic to A+B on a
// nontrivial base.
KleisliResult kleisli_exception(CatPtr D, const limits::ChosenProducts& prods,
                                const limits::ChosenCoproducts& cops,
                                const std::vector<Obj>& objs,
                                const cldc::CldcOptions& opt = {});

}  // namespace ldcw::construct
