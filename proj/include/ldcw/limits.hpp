#pragma once
// (Co)limit detection and certification: terminal/initial objects, binary
// (co)products with exhaustively-checked universal properties, object
// classification (preinitial/subterminal/semizero/strict), zero structure
// with the canonical comparison psi, and biproducts.

#include "ldcw/core.hpp"
#include "ldcw/fincat.hpp"

namespace ldcw::limits {

// Chosen product of (left, right): apex with projections and a pairing
// operation (f: C->left, g: C->right) |-> <f,g>: C->apex.
struct ProductWitness {
  Obj left, right, apex;
  Mor pi0, pi1;
  std::function<Mor(Mor, Mor)> pair;
};

struct CoproductWitness {
  Obj left, right, apex;
  Mor i0, i1;
  std::function<Mor(Mor, Mor)> copair;  // (f: left->C, g: right->C) -> [f,g]
};

// Chosen structure: a terminal object with t_A: A -> terminal, and a chosen
// product witness for every pair (total on all objects reachable in the
// instance, memoized).
struct ChosenProducts {
  CatPtr C;
  Obj terminal;
  Fam1 bang;  // t_A
  std::function<ProductWitness(Obj, Obj)> at;
};

struct ChosenCoproducts {
  CatPtr C;
  Obj initial;
  Fam1 cobang;  // b_A : initial -> A
  std::function<CoproductWitness(Obj, Obj)> at;
};

// Wrap the witness resolver in a memo table (witness construction may be
// expensive; resolution must be idempotent).
std::function<ProductWitness(Obj, Obj)> memo_products(
    std::function<ProductWitness(Obj, Obj)> f);
std::function<CoproductWitness(Obj, Obj)> memo_coproducts(
    std::function<CoproductWitness(Obj, Obj)> f);

// --------------------------------------------------------------- search ----

std::optional<Obj> find_terminal(const Category& C, const std::vector<Obj>& objs);
std::optional<Obj> find_initial(const Category& C, const std::vector<Obj>& objs);

// Exhaustive search over apex candidates and leg pairs; universal property
// (existence and uniqueness) certified against every object in `objs`.
// Returns the first witness in canonical order.
std::optional<ProductWitness> find_binary_product(const Category& C,
                                                  const std::vector<Obj>& objs,
                                                  Obj A, Obj B);
std::optional<CoproductWitness> find_binary_coproduct(
    const Category& C, const std::vector<Obj>& objs, Obj A, Obj B);

// Chosen structure assembled by search restricted to `objs` (suitable for
// table/poset categories that are closed under the searched structure).
std::optional<ChosenProducts> searched_products(CatPtr C,
                                                const std::vector<Obj>& objs);
std::optional<ChosenCoproducts> searched_coproducts(CatPtr C,
                                                    const std::vector<Obj>& objs);

// --------------------------------------------------------- classification ----

struct ObjectFlags {
  bool preinitial = false;
  bool subterminal = false;
  bool semizero = false;
  bool strict_initial = false;
  bool costrict_terminal = false;
};

// Direct definitions (hom counting against `objs`); when chosen structure is
// supplied, the nabla/Delta and injection/projection characterizations are
// cross-checked and any disagreement throws HardFailure.
ObjectFlags classify_object(const Category& C, const std::vector<Obj>& objs,
                            Obj A, const ChosenProducts* prods = nullptr,
                            const ChosenCoproducts* cops = nullptr);

// ----------------------------------------------------------------- zero ----

struct ZeroStructure {
  Obj zero;
  Fam2 zero_mor;  // 0_{X,Y} = t_X; b_Y
  Fam2 psi;       // X+Y -> X x Y, [<1,0>,<0,1>]
};

// Requires the chosen terminal and chosen initial to be the same object.
// Certifies: both presentations of psi agree; zero morphisms absorb.
std::optional<ZeroStructure> zero_structure(const ChosenProducts& prods,
                                            const ChosenCoproducts& cops,
                                            const std::vector<Obj>& objs,
                                            std::vector<LawReport>* reports);

// ------------------------------------------------------------ biproduct ----

struct BiproductCandidate {
  Obj left, right, apex;
  Mor pi0, pi1, i0, i1;
};

std::vector<LawReport> check_biproduct(const Category& C,
                                       const ZeroStructure& zero,
                                       const BiproductCandidate& cand,
                                       const std::vector<Obj>& objs);

}  // namespace ldcw::limits
