#pragma once
// Cartesian linearly distributive structure: assembly from chosen
// (co)products (with distributor search), the canonical mix, the
// projection/injection and preinitial/subterminal theorem suites, and the
// duoidal interchange structure.

#include "ldcw/ldc.hpp"
#include "ldcw/limits.hpp"

namespace ldcw::cldc {

using monoidal::CheckOptions;

struct CldcStructure {
  CatPtr C;
  limits::ChosenProducts prods;
  limits::ChosenCoproducts cops;
  ldc::LdcStructure L;                // tensor = derived cartesian, par = derived cocartesian
  std::optional<ldc::MixData> mix;    // populated by cldc_mix
  std::vector<Obj> objs;              // bounded generator objects

  Obj top() const { return prods.terminal; }
  Obj bot() const { return cops.initial; }
};

struct CldcOptions {
  CheckOptions base;
  size_t quint_objects = 6;  // object cap for the 5-indexed interchange laws
};

struct AssembleResult {
  std::optional<CldcStructure> cldc;
  std::vector<LawReport> reports;
  std::string failure;  // empty on success; else search/law failure summary
  bool ok() const { return failure.empty() && cldc.has_value(); }
};

// Distributor families determined by the projection/injection equations:
// deltaL(A,B,C) is the unique h: A x (B+C) -> (A x B)+C with
//   h; (pi1 + 1) = pi1   and   (1 x i0); h = i0,
// resolved on demand for arbitrary triples (throws InputError when no or
// multiple candidates exist, naming the triple). Dually for deltaR.
Fam3 determined_deltaL(const limits::ChosenProducts& prods,
                       const limits::ChosenCoproducts& cops);
Fam3 determined_deltaR(const limits::ChosenProducts& prods,
                       const limits::ChosenCoproducts& cops);

// Derives the (co)cartesian monoidal structures, installs the given
// distributors or searches for determined ones, and certifies the full SLDC
// suite. On failure the reports carry the failing law or the unsatisfiable
// triple is named in `failure`.
AssembleResult assemble_cldc(CatPtr C, const limits::ChosenProducts& prods,
                             const limits::ChosenCoproducts& cops,
                             const std::vector<Obj>& objs,
                             std::optional<Fam3> deltaL = std::nullopt,
                             std::optional<Fam3> deltaR = std::nullopt,
                             const CldcOptions& opt = {});

// m = b_top = t_bot (disagreement is a hard failure), mix family built and
// the defining square certified over the bounded objects.
ldc::MixData cldc_mix(CldcStructure& X, std::vector<LawReport>* reports,
                      const CldcOptions& opt = {});

// The projection/injection equations, bot subterminal / top preinitial,
// hom(A,bot) nonempty iff pi0_{A,bot} iso (dually for top), the three-way
// preinitial/subterminal/mix-factorization equivalence, and the adjunction
// route |hom(bot x bot, bot)| = |hom(bot, top + bot)| = 1.
std::vector<LawReport> cldc_theorem_suite(const CldcStructure& X,
                                          const CldcOptions& opt = {});

struct DuoidalData {
  Mor Delta_bot;  // bot -> bot x bot
  Mor nabla_top;  // top + top -> top
  Mor m;          // bot -> top
  Fam4 mu;        // (A x B)+(C x D) -> (A+C) x (B+D)
  Fam4 tau_times; // (W x X) x (Y x Z) -> (W x Y) x (X x Z)
  Fam4 tau_plus;  // (W+X)+(Y+Z) -> (W+Y)+(X+Z)
};

DuoidalData duoidal_data(const CldcStructure& X);

// Pairing-vs-copairing presentations of Delta/nabla/mu, the four
// interchange/distributor equations, the two mix/flip squares, and the two
// symmetry squares.
std::vector<LawReport> duoidal_suite(const CldcStructure& X,
                                     const CldcOptions& opt = {});

}  // namespace ldcw::cldc
