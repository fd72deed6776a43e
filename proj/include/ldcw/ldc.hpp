#pragma once
// Linearly distributive structure: the full law suite, symmetry, mix theory,
// complementation/negation, Frobenius linear functors, and the equivalence
// witnesses for compact / invertible-distributor instances.

#include "ldcw/fincat.hpp"
#include "ldcw/monoidal.hpp"

namespace ldcw::ldc {

using monoidal::CheckOptions;
using monoidal::MonoidalStructure;

struct LdcStructure {
  MonoidalStructure tensor;  // (x, 1)
  MonoidalStructure par;     // (par, bot)
  Fam3 deltaL;               // A x (B par C) -> (A x B) par C
  Fam3 deltaR;               // (A par B) x C -> A par (B x C)
  Fam3 deltaL_inv, deltaR_inv;  // present only when distributors invertible

  const Category& cat() const { return *tensor.C; }
  bool symmetric() const { return tensor.symmetric() && par.symmetric(); }
  bool invertible_distributors() const {
    return static_cast<bool>(deltaL_inv) && static_cast<bool>(deltaR_inv);
  }
};

// The degenerate structure on a monoidal category: par = tensor, deltaR the
// associator and deltaL its inverse.
LdcStructure degenerate_ldc(const MonoidalStructure& M);

// Shifted-tensor structure from a certified tensor-inverse witness:
// A par B := A x (botinv x B), deltaR/deltaL pure associator composites.
LdcStructure shifted_tensor_ldc(const MonoidalStructure& M,
                                const monoidal::TensorInverseWitness& w);

// For an LDC with invertible distributors, botinv := 1 par 1 is a
// tensor-inverse of bot; sL/sR are built from the distributors and the
// witness is certified (throws HardFailure if certification fails).
monoidal::TensorInverseWitness tensor_inverse_from_invertible(
    const LdcStructure& L, std::vector<LawReport>* reports);

// ------------------------------------------------------------------ laws ----

// The ten defining equations: 4 unit, 4 associator, 2 left/right.
std::vector<LawReport> check_ldc_laws(const LdcStructure& L,
                                      const std::vector<Obj>& objs,
                                      const CheckOptions& opt = {});

// Naturality of deltaL/deltaR, one argument at a time.
std::vector<LawReport> check_delta_natural(const LdcStructure& L,
                                           const std::vector<Obj>& objs,
                                           const CheckOptions& opt = {});

// Symmetry compatibility; also verifies deltaR is determined by deltaL.
std::vector<LawReport> check_sldc_symmetry(const LdcStructure& L,
                                           const std::vector<Obj>& objs);

// Full suite: both monoidal structures, the ten equations, naturality,
// and (when symmetric) the braiding compatibility.
std::vector<LawReport> sldc_suite(const LdcStructure& L,
                                  const std::vector<Obj>& objs,
                                  const CheckOptions& opt = {});

// ------------------------------------------------------------------- mix ----

struct MixData {
  Mor m;     // bot -> 1
  Fam2 mix;  // A x B -> A par B (top route of the defining square)
};

enum class MixClass { NonMix, Mix, Isomix, Compact };
std::string mix_class_name(MixClass c);

struct MixAnalysis {
  std::optional<MixData> data;
  MixClass cls = MixClass::NonMix;
  std::vector<LawReport> reports;
};

// Builds the mix family from a nullary candidate via the top route.
MixData mix_from_m(const LdcStructure& L, Mor m);

// Searches hom(bot, 1) using the unit-instantiation shortcut, then confirms
// the full square on all pairs from objs; classifies; also checks the four
// mix/associator squares and naturality of mix. A shortcut/full-square
// disagreement throws HardFailure.
MixAnalysis mix_analysis(const LdcStructure& L, const std::vector<Obj>& objs,
                         const CheckOptions& opt = {});

// -------------------------------------------------------- complementation ----

struct ComplementationPair {
  Obj A, Ac;
  Mor gamma;  // A x Ac -> bot
  Mor tau;    // 1 -> Ac par A
};

std::vector<LawReport> check_complementation_pair(
    const LdcStructure& L, const ComplementationPair& pair);

// The canonical pair (bot, 1) with gamma/tau the unitor inverses.
ComplementationPair units_pair(const LdcStructure& L);

// The adjunction hom(A x B, C) ~ hom(B, Ac par C) induced by a certified
// pair: forward/backward verified mutually inverse by exhaustive application.
std::vector<LawReport> complement_adjunction(const LdcStructure& L,
                                             const ComplementationPair& pair,
                                             Obj B, Obj C);

struct NegationAssignment {
  std::vector<std::pair<Obj, ComplementationPair>> per_object;
  std::string failure;  // object with no certified candidate, when empty()
  bool total() const { return failure.empty(); }
};

// Symmetric LDCs only: for each object, search (Ac, gammaR, tauR) such that
// both induced pairs certify.
NegationAssignment find_negation(const LdcStructure& L,
                                 const std::vector<Obj>& objs);

// ------------------------------------------------------ Frobenius functors ----

struct FrobeniusFunctorData {
  LdcStructure source, target;
  fincat::Functor F;
  Mor m_unit;  // 1 -> F(1)
  Fam2 m_ten;  // F(A) x F(B) -> F(A x B)
  Mor n_bot;   // F(bot) -> bot
  Fam2 n_par;  // F(A par B) -> F(A) par F(B)
};

// Lax/colax monoidality plus the two distributor squares.
std::vector<LawReport> check_frobenius_linear(const FrobeniusFunctorData& D,
                                              const std::vector<Obj>& objs);

// The nullary-mix square and, as a consequence test, mix preservation.
std::vector<LawReport> check_mix_frobenius(const FrobeniusFunctorData& D,
                                           Mor m_source, Mor m_target,
                                           const std::vector<Obj>& objs);

// ---------------------------------------------------- equivalence witnesses ----

struct EquivalenceWitness {
  FrobeniusFunctorData forward, backward;
  std::vector<LawReport> reports;  // certification incl. mutual inverses
};

// Compact case: identity-carried Frobenius functors between the degenerate
// structure and L, with components (1, 1, 1, m_inv, mix) / (1, 1, 1, m,
// mix_inv).
std::optional<EquivalenceWitness> degenerate_equivalence_witness(
    const LdcStructure& L, const MixAnalysis& mix,
    const std::vector<Obj>& objs);

// Invertible-distributor case: identity-carried Frobenius functors between L
// and its shifted-tensor structure, carried by beta.
std::optional<EquivalenceWitness> shifted_equivalence_witness(
    const LdcStructure& L, const std::vector<Obj>& objs);

}  // namespace ldcw::ldc
