#pragma once
// Collapse classifiers and equivalence suites: the posetal five-way group
// (posetal / distributive / strict initial / costrict terminal) and the
// semi-additive four-way group (semi-additive / compact / invertible
// distributors / isomix), with the canonical distributivity maps and the
// candidate inverses appearing in the collapse proofs.

#include "ldcw/cldc.hpp"

namespace ldcw::collapse {

struct DistributivityMaps {
  Fam3 dL;       // (A x B)+(A x C) -> A x (B+C),  [1 x i0, 1 x i1]
  Fam3 dR;       // (A x C)+(B x C) -> (A+B) x C,  [i0 x 1, i1 x 1]
  Fam3 dL_flat;  // A x (B+C) -> (A x B)+(A x C), candidate right inverse
  Fam3 partialR; // (A x B)+C -> A x (B+C); null unless m_inv was supplied
};

// m_inv, when present, is the inverse of the nullary mix map bot -> top.
DistributivityMaps distributivity_maps(const cldc::CldcStructure& X,
                                       std::optional<Mor> m_inv = std::nullopt);

struct Classification {
  // Posetal group.
  bool posetal = false;
  bool distributive = false;
  bool strict_initial = false;
  bool costrict_terminal = false;
  // Semi-additive group.
  bool semi_additive = false;
  bool invertible_distributors = false;
  bool isomix = false;
  bool compact = false;
  // Both at once.
  bool trivial = false;
  std::string posetal_witness;   // first counterexample found, if any
  std::string semiadd_witness;
};

// Each flag is computed independently from its own definition over the
// bounded objects, then the two equivalence groups are cross-validated; any
// internal disagreement throws HardFailure.
Classification classify(const cldc::CldcStructure& X);

// (a) right-inverse search for dL(A,top,top), all-objects existence iff
// posetal; (b) the strict-initial lemma square globally implies dL_flat is a
// componentwise right inverse of dL; (c) strict initial iff posetal;
// (d) distributive iff posetal; (e) costrict terminal iff posetal.
std::vector<LawReport> posetal_collapse_suite(const cldc::CldcStructure& X,
                                              const cldc::CldcOptions& opt = {});

// (a) when the nullary mix map is invertible: both presentations of
// partialR agree, partialR is a two-sided inverse of deltaL, and
// mix^{-1} = psi; (b) invertible distributors force t_bot invertible;
// (c) posetal and semi-additive together force every object to be a zero
// object.
std::vector<LawReport> semiadditive_collapse_suite(
    const cldc::CldcStructure& X, const cldc::CldcOptions& opt = {});

// Monoidality for x (lax) and + (colax), the two psi-compatibility squares,
// and agreement with the Frobenius certification on the same data.
std::vector<LawReport> check_semiadditive_functor(
    const ldc::FrobeniusFunctorData& D, const limits::ZeroStructure& z_source,
    const limits::ZeroStructure& z_target, const std::vector<Obj>& objs);

}  // namespace ldcw::collapse
