#pragma once
// Monoidal structures: coherence checks, derived (co)cartesian structures,
// tensor-inverse witnesses and shifted tensors.
//
// Direction conventions (used verbatim in every diagram transcription):
//   assoc_lr : (A.B).C -> A.(B.C)      assoc_rl : its inverse
//   unitR_in : A -> A.U               unitR_out : its inverse
//   unitL_in : A -> U.A               unitL_out : its inverse
//   sym      : A.B -> B.A             (optional)
// Tensor-style units are used "in" (A -> A.U); par-style units are used
// "out" (A.U -> A); both directions are stored so each diagram can use the
// exact arrow it displays.

#include "ldcw/core.hpp"
#include "ldcw/limits.hpp"

namespace ldcw::monoidal {

struct MonoidalStructure {
  CatPtr C;
  Obj unit;
  std::function<Obj(Obj, Obj)> ten;
  std::function<Mor(Mor, Mor)> ten_mor;
  Fam3 assoc_lr, assoc_rl;
  Fam1 unitR_in, unitR_out;
  Fam1 unitL_in, unitL_out;
  Fam2 sym;  // null when the structure is not symmetric

  bool symmetric() const { return static_cast<bool>(sym); }
  // id_A . g  and  f . id_B
  Mor lten(Obj a, Mor g) const { return ten_mor(C->identity(a), g); }
  Mor rten(Mor f, Obj b) const { return ten_mor(f, C->identity(b)); }
};

struct CheckOptions {
  Bounds bounds;
  // Cap on objects used for morphism-indexed checks (naturality,
  // bifunctoriality); strided-sampled beyond this.
  size_t nat_objects = 8;
  // Cap on composable pairs in the bifunctoriality square (quadratic in this
  // count); strided-sampled beyond it with `skipped` status.
  size_t bifunctor_pairs = 400;
};

std::vector<LawReport> check_monoidal_laws(const MonoidalStructure& M,
                                           const std::vector<Obj>& objs,
                                           const CheckOptions& opt = {});

MonoidalStructure derive_cartesian_monoidal(const limits::ChosenProducts& P);
MonoidalStructure derive_cocartesian_monoidal(const limits::ChosenCoproducts& P);

// --------------------------------------------------------- tensor inverse ----

struct TensorInverseWitness {
  Obj bot, botinv;
  Mor sL, sL_inv;  // sL : bot x botinv -> unit
  Mor sR, sR_inv;  // sR : botinv x bot -> unit
};

// Verifies sL/sR are mutually inverse pairs and the compatibility triangle
// (sR . 1); uL_out  =  assoc_lr; (1 . sL); uR_out.
std::vector<LawReport> check_tensor_inverse(const MonoidalStructure& M,
                                            const TensorInverseWitness& w);

// The shifted par monoidal structure A par B := A . (botinv . B) with unit
// bot; associator and unitors are the canonical associator/s composites.
MonoidalStructure shifted_par_structure(const MonoidalStructure& M,
                                        const TensorInverseWitness& w);

}  // namespace ldcw::monoidal
