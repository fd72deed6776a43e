#pragma once
// File formats and report rendering.
//
// Category file (JSON): { "objects": [name...],
//   "morphisms": [{"name","dom","cod"}...], "identities": {obj: name},
//   "composition": [[f, g, fg]...] } with f;g = fg diagrammatic.
// A CLDC file extends it with "terminal"/"initial" plus "products" /
// "coproducts" witness tables ({"left","right","apex","pi0"/"iota0",...})
// and optional "deltaL"/"deltaR" tables indexed by object triples; pairing
// and copairing are recovered by unique search against the tables.
// Lattice file: { "elements": [...], "leq": [[x, y]...] }.
// Functor file: { "objects": {name: name}, "morphisms": {name: name} }.

#include <iosfwd>

#include "ldcw/construct.hpp"

namespace ldcw::serialize {

// ------------------------------------------------------------- category ----

fincat::TableCategoryData category_from_json(const std::string& text);

// Serializes the full subgraph on `objs` (all hom-sets between listed
// objects with composition restricted to it); object/morphism names are
// uniquified with #id suffixes when the engine reuses display names.
std::string category_to_json(const Category& C, const std::vector<Obj>& objs);

// ----------------------------------------------------------------- cldc ----

struct CldcFile {
  std::shared_ptr<const fincat::TableCategory> C;
  limits::ChosenProducts prods;
  limits::ChosenCoproducts cops;
  std::optional<Fam3> deltaL, deltaR;  // absent tables -> determined search
  std::vector<Obj> objs;
};

// Throws InputError (naming the field) on malformed or non-universal data.
CldcFile cldc_from_json(const std::string& text);

// Fails with InputError when the instance is not closed over `objs` (an
// apex or distributor leaves the listed objects) — such instances can only
// be exported as a plain category file.
std::string cldc_to_json(const cldc::CldcStructure& X);

// -------------------------------------------------------------- lattice ----

// The reader lives in construct (bdl_from_json); this is the writer.
std::string bdl_to_json(const construct::FiniteBDL& L);

// -------------------------------------------------------------- functor ----

struct FunctorFile {
  std::map<std::string, std::string> objects, morphisms;
};

FunctorFile functor_from_json(const std::string& text);

// Resolves the name maps against two instances and certifies functoriality;
// unresolved names are an InputError.
struct ResolvedFunctor {
  fincat::Functor F;
  std::vector<LawReport> reports;
};
ResolvedFunctor resolve_functor(const FunctorFile& ff, CatPtr source,
                                const std::vector<Obj>& source_objs,
                                CatPtr target,
                                const std::vector<Obj>& target_objs);

// -------------------------------------------------------------- reports ----

// { "instance": ..., "laws": [{"id","status","witness":{"objects",
//   "lhs_path","rhs_path"}}...], "classification": {...} }; classification
// object is emitted only when supplied.
std::string report_json(const std::string& instance,
                        const std::vector<LawReport>& laws,
                        const collapse::Classification* cls = nullptr);

// One line per law with a pass/fail marker and the first witness.
std::string report_text(const std::string& instance,
                        const std::vector<LawReport>& laws,
                        const collapse::Classification* cls = nullptr);

}  // namespace ldcw::serialize
