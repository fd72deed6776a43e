#pragma once
// Concrete category engines (table-backed and poset-backed), derived
// categories (opposite, product, full subcategory), functors, natural
// transformations, and the axioms validator.

#include <map>
#include <set>
#include <utility>

#include "ldcw/core.hpp"

namespace ldcw::fincat {

// ---------------------------------------------------------------------------
// Table-backed category, loadable from a file.
// ---------------------------------------------------------------------------

struct TableCategoryData {
  std::vector<std::string> objects;
  struct M {
    std::string name;
    int dom = -1, cod = -1;
  };
  std::vector<M> morphisms;
  std::vector<int> identities;                  // object index -> morphism index
  std::map<std::pair<int, int>, int> composition;  // (f,g) -> f;g
};

class TableCategory final : public Category {
 public:
  // strict = true validates that composition entries cover exactly the
  // composable pairs; false admits broken tables (for validator testing).
  explicit TableCategory(TableCategoryData data, bool strict = true);

  int num_objects() const override { return (int)data_.objects.size(); }
  Obj dom(Mor f) const override { return Obj{data_.morphisms.at(f.id).dom}; }
  Obj cod(Mor f) const override { return Obj{data_.morphisms.at(f.id).cod}; }
  Mor identity(Obj a) const override { return Mor{data_.identities.at(a.id)}; }
  Mor compose(Mor f, Mor g) const override;
  std::vector<Mor> hom(Obj a, Obj b) const override;
  std::string obj_name(Obj a) const override { return data_.objects.at(a.id); }
  std::string mor_name(Mor f) const override {
    return data_.morphisms.at(f.id).name;
  }

  int num_morphisms() const { return (int)data_.morphisms.size(); }

 private:
  TableCategoryData data_;
};

// ---------------------------------------------------------------------------
// Poset-backed category: at most one morphism a -> b, present iff leq[a][b].
// ---------------------------------------------------------------------------

class PosetCategory final : public Category {
 public:
  PosetCategory(std::vector<std::string> names,
                std::vector<std::vector<bool>> leq);

  int num_objects() const override { return (int)names_.size(); }
  Obj dom(Mor f) const override { return Obj{mors_.at(f.id).first}; }
  Obj cod(Mor f) const override { return Obj{mors_.at(f.id).second}; }
  Mor identity(Obj a) const override;
  Mor compose(Mor f, Mor g) const override;
  std::vector<Mor> hom(Obj a, Obj b) const override;
  std::string obj_name(Obj a) const override { return names_.at(a.id); }
  std::string mor_name(Mor f) const override;

  bool leq(Obj a, Obj b) const { return leq_.at(a.id).at(b.id); }
  // The unique morphism a -> b; throws InputError if a is not below b.
  Mor arrow(Obj a, Obj b) const;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<bool>> leq_;
  std::vector<std::pair<int, int>> mors_;            // (dom, cod)
  std::map<std::pair<int, int>, int> mor_index_;
};

// ---------------------------------------------------------------------------
// Derived categories.
// ---------------------------------------------------------------------------

class OppositeCategory final : public Category {
 public:
  explicit OppositeCategory(CatPtr base) : base_(std::move(base)) {}

  int num_objects() const override { return base_->num_objects(); }
  Obj dom(Mor f) const override { return base_->cod(f); }
  Obj cod(Mor f) const override { return base_->dom(f); }
  Mor identity(Obj a) const override { return base_->identity(a); }
  Mor compose(Mor f, Mor g) const override {
    require_composable(f, g);
    return base_->compose(g, f);
  }
  std::vector<Mor> hom(Obj a, Obj b) const override { return base_->hom(b, a); }
  std::string obj_name(Obj a) const override { return base_->obj_name(a); }
  std::string mor_name(Mor f) const override { return base_->mor_name(f); }

  const CatPtr& base() const { return base_; }

 private:
  CatPtr base_;
};

// Product category with on-demand interning of object and morphism pairs.
class ProductCategory final : public Category {
 public:
  // Pre-interns the cartesian grid of the given object lists (row-major),
  // so canonical enumeration order is deterministic.
  ProductCategory(CatPtr left, CatPtr right, const std::vector<Obj>& lobjs,
                  const std::vector<Obj>& robjs);

  Obj pair_obj(Obj a, Obj x) const;
  Mor pair_mor(Mor f, Mor g) const;
  std::pair<Obj, Obj> split_obj(Obj p) const;
  std::pair<Mor, Mor> split_mor(Mor m) const;

  int num_objects() const override { return (int)obj_pairs_.size(); }
  Obj dom(Mor f) const override;
  Obj cod(Mor f) const override;
  Mor identity(Obj a) const override;
  Mor compose(Mor f, Mor g) const override;
  std::vector<Mor> hom(Obj a, Obj b) const override;
  std::string obj_name(Obj a) const override;
  std::string mor_name(Mor f) const override;
  // Componentwise structural inversion (avoids enumerating the paired homs).
  std::optional<Mor> find_inverse(Mor f) const override {
    auto [l, r] = split_mor(f);
    auto li = left_->find_inverse(l);
    if (!li) return std::nullopt;
    auto ri = right_->find_inverse(r);
    if (!ri) return std::nullopt;
    return pair_mor(*li, *ri);
  }

  const CatPtr& left() const { return left_; }
  const CatPtr& right() const { return right_; }

 private:
  CatPtr left_, right_;
  mutable std::vector<std::pair<int, int>> obj_pairs_;
  mutable std::map<std::pair<int, int>, int> obj_index_;
  mutable std::vector<std::pair<int, int>> mor_pairs_;
  mutable std::map<std::pair<int, int>, int> mor_index_;
};

// Full subcategory on a predicate over base objects; base objects satisfying
// the predicate are interned on demand (morphism ids are the base's).
class FullSubcategory final : public Category {
 public:
  FullSubcategory(CatPtr base, std::function<bool(Obj)> pred,
                  const std::vector<Obj>& seed);

  Obj from_base(Obj base_obj) const;            // interns; checks predicate
  Obj to_base(Obj a) const { return Obj{base_objs_.at(a.id)}; }

  int num_objects() const override { return (int)base_objs_.size(); }
  Obj dom(Mor f) const override { return from_base(base_->dom(f)); }
  Obj cod(Mor f) const override { return from_base(base_->cod(f)); }
  Mor identity(Obj a) const override { return base_->identity(to_base(a)); }
  Mor compose(Mor f, Mor g) const override { return base_->compose(f, g); }
  std::vector<Mor> hom(Obj a, Obj b) const override {
    return base_->hom(to_base(a), to_base(b));
  }
  std::string obj_name(Obj a) const override {
    return base_->obj_name(to_base(a));
  }
  std::string mor_name(Mor f) const override { return base_->mor_name(f); }
  // Delegate to the base engine's (possibly structural) inversion; the
  // inverse of a morphism of the subcategory lies in the subcategory.
  std::optional<Mor> find_inverse(Mor f) const override {
    return base_->find_inverse(f);
  }

  const CatPtr& base() const { return base_; }

 private:
  CatPtr base_;
  std::function<bool(Obj)> pred_;
  mutable std::vector<int> base_objs_;
  mutable std::map<int, int> index_;
};

// ---------------------------------------------------------------------------
// Functors and natural transformations.
// ---------------------------------------------------------------------------

struct Functor {
  CatPtr source, target;
  std::function<Obj(Obj)> obj;
  std::function<Mor(Mor)> mor;
};

Functor identity_functor(CatPtr C);
Functor compose_functors(const Functor& F, const Functor& G);  // F then G

struct NaturalTransformation {
  Functor F, G;        // parallel functors
  Fam1 at;             // component at each source object: F(A) -> G(A)
};

// All morphisms between the listed objects, in canonical order.
std::vector<Mor> morphisms_between(const Category& C,
                                   const std::vector<Obj>& objs);

std::vector<LawReport> check_functor(const Functor& F,
                                     const std::vector<Obj>& objs);
std::vector<LawReport> check_natural(const NaturalTransformation& eta,
                                     const std::vector<Obj>& objs);

// ---------------------------------------------------------------------------
// Axioms validator and isomorphism search.
// ---------------------------------------------------------------------------

std::vector<LawReport> validate_category(const Category& C,
                                         const std::vector<Obj>& objs,
                                         const Bounds& bounds = Bounds{});

std::optional<Mor> is_isomorphism(const Category& C, Mor f);

}  // namespace ldcw::fincat
