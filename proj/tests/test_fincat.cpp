// Category engines, derived categories, functors, and the axioms validator.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ldcw/fincat.hpp"

using namespace ldcw;
using namespace ldcw::fincat;

namespace {

// The walking arrow: two objects, one non-identity morphism.
TableCategoryData walking_arrow() {
  TableCategoryData d;
  d.objects = {"A", "B"};
  d.morphisms = {{"1A", 0, 0}, {"1B", 1, 1}, {"f", 0, 1}};
  d.identities = {0, 1};
  d.composition[{0, 0}] = 0;
  d.composition[{1, 1}] = 1;
  d.composition[{0, 2}] = 2;
  d.composition[{2, 1}] = 2;
  return d;
}

int count_fails(const std::vector<LawReport>& rs) {
  int n = 0;
  for (const auto& r : rs)
    if (r.status == Status::Fail) ++n;
  return n;
}

const LawReport* find_report(const std::vector<LawReport>& rs,
                             const std::string& id) {
  for (const auto& r : rs)
    if (r.law_id == id) return &r;
  return nullptr;
}

}  // namespace

TEST_CASE("table category validates and enumerates homs") {
  TableCategory C(walking_arrow());
  auto objs = C.objects();
  CHECK(all_pass(validate_category(C, objs)));
  CHECK(C.hom(Obj{0}, Obj{1}).size() == 1);
  CHECK(C.hom(Obj{1}, Obj{0}).empty());
  CHECK(C.is_identity(C.identity(Obj{0})));
}

namespace {

// Three objects X -> Y -> Z with the composite c = a;b and a second
// parallel morphism d : X -> Z.
TableCategoryData two_routes() {
  TableCategoryData t;
  t.objects = {"X", "Y", "Z"};
  t.morphisms = {{"1X", 0, 0}, {"1Y", 1, 1}, {"1Z", 2, 2},
                 {"a", 0, 1},  {"b", 1, 2},  {"c", 0, 2},
                 {"d", 0, 2}};
  t.identities = {0, 1, 2};
  t.composition[{0, 0}] = 0;
  t.composition[{1, 1}] = 1;
  t.composition[{2, 2}] = 2;
  t.composition[{0, 3}] = 3;
  t.composition[{3, 1}] = 3;
  t.composition[{1, 4}] = 4;
  t.composition[{4, 2}] = 4;
  t.composition[{0, 5}] = 5;
  t.composition[{5, 2}] = 5;
  t.composition[{0, 6}] = 6;
  t.composition[{6, 2}] = 6;
  t.composition[{3, 4}] = 5;  // a;b = c
  return t;
}

}  // namespace

TEST_CASE("broken composition table is rejected with a witness") {
  auto t = two_routes();
  // Mutation: the identity row redirected to the parallel morphism
  // (type-correct: c and d share their endpoints).
  t.composition[{0, 5}] = 6;  // 1X;c declared to be d
  TableCategory C(t, /*strict=*/false);
  auto rs = validate_category(C, C.objects());
  CHECK(count_fails(rs) > 0);
  const auto* f = first_failure(rs);
  REQUIRE(f != nullptr);
  CHECK(f->witness.has_value());
}

TEST_CASE("identity slot pointing at a non-identity endomorphism is caught") {
  TableCategoryData d;
  d.objects = {"X"};
  d.morphisms = {{"1X", 0, 0}, {"e", 0, 0}};
  d.identities = {1};  // mutation: e is idempotent but not the identity
  d.composition[{0, 0}] = 0;
  d.composition[{0, 1}] = 1;
  d.composition[{1, 0}] = 1;
  d.composition[{1, 1}] = 1;
  TableCategory C(d, /*strict=*/false);
  auto rs = validate_category(C, C.objects());
  const auto* r = find_report(rs, "cat:identity_left");
  REQUIRE(r != nullptr);
  CHECK(r->status == Status::Fail);
}

TEST_CASE("poset category has at most one morphism per ordered pair") {
  PosetCategory P({"x", "y", "z"},
                  {{true, true, true}, {false, true, true}, {false, false, true}});
  CHECK(all_pass(validate_category(P, P.objects())));
  CHECK(P.hom(Obj{0}, Obj{2}).size() == 1);
  CHECK(P.hom(Obj{2}, Obj{0}).empty());
  CHECK(P.arrow(Obj{0}, Obj{1}) == P.hom(Obj{0}, Obj{1}).front());
}

TEST_CASE("opposite of opposite restores hom-sets") {
  auto C = std::make_shared<TableCategory>(walking_arrow());
  auto op = std::make_shared<OppositeCategory>(C);
  OppositeCategory opop(op);
  for (Obj a : C->objects()) {
    for (Obj b : C->objects()) {
      CHECK(opop.hom(a, b) == C->hom(a, b));
    }
  }
  CHECK(op->hom(Obj{1}, Obj{0}).size() == 1);
}

TEST_CASE("product category hom-sets multiply") {
  auto C = std::make_shared<TableCategory>(walking_arrow());
  PosetCategory chain({"0", "1"}, {{true, true}, {false, true}});
  auto D = std::make_shared<PosetCategory>(chain);
  ProductCategory P(C, D, C->objects(), D->objects());
  // [DERIVED] |hom((A,x),(B,y))| = |hom(A,B)| * |hom(x,y)| counted both ways.
  for (Obj a : C->objects()) {
    for (Obj b : C->objects()) {
      for (Obj x : D->objects()) {
        for (Obj y : D->objects()) {
          CHECK(P.hom(P.pair_obj(a, x), P.pair_obj(b, y)).size() ==
                C->hom(a, b).size() * D->hom(x, y).size());
        }
      }
    }
  }
  CHECK(all_pass(validate_category(P, P.objects())));
}

TEST_CASE("product of one-object categories is a one-object category") {
  TableCategoryData d;
  d.objects = {"*"};
  d.morphisms = {{"1", 0, 0}};
  d.identities = {0};
  d.composition[{0, 0}] = 0;
  auto C = std::make_shared<TableCategory>(d);
  ProductCategory P(C, C, C->objects(), C->objects());
  CHECK(P.num_objects() == 1);
}

TEST_CASE("identity functor certifies; a corrupted morphism map is caught") {
  auto C = std::make_shared<TableCategory>(walking_arrow());
  auto objs = C->objects();
  CHECK(all_pass(check_functor(identity_functor(C), objs)));

  // Mutation: the composite c = a;b is sent to the parallel morphism d
  // (type-correct), so composition is no longer preserved.
  auto D = std::make_shared<TableCategory>(two_routes());
  Functor F = identity_functor(D);
  F.mor = [D](Mor m) {
    return D->mor_name(m) == "c" ? D->hom(Obj{0}, Obj{2})[1] : m;
  };
  auto rs = check_functor(F, D->objects());
  CHECK(count_fails(rs) > 0);
  CHECK(first_failure(rs)->witness.has_value());
}

TEST_CASE("identity natural transformation certifies") {
  auto C = std::make_shared<TableCategory>(walking_arrow());
  NaturalTransformation eta{identity_functor(C), identity_functor(C),
                            [C](Obj a) { return C->identity(a); }};
  CHECK(all_pass(check_natural(eta, C->objects())));
}

TEST_CASE("is_isomorphism is symmetric") {
  auto C = std::make_shared<TableCategory>(walking_arrow());
  for (Obj a : C->objects()) {
    Mor id = C->identity(a);
    auto inv = is_isomorphism(*C, id);
    REQUIRE(inv.has_value());
    CHECK(is_isomorphism(*C, *inv).has_value());
  }
  CHECK(!is_isomorphism(*C, C->hom(Obj{0}, Obj{1}).front()).has_value());
}
