// (Co)limit detection: terminal/initial, binary (co)products, object
// classification, zero structure and biproducts.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ldcw/zoo.hpp"

using namespace ldcw;

TEST_CASE("FinSet terminal and initial objects") {
  auto B = zoo::make_finset(2);
  // [TRIVIAL] the singleton is terminal and the empty set initial.
  CHECK(limits::find_terminal(*B.C, B.objs) == Obj{1});
  CHECK(limits::find_initial(*B.C, B.objs) == Obj{0});
  CHECK(B.prods.terminal == Obj{1});
  CHECK(B.cops.initial == Obj{0});
}

TEST_CASE("FinSet chosen products satisfy the universal property") {
  auto B = zoo::make_finset(2);
  auto w = B.prods.at(Obj{2}, Obj{2});
  // [DERIVED] |A x B| = |A| * |B| for the searched witness.
  CHECK(w.apex == Obj{4});
  for (Mor f : B.C->hom(Obj{2}, Obj{2})) {
    for (Mor g : B.C->hom(Obj{2}, Obj{2})) {
      Mor p = w.pair(f, g);
      CHECK(B.C->compose(p, w.pi0) == f);
      CHECK(B.C->compose(p, w.pi1) == g);
    }
  }
  auto c = B.cops.at(Obj{1}, Obj{2});
  CHECK(c.apex == Obj{3});
  CHECK(B.C->compose(c.i0, c.copair(B.C->identity(Obj{1}),
                                    B.C->mor(Obj{2}, Obj{1}, {0, 0}))) ==
        B.C->identity(Obj{1}));
}

TEST_CASE("exhaustive product search agrees with the chosen structure") {
  auto B = zoo::make_finset(1);
  auto w = limits::find_binary_product(*B.C, B.objs, Obj{1}, Obj{1});
  REQUIRE(w.has_value());
  CHECK(w->apex == Obj{1});
  // With the bounded object list {0, 1} the singleton itself satisfies the
  // coproduct universal property of 1 and 1 (no object can tell the
  // injections apart), so the bounded search legitimately returns it.
  auto cw = limits::find_binary_coproduct(*B.C, B.objs, Obj{1}, Obj{1});
  REQUIRE(cw.has_value());
  CHECK(cw->apex == Obj{1});
}

TEST_CASE("object classification in FinSet") {
  auto B = zoo::make_finset(2);
  auto f0 = limits::classify_object(*B.C, B.objs, Obj{0}, &B.prods, &B.cops);
  CHECK(f0.preinitial);
  CHECK(f0.strict_initial);  // every map into the empty set is an iso
  CHECK(f0.subterminal);     // hom(X, 0) never has two elements
  auto f1 = limits::classify_object(*B.C, B.objs, Obj{1}, &B.prods, &B.cops);
  CHECK(f1.subterminal);
  CHECK(!f1.preinitial);
}

TEST_CASE("FinRel zero structure: zero object is the empty set") {
  auto B = zoo::make_finrel(2);
  // [TRIVIAL] terminal = initial = empty set.
  CHECK(B.zero.zero == Obj{0});
  // [FROZEN] psi is the identity relation on the disjoint union.
  CHECK(B.zero.psi(Obj{1}, Obj{1}) == B.C->identity(Obj{2}));
  // Zero morphisms absorb.
  Mor z = B.zero.zero_mor(Obj{2}, Obj{1});
  for (Mor f : B.C->hom(Obj{1}, Obj{2})) {
    CHECK(B.C->compose(f, z) == B.zero.zero_mor(Obj{1}, Obj{1}));
  }
}

TEST_CASE("FinRel disjoint unions are biproducts") {
  auto B = zoo::make_finrel(2);
  auto pw = B.prods.at(Obj{1}, Obj{2});
  auto cw = B.cops.at(Obj{1}, Obj{2});
  CHECK(pw.apex == cw.apex);
  limits::BiproductCandidate cand{Obj{1}, Obj{2}, pw.apex, pw.pi0, pw.pi1,
                                  cw.i0, cw.i1};
  CHECK(all_pass(limits::check_biproduct(*B.C, B.zero, cand, B.objs)));
}

TEST_CASE("swapped injections break the biproduct certificate") {
  auto B = zoo::make_finrel(1);
  auto pw = B.prods.at(Obj{1}, Obj{1});
  auto cw = B.cops.at(Obj{1}, Obj{1});
  // Mutation: the two injection legs exchanged (type-correct at (1,1)).
  limits::BiproductCandidate cand{Obj{1}, Obj{1}, pw.apex, pw.pi0, pw.pi1,
                                  cw.i1, cw.i0};
  auto rs = limits::check_biproduct(*B.C, B.zero, cand, B.objs);
  const auto* f = first_failure(rs);
  REQUIRE(f != nullptr);
  CHECK(f->witness.has_value());
}

TEST_CASE("zero structure requires terminal and initial to coincide") {
  auto B = zoo::make_finset(1);
  std::vector<LawReport> rs;
  CHECK(!limits::zero_structure(B.prods, B.cops, B.objs, &rs).has_value());
}
