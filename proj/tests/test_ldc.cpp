// Linearly distributive laws, mix theory, and negation.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ldcw/zoo.hpp"

using namespace ldcw;

TEST_CASE("3-chain lattice: full SLDC suite and mix class") {
  auto res = construct::bdl_to_cldc(zoo::bdl_chain(3));
  REQUIRE(res.ok());
  CHECK(all_pass(ldc::sldc_suite(res.X->L, res.X->objs)));
  auto mx = ldc::mix_analysis(res.X->L, res.X->objs);
  // Nontrivial posetal instance: mix exists but the nullary map is not iso.
  CHECK(mx.cls == ldc::MixClass::Mix);
  REQUIRE(mx.data.has_value());
  // [TRIVIAL] mix_{A,B} is the unique arrow A^B -> AvB.
  CHECK(all_pass(mx.reports));
}

TEST_CASE("FinPar direct wedge: isomix SLDC") {
  auto D = zoo::finpar_direct_ldc(2);
  CHECK(all_pass(ldc::sldc_suite(D.L, D.base.objs)));
  auto mx = ldc::mix_analysis(D.L, D.base.objs);
  CHECK(mx.cls == ldc::MixClass::Isomix);
}

TEST_CASE("either-or-both action on morphisms: partiality case table") {
  auto D = zoo::finpar_direct_ldc(2);
  auto C = D.base.C;
  Mor id1 = C->identity(Obj{1});
  Mor undef = C->mor(Obj{1}, Obj{1}, {-1});
  // W(1,1) layout: one A point, one B point, one (A x B) pair.
  Obj w = D.L.tensor.ten(Obj{1}, Obj{1});
  REQUIRE(w == Obj{3});

  // [FROZEN] f (v) g on a pair survives only when both components are
  // defined; here g is everywhere undefined, so the pair point dies.
  const auto& t = C->map_of(D.L.tensor.ten_mor(id1, undef));
  CHECK(t[0] == 0);   // A part follows f
  CHECK(t[1] == -1);  // B part follows g (undefined)
  CHECK(t[2] == -1);  // pair part: g undefined kills it

  // [FROZEN] f & g on a pair falls back to the surviving component.
  const auto& s = C->map_of(D.amp_mor(id1, undef));
  CHECK(s[0] == 0);
  CHECK(s[1] == -1);
  CHECK(s[2] == 0);  // pair point survives into the A part via f

  // [FROZEN] the left distributor is undefined on the A x C part.
  const auto& dl = C->map_of(D.L.deltaL(Obj{1}, Obj{1}, Obj{1}));
  // A (v) (B + C) has parts A | B+C | A x (B+C); the pair (a, c) dies.
  CHECK(dl[3] == 2);   // (a, b) pair lands in the A x B part of (AvB)+C
  CHECK(dl[4] == -1);  // (a, c) pair is undefined
}

TEST_CASE("negation exists exactly on the Boolean lattice B2, not on C3") {
  auto b2 = construct::bdl_to_cldc(zoo::bdl_boolean(2));
  REQUIRE(b2.ok());
  auto neg = ldc::find_negation(b2.X->L, b2.X->objs);
  CHECK(neg.total());
  CHECK(neg.per_object.size() == b2.X->objs.size());

  auto c3 = construct::bdl_to_cldc(zoo::bdl_chain(3));
  auto neg3 = ldc::find_negation(c3.X->L, c3.X->objs);
  CHECK(!neg3.total());
  // [DERIVED] the middle chain element has no complement.
  CHECK(neg3.failure == "1");
}

TEST_CASE("the canonical units pair certifies") {
  auto res = construct::bdl_to_cldc(zoo::bdl_boolean(2));
  auto pair = ldc::units_pair(res.X->L);
  CHECK(all_pass(ldc::check_complementation_pair(res.X->L, pair)));
}

TEST_CASE("complement adjunction bijection on B2") {
  auto res = construct::bdl_to_cldc(zoo::bdl_boolean(2));
  auto neg = ldc::find_negation(res.X->L, res.X->objs);
  REQUIRE(neg.total());
  for (Obj b : res.X->objs) {
    CHECK(all_pass(ldc::complement_adjunction(res.X->L, neg.per_object[1].second,
                                              b, res.X->objs[2])));
  }
}

TEST_CASE("a wrong distributor leg is caught with a witness") {
  auto B = zoo::make_finrel(1);
  construct::SemiAddInput SI{B.C, B.prods, B.cops, B.zero, B.objs};
  auto res = construct::semiadditive_to_cldc(SI);
  REQUIRE(res.ok());
  ldc::LdcStructure L = res.cldc->L;
  // Mutation: deltaL post-composed with the par swap (type-correct in
  // FinRel: (A x B) par C and C par (A x B) are the same object).
  auto orig = L.deltaL;
  auto par = L.par;
  auto ten = L.tensor;
  L.deltaL = [orig, par, ten](Obj a, Obj b, Obj c) {
    Mor d = orig(a, b, c);
    return par.C->compose(d, par.sym(ten.ten(a, b), c));
  };
  auto rs = ldc::check_ldc_laws(L, res.cldc->objs);
  const auto* f = first_failure(rs);
  REQUIRE(f != nullptr);
  CHECK(f->witness.has_value());
}

TEST_CASE("compact instance: degenerate equivalence witness exists") {
  auto B = zoo::make_finrel(1);
  construct::SemiAddInput SI{B.C, B.prods, B.cops, B.zero, B.objs};
  auto res = construct::semiadditive_to_cldc(SI);
  REQUIRE(res.ok());
  auto mx = ldc::mix_analysis(res.cldc->L, res.cldc->objs);
  CHECK(mx.cls == ldc::MixClass::Compact);
  auto w = ldc::degenerate_equivalence_witness(res.cldc->L, mx, res.cldc->objs);
  REQUIRE(w.has_value());
  CHECK(all_pass(w->reports));
}
