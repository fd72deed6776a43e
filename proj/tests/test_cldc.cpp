// CLDC assembly, the determined distributor search, mix, theorem suites,
// and the duoidal interchange.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ldcw/zoo.hpp"

using namespace ldcw;

TEST_CASE("Boolean lattice B2 assembles with a unique determined delta") {
  auto res = construct::bdl_to_cldc(zoo::bdl_boolean(2));
  REQUIRE(res.ok());
  CHECK(all_pass(res.reports));
  // The determined search resolves every triple without error.
  for (Obj a : res.X->objs) {
    for (Obj b : res.X->objs) {
      for (Obj c : res.X->objs) {
        CHECK(res.X->L.deltaL(a, b, c).valid());
      }
    }
  }
}

TEST_CASE("one-object category assembles trivially") {
  auto res = construct::bdl_to_cldc(zoo::bdl_chain(1));
  REQUIRE(res.ok());
  CHECK(all_pass(res.reports));
  CHECK(res.X->top() == res.X->bot());
}

TEST_CASE("FinSet is distributive but not a CLDC: the law suite refutes it") {
  auto B = zoo::make_finset(1);
  auto res = cldc::assemble_cldc(B.C, B.prods, B.cops, B.objs);
  CHECK(!res.ok());
  // [DERIVED-FROZEN] the determined delta exists per triple but the
  // left/right compatibility equation fails, first at (1,0,0,1).
  CHECK(res.failure == "law failure: cc:leftright_lineardist.1");
  const auto* f = first_failure(res.reports);
  REQUIRE(f != nullptr);
  CHECK(f->law_id == "cc:leftright_lineardist.1");
  REQUIRE(f->witness.has_value());
  CHECK(f->witness->objects == std::vector<std::string>{"1", "0", "0", "1"});
}

TEST_CASE("FinRel mix: the nullary map and mix = psi inverse") {
  auto B = zoo::make_finrel(2);
  construct::SemiAddInput SI{B.C, B.prods, B.cops, B.zero, B.objs};
  auto res = construct::semiadditive_to_cldc(SI);
  REQUIRE(res.ok());
  REQUIRE(res.cldc->mix.has_value());
  // [FROZEN] mix_{X,Y} is the identity relation on the disjoint
  // union, i.e. the inverse of psi.
  for (Obj a : B.objs) {
    for (Obj b : B.objs) {
      Mor m = res.cldc->mix->mix(a, b);
      auto inv = B.C->find_inverse(m);
      REQUIRE(inv.has_value());
      CHECK(*inv == B.zero.psi(a, b));
    }
  }
}

TEST_CASE("theorem suite: projections, injections, and coincidence") {
  auto B = zoo::make_finrel(2);
  construct::SemiAddInput SI{B.C, B.prods, B.cops, B.zero, B.objs};
  auto res = construct::semiadditive_to_cldc(SI);
  REQUIRE(res.ok());
  CHECK(all_pass(cldc::cldc_theorem_suite(*res.cldc)));

  auto lat = construct::bdl_to_cldc(zoo::bdl_boolean(2));
  CHECK(all_pass(cldc::cldc_theorem_suite(*lat.X)));
}

TEST_CASE("duoidal interchange suite on B2 and FinRel") {
  auto lat = construct::bdl_to_cldc(zoo::bdl_boolean(2));
  CHECK(all_pass(cldc::duoidal_suite(*lat.X)));

  auto B = zoo::make_finrel(1);
  construct::SemiAddInput SI{B.C, B.prods, B.cops, B.zero, B.objs};
  auto res = construct::semiadditive_to_cldc(SI);
  REQUIRE(res.ok());
  CHECK(all_pass(cldc::duoidal_suite(*res.cldc)));
}

TEST_CASE("duoidal mu is an isomorphism in FinRel") {
  auto B = zoo::make_finrel(1);
  construct::SemiAddInput SI{B.C, B.prods, B.cops, B.zero, B.objs};
  auto res = construct::semiadditive_to_cldc(SI);
  auto dd = cldc::duoidal_data(*res.cldc);
  Mor mu = dd.mu(Obj{1}, Obj{1}, Obj{1}, Obj{1});
  CHECK(B.C->find_inverse(mu).has_value());
}
