// Collapse classifiers and the two equivalence-group suites.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ldcw/zoo.hpp"

using namespace ldcw;

namespace {

cldc::CldcStructure finrel_cldc(int n) {
  auto B = zoo::make_finrel(n);
  construct::SemiAddInput SI{B.C, B.prods, B.cops, B.zero, B.objs};
  auto res = construct::semiadditive_to_cldc(SI);
  REQUIRE(res.ok());
  return *res.cldc;
}

}  // namespace

TEST_CASE("Boolean lattice: posetal group true, semi-additive group false") {
  auto res = construct::bdl_to_cldc(zoo::bdl_boolean(2));
  REQUIRE(res.ok());
  auto cls = collapse::classify(*res.X);
  CHECK(cls.posetal);
  CHECK(cls.distributive);
  CHECK(cls.strict_initial);
  CHECK(cls.costrict_terminal);
  CHECK(!cls.semi_additive);
  CHECK(!cls.invertible_distributors);
  CHECK(!cls.isomix);
  CHECK(!cls.compact);
  CHECK(!cls.trivial);
  CHECK(cls.semiadd_witness != "");
}

TEST_CASE("FinRel: semi-additive group true, posetal group false") {
  auto X = finrel_cldc(1);
  auto cls = collapse::classify(X);
  CHECK(cls.semi_additive);
  CHECK(cls.invertible_distributors);
  CHECK(cls.isomix);
  CHECK(cls.compact);
  CHECK(!cls.posetal);
  CHECK(!cls.distributive);
  CHECK(!cls.strict_initial);
  CHECK(!cls.costrict_terminal);
  CHECK(!cls.trivial);
  CHECK(cls.posetal_witness != "");
}

TEST_CASE("the one-object instance is trivial: both groups hold") {
  auto res = construct::bdl_to_cldc(zoo::bdl_chain(1));
  REQUIRE(res.ok());
  auto cls = collapse::classify(*res.X);
  CHECK(cls.posetal);
  CHECK(cls.semi_additive);
  CHECK(cls.trivial);
}

TEST_CASE("posetal collapse suite certifies on a lattice instance") {
  auto res = construct::bdl_to_cldc(zoo::bdl_boolean(2));
  CHECK(all_pass(collapse::posetal_collapse_suite(*res.X)));
  auto c3 = construct::bdl_to_cldc(zoo::bdl_chain(3));
  CHECK(all_pass(collapse::posetal_collapse_suite(*c3.X)));
}

TEST_CASE("semi-additive collapse suite certifies on FinRel") {
  auto X = finrel_cldc(2);
  CHECK(all_pass(collapse::semiadditive_collapse_suite(X)));
}

TEST_CASE("both suites run without internal failure on the other side") {
  // The suites state equivalences, so they must also certify on instances
  // where the antecedents are false.
  auto X = finrel_cldc(1);
  CHECK(all_pass(collapse::posetal_collapse_suite(X)));
  auto res = construct::bdl_to_cldc(zoo::bdl_chain(3));
  CHECK(all_pass(collapse::semiadditive_collapse_suite(*res.X)));
}

TEST_CASE("distributivity maps: dL_flat is a right inverse iff posetal") {
  auto res = construct::bdl_to_cldc(zoo::bdl_boolean(2));
  auto maps = collapse::distributivity_maps(*res.X);
  const auto& C = *res.X->C;
  for (Obj a : res.X->objs) {
    for (Obj b : res.X->objs) {
      for (Obj c : res.X->objs) {
        Mor round = C.compose(maps.dL_flat(a, b, c), maps.dL(a, b, c));
        CHECK(C.is_identity(round));
      }
    }
  }
}
