// Instance factories: engine hom-sets, lattice generators, and the census.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>

#include "ldcw/zoo.hpp"

using namespace ldcw;

namespace {

long ipow(long b, long e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

TEST_CASE("engine hom-set sizes match the counting formulas") {
  auto S = zoo::make_finset(2);
  auto P = zoo::make_finpar(2);
  auto R = zoo::make_finrel(2);
  for (long a = 0; a <= 2; ++a) {
    for (long b = 0; b <= 2; ++b) {
      Obj A{(int32_t)a}, B{(int32_t)b};
      // [DERIVED] total maps: b^a; partial maps: (b+1)^a; relations: 2^(ab).
      CHECK((long)S.C->hom(A, B).size() == ipow(b, a));
      CHECK((long)P.C->hom(A, B).size() == ipow(b + 1, a));
      CHECK((long)R.C->hom(A, B).size() == ipow(2, a * b));
    }
  }
}

TEST_CASE("structural inverse search agrees with hom scanning") {
  auto S = zoo::make_finset(2);
  // The swap on a two-element set is its own inverse.
  Mor swap = S.C->mor(Obj{2}, Obj{2}, {1, 0});
  auto inv = S.C->find_inverse(swap);
  REQUIRE(inv.has_value());
  CHECK(*inv == swap);
  // A non-injective map has none.
  Mor collapse = S.C->mor(Obj{2}, Obj{1}, {0, 0});
  CHECK(!S.C->find_inverse(collapse).has_value());

  auto R = zoo::make_finrel(2);
  // In FinRel only bijection graphs are invertible.
  int invertible = 0;
  for (Mor f : R.C->hom(Obj{2}, Obj{2})) {
    if (R.C->find_inverse(f)) ++invertible;
  }
  CHECK(invertible == 2);  // [DERIVED] the two permutations of a 2-set
}

TEST_CASE("lattice generators: chains, Booleans, divisors, products") {
  auto c3 = zoo::bdl_chain(3);
  CHECK(c3.n == 3);
  CHECK(c3.elems == std::vector<std::string>{"0", "1", "2"});

  auto b2 = zoo::bdl_boolean(2);
  CHECK(b2.n == 4);

  // [DERIVED] divisors of 12: 1, 2, 3, 4, 6, 12.
  auto d12 = zoo::bdl_divisors(12);
  CHECK(d12.n == 6);
  CHECK(zoo::bdl_isomorphic(d12, zoo::bdl_product(zoo::bdl_chain(3),
                                                  zoo::bdl_chain(2))));

  CHECK(zoo::bdl_isomorphic(zoo::bdl_chain(2), zoo::bdl_boolean(1)));
  CHECK(!zoo::bdl_isomorphic(zoo::bdl_chain(4), b2));
}

TEST_CASE("distributive lattice census to six elements, two routes") {
  auto direct = zoo::all_distributive_lattices(6);
  auto downsets = zoo::distributive_lattices_by_downsets(6);
  // [DERIVED] counts by size 1..6 are 1, 1, 1, 2, 3, 5 (13 in total),
  // verified by two independent enumerations.
  std::map<int, int> by_size;
  for (const auto& L : direct) ++by_size[L.n];
  CHECK(direct.size() == 13);
  CHECK(downsets.size() == 13);
  CHECK(by_size[1] == 1);
  CHECK(by_size[2] == 1);
  CHECK(by_size[3] == 1);
  CHECK(by_size[4] == 2);
  CHECK(by_size[5] == 3);
  CHECK(by_size[6] == 5);
  // The two routes enumerate the same isomorphism classes.
  for (const auto& L : direct) {
    int hits = 0;
    for (const auto& M : downsets) {
      if (L.n == M.n && zoo::bdl_isomorphic(L, M)) ++hits;
    }
    CHECK(hits == 1);
  }
}

TEST_CASE("every lattice in the census validates as distributive") {
  for (auto L : zoo::all_distributive_lattices(5)) {
    auto v = construct::validate_bdl(L);
    CHECK(v.ok);
  }
}
