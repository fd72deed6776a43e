// File formats: category and CLDC round-trips, lattice and functor files,
// and the report renderers.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "ldcw/serialize.hpp"
#include "ldcw/zoo.hpp"

using namespace ldcw;

TEST_CASE("category round-trip preserves hom-sets and composition") {
  auto B = zoo::make_finset(1);
  std::string text = serialize::category_to_json(*B.C, B.objs);
  auto data = serialize::category_from_json(text);
  fincat::TableCategory C2(data);
  CHECK(C2.num_objects() == 2);
  CHECK(all_pass(fincat::validate_category(C2, C2.objects())));
  for (Obj a : C2.objects()) {
    for (Obj b : C2.objects()) {
      CHECK(C2.hom(a, b).size() == B.C->hom(Obj{a.id}, Obj{b.id}).size());
    }
  }
  // Round-tripping the serialized form is byte-stable.
  CHECK(serialize::category_to_json(C2, C2.objects()) ==
        serialize::category_to_json(C2, C2.objects()));
}

TEST_CASE("CLDC file round-trip re-certifies") {
  auto res = construct::bdl_to_cldc(zoo::bdl_boolean(2));
  REQUIRE(res.ok());
  std::string text = serialize::cldc_to_json(*res.X);
  auto file = serialize::cldc_from_json(text);
  auto re = cldc::assemble_cldc(file.C, file.prods, file.cops, file.objs,
                                file.deltaL, file.deltaR);
  REQUIRE(re.ok());
  CHECK(all_pass(re.reports));
  CHECK(re.cldc->top() == file.prods.terminal);
}

TEST_CASE("malformed input is an InputError naming the problem") {
  CHECK_THROWS_AS(serialize::category_from_json("{"), InputError);
  CHECK_THROWS_AS(serialize::category_from_json(R"({"objects": []})"),
                  InputError);
  CHECK_THROWS_AS(serialize::cldc_from_json(R"({"objects": ["A"]})"),
                  InputError);
  CHECK_THROWS_AS(serialize::functor_from_json("[1, 2]"), InputError);
  CHECK_THROWS_AS(construct::bdl_from_json("not json", "x"), InputError);
}

TEST_CASE("an instance that is not closed cannot be exported as a CLDC") {
  auto B = zoo::make_finrel(2);
  construct::SemiAddInput SI{B.C, B.prods, B.cops, B.zero, B.objs};
  auto res = construct::semiadditive_to_cldc(SI);
  REQUIRE(res.ok());
  // Apexes like 2 + 2 leave the bounded object list {0, 1, 2}.
  CHECK_THROWS_AS(serialize::cldc_to_json(*res.cldc), InputError);
}

TEST_CASE("lattice writer and reader are mutually inverse") {
  auto L = zoo::bdl_divisors(12);
  auto v = construct::validate_bdl(L);
  REQUIRE(v.ok);
  auto L2 = construct::bdl_from_json(serialize::bdl_to_json(L), L.name);
  auto v2 = construct::validate_bdl(L2);
  REQUIRE(v2.ok);
  CHECK(zoo::bdl_isomorphic(L, L2));
  CHECK(L2.elems == L.elems);
}

TEST_CASE("functor files resolve by name and certify functoriality") {
  auto res = construct::bdl_to_cldc(zoo::bdl_chain(2));
  REQUIRE(res.ok());
  auto C = res.X->C;
  serialize::FunctorFile ff;
  for (Obj a : res.X->objs) ff.objects[C->obj_name(a)] = C->obj_name(a);
  for (Mor m : fincat::morphisms_between(*C, res.X->objs)) {
    ff.morphisms[C->mor_name(m)] = C->mor_name(m);
  }
  auto rf = serialize::resolve_functor(ff, C, res.X->objs, C, res.X->objs);
  CHECK(all_pass(rf.reports));

  serialize::FunctorFile bad = ff;
  bad.objects[C->obj_name(res.X->objs[0])] = "no-such-object";
  CHECK_THROWS_AS(
      serialize::resolve_functor(bad, C, res.X->objs, C, res.X->objs),
      InputError);
}

TEST_CASE("JSON report follows the schema and is deterministic") {
  auto res = construct::bdl_to_cldc(zoo::bdl_chain(2));
  auto cls = collapse::classify(*res.X);
  std::string text = serialize::report_json("chain:2", res.reports, &cls);
  auto j = nlohmann::json::parse(text);
  CHECK(j.at("instance") == "chain:2");
  REQUIRE(j.at("laws").is_array());
  for (const auto& law : j.at("laws")) {
    CHECK(law.contains("id"));
    CHECK(law.contains("status"));
  }
  CHECK(j.at("classification").at("posetal") == true);
  CHECK(text == serialize::report_json("chain:2", res.reports, &cls));
}

TEST_CASE("text report shows one line per law and witnesses on failure") {
  auto S = zoo::make_finset(1);
  auto res = cldc::assemble_cldc(S.C, S.prods, S.cops, S.objs);
  CHECK(!res.ok());
  std::string text = serialize::report_text("finset:1", res.reports);
  CHECK(text.find("cc:leftright_lineardist.1") != std::string::npos);
  CHECK(text.find("✗") != std::string::npos);
  // One rendered line per report.
  size_t lines = 0;
  for (char ch : text) lines += (ch == '\n');
  CHECK(lines >= res.reports.size());
}
