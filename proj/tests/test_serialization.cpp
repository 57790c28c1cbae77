#include "doctest.h"
#include "tropmon/errors.hpp"
#include "tropmon/serialization.hpp"

using namespace tropmon;

namespace {
  constexpr TropInt X = NEG_INF;
}

TEST_CASE("scalars") {
  CHECK(scalar_to_json(X) == json("-inf"));
  CHECK(scalar_to_json(TropInt(-3)) == json(-3));
  CHECK(scalar_from_json(json("-inf")) == X);
  CHECK(scalar_from_json(json(12)) == TropInt(12));
  CHECK_THROWS_AS(scalar_from_json(json("inf")), ParseError);
  CHECK_THROWS_AS(scalar_from_json(json(1.5)), ParseError);
}

TEST_CASE("matrices round-trip") {
  TropMatrix m{{-4, X}, {X, 12}};
  CHECK(rows_to_json(m).dump() == R"([[-4,"-inf"],["-inf",12]])");
  CHECK(to_json(m) == json::parse(R"({"n":2,"rows":[[-4,"-inf"],["-inf",12]]})"));
  CHECK(matrix_from_json(to_json(m)) == m);
  CHECK(matrix_from_json(rows_to_json(m)) == m);
  CHECK(matrix_from_json(json::parse(rows_to_json(m).dump())) == m);
  CHECK_THROWS_AS(matrix_from_json(json::parse("[[1,2],[3]]")), ParseError);
  CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"n":3,"rows":[[1]]})")), ParseError);
  CHECK_THROWS_AS(matrix_from_json(json::parse("[]")), ParseError);
}

TEST_CASE("model elements round-trip") {
  auto const m5 = MonoidId::shneerson(5);
  auto const x  = model_from_word(m5, "baaab");
  auto const j  = to_json(m5, x);
  CHECK(j.at("monoid") == "M5");
  CHECK(element_from_json(m5, j) == x);
  CHECK(element_from_json(m5, j.at("elem")) == x);
  CHECK_THROWS_AS(element_from_json(m5, json::parse(R"({"elem":"x"})")), ParseError);
}

TEST_CASE("representations round-trip") {
  for (auto const& id : {MonoidId::shneerson(3), MonoidId::shneerson(6, 2), MonoidId::monogenic(4, 1)}) {
    auto const r    = representation(id);
    auto const back = representation_from_json(id, json::parse(to_json(r).dump()));
    CHECK(back.target == r.target);
    CHECK(back.n == r.n);
    CHECK(back.unital == r.unital);
    CHECK(back.images == r.images);
  }
  CHECK(to_json(representation(MonoidId::shneerson(3))).at("target") == "MT");
  CHECK_THROWS_AS(representation_from_json(MonoidId::shneerson(3), json::parse(R"({"target":"XT"})")),
                  ParseError);
}

TEST_CASE("reports and verdicts") {
  auto const report = to_json(verify_embedding(MonoidId::bicyclic(), 6));
  CHECK(report.at("classes") == 28);
  CHECK(report.at("injective") == true);
  CHECK_FALSE(report.contains("witnesses"));

  auto const v = to_json(classify(parse_presentation("a,b|bb=aa")));
  CHECK(v.at("category") == "listed");
  CHECK(v.at("monoid") == "M2");
  CHECK(v.at("mt_rank") == json::parse(R"({"kind":"exact","n":2})"));
  CHECK(v.at("ut_rank").is_null());
  CHECK(v.at("renaming").at("a") == "b");

  auto const row = to_json(table_row(MonoidId::shneerson(5)));
  CHECK(row.at("ut_rank") == json::parse(R"({"kind":"at_most","n":4})"));
  CHECK(row.at("ut_rank_text") == "<= 4");

  CheckOutcome c;
  c.status          = CheckStatus::counterexample;
  c.seed            = 7;
  c.trials          = 1;
  c.word_assignment = {{'x', "a"}, {'y', ""}};
  auto const cj     = to_json(c);
  CHECK(cj.at("status") == "counterexample");
  CHECK(cj.at("assignment").at("y") == "1");
  CHECK_FALSE(cj.contains("trial"));
}
