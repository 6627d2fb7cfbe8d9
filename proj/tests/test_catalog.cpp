#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "brauer/catalog.hpp"
#include "brauer/errors.hpp"

using namespace brauer;

namespace {

GroupSpec parse(const char* text) { return parse_group_spec(std::string_view(text)); }

std::string error_of(const char* text) {
  try {
    build(parse(text));
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("parse documented forms") {
  const GroupSpec c6 = parse(R"({"family":"cyclic","n":6})");
  CHECK(c6.kind == GroupSpec::Kind::Cyclic);
  CHECK(c6.predicted_order() == 6);
  CHECK(build(c6).group->order() == 6);

  const GroupSpec c2 = parse(R"({"cayley":[[0,1],[1,0]]})");
  CHECK(c2.kind == GroupSpec::Kind::Cayley);
  CHECK(build(c2).group->order() == 2);

  const GroupSpec s3 = parse(R"({"permutation":{"degree":3,"cycles":[[[0,1,2]],[[0,1]]]}})");
  CHECK(build(s3).group->order() == 6);
  CHECK_FALSE(s3.predicted_order().has_value());
}

TEST_CASE("semidirect products and certificates") {
  const GroupSpec c7c3 = parse(
      R"({"family":"semidirect","base":{"l":7,"d":1},"actor":{"cyclic":3},"action":[[2]]})");
  CHECK(c7c3.predicted_order() == 21);
  const BuiltGroup b = build(c7c3);
  CHECK(b.group->order() == 21);
  REQUIRE(b.certificate.has_value());
  CHECK(b.certificate->faithful);
  CHECK(b.certificate->irreducible);

  const GroupSpec a4 = parse(R"({"family":"semidirect","base":{"l":2,"d":2},"actor":{"cyclic":3},
      "action":[[[0,1],[1,1]]],"require":["faithful","irreducible"]})");
  const BuiltGroup ba4 = build(a4);
  CHECK(ba4.group->order() == 12);
  CHECK(ba4.certificate->irreducible);

  const GroupSpec dic3 = parse(
      R"({"family":"semidirect","base":{"cyclic":3},"actor":{"cyclic":4},"action":[[2]]})");
  const BuiltGroup bd = build(dic3);
  CHECK(bd.group->order() == 12);
  CHECK_FALSE(bd.certificate->faithful);
}

TEST_CASE("direct products") {
  const GroupSpec s = parse(R"({"family":"direct_product","factors":[
      {"family":"symmetric","n":3},{"family":"symmetric","n":3}]})");
  CHECK(s.predicted_order() == 36);
  CHECK(build(s).group->order() == 36);
}

TEST_CASE("round trip through serialization") {
  for (const auto& e : verification_catalog()) {
    CAPTURE(e.name);
    const std::string text = serialize(e.spec);
    const GroupSpec back = parse_group_spec(std::string_view(text));
    CHECK(serialize(back) == text);
    const BuiltGroup b = build(back);
    if (auto n = back.predicted_order()) CHECK(b.group->order() == *n);
  }
}

TEST_CASE("parse errors carry a location") {
  try {
    parse("{\n  \"family\": \"cyclic\",\n  \"n\": 6,\n}");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 4") != std::string::npos);
  }
  CHECK_THROWS_AS(parse("[1, 2"), ParseError);
}

TEST_CASE("validation errors") {
  CHECK_THROWS_AS(parse(R"({"family":"bogus"})"), ValidationError);
  CHECK_THROWS_AS(parse(R"({"family":"cyclic","n":6,"schema_version":2})"), ValidationError);
  CHECK_THROWS_AS(parse(R"({"family":"symmetric","n":6})"), ValidationError);
  CHECK(error_of(R"({"family":"semidirect","base":{"l":7,"d":1},"actor":{"cyclic":3},"action":[[7]]})")
            .find("not invertible") != std::string::npos);
  CHECK(error_of(R"({"family":"semidirect","base":{"l":7,"d":1},"actor":{"cyclic":3},"action":[[3]]})")
            .find("homomorphism") != std::string::npos);
  CHECK_THROWS_AS(build(parse(R"({"family":"semidirect","base":{"l":7,"d":1},"actor":{"cyclic":6},
      "action":[[2]],"require":["faithful"]})")),
                  NotFaithful);
  CHECK_THROWS_AS(build(parse(R"({"family":"semidirect","base":{"l":2,"d":2},"actor":{"cyclic":2},
      "action":[[[1,1],[0,1]]],"require":["irreducible"]})")),
                  NotIrreducible);
  CHECK_THROWS_AS(build(parse(R"({"cayley":[[0,1],[0,1]]})")), ValidationError);
  CHECK_THROWS_AS(build(parse(R"({"family":"cyclic","n":30})"), 20), OrderBoundExceeded);
}

TEST_CASE("verification catalog contents") {
  const auto cat = verification_catalog();
  std::set<std::pair<std::string, std::uint64_t>> entries;
  for (const auto& e : cat) entries.insert({e.name, e.p});
  CHECK(entries.size() == cat.size());
  for (const auto& want : std::vector<std::pair<std::string, std::uint64_t>>{
           {"C_2", 2}, {"C_12", 5}, {"C_4", 2}, {"C_2xC_2", 2}, {"D_4", 2}, {"Q_8", 2},
           {"S_3", 2}, {"S_3", 3}, {"S_3", 5}, {"C_7:C_3", 3}, {"C_5:C_4", 5}, {"A_4", 2},
           {"S_3xS_3", 2}, {"A_5", 2}, {"A_5", 5}})
    CHECK(entries.count(want) == 1);
  for (const auto& e : cat) CHECK_NOTHROW(build(e.spec));
}
