#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eqmon/error.hpp"
#include "eqmon/io.hpp"
#include "fixtures.hpp"

using namespace eqmon;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (Error const& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

CorpusSpec small_spec() {
  CorpusSpec spec;
  spec.seed = 42;
  spec.groups = fixtures::all_families();
  spec.count = 12;
  return spec;
}

}  // namespace

TEST_CASE("random_gset is deterministic and bounded") {
  CorpusSpec const spec = small_spec();
  for (std::size_t i = 0; i < spec.count; ++i) {
    GSet const X = random_gset(spec, i);
    CHECK(X == random_gset(spec, i));
    CHECK(X.size() <= spec.max_points);
    CHECK(count_endos(X) <= spec.max_monoid);
    CHECK(X.group() == build_named_group(spec.groups[i % spec.groups.size()]));
  }
  CorpusSpec other = spec;
  other.seed = 43;
  bool differs = false;
  for (std::size_t i = 0; i < spec.count; ++i) {
    differs = differs || !(random_gset(spec, i) == random_gset(other, i));
  }
  CHECK(differs);
}

TEST_CASE("subgroup list restricted to G gives fixed points only") {
  CorpusSpec spec = small_spec();
  spec.groups = {GroupSpec::symmetric(3)};
  spec.subgroup_generators = {{0, 1, 2, 3, 4, 5}};
  for (std::size_t i = 0; i < 5; ++i) {
    GSet const X = random_gset(spec, i);
    CHECK(X.orbit_count() == X.size());
  }
}

TEST_CASE("check registry") {
  CHECK(all_check_ids().size() == 23);
  CHECK(all_check_ids().front() == "P1");
  CHECK(parse_check_list("all") == all_check_ids());
  CHECK(parse_check_list("P7,P1,P7") == std::vector<std::string>{"P7", "P1"});
  CHECK(code_of([] { parse_check_list("P1,P24"); }) == ErrorCode::UnknownCheck);
  CHECK(code_of([] { parse_check_list(""); }) == ErrorCode::UnknownCheck);
  CHECK_FALSE(check_description("P13").empty());
}

TEST_CASE("example 1 passes every check, existential ones included") {
  CheckOptions options;
  options.existential = true;
  auto const reports = run_checks(fixtures::example1(), all_check_ids(), options);
  REQUIRE(reports.size() == 23);
  for (auto const& r : reports) {
    INFO(r.check_id);
    CHECK(r.status == CheckStatus::Pass);
    CHECK_FALSE(r.counterexample);
  }
}

TEST_CASE("existential checks fail where the claim is vacuous") {
  Group const Z3 = build_named_group(GroupSpec::cyclic(3));
  CheckOptions options;
  options.existential = true;
  auto const reports = run_checks(build_coset_gset(Z3, {trivial_subgroup()}), {"P8"}, options);
  CHECK(reports.front().status == CheckStatus::Fail);
  options.existential = false;
  CHECK(run_checks(build_coset_gset(Z3, {trivial_subgroup()}), {"P8"}, options).front().status ==
        CheckStatus::Pass);
}

TEST_CASE("image-based L is caught by P7 and the counterexample replays") {
  GSet const X = fixtures::example1();
  CheckOptions options;
  options.l_criterion = [](EquivMap const& f, EquivMap const& g) { return image(f) == image(g); };
  auto const reports = run_checks(X, {"P7"}, options);
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].status == CheckStatus::Fail);
  REQUIRE(reports[0].counterexample);
  auto const& cx = *reports[0].counterexample;
  CHECK(cx.at("kind") == "l_mismatch");
  CHECK(replay_counterexample(X, cx) == true);

  // a fabricated claim does not replay
  auto bogus = cx;
  bogus["primary"] = !cx.at("primary").get<bool>();
  CHECK(replay_counterexample(X, bogus) == false);
  nlohmann::json comp = {{"kind", "composition"}, {"lhs", {"(0333)", "(3000)"}},
                         {"expected", "(3000)"}};
  CHECK(replay_counterexample(X, comp) == false);
  comp["expected"] = "(0000)";
  CHECK(replay_counterexample(X, comp) == true);
  CHECK_FALSE(replay_counterexample(X, {{"kind", "existential"}}).has_value());
}

TEST_CASE("monoid cap") {
  CHECK(code_of([] {
          CheckOptions o;
          o.max_monoid = 10;
          run_checks(fixtures::example1(), {"P1"}, o);
        }) == ErrorCode::MonoidTooLarge);
}

TEST_CASE("corpus spec parsing and report") {
  auto const spec = parse_corpus_spec(read_json_file(std::string(EQMON_TEST_DATA) + "/corpus.json"));
  CHECK(spec.count == 30);
  CHECK(spec.groups.size() == 6);
  CHECK(code_of([] { parse_corpus_spec(nlohmann::json{{"count", 3}}); }) == ErrorCode::ParseError);
  CHECK(code_of([] {
          parse_corpus_spec(nlohmann::json::parse(
              R"({"groups":[{"family":"cyclic","n":2}],"max_points":0})"));
        }) == ErrorCode::ParseError);

  CorpusSpec s = small_spec();
  s.count = 4;
  auto const a = run_corpus(s, {"P1", "P23"});
  auto const b = run_corpus(s, {"P1", "P23"});
  CHECK_FALSE(any_failed(a));
  CHECK(reports_to_json(a, false) == reports_to_json(b, false));
  auto const doc = reports_to_json(a, true);
  CHECK(doc.at("summary").at("pass") == 8);
  CHECK(doc.at("gsets")[0].at("checks")[0].contains("elapsed_ms"));
}
