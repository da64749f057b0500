#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace cokahler;

namespace {

const char* kCdmDoc = R"({"n": 1, "matrix": [[0, 1], [-1, 0]]})";
const char* kCatDoc = R"({"n": 1, "matrix": [[2, 1], [1, 1]]})";

}  // namespace

TEST_CASE("parse_input accepts the documented schema") {
  const InputSpec cdm = parse_input(kCdmDoc);
  CHECK(cdm.n == 1);
  CHECK(cdm.matrix == Matrix{{0, 1}, {-1, 0}});
  CHECK_FALSE(cdm.omega.has_value());
  CHECK_FALSE(cdm.checks.has_value());

  const InputSpec with_omega =
      parse_input(R"({"n": 1, "matrix": [[1, 0], [0, 1]], "omega": [[0, 2], [-2, 0]],
                      "checks": ["monotonicity", "b1_parity"]})");
  REQUIRE(with_omega.omega.has_value());
  CHECK((*with_omega.omega)(0, 1) == 2);
  REQUIRE(with_omega.checks.has_value());
  CHECK(with_omega.checks->size() == 2);
}

TEST_CASE("parse_input rejects malformed documents") {
  CHECK_THROWS_AS(parse_input("{ not json"), ParseError);
  CHECK_THROWS_AS(parse_input(R"([1, 2, 3])"), ParseError);
  CHECK_THROWS_AS(parse_input(R"({"matrix": [[1]]})"), ParseError);  // missing n
  CHECK_THROWS_AS(parse_input(R"({"n": 1})"), ParseError);           // missing matrix
  // non-square matrix
  CHECK_THROWS_AS(parse_input(R"({"n": 1, "matrix": [[0, 1], [-1, 0], [0, 0]]})"), ParseError);
  // ragged row
  CHECK_THROWS_AS(parse_input(R"({"n": 1, "matrix": [[0, 1], [-1]]})"), ParseError);
  // non-integer entry
  CHECK_THROWS_AS(parse_input(R"({"n": 1, "matrix": [[0.5, 1], [-1, 0]]})"), ParseError);
}

TEST_CASE("parse_input rejects invariant violations") {
  // size inconsistent with n
  CHECK_THROWS_AS(parse_input(R"({"n": 2, "matrix": [[0, 1], [-1, 0]]})"), ValidationError);
  CHECK_THROWS_AS(parse_input(R"({"n": 0, "matrix": []})"), ValidationError);
  // omega must be skew and nondegenerate
  CHECK_THROWS_AS(
      parse_input(R"({"n": 1, "matrix": [[1, 0], [0, 1]], "omega": [[0, 1], [1, 0]]})"),
      ValidationError);
  CHECK_THROWS_AS(
      parse_input(R"({"n": 1, "matrix": [[1, 0], [0, 1]], "omega": [[0, 0], [0, 0]]})"),
      ValidationError);
  // unknown field and unknown check name
  CHECK_THROWS_AS(parse_input(R"({"n": 1, "matrix": [[1, 0], [0, 1]], "extra": 1})"),
                  ValidationError);
  CHECK_THROWS_AS(parse_input(R"({"n": 1, "matrix": [[1, 0], [0, 1]], "checks": ["nope"]})"),
                  ValidationError);
}

TEST_CASE("pipeline on the order-4 example") {
  const Report r = run_pipeline(parse_input(kCdmDoc));
  REQUIRE(r.order.finite);
  CHECK(r.order.value == 4);
  CHECK_FALSE(r.partial);
  REQUIRE(r.invariant_dims.has_value());
  CHECK(*r.invariant_dims == std::vector<std::int64_t>{1, 0, 1});
  REQUIRE(r.betti.has_value());
  CHECK(r.betti->values() == std::vector<std::int64_t>{1, 1, 1, 1});
  CHECK(r.h1 == FirstHomology{1, {Int(2)}});
  REQUIRE(r.cover.has_value());
  CHECK(r.cover->degree == 4);
  REQUIRE(r.subgroup.has_value());
  CHECK(r.subgroup->quotient == "Z/4");
  REQUIRE(r.certificate.has_value());
  CHECK(r.certificate->kind == CertificateKind::NotAProduct);
  CHECK(r.checks.size() == known_check_names().size());
  for (const CheckResult& c : r.checks) CHECK(c.status == CheckStatus::Pass);
  CHECK(all_checks_pass(r));
}

TEST_CASE("pipeline produces a partial report for infinite order") {
  const Report r = run_pipeline(parse_input(kCatDoc));
  CHECK_FALSE(r.order.finite);
  CHECK(r.partial);
  CHECK_FALSE(r.betti.has_value());
  CHECK_FALSE(r.invariant_dims.has_value());
  CHECK_FALSE(r.cover.has_value());
  CHECK_FALSE(r.certificate.has_value());
  REQUIRE(r.wang.has_value());
  CHECK(r.wang->values() == std::vector<std::int64_t>{1, 1, 1, 1});
  CHECK(r.h1 == FirstHomology{1, {}});
  CHECK_FALSE(r.bundle_trivial);
  CHECK_FALSE(r.structure.finite);
  for (const CheckResult& c : r.checks) CHECK(c.status == CheckStatus::NotApplicable);
  CHECK(all_checks_pass(r));  // not-applicable is not a failure
}

TEST_CASE("pipeline honors the checks restriction") {
  InputSpec spec = parse_input(kCdmDoc);
  spec.checks = std::vector<std::string>{"monotonicity"};
  const Report r = run_pipeline(spec);
  REQUIRE(r.checks.size() == 1);
  CHECK(r.checks[0].name == "monotonicity");
  CHECK(r.checks[0].status == CheckStatus::Pass);
}

TEST_CASE("pipeline rejects an omega incompatible with the matrix") {
  InputSpec spec = parse_input(R"({"n": 1, "matrix": [[1, 0], [0, -1]]})");
  CHECK_THROWS_AS(run_pipeline(spec), NoInvariantKahlerError);
}

TEST_CASE("text rendering carries the headline values") {
  const Report r = run_pipeline(parse_input(kCdmDoc));
  const std::string text = render(r, "text");
  CHECK(text.find("order m = 4") != std::string::npos);
  CHECK(text.find("b = 1 1 1 1") != std::string::npos);
  CHECK(text.find("NOT a global product (dim-3 rule)") != std::string::npos);
  CHECK(text.find("H_1(M;Z) = Z + Z/2") != std::string::npos);
  CHECK(text.find("winds 4 times") != std::string::npos);
  CHECK_THROWS_AS(render(r, "yaml"), ValidationError);
}

TEST_CASE("json rendering is deterministic and round-trips") {
  for (const char* doc : {kCdmDoc, kCatDoc}) {
    const Report r = run_pipeline(parse_input(doc));
    const std::string once = render(r, "json");
    const std::string twice = render(r, "json");
    CHECK(once == twice);

    const Report back = report_from_json(once);
    CHECK(back == r);
    CHECK(render(back, "json") == once);
  }
}

TEST_CASE("corpus entries match their expected highlights") {
  for (const CorpusRun& run : run_corpus("all")) {
    INFO(run.entry.name);
    for (const std::string& diff : run.mismatches) INFO(diff);
    CHECK(run.ok());
  }
}

TEST_CASE("corpus recipes and unknown names") {
  CHECK(corpus_entry("mp(3)").spec.n == 3);
  CHECK(corpus_entry("identity(2)").spec.matrix == Matrix::identity(4));
  CHECK_THROWS_AS(corpus_entry("nope"), UnknownCorpusError);
  CHECK_THROWS_AS(corpus_entry("mp(0)"), UnknownCorpusError);
  CHECK_THROWS_AS(run_corpus("mp(abc)"), UnknownCorpusError);
}

TEST_CASE("corpus reports stay internally consistent") {
  const std::vector<CorpusRun> runs = run_corpus("mp(2)");
  REQUIRE(runs.size() == 1);
  const Report& r = runs[0].report;
  REQUIRE(r.betti.has_value());
  CHECK(r.betti->values() == std::vector<std::int64_t>{1, 1, 4, 4, 1, 1});
  CHECK(r.wang->values() == r.betti->values());
}
