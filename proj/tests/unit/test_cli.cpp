#include "doctest.h"
#include "valab/cli.hpp"
#include "valab/fixtures.hpp"

using namespace valab;
namespace fx = valab::fixtures;

namespace {

std::string value_of(const CommandResult& res, std::string_view id, std::string_view key) {
  const CheckEntry* e = res.report.find(id);
  REQUIRE_MESSAGE(e != nullptr, id);
  for (const auto& [k, v] : e->values)
    if (k == key) return v;
  FAIL("missing value " << key << " on " << id);
  return {};
}

}  // namespace

TEST_CASE("exit code mapping") {
  CHECK(exit_code_for(ErrorKind::ParseError) == 2);
  CHECK(exit_code_for(ErrorKind::DimensionMismatch) == 2);
  CHECK(exit_code_for(ErrorKind::NoSolution) == 3);
  CHECK(exit_code_for(ErrorKind::BetaZero) == 3);
}

TEST_CASE("check command") {
  CHECK(cmd_check(fx::ex62(1)).exit_code == exit_code::kPass);
  CHECK(cmd_check(fx::ex61(3)).exit_code == exit_code::kPass);
  auto ss = cmd_check(fx::semisimple(1));
  CHECK(ss.exit_code == exit_code::kPass);
  CHECK(ss.report.find("ss.h1h") != nullptr);
  auto bad = cmd_check(fx::ex63(1));
  CHECK(bad.exit_code == exit_code::kCheckFailure);
  CHECK(bad.report.failed("leibniz.identity"));
}

TEST_CASE("invariants command on ex62, alpha = 1") {
  auto res = cmd_invariants(fx::ex62(1));
  CHECK(res.exit_code == exit_code::kPass);
  CHECK(value_of(res, "ring.t", "t") == "-1/2 1 + a");
  CHECK(value_of(res, "forms.M", "basis") == "span{da}");
  CHECK(value_of(res, "forms.ann_t", "basis") == "span{da}");
  CHECK(value_of(res, "forms.rad_double_form", "basis") == "span{da}");
  CHECK(value_of(res, "forms.self_duality_dim", "dim") == "1");
}

TEST_CASE("invariants command without Gorenstein data") {
  auto f = fx::ex62(1);
  f.form.reset();
  f.t.reset();
  auto res = cmd_invariants(f);
  CHECK(res.report.find("ring.jacobson_radical") != nullptr);
  CHECK(res.exit_code != exit_code::kInputError);
}

TEST_CASE("semiconformal command on ex62, alpha = 1") {
  auto res = cmd_semiconformal(fx::ex62(1));
  CHECK(res.exit_code == exit_code::kPass);
  CHECK(value_of(res, "l1.family", "dim") == "1");
  CHECK(value_of(res, "l1.pinned", "map") == "L(1)b = -1; L(1)da = 0");
  CHECK(value_of(res, "heisenberg.witness", "g") == "b");
  CHECK(value_of(res, "heisenberg.witness", "beta") == "1/2");
  CHECK(value_of(res, "heisenberg.witness", "h_prime") == "b - 1/2 da");
}

TEST_CASE("semiconformal command reports hypothesis errors with exit 3") {
  auto res = cmd_semiconformal(fx::semisimple(1));
  CHECK(res.exit_code == exit_code::kPrecondition);
  CHECK_FALSE(res.errors.empty());
  CHECK(cmd_semiconformal(fx::ex62(0)).exit_code == exit_code::kPrecondition);
}

TEST_CASE("mutate command catches mutations of ex62") {
  auto res = cmd_mutate(fx::ex62(1), 7, 20);
  CHECK(value_of(res, "mutation.summary", "count") == "20");
  CHECK(res.report.find("mutation.base")->status == Status::Pass);
  auto again = cmd_mutate(fx::ex62(1), 7, 20);
  CHECK(value_of(again, "mutation.summary", "caught") == value_of(res, "mutation.summary", "caught"));
}
