// Acceptance suite: one test case per criterion, each printing its
// pass/fail line.  Criterion 13 additionally pins the discovered algebraic
// certificate to the committed golden file.

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "treelang/verify.hpp"

using treelang::verify::CriterionResult;
using treelang::verify::format_result;
using treelang::verify::run_criterion;

namespace {

CriterionResult run_and_print(int id) {
  const CriterionResult result = run_criterion(id);
  std::printf("%s\n", format_result(result).c_str());
  std::fflush(stdout);
  return result;
}

}  // namespace

TEST_CASE("criterion 1: catalan counts") { CHECK(run_and_print(1).pass); }

TEST_CASE("criterion 2: bijection roundtrips") {
  CHECK(run_and_print(2).pass);
}

TEST_CASE("criterion 3: catalan pda") { CHECK(run_and_print(3).pass); }

TEST_CASE("criterion 4: tree-pda language law") {
  const CriterionResult r = run_and_print(4);
  CHECK(r.pass);
  CHECK(r.seconds < 300.0);
}

TEST_CASE("criterion 5: worked example") {
  CHECK(run_and_print(5).pass);
}

TEST_CASE("criterion 6: norm lemma") { CHECK(run_and_print(6).pass); }

TEST_CASE("criterion 7: pattern pda") { CHECK(run_and_print(7).pass); }

TEST_CASE("criterion 8: s2 closed form") { CHECK(run_and_print(8).pass); }

TEST_CASE("criterion 9: star-norm decomposition") {
  CHECK(run_and_print(9).pass);
}

TEST_CASE("criterion 10: catalan certificate") {
  CHECK(run_and_print(10).pass);
}

TEST_CASE("criterion 11: flat bijection") { CHECK(run_and_print(11).pass); }

TEST_CASE("criterion 12: multiplicity law") { CHECK(run_and_print(12).pass); }

TEST_CASE("criterion 13: star-norm certificate") {
  const CriterionResult r = run_and_print(13);
  CHECK(r.pass);
  CHECK(r.seconds < 60.0);
  // the certificate must reproduce the recorded golden bit-exactly
  std::ifstream golden(std::string(TREELANG_TEST_DATA_DIR) +
                       "/starnorm_certificate.golden");
  REQUIRE_MESSAGE(golden.good(), "missing golden file");
  std::stringstream buf;
  buf << golden.rdbuf();
  std::string expected = buf.str();
  while (!expected.empty() && expected.back() == '\n') expected.pop_back();
  CHECK(r.detail == expected);
}

TEST_CASE("criterion 1 runs inside its stated budget") {
  const CriterionResult r = run_criterion(1);
  CHECK(r.pass);
  CHECK(r.seconds < 30.0);
}
