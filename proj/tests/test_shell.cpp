#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include <unistd.h>

#include "stringnet/errors.hpp"
#include "stringnet/shell.hpp"

using namespace sn;
namespace fs = std::filesystem;

namespace {

const std::string kCats = std::string(SN_DATA_DIR) + "/categories";

std::string header() { return "category vec_z3.cat\nbc one circle g1\n"; }

ParseError parse_error(const std::string& text) {
  try {
    parse_job(text, "t.job", kCats);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no parse error";
  return ParseError("", 0, 0);
}

}  // namespace

TEST(JobFile, ParsesShippedJobs) {
  for (const char* n : {"vec_z2", "vec_z3", "fibonacci", "ising"}) {
    JobFile J = load_job(std::string(SN_DATA_DIR) + "/jobs/" + n + ".job");
    EXPECT_FALSE(J.jobs.empty()) << n;
    EXPECT_FALSE(J.suites.empty()) << n;
  }
}

TEST(JobFile, ErrorsCarryLineAndColumn) {
  ParseError e = parse_error(header() + "trivial t one\nannulus a t missing\n");
  EXPECT_EQ(e.line, 4);
  EXPECT_EQ(e.column, 13);
  e = parse_error(header() + "bc one circle g2\n");
  EXPECT_EQ(e.line, 3);
  e = parse_error("bc one circle g1\n");
  EXPECT_EQ(e.line, 1);
  e = parse_error(header() + "frobnicate\n");
  EXPECT_EQ(e.line, 3);
}

TEST(JobFile, UnreadableCategoryIsParseError) {
  EXPECT_THROW(open_category("/nonexistent/x.cat"), ParseError);
}

TEST(Report, ComparisonExcludesTiming) {
  Report a, b;
  for (Report* r : {&a, &b}) {
    r->section("s");
    r->put("k", "v");
  }
  a.timing("t", 1.0);
  b.timing("t", 2.0);
  b.note("cache", "hit");
  EXPECT_EQ(a.comparison(), b.comparison());
  EXPECT_NE(a.str(), b.str());
}

TEST(Report, KeepsMostSevereStatus) {
  Report r;
  r.fail(kExitCheck);
  r.fail(kExitPass);
  EXPECT_EQ(r.status(), kExitCheck);
  r.fail(kExitInvalid);
  EXPECT_EQ(r.status(), kExitInvalid);
}

TEST(Commands, ValidateExitCodes) {
  EXPECT_EQ(cmd_validate(load_category(kCats + "/vec_z2.cat")).status(), kExitPass);
  EXPECT_EQ(cmd_validate(load_category(std::string(SN_DATA_DIR) + "/mutations/vec_z2_bad_gauge.cat")).status(),
            kExitInvalid);
}

TEST(Commands, SimplesCacheHitMatchesMiss) {
  fs::path dir = fs::temp_directory_path() / ("sn_cache_test_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  CategoryDoc d = load_category(kCats + "/vec_z2.cat");
  Report miss = cmd_simples(d, "bc", "circle", dir.string());
  Report hit = cmd_simples(d, "bc", "circle", dir.string());
  EXPECT_NE(miss.str().find("cache = miss"), std::string::npos);
  EXPECT_NE(hit.str().find("cache = hit"), std::string::npos);
  EXPECT_EQ(miss.comparison(), hit.comparison());
  EXPECT_EQ(miss.status(), hit.status());
  fs::remove_all(dir);
}

TEST(Commands, SimplesRejectsUnknownKind) {
  CategoryDoc d = load_category(kCats + "/vec_z2.cat");
  EXPECT_THROW(cmd_simples(d, "cyl", "circle", std::nullopt), ParseError);
  EXPECT_THROW(cmd_simples(d, "bc", "torus", std::nullopt), ParseError);
}

TEST(Commands, OracleBudgetExceeded) {
  JobFile J = parse_job(header() + "oracle disk g1 g1 g1 g1 g1 g1 g1 g1 g1\n", "t.job", kCats);
  EXPECT_EQ(cmd_oracle(J, 2).status(), kExitBudget);
}

TEST(Commands, Sha256) {
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
