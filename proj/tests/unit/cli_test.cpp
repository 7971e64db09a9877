#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "oracles.hpp"
#include "tm32/cli/experiment.hpp"
#include "tm32/error.hpp"

using namespace tm32;
using namespace tm32::cli;

namespace {

ExperimentConfig small_config() {
  ExperimentConfig c;
  c.length = 30'000;
  c.monitor_length = 30'000;
  c.max_factor_len = 6;
  c.parity_factor_len = 4;
  return c;
}

}  // namespace

TEST(Config, Validation) {
  EXPECT_NO_THROW(ExperimentConfig{}.validate());
  auto c = small_config();
  c.length = 0;
  EXPECT_THROW(c.validate(), Error);
  c = small_config();
  c.frequency_tolerance = 0;
  EXPECT_THROW(c.validate(), Error);
  c = small_config();
  c.threads = 0;
  EXPECT_THROW(c.validate(), Error);
  c = small_config();
  c.mod_exp = 31;
  EXPECT_THROW(c.validate(), Error);
}

TEST(Verify, RegistryIsPartitioned) {
  EXPECT_FALSE(check_names(CheckKind::Hard).empty());
  EXPECT_EQ(check_names(CheckKind::Soft), std::vector<std::string>{"frequency-monitor"});
  EXPECT_FALSE(check_names(CheckKind::Experimental).empty());
}

TEST(Verify, SelectedChecks) {
  auto c = small_config();
  c.checks = {"prefixes", "toeplitz-frequency", "zeta2"};
  const auto report = run_verify_suite(c);
  ASSERT_EQ(report.checks.size(), 3u);
  for (const auto& r : report.checks) EXPECT_TRUE(r.passed) << r.name << ": " << r.detail;
  EXPECT_TRUE(report.passed());
}

TEST(Verify, UnknownCheck) {
  auto c = small_config();
  c.checks = {"no-such-check"};
  try {
    run_verify_suite(c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotFound);
  }
}

TEST(Verify, JsonIsDeterministic) {
  auto c = small_config();
  c.checks = {"prefixes", "counters"};
  const auto a = to_json(c, run_verify_suite(c));
  const auto b = to_json(c, run_verify_suite(c));
  EXPECT_EQ(a, b);
  const auto doc = nlohmann::json::parse(a);
  EXPECT_EQ(doc.at("schema_version").get<int>(), VerifyReport::kSchemaVersion);
  EXPECT_EQ(doc.at("checks").size(), 2u);
}

TEST(Emit, SingleRangeMatchesOracle) {
  auto c = small_config();
  c.ranges = {{1, 30}};
  std::ostringstream out;
  emit_frequency_csv(c, out);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "range,N,count,density");
  const std::string t = oracle::t32(30);
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    std::istringstream fields(line);
    std::string range, n, count;
    std::getline(fields, range, ',');
    std::getline(fields, n, ',');
    std::getline(fields, count, ',');
    EXPECT_EQ(range, "1-30");
    const auto len = std::stoul(n);
    EXPECT_EQ(std::stoul(count), static_cast<unsigned long>(std::count(t.begin(), t.begin() + len, '0')));
  }
  EXPECT_EQ(rows, 30u);
}

TEST(Emit, EmptyRangeGivesHeaderOnly) {
  auto c = small_config();
  c.ranges = {{10, 5}};
  std::ostringstream out;
  emit_frequency_csv(c, out);
  EXPECT_EQ(out.str(), "range,N,count,density\n");
}

TEST(Emit, DefaultRanges) {
  ExperimentConfig c;
  std::ostringstream out;
  emit_frequency_csv(c, out);
  const std::string s = out.str();
  EXPECT_EQ(std::count(s.begin(), s.end(), '\n'), 1 + 2000 + 1001);
  EXPECT_NE(s.find("14000-15000,15000,"), std::string::npos);
}
