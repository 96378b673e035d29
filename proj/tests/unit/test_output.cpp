#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>

#include "qpm/errors.hpp"
#include "qpm/output.hpp"

namespace {

qpm::ResultTable sample_table(std::size_t rows, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> mant(-1.0, 1.0);
  std::uniform_int_distribution<int> expo(-40, 20);
  qpm::ResultTable t;
  t.meta = {{"scenario", "metamolecule"}, {"parameter_hash", "0123456789abcdef"},
            {"units", "C m^2 / V"}};
  for (std::size_t n = 0; n < rows; ++n) {
    t.rows.push_back({4e15 + 1e9 * n, std::ldexp(mant(rng), expo(rng)) * 1e-20,
                      std::ldexp(mant(rng), expo(rng))});
  }
  t.rows.push_back({1.0, std::numeric_limits<double>::denorm_min(),
                    std::numeric_limits<double>::max()});
  t.rows.push_back({2.0, 0.1, -0.0});
  return t;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST(FormatDouble, SeventeenSignificantDigits) {
  EXPECT_EQ(qpm::format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(qpm::format_double(4e15), "4000000000000000");
  EXPECT_EQ(std::stod(qpm::format_double(1.0 / 3.0)), 1.0 / 3.0);
}

TEST(Csv, LayoutHasCommentedMetadataThenHeader) {
  const auto t = sample_table(2, 1);
  const std::string csv = qpm::to_csv(t);
  EXPECT_EQ(csv.rfind("# scenario: metamolecule\n", 0), 0u);
  EXPECT_NE(csv.find("\nomega_rad_s,re,im\n"), std::string::npos);
}

TEST(Csv, RoundTripIsBitExact) {
  const auto t = sample_table(500, 2);
  const auto back = qpm::read_csv(qpm::to_csv(t));
  EXPECT_EQ(back.meta, t.meta);
  ASSERT_EQ(back.rows.size(), t.rows.size());
  for (std::size_t n = 0; n < t.rows.size(); ++n) {
    for (int c = 0; c < 3; ++c) {
      EXPECT_EQ(std::signbit(back.rows[n][c]), std::signbit(t.rows[n][c]));
      EXPECT_EQ(back.rows[n][c], t.rows[n][c]) << n << "," << c;
    }
  }
}

TEST(Csv, EmptyTableIsHeaderOnly) {
  qpm::ResultTable t;
  EXPECT_EQ(qpm::to_csv(t), "omega_rad_s,re,im\n");
  EXPECT_TRUE(qpm::read_csv("omega_rad_s,re,im\n").rows.empty());
}

TEST(Csv, MalformedInputRaisesIoError) {
  EXPECT_THROW(qpm::read_csv("1,2,3\n"), qpm::IoError);
  EXPECT_THROW(qpm::read_csv("omega_rad_s,re,im\n1,2\n"), qpm::IoError);
  EXPECT_THROW(qpm::read_csv("omega_rad_s,re,im\n1,x,3\n"), qpm::IoError);
  EXPECT_THROW(qpm::read_csv(""), qpm::IoError);
}

TEST(Json, RoundTripAndSchema) {
  const auto t = sample_table(100, 3);
  const std::string js = qpm::to_json(t);
  EXPECT_EQ(js.find("{\n \"meta\""), 0u);
  EXPECT_NE(js.find("\"rows\""), std::string::npos);
  const auto back = qpm::read_json(js);
  EXPECT_EQ(back.meta, t.meta);
  EXPECT_EQ(back.rows, t.rows);
  EXPECT_THROW(qpm::read_json("{\"meta\": {}}"), qpm::IoError);
}

TEST(Json, SameNumbersAsCsv) {
  const auto t = sample_table(64, 4);
  EXPECT_EQ(qpm::read_json(qpm::to_json(t)).rows, qpm::read_csv(qpm::to_csv(t)).rows);
}

TEST(WriteOutput, WritesFilesAndReportsPathOnFailure) {
  const auto dir = std::filesystem::temp_directory_path() / "qpm_output_test";
  std::filesystem::remove_all(dir);
  const auto t = sample_table(10, 5);
  qpm::write_output(t, dir / "nested" / "a.csv", qpm::OutputFormat::kCsv);
  EXPECT_EQ(qpm::read_csv(slurp(dir / "nested" / "a.csv")).rows, t.rows);
  qpm::write_output(t, dir / "a.json", qpm::OutputFormat::kJson);
  EXPECT_EQ(qpm::read_json(slurp(dir / "a.json")).rows, t.rows);
  EXPECT_FALSE(std::filesystem::exists(dir / "a.json.tmp"));

  try {
    qpm::write_output(t, "/proc/qpm-denied/x.csv", qpm::OutputFormat::kCsv);
    FAIL() << "expected IoError";
  } catch (const qpm::IoError& e) {
    EXPECT_NE(std::string(e.what()).find("/proc/qpm-denied"), std::string::npos);
  }
  std::filesystem::remove_all(dir);
}

TEST(WriteOutput, VariantPaths) {
  EXPECT_EQ(qpm::output_path_for("out/fig2.csv", "", qpm::OutputFormat::kCsv), "out/fig2.csv");
  EXPECT_EQ(qpm::output_path_for("out/fig2.csv", "coupled", qpm::OutputFormat::kCsv),
            "out/fig2.coupled.csv");
  EXPECT_EQ(qpm::output_path_for("out/fig2.csv", "weak", qpm::OutputFormat::kJson),
            "out/fig2.weak.json");
  EXPECT_EQ(qpm::output_path_for("run", "a", qpm::OutputFormat::kCsv), "run.a.csv");
}
