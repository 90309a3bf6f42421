#include <gtest/gtest.h>

#include <numbers>

#include "abelmix/families.hpp"

namespace abelmix {
namespace {

TEST(BuildFamilyTest, Presets) {
  const auto cycles = build_family(FamilyPreset{FamilyKind::cycle_single, {64, 128, 256, 512, 1024, 2048, 4096}, "", {}});
  ASSERT_EQ(cycles.size(), 7u);
  for (const auto& w : cycles) EXPECT_EQ(w.rank(), 1u);

  const auto cubes = build_family(FamilyPreset{FamilyKind::hypercube, {4, 5, 6, 7, 8, 9, 10, 11}, "", {}});
  ASSERT_EQ(cubes.size(), 8u);
  for (std::size_t i = 0; i < cubes.size(); ++i) {
    EXPECT_EQ(cubes[i].rank(), i + 4);
    EXPECT_TRUE(is_hypercube(cubes[i]));
  }

  const auto sq = build_family(FamilyPreset{FamilyKind::cycle_sqrt, {100}, "", {}});
  ASSERT_EQ(sq.size(), 1u);
  EXPECT_EQ(sq[0].describe(), "Z/100 {1,10}");

  const auto pair = build_family(FamilyPreset{FamilyKind::cycle_pair, {20, 40}, "mul:1/4", {}});
  EXPECT_EQ(pair[1].describe(), "Z/40 {1,10}");
  EXPECT_EQ(build_family(FamilyPreset{FamilyKind::cycle_pair, {9}, "const:2", {}})[0].describe(), "Z/9 {1,2}");
}

TEST(BuildFamilyTest, Errors) {
  EXPECT_THROW(build_family(FamilyPreset{FamilyKind::cycle_single, {8, 8}, "", {}}), Error);
  try {
    build_family(FamilyPreset{FamilyKind::custom, {}, "", {cycle_description(8, {1}), cycle_description(8, {2})}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::not_irreducible);
    EXPECT_NE(std::string(e.what()).find("instance 1"), std::string::npos) << e.what();
  }
  EXPECT_THROW(build_family(FamilyPreset{FamilyKind::cycle_pair, {9}, "cube", {}}), Error);
}

TEST(DefaultCapTest, Values) {
  EXPECT_EQ(default_t_cap(instantiate(cycle_description(16, {1}))), 2560);
  EXPECT_EQ(default_t_cap(instantiate(hypercube_description(8))),
            static_cast<std::int64_t>(std::ceil(80.0 * (std::log(8.0) + 3.0))));
}

TEST(ProfileTest, EmptyFamily) {
  const auto rep = family_profile(std::vector<WalkSpec>{}, Epsilon::decimal(0.05), std::nullopt, std::nullopt);
  EXPECT_TRUE(rep.rows.empty());
  EXPECT_EQ(export_report(rep, ReportFormat::csv), std::string(kFamilyCsvHeader) + "\n");
}

TEST(ProfileTest, CycleFixtures) {
  // Thresholds from the numpy FFT oracle (tests/oracle/fixtures.py).
  const auto rep =
      family_profile(FamilyPreset{FamilyKind::cycle_single, {64, 128, 256}, "", {}}, Epsilon::decimal(0.05), std::nullopt, 2.0);
  ASSERT_EQ(rep.rows.size(), 3u);
  EXPECT_FALSE(rep.contrast_only);
  const std::int64_t t_eps[] = {1006, 4029, 16121};
  const std::int64_t t_1meps[] = {104, 417, 1672};
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(rep.rows[i].t_eps, t_eps[i]);
    EXPECT_EQ(rep.rows[i].t_1meps, t_1meps[i]);
    ASSERT_TRUE(rep.rows[i].ratio.has_value());
    EXPECT_GT(*rep.rows[i].ratio, 1.2);
    ASSERT_TRUE(rep.rows[i].ratio_floor.has_value());
    EXPECT_LE(rep.rows[i].log_product, 12.0 * std::numbers::pi * std::numbers::pi);
  }
  EXPECT_NEAR(rep.rows[0].lambda_m, 0.9967898177814646, 1e-15);
  EXPECT_EQ(rep.rows[0].n, 64);
  EXPECT_NEAR(rep.rows[0].log_product, 0.9356656590406647, 1e-12);
}

TEST(ProfileTest, HypercubeFixtures) {
  const auto rep =
      family_profile(FamilyPreset{FamilyKind::hypercube, {4, 5, 6, 7}, "", {}}, Epsilon::decimal(0.05), std::nullopt, std::nullopt);
  EXPECT_TRUE(rep.contrast_only);
  const std::int64_t t_eps[] = {11, 14, 17, 20};
  const std::int64_t t_1meps[] = {1, 2, 2, 3};
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(rep.rows[i].t_eps, t_eps[i]);
    EXPECT_EQ(rep.rows[i].t_1meps, t_1meps[i]);
    EXPECT_FALSE(rep.rows[i].ratio_floor.has_value());
  }
}

TEST(ProfileTest, EpsilonRangeAndCapErrors) {
  const std::vector<WalkSpec> fam{instantiate(cycle_description(64, {1}))};
  EXPECT_THROW(family_profile(fam, Epsilon::decimal(0.5), std::nullopt, std::nullopt), Error);
  try {
    family_profile(fam, Epsilon::decimal(0.05), 50, std::nullopt);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::cap_exceeded);
    EXPECT_NE(std::string(e.what()).find("Z/64 {1}"), std::string::npos) << e.what();
  }
}

TEST(ExportTest, CsvLayout) {
  const std::vector<WalkSpec> fam{instantiate(cycle_description(4, {1}))};
  const auto rep = family_profile(fam, Epsilon::decimal(0.05), std::nullopt, std::nullopt);
  const auto csv = export_report(rep, ReportFormat::csv);
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "N,r,lambda_m,gap,t_eps,t_1meps,ratio,gap_product,log_product,ratio_floor");
  // One data line; t(0.95) = 0 on Z/4, so the ratio cell is empty.
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 2);
  const auto line = csv.substr(csv.find('\n') + 1);
  EXPECT_EQ(line.substr(0, line.find(',')), "4");
  EXPECT_NE(line.find(",0,,"), std::string::npos) << line;
  EXPECT_EQ(line.back(), '\n');
  EXPECT_EQ(line[line.size() - 2], ',');
  EXPECT_EQ(csv, export_report(family_profile(fam, Epsilon::decimal(0.05), std::nullopt, std::nullopt), ReportFormat::csv));
}

TEST(ExportTest, FormatDouble) {
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(format_double(1.0), "1");
  EXPECT_EQ(format_double(-0.25), "-0.25");
}

TEST(ExportTest, JsonRoundTrip) {
  const auto rep = family_profile(FamilyPreset{FamilyKind::cycle_single, {4, 8, 16}, "", {}}, Epsilon::from_exp(3.0),
                                  std::nullopt, 2.0);
  const auto text = export_report(rep, ReportFormat::json);
  const auto back = report_from_json(nlohmann::json::parse(text));
  EXPECT_EQ(back, rep);
  EXPECT_FALSE(back.rows[0].ratio.has_value());
  EXPECT_EQ(export_report(back, ReportFormat::json), text);

  EXPECT_EQ(epsilon_from_json(nlohmann::json::parse(R"({"exp": 240})")).neg_log_value(), 240.0);
  EXPECT_EQ(epsilon_from_json(nlohmann::json(0.05)), Epsilon::decimal(0.05));
}

}  // namespace
}  // namespace abelmix
