#include "kmoments/serialize.hpp"

#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "kmoments/moments.hpp"

using namespace kmoments;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(KMOMENTS_GOLDEN_DIR) + "/" + name, std::ios::binary);
  EXPECT_TRUE(in.good()) << name;
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST(Serialize, KloostermanCsvMatchesGolden) {
  EXPECT_EQ(io::kloosterman_csv(kloosterman_table(Field::build(3))), slurp("kloosterman_r3.csv"));
  EXPECT_EQ(io::kloosterman_csv(kloosterman_table(Field::build(4))), slurp("kloosterman_r4.csv"));
}

TEST(Serialize, KloostermanJsonMatchesGolden) {
  for (unsigned r : {3u, 4u}) {
    const auto doc = nlohmann::json::parse(slurp("kloosterman_r" + std::to_string(r) + ".json"));
    EXPECT_EQ(doc["schema"], 1);
    const auto f = Field::build(r);
    const auto t = kloosterman_table(f);
    const auto& table = doc["tables"][0];
    EXPECT_EQ(table["field"]["modulus_hex"], to_hex(f.modulus()));
    ASSERT_EQ(table["values"].size(), t.size());
    for (const auto& row : table["values"]) EXPECT_EQ(row["K"].get<int>(), t.at(row["a"].get<Element>()));
  }
}

TEST(Serialize, DistributionCsv) {
  const auto d = weight_distribution(Field::build(3), Code::c1);
  EXPECT_EQ(io::distribution_csv(d), "j,count\n0,1\n1,0\n2,3\n3,0\n4,3\n5,0\n6,1\n");
}

TEST(Serialize, BigCountsSurviveJson) {
  const auto f = Field::build(10);
  const auto d = weight_distribution(f, Code::c3, 12);
  const auto text = io::distribution_json(f, d).dump();
  const auto back = nlohmann::json::parse(text);
  ASSERT_EQ(back["counts"].size(), 13u);
  for (std::size_t j = 0; j < d.counts.size(); ++j) EXPECT_EQ(BigInt(back["counts"][j].get<std::string>()), d.counts[j]);
  EXPECT_FALSE(back["full"].get<bool>());
  EXPECT_EQ(back["length"], 1024);
}

TEST(Serialize, MomentRows) {
  std::vector<io::MomentRow> rows{{3, 0xb, Code::c1, 3, BigInt(-47), BigInt(-47)},
                                  {13, 0x201b, Code::c3, 2, BigInt(5), std::nullopt}};
  EXPECT_EQ(io::moment_rows_csv(rows),
            "r,modulus_hex,code,h,mk_recursive,mk_bruteforce,match\n"
            "3,0xb,1,3,-47,-47,true\n"
            "13,0x201b,3,2,5,,\n");
  const auto j = io::moment_row_json(rows[1]);
  EXPECT_TRUE(j["mk_bruteforce"].is_null());
  EXPECT_TRUE(j["match"].is_null());
  EXPECT_EQ(io::moment_row_json(rows[0])["mk_recursive"], "-47");
}

TEST(Serialize, DualReport) {
  const auto j = io::dual_report_json(verify_dual_structure(Field::build(2), Code::c2));
  EXPECT_EQ(j["kernel_size"], 2);
  EXPECT_EQ(j["injective"], false);
  EXPECT_EQ(j["pass"], true);
}

TEST(Serialize, FormatNames) {
  EXPECT_EQ(io::parse_format("csv"), io::Format::csv);
  EXPECT_EQ(io::parse_format("json"), io::Format::json);
  EXPECT_EQ(io::parse_format("pretty"), io::Format::pretty);
  EXPECT_THROW(io::parse_format("xml"), std::invalid_argument);
}
