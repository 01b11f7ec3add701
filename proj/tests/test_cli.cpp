#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "hecke_cells/affine.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = hecke_cells::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

int count(const std::string& s, const std::string& needle) {
  int n = 0;
  for (size_t pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("hecke_cells_test_" + name);
}

}  // namespace

TEST(Cli, CellsC2) {
  Result r = run({"cells", "--type", "C2", "--len", "20", "--margin", "6"});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j.at("trusted_cells"), 4);
  EXPECT_EQ(j.at("schema"), 1);
}

TEST(Cli, HumphreysG2) {
  Result r = run({"humphreys", "--type", "G2", "--p", "11", "--lambda", "0,0"});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j.at("orbit_name"), "regular");
  EXPECT_EQ(j.at("status"), "theorem");
}

TEST(Cli, VerlindeA1) {
  Result r = run({"verlinde", "--type", "A1", "--p", "5", "--lambda", "3", "--mu", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "lambda\tmu\tnu\tmultiplicity\n3\t3\t0\t1\n");
  Result full = run({"verlinde", "--type", "A1", "--p", "5", "--format", "json"});
  ASSERT_EQ(full.code, 0) << full.err;
  EXPECT_NO_THROW(json::parse(full.out));
}

TEST(Cli, ExitCodes) {
  Result unknown_flag = run({"cells", "--type", "C2", "--frobnicate"});
  EXPECT_EQ(unknown_flag.code, 2);
  EXPECT_FALSE(unknown_flag.err.empty());
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"cells"}).code, 2);
  Result bad_type = run({"cells", "--type", "Q7"});
  EXPECT_EQ(bad_type.code, 2);
  EXPECT_EQ(json::parse(bad_type.err).at("error"), "input");
  Result small_p = run({"humphreys", "--type", "G2", "--p", "5", "--lambda", "0,0"});
  EXPECT_EQ(small_p.code, 3);
  EXPECT_EQ(json::parse(small_p.err).at("error"), "unsupported");
  EXPECT_EQ(run({"plot", "--type", "A3", "--len", "2"}).code, 3);
  Result missing = run({"cells", "--type", "C2", "--basis", temp_file("does_not_exist.txt").string()});
  EXPECT_EQ(missing.code, 4);
  EXPECT_EQ(json::parse(missing.err).at("error"), "data");
  EXPECT_EQ(run({"alcove", "--type", "C2", "--p", "7", "--lambda", "1"}).code, 2);
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::vector<std::string>> commands = {
      {"cells", "--type", "G2", "--len", "14", "--margin", "4"},
      {"kl", "--type", "C2", "--len", "6"},
      {"asph", "--type", "C2", "--word", "s0.s2.s1"},
      {"verlinde", "--type", "C2", "--p", "7"},
      {"alcove", "--type", "G2", "--p", "11", "--lambda", "3,2"},
      {"decompose", "--type", "C2", "--len", "12", "--margin", "4"},
      {"humphreys", "--type", "C2", "--p", "7", "--lambda", "2,1"},
      {"orbits", "--type", "G2"},
      {"plot", "--type", "C2", "--len", "8", "--p", "7"},
  };
  for (const auto& c : commands) {
    Result a = run(c), b = run(c);
    EXPECT_EQ(a.code, 0) << c[0] << ": " << a.err;
    EXPECT_EQ(a.out, b.out) << c[0];
    EXPECT_FALSE(a.out.empty());
  }
}

TEST(Cli, PlotHasOneAlcovePerElement) {
  for (const char* type : {"C2", "G2", "A2"}) {
    auto G = hecke_cells::AffineWeylGroup::from_type(type);
    for (int L : {0, 6, 12}) {
      Result r = run({"plot", "--type", type, "--len", std::to_string(L)});
      ASSERT_EQ(r.code, 0) << r.err;
      EXPECT_EQ(count(r.out, "class=\"alcove\""), static_cast<int>(G.enumerate_fW(L).size())) << type << " " << L;
      EXPECT_EQ(count(r.out, "<svg"), 1);
      EXPECT_EQ(count(r.out, "</svg>"), 1);
    }
  }
  // G2: the double coset minimal alcoves up to length 30 are labelled 1..16
  Result g2 = run({"plot", "--type", "G2", "--len", "30", "--p", "11"});
  ASSERT_EQ(g2.code, 0) << g2.err;
  EXPECT_EQ(count(g2.out, "<text"), 16);
  EXPECT_EQ(count(g2.out, ">16</text>"), 1);
  Result single = run({"plot", "--type", "C2", "--len", "0"});
  EXPECT_EQ(count(single.out, "data-cell=\"0\""), 1);
}

TEST(Cli, BasisExportRoundTrip) {
  for (const char* fmt : {"tsv", "json"}) {
    const auto path = temp_file(std::string("c2_basis.") + (fmt == std::string("tsv") ? "txt" : "json"));
    Result exported = run({"kl", "--type", "C2", "--len", "11", "--format", fmt, "--out", path.string()});
    ASSERT_EQ(exported.code, 0) << exported.err;
    Result own = run({"cells", "--type", "C2", "--len", "10", "--margin", "3"});
    Result ingested = run({"cells", "--type", "C2", "--len", "10", "--margin", "3", "--basis", path.string()});
    ASSERT_EQ(ingested.code, 0) << ingested.err;
    json a = json::parse(own.out), b = json::parse(ingested.out);
    EXPECT_EQ(a.at("cells"), b.at("cells"));
    EXPECT_EQ(a.at("preorder"), b.at("preorder"));
    std::filesystem::remove(path);
  }
}

TEST(Cli, OrbitsAndDecompose) {
  Result r = run({"orbits", "--type", "C2"});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j.at("orbits").size(), 4u);
  EXPECT_TRUE(j.contains("cell_map"));
  Result d = run({"decompose", "--type", "A1", "--word", "s0"});
  ASSERT_EQ(d.code, 0) << d.err;
  json dj = json::parse(d.out);
  EXPECT_EQ(dj.at("lambda"), "0");
  EXPECT_EQ(dj.at("z"), "s0");
}
