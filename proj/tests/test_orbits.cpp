#include <gtest/gtest.h>

#include <numeric>

#include <nlohmann/json.hpp>

#include "hecke_cells/error.hpp"
#include "hecke_cells/orbits.hpp"
#include "oracles.hpp"

using namespace hecke_cells;

namespace {

bool dominates(const std::vector<int>& a, const std::vector<int>& b) {
  int sa = 0, sb = 0;
  for (size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    sa += i < a.size() ? a[i] : 0;
    sb += i < b.size() ? b[i] : 0;
    if (sa < sb) return false;
  }
  return true;
}

// n^2 - sum of squared column lengths
int partition_orbit_dimension(const std::vector<int>& part) {
  const int n = std::accumulate(part.begin(), part.end(), 0);
  int s = 0;
  for (int col = 1; col <= part.front(); ++col) {
    int len = 0;
    for (int r : part) len += r >= col;
    s += len * len;
  }
  return n * n - s;
}

struct TypeSetup {
  AffineWeylGroup G;
  CellPartition P;
  OrbitTable T;
  CellOrbitMap M;
  TypeSetup(const char* type, int L, int m)
      : G(AffineWeylGroup::from_type(type)), P(right_cells(G, L, m)), T(G.datum()), M(cell_to_orbit(P, T)) {}
};

const TypeSetup& c2() {
  static const TypeSetup s("C2", 20, 6);
  return s;
}

const TypeSetup& g2() {
  static const TypeSetup s("G2", 24, 8);
  return s;
}

}  // namespace

TEST(Orbits, TypeACountsAndPartitions) {
  for (int n = 2; n <= 7; ++n) {
    SCOPED_TRACE(n);
    RootDatum d = RootDatum::parse("A" + std::to_string(n - 1));
    OrbitTable T(d);
    const auto& orbits = T.orbits();
    EXPECT_EQ(static_cast<int>(orbits.size()), oracle::partition_count(n));
    std::set<std::vector<int>> seen;
    for (const NilpotentOrbit& o : orbits) {
      EXPECT_EQ(std::accumulate(o.partition.begin(), o.partition.end(), 0), n);
      EXPECT_TRUE(seen.insert(o.partition).second);
      EXPECT_EQ(o.dimension, partition_orbit_dimension(o.partition));
    }
    EXPECT_EQ(orbits.front().partition, std::vector<int>{n});
    EXPECT_EQ(orbits.back().partition, std::vector<int>(n, 1));
    ASSERT_TRUE(T.has_order());
    for (size_t a = 0; a < orbits.size(); ++a)
      for (size_t b = 0; b < orbits.size(); ++b)
        EXPECT_EQ(T.leq(a, b), dominates(orbits[b].partition, orbits[a].partition));
  }
  OrbitTable a5(RootDatum::parse("A5"));
  auto i = *a5.find("[3,3]"), j = *a5.find("[4,1,1]");
  EXPECT_FALSE(a5.leq(i, j));
  EXPECT_FALSE(a5.leq(j, i));
  OrbitTable a3(RootDatum::parse("A3"));
  EXPECT_TRUE(a3.leq(*a3.find("[2,2]"), *a3.find("[3,1]")));
}

TEST(Orbits, RankTwoChains) {
  OrbitTable c2(RootDatum::parse("C2"));
  std::vector<std::string> names;
  std::vector<int> dims;
  for (const auto& o : c2.orbits()) {
    names.push_back(o.name);
    dims.push_back(o.dimension);
  }
  EXPECT_EQ(names, (std::vector<std::string>{"regular", "subregular", "minimal", "zero"}));
  EXPECT_EQ(dims, (std::vector<int>{8, 6, 4, 0}));

  OrbitTable g2(RootDatum::parse("G2"));
  names.clear();
  dims.clear();
  for (const auto& o : g2.orbits()) {
    names.push_back(o.name);
    dims.push_back(o.dimension);
  }
  EXPECT_EQ(names, (std::vector<std::string>{"regular", "subregular", "middle", "minimal", "zero"}));
  EXPECT_EQ(dims, (std::vector<int>{12, 10, 8, 6, 0}));
  for (const OrbitTable* T : {&c2, &g2}) {
    const int n = static_cast<int>(T->orbits().size());
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) EXPECT_EQ(T->leq(a, b), a >= b);
    EXPECT_EQ(static_cast<int>(T->closure_chain(0).size()), n);
    EXPECT_EQ(T->closure_chain(T->zero()), std::vector<int>{T->zero()});
  }
  EXPECT_EQ(g2.orbits()[1].bala_carter(), "I={0,1};J={0}");
  EXPECT_EQ(g2.orbits().back().bala_carter(), "I={};J={}");
}

TEST(Orbits, CountsInOtherTypes) {
  const std::pair<const char*, int> expected[] = {{"B2", 4}, {"B3", 7}, {"C3", 8}, {"D4", 12}, {"F4", 16},
                                                  {"E6", 21}, {"E7", 45}, {"E8", 70}};
  for (const auto& [type, count] : expected) {
    RootDatum d = RootDatum::parse(type);
    auto orbits = enumerate_orbits(d);
    EXPECT_EQ(static_cast<int>(orbits.size()), count) << type;
    EXPECT_TRUE(orbits.front().is_regular(d));
    EXPECT_TRUE(orbits.back().is_zero());
    // subregular has codimension 2 in the nilpotent cone
    EXPECT_EQ(orbits[1].dimension, 2 * d.num_positive_roots() - 2) << type;
    for (const auto& o : orbits) {
      EXPECT_EQ(o.dimension % 2, 0);
      for (int j : o.parabolic) EXPECT_TRUE(std::count(o.levi.begin(), o.levi.end(), j));
    }
  }
  OrbitTable d4(RootDatum::parse("D4"));
  EXPECT_FALSE(d4.has_order());
  EXPECT_THROW(d4.leq(0, 1), UnsupportedError);
}

TEST(Orbits, CellMapIsABijectionInRankTwo) {
  for (const TypeSetup* s : {&c2(), &g2()}) {
    SCOPED_TRACE(s->G.datum().type().to_string());
    EXPECT_TRUE(s->M.complete);
    EXPECT_EQ(s->P.trusted_cells().size(), s->T.orbits().size());
    std::set<int> hit;
    for (const auto& [cell, orbit] : s->M.orbit_of) hit.insert(orbit);
    EXPECT_EQ(hit.size(), s->T.orbits().size());
    EXPECT_EQ(s->M.orbit_of.at(*s->P.cell_id(s->G.identity())), s->T.regular());
    EXPECT_EQ(s->M.orbit_of.at(*s->P.cell_id(c0_element(s->G))), s->T.zero());
  }
  EXPECT_EQ(c0_element(c2().G).length(), 7);
  EXPECT_EQ(c0_element(g2().G).length(), 16);
}

TEST(Orbits, CellMapIsMonotone) {
  for (const TypeSetup* s : {&c2(), &g2()}) {
    for (const auto& [a, oa] : s->M.orbit_of)
      for (const auto& [b, ob] : s->M.orbit_of)
        if (s->P.below[a][b]) EXPECT_TRUE(s->T.leq(oa, ob)) << a << " " << b;
  }
}

TEST(Orbits, UniversalEntriesInLargerRank) {
  auto G = AffineWeylGroup::from_type("A2");
  CellPartition P = right_cells(G, 14, 4);
  OrbitTable T(G.datum());
  CellOrbitMap M = cell_to_orbit(P, T);
  EXPECT_EQ(M.orbit_of.at(*P.cell_id(G.identity())), T.regular());
  EXPECT_EQ(M.orbit_of.at(*P.cell_id(c0_element(G))), T.zero());
}

TEST(Humphreys, Endpoints) {
  for (const TypeSetup* s : {&c2(), &g2()}) {
    const RootDatum& d = s->G.datum();
    for (int p : {11, 13}) {
      Prediction top = humphreys_predict(s->P, s->T, s->M, d.zero(), p, HumphreysMode::Absolute);
      EXPECT_EQ(top.orbit_name, "regular");
      EXPECT_EQ(top.status, "theorem");
      EXPECT_EQ(top.w_word, "e");
      Prediction bottom = humphreys_predict(s->P, s->T, s->M, d.rho() * (p - 1), p, HumphreysMode::Absolute);
      EXPECT_EQ(bottom.orbit_name, "zero");
      EXPECT_EQ(bottom.status, "theorem");
      Prediction deep = humphreys_predict(s->P, s->T, s->M, d.rho() * (3 * p), p, HumphreysMode::Absolute);
      EXPECT_EQ(deep.orbit_name, "zero");
      auto j = top.to_json(s->T);
      EXPECT_EQ(j.at("schema"), 1);
      EXPECT_EQ(j.at("orbit_name"), "regular");
      EXPECT_EQ(j.at("closure_chain").size(), s->T.orbits().size());
    }
  }
}

TEST(Humphreys, RelativeMode) {
  const TypeSetup& s = c2();
  const int p = 7;
  int empties = 0, nonempty = 0;
  for (const AffineElement& w : s.G.enumerate_fW(12)) {
    const Weight lambda = s.G.dot_action(w, s.G.datum().zero(), p);
    if (!lambda.is_dominant()) continue;
    Prediction r = humphreys_predict(s.P, s.T, s.M, lambda, p, HumphreysMode::Relative);
    if (s.G.coset_minimality(w).in_fWf) {
      EXPECT_FALSE(r.empty);
      ++nonempty;
    } else {
      EXPECT_TRUE(r.empty);
      EXPECT_EQ(r.orbit_name, "empty");
      EXPECT_EQ(r.status, "theorem");
      ++empties;
    }
  }
  EXPECT_GT(empties, 0);
  EXPECT_GT(nonempty, 0);
  EXPECT_THROW(humphreys_predict(s.P, s.T, s.M, Weight{1, 0}, p, HumphreysMode::Relative), InputError);
}

TEST(Humphreys, ConstantOnCellsAndMonotone) {
  for (const TypeSetup* s : {&c2(), &g2()}) {
    const RootDatum& d = s->G.datum();
    const int p = d.coxeter_number() == 4 ? 7 : 11;
    std::map<int, std::string> by_cell;
    std::vector<std::pair<AffineElement, int>> seen;
    for (int i = 0; i < s->P.num_elements(); ++i) {
      const AffineElement& w = s->P.ball->element(i);
      if (!s->P.trusted_element(w)) continue;
      const Weight lambda = s->G.dot_action(w, d.zero(), p);
      Prediction r = humphreys_predict(s->P, s->T, s->M, lambda, p, HumphreysMode::Absolute);
      ASSERT_TRUE(r.orbit.has_value()) << s->P.word(i);
      auto [it, fresh] = by_cell.emplace(*r.cell, r.orbit_name);
      EXPECT_EQ(it->second, r.orbit_name);
      seen.emplace_back(w, *r.orbit);
    }
    for (const auto& [w, ow] : seen)
      for (const auto& [y, oy] : seen)
        if (leq_T(s->P, w, y) == Tri::True) EXPECT_TRUE(s->T.leq(ow, oy));
  }
}

TEST(Humphreys, StatusRules) {
  const TypeSetup& g = g2();
  const int mid = *g.T.find("middle");
  bool saw_middle = false;
  for (int p : {7, 11}) {
    for (int i = 0; i < g.P.num_elements(); ++i) {
      const AffineElement& w = g.P.ball->element(i);
      if (!g.P.trusted_element(w)) continue;
      const Weight lambda = g.G.dot_action(w, g.G.datum().zero(), p);
      Prediction r = humphreys_predict(g.P, g.T, g.M, lambda, p, HumphreysMode::Absolute);
      if (r.orbit == mid) {
        saw_middle = true;
        EXPECT_EQ(r.status, "conjectural");
      } else if (p == 11) {
        EXPECT_EQ(r.status, "theorem");
      }
    }
  }
  EXPECT_TRUE(saw_middle);
  const TypeSetup& c = c2();
  Prediction r = humphreys_predict(c.P, c.T, c.M, Weight{1, 1}, 7, HumphreysMode::Absolute);
  EXPECT_EQ(r.status, "theorem");
}

TEST(Humphreys, Errors) {
  const TypeSetup& g = g2();
  EXPECT_THROW(humphreys_predict(g.P, g.T, g.M, Weight{0, 0}, 5, HumphreysMode::Absolute), UnsupportedError);
  EXPECT_THROW(humphreys_predict(g.P, g.T, g.M, Weight{-1, 0}, 11, HumphreysMode::Absolute), InputError);
  // alcoves beyond the trusted range
  Prediction far = humphreys_predict(g.P, g.T, g.M, Weight{40, 0}, 11, HumphreysMode::Absolute);
  if (!far.orbit) {
    EXPECT_EQ(far.orbit_name, "unknown");
    EXPECT_EQ(far.status, "unknown");
  }
}
