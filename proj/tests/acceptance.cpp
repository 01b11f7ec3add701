// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "hecke_cells/cells.hpp"
#include "hecke_cells/orbits.hpp"
#include "hecke_cells/tilting.hpp"
#include "oracles.hpp"

using namespace hecke_cells;

namespace {

// Collects failure notes for one criterion.
struct Check {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok && failures.size() < 5) failures.push_back(what);
    if (!ok) ++failed;
  }
  int failed = 0;
};

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;  // 0: no limit
  std::function<void(Check&)> body;
};

bool in_Y_plus(const RootDatum& d, const Weight& l) { return l.is_dominant() && d.in_root_lattice(l); }

void cell_counts(Check& c) {
  auto c2 = right_cells(AffineWeylGroup::from_type("C2"), 20, 6);
  c.expect(c2.trusted_cells().size() == 4, "C2 trusted cells = " + std::to_string(c2.trusted_cells().size()));
  auto g2 = right_cells(AffineWeylGroup::from_type("G2"), 24, 8);
  c.expect(g2.trusted_cells().size() == 5, "G2 trusted cells = " + std::to_string(g2.trusted_cells().size()));
  for (const char* type : {"A1", "A2", "A3", "B2", "C2", "G2", "B3", "C3"}) {
    auto G = AffineWeylGroup::from_type(type);
    auto P = right_cells(G, 7, 2);
    auto id = P.cell_id(G.identity());
    c.expect(id && P.cells[*id].size() == 1 && P.trusted[*id], std::string(type) + ": identity cell is not a singleton");
  }
}

void kl_oracle(Check& c) {
  for (const char* type : {"A1", "C2"}) {
    auto G = AffineWeylGroup::from_type(type);
    KLBasis kl(G);
    auto elems = G.enumerate_W(8);
    for (const AffineElement& w : elems)
      c.expect(kl.element(w) == oracle::kl_by_bar_solve(G, w), std::string(type) + " KL mismatch at " + G.to_string(w));
    for (const AffineElement& x : elems) {
      const HeckeElt xc{{x, LaurentPoly::constant(1)}};
      for (const AffineElement& y : elems)
        for (const auto& [z, k] : canonical_product(kl, xc, y))
          c.expect(k.nonnegative(), std::string(type) + " negative structure constant " + G.to_string(x) + " * " +
                                        G.to_string(y));
    }
  }
}

void asph_vanishing(Check& c) {
  for (const char* type : {"A1", "A2", "B2", "C2", "G2"}) {
    auto G = AffineWeylGroup::from_type(type);
    KLBasis kl(G);
    for (const AffineElement& w : G.enumerate_W(8))
      if (!G.in_fW(w))
        c.expect(asph_project(G, kl.element(w)).empty(), std::string(type) + " nonzero projection of " + G.to_string(w));
  }
}

void length_oracle(Check& c) {
  for (const char* type : {"A1", "C2", "G2"}) {
    auto G = AffineWeylGroup::from_type(type);
    const RootDatum& d = G.datum();
    auto finite = d.weyl_group();
    for (const auto& [a, len] : oracle::bfs_lengths(G, 12)) {
      c.expect(a.length() == len, std::string(type) + " length of " + G.to_string(a));
      bool by_search = true;
      for (const auto& u : finite)
        if (G.mult(G.make(u, d.zero()), a).length() < a.length()) by_search = false;
      auto [lambda, v] = G.translation_first(a);
      const bool by_length = in_Y_plus(d, lambda) && a.length() == G.translation(lambda).length() - v.length(d);
      bool by_pairing = in_Y_plus(d, lambda);
      for (int r = 0; r < d.num_positive_roots(); ++r)
        if (!v.inverse().maps_positive(d, r) && d.pairing(lambda, r) < 1) by_pairing = false;
      c.expect(by_search == by_length && by_search == by_pairing && by_search == G.in_fW(a),
               std::string(type) + " coset characterisations disagree at " + G.to_string(a));
    }
  }
}

void generation_suite(Check& c) {
  std::mt19937 rng(20240601);
  for (const char* type : {"A2", "C2", "G2"}) {
    auto G = AffineWeylGroup::from_type(type);
    GenerationConstants gc = generation_constants(G);
    std::set<AffineElement> Z(gc.Z.begin(), gc.Z.end());
    for (int trial = 0; trial < 1000; ++trial) {
      const int target = rng() % 31;
      AffineElement w = G.identity();
      while (w.length() < target) {
        std::vector<AffineElement> up;
        for (int g = 0; g < G.num_generators(); ++g) {
          AffineElement x = G.right_mult(w, g);
          if (x.length() > w.length() && G.in_fW(x)) up.push_back(x);
        }
        w = up[rng() % up.size()];
      }
      FWDecomposition dec = decompose_fW(G, gc, w);
      c.expect(in_Y_plus(G.datum(), dec.lambda) && Z.count(dec.z) && G.mult(G.translation(dec.lambda), dec.z) == w,
               std::string(type) + " bad factorisation of " + G.to_string(w));
    }
  }
  auto P = right_cells(AffineWeylGroup::from_type("C2"), 20, 6);
  GenerationConstants gc = generation_constants(P.group());
  for (int cell : P.trusted_cells()) {
    try {
      CellGenerators K = cell_generators(P, gc, cell);
      for (int i : P.cells[cell]) {
        const AffineElement& y = P.ball->element(i);
        if (y.length() > P.trusted_length()) continue;
        bool ok = false;
        for (const AffineElement& v : K.minimal) ok = ok || factors_through(P.group(), y, v);
        c.expect(ok, "C2 member " + P.word(i) + " not generated");
      }
    } catch (const std::exception& e) {
      c.expect(false, std::string("C2 cell generators: ") + e.what());
    }
  }
}

void verlinde(Check& c) {
  auto A1 = AffineWeylGroup::from_type("A1");
  const int p = 5;
  auto alc = alcove_weights(A1, p);
  for (const Weight& l : alc)
    for (const Weight& m : alc) {
      auto row = fusion_row(A1, l, m, p);
      c.expect(row == fusion_row(A1, m, l, p), "A1 fusion not symmetric");
      for (const Weight& n : alc) {
        auto it = row.find(n);
        const std::int64_t got = it == row.end() ? 0 : it->second;
        c.expect(got == oracle::fusion_alternating_sum(A1, l, m, n, p),
                 "A1 fusion " + l.to_string() + "," + m.to_string() + "," + n.to_string());
      }
    }
  c.expect(fusion_row(A1, Weight{3}, Weight{3}, p) == std::map<Weight, std::int64_t>{{Weight{0}, 1}}, "A1 3x3");
  for (const char* type : {"A1", "A2", "C2", "G2"}) {
    auto G = AffineWeylGroup::from_type(type);
    const int q = 11;
    for (const Weight& l : alcove_weights(G, q))
      c.expect(fusion_multiplicity(G, l, G.datum().zero(), l, q) == 1, std::string(type) + " unit law at " + l.to_string());
  }
  auto C2 = AffineWeylGroup::from_type("C2");
  auto calc = alcove_weights(C2, 7);
  for (const Weight& l : calc)
    for (const Weight& m : calc) {
      auto row = fusion_row(C2, l, m, 7);
      c.expect(row == fusion_row(C2, m, l, 7), "C2 fusion not symmetric");
      for (const Weight& n : calc) {
        auto it = row.find(n);
        const std::int64_t got = it == row.end() ? 0 : it->second;
        c.expect(got == oracle::fusion_alternating_sum(C2, l, m, n, 7),
                 "C2 fusion " + l.to_string() + "," + m.to_string() + "," + n.to_string());
      }
    }
}

void monotonicity(Check& c) {
  struct Case {
    const char* type;
    int L, m, p;
  };
  for (const Case& k : {Case{"C2", 20, 6, 7}, Case{"G2", 24, 8, 11}}) {
    const std::string t = k.type;
    auto G = AffineWeylGroup::from_type(k.type);
    auto P = right_cells(G, k.L, k.m);
    OrbitTable T(G.datum());
    CellOrbitMap M = cell_to_orbit(P, T);
    c.expect(M.complete, t + " cell map incomplete");
    for (const auto& [a, oa] : M.orbit_of)
      for (const auto& [b, ob] : M.orbit_of)
        if (P.below[a][b]) c.expect(T.leq(oa, ob), t + " order not preserved");
    std::map<int, int> by_cell;
    for (int i = 0; i < P.num_elements(); ++i) {
      const AffineElement& w = P.ball->element(i);
      if (!P.trusted_element(w)) continue;
      const Weight lambda = G.dot_action(w, G.datum().zero(), k.p);
      Prediction r = humphreys_predict(P, T, M, lambda, k.p, HumphreysMode::Absolute);
      c.expect(r.orbit.has_value(), t + " no prediction for " + P.word(i));
      if (!r.orbit) continue;
      auto [it, fresh] = by_cell.emplace(*r.cell, *r.orbit);
      c.expect(it->second == *r.orbit, t + " prediction varies on cell " + std::to_string(*r.cell));
      Prediction rel = humphreys_predict(P, T, M, lambda, k.p, HumphreysMode::Relative);
      c.expect(rel.empty == !G.coset_minimality(w).in_fWf, t + " relative emptiness at " + P.word(i));
    }
    const RootDatum& d = G.datum();
    c.expect(humphreys_predict(P, T, M, d.zero(), k.p, HumphreysMode::Absolute).orbit_name == "regular",
             t + " lambda=0");
    c.expect(humphreys_predict(P, T, M, d.rho() * (k.p - 1), k.p, HumphreysMode::Absolute).orbit_name == "zero",
             t + " lambda=(p-1)rho");
  }
}

void determinism(Check& c) {
  auto G = AffineWeylGroup::from_type("C2");
  KLBasis kl(G);
  const int L = 20, m = 6;
  BasisTable table = BasisTable::from_basis(kl, G.enumerate_fW(L + 1));
  BasisTable from_text = BasisTable::from_text(G, table.to_text());
  BasisTable from_json = BasisTable::from_json(G, table.to_json());
  c.expect(from_text.to_text() == table.to_text(), "text table not bit-exact");
  c.expect(from_json.to_json() == table.to_json(), "json table not bit-exact");
  CellPartition own = right_cells(G, L, m);
  for (const BasisTable* t : {&from_text, &from_json}) {
    CellPartition ingested = right_cells(AntisphericalBasis(*t, L + 1), L, m);
    c.expect(own.cell_of == ingested.cell_of && own.below == ingested.below && own.trusted == ingested.trusted,
             "ingested partition differs");
  }
  const std::vector<std::vector<std::string>> commands = {
      {"cells", "--type", "C2", "--len", "20", "--margin", "6"},
      {"cells", "--type", "G2"},
      {"kl", "--type", "G2", "--len", "10"},
      {"kl", "--type", "C2", "--len", "8", "--format", "tsv"},
      {"asph", "--type", "G2", "--word", "s0.s2.s1"},
      {"verlinde", "--type", "C2", "--p", "7"},
      {"verlinde", "--type", "A1", "--p", "5", "--format", "json"},
      {"alcove", "--type", "C2", "--p", "7", "--lambda", "4,3"},
      {"decompose", "--type", "C2"},
      {"decompose", "--type", "G2", "--word", "s0.s2.s1.s2.s1"},
      {"humphreys", "--type", "G2", "--p", "11", "--lambda", "0,0"},
      {"humphreys", "--type", "C2", "--p", "7", "--lambda", "6,6", "--mode", "relative"},
      {"orbits", "--type", "E6"},
      {"orbits", "--type", "G2"},
      {"plot", "--type", "G2", "--p", "11"},
  };
  for (const auto& cmd : commands) {
    std::ostringstream o1, e1, o2, e2;
    const int r1 = cli::run(cmd, o1, e1);
    const int r2 = cli::run(cmd, o2, e2);
    std::string name;
    for (const auto& s : cmd) name += s + " ";
    c.expect(r1 == r2 && o1.str() == o2.str() && e1.str() == e2.str(), "not byte-stable: " + name);
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "cell counts (C2: 4, G2: 5, identity singleton)", 60, cell_counts},
      {2, "KL basis equals bar-solve oracle, positive structure constants", 30, kl_oracle},
      {3, "antispherical projection vanishes off fW", 0, asph_vanishing},
      {4, "length and coset characterisations vs BFS", 60, length_oracle},
      {5, "fW factorisations and cell generators", 120, generation_suite},
      {6, "Verlinde fusion vs alternating sums", 60, verlinde},
      {7, "cell order vs closure order, Humphreys endpoints", 0, monotonicity},
      {8, "table round trip and byte-stable CLI output", 0, determinism},
  };
  int failures = 0;
  for (const Criterion& cr : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.body(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (cr.limit_seconds > 0 && secs > cr.limit_seconds)
      check.expect(false, "took " + std::to_string(secs) + " s, limit " + std::to_string(cr.limit_seconds) + " s");
    const bool ok = check.failed == 0;
    failures += !ok;
    std::printf("%s %d %s (%.2f s)\n", ok ? "PASS" : "FAIL", cr.id, cr.title, secs);
    for (const auto& f : check.failures) std::printf("    %s\n", f.c_str());
    std::fflush(stdout);
  }
  return failures ? 1 : 0;
}
