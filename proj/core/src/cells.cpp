#include "hecke_cells/cells.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>
#include <thread>

#include <nlohmann/json.hpp>

namespace hecke_cells {

int worker_threads() {
  if (const char* env = std::getenv("HECKE_CELLS_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

EdgeGraph cell_edges(const AntisphericalBasis& basis, int L) {
  const FWBall& ball = basis.ball();
  if (ball.max_length() < L + 1)
    throw DataError("canonical basis covers fW only up to length " + std::to_string(ball.max_length()) +
                    ", need " + std::to_string(L + 1));
  EdgeGraph g;
  g.length_bound = L;
  while (g.num_elements < ball.size() && ball.length(g.num_elements) <= L) ++g.num_elements;
  const int n = g.num_elements;
  const int ng = ball.group().num_generators();
  std::vector<std::vector<CellEdge>> per(n);
  g.escapes.assign(n, 0);

  auto work = [&](int begin, int step) {
    for (int y = begin; y < n; y += step) {
      for (int s = 0; s < ng; ++s) {
        for (const auto& [w, c] : basis.canonical_product(y, s)) {
          if (w >= n)
            g.escapes[y] = 1;
          else
            per[y].push_back({y, w, s});
        }
      }
    }
  };
  const int threads = std::max(1, std::min(worker_threads(), n));
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
    for (auto& th : pool) th.join();
  }
  for (auto& v : per) g.edges.insert(g.edges.end(), v.begin(), v.end());
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
  return g;
}

CellPartition partition_from_edges(const AntisphericalBasis& basis, const EdgeGraph& graph, int margin) {
  if (margin < 0 || margin > graph.length_bound) throw InputError("need 0 <= margin <= L");
  const int n = graph.num_elements;
  std::vector<std::vector<int>> adj(n);
  for (const CellEdge& e : graph.edges) adj[e.from].push_back(e.to);

  // reach[y][w]: w reachable from y
  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  for (int y = 0; y < n; ++y) {
    std::vector<int> stack{y};
    reach[y][y] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : adj[u])
        if (!reach[y][w]) {
          reach[y][w] = 1;
          stack.push_back(w);
        }
    }
  }

  CellPartition P;
  P.ball = basis.ball_ptr();
  P.length_bound = graph.length_bound;
  P.margin = margin;
  P.prime = basis.prime();
  P.provenance = basis.provenance();
  P.cell_of.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    if (P.cell_of[i] >= 0) continue;
    const int id = P.num_cells();
    P.cells.emplace_back();
    for (int j = i; j < n; ++j)
      if (P.cell_of[j] < 0 && reach[i][j] && reach[j][i]) {
        P.cell_of[j] = id;
        P.cells.back().push_back(j);
      }
  }
  const int nc = P.num_cells();
  P.below.assign(nc, std::vector<char>(nc, 0));
  for (int a = 0; a < nc; ++a)
    for (int b = 0; b < nc; ++b) P.below[a][b] = reach[P.cells[b][0]][P.cells[a][0]];
  // A cell is trusted when it meets the inner ball l <= L - margin and none of
  // its inner members has an expansion leaving the bound.
  P.trusted.assign(nc, 0);
  for (int i = 0; i < n; ++i)
    if (P.ball->length(i) <= P.trusted_length()) P.trusted[P.cell_of[i]] = 1;
  for (int i = 0; i < n; ++i)
    if (P.ball->length(i) <= P.trusted_length() && graph.escapes[i]) P.trusted[P.cell_of[i]] = 0;
  return P;
}

CellPartition right_cells(const AntisphericalBasis& basis, int L, int margin) {
  return partition_from_edges(basis, cell_edges(basis, L), margin);
}

CellPartition right_cells(const AffineWeylGroup& G, int L, int margin) {
  AntisphericalBasis basis(G, L + 1);
  return right_cells(basis, L, margin);
}

std::vector<int> CellPartition::trusted_cells() const {
  std::vector<int> out;
  for (int c = 0; c < num_cells(); ++c)
    if (trusted[c]) out.push_back(c);
  return out;
}

std::optional<int> CellPartition::index(const AffineElement& w) const {
  auto i = ball->index(w);
  if (!i || *i >= num_elements()) return std::nullopt;
  return i;
}

std::optional<int> CellPartition::cell_id(const AffineElement& w) const {
  auto i = index(w);
  if (!i) return std::nullopt;
  return cell_of[*i];
}

bool CellPartition::trusted_element(const AffineElement& w) const {
  auto c = cell_id(w);
  return c && trusted[*c] && w.length() <= trusted_length();
}

nlohmann::json CellPartition::to_json() const {
  nlohmann::json j;
  j["schema"] = 1;
  j["type"] = group().datum().type().to_string();
  j["length_bound"] = length_bound;
  j["margin"] = margin;
  j["basis"] = {{"p", prime}, {"provenance", provenance}};
  j["elements"] = nlohmann::json::array();
  for (int i = 0; i < num_elements(); ++i)
    j["elements"].push_back({{"word", word(i)}, {"length", ball->length(i)}, {"cell", cell_of[i]}});
  j["cells"] = nlohmann::json::array();
  int trusted_count = 0;
  for (int c = 0; c < num_cells(); ++c) {
    nlohmann::json members = nlohmann::json::array();
    for (int i : cells[c]) members.push_back(word(i));
    j["cells"].push_back({{"id", c}, {"trusted", static_cast<bool>(trusted[c])}, {"members", members}});
    trusted_count += trusted[c];
  }
  j["trusted_cells"] = trusted_count;
  nlohmann::json m = nlohmann::json::array();
  for (int a = 0; a < num_cells(); ++a) {
    std::vector<int> row(num_cells());
    for (int b = 0; b < num_cells(); ++b) row[b] = below[a][b];
    m.push_back(row);
  }
  j["preorder"] = m;  // preorder[a][b] = 1 iff cell a <=_R cell b
  return j;
}

Tri leq_R(const CellPartition& P, const AffineElement& w, const AffineElement& y) {
  if (!P.trusted_element(w) || !P.trusted_element(y)) return Tri::Unknown;
  auto cw = P.cell_id(w);
  auto cy = P.cell_id(y);
  return P.below[*cw][*cy] ? Tri::True : Tri::False;
}

// ---------------------------------------------------------------- generation

GenerationConstants generation_constants(const AffineWeylGroup& G) {
  const RootDatum& d = G.datum();
  GenerationConstants gc;
  for (int a = 0; a < d.rank(); ++a) {
    // the multiples of omega_a are the only weights orthogonal to the other coroots
    int k = 1;
    while (!d.in_root_lattice(d.fundamental_weight(a) * k)) ++k;
    gc.varpi.push_back(d.fundamental_weight(a) * k);
    gc.k.push_back(k);
    gc.k_phi = std::max(gc.k_phi, k);
  }
  Weight cur(d.rank());
  std::function<void(int)> rec = [&](int i) {
    if (i == d.rank()) {
      if (d.in_root_lattice(cur)) gc.Y0.push_back(cur);
      return;
    }
    for (int c = 0; c <= gc.k[i]; ++c) {
      cur[i] = c;
      rec(i + 1);
    }
    cur[i] = 0;
  };
  rec(0);
  std::sort(gc.Y0.begin(), gc.Y0.end());
  std::set<AffineElement> z;
  for (const FiniteWeylElement& v : d.weyl_group())
    for (const Weight& lam : gc.Y0) {
      AffineElement x = G.from_translation_first(lam, v);
      if (G.in_fW(x)) z.insert(x);
    }
  gc.Z.assign(z.begin(), z.end());
  std::sort(gc.Z.begin(), gc.Z.end(), [&](const AffineElement& a, const AffineElement& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return word_less(G.reduced_word(a), G.reduced_word(b));
  });
  return gc;
}

FWDecomposition decompose_fW(const AffineWeylGroup& G, const GenerationConstants& gc, const AffineElement& w) {
  if (!G.in_W(w) || !G.in_fW(w)) throw InputError("decompose_fW needs an element of fW: " + G.to_string(w));
  auto [mu, v] = G.translation_first(w);
  Weight lambda = G.datum().zero();
  for (;;) {
    int a = 0;
    while (a < G.rank() && mu[a] <= gc.k[a]) ++a;
    if (a == G.rank()) break;
    mu -= gc.varpi[a];
    lambda += gc.varpi[a];
  }
  return {lambda, G.from_translation_first(mu, v)};
}

Weight x_psi(const GenerationConstants& gc, const std::vector<int>& psi) {
  Weight x(static_cast<int>(gc.varpi.size()));
  for (int a : psi) x += gc.varpi.at(a);
  return x;
}

std::optional<int> stabilization_n(const CellPartition& P, const AffineElement& w, const Weight& lambda) {
  if (lambda.is_zero()) return 0;
  const AffineWeylGroup& G = P.group();
  std::vector<int> chain;
  for (int n = 0;; ++n) {
    AffineElement x = G.mult(G.translation(lambda * n), w);
    if (!P.trusted_element(x)) break;
    chain.push_back(*P.cell_id(x));
  }
  const int N = static_cast<int>(chain.size()) - 1;
  if (N < 1 || chain[N - 1] != chain[N]) return std::nullopt;
  int n = N;
  while (n > 0 && chain[n - 1] == chain[N]) --n;
  return n;
}

std::optional<int> stabilization_n(const CellPartition& P, const GenerationConstants& gc, const AffineElement& w,
                                   const std::vector<int>& psi) {
  return stabilization_n(P, w, x_psi(gc, psi));
}

int observed_stabilization_max(const CellPartition& P, const GenerationConstants& gc) {
  const int r = P.group().rank();
  int best = 0;
  for (int i = 0; i < P.num_elements(); ++i) {
    if (!P.trusted_element(P.ball->element(i))) continue;
    for (int mask = 1; mask < (1 << r); ++mask) {
      std::vector<int> psi;
      for (int a = 0; a < r; ++a)
        if (mask >> a & 1) psi.push_back(a);
      if (auto n = stabilization_n(P, gc, P.ball->element(i), psi)) best = std::max(best, *n);
    }
  }
  return best;
}

bool factors_through(const AffineWeylGroup& G, const AffineElement& y, const AffineElement& v) {
  auto [ny, uy] = G.translation_first(y);
  auto [nv, uv] = G.translation_first(v);
  if (!(uy == uv)) return false;
  Weight mu = ny - nv;
  return mu.is_dominant() && G.datum().in_root_lattice(mu);
}

CellGenerators cell_generators(const CellPartition& P, const GenerationConstants& gc, int cell) {
  if (cell < 0 || cell >= P.num_cells()) throw InputError("cell id out of range");
  if (!P.trusted[cell]) throw DataError("cell " + std::to_string(cell) + " is not trusted");
  const AffineWeylGroup& G = P.group();
  CellGenerators out;
  out.A = gc.k_phi * std::max(1, observed_stabilization_max(P, gc));
  for (int i : P.cells[cell]) {
    const AffineElement& y = P.ball->element(i);
    if (y.length() > P.trusted_length()) continue;
    FWDecomposition dec = decompose_fW(G, gc, y);
    bool small = true;
    for (int a = 0; a < G.rank(); ++a)
      if (dec.lambda[a] / gc.k[a] > out.A) small = false;
    if (small) out.candidate.push_back(y);
  }
  for (const AffineElement& v : out.candidate) {
    bool redundant = false;
    for (const AffineElement& u : out.candidate)
      if (!(u == v) && factors_through(G, v, u)) redundant = true;
    if (!redundant) out.minimal.push_back(v);
  }
  for (int i : P.cells[cell]) {
    const AffineElement& y = P.ball->element(i);
    if (y.length() > P.trusted_length()) continue;
    bool ok = false;
    for (const AffineElement& v : out.minimal)
      if (factors_through(G, y, v)) ok = true;
    if (!ok) throw DataError("cell member " + P.word(i) + " does not factor through the generating set");
  }
  return out;
}

}  // namespace hecke_cells
