#include "hecke_cells/orbits.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include <nlohmann/json.hpp>

namespace hecke_cells {

namespace {

struct Frac {
  long long num = 0;
  long long den = 1;
  Frac() = default;
  Frac(long long n, long long d = 1) : num(n), den(d) { normalize(); }
  void normalize() {
    if (den < 0) { num = -num; den = -den; }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
  }
  Frac operator+(Frac o) const { return Frac(num * o.den + o.num * den, den * o.den); }
  Frac operator-(Frac o) const { return Frac(num * o.den - o.num * den, den * o.den); }
  Frac operator*(Frac o) const { return Frac(num * o.num, den * o.den); }
  Frac operator/(Frac o) const { return Frac(num * o.den, den * o.num); }
  bool is_zero() const { return num == 0; }
};

// values alpha_j(h) for h in the coroot span of I with alpha_j(h) = target_j on I
std::vector<int> solve_h(const RootDatum& d, const std::vector<int>& I, const std::vector<int>& target) {
  const int n = static_cast<int>(I.size());
  // rows j in I, columns c_i for i in I: sum_i c_i cartan(i, j) = target_j
  std::vector<std::vector<Frac>> m(n, std::vector<Frac>(n + 1));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) m[r][c] = Frac(d.cartan(I[c], I[r]));
    m[r][n] = Frac(target[r]);
  }
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (m[piv][col].is_zero()) ++piv;
    std::swap(m[piv], m[col]);
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      Frac f = m[r][col] / m[col][col];
      for (int c = col; c <= n; ++c) m[r][c] = m[r][c] - f * m[col][c];
    }
  }
  std::vector<Frac> coef(n);
  for (int r = 0; r < n; ++r) coef[r] = m[r][n] / m[r][r];
  std::vector<int> a(d.rank());
  for (int j = 0; j < d.rank(); ++j) {
    Frac v;
    for (int c = 0; c < n; ++c) v = v + coef[c] * Frac(d.cartan(I[c], j));
    if (v.den != 1) throw DataError("non-integral grading");
    a[j] = static_cast<int>(v.num);
  }
  return a;
}

int root_value(const PositiveRoot& r, const std::vector<int>& a) {
  int v = 0;
  for (int j = 0; j < static_cast<int>(a.size()); ++j) v += r.root[j] * a[j];
  return v;
}

std::vector<int> make_dominant(const RootDatum& d, std::vector<int> a) {
  for (;;) {
    int i = 0;
    while (i < d.rank() && a[i] >= 0) ++i;
    if (i == d.rank()) return a;
    const int ai = a[i];
    for (int j = 0; j < d.rank(); ++j) a[j] -= ai * d.cartan(i, j);
  }
}

std::string set_string(const std::vector<int>& s) {
  std::string out = "{";
  for (size_t k = 0; k < s.size(); ++k) out += (k ? "," : "") + std::to_string(s[k]);
  return out + "}";
}

std::vector<int> type_a_partition(const RootDatum& d, const std::vector<int>& I) {
  std::vector<int> parts;
  int used = 0;
  for (size_t k = 0; k < I.size();) {
    size_t e = k;
    while (e + 1 < I.size() && I[e + 1] == I[e] + 1) ++e;
    parts.push_back(static_cast<int>(e - k) + 2);
    used += parts.back();
    k = e + 1;
  }
  for (; used < d.rank() + 1; ++used) parts.push_back(1);
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

bool dominates(const std::vector<int>& a, const std::vector<int>& b) {
  int sa = 0, sb = 0;
  for (size_t k = 0; k < std::max(a.size(), b.size()); ++k) {
    sa += k < a.size() ? a[k] : 0;
    sb += k < b.size() ? b[k] : 0;
    if (sa < sb) return false;
  }
  return true;
}

}  // namespace

std::string NilpotentOrbit::bala_carter() const { return "I=" + set_string(levi) + ";J=" + set_string(parabolic); }

std::vector<NilpotentOrbit> enumerate_orbits(const RootDatum& d) {
  const int n = d.rank();
  const int N = d.num_positive_roots();
  std::map<std::vector<int>, NilpotentOrbit> by_diagram;
  // levi subsets by size, so each orbit keeps its smallest labelling
  std::vector<int> masks(1 << n);
  std::iota(masks.begin(), masks.end(), 0);
  std::stable_sort(masks.begin(), masks.end(),
                   [](int a, int b) { return std::popcount(unsigned(a)) < std::popcount(unsigned(b)); });
  for (int Imask : masks) {
    std::vector<int> I;
    for (int i = 0; i < n; ++i)
      if (Imask >> i & 1) I.push_back(i);
    for (int Jmask = Imask;; Jmask = (Jmask - 1) & Imask) {
      std::vector<int> J, target;
      for (int i : I) {
        if (Jmask >> i & 1) J.push_back(i);
        target.push_back(Jmask >> i & 1 ? 0 : 2);
      }
      // on the Levi, alpha_j(h) is the target
      std::vector<int> a(n, 0);
      for (size_t k = 0; k < I.size(); ++k) a[I[k]] = target[k];
      int deg0 = 0, deg2 = 0;
      for (const PositiveRoot& r : d.positive_roots()) {
        bool in_levi = true;
        for (int j = 0; j < n; ++j)
          if (r.root[j] != 0 && !(Imask >> j & 1)) in_levi = false;
        if (!in_levi) continue;
        int v = root_value(r, a);
        if (v == 0) deg0 += 2;
        if (v == 2) ++deg2;
      }
      if (deg0 + static_cast<int>(I.size()) == deg2) {
        if (!I.empty()) a = solve_h(d, I, target);
        std::vector<int> diag = make_dominant(d, a);
        if (!by_diagram.count(diag)) {
          NilpotentOrbit o;
          o.levi = I;
          o.parabolic = J;
          o.diagram = diag;
          int small = 0;
          for (const PositiveRoot& r : d.positive_roots()) {
            int v = root_value(r, diag);
            small += v == 0 ? 2 : v == 1 ? 1 : 0;
          }
          o.dimension = 2 * N - small;
          if (d.type().series == 'A') o.partition = type_a_partition(d, I);
          by_diagram.emplace(diag, std::move(o));
        }
      }
      if (Jmask == 0) break;
    }
  }
  std::vector<NilpotentOrbit> out;
  for (auto& [diag, o] : by_diagram) out.push_back(std::move(o));
  std::sort(out.begin(), out.end(), [](const NilpotentOrbit& a, const NilpotentOrbit& b) {
    if (a.dimension != b.dimension) return a.dimension > b.dimension;
    return a.diagram > b.diagram;
  });

  const bool type_a = d.type().series == 'A';
  int min_nonzero = 2 * N;
  for (const auto& o : out)
    if (o.dimension > 0) min_nonzero = std::min(min_nonzero, o.dimension);
  for (auto& o : out) {
    if (type_a) {
      o.name = "[";
      for (size_t k = 0; k < o.partition.size(); ++k) o.name += (k ? "," : "") + std::to_string(o.partition[k]);
      o.name += "]";
    } else if (o.dimension == 2 * N) {
      o.name = "regular";
    } else if (o.dimension == 0) {
      o.name = "zero";
    } else if (o.dimension == 2 * N - 2) {
      o.name = "subregular";
    } else if (o.dimension == min_nonzero) {
      o.name = "minimal";
    } else if (d.type() == CartanType{'G', 2}) {
      o.name = "middle";
    } else {
      o.name = o.bala_carter();
    }
  }
  return out;
}

std::optional<std::vector<std::vector<char>>> closure_order(const RootDatum& d,
                                                            const std::vector<NilpotentOrbit>& orbits) {
  const size_t n = orbits.size();
  std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
  if (d.type().series == 'A') {
    for (size_t a = 0; a < n; ++a)
      for (size_t b = 0; b < n; ++b) leq[a][b] = dominates(orbits[b].partition, orbits[a].partition);
    return leq;
  }
  if (d.rank() <= 2) {
    for (size_t a = 0; a < n; ++a)
      for (size_t b = 0; b < n; ++b) leq[a][b] = orbits[a].dimension <= orbits[b].dimension;
    return leq;
  }
  return std::nullopt;
}

OrbitTable::OrbitTable(const RootDatum& d) : d_(d), orbits_(enumerate_orbits(d)), order_(closure_order(d, orbits_)) {}

bool OrbitTable::leq(int a, int b) const {
  if (!order_) throw UnsupportedError("closure order unavailable for type " + d_.type().to_string());
  return (*order_)[a][b];
}

std::optional<int> OrbitTable::find(const std::string& name) const {
  for (int i = 0; i < static_cast<int>(orbits_.size()); ++i)
    if (orbits_[i].name == name) return i;
  return std::nullopt;
}

std::vector<int> OrbitTable::closure_chain(int a) const {
  std::vector<int> out;
  for (int b = 0; b < static_cast<int>(orbits_.size()); ++b)
    if (leq(b, a)) out.push_back(b);
  return out;
}

nlohmann::json OrbitTable::to_json() const {
  nlohmann::json j;
  j["schema"] = 1;
  j["type"] = d_.type().to_string();
  j["orbits"] = nlohmann::json::array();
  for (const auto& o : orbits_) {
    j["orbits"].push_back({{"name", o.name},
                           {"bala_carter", {{"levi", o.levi}, {"parabolic", o.parabolic}}},
                           {"diagram", o.diagram},
                           {"dimension", o.dimension}});
  }
  if (order_) {
    nlohmann::json m = nlohmann::json::array();
    for (const auto& row : *order_) {
      std::vector<int> r(row.begin(), row.end());
      m.push_back(r);
    }
    j["closure_order"] = m;
  } else {
    j["closure_order"] = "order unavailable";
  }
  return j;
}

AffineElement c0_element(const AffineWeylGroup& G) {
  int p = G.datum().coxeter_number() + 1;
  auto prime = [](int q) {
    for (int k = 2; k * k <= q; ++k)
      if (q % k == 0) return false;
    return true;
  };
  while (!prime(p)) ++p;
  return G.alcove_of(G.datum().rho() * (p - 1), p);
}

CellOrbitMap cell_to_orbit(const CellPartition& P, const OrbitTable& T) {
  const AffineWeylGroup& G = P.group();
  const RootDatum& d = G.datum();
  CellOrbitMap M;
  std::vector<int> trusted = P.trusted_cells();
  auto is_trusted = [&](std::optional<int> c) { return c && P.trusted[*c]; };

  const std::optional<int> top = P.cell_id(G.identity());
  std::optional<int> bottom = P.cell_id(c0_element(G));
  if (!is_trusted(bottom)) bottom.reset();

  if (d.rank() <= 2 && T.has_order() && trusted.size() == T.orbits().size()) {
    std::vector<std::pair<int, int>> ranked;  // (cells above, cell)
    for (int a : trusted) {
      int above = 0;
      for (int b : trusted) above += b != a && P.below[a][b];
      ranked.emplace_back(above, a);
    }
    std::sort(ranked.begin(), ranked.end());
    std::vector<int> chain;
    for (auto& [above, a] : ranked) chain.push_back(a);
    bool total = true;
    for (size_t k = 0; k + 1 < chain.size(); ++k)
      if (!P.below[chain[k + 1]][chain[k]]) total = false;
    for (size_t k = 0; k + 1 < T.orbits().size(); ++k)
      if (!T.leq(static_cast<int>(k) + 1, static_cast<int>(k))) total = false;
    if (total && top && chain.front() == *top && (!bottom || chain.back() == *bottom)) {
      for (size_t k = 0; k < chain.size(); ++k) M.orbit_of[chain[k]] = static_cast<int>(k);
      M.provenance = "rank-2 table (chain position)";
      M.complete = true;
      return M;
    }
  }

  M.provenance = "universal entries";
  if (is_trusted(top)) M.orbit_of[*top] = T.regular();
  if (bottom) M.orbit_of[*bottom] = T.zero();
  std::optional<int> sreg;
  for (int i = 0; i < static_cast<int>(T.orbits().size()); ++i)
    if (T.orbits()[i].dimension == 2 * d.num_positive_roots() - 2) sreg = i;
  if (is_trusted(top) && sreg) {
    std::vector<int> maximal;
    for (int b : trusted) {
      if (b == *top || !P.below[b][*top]) continue;
      bool covered = false;
      for (int c : trusted)
        if (c != b && c != *top && P.below[b][c] && P.below[c][*top]) covered = true;
      if (!covered) maximal.push_back(b);
    }
    if (maximal.size() == 1 && !M.orbit_of.count(maximal[0])) M.orbit_of[maximal[0]] = *sreg;
  }
  std::set<int> hit;
  for (const auto& [c, o] : M.orbit_of) hit.insert(o);
  M.complete = M.orbit_of.size() == trusted.size() && hit.size() == T.orbits().size() &&
               hit.size() == M.orbit_of.size();
  return M;
}

nlohmann::json Prediction::to_json(const OrbitTable& T) const {
  nlohmann::json j;
  j["schema"] = 1;
  j["type"] = type;
  j["p"] = p;
  j["lambda"] = lambda.to_string();
  j["mode"] = mode == HumphreysMode::Absolute ? "absolute" : "relative";
  j["w_reduced_word"] = w_word;
  j["cell"] = cell ? nlohmann::json(*cell) : nlohmann::json(nullptr);
  j["orbit_name"] = orbit_name;
  if (orbit) {
    const NilpotentOrbit& o = T.orbits()[*orbit];
    j["bala_carter"] = {{"levi", o.levi}, {"parabolic", o.parabolic}};
    j["dimension"] = o.dimension;
  } else {
    j["bala_carter"] = nullptr;
    j["dimension"] = empty ? nlohmann::json(0) : nlohmann::json(nullptr);
  }
  j["closure_chain"] = closure_chain;
  j["status"] = status;
  j["basis"] = basis;
  return j;
}

Prediction humphreys_predict(const CellPartition& P, const OrbitTable& T, const CellOrbitMap& M,
                             const Weight& lambda, int p, HumphreysMode mode) {
  const AffineWeylGroup& G = P.group();
  const RootDatum& d = G.datum();
  G.check_prime(p);
  G.check_weight(lambda);
  if (!lambda.is_dominant()) throw InputError("weight " + lambda.to_string() + " is not dominant");

  Prediction r;
  r.type = d.type().to_string();
  r.p = p;
  r.lambda = lambda;
  r.mode = mode;
  r.basis = "p=" + std::to_string(P.prime) + (P.provenance.empty() ? "" : " " + P.provenance);

  const AffineElement w = G.alcove_of(lambda, p);
  r.w_word = G.to_string(w);
  if (mode == HumphreysMode::Relative) {
    if (G.dot_action(w, d.zero(), p) != lambda)
      throw InputError("relative mode needs lambda in the dot orbit of 0; " + lambda.to_string() + " is not");
    if (!G.coset_minimality(w).in_fWf) {
      r.empty = true;
      r.orbit_name = "empty";
      r.status = "theorem";
      if (auto c = P.cell_id(w); c && P.trusted_element(w)) r.cell = *c;
      return r;
    }
  }

  auto set_orbit = [&](int o) {
    r.orbit = o;
    r.orbit_name = T.orbits()[o].name;
    if (T.has_order())
      for (int b : T.closure_chain(o)) r.closure_chain.push_back(T.orbits()[b].name);
  };

  // (p-1)rho + X+ is the projective region
  if ((lambda - d.rho() * (p - 1)).is_dominant()) {
    if (auto c = P.cell_id(c0_element(G)); c && P.trusted[*c]) r.cell = *c;
    set_orbit(T.zero());
    r.status = "theorem";
    return r;
  }

  if (!P.trusted_element(w)) {
    r.orbit_name = "unknown";
    r.status = "unknown";
    return r;
  }
  r.cell = *P.cell_id(w);
  auto it = M.orbit_of.find(*r.cell);
  if (it == M.orbit_of.end()) {
    r.orbit_name = "unknown";
    r.status = "unknown";
    return r;
  }
  set_orbit(it->second);

  const NilpotentOrbit& o = T.orbits()[it->second];
  const int N = d.num_positive_roots();
  const bool easy = o.dimension == 2 * N || o.dimension == 2 * N - 2 || o.dimension == 0;
  const CartanType& t = d.type();
  bool proved = easy;
  if (t == CartanType{'C', 2} && p > 5) proved = true;
  if (t == CartanType{'B', 2} && p > 5) proved = true;
  if (t == CartanType{'G', 2} && p > 7) {
    if (o.name != "middle") {
      proved = true;
    } else if (mode == HumphreysMode::Relative) {
      // only the shortest double-coset-minimal element of the cell is settled
      for (int i : P.cells[*r.cell]) {
        if (!G.coset_minimality(P.ball->element(i)).in_fWf) continue;
        proved = P.ball->element(i) == w;
        break;
      }
    }
  }
  r.status = proved ? "theorem" : "conjectural";
  return r;
}

}  // namespace hecke_cells
