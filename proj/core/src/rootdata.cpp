#include "hecke_cells/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace hecke_cells {

// ---------------------------------------------------------------- Weight

Weight::Weight(int rank) : rank_(rank) {
  if (rank < 0 || rank > kMaxRank) throw InputError("rank out of range: " + std::to_string(rank));
}

Weight::Weight(std::initializer_list<int> coords) : Weight(static_cast<int>(coords.size())) {
  int i = 0;
  for (int c : coords) c_[i++] = c;
}

Weight Weight::from_span(std::span<const int> coords) {
  Weight w(static_cast<int>(coords.size()));
  for (size_t i = 0; i < coords.size(); ++i) w.c_[i] = coords[i];
  return w;
}

bool Weight::is_zero() const {
  for (int i = 0; i < rank_; ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool Weight::is_dominant() const {
  for (int i = 0; i < rank_; ++i)
    if (c_[i] < 0) return false;
  return true;
}

Weight Weight::operator+(const Weight& o) const {
  Weight r = *this;
  r += o;
  return r;
}

Weight Weight::operator-(const Weight& o) const {
  Weight r = *this;
  r -= o;
  return r;
}

Weight Weight::operator-() const {
  Weight r = *this;
  for (int i = 0; i < rank_; ++i) r.c_[i] = -r.c_[i];
  return r;
}

Weight Weight::operator*(int k) const {
  Weight r = *this;
  for (int i = 0; i < rank_; ++i) r.c_[i] *= k;
  return r;
}

Weight& Weight::operator+=(const Weight& o) {
  for (int i = 0; i < rank_; ++i) c_[i] += o.c_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  for (int i = 0; i < rank_; ++i) c_[i] -= o.c_[i];
  return *this;
}

std::string Weight::to_string() const {
  std::string s;
  for (int i = 0; i < rank_; ++i) {
    if (i) s += ',';
    s += std::to_string(c_[i]);
  }
  return s;
}

Weight Weight::parse(const std::string& text) {
  std::vector<int> coords;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(item, &pos);
    } catch (const std::exception&) {
      throw InputError("malformed weight: '" + text + "'");
    }
    while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
    if (pos != item.size()) throw InputError("malformed weight: '" + text + "'");
    coords.push_back(v);
  }
  if (coords.empty() || coords.size() > kMaxRank) throw InputError("malformed weight: '" + text + "'");
  return from_span(coords);
}

size_t Weight::hash() const {
  size_t h = static_cast<size_t>(rank_) * 0x9e3779b97f4a7c15ULL;
  for (int i = 0; i < rank_; ++i) {
    h ^= static_cast<size_t>(static_cast<std::uint32_t>(c_[i])) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

// ---------------------------------------------------------------- CartanType

CartanType CartanType::parse(const std::string& text) {
  if (text.size() < 2) throw InputError("malformed Cartan type: '" + text + "'");
  CartanType t;
  t.series = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  size_t pos = 0;
  try {
    t.rank = std::stoi(text.substr(1), &pos);
  } catch (const std::exception&) {
    throw InputError("malformed Cartan type: '" + text + "'");
  }
  if (pos != text.size() - 1) throw InputError("malformed Cartan type: '" + text + "'");
  bool ok = false;
  switch (t.series) {
    case 'A': ok = t.rank >= 1 && t.rank <= kMaxRank; break;
    case 'B':
    case 'C': ok = t.rank >= 2 && t.rank <= kMaxRank; break;
    case 'D': ok = t.rank >= 4 && t.rank <= kMaxRank; break;
    case 'E': ok = t.rank >= 6 && t.rank <= 8; break;
    case 'F': ok = t.rank == 4; break;
    case 'G': ok = t.rank == 2; break;
    default: ok = false;
  }
  if (!ok) throw InputError("unknown Cartan type: '" + text + "'");
  return t;
}

std::string CartanType::to_string() const { return std::string(1, series) + std::to_string(rank); }

// ---------------------------------------------------------------- helpers

namespace {

std::vector<std::vector<int>> cartan_matrix(const CartanType& t) {
  const int n = t.rank;
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  switch (t.series) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 1][n - 2] = -2;  // alpha_n short
      break;
    case 'C':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 2][n - 1] = -2;  // alpha_n long
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'E':
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'F':
      link(0, 1);
      link(1, 2);
      link(2, 3);
      a[2][1] = -2;  // alpha_1, alpha_2 long
      break;
    case 'G':
      link(0, 1);
      a[0][1] = -3;  // alpha_1 short
      break;
  }
  return a;
}

long long bareiss_det(std::vector<std::vector<long long>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  long long sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace

// ---------------------------------------------------------------- RootDatum

RootDatum::RootDatum(CartanType type) : type_(type) {
  type_ = CartanType::parse(type.to_string());  // validates
  const int n = type_.rank;
  cartan_ = cartan_matrix(type_);

  std::vector<std::vector<long long>> m(n, std::vector<long long>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = cartan_[i][j];
  det_ = bareiss_det(m);
  adjugate_.assign(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::vector<std::vector<long long>> minor;
      for (int r = 0; r < n; ++r) {
        if (r == j) continue;
        std::vector<long long> row;
        for (int c = 0; c < n; ++c)
          if (c != i) row.push_back(m[r][c]);
        minor.push_back(row);
      }
      adjugate_[i][j] = (((i + j) % 2) ? -1 : 1) * bareiss_det(minor);
    }
  }

  simple_roots_.resize(n);
  for (int j = 0; j < n; ++j) {
    Weight a(n);
    for (int k = 0; k < n; ++k) a[k] = cartan_[k][j];
    simple_roots_[j] = a;
  }

  // squared root lengths from cartan(i,j) L_i = cartan(j,i) L_j
  std::vector<long long> len(n, 0);
  len[0] = 6;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int i = queue.front();
    queue.pop_front();
    for (int j = 0; j < n; ++j) {
      if (j == i || cartan_[i][j] == 0 || len[j] != 0) continue;
      len[j] = cartan_[i][j] * len[i] / cartan_[j][i];
      queue.push_back(j);
    }
  }
  long long lmin = *std::min_element(len.begin(), len.end());
  length_sq_.resize(n);
  for (int i = 0; i < n; ++i) length_sq_[i] = static_cast<int>(2 * len[i] / lmin);

  // positive roots: orbit of the simple roots, tracking coroots alongside
  std::set<Weight> seen;
  std::vector<std::pair<Weight, Weight>> found;
  std::deque<std::pair<Weight, Weight>> todo;
  for (int i = 0; i < n; ++i) {
    Weight r(n), c(n);
    r[i] = 1;
    c[i] = 1;
    seen.insert(r);
    found.emplace_back(r, c);
    todo.emplace_back(r, c);
  }
  while (!todo.empty()) {
    auto [r, c] = todo.front();
    todo.pop_front();
    for (int i = 0; i < n; ++i) {
      int pr = 0, pc = 0;
      for (int j = 0; j < n; ++j) {
        pr += r[j] * cartan_[i][j];
        pc += c[j] * cartan_[j][i];
      }
      Weight r2 = r, c2 = c;
      r2[i] -= pr;
      c2[i] -= pc;
      if (!r2.is_nonnegative() || r2.is_zero() || seen.count(r2)) continue;
      seen.insert(r2);
      found.emplace_back(r2, c2);
      todo.emplace_back(r2, c2);
    }
  }
  int max_len = *std::max_element(length_sq_.begin(), length_sq_.end());
  for (auto& [r, c] : found) {
    PositiveRoot pr;
    pr.root = r;
    pr.coroot = c;
    pr.weight = from_root_coords(r);
    for (int j = 0; j < n; ++j) pr.height += r[j];
    long long l2 = 0;
    for (int j = 0; j < n; ++j) l2 += static_cast<long long>(r[j]) * pr.weight[j] * length_sq_[j];
    pr.is_long = (l2 / 2 == max_len);
    positive_.push_back(pr);
  }
  std::sort(positive_.begin(), positive_.end(), [](const PositiveRoot& a, const PositiveRoot& b) {
    if (a.height != b.height) return a.height < b.height;
    return b.root < a.root;
  });
  int best_root = 0, best_coroot = 0, best_ch = -1;
  for (int k = 0; k < static_cast<int>(positive_.size()); ++k) {
    if (positive_[k].height > positive_[best_root].height) best_root = k;
    int ch = 0;
    for (int j = 0; j < n; ++j) ch += positive_[k].coroot[j];
    if (ch > best_ch) {
      best_ch = ch;
      best_coroot = k;
    }
  }
  highest_root_ = best_root;
  highest_coroot_ = best_coroot;
  rho_ = Weight(n);
  for (int i = 0; i < n; ++i) rho_[i] = 1;
}

int RootDatum::pairing(const Weight& lambda, int r) const {
  const Weight& c = positive_[r].coroot;
  int s = 0;
  for (int i = 0; i < rank(); ++i) s += c[i] * lambda[i];
  return s;
}

Weight RootDatum::fundamental_weight(int i) const {
  Weight w(rank());
  w[i] = 1;
  return w;
}

int RootDatum::coxeter_number() const { return 2 * num_positive_roots() / rank(); }

std::int64_t RootDatum::weyl_group_order() const {
  const int n = rank();
  std::int64_t fact = 1;
  for (int k = 2; k <= n; ++k) fact *= k;
  switch (type_.series) {
    case 'A': return fact * (n + 1);
    case 'B':
    case 'C': return fact << n;
    case 'D': return fact << (n - 1);
    case 'E': return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
    case 'F': return 1152;
    case 'G': return 12;
  }
  return 0;
}

Weight RootDatum::reflect(const Weight& x, int i) const {
  Weight r = x;
  const int k = x[i];
  if (k == 0) return r;
  const Weight& a = simple_roots_[i];
  for (int j = 0; j < rank(); ++j) r[j] -= k * a[j];
  return r;
}

Weight RootDatum::reflect_by_root(const Weight& x, int root) const {
  return x - positive_[root].weight * pairing(x, root);
}

Weight RootDatum::reflect_coroot_coords(const Weight& c, int i) const {
  int p = 0;
  for (int j = 0; j < rank(); ++j) p += c[j] * cartan_[j][i];
  Weight r = c;
  r[i] -= p;
  return r;
}

Weight RootDatum::scaled_root_coords(const Weight& x) const {
  const int n = rank();
  Weight r(n);
  for (int i = 0; i < n; ++i) {
    long long s = 0;
    for (int j = 0; j < n; ++j) s += adjugate_[i][j] * x[j];
    r[i] = static_cast<int>(s);
  }
  return r;
}

bool RootDatum::in_root_lattice(const Weight& x) const {
  Weight r = scaled_root_coords(x);
  for (int i = 0; i < rank(); ++i)
    if (r[i] % det_ != 0) return false;
  return true;
}

Weight RootDatum::root_coords(const Weight& x) const {
  Weight r = scaled_root_coords(x);
  for (int i = 0; i < rank(); ++i) {
    if (r[i] % det_ != 0) throw InputError("weight " + x.to_string() + " is not in the root lattice");
    r[i] = static_cast<int>(r[i] / det_);
  }
  return r;
}

Weight RootDatum::from_root_coords(const Weight& c) const {
  Weight x(rank());
  for (int j = 0; j < rank(); ++j)
    if (c[j]) x += simple_roots_[j] * c[j];
  return x;
}

std::int64_t RootDatum::inner_product_root(const Weight& c, const Weight& y) const {
  std::int64_t s = 0;
  for (int j = 0; j < rank(); ++j) s += static_cast<std::int64_t>(c[j]) * y[j] * (length_sq_[j] / 2);
  return s;
}

std::pair<Weight, int> RootDatum::dominant_conjugate(const Weight& x) const {
  Weight y = x;
  int parity = 0;
  for (;;) {
    int i = 0;
    while (i < rank() && y[i] >= 0) ++i;
    if (i == rank()) return {y, parity};
    y = reflect(y, i);
    parity ^= 1;
  }
}

std::vector<Weight> RootDatum::weyl_orbit(const Weight& x) const {
  std::set<Weight> seen{x};
  std::vector<Weight> out{x};
  for (size_t k = 0; k < out.size(); ++k) {
    for (int i = 0; i < rank(); ++i) {
      if (out[k][i] == 0) continue;
      Weight y = reflect(out[k], i);
      if (seen.insert(y).second) out.push_back(y);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FiniteWeylElement> RootDatum::weyl_group() const {
  if (weyl_group_order() > 100000) throw UnsupportedError("Weyl group too large to enumerate");
  std::set<FiniteWeylElement> seen;
  std::vector<FiniteWeylElement> out{FiniteWeylElement::identity(*this)};
  seen.insert(out[0]);
  for (size_t k = 0; k < out.size(); ++k) {
    for (int i = 0; i < rank(); ++i) {
      FiniteWeylElement y = out[k].simple_times(*this, i);
      if (seen.insert(y).second) out.push_back(y);
    }
  }
  return out;
}

// ---------------------------------------------------------------- FiniteWeylElement

FiniteWeylElement FiniteWeylElement::identity(const RootDatum& d) { return {d.rho(), d.rho()}; }

FiniteWeylElement FiniteWeylElement::simple(const RootDatum& d, int i) {
  Weight r = d.reflect(d.rho(), i);
  return {r, r};
}

FiniteWeylElement FiniteWeylElement::from_word(const RootDatum& d, std::span<const int> word) {
  FiniteWeylElement w = identity(d);
  for (int i : word) {
    if (i < 0 || i >= d.rank()) throw InputError("simple reflection index out of range");
    w = w.times_simple(d, i);
  }
  return w;
}

FiniteWeylElement FiniteWeylElement::reflection(const RootDatum& d, int r) {
  Weight x = d.reflect_by_root(d.rho(), r);
  return {x, x};
}

namespace {

// Streams a reduced word of the element u with u(rho) = image, applying
// the reflections to x in the order that computes u^{-1}(x).
Weight stream_inverse(const RootDatum& d, Weight image, Weight x) {
  const int n = d.rank();
  for (;;) {
    int i = 0;
    while (i < n && image[i] >= 0) ++i;
    if (i == n) return x;
    image = d.reflect(image, i);
    x = d.reflect(x, i);
  }
}

}  // namespace

Weight FiniteWeylElement::apply(const RootDatum& d, const Weight& x) const {
  return stream_inverse(d, inv_rho_image_, x);
}

Weight FiniteWeylElement::apply_inverse(const RootDatum& d, const Weight& x) const {
  return stream_inverse(d, rho_image_, x);
}

bool FiniteWeylElement::maps_positive(const RootDatum& d, int r) const {
  return d.pairing(inv_rho_image_, r) > 0;
}

FiniteWeylElement FiniteWeylElement::compose(const RootDatum& d, const FiniteWeylElement& rhs) const {
  return {apply(d, rhs.rho_image_), rhs.apply_inverse(d, inv_rho_image_)};
}

FiniteWeylElement FiniteWeylElement::times_simple(const RootDatum& d, int i) const {
  return {apply(d, d.reflect(d.rho(), i)), d.reflect(inv_rho_image_, i)};
}

FiniteWeylElement FiniteWeylElement::simple_times(const RootDatum& d, int i) const {
  return {d.reflect(rho_image_, i), apply_inverse(d, d.reflect(d.rho(), i))};
}

int FiniteWeylElement::length(const RootDatum& d) const {
  int l = 0;
  for (int r = 0; r < d.num_positive_roots(); ++r)
    if (d.pairing(rho_image_, r) < 0) ++l;
  return l;
}

std::vector<int> FiniteWeylElement::reduced_word(const RootDatum& d) const {
  std::vector<int> word;
  Weight y = rho_image_;
  const int n = d.rank();
  for (;;) {
    int i = 0;
    while (i < n && y[i] >= 0) ++i;
    if (i == n) return word;
    word.push_back(i);
    y = d.reflect(y, i);
  }
}

std::vector<std::vector<int>> FiniteWeylElement::matrix(const RootDatum& d) const {
  const int n = d.rank();
  std::vector<std::vector<int>> m(n, std::vector<int>(n));
  for (int j = 0; j < n; ++j) {
    Weight col = apply(d, d.fundamental_weight(j));
    for (int i = 0; i < n; ++i) m[i][j] = col[i];
  }
  return m;
}

// ---------------------------------------------------------------- characters

std::vector<Weight> Characters::dominant_weights_below(const Weight& lambda) const {
  if (!lambda.is_dominant()) throw InputError("highest weight must be dominant: " + lambda.to_string());
  std::set<Weight> seen{lambda};
  std::vector<Weight> out{lambda};
  for (size_t k = 0; k < out.size(); ++k) {
    for (const auto& r : d_.positive_roots()) {
      Weight y = out[k] - r.weight;
      if (!y.is_dominant()) continue;
      if (seen.insert(y).second) out.push_back(y);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t Characters::multiplicity(const Weight& lambda, const Weight& mu) {
  if (!lambda.is_dominant()) throw InputError("highest weight must be dominant: " + lambda.to_string());
  if (lambda.rank() != d_.rank() || mu.rank() != d_.rank()) throw InputError("weight rank mismatch");
  return dominant_multiplicity(lambda, d_.dominant_conjugate(mu).first);
}

std::int64_t Characters::dominant_multiplicity(const Weight& lambda, const Weight& mu) {
  if (!d_.in_root_lattice(lambda - mu)) return 0;
  Weight diff = d_.root_coords(lambda - mu);
  if (!diff.is_nonnegative()) return 0;
  if (diff.is_zero()) return 1;
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find({lambda, mu});
    if (it != memo_.end()) return it->second;
  }
  const Weight two_rho = d_.rho() * 2;
  const std::int64_t denom = d_.inner_product_root(diff, lambda + mu + two_rho);
  std::int64_t num = 0;
  for (const auto& r : d_.positive_roots()) {
    Weight rest = diff;
    Weight shifted = mu;
    for (;;) {
      rest -= r.root;
      shifted += r.weight;
      if (!rest.is_nonnegative()) break;
      std::int64_t m = dominant_multiplicity(lambda, d_.dominant_conjugate(shifted).first);
      if (m) num += m * d_.inner_product_root(r.root, shifted);
    }
  }
  std::int64_t result = 2 * num / denom;
  std::lock_guard<std::mutex> lock(mu_);
  memo_[{lambda, mu}] = result;
  return result;
}

std::map<Weight, std::int64_t> Characters::character(const Weight& lambda) {
  std::map<Weight, std::int64_t> out;
  for (const Weight& mu : dominant_weights_below(lambda)) {
    std::int64_t m = dominant_multiplicity(lambda, mu);
    if (!m) continue;
    for (const Weight& x : d_.weyl_orbit(mu)) out[x] = m;
  }
  return out;
}

std::map<Weight, std::int64_t> Characters::tensor_decompose(const Weight& lambda, const Weight& mu) {
  if (!lambda.is_dominant() || !mu.is_dominant()) throw InputError("tensor factors must be dominant");
  std::map<Weight, std::int64_t> out;
  const Weight rho = d_.rho();
  for (const auto& [xi, m] : character(mu)) {
    auto [dom, parity] = d_.dominant_conjugate(lambda + xi + rho);
    bool regular = true;
    for (int i = 0; i < d_.rank(); ++i)
      if (dom[i] == 0) regular = false;
    if (!regular) continue;
    out[dom - rho] += parity ? -m : m;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

std::int64_t weight_multiplicity(const RootDatum& d, const Weight& lambda, const Weight& mu) {
  Characters c(d);
  return c.multiplicity(lambda, mu);
}

std::int64_t weyl_dimension(const RootDatum& d, const Weight& lambda) {
  if (!lambda.is_dominant()) throw InputError("highest weight must be dominant: " + lambda.to_string());
  __int128 num = 1, den = 1;
  const Weight shifted = lambda + d.rho();
  for (int r = 0; r < d.num_positive_roots(); ++r) {
    num *= d.pairing(shifted, r);
    den *= d.pairing(d.rho(), r);
    __int128 a = num, b = den;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    num /= a;
    den /= a;
  }
  return static_cast<std::int64_t>(num / den);
}

std::int64_t tensor_multiplicity(const RootDatum& d, const Weight& lambda, const Weight& mu, const Weight& nu) {
  Characters c(d);
  auto dec = c.tensor_decompose(lambda, mu);
  auto it = dec.find(nu);
  return it == dec.end() ? 0 : it->second;
}

WeightMultiset weyl_character(const RootDatum& d, const Weight& lambda) {
  Characters c(d);
  return c.character(lambda);
}

}  // namespace hecke_cells
