#include "hecke_cells/affine.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace hecke_cells {

namespace {

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

FiniteWeylElement longest_in(const RootDatum& d, const std::vector<int>& subset) {
  FiniteWeylElement w = FiniteWeylElement::identity(d);
  for (;;) {
    bool grew = false;
    for (int i : subset) {
      if (!w.has_right_descent(d, i)) {
        w = w.times_simple(d, i);
        grew = true;
      }
    }
    if (!grew) return w;
  }
}

}  // namespace

int affine_length(const RootDatum& d, const FiniteWeylElement& w, const Weight& lambda) {
  int l = 0;
  for (int r = 0; r < d.num_positive_roots(); ++r) {
    int c = d.pairing(lambda, r);
    if (w.maps_positive(d, r))
      l += c < 0 ? -c : c;
    else
      l += (1 + c) < 0 ? -(1 + c) : (1 + c);
  }
  return l;
}

AffineElement::AffineElement(const RootDatum& d, FiniteWeylElement finite, Weight translation)
    : finite_(finite), translation_(translation), length_(affine_length(d, finite, translation)) {}

size_t AffineElement::hash() const {
  return finite_.rho_image().hash() * 31 + translation_.hash();
}

bool word_less(const std::vector<int>& a, const std::vector<int>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string word_to_string(const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::string s;
  for (size_t i = 0; i < word.size(); ++i) {
    if (i) s += '.';
    s += 's';
    s += std::to_string(word[i]);
  }
  return s;
}

// ---------------------------------------------------------------- group

struct AffineWeylGroup::BruhatCache {
  std::mutex mu;
  struct KeyHash {
    size_t operator()(const std::pair<AffineElement, AffineElement>& k) const {
      return k.first.hash() * 1000003u ^ k.second.hash();
    }
  };
  std::unordered_map<std::pair<AffineElement, AffineElement>, bool, KeyHash> memo;
};

AffineWeylGroup::AffineWeylGroup(RootDatum d)
    : d_(std::make_shared<const RootDatum>(std::move(d))), bruhat_(std::make_shared<BruhatCache>()) {
  const RootDatum& rd = *d_;
  s_theta_ = FiniteWeylElement::reflection(rd, rd.highest_coroot());
  if (generator(0).length() != 1) throw std::logic_error("s0 does not have length 1");

  omega_.push_back(identity());
  const Weight& theta_coroot = rd.theta().coroot;
  const FiniteWeylElement w0 = longest_in(rd, [&] {
    std::vector<int> all(rd.rank());
    for (int i = 0; i < rd.rank(); ++i) all[i] = i;
    return all;
  }());
  for (int i = 0; i < rd.rank(); ++i) {
    if (theta_coroot[i] != 1) continue;
    std::vector<int> rest;
    for (int j = 0; j < rd.rank(); ++j)
      if (j != i) rest.push_back(j);
    FiniteWeylElement u = w0.compose(rd, longest_in(rd, rest));
    AffineElement om = make(u, -rd.fundamental_weight(i));
    if (om.length() != 0) throw std::logic_error("length-zero element construction failed");
    omega_.push_back(om);
  }
  if (static_cast<int>(omega_.size()) != rd.fundamental_group_order())
    throw std::logic_error("|Omega| does not match [X:Y]");
}

AffineElement AffineWeylGroup::identity() const {
  return AffineElement(*d_, FiniteWeylElement::identity(*d_), d_->zero());
}

AffineElement AffineWeylGroup::generator(int g) const {
  if (g < 0 || g > rank()) throw InputError("generator index out of range: s" + std::to_string(g));
  if (g == 0) return AffineElement(*d_, s_theta_, -d_->theta().weight);
  return AffineElement(*d_, FiniteWeylElement::simple(*d_, g - 1), d_->zero());
}

AffineElement AffineWeylGroup::translation(const Weight& lambda) const {
  check_weight(lambda);
  return AffineElement(*d_, FiniteWeylElement::identity(*d_), lambda);
}

AffineElement AffineWeylGroup::make(const FiniteWeylElement& w, const Weight& lambda) const {
  return AffineElement(*d_, w, lambda);
}

AffineElement AffineWeylGroup::mult(const AffineElement& a, const AffineElement& b) const {
  const RootDatum& d = *d_;
  Weight t = b.finite().apply_inverse(d, a.translation()) + b.translation();
  return AffineElement(d, a.finite().compose(d, b.finite()), t);
}

AffineElement AffineWeylGroup::inverse(const AffineElement& a) const {
  const RootDatum& d = *d_;
  return AffineElement(d, a.finite().inverse(), -a.finite().apply(d, a.translation()));
}

AffineElement AffineWeylGroup::right_mult(const AffineElement& a, int g) const {
  const RootDatum& d = *d_;
  if (g == 0) {
    Weight t = d.reflect_by_root(a.translation(), d.highest_coroot()) - d.theta().weight;
    return AffineElement(d, a.finite().compose(d, s_theta_), t);
  }
  return AffineElement(d, a.finite().times_simple(d, g - 1), d.reflect(a.translation(), g - 1));
}

AffineElement AffineWeylGroup::left_mult(int g, const AffineElement& a) const {
  const RootDatum& d = *d_;
  if (g == 0) {
    Weight t = a.finite().apply_inverse(d, -d.theta().weight) + a.translation();
    return AffineElement(d, s_theta_.compose(d, a.finite()), t);
  }
  return AffineElement(d, a.finite().simple_times(d, g - 1), a.translation());
}

bool AffineWeylGroup::is_right_descent(const AffineElement& a, int g) const {
  return right_mult(a, g).length() < a.length();
}

bool AffineWeylGroup::is_left_descent(int g, const AffineElement& a) const {
  return left_mult(g, a).length() < a.length();
}

bool AffineWeylGroup::in_W(const AffineElement& a) const { return d_->in_root_lattice(a.translation()); }

int AffineWeylGroup::omega_index(const AffineElement& a) const {
  for (size_t k = 0; k < omega_.size(); ++k) {
    if (d_->in_root_lattice(mult(a, inverse(omega_[k])).translation())) return static_cast<int>(k);
  }
  throw std::logic_error("no omega component found");
}

std::vector<int> AffineWeylGroup::reduced_word(const AffineElement& a, int* omega) const {
  std::vector<int> word;
  AffineElement x = a;
  while (x.length() > 0) {
    int g = 0;
    for (; g < num_generators(); ++g) {
      AffineElement y = left_mult(g, x);
      if (y.length() < x.length()) {
        x = y;
        break;
      }
    }
    word.push_back(g);
  }
  if (omega) {
    *omega = 0;
    for (size_t k = 0; k < omega_.size(); ++k)
      if (omega_[k] == x) *omega = static_cast<int>(k);
  }
  return word;
}

AffineElement AffineWeylGroup::from_word(const std::vector<int>& word, int omega) const {
  AffineElement x = identity();
  for (int g : word) x = right_mult(x, g);
  if (omega < 0 || omega >= static_cast<int>(omega_.size())) throw InputError("omega index out of range");
  if (omega) x = mult(x, omega_[omega]);
  return x;
}

bool AffineWeylGroup::bruhat_leq(const AffineElement& y, const AffineElement& w) const {
  if (y.length() > w.length()) return false;
  if (y.length() == w.length()) return y == w;
  if (y.length() == 0) {
    // y is in Omega; compare omega components
    return omega_index(y) == omega_index(w) && y == omega_[omega_index(w)];
  }
  {
    std::lock_guard<std::mutex> lock(bruhat_->mu);
    auto it = bruhat_->memo.find({y, w});
    if (it != bruhat_->memo.end()) return it->second;
  }
  int g = 0;
  AffineElement ws;
  for (; g < num_generators(); ++g) {
    ws = right_mult(w, g);
    if (ws.length() < w.length()) break;
  }
  AffineElement ys = right_mult(y, g);
  bool result = ys.length() < y.length() ? bruhat_leq(ys, ws) : bruhat_leq(y, ws);
  std::lock_guard<std::mutex> lock(bruhat_->mu);
  bruhat_->memo.emplace(std::make_pair(y, w), result);
  return result;
}

CosetMinimality AffineWeylGroup::coset_minimality(const AffineElement& a) const {
  CosetMinimality m;
  m.in_fW = in_fW(a);
  if (!m.in_fW) return m;
  m.in_fWf = true;
  for (int g = 1; g < num_generators(); ++g)
    if (is_right_descent(a, g)) m.in_fWf = false;
  return m;
}

bool AffineWeylGroup::in_fW(const AffineElement& a) const {
  for (int g = 1; g < num_generators(); ++g)
    if (is_left_descent(g, a)) return false;
  return true;
}

AffineElement AffineWeylGroup::fW_representative(const AffineElement& a, int* stripped) const {
  AffineElement x = a;
  int count = 0;
  for (;;) {
    bool moved = false;
    for (int g = 1; g < num_generators(); ++g) {
      AffineElement y = left_mult(g, x);
      if (y.length() < x.length()) {
        x = y;
        ++count;
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  if (stripped) *stripped = count;
  return x;
}

AffineElement AffineWeylGroup::w_lambda(const Weight& lambda) const {
  return fW_representative(translation(lambda));
}

std::pair<Weight, FiniteWeylElement> AffineWeylGroup::translation_first(const AffineElement& a) const {
  return {a.finite().apply(*d_, a.translation()), a.finite()};
}

AffineElement AffineWeylGroup::from_translation_first(const Weight& mu, const FiniteWeylElement& v) const {
  return make(v, v.apply_inverse(*d_, mu));
}

Weight AffineWeylGroup::act(const AffineElement& a, const Weight& x) const {
  return a.finite().apply(*d_, x + a.translation());
}

Weight AffineWeylGroup::dot_action(const AffineElement& a, const Weight& mu, int p) const {
  check_weight(mu);
  const Weight& rho = d_->rho();
  return a.finite().apply(*d_, mu + a.translation() * p + rho) - rho;
}

void AffineWeylGroup::check_weight(const Weight& lambda) const {
  if (lambda.rank() != rank())
    throw InputError("weight " + lambda.to_string() + " has rank " + std::to_string(lambda.rank()) +
                     ", expected " + std::to_string(rank()));
}

void AffineWeylGroup::check_prime(int p) const {
  if (p <= d_->coxeter_number())
    throw UnsupportedError("p = " + std::to_string(p) + " must exceed the Coxeter number " +
                           std::to_string(d_->coxeter_number()));
}

bool AffineWeylGroup::in_fundamental_alcove(const Weight& lambda, int p) const {
  check_weight(lambda);
  Weight x = lambda + d_->rho();
  for (int r = 0; r < d_->num_positive_roots(); ++r) {
    int c = d_->pairing(x, r);
    if (c <= 0 || c >= p) return false;
  }
  return true;
}

std::vector<Weight> AffineWeylGroup::fundamental_alcove_weights(int p) const {
  // dominant lambda with <lambda + rho, theta^vee> < p
  std::vector<Weight> out;
  const Weight& c = d_->theta().coroot;
  Weight cur(rank());
  std::function<void(int, int)> rec = [&](int i, int budget) {
    if (i == rank()) {
      if (in_fundamental_alcove(cur, p)) out.push_back(cur);
      return;
    }
    for (int k = 0; (k + 1) * c[i] <= budget; ++k) {
      cur[i] = k;
      rec(i + 1, budget - (k + 1) * c[i]);
    }
    cur[i] = 0;
  };
  rec(0, p - 1);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> AffineWeylGroup::alcove_floors(const AffineElement& a, int p) const {
  // w(rho + p lambda) is an interior point of the alcove when p > h
  Weight pt = a.finite().apply(*d_, d_->rho() + a.translation() * p);
  std::vector<int> n(d_->num_positive_roots());
  for (int r = 0; r < d_->num_positive_roots(); ++r) n[r] = floor_div(d_->pairing(pt, r), p);
  return n;
}

AffineElement AffineWeylGroup::alcove_of(const Weight& lambda, int p) const { return alcove(lambda, p).element; }

Alcove AffineWeylGroup::alcove(const Weight& lambda, int p) const {
  check_weight(lambda);
  check_prime(p);
  const int np = d_->num_positive_roots();
  const Weight x = lambda + d_->rho();
  std::vector<int> target(np);
  for (int r = 0; r < np; ++r) target[r] = floor_div(d_->pairing(x, r), p);
  auto distance = [&](const std::vector<int>& n) {
    int s = 0;
    for (int r = 0; r < np; ++r) s += std::abs(n[r] - target[r]);
    return s;
  };
  AffineElement w = identity();
  std::vector<int> cur = alcove_floors(w, p);
  int dist = distance(cur);
  while (dist > 0) {
    bool moved = false;
    for (int g = 0; g < num_generators() && !moved; ++g) {
      AffineElement w2 = right_mult(w, g);
      std::vector<int> n2 = alcove_floors(w2, p);
      int d2 = distance(n2);
      if (d2 < dist) {
        w = w2;
        cur = std::move(n2);
        dist = d2;
        moved = true;
      }
    }
    if (!moved) throw std::logic_error("gallery walk stalled");
  }
  return {w, cur};
}

std::pair<AffineElement, Weight> AffineWeylGroup::reduce_to_closure(const Weight& lambda, int p) const {
  check_weight(lambda);
  const RootDatum& d = *d_;
  AffineElement g = identity();
  Weight mu = lambda;
  const AffineElement s0 = generator(0);
  for (;;) {
    Weight y = mu + d.rho();
    int i = 0;
    while (i < rank() && y[i] >= 0) ++i;
    if (i < rank()) {
      mu = d.reflect(y, i) - d.rho();
      g = right_mult(g, i + 1);
      continue;
    }
    if (d.pairing(y, d.highest_coroot()) > p) {
      mu = dot_action(s0, mu, p);
      g = right_mult(g, 0);
      continue;
    }
    return {g, mu};
  }
}

std::vector<AffineElement> AffineWeylGroup::enumerate_fW(int max_length) const {
  std::vector<std::pair<std::vector<int>, AffineElement>> keyed;
  std::vector<AffineElement> layer{identity()};
  std::set<AffineElement> seen{identity()};
  keyed.emplace_back(std::vector<int>{}, identity());
  for (int len = 1; len <= max_length; ++len) {
    std::vector<AffineElement> next;
    for (const AffineElement& w : layer) {
      for (int g = 0; g < num_generators(); ++g) {
        AffineElement y = right_mult(w, g);
        if (y.length() != len || !in_fW(y)) continue;
        if (seen.insert(y).second) next.push_back(y);
      }
    }
    for (const AffineElement& y : next) keyed.emplace_back(reduced_word(y), y);
    layer = std::move(next);
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.second.length() != b.second.length()) return a.second.length() < b.second.length();
    return word_less(a.first, b.first);
  });
  std::vector<AffineElement> out;
  out.reserve(keyed.size());
  for (auto& kv : keyed) out.push_back(kv.second);
  return out;
}

std::vector<AffineElement> AffineWeylGroup::enumerate_W(int max_length) const {
  std::vector<AffineElement> out{identity()};
  std::set<AffineElement> seen{identity()};
  std::vector<AffineElement> layer{identity()};
  for (int len = 1; len <= max_length; ++len) {
    std::vector<AffineElement> next;
    for (const AffineElement& w : layer) {
      for (int g = 0; g < num_generators(); ++g) {
        AffineElement y = right_mult(w, g);
        if (y.length() == len && seen.insert(y).second) next.push_back(y);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

std::string AffineWeylGroup::to_string(const AffineElement& a) const {
  int om = 0;
  std::vector<int> word = reduced_word(a, &om);
  if (om == 0) return word_to_string(word);
  std::string s = word.empty() ? std::string() : word_to_string(word) + ".";
  return s + "omega:" + std::to_string(om);
}

AffineElement AffineWeylGroup::parse(const std::string& text) const {
  std::vector<int> word;
  int om = 0;
  std::stringstream ss(text);
  std::string tok;
  bool any = false;
  while (std::getline(ss, tok, '.')) {
    any = true;
    if (tok == "e") continue;
    if (tok.rfind("omega:", 0) == 0) {
      try {
        om = std::stoi(tok.substr(6));
      } catch (const std::exception&) {
        throw InputError("malformed token '" + tok + "' in '" + text + "'");
      }
      if (om < 0 || om >= static_cast<int>(omega_.size()))
        throw InputError("omega index out of range in '" + text + "'");
      continue;
    }
    if (tok.size() < 2 || tok[0] != 's') throw InputError("malformed token '" + tok + "' in '" + text + "'");
    size_t pos = 0;
    int g = -1;
    try {
      g = std::stoi(tok.substr(1), &pos);
    } catch (const std::exception&) {
      throw InputError("malformed token '" + tok + "' in '" + text + "'");
    }
    if (pos != tok.size() - 1 || g < 0 || g > rank())
      throw InputError("generator out of range '" + tok + "' in '" + text + "'");
    word.push_back(g);
  }
  if (!any) throw InputError("empty word");
  return from_word(word, om);
}

nlohmann::json AffineWeylGroup::to_json(const AffineElement& a) const {
  nlohmann::json j;
  j["finite_word"] = a.finite().reduced_word(*d_);
  j["translation"] = std::vector<int>(a.translation().coords().begin(), a.translation().coords().end());
  j["word"] = to_string(a);
  return j;
}

AffineElement AffineWeylGroup::from_json(const nlohmann::json& j) const {
  try {
    std::vector<int> fw = j.at("finite_word").get<std::vector<int>>();
    std::vector<int> tr = j.at("translation").get<std::vector<int>>();
    if (static_cast<int>(tr.size()) != rank()) throw InputError("translation has wrong rank");
    return make(FiniteWeylElement::from_word(*d_, fw), Weight::from_span(tr));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed element record: ") + e.what());
  }
}

// ---------------------------------------------------------------- FWBall

FWBall::FWBall(const AffineWeylGroup& group, int max_length)
    : group_(group), max_length_(max_length), elements_(group.enumerate_fW(max_length)) {
  const int ng = group_.num_generators();
  index_.reserve(elements_.size() * 2);
  words_.reserve(elements_.size());
  for (size_t i = 0; i < elements_.size(); ++i) {
    index_.emplace(elements_[i], static_cast<int>(i));
    words_.push_back(group_.to_string(elements_[i]));
  }
  steps_.resize(elements_.size() * ng);
  for (size_t i = 0; i < elements_.size(); ++i) {
    for (int g = 0; g < ng; ++g) {
      AffineElement y = group_.right_mult(elements_[i], g);
      Step& st = steps_[i * ng + g];
      if (y.length() < elements_[i].length()) {
        st.move = Move::Down;
        st.target = index_.at(y);
      } else if (!group_.in_fW(y)) {
        st.move = Move::Leaves;
      } else {
        st.move = Move::Up;
        auto it = index_.find(y);
        st.target = it == index_.end() ? -1 : it->second;
      }
    }
  }
}

std::optional<int> FWBall::index(const AffineElement& a) const {
  auto it = index_.find(a);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int FWBall::index_or_throw(const AffineElement& a) const {
  auto it = index_.find(a);
  if (it == index_.end())
    throw DataError("element " + group_.to_string(a) + " outside the enumerated range (length bound " +
                    std::to_string(max_length_) + ")");
  return it->second;
}

}  // namespace hecke_cells
