#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "hecke_cells/rootdata.hpp"

namespace hecke_cells {

// w t_lambda with w finite and lambda in X. Generator 0 is s0, generator i >= 1
// is the finite simple reflection s_i (simple root i-1 in 0-based indexing).
class AffineElement {
 public:
  AffineElement() = default;
  AffineElement(const RootDatum& d, FiniteWeylElement finite, Weight translation);

  const FiniteWeylElement& finite() const { return finite_; }
  const Weight& translation() const { return translation_; }
  int length() const { return length_; }

  auto operator<=>(const AffineElement& o) const {
    if (auto c = finite_ <=> o.finite_; c != 0) return c;
    return translation_ <=> o.translation_;
  }
  bool operator==(const AffineElement& o) const {
    return finite_ == o.finite_ && translation_ == o.translation_;
  }
  size_t hash() const;

 private:
  FiniteWeylElement finite_;
  Weight translation_;
  int length_ = 0;
};

struct AffineElementHash {
  size_t operator()(const AffineElement& x) const { return x.hash(); }
};

int affine_length(const RootDatum& d, const FiniteWeylElement& w, const Weight& lambda);

struct CosetMinimality {
  bool in_fW = false;   // minimal in W_f x
  bool in_fWf = false;  // minimal in W_f x W_f
};

struct Alcove {
  AffineElement element;
  std::vector<int> floors;  // n_alpha per positive root, lower-closure convention
};

class AffineWeylGroup {
 public:
  explicit AffineWeylGroup(RootDatum d);
  static AffineWeylGroup from_type(const std::string& type) { return AffineWeylGroup(RootDatum::parse(type)); }

  const RootDatum& datum() const { return *d_; }
  int rank() const { return d_->rank(); }
  int num_generators() const { return d_->rank() + 1; }
  bool is_finite_generator(int g) const { return g >= 1; }

  AffineElement identity() const;
  AffineElement generator(int g) const;
  AffineElement translation(const Weight& lambda) const;
  AffineElement make(const FiniteWeylElement& w, const Weight& lambda) const;

  AffineElement mult(const AffineElement& a, const AffineElement& b) const;
  AffineElement inverse(const AffineElement& a) const;
  AffineElement right_mult(const AffineElement& a, int g) const;  // a s_g
  AffineElement left_mult(int g, const AffineElement& a) const;   // s_g a
  bool is_right_descent(const AffineElement& a, int g) const;
  bool is_left_descent(int g, const AffineElement& a) const;

  bool in_W(const AffineElement& a) const;  // translation part in Y
  const std::vector<AffineElement>& omega() const { return omega_; }
  // the omega with a = a' omega, a' in W
  int omega_index(const AffineElement& a) const;

  // lexicographically smallest reduced word; a trailing omega is returned separately
  std::vector<int> reduced_word(const AffineElement& a, int* omega = nullptr) const;
  AffineElement from_word(const std::vector<int>& word, int omega = 0) const;

  // Bruhat order on W via the descent recursion; memoised and synchronised
  bool bruhat_leq(const AffineElement& y, const AffineElement& w) const;

  CosetMinimality coset_minimality(const AffineElement& a) const;
  bool in_fW(const AffineElement& a) const;
  AffineElement fW_representative(const AffineElement& a, int* stripped = nullptr) const;
  AffineElement w_lambda(const Weight& lambda) const;

  // a = t_mu v with translation first
  std::pair<Weight, FiniteWeylElement> translation_first(const AffineElement& a) const;
  AffineElement from_translation_first(const Weight& mu, const FiniteWeylElement& v) const;

  Weight act(const AffineElement& a, const Weight& x) const;  // w(x + lambda)
  Weight dot_action(const AffineElement& a, const Weight& mu, int p) const;
  bool in_fundamental_alcove(const Weight& lambda, int p) const;
  std::vector<Weight> fundamental_alcove_weights(int p) const;
  std::vector<int> alcove_floors(const AffineElement& a, int p) const;
  AffineElement alcove_of(const Weight& lambda, int p) const;
  Alcove alcove(const Weight& lambda, int p) const;
  // element g and endpoint mu in the closure of C_p with lambda = g . mu
  std::pair<AffineElement, Weight> reduce_to_closure(const Weight& lambda, int p) const;

  // fW elements of length <= L ordered by length, then reduced word
  std::vector<AffineElement> enumerate_fW(int max_length) const;
  std::vector<AffineElement> enumerate_W(int max_length) const;

  std::string to_string(const AffineElement& a) const;  // "s0.s1", "e", "s0.omega:1"
  AffineElement parse(const std::string& text) const;
  nlohmann::json to_json(const AffineElement& a) const;
  AffineElement from_json(const nlohmann::json& j) const;

  void check_weight(const Weight& lambda) const;
  void check_prime(int p) const;  // throws UnsupportedError unless p > h

 private:
  struct BruhatCache;
  std::shared_ptr<const RootDatum> d_;
  FiniteWeylElement s_theta_;
  std::vector<AffineElement> omega_;
  std::shared_ptr<BruhatCache> bruhat_;
};

bool word_less(const std::vector<int>& a, const std::vector<int>& b);
std::string word_to_string(const std::vector<int>& word);

// fW elements up to a length bound, indexed, with the right action of the
// generators recorded. Elements are in enumerate_fW order.
class FWBall {
 public:
  enum class Move : std::uint8_t { Up, Down, Leaves };
  struct Step {
    Move move = Move::Leaves;
    int target = -1;  // index, or -1 when Leaves or beyond the bound
  };

  FWBall(const AffineWeylGroup& group, int max_length);

  const AffineWeylGroup& group() const { return group_; }
  int max_length() const { return max_length_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const AffineElement& element(int i) const { return elements_[i]; }
  const std::vector<AffineElement>& elements() const { return elements_; }
  int length(int i) const { return elements_[i].length(); }
  std::optional<int> index(const AffineElement& a) const;
  int index_or_throw(const AffineElement& a) const;
  const Step& step(int i, int g) const { return steps_[static_cast<size_t>(i) * group_.num_generators() + g]; }
  const std::string& word(int i) const { return words_[i]; }

 private:
  AffineWeylGroup group_;
  int max_length_;
  std::vector<AffineElement> elements_;
  std::vector<std::string> words_;
  std::unordered_map<AffineElement, int, AffineElementHash> index_;
  std::vector<Step> steps_;
};

}  // namespace hecke_cells

template <>
struct std::hash<hecke_cells::AffineElement> {
  size_t operator()(const hecke_cells::AffineElement& x) const { return x.hash(); }
};
