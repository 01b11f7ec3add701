#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "hecke_cells/error.hpp"

namespace hecke_cells {

inline constexpr int kMaxRank = 8;

// Integer vector of fixed capacity. Used for weights in fundamental-weight
// coordinates and for root/coroot expansions in the simple basis.
class Weight {
 public:
  Weight() = default;
  explicit Weight(int rank);
  Weight(std::initializer_list<int> coords);
  static Weight from_span(std::span<const int> coords);

  int rank() const { return rank_; }
  int operator[](int i) const { return c_[i]; }
  int& operator[](int i) { return c_[i]; }
  std::span<const int> coords() const { return {c_.data(), static_cast<size_t>(rank_)}; }

  bool is_zero() const;
  bool is_dominant() const;      // all coordinates >= 0
  bool is_nonnegative() const { return is_dominant(); }

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight operator-() const;
  Weight operator*(int k) const;
  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);

  auto operator<=>(const Weight&) const = default;
  bool operator==(const Weight&) const = default;

  // "1,0,-2"
  std::string to_string() const;
  static Weight parse(const std::string& text);

  size_t hash() const;

 private:
  std::int32_t rank_ = 0;
  std::array<std::int32_t, kMaxRank> c_{};
};

struct WeightHash {
  size_t operator()(const Weight& w) const { return w.hash(); }
};

struct CartanType {
  char series = 'A';
  int rank = 1;

  static CartanType parse(const std::string& text);  // "A3", "C2", "G2"
  std::string to_string() const;
  bool operator==(const CartanType&) const = default;
};

struct PositiveRoot {
  Weight weight;    // fundamental-weight coordinates
  Weight root;      // coefficients on simple roots
  Weight coroot;    // coefficients on simple coroots
  int height = 0;   // height of the root
  bool is_long = false;
};

class RootDatum;

// A finite Weyl group element, stored through its images of rho under w and
// w^{-1}. Since rho is regular these determine w.
class FiniteWeylElement {
 public:
  FiniteWeylElement() = default;
  static FiniteWeylElement identity(const RootDatum& d);
  static FiniteWeylElement simple(const RootDatum& d, int i);
  static FiniteWeylElement from_word(const RootDatum& d, std::span<const int> word);
  static FiniteWeylElement reflection(const RootDatum& d, int positive_root);

  Weight apply(const RootDatum& d, const Weight& x) const;
  Weight apply_inverse(const RootDatum& d, const Weight& x) const;
  // sign of w(alpha) for a positive root alpha
  bool maps_positive(const RootDatum& d, int positive_root) const;

  FiniteWeylElement compose(const RootDatum& d, const FiniteWeylElement& rhs) const;
  FiniteWeylElement inverse() const { return FiniteWeylElement(inv_rho_image_, rho_image_); }
  FiniteWeylElement times_simple(const RootDatum& d, int i) const;  // w s_i
  FiniteWeylElement simple_times(const RootDatum& d, int i) const;  // s_i w

  int length(const RootDatum& d) const;
  bool has_right_descent(const RootDatum& d, int i) const { (void)d; return inv_rho_image_[i] < 0; }
  bool has_left_descent(const RootDatum& d, int i) const { (void)d; return rho_image_[i] < 0; }
  // lexicographically smallest reduced word, 0-based simple indices
  std::vector<int> reduced_word(const RootDatum& d) const;
  // action on weight coordinates; column j is w(omega_j)
  std::vector<std::vector<int>> matrix(const RootDatum& d) const;

  const Weight& rho_image() const { return rho_image_; }
  const Weight& inverse_rho_image() const { return inv_rho_image_; }

  auto operator<=>(const FiniteWeylElement& o) const { return rho_image_ <=> o.rho_image_; }
  bool operator==(const FiniteWeylElement& o) const { return rho_image_ == o.rho_image_; }

 private:
  FiniteWeylElement(Weight fwd, Weight inv) : rho_image_(fwd), inv_rho_image_(inv) {}
  Weight rho_image_;
  Weight inv_rho_image_;
};

class RootDatum {
 public:
  explicit RootDatum(CartanType type);
  static RootDatum parse(const std::string& text) { return RootDatum(CartanType::parse(text)); }

  const CartanType& type() const { return type_; }
  int rank() const { return type_.rank; }
  // <alpha_j, alpha_i^vee>
  int cartan(int i, int j) const { return cartan_[i][j]; }
  const Weight& simple_root(int i) const { return simple_roots_[i]; }
  // squared length of alpha_i, short roots normalised to 2
  int root_length_sq(int i) const { return length_sq_[i]; }

  const std::vector<PositiveRoot>& positive_roots() const { return positive_; }
  int num_positive_roots() const { return static_cast<int>(positive_.size()); }
  // <lambda, beta^vee>
  int pairing(const Weight& lambda, int positive_root) const;
  int highest_coroot() const { return highest_coroot_; }  // index into positive_roots()
  int highest_root() const { return highest_root_; }
  const PositiveRoot& theta() const { return positive_[highest_coroot_]; }

  const Weight& rho() const { return rho_; }
  Weight zero() const { return Weight(rank()); }
  Weight fundamental_weight(int i) const;

  int coxeter_number() const;
  std::int64_t weyl_group_order() const;
  int fundamental_group_order() const { return static_cast<int>(det_); }  // [X : Y]

  Weight reflect(const Weight& x, int i) const;                  // s_i(x)
  Weight reflect_by_root(const Weight& x, int positive_root) const;
  Weight reflect_coroot_coords(const Weight& coroot, int i) const;

  // Coefficients of x on the simple roots, scaled by |det|. x is in the root
  // lattice iff all scaled coefficients are divisible by the determinant.
  Weight scaled_root_coords(const Weight& x) const;
  bool in_root_lattice(const Weight& x) const;
  Weight root_coords(const Weight& x) const;  // throws if x is not in the root lattice
  Weight from_root_coords(const Weight& c) const;
  // (x, y) for x in the root lattice, y arbitrary; W-invariant form with short roots of length 2
  std::int64_t inner_product_root(const Weight& x_root_coords, const Weight& y) const;

  // Dominant conjugate of x and the parity of the number of reflections used.
  std::pair<Weight, int> dominant_conjugate(const Weight& x) const;
  std::vector<Weight> weyl_orbit(const Weight& x) const;
  std::vector<FiniteWeylElement> weyl_group() const;  // BFS over W_f; small ranks only

  bool operator==(const RootDatum& o) const { return type_ == o.type_; }

 private:
  CartanType type_;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<long long>> adjugate_;
  long long det_ = 1;
  std::vector<Weight> simple_roots_;
  std::vector<int> length_sq_;
  std::vector<PositiveRoot> positive_;
  int highest_coroot_ = 0;
  int highest_root_ = 0;
  Weight rho_;
};

// Characters of Weyl modules. Memoises weight multiplicities per highest weight
// and dominant representative; internally synchronised.
class Characters {
 public:
  explicit Characters(const RootDatum& d) : d_(d) {}

  std::int64_t multiplicity(const Weight& lambda, const Weight& mu);
  std::vector<Weight> dominant_weights_below(const Weight& lambda) const;
  std::map<Weight, std::int64_t> character(const Weight& lambda);
  // multiplicities of V(lambda) (x) V(mu) in V(nu), for all nu
  std::map<Weight, std::int64_t> tensor_decompose(const Weight& lambda, const Weight& mu);

  const RootDatum& datum() const { return d_; }

 private:
  std::int64_t dominant_multiplicity(const Weight& lambda, const Weight& mu);

  RootDatum d_;
  std::mutex mu_;
  std::map<std::pair<Weight, Weight>, std::int64_t> memo_;
};

using WeightMultiset = std::map<Weight, std::int64_t>;

std::int64_t weight_multiplicity(const RootDatum& d, const Weight& lambda, const Weight& mu);
std::int64_t weyl_dimension(const RootDatum& d, const Weight& lambda);
std::int64_t tensor_multiplicity(const RootDatum& d, const Weight& lambda, const Weight& mu,
                                 const Weight& nu);
WeightMultiset weyl_character(const RootDatum& d, const Weight& lambda);

}  // namespace hecke_cells

template <>
struct std::hash<hecke_cells::Weight> {
  size_t operator()(const hecke_cells::Weight& w) const { return w.hash(); }
};
