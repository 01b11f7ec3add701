#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace hecke_cells {

// Sparse integer Laurent polynomial in v. Coefficient arithmetic is checked and
// throws std::overflow_error rather than wrapping.
class LaurentPoly {
 public:
  using Term = std::pair<int, std::int64_t>;  // (exponent, coefficient)

  LaurentPoly() = default;
  static LaurentPoly constant(std::int64_t c) { return monomial(c, 0); }
  static LaurentPoly monomial(std::int64_t c, int exponent);
  static LaurentPoly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::int64_t coeff(int exponent) const;
  int min_degree() const { return terms_.front().first; }
  int max_degree() const { return terms_.back().first; }

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly scaled(std::int64_t c) const;
  LaurentPoly shifted(int k) const;  // times v^k
  // multiply by c v^k and add to this
  void add_scaled(const LaurentPoly& o, std::int64_t c, int k);

  LaurentPoly bar() const;  // v -> v^{-1}
  std::int64_t at_one() const;
  bool is_self_dual() const { return *this == bar(); }
  bool in_positive_part() const { return is_zero() || min_degree() >= 1; }  // in vZ[v]
  bool nonnegative() const;
  // the self-dual h with (*this - h) in vZ[v]
  LaurentPoly self_dual_correction() const;

  bool operator==(const LaurentPoly&) const = default;
  auto operator<=>(const LaurentPoly&) const = default;

  // canonical text form "1*v^0 + 2*v^1 - 1*v^3"; zero is "0"
  std::string to_string() const;
  static LaurentPoly parse(const std::string& text);

 private:
  std::vector<Term> terms_;  // sorted by exponent, no zero coefficients
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace hecke_cells
