#include "hecke_cells/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "hecke_cells/error.hpp"

namespace hecke_cells {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow in addition");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow in multiplication");
  return r;
}

LaurentPoly LaurentPoly::monomial(std::int64_t c, int exponent) {
  LaurentPoly p;
  if (c != 0) p.terms_.emplace_back(exponent, c);
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end());
  LaurentPoly p;
  for (const auto& [e, c] : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == e)
      p.terms_.back().second = checked_add(p.terms_.back().second, c);
    else
      p.terms_.emplace_back(e, c);
  }
  std::erase_if(p.terms_, [](const Term& t) { return t.second == 0; });
  return p;
}

std::int64_t LaurentPoly::coeff(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{exponent, INT64_MIN});
  return (it != terms_.end() && it->first == exponent) ? it->second : 0;
}

void LaurentPoly::add_scaled(const LaurentPoly& o, std::int64_t c, int k) {
  if (o.is_zero() || c == 0) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first + k)) {
      out.push_back(*a++);
    } else if (a == terms_.end() || b->first + k < a->first) {
      out.emplace_back(b->first + k, checked_mul(b->second, c));
      ++b;
    } else {
      std::int64_t s = checked_add(a->second, checked_mul(b->second, c));
      if (s != 0) out.emplace_back(a->first, s);
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r.add_scaled(o, 1, 0);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r.add_scaled(o, -1, 0);
  return r;
}

LaurentPoly LaurentPoly::operator-() const { return scaled(-1); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  if (o.terms_.size() == 1) return scaled(o.terms_[0].second).shifted(o.terms_[0].first);
  if (terms_.size() == 1) return o.scaled(terms_[0].second).shifted(terms_[0].first);
  std::vector<Term> raw;
  raw.reserve(terms_.size() * o.terms_.size());
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) raw.emplace_back(ea + eb, checked_mul(ca, cb));
  return from_terms(std::move(raw));
}

LaurentPoly LaurentPoly::scaled(std::int64_t c) const {
  if (c == 0) return {};
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.second = checked_mul(t.second, c);
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.first += k;
  return r;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly r;
  r.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) r.terms_.emplace_back(-it->first, it->second);
  return r;
}

std::int64_t LaurentPoly::at_one() const {
  std::int64_t s = 0;
  for (const auto& t : terms_) s = checked_add(s, t.second);
  return s;
}

bool LaurentPoly::nonnegative() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.second > 0; });
}

LaurentPoly LaurentPoly::self_dual_correction() const {
  std::vector<Term> out;
  for (const auto& [e, c] : terms_) {
    if (e > 0) break;
    out.emplace_back(e, c);
    if (e < 0) out.emplace_back(-e, c);
  }
  return from_terms(std::move(out));
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < terms_.size(); ++i) {
    auto [e, c] = terms_[i];
    if (i == 0) {
      s += std::to_string(c);
    } else {
      s += c < 0 ? " - " : " + ";
      s += std::to_string(c < 0 ? -c : c);
    }
    s += "*v^" + std::to_string(e);
  }
  return s;
}

LaurentPoly LaurentPoly::parse(const std::string& text) {
  auto fail = [&]() -> LaurentPoly { throw InputError("malformed Laurent polynomial: '" + text + "'"); };
  size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_int = [&](std::int64_t& out) {
    size_t start = i;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    size_t digits = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == digits) return false;
    try {
      out = std::stoll(text.substr(start, i - start));
    } catch (const std::exception&) {
      return false;
    }
    return true;
  };
  skip();
  if (text.substr(i) == "0") return {};
  std::vector<Term> terms;
  int sign = 1;
  bool first = true;
  while (true) {
    skip();
    if (!first) {
      if (i >= text.size()) break;
      if (text[i] == '+')
        sign = 1;
      else if (text[i] == '-')
        sign = -1;
      else
        return fail();
      ++i;
      skip();
    }
    std::int64_t c = 0, e = 0;
    if (!read_int(c)) return fail();
    if (text.compare(i, 3, "*v^") != 0) return fail();
    i += 3;
    if (!read_int(e)) return fail();
    terms.emplace_back(static_cast<int>(e), sign * c);
    first = false;
  }
  if (terms.empty()) return fail();
  return from_terms(std::move(terms));
}

}  // namespace hecke_cells
