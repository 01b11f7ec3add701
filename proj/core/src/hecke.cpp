#include "hecke_cells/hecke.hpp"

#include <algorithm>
#include <functional>

namespace hecke_cells {

namespace {

const LaurentPoly kV = LaurentPoly::monomial(1, 1);
const LaurentPoly kVinv = LaurentPoly::monomial(1, -1);
const LaurentPoly kVinvMinusV = LaurentPoly::from_terms({{-1, 1}, {1, -1}});
const LaurentPoly kMinusV = LaurentPoly::monomial(-1, 1);

}  // namespace

void add_term(HeckeElt& h, const AffineElement& w, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = h.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) h.erase(it);
  }
}

HeckeElt scale(const HeckeElt& h, const LaurentPoly& c) {
  HeckeElt out;
  if (c.is_zero()) return out;
  for (const auto& [w, p] : h) add_term(out, w, p * c);
  return out;
}

HeckeElt subtract(const HeckeElt& a, const HeckeElt& b) {
  HeckeElt out = a;
  for (const auto& [w, p] : b) add_term(out, w, -p);
  return out;
}

HeckeElt mul_by_gen(const AffineWeylGroup& G, const HeckeElt& h, int g) {
  HeckeElt out;
  for (const auto& [x, c] : h) {
    AffineElement xs = G.right_mult(x, g);
    add_term(out, xs, c);
    if (xs.length() < x.length()) add_term(out, x, c * kVinvMinusV);
  }
  return out;
}

HeckeElt mul_by_kl_gen(const AffineWeylGroup& G, const HeckeElt& h, int g) {
  HeckeElt out;
  for (const auto& [x, c] : h) {
    AffineElement xs = G.right_mult(x, g);
    add_term(out, xs, c);
    add_term(out, x, c.shifted(xs.length() > x.length() ? 1 : -1));
  }
  return out;
}

HeckeElt left_mul_by_gen(const AffineWeylGroup& G, int g, const HeckeElt& h) {
  HeckeElt out;
  for (const auto& [x, c] : h) {
    AffineElement sx = G.left_mult(g, x);
    add_term(out, sx, c);
    if (sx.length() < x.length()) add_term(out, x, c * kVinvMinusV);
  }
  return out;
}

HeckeElt hecke_mul(const AffineWeylGroup& G, const HeckeElt& a, const HeckeElt& b) {
  HeckeElt out;
  for (const auto& [y, c] : b) {
    int om = 0;
    std::vector<int> word = G.reduced_word(y, &om);
    HeckeElt t = a;
    for (int g : word) t = mul_by_gen(G, t, g);
    if (om) {
      HeckeElt shifted;
      for (const auto& [x, p] : t) add_term(shifted, G.mult(x, G.omega()[om]), p);
      t = std::move(shifted);
    }
    for (const auto& [x, p] : t) add_term(out, x, p * c);
  }
  return out;
}

HeckeElt standard_element(const AffineWeylGroup& G, const AffineElement& w) {
  (void)G;
  return HeckeElt{{w, LaurentPoly::constant(1)}};
}

HeckeElt bs_product(const AffineWeylGroup& G, const std::vector<int>& word) {
  HeckeElt h = standard_element(G, G.identity());
  for (int g : word) {
    if (g < 0 || g >= G.num_generators()) throw InputError("generator index out of range");
    h = mul_by_kl_gen(G, h, g);
  }
  return h;
}

GroupAlgebraElt specialize_v1(const HeckeElt& h) {
  GroupAlgebraElt out;
  for (const auto& [w, p] : h) {
    std::int64_t c = p.at_one();
    if (c) out[w] = c;
  }
  return out;
}

AsphElt asph_project(const AffineWeylGroup& G, const HeckeElt& h) {
  AsphElt out;
  for (const auto& [x, c] : h) {
    int k = 0;
    AffineElement y = G.fW_representative(x, &k);
    add_term(out, y, c.scaled(k % 2 ? -1 : 1).shifted(k));
  }
  return out;
}

AsphElt asph_mul_by_gen(const AffineWeylGroup& G, const AsphElt& m, int g) {
  AsphElt out;
  for (const auto& [w, c] : m) {
    AffineElement ws = G.right_mult(w, g);
    if (ws.length() < w.length()) {
      add_term(out, ws, c);
      add_term(out, w, c * kVinvMinusV);
    } else if (G.in_fW(ws)) {
      add_term(out, ws, c);
    } else {
      add_term(out, w, c * kMinusV);
    }
  }
  return out;
}

AsphElt asph_mul_by_kl_gen(const AffineWeylGroup& G, const AsphElt& m, int g) {
  AsphElt out = asph_mul_by_gen(G, m, g);
  for (const auto& [w, c] : m) add_term(out, w, c * kV);
  return out;
}

// ---------------------------------------------------------------- KL basis

KLBasis::KLBasis(AffineWeylGroup G) : G_(std::move(G)) {}

HeckeElt KLBasis::element(const AffineElement& w) const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  return element_ref(w);
}

const HeckeElt& KLBasis::element_ref(const AffineElement& w) const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto it = memo_.find(w);
  if (it != memo_.end()) return it->second;
  if (!G_.in_W(w)) throw InputError("canonical basis requested outside W: " + G_.to_string(w));
  HeckeElt c;
  if (w.length() == 0) {
    c = standard_element(G_, w);
  } else {
    int g = 0;
    AffineElement x;
    for (; g < G_.num_generators(); ++g) {
      x = G_.right_mult(w, g);
      if (x.length() < w.length()) break;
    }
    c = mul_by_kl_gen(G_, element_ref(x), g);
    for (int level = w.length() - 1; level >= 0; --level) {
      std::vector<std::pair<AffineElement, LaurentPoly>> fix;
      for (const auto& [y, p] : c)
        if (y.length() == level && !p.in_positive_part()) fix.emplace_back(y, p.self_dual_correction());
      for (const auto& [y, h] : fix) {
        for (const auto& [z, q] : element_ref(y)) add_term(c, z, -(q * h));
      }
    }
  }
  return memo_.emplace(w, std::move(c)).first->second;
}

std::int64_t KLBasis::mu(const AffineElement& y, const AffineElement& w) const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  const HeckeElt& h = element_ref(w);
  auto it = h.find(y);
  return it == h.end() ? 0 : it->second.coeff(1);
}

HeckeElt KLBasis::canonical_times_kl_gen(const AffineElement& u, int g) const {
  HeckeElt out;
  AffineElement us = G_.right_mult(u, g);
  if (us.length() < u.length()) {
    add_term(out, u, LaurentPoly::from_terms({{-1, 1}, {1, 1}}));
    return out;
  }
  add_term(out, us, LaurentPoly::constant(1));
  std::lock_guard<std::recursive_mutex> lock(mu_);
  for (const auto& [z, p] : element_ref(u)) {
    if (z == u) continue;
    std::int64_t m = p.coeff(1);
    if (m && G_.is_right_descent(z, g)) add_term(out, z, LaurentPoly::constant(m));
  }
  return out;
}

HeckeElt kl_basis(const AffineElement& w, const CanonicalBasis& basis) { return basis.element(w); }

HeckeElt decompose_in_basis(const CanonicalBasis& basis, const HeckeElt& b) {
  HeckeElt rest = b;
  HeckeElt out;
  while (!rest.empty()) {
    auto top = rest.begin();
    for (auto it = rest.begin(); it != rest.end(); ++it)
      if (it->first.length() > top->first.length()) top = it;
    AffineElement y = top->first;
    LaurentPoly c = top->second;
    add_term(out, y, c);
    for (const auto& [z, q] : basis.element(y)) add_term(rest, z, -(q * c));
  }
  return out;
}

HeckeElt canonical_product(const KLBasis& basis, const HeckeElt& x, const AffineElement& y) {
  const AffineWeylGroup& G = basis.group();
  std::map<AffineElement, HeckeElt> memo;
  std::function<const HeckeElt&(const AffineElement&)> rec = [&](const AffineElement& z) -> const HeckeElt& {
    auto it = memo.find(z);
    if (it != memo.end()) return it->second;
    HeckeElt r;
    if (z.length() == 0) {
      r = x;
    } else {
      int g = 0;
      AffineElement zs;
      for (; g < G.num_generators(); ++g) {
        zs = G.right_mult(z, g);
        if (zs.length() < z.length()) break;
      }
      // H_{zs} H_s = H_z + sum mu(t, zs) H_t over t < zs with ts < t
      const HeckeElt& prev = rec(zs);
      for (const auto& [u, c] : prev)
        for (const auto& [t, d] : basis.canonical_times_kl_gen(u, g)) add_term(r, t, c * d);
      for (const auto& [t, d] : basis.canonical_times_kl_gen(zs, g)) {
        if (t == z) continue;
        HeckeElt sub = rec(t);  // copy: rec may rehash memo
        for (const auto& [u, c] : sub) add_term(r, u, -(c * d));
      }
    }
    return memo.emplace(z, std::move(r)).first->second;
  };
  return rec(y);
}

// ---------------------------------------------------------------- antispherical

AntisphericalBasis::AntisphericalBasis(const AffineWeylGroup& G, int max_length)
    : ball_(std::make_shared<FWBall>(G, max_length)), p_(0), provenance_("computed:antispherical") {
  build_recursive();
}

AntisphericalBasis::AntisphericalBasis(const CanonicalBasis& basis, int max_length)
    : ball_(std::make_shared<FWBall>(basis.group(), max_length)),
      p_(basis.prime()),
      provenance_(basis.provenance()) {
  const AffineWeylGroup& G = basis.group();
  elements_.resize(ball_->size());
  for (int i = 0; i < ball_->size(); ++i) {
    const AffineElement& w = ball_->element(i);
    if (!basis.contains(w))
      throw DataError("canonical basis has no entry for " + ball_->word(i) + " (needed up to length " +
                      std::to_string(max_length) + ")");
    AsphElt m = asph_project(G, basis.element(w));
    Vec x = dense(m);
    if (x[i] != LaurentPoly::constant(1))
      throw DataError("projected canonical element for " + ball_->word(i) + " is not unitriangular");
    for (int j = 0; j < ball_->size(); ++j)
      if (!x[j].is_zero()) elements_[i].emplace_back(j, x[j]);
  }
}

void AntisphericalBasis::build_recursive() {
  const int n = ball_->size();
  const int ng = ball_->group().num_generators();
  elements_.assign(n, {});
  elements_[0].emplace_back(0, LaurentPoly::constant(1));
  for (int i = 1; i < n; ++i) {
    int g = 0;
    while (g < ng && ball_->step(i, g).move != FWBall::Move::Down) ++g;
    const int x = ball_->step(i, g).target;
    Vec c = mul_kl_gen(dense(elements_[x]), g);
    for (int j = i - 1; j >= 0; --j) {
      if (c[j].is_zero() || c[j].in_positive_part()) continue;
      LaurentPoly h = c[j].self_dual_correction();
      for (const auto& [k, q] : elements_[j]) c[k] -= q * h;
    }
    if (c[i] != LaurentPoly::constant(1)) throw std::logic_error("antispherical recursion lost unitriangularity");
    for (int j = 0; j <= i; ++j)
      if (!c[j].is_zero()) elements_[i].emplace_back(j, c[j]);
  }
}

AsphElt AntisphericalBasis::element(const AffineElement& w) const {
  return to_map(dense(elements_[ball_->index_or_throw(w)]));
}

AntisphericalBasis::Vec AntisphericalBasis::mul_kl_gen(const Vec& x, int g, bool* overflow) const {
  Vec out(x.size());
  for (size_t j = 0; j < x.size(); ++j) {
    if (x[j].is_zero()) continue;
    const FWBall::Step& st = ball_->step(static_cast<int>(j), g);
    switch (st.move) {
      case FWBall::Move::Up:
        if (st.target < 0) {
          if (overflow) *overflow = true;
        } else {
          out[st.target] += x[j];
        }
        out[j].add_scaled(x[j], 1, 1);
        break;
      case FWBall::Move::Down:
        out[st.target] += x[j];
        out[j].add_scaled(x[j], 1, -1);
        break;
      case FWBall::Move::Leaves:
        break;
    }
  }
  return out;
}

AntisphericalBasis::Vec AntisphericalBasis::mul_gen(const Vec& x, int g, bool* overflow) const {
  Vec out(x.size());
  for (size_t j = 0; j < x.size(); ++j) {
    if (x[j].is_zero()) continue;
    const FWBall::Step& st = ball_->step(static_cast<int>(j), g);
    switch (st.move) {
      case FWBall::Move::Up:
        if (st.target < 0) {
          if (overflow) *overflow = true;
        } else {
          out[st.target] += x[j];
        }
        break;
      case FWBall::Move::Down:
        out[st.target] += x[j];
        out[j] += x[j] * kVinvMinusV;
        break;
      case FWBall::Move::Leaves:
        out[j].add_scaled(x[j], -1, 1);
        break;
    }
  }
  return out;
}

AntisphericalBasis::Vec AntisphericalBasis::decompose(Vec x) const {
  Vec out(x.size());
  for (int j = static_cast<int>(x.size()) - 1; j >= 0; --j) {
    if (x[j].is_zero()) continue;
    LaurentPoly c = x[j];
    out[j] = c;
    for (const auto& [k, q] : elements_[j]) x[k] -= q * c;
  }
  return out;
}

AntisphericalBasis::Sparse AntisphericalBasis::canonical_product(int i, int g, bool* overflow) const {
  Vec c = decompose(mul_kl_gen(dense(elements_[i]), g, overflow));
  Sparse out;
  for (size_t j = 0; j < c.size(); ++j)
    if (!c[j].is_zero()) out.emplace_back(static_cast<int>(j), c[j]);
  return out;
}

AntisphericalBasis::Vec AntisphericalBasis::dense(const Sparse& s) const {
  Vec x(ball_->size());
  for (const auto& [j, p] : s) x[j] = p;
  return x;
}

AntisphericalBasis::Vec AntisphericalBasis::dense(const AsphElt& m) const {
  Vec x(ball_->size());
  for (const auto& [w, p] : m) x[ball_->index_or_throw(w)] += p;
  return x;
}

AsphElt AntisphericalBasis::to_map(const Vec& x) const {
  AsphElt m;
  for (size_t j = 0; j < x.size(); ++j)
    if (!x[j].is_zero()) m.emplace(ball_->element(static_cast<int>(j)), x[j]);
  return m;
}

AsphElt asph_canonical(const AffineElement& w, const AntisphericalBasis& basis) {
  const AffineWeylGroup& G = basis.ball().group();
  if (!G.in_fW(w)) throw InputError(G.to_string(w) + " is not minimal in its coset");
  return basis.element(w);
}

}  // namespace hecke_cells
