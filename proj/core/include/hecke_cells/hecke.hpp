#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "hecke_cells/affine.hpp"
#include "hecke_cells/laurent.hpp"

namespace hecke_cells {

// Elements of the Hecke algebra in the standard basis H_w, and of the
// antispherical module in the standard basis N_w (keys restricted to fW).
using HeckeElt = std::map<AffineElement, LaurentPoly>;
using AsphElt = std::map<AffineElement, LaurentPoly>;
using GroupAlgebraElt = std::map<AffineElement, std::int64_t>;

void add_term(HeckeElt& h, const AffineElement& w, const LaurentPoly& c);
HeckeElt scale(const HeckeElt& h, const LaurentPoly& c);
HeckeElt subtract(const HeckeElt& a, const HeckeElt& b);

// Right multiplication by the standard generator H_s and by H_s + v.
HeckeElt mul_by_gen(const AffineWeylGroup& G, const HeckeElt& h, int g);
HeckeElt mul_by_kl_gen(const AffineWeylGroup& G, const HeckeElt& h, int g);
HeckeElt left_mul_by_gen(const AffineWeylGroup& G, int g, const HeckeElt& h);
HeckeElt hecke_mul(const AffineWeylGroup& G, const HeckeElt& a, const HeckeElt& b);
HeckeElt standard_element(const AffineWeylGroup& G, const AffineElement& w);
HeckeElt bs_product(const AffineWeylGroup& G, const std::vector<int>& word);
GroupAlgebraElt specialize_v1(const HeckeElt& h);

// sgn tensor over the finite Hecke algebra: 1 (x) H_x = (-v)^{l(u)} N_y for x = u y, y in fW
AsphElt asph_project(const AffineWeylGroup& G, const HeckeElt& h);
AsphElt asph_mul_by_gen(const AffineWeylGroup& G, const AsphElt& m, int g);
AsphElt asph_mul_by_kl_gen(const AffineWeylGroup& G, const AsphElt& m, int g);

// Source of a canonical basis pH_w (p = 0 for the Kazhdan-Lusztig basis).
class CanonicalBasis {
 public:
  virtual ~CanonicalBasis() = default;
  virtual int prime() const = 0;
  virtual const AffineWeylGroup& group() const = 0;
  virtual HeckeElt element(const AffineElement& w) const = 0;
  virtual bool contains(const AffineElement& w) const = 0;
  virtual std::string provenance() const = 0;
};

// Kazhdan-Lusztig basis, computed on demand by the standard recursion and
// memoised. Safe to share between threads.
class KLBasis final : public CanonicalBasis {
 public:
  explicit KLBasis(AffineWeylGroup G);
  int prime() const override { return 0; }
  const AffineWeylGroup& group() const override { return G_; }
  HeckeElt element(const AffineElement& w) const override;
  bool contains(const AffineElement& w) const override { return G_.in_W(w); }
  std::string provenance() const override { return "computed:kl"; }

  // coefficient of v in h_{y,w}
  std::int64_t mu(const AffineElement& y, const AffineElement& w) const;
  // H_u (v-canonical) times H_s + v, expanded in the canonical basis
  HeckeElt canonical_times_kl_gen(const AffineElement& u, int g) const;

 private:
  const HeckeElt& element_ref(const AffineElement& w) const;
  AffineWeylGroup G_;
  mutable std::recursive_mutex mu_;
  mutable std::map<AffineElement, HeckeElt> memo_;
};

// Write b as a combination of canonical basis elements by unitriangular
// elimination, longest terms first.
HeckeElt decompose_in_basis(const CanonicalBasis& basis, const HeckeElt& b);

// Multiplication in the canonical basis: (sum_u c_u H_u) * H_y, result in
// canonical coordinates. Uses only the W-graph data of the KL basis.
HeckeElt canonical_product(const KLBasis& basis, const HeckeElt& x_canonical, const AffineElement& y);

HeckeElt kl_basis(const AffineElement& w, const CanonicalBasis& basis);

// A canonical basis ingested from a file. Entries are pH_w in the standard basis.
class BasisTable final : public CanonicalBasis {
 public:
  BasisTable(AffineWeylGroup G, int p, std::string provenance = "");
  static BasisTable from_basis(const CanonicalBasis& basis, const std::vector<AffineElement>& elements);

  int prime() const override { return p_; }
  const AffineWeylGroup& group() const override { return G_; }
  HeckeElt element(const AffineElement& w) const override;
  bool contains(const AffineElement& w) const override { return entries_.count(w) > 0; }
  std::string provenance() const override { return provenance_; }

  // validates diagonal 1, support below w in the Bruhat order, and for p = 0
  // off-diagonal coefficients in vZ[v]; throws DataError
  void insert(const AffineElement& w, HeckeElt expansion);
  const std::map<AffineElement, HeckeElt>& entries() const { return entries_; }

  std::string to_text() const;
  static BasisTable from_text(const AffineWeylGroup& G, const std::string& text);
  nlohmann::json to_json() const;
  static BasisTable from_json(const AffineWeylGroup& G, const nlohmann::json& j);
  static BasisTable load(const AffineWeylGroup& G, const std::string& path);  // by extension
  void save(const std::string& path) const;

 private:
  std::vector<AffineElement> ordered_keys() const;
  std::vector<std::pair<AffineElement, LaurentPoly>> ordered_terms(const HeckeElt& h) const;
  AffineWeylGroup G_;
  int p_;
  std::string provenance_;
  std::map<AffineElement, HeckeElt> entries_;
};

// Canonical basis of the antispherical module over an fW ball, in dense
// coordinates indexed by the ball. Immutable after construction.
class AntisphericalBasis {
 public:
  using Vec = std::vector<LaurentPoly>;                      // dense, ball-indexed
  using Sparse = std::vector<std::pair<int, LaurentPoly>>;   // ascending index

  // p = 0 canonical basis from the antispherical recursion
  AntisphericalBasis(const AffineWeylGroup& G, int max_length);
  // projections 1 (x) pH_w of a supplied canonical basis
  AntisphericalBasis(const CanonicalBasis& basis, int max_length);

  const FWBall& ball() const { return *ball_; }
  std::shared_ptr<const FWBall> ball_ptr() const { return ball_; }
  int prime() const { return p_; }
  std::string provenance() const { return provenance_; }
  int size() const { return ball_->size(); }

  const Sparse& element(int i) const { return elements_[i]; }
  AsphElt element(const AffineElement& w) const;

  // x times H_s + v in standard coordinates; sets *overflow if a term lands
  // beyond the ball
  Vec mul_kl_gen(const Vec& x, int g, bool* overflow = nullptr) const;
  // x times H_s
  Vec mul_gen(const Vec& x, int g, bool* overflow = nullptr) const;
  // canonical coordinates of x
  Vec decompose(Vec x) const;
  // canonical coordinates of N_i (H_s + v)
  Sparse canonical_product(int i, int g, bool* overflow = nullptr) const;

  Vec dense(const Sparse& s) const;
  Vec dense(const AsphElt& m) const;
  AsphElt to_map(const Vec& x) const;

 private:
  void build_recursive();
  std::shared_ptr<const FWBall> ball_;
  int p_ = 0;
  std::string provenance_;
  std::vector<Sparse> elements_;
};

AsphElt asph_canonical(const AffineElement& w, const AntisphericalBasis& basis);

}  // namespace hecke_cells
