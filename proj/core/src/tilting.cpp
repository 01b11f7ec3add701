#include "hecke_cells/tilting.hpp"

namespace hecke_cells {

namespace {

void add(MZeroElt& c, const AffineElement& w, std::int64_t k) {
  if (k == 0) return;
  auto [it, inserted] = c.emplace(w, k);
  if (!inserted) {
    it->second += k;
    if (it->second == 0) c.erase(it);
  }
}

void check_in_alcove(const AffineWeylGroup& G, const Weight& lambda, int p) {
  if (!G.in_fundamental_alcove(lambda, p))
    throw InputError("weight " + lambda.to_string() + " is not in the fundamental alcove for p=" + std::to_string(p));
}

}  // namespace

MZeroElt tilting_class(const AffineElement& w, const AntisphericalBasis& basis) {
  const AffineWeylGroup& G = basis.ball().group();
  if (!G.in_fW(w)) throw InputError(G.to_string(w) + " is not minimal in its coset");
  MZeroElt out;
  for (const auto& [y, c] : asph_canonical(w, basis)) add(out, y, c.at_one());
  return out;
}

MZeroElt wall_crossing(const AffineWeylGroup& G, const MZeroElt& c, int g) {
  MZeroElt out;
  for (const auto& [y, k] : c) {
    AffineElement x = G.right_mult(y, g);
    if (!G.in_fW(x)) continue;  // N°_y s = -N°_y
    add(out, x, k);
    add(out, y, k);
  }
  return out;
}

GroupAlgebraElt c_of_module(const AffineWeylGroup& G, const WeightMultiset& m, int p) {
  G.check_prime(p);
  GroupAlgebraElt out;
  for (const auto& [lambda, dim] : m) {
    if (dim == 0) continue;
    auto [g, mu] = G.reduce_to_closure(lambda, p);
    if (!mu.is_zero()) continue;
    out[g] += dim;
  }
  return out;
}

MZeroElt act_group_algebra(const AffineWeylGroup& G, const MZeroElt& c, const GroupAlgebraElt& x) {
  MZeroElt out;
  for (const auto& [w, k] : c) {
    for (const auto& [a, n] : x) {
      int stripped = 0;
      AffineElement y = G.fW_representative(G.mult(w, a), &stripped);
      add(out, y, (stripped % 2 ? -1 : 1) * k * n);
    }
  }
  return out;
}

MZeroElt tensor_translate(const AffineWeylGroup& G, const MZeroElt& c, const WeightMultiset& m, int p) {
  return act_group_algebra(G, c, c_of_module(G, m, p));
}

std::vector<Weight> alcove_weights(const AffineWeylGroup& G, int p) { return G.fundamental_alcove_weights(p); }

std::map<Weight, std::int64_t> fusion_row(const AffineWeylGroup& G, const Weight& lambda, const Weight& mu, int p) {
  check_in_alcove(G, lambda, p);
  check_in_alcove(G, mu, p);
  // Brauer-Klimyk, then fold each Weyl character back into the alcove.
  Characters chars(G.datum());
  std::map<Weight, std::int64_t> out;
  for (const auto& [eta, k] : chars.tensor_decompose(lambda, mu)) {
    auto [g, nu] = G.reduce_to_closure(eta, p);
    if (!G.in_fundamental_alcove(nu, p)) continue;
    out[nu] += (g.length() % 2 ? -k : k);
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  for (const auto& [nu, k] : out)
    if (k < 0) throw DataError("negative fusion coefficient at " + nu.to_string());
  return out;
}

std::int64_t fusion_multiplicity(const AffineWeylGroup& G, const Weight& lambda, const Weight& mu, const Weight& nu,
                                 int p) {
  check_in_alcove(G, nu, p);
  auto row = fusion_row(G, lambda, mu, p);
  auto it = row.find(nu);
  return it == row.end() ? 0 : it->second;
}

std::int64_t summand_multiplicity(const AffineWeylGroup& G, const MZeroElt& c, const Weight& lambda, int p) {
  check_in_alcove(G, lambda, p);
  if (!lambda.is_zero()) return 0;
  std::int64_t total = 0;
  for (const auto& [w, k] : c) total += (w.length() % 2 ? -k : k);
  return total;
}

Tri leq_T(const CellPartition& P, const AffineElement& w, const AffineElement& y) { return leq_R(P, w, y); }

}  // namespace hecke_cells
