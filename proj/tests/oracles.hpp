#pragma once

// Independent reference computations used by the unit and acceptance tests.
// None of them call the routine they are used to check.

#include <map>
#include <set>
#include <vector>

#include "hecke_cells/hecke.hpp"
#include "hecke_cells/tilting.hpp"

namespace oracle {

using namespace hecke_cells;

// Word length by breadth-first search in the Cayley graph of W.
std::map<AffineElement, int> bfs_lengths(const AffineWeylGroup& G, int depth);

// All products of subwords of a reduced word of w.
std::set<AffineElement> subword_closure(const AffineWeylGroup& G, const AffineElement& w);

// Kazhdan-Lusztig element of w from bar-invariance: expand the bar images of
// the standard basis through inverse generators and solve the unitriangular
// system top-down.
HeckeElt kl_by_bar_solve(const AffineWeylGroup& G, const AffineElement& w);

// [V(lambda) (x) V(mu) : V(eta)] for all eta, by multiplying full characters
// and peeling off highest weights.
std::map<Weight, std::int64_t> tensor_by_peeling(const RootDatum& d, const Weight& lambda, const Weight& mu);

// Alternating sum over fW shells of K_{lambda,mu}^{w ._p nu}, enlarging the
// shell until two successive shells contribute nothing.
std::int64_t fusion_alternating_sum(const AffineWeylGroup& G, const Weight& lambda, const Weight& mu,
                                    const Weight& nu, int p);

// pr_0 of (sum_y c_y M(y ._p 0)) (x) M at the level of Weyl characters.
MZeroElt translate_by_characters(const AffineWeylGroup& G, const MZeroElt& c, const WeightMultiset& m, int p);

// su(2) level p-2 fusion rule
int a1_fusion(int a, int b, int c, int p);

int partition_count(int n);

}  // namespace oracle
