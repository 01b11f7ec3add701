#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "hecke_cells/cells.hpp"
#include "hecke_cells/hecke.hpp"

namespace hecke_cells {

// Elements of the antispherical module at v = 1 in the basis N°_w, w in fW.
// Tilting classes, wall-crossings and tensor translates live here.
using MZeroElt = std::map<AffineElement, std::int64_t>;

// Grothendieck class of T(w ._p 0): the canonical element at v = 1. Its
// coefficients are Weyl-filtration multiplicities.
MZeroElt tilting_class(const AffineElement& w, const AntisphericalBasis& basis);

// c * (s + 1)
MZeroElt wall_crossing(const AffineWeylGroup& G, const MZeroElt& c, int g);

// sum over weights of m lying in W ._p 0 of dim(M_lambda) x, with x ._p 0 = lambda
GroupAlgebraElt c_of_module(const AffineWeylGroup& G, const WeightMultiset& m, int p);

// N°_w . x = (-1)^{l(u)} N°_y where wx = u y, u finite, y in fW
MZeroElt act_group_algebra(const AffineWeylGroup& G, const MZeroElt& c, const GroupAlgebraElt& x);
MZeroElt tensor_translate(const AffineWeylGroup& G, const MZeroElt& c, const WeightMultiset& m, int p);

// dominant weights in the interior of the fundamental p-alcove
std::vector<Weight> alcove_weights(const AffineWeylGroup& G, int p);

// Multiplicity of T(nu) in T(lambda) (x) T(mu) for lambda, mu, nu in C_p.
std::int64_t fusion_multiplicity(const AffineWeylGroup& G, const Weight& lambda, const Weight& mu,
                                 const Weight& nu, int p);
// all nonzero nu
std::map<Weight, std::int64_t> fusion_row(const AffineWeylGroup& G, const Weight& lambda, const Weight& mu, int p);

// Multiplicity of T(lambda) as a summand of a principal-block tilting module
// with class c. Only lambda = 0 lies in the principal block.
std::int64_t summand_multiplicity(const AffineWeylGroup& G, const MZeroElt& c, const Weight& lambda, int p);

// weight preorder on alcoves, through the cell preorder of the partition's basis
Tri leq_T(const CellPartition& P, const AffineElement& w, const AffineElement& y);

}  // namespace hecke_cells
