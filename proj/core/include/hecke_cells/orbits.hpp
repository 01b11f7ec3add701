#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "hecke_cells/cells.hpp"

namespace hecke_cells {

struct NilpotentOrbit {
  std::vector<int> levi;        // I, 0-based simple roots
  std::vector<int> parabolic;   // J inside I
  std::vector<int> diagram;     // weighted Dynkin diagram (dominant h)
  std::vector<int> partition;   // type A only, decreasing
  int dimension = 0;
  std::string name;             // "regular", "subregular", ..., or a partition in type A

  bool is_regular(const RootDatum& d) const { return dimension == 2 * d.num_positive_roots(); }
  bool is_zero() const { return dimension == 0; }
  std::string bala_carter() const;  // "I={0,1};J={1}"
};

// Orbits by decreasing dimension, ties by diagram.
std::vector<NilpotentOrbit> enumerate_orbits(const RootDatum& d);

// leq[a][b]: orbit a lies in the closure of orbit b. Available in type A
// (dominance of partitions) and in rank <= 2 (a chain); nullopt otherwise.
std::optional<std::vector<std::vector<char>>> closure_order(const RootDatum& d,
                                                            const std::vector<NilpotentOrbit>& orbits);

class OrbitTable {
 public:
  explicit OrbitTable(const RootDatum& d);

  const RootDatum& datum() const { return d_; }
  const std::vector<NilpotentOrbit>& orbits() const { return orbits_; }
  bool has_order() const { return order_.has_value(); }
  // throws UnsupportedError without a closure order
  bool leq(int a, int b) const;
  std::optional<int> find(const std::string& name) const;
  int regular() const { return 0; }
  int zero() const { return static_cast<int>(orbits_.size()) - 1; }
  // orbits in the closure of a, by decreasing dimension
  std::vector<int> closure_chain(int a) const;

  nlohmann::json to_json() const;

 private:
  RootDatum d_;
  std::vector<NilpotentOrbit> orbits_;
  std::optional<std::vector<std::vector<char>>> order_;
};

// The alcove of (p-1)rho, independent of p > h.
AffineElement c0_element(const AffineWeylGroup& G);

struct CellOrbitMap {
  std::map<int, int> orbit_of;  // trusted cell id -> orbit index
  std::string provenance;
  bool complete = false;        // bijection between trusted cells and orbits
};

// {e} -> regular, the cell of c0 -> zero, the cell just below {e} ->
// subregular. In rank <= 2, when the trusted cells form a chain as long as
// the closure chain, cells are matched to orbits by position.
CellOrbitMap cell_to_orbit(const CellPartition& P, const OrbitTable& T);

enum class HumphreysMode { Absolute, Relative };

struct Prediction {
  std::string type;
  int p = 0;
  Weight lambda;
  HumphreysMode mode = HumphreysMode::Absolute;
  std::string w_word;             // alcove of lambda
  std::optional<int> cell;
  std::optional<int> orbit;       // index into the orbit table
  bool empty = false;             // relative mode off fWf
  std::string orbit_name;         // "empty"/"unknown" when no orbit
  std::vector<std::string> closure_chain;
  std::string status;             // "theorem", "conjectural", "unknown"
  std::string basis;

  nlohmann::json to_json(const OrbitTable& T) const;
};

// Predicted support variety of T(lambda). Throws UnsupportedError unless p > h,
// InputError for non-dominant lambda or, in relative mode, lambda off W ._p 0.
Prediction humphreys_predict(const CellPartition& P, const OrbitTable& T, const CellOrbitMap& M,
                             const Weight& lambda, int p, HumphreysMode mode);

}  // namespace hecke_cells
