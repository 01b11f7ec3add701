#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "hecke_cells/hecke.hpp"

namespace hecke_cells {

enum class Tri { False, True, Unknown };

struct CellEdge {
  int from = 0;       // y
  int to = 0;         // w, appearing in N_y (H_s + v)
  int generator = 0;  // s
  bool operator==(const CellEdge&) const = default;
  auto operator<=>(const CellEdge&) const = default;
};

struct EdgeGraph {
  int length_bound = 0;
  int num_elements = 0;               // elements of length <= length_bound (a prefix of the ball)
  std::vector<CellEdge> edges;        // sorted, deduplicated, targets inside the bound
  std::vector<char> escapes;          // per element: an expansion reached length > bound
};

// Number of worker threads for edge expansion; HECKE_CELLS_THREADS overrides.
int worker_threads();

// Edges y -> w for l(y) <= L. The basis must cover fW up to length L + 1.
EdgeGraph cell_edges(const AntisphericalBasis& basis, int L);

struct CellPartition {
  std::shared_ptr<const FWBall> ball;
  int length_bound = 0;
  int margin = 0;
  int prime = 0;
  std::string provenance;

  std::vector<int> cell_of;                // element index -> cell id
  std::vector<std::vector<int>> cells;     // cell id -> element indices, ascending
  std::vector<char> trusted;               // per cell: meets the inner ball, no escapes there
  std::vector<std::vector<char>> below;    // below[a][b]: cell a <=_R cell b

  const AffineWeylGroup& group() const { return ball->group(); }
  int trusted_length() const { return length_bound - margin; }
  int num_elements() const { return static_cast<int>(cell_of.size()); }
  int num_cells() const { return static_cast<int>(cells.size()); }
  std::vector<int> trusted_cells() const;
  std::optional<int> index(const AffineElement& w) const;  // within the bound
  std::optional<int> cell_id(const AffineElement& w) const;
  // in a trusted cell and of length <= L - margin
  bool trusted_element(const AffineElement& w) const;
  const std::string& word(int element) const { return ball->word(element); }

  nlohmann::json to_json() const;
};

CellPartition right_cells(const AntisphericalBasis& basis, int L, int margin);
// p = 0 convenience overload
CellPartition right_cells(const AffineWeylGroup& G, int L, int margin);
// cell preorder is the reachability closure of an edge graph
CellPartition partition_from_edges(const AntisphericalBasis& basis, const EdgeGraph& graph, int margin);

Tri leq_R(const CellPartition& P, const AffineElement& w, const AffineElement& y);

struct GenerationConstants {
  std::vector<Weight> varpi;  // per simple root
  std::vector<int> k;         // k_alpha
  int k_phi = 1;
  std::vector<Weight> Y0;
  std::vector<AffineElement> Z;
};

GenerationConstants generation_constants(const AffineWeylGroup& G);

struct FWDecomposition {
  Weight lambda;  // in Y+
  AffineElement z;  // in Z
};

// w = t_lambda z
FWDecomposition decompose_fW(const AffineWeylGroup& G, const GenerationConstants& gc, const AffineElement& w);
Weight x_psi(const GenerationConstants& gc, const std::vector<int>& psi);

// least n after which cell(t_{n lambda} w) is constant, within the trusted range
std::optional<int> stabilization_n(const CellPartition& P, const AffineElement& w, const Weight& lambda);
std::optional<int> stabilization_n(const CellPartition& P, const GenerationConstants& gc, const AffineElement& w,
                                   const std::vector<int>& psi);
// maximum of the known n(w, x_Psi) over trusted w and nonempty Psi
int observed_stabilization_max(const CellPartition& P, const GenerationConstants& gc);

struct CellGenerators {
  int A = 0;                              // bound used for the candidate set
  std::vector<AffineElement> candidate;   // cell members t_lambda z with floor(<lambda,a^v>/k_a) <= A
  std::vector<AffineElement> minimal;     // candidate elements not of the form t_mu v', v' another candidate
};

// Throws DataError if some trusted member does not factor as t_mu v with v in K.
CellGenerators cell_generators(const CellPartition& P, const GenerationConstants& gc, int cell);
// t_mu v with mu in Y+
bool factors_through(const AffineWeylGroup& G, const AffineElement& y, const AffineElement& v);

}  // namespace hecke_cells
