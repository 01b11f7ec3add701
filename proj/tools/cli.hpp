#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hecke_cells/cells.hpp"

namespace hecke_cells::cli {

enum ExitCode { kOk = 0, kUsage = 2, kUnsupported = 3, kData = 4 };

// argv without the program name
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// default (length bound, margin) for cell computations in a type
std::pair<int, int> default_bounds(const CartanType& t);

// Dominant-chamber alcove picture of a rank-2 partition; one polygon per
// fW element in the partition, filled by cell id.
std::string render_cell_diagram(const CellPartition& P, int p);

}  // namespace hecke_cells::cli
