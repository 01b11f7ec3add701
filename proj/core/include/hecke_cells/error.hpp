#pragma once

#include <stdexcept>
#include <string>

namespace hecke_cells {

// Malformed input: bad type strings, weights of the wrong rank, bad words.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Request outside the supported regime (unsupported type, p <= h, ...).
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Inconsistent or missing data: basis tables, truncation boundaries.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hecke_cells
