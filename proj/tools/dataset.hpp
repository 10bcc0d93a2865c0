#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <vector>

#include "varbelief/estimation.hpp"

namespace vbcli {

// CSV exchange format for update observations. One row per observation with
// 3|S| columns headed p_<state>, f_<state>, q_<state>. A '#' comment line
// above the header records the generator provenance (seed and parameters).

struct DatasetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DatasetMeta {
  std::uint64_t seed = 0;
  double alpha = 1.0;
  double beta = 1.0;
  std::size_t n = 0;
  double noise = 0.0;
};

void write_dataset(std::ostream& out, std::span<const varbelief::UpdateObservation> observations,
                   const DatasetMeta& meta);

// Reconstructs the state space from the header. p_ and q_ columns are
// validated (sum to 1 within 1e-9) and renormalized; f_ columns are a
// likelihood slice, not a distribution, and are taken as-is.
std::vector<varbelief::UpdateObservation> read_dataset(std::istream& in);

}  // namespace vbcli
