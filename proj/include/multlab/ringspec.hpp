#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "multlab/localalg.hpp"

namespace multlab {

// Text format, one directive per line, '#' starts a comment:
//   field <p>          (default 101)
//   vars <name>...     (required, once)
//   rel <polynomial>   (any number, after vars)
//   cap <degree>       (default 12)
struct RingSpec {
  std::uint32_t p = 101;
  std::vector<std::string> vars;
  std::vector<std::string> relations;
  int cap = kDefaultDegreeCap;

  RingPresentation presentation() const;
  FiniteLocalAlgebra build() const;
  // Canonical text form, parsed back to the same spec.
  std::string to_text() const;
};

// Throws RingSpecError with 1-based line and column.
RingSpec parse_ring_spec(std::string_view text);
// Throws Error when the file cannot be read.
RingSpec load_ring_spec(const std::string& path);

}  // namespace multlab
