#pragma once

#include <string>
#include <vector>

#include "multlab/ringspec.hpp"

namespace multlab {

struct CorpusRing {
  std::string name;
  std::string text;  // ring-spec file contents, identical to rings/<name>.ring
  RingSpec spec() const { return parse_ring_spec(text); }
};

// Bundled rings used by the acceptance suite and the `corpus` command.
const std::vector<CorpusRing>& corpus();
// Throws Error for an unknown name.
const CorpusRing& corpus_ring(const std::string& name);

}  // namespace multlab
