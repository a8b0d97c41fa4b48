#include "multlab/corpus.hpp"

#include "multlab/errors.hpp"

namespace multlab {

const std::vector<CorpusRing>& corpus() {
  static const std::vector<CorpusRing> rings = {
      {"hyp2", "# k[x]/(x^2)\nfield 101\nvars x\nrel x^2\n"},
      {"hyp3", "# k[x]/(x^3)\nfield 101\nvars x\nrel x^3\n"},
      {"ci22", "# complete intersection of two squares\nfield 101\nvars y z\nrel y^2\nrel z^2\n"},
      {"msq2", "# square of the maximal ideal is zero, edim 2\nfield 101\nvars x y\nrel x^2\nrel x*y\nrel y^2\n"},
      {"gor5", "# Gorenstein of minimal multiplicity, e = 5\nfield 101\nvars x y z\nrel x*y\nrel x*z\nrel y*z\nrel x^2-y^2\nrel x^2-z^2\n"},
      {"fiber", "# fiber product k[x]/(x^2) x_k k[y,z]/(y^2,z^2)\nfield 101\nvars x y z\nrel x^2\nrel y^2\nrel z^2\nrel x*y\nrel x*z\n"},
      {"ci_alt", "# complete intersection xy, x^2 - y^2\nfield 101\nvars x y\nrel x*y\nrel x^2-y^2\n"},
      {"ci222", "# complete intersection of three squares\nfield 101\nvars x y z\nrel x^2\nrel y^2\nrel z^2\n"},
      {"ci_nonhom", "# complete intersection with a non-homogeneous relation\nfield 101\nvars x y\nrel x^2-y^3\nrel x*y\n"},
      {"ci23", "# complete intersection x^2, y^3\nfield 101\nvars x y\nrel x^2\nrel y^3\n"},
      {"golod_xy", "# Golod, not of minimal multiplicity\nfield 101\nvars x y\nrel x^2\nrel x*y\nrel y^3\n"},
      {"x2y2z2xy", "# Koszul, neither complete intersection nor Golod\nfield 101\nvars x y z\nrel x^2\nrel y^2\nrel z^2\nrel x*y\n"},
      {"msq3", "# square of the maximal ideal is zero, edim 3\nfield 101\nvars x y z\nrel x^2\nrel y^2\nrel z^2\nrel x*y\nrel x*z\nrel y*z\n"},
      {"ci33", "# complete intersection of two cubes\nfield 101\nvars x y\nrel x^3\nrel y^3\n"},
  };
  return rings;
}

const CorpusRing& corpus_ring(const std::string& name) {
  for (const auto& r : corpus())
    if (r.name == name) return r;
  throw Error("unknown corpus ring '" + name + "'");
}

}  // namespace multlab
