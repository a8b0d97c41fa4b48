#pragma once

#include <string>
#include <vector>

#include "multlab/corpus.hpp"
#include "multlab/localalg.hpp"
#include "multlab/quadratic.hpp"
#include "multlab/ringspec.hpp"

namespace testing_util {

using namespace multlab;

struct Ring {
  RingPresentation P;
  FiniteLocalAlgebra R;
};

inline Ring make_ring(const std::vector<std::string>& vars, const std::vector<std::string>& rels,
                      std::uint32_t p = 101, int cap = kDefaultDegreeCap) {
  RingPresentation P = make_presentation(p, vars, rels);
  FiniteLocalAlgebra R = build_finite_algebra(P, cap);
  return Ring{P, std::move(R)};
}

inline Ring corpus_ring_built(const std::string& name) {
  RingSpec s = corpus_ring(name).spec();
  RingPresentation P = s.presentation();
  FiniteLocalAlgebra R = build_finite_algebra(P, s.cap);
  return Ring{P, std::move(R)};
}

inline QuadraticPresentation quad(const std::vector<std::string>& vars,
                                  const std::vector<std::string>& rels, std::uint32_t p = 101) {
  PrimeField F(p);
  std::vector<TensorElement> ts;
  for (const auto& r : rels) ts.push_back(parse_tensor(r, vars, F));
  return QuadraticPresentation::from_tensors(F, vars.size(), ts, vars);
}

inline std::vector<long long> coeffs(const TruncSeries& s) {
  return std::vector<long long>(s.coeffs().begin(), s.coeffs().end());
}

}  // namespace testing_util
