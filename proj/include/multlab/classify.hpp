#pragma once

#include <cstddef>
#include <string>
#include <utility>

#include "multlab/localalg.hpp"
#include "multlab/truncseries.hpp"

namespace multlab {

struct ClassificationReport {
  std::size_t length = 0;
  std::size_t multiplicity = 0;   // e(R) as the length
  std::int64_t h_at_one = 0;      // e(R) as h(1) with H_R(t) = h(t)
  std::size_t edim = 0;
  std::size_t codim = 0;          // = edim, Krull dimension is 0
  std::size_t min_generators = 0;
  std::size_t socle_dim = 0;
  int top_degree = 0;
  bool is_ci = false;
  bool is_gorenstein = false;
  bool is_cm = true;
  bool min_mult_cm = false;  // e = codim + 1
  bool min_mult_g = false;   // Gorenstein, e >= 3 and e = codim + 2
  bool min_mult_ci = false;  // e = 2^codim
  bool golod_witness = false;
  bool koszul_witness = false;
  bool froberg = false;
  int cutoff = 0;

  // e >= codim + 1; Gorenstein with e >= 3 gives e >= codim + 2; CI gives e >= 2^codim.
  bool abhyankar_bound() const { return multiplicity >= codim + 1; }
  bool gorenstein_bound() const { return !(is_gorenstein && multiplicity >= 3) || multiplicity >= codim + 2; }
  bool ci_bound() const { return !is_ci || multiplicity >= (std::size_t{1} << codim); }
  bool bounds_hold() const { return abhyankar_bound() && gorenstein_bound() && ci_bound(); }
};

ClassificationReport classify(const FiniteLocalAlgebra& R, int cutoff);

// Flags without any resolution: length, codim, generators, socle and the
// three minimal-multiplicity tests.
ClassificationReport classify_basic(const FiniteLocalAlgebra& R);

enum class SeriesSource { CompleteIntersection, Golod };
std::string to_string(SeriesSource s);

struct Lemma33Report {
  SeriesSource source;
  IntPoly d;  // D(t) with P^R_k(t) D(t) = (1 + t)^n to the cutoff
  int q;      // D = (1 + t)^q g, g(-1) != 0
  IntPoly g;
  std::int64_t g_at_minus_one;
  std::size_t n;
  std::size_t multiplicity;
  bool ld_zero;  // hypothesis: k is Koszul to the cutoff
  bool conclusion() const {
    return q == static_cast<int>(n) && g_at_minus_one == static_cast<std::int64_t>(multiplicity);
  }
  bool holds() const { return !ld_zero || conclusion(); }
};
// Throws NoCandidateD when neither closed form matches the computed P^R_k.
Lemma33Report lemma33_check_d0(const FiniteLocalAlgebra& R, int cutoff);

// D = (1 + t)^q g with g(-1) != 0; D must be nonzero.
std::pair<int, IntPoly> split_one_plus_t(const IntPoly& d);

enum class Theorem3Case { CompleteIntersection, CMGolod };
std::string to_string(Theorem3Case c);

struct Theorem3Report {
  Theorem3Case which;
  int cutoff;
  bool stmt1;  // Koszul: tangent cone quadratic with diagonal Betti table
  bool stmt2;  // Froberg relation
  bool stmt3;  // minimal multiplicity for the class
  bool stmt4;  // ld k = 0 certified to the cutoff
  bool consistent() const { return stmt1 == stmt2 && stmt2 == stmt3 && stmt3 == stmt4; }
};
// Throws Inapplicable unless R is a complete intersection or witnessed Golod.
Theorem3Report theorem3_check(const FiniteLocalAlgebra& R, int cutoff);

// For M with ld M = 0 and P_M = u / g: g(-1) != 0 and e(M) / e(R) = u(-1) / g(-1).
struct MultiplicityRatioReport {
  std::string module_label;
  bool ld_zero;
  bool zero_module;
  bool numerator_polynomial;  // P_M D is a polynomial within the cutoff
  IntPoly u, g;               // after cancelling common (1 + t) factors
  std::int64_t u_at_minus_one, g_at_minus_one;
  std::size_t module_length, ring_length;
  bool holds() const;
};
// D(t) comes from the closed form chosen as in lemma33_check_d0.
MultiplicityRatioReport multiplicity_ratio_residue(const FiniteLocalAlgebra& R, int cutoff);
MultiplicityRatioReport multiplicity_ratio_power(const FiniteLocalAlgebra& R, int power, int cutoff);

}  // namespace multlab
