#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace multlab {

// Integer polynomial, coefficient of t^i at index i.
using IntPoly = std::vector<std::int64_t>;

IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
IntPoly poly_add(const IntPoly& a, const IntPoly& b);
IntPoly poly_pow(const IntPoly& a, int e);
void poly_trim(IntPoly& a);
std::int64_t poly_eval(const IntPoly& a, std::int64_t t);
// Exact division by (1 + t); returns nullopt when (1 + t) does not divide a.
std::optional<IntPoly> poly_div_one_plus_t(const IntPoly& a);
std::string poly_to_string(const IntPoly& a);

// Power series c_0 + c_1 t + ... + c_D t^D modulo t^{D+1}.
class TruncSeries {
 public:
  explicit TruncSeries(int cutoff = 0);
  TruncSeries(IntPoly coeffs, int cutoff);
  static TruncSeries one(int cutoff) { return TruncSeries(IntPoly{1}, cutoff); }

  int cutoff() const { return static_cast<int>(c_.size()) - 1; }
  std::int64_t operator[](int i) const { return c_[i]; }
  std::int64_t& operator[](int i) { return c_[i]; }
  const IntPoly& coeffs() const { return c_; }

  TruncSeries operator+(const TruncSeries& o) const;
  TruncSeries operator-(const TruncSeries& o) const;
  TruncSeries operator*(const TruncSeries& o) const;
  TruncSeries inverse() const;
  // t -> -t
  TruncSeries negate_variable() const;
  TruncSeries truncated(int cutoff) const;
  bool is_one() const;

  bool operator==(const TruncSeries& o) const { return c_ == o.c_; }
  std::string to_string() const;

 private:
  IntPoly c_;
};

// Smallest numerator/denominator pair N/D (D(0) = 1, integer coefficients)
// reproducing the series with at least two spare coefficients. Heuristic,
// for reporting only.
struct RationalCandidate {
  IntPoly numerator;
  IntPoly denominator;
  std::string to_string() const;
};
std::optional<RationalCandidate> rational_candidate(const TruncSeries& s, int max_total_degree = 6);

}  // namespace multlab
