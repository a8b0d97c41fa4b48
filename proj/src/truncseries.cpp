#include "multlab/truncseries.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "multlab/errors.hpp"

namespace multlab {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw SeriesOverflow("series coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw SeriesOverflow("series coefficient overflow");
  return r;
}

std::string term_string(std::int64_t c, int i, bool first) {
  std::string out;
  std::int64_t a = c < 0 ? -c : c;
  if (first)
    out = c < 0 ? "-" : "";
  else
    out = c < 0 ? " - " : " + ";
  if (i == 0 || a != 1) out += std::to_string(a);
  if (i >= 1) out += "t";
  if (i >= 2) out += "^" + std::to_string(i);
  return out;
}

}  // namespace

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = checked_add(r[i + j], checked_mul(a[i], b[j]));
  poly_trim(r);
  return r;
}

IntPoly poly_add(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = checked_add(r[i], b[i]);
  poly_trim(r);
  return r;
}

IntPoly poly_pow(const IntPoly& a, int e) {
  IntPoly r{1};
  for (int i = 0; i < e; ++i) r = poly_mul(r, a);
  return r;
}

void poly_trim(IntPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::int64_t poly_eval(const IntPoly& a, std::int64_t t) {
  std::int64_t r = 0;
  for (std::size_t i = a.size(); i-- > 0;) r = checked_add(checked_mul(r, t), a[i]);
  return r;
}

std::optional<IntPoly> poly_div_one_plus_t(const IntPoly& a) {
  IntPoly p = a;
  poly_trim(p);
  if (p.empty()) return IntPoly{};
  // Synthetic division by (t + 1), from the top coefficient down.
  std::size_t n = p.size() - 1;
  if (n == 0) return std::nullopt;
  IntPoly q(n, 0);
  std::int64_t carry = 0;
  for (std::size_t i = n; i >= 1; --i) {
    carry = checked_add(p[i], -carry);
    q[i - 1] = carry;
  }
  if (checked_add(p[0], -carry) != 0) return std::nullopt;
  return q;
}

std::string poly_to_string(const IntPoly& a) {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    out += term_string(a[i], static_cast<int>(i), out.empty());
  }
  return out.empty() ? "0" : out;
}

TruncSeries::TruncSeries(int cutoff) : c_(static_cast<std::size_t>(cutoff) + 1, 0) {}

TruncSeries::TruncSeries(IntPoly coeffs, int cutoff) : c_(std::move(coeffs)) {
  c_.resize(static_cast<std::size_t>(cutoff) + 1, 0);
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
  int D = std::min(cutoff(), o.cutoff());
  TruncSeries r(D);
  for (int i = 0; i <= D; ++i) r[i] = checked_add(c_[i], o[i]);
  return r;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
  int D = std::min(cutoff(), o.cutoff());
  TruncSeries r(D);
  for (int i = 0; i <= D; ++i) r[i] = checked_add(c_[i], checked_mul(-1, o[i]));
  return r;
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
  int D = std::min(cutoff(), o.cutoff());
  TruncSeries r(D);
  for (int i = 0; i <= D; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; i + j <= D; ++j) r[i + j] = checked_add(r[i + j], checked_mul(c_[i], o[j]));
  }
  return r;
}

TruncSeries TruncSeries::inverse() const {
  if (c_[0] != 1 && c_[0] != -1)
    throw Error("series inverse needs a constant term of 1 or -1");
  const int D = cutoff();
  TruncSeries r(D);
  const std::int64_t u = c_[0];  // u^{-1} = u
  r[0] = u;
  for (int i = 1; i <= D; ++i) {
    std::int64_t s = 0;
    for (int j = 1; j <= i; ++j) s = checked_add(s, checked_mul(c_[j], r[i - j]));
    r[i] = checked_mul(-u, s);
  }
  return r;
}

TruncSeries TruncSeries::negate_variable() const {
  TruncSeries r = *this;
  for (int i = 1; i <= cutoff(); i += 2) r[i] = -r[i];
  return r;
}

TruncSeries TruncSeries::truncated(int cutoff) const {
  return TruncSeries(IntPoly(c_.begin(), c_.begin() + std::min<std::size_t>(c_.size(), cutoff + 1)),
                     cutoff);
}

bool TruncSeries::is_one() const {
  if (c_[0] != 1) return false;
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

std::string TruncSeries::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(c_[i]);
  }
  return out;
}

std::string RationalCandidate::to_string() const {
  std::string num = poly_to_string(numerator);
  if (denominator.size() <= 1) return num;
  if (numerator.size() > 1) num = "(" + num + ")";
  return num + "/(" + poly_to_string(denominator) + ")";
}

std::optional<RationalCandidate> rational_candidate(const TruncSeries& s, int max_total_degree) {
  using boost::multiprecision::cpp_rational;
  const int C = s.cutoff();
  for (int total = 0; total <= max_total_degree; ++total)
    for (int q = 0; q <= total; ++q) {
      const int r = total - q;
      // Equations (s * D)_i = 0 for r < i <= C; need q to solve and 2 to spare.
      if (C - r < q + 2) continue;
      std::vector<std::vector<cpp_rational>> A;
      for (int i = r + 1; i <= r + q; ++i) {
        std::vector<cpp_rational> row(q + 1);
        for (int j = 1; j <= q; ++j) row[j - 1] = i - j >= 0 ? s[i - j] : 0;
        row[q] = -cpp_rational(s[i]);
        A.push_back(std::move(row));
      }
      // Gauss-Jordan on the q x q system.
      bool singular = false;
      for (int c = 0; c < q && !singular; ++c) {
        int piv = -1;
        for (int i = c; i < q; ++i)
          if (A[i][c] != 0) {
            piv = i;
            break;
          }
        if (piv < 0) {
          singular = true;
          break;
        }
        std::swap(A[piv], A[c]);
        cpp_rational inv = 1 / A[c][c];
        for (auto& x : A[c]) x *= inv;
        for (int i = 0; i < q; ++i)
          if (i != c && A[i][c] != 0) {
            cpp_rational f = A[i][c];
            for (int j = c; j <= q; ++j) A[i][j] -= f * A[c][j];
          }
      }
      if (singular) continue;
      IntPoly D{1};
      bool integral = true;
      for (int j = 0; j < q; ++j) {
        const cpp_rational& v = A[j][q];
        if (denominator(v) != 1) {
          integral = false;
          break;
        }
        D.push_back(static_cast<std::int64_t>(numerator(v)));
      }
      if (!integral) continue;
      if (q > 0 && D.back() == 0) continue;
      TruncSeries prod = s * TruncSeries(D, C);
      bool ok = true;
      for (int i = r + 1; i <= C; ++i)
        if (prod[i] != 0) ok = false;
      if (!ok) continue;
      IntPoly N(prod.coeffs().begin(), prod.coeffs().begin() + r + 1);
      poly_trim(N);
      if (r > 0 && (N.empty() || static_cast<int>(N.size()) - 1 != r)) continue;
      return RationalCandidate{N, D};
    }
  return std::nullopt;
}

}  // namespace multlab
