#pragma once

#include <cstdint>
#include <string>

namespace multlab {

using Elem = std::uint32_t;

// Arithmetic in GF(p). Elements are stored as representatives in [0, p).
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p = 101);

  std::uint32_t modulus() const { return p_; }

  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Elem inv(Elem a) const;
  Elem from_int(long long v) const;

  // Representative in (-p/2, p/2], used for printing.
  long long symmetric(Elem a) const;

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace multlab
