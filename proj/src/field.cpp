#include "multlab/field.hpp"

#include "multlab/errors.hpp"

namespace multlab {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31)) throw Error("field modulus " + std::to_string(p) + " is too large");
  if (!is_prime(p)) throw Error("field modulus " + std::to_string(p) + " is not prime");
}

Elem PrimeField::inv(Elem a) const {
  if (a == 0) throw Error("division by zero in GF(" + std::to_string(p_) + ")");
  long long t = 0, new_t = 1;
  long long r = p_, new_r = a;
  while (new_r != 0) {
    long long q = r / new_r;
    long long tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<Elem>(t);
}

Elem PrimeField::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

long long PrimeField::symmetric(Elem a) const {
  if (p_ == 2) return a;
  return a > p_ / 2 ? static_cast<long long>(a) - p_ : static_cast<long long>(a);
}

}  // namespace multlab
