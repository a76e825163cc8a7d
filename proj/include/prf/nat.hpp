#pragma once

#include <boost/functional/hash.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace prf {

// Unbounded natural number. All arithmetic in this project keeps values >= 0
// by construction: subtraction is only available as monus / distance.
using Nat = boost::multiprecision::cpp_int;

inline Nat nat_monus(const Nat& a, const Nat& b) { return a >= b ? Nat(a - b) : Nat(0); }

inline Nat nat_dist(const Nat& a, const Nat& b) { return a >= b ? Nat(a - b) : Nat(b - a); }

// Floor square root by Newton iteration with floor correction; integer-only.
inline Nat nat_isqrt(const Nat& n) {
  if (n < 2) return n;
  Nat x = Nat(1) << ((msb(n) / 2) + 1);  // initial guess >= isqrt(n)
  for (;;) {
    Nat y = (x + n / x) / 2;
    if (y >= x) break;
    x = y;
  }
  while (x * x > n) --x;       // floor correction
  return x;
}

inline Nat nat_pow2(const Nat& e) {
  if (e > Nat(1000000000)) throw std::overflow_error("pow2 exponent too large: " + e.str());
  return Nat(1) << static_cast<unsigned>(e);
}

// 3^e, used by the B-hierarchy closed forms.
inline Nat nat_pow3(const Nat& e) {
  if (e > Nat(2000000)) throw std::overflow_error("pow3 exponent too large: " + e.str());
  Nat r = 1, b = 3;
  Nat k = e;
  while (k > 0) {
    if ((k & 1) != 0) r *= b;
    k >>= 1;
    if (k > 0) b *= b;
  }
  return r;
}

inline std::uint64_t nat_to_u64(const Nat& n, const char* what) {
  if (n > Nat(UINT64_MAX)) throw std::overflow_error(std::string(what) + " does not fit in 64 bits: " + n.str());
  return n.convert_to<std::uint64_t>();
}

inline std::size_t nat_hash(const Nat& n) { return boost::hash<Nat>()(n); }

}  // namespace prf
