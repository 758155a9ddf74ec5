#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace esch {

// Error codes for everything that can go wrong at the math layer.
enum class errc {
  overflow,
  no_match,
  cap_exceeded,
  unsupported_factor,
  no_such_factor,
  unsupported_group,
  unsupported_operation,
  zero_modulus,
  not_free,
  not_positively_curved,
  parse_error,
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

using i64 = long long;

// Checked 64-bit arithmetic.  Inputs stay small (exponents and denominators
// up to 1e6 per the contract); anything that overflows is a bug or misuse,
// so we fail loudly instead of wrapping.
inline i64 add_i64(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw error(errc::overflow, "integer overflow in addition");
  return r;
}

inline i64 sub_i64(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r)) throw error(errc::overflow, "integer overflow in subtraction");
  return r;
}

inline i64 mul_i64(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw error(errc::overflow, "integer overflow in multiplication");
  return r;
}

inline i64 gcd_i64(i64 a, i64 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline i64 lcm_i64(i64 a, i64 b) {
  if (a == 0 || b == 0) return 0;
  return mul_i64(a / gcd_i64(a, b), b < 0 ? -b : b);
}

// Extended Euclid: returns g = gcd(a,b) >= 0 and (s,t) with s*a + t*b = g.
struct egcd_result {
  i64 g, s, t;
};

inline egcd_result egcd(i64 a, i64 b) {
  i64 old_r = a, r = b;
  i64 old_s = 1, s = 0;
  i64 old_t = 0, t = 1;
  while (r != 0) {
    i64 q = old_r / r;
    i64 tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - mul_i64(q, s);
    old_s = s;
    s = tmp;
    tmp = old_t - mul_i64(q, t);
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

}  // namespace esch
