#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <array>
#include <string>
#include <utility>

#include "thue/errors.hpp"

namespace thue {

using Int = mpz_class;

inline constexpr unsigned kMinPrecBits = 64;
inline constexpr unsigned kDefaultPrecBits = 256;
inline constexpr unsigned kMaxPrecBits = 16384;

unsigned clamp_prec(unsigned prec_bits);

// Arbitrary-precision real. Thin RAII wrapper over mpfr_t; the value is
// immutable after construction except through assignment. Round-to-nearest
// convenience operators are provided for midpoint/report arithmetic; all
// certified computation goes through Interval.
class Real {
 public:
  explicit Real(unsigned prec_bits = kDefaultPrecBits);
  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  static Real of(long v, unsigned prec_bits);
  static Real of(const Int& v, unsigned prec_bits);
  static Real of_double(double v, unsigned prec_bits);
  // Parses a decimal string, rounding in the given direction.
  static Real from_decimal(const std::string& s, unsigned prec_bits,
                           mpfr_rnd_t rnd = MPFR_RNDN);

  unsigned prec() const { return static_cast<unsigned>(mpfr_get_prec(x_)); }
  mpfr_srcptr get() const { return x_; }
  mpfr_ptr raw() { return x_; }

  int sgn() const { return mpfr_sgn(x_); }
  bool is_zero() const { return mpfr_zero_p(x_) != 0; }
  double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
  // Exact dyadic decomposition: value = num * 2^exp (value must be finite).
  std::pair<Int, long> to_dyadic() const;
  std::string str(int digits) const;

  friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) < 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) <= 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) > 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) >= 0; }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) == 0; }

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator-(const Real& a);

  Real abs() const;
  Real mul_2si(long e) const;  // exact scaling by 2^e

 private:
  mpfr_t x_;
};

// Closed interval [lo, hi] with certified directed-rounding endpoints.
class Interval {
 public:
  Interval() : lo_(kMinPrecBits), hi_(kMinPrecBits) {}  // [0, 0]
  Interval(Real lo, Real hi);

  static Interval exact(const Real& v) { return Interval(v, v); }
  static Interval exact(const Real& v, unsigned prec_bits);  // re-round at prec_bits
  static Interval exact(long v, unsigned prec_bits);
  static Interval exact(const Int& v, unsigned prec_bits);
  // Tight enclosure of a decimal literal (used for the paper's constants).
  static Interval from_decimal(const std::string& s, unsigned prec_bits);
  static Interval centered(const Real& mid, const Real& rad);
  static Interval hull(const Interval& a, const Interval& b);

  const Real& lo() const { return lo_; }
  const Real& hi() const { return hi_; }
  unsigned prec() const { return lo_.prec(); }

  Real mid() const;
  Real rad() const;    // upper bound on max(|mid-lo|, |hi-mid|)
  Real width() const;  // upper bound on hi-lo
  bool contains_zero() const { return lo_.sgn() <= 0 && hi_.sgn() >= 0; }
  // +1 certainly positive, -1 certainly negative, 0 straddles zero.
  int sign() const;
  bool certainly_lt(const Interval& o) const { return hi_ < o.lo_; }
  bool certainly_le(const Interval& o) const { return hi_ <= o.lo_; }
  bool contains(const Real& v) const { return lo_ <= v && v <= hi_; }

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);  // throws DivisionNearZero
  friend Interval operator-(const Interval& a);

  Interval abs() const;
  Interval sqr() const;
  Interval sqrt() const;   // throws SqrtOfNegative unless certainly nonnegative
  Interval exp() const;
  Interval log() const;    // throws LogOfNonPositive
  Interval sinh() const;
  Interval asinh() const;
  Interval pow_int(unsigned n) const;
  Interval root_n(unsigned n) const;  // n-th root, requires certainly nonnegative
  Interval mul_2si(long e) const;

 private:
  Real lo_, hi_;
};

// Adaptive-precision evaluation: re-evaluates `fn` (working precision ->
// Interval) at doubling precision until the enclosure radius is <= abs_err,
// then returns the midpoint. Indeterminate interval conditions (division or
// log over an interval straddling zero) are retried and rethrown once the
// precision ceiling is hit.
template <class Fn>
Real eval_to_error(Fn&& fn, const Real& abs_err,
                   unsigned start_prec = kDefaultPrecBits,
                   unsigned max_prec = kMaxPrecBits) {
  unsigned p = clamp_prec(start_prec);
  for (;;) {
    bool last = p >= max_prec;
    try {
      Interval v = fn(p);
      if (v.rad() <= abs_err) return v.mid();
    } catch (const Indeterminate&) {
      if (last) throw;
    }
    if (last) break;
    p = p * 2 <= max_prec ? p * 2 : max_prec;
  }
  throw PrecisionExhausted("certificate still wider than requested bound at " +
                           std::to_string(kMaxPrecBits) + " bits");
}

// Three certified real roots of an integer cubic, ascending.
struct RootTriple {
  std::array<Real, 3> roots;        // interval midpoints
  std::array<Real, 3> half_widths;  // certified radii (0 for exact roots)
  unsigned prec_bits = kDefaultPrecBits;

  Interval interval(int i) const;
};

// Isolates the three real roots of a x^3 + b x^2 + c x + d, each to certified
// half-width <= 2^(-prec_bits/2) * max(1, |root|). Requires a != 0 and
// positive polynomial discriminant. With check_irreducible set, rejects
// polynomials with a rational root.
RootTriple cubic_real_roots(const Int& a, const Int& b, const Int& c, const Int& d,
                            unsigned prec_bits, bool check_irreducible = false);

// 18abcd + b^2c^2 - 27a^2d^2 - 4ac^3 - 4b^3d (same expression as the binary
// form discriminant).
Int cubic_poly_discriminant(const Int& a, const Int& b, const Int& c, const Int& d);

// Rational root test over divisor pairs of d and a.
bool cubic_has_rational_root(const Int& a, const Int& b, const Int& c, const Int& d);

}  // namespace thue
