#pragma once

#include <gmpxx.h>

#include <string>

#include "arithjet/errors.hpp"

namespace arithjet {

// An element of Q_p known modulo p^prec (absolute precision).
//
// Nonzero values are stored as unit * p^val with the unit reduced modulo
// p^(prec - val) and coprime to p; val may be negative (bounded
// denominators). Zero-at-precision is the sentinel state val == prec,
// unit == 0: the value is only known to be divisible by p^prec.
//
// Values are immutable after construction; all operations return fresh
// values whose precision is derived from the inputs.
class PadicScalar {
 public:
  PadicScalar() = default;  // unusable placeholder (p == 0)

  static PadicScalar zero(long p, long prec);
  static PadicScalar from_int(long p, long prec, long v);
  static PadicScalar from_mpz(long p, long prec, const mpz_class& v);
  // num/den with den coprime to p after removing p-parts from both.
  static PadicScalar from_rational(long p, long prec, const mpz_class& num,
                                   const mpz_class& den);
  // unit * p^val where unit need not be reduced yet.
  static PadicScalar from_unit_val(long p, long prec, const mpz_class& unit,
                                   long val);

  long p() const { return p_; }
  long prec() const { return prec_; }
  bool valid() const { return p_ != 0; }

  // True when the value is indistinguishable from 0 modulo p^prec.
  bool is_zero() const { return zero_; }
  // Valuation; for the zero state this is the lower bound prec.
  long val() const { return zero_ ? prec_ : val_; }
  const mpz_class& unit() const { return unit_; }
  bool is_unit() const { return !zero_ && val_ == 0; }

  // The integer unit * p^val (requires val >= 0); zero state gives 0.
  mpz_class lift() const;
  // Reduce to a smaller absolute precision.
  PadicScalar at_prec(long prec) const;

  PadicScalar operator-() const;
  PadicScalar operator+(const PadicScalar& o) const;
  PadicScalar operator-(const PadicScalar& o) const;
  PadicScalar operator*(const PadicScalar& o) const;
  PadicScalar mul_int(long c) const;
  // Multiply by an exact integer: only its p-part shifts the window.
  PadicScalar mul_exact(const mpz_class& c) const;

  // Division by p^k. Requires val >= k, checked at the current precision:
  // throws math_error when the valuation is certainly below k and
  // budget_error when the question is undecidable at this precision.
  PadicScalar div_pow_p(long k) const;
  PadicScalar mul_pow_p(long k) const;  // exact; negative k = div_pow_p(-k)

  PadicScalar inv() const;      // requires nonzero at precision
  PadicScalar pow(long e) const;

  // Agreement modulo p^k; requires both precisions >= k.
  bool congruent(const PadicScalar& o, long k) const;
  // Equality at the smaller of the two precisions.
  bool operator==(const PadicScalar& o) const;
  bool operator!=(const PadicScalar& o) const { return !(*this == o); }

  std::string to_text() const;  // "<unit>*p^<val> + O(p^<prec>)"
  std::string json() const;     // {"p":..,"val":..,"unit":"..","prec":..}

 private:
  long p_ = 0;
  long prec_ = 0;
  long val_ = 0;
  bool zero_ = true;
  mpz_class unit_ = 0;

  void check_same_p(const PadicScalar& o) const;
};

// p^k as an mpz (k >= 0).
mpz_class pow_p(long p, long k);

// p-adic valuation of a nonzero integer.
long int_valuation(long p, const mpz_class& v);

// The Teichmuller representative: the unique w with w^p = w, w = a mod p.
// Requires a != 0 mod p.
PadicScalar teichmuller(long p, long prec, long a);

// log(1+x) for val(x) >= 1; precision loss from the 1/n denominators is
// reflected in the result's precision.
PadicScalar padic_log1p(const PadicScalar& x);

// exp(x) for val(x) >= 1 (p > 2).
PadicScalar padic_exp(const PadicScalar& x);

// Binomial coefficient C(e, k) for arbitrary integer e (always an integer).
mpz_class binom_int(long e, unsigned long k);

}  // namespace arithjet
