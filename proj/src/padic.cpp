#include "arithjet/padic.hpp"

#include <algorithm>
#include <sstream>

namespace arithjet {

mpz_class pow_p(long p, long k) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(k));
  return r;
}

long int_valuation(long p, const mpz_class& v) {
  if (v == 0) throw math_error("valuation of zero integer");
  mpz_class rest;
  mpz_class pp(p);
  return static_cast<long>(
      mpz_remove(rest.get_mpz_t(), v.get_mpz_t(), pp.get_mpz_t()));
}

mpz_class binom_int(long e, unsigned long k) {
  mpz_class r;
  mpz_bin_ui(r.get_mpz_t(), mpz_class(e).get_mpz_t(), k);
  return r;
}

void PadicScalar::check_same_p(const PadicScalar& o) const {
  if (p_ != o.p_) throw math_error("prime mismatch between scalars");
}

PadicScalar PadicScalar::zero(long p, long prec) {
  PadicScalar s;
  s.p_ = p;
  s.prec_ = prec;
  s.zero_ = true;
  s.val_ = prec;
  s.unit_ = 0;
  return s;
}

PadicScalar PadicScalar::from_unit_val(long p, long prec, const mpz_class& unit,
                                       long val) {
  PadicScalar s;
  s.p_ = p;
  s.prec_ = prec;
  long rel = prec - val;
  if (rel <= 0) return zero(p, prec);
  mpz_class u = unit % pow_p(p, rel);
  if (u < 0) u += pow_p(p, rel);
  if (u == 0) return zero(p, prec);
  long extra = int_valuation(p, u);
  if (extra > 0) {
    val += extra;
    rel -= extra;
    if (rel <= 0) return zero(p, prec);
    u /= pow_p(p, extra);
    u %= pow_p(p, rel);
  }
  s.zero_ = false;
  s.val_ = val;
  s.unit_ = u;
  return s;
}

PadicScalar PadicScalar::from_mpz(long p, long prec, const mpz_class& v) {
  return from_unit_val(p, prec, v, 0);
}

PadicScalar PadicScalar::from_int(long p, long prec, long v) {
  return from_mpz(p, prec, mpz_class(v));
}

PadicScalar PadicScalar::from_rational(long p, long prec, const mpz_class& num,
                                       const mpz_class& den) {
  if (den == 0) throw math_error("zero denominator");
  if (num == 0) return zero(p, prec);
  long vn = int_valuation(p, num);
  long vd = int_valuation(p, den);
  mpz_class nu = num / pow_p(p, vn);
  mpz_class du = den / pow_p(p, vd);
  long val = vn - vd;
  long rel = prec - val;
  if (rel <= 0) return zero(p, prec);
  mpz_class mod = pow_p(p, rel);
  mpz_class dinv;
  if (mpz_invert(dinv.get_mpz_t(), du.get_mpz_t(), mod.get_mpz_t()) == 0)
    throw math_error("denominator not invertible");
  mpz_class u = (nu * dinv) % mod;
  return from_unit_val(p, prec, u, val);
}

mpz_class PadicScalar::lift() const {
  if (zero_) return 0;
  if (val_ < 0) throw math_error("lift of element with negative valuation");
  return unit_ * pow_p(p_, val_);
}

PadicScalar PadicScalar::at_prec(long prec) const {
  if (prec >= prec_) {
    if (prec > prec_) throw budget_error("cannot raise scalar precision");
    return *this;
  }
  if (zero_) return zero(p_, prec);
  return from_unit_val(p_, prec, unit_, val_);
}

PadicScalar PadicScalar::operator-() const {
  if (zero_) return *this;
  mpz_class m = pow_p(p_, prec_ - val_);
  return from_unit_val(p_, prec_, m - unit_, val_);
}

PadicScalar PadicScalar::operator+(const PadicScalar& o) const {
  check_same_p(o);
  long prec = std::min(prec_, o.prec_);
  long scale = std::min(val(), o.val());
  // Integer representatives at the common scale p^scale.
  mpz_class a = zero_ ? mpz_class(0) : unit_ * pow_p(p_, val_ - scale);
  mpz_class b = o.zero_ ? mpz_class(0) : o.unit_ * pow_p(p_, o.val_ - scale);
  return from_unit_val(p_, prec, a + b, scale);
}

PadicScalar PadicScalar::operator-(const PadicScalar& o) const {
  return *this + (-o);
}

PadicScalar PadicScalar::operator*(const PadicScalar& o) const {
  check_same_p(o);
  // Relative precisions bound the product's relative precision.
  long prec = std::min(prec_ + o.val(), o.prec_ + val());
  long val = this->val() + o.val();
  if (zero_ || o.zero_ || val >= prec) return zero(p_, prec);
  return from_unit_val(p_, prec, unit_ * o.unit_, val);
}

PadicScalar PadicScalar::mul_int(long c) const {
  // An exact integer factor: only its p-part moves the precision window.
  return mul_exact(mpz_class(c));
}

PadicScalar PadicScalar::mul_exact(const mpz_class& c) const {
  if (c == 0) return zero(p_, prec_);
  long vc = int_valuation(p_, c);
  if (zero_) return zero(p_, prec_ + vc);
  return from_unit_val(p_, prec_ + vc, unit_ * c, val_);
}

PadicScalar PadicScalar::div_pow_p(long k) const {
  if (k == 0) return *this;
  if (k < 0) return mul_pow_p(-k);
  if (zero_) {
    if (prec_ < k)
      throw budget_error("precision exhausted: divisibility undecidable");
    return zero(p_, prec_ - k);
  }
  if (val_ < k) throw math_error("not divisible at this precision");
  if (prec_ - k <= 0)
    throw budget_error("precision exhausted by division by p^k");
  return from_unit_val(p_, prec_ - k, unit_, val_ - k);
}

PadicScalar PadicScalar::mul_pow_p(long k) const {
  if (k == 0) return *this;
  if (k < 0) return div_pow_p(-k);
  if (zero_) return zero(p_, prec_ + k);
  return from_unit_val(p_, prec_ + k, unit_, val_ + k);
}

PadicScalar PadicScalar::inv() const {
  if (zero_) throw math_error("inverse of zero-at-precision");
  long rel = prec_ - val_;
  mpz_class mod = pow_p(p_, rel);
  mpz_class u;
  if (mpz_invert(u.get_mpz_t(), unit_.get_mpz_t(), mod.get_mpz_t()) == 0)
    throw math_error("unit not invertible");
  // Relative precision is preserved; absolute precision is rel - val.
  return from_unit_val(p_, rel - val_, u, -val_);
}

PadicScalar PadicScalar::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  if (e == 0) return from_int(p_, prec_, 1);
  // x = u*p^v known to relative precision rel: x^e = u^e*p^(ev) to the same
  // relative precision, absolute precision v*(e-1) + prec.
  if (zero_) return zero(p_, prec_ * e);
  long rel = prec_ - val_;
  mpz_class mod = pow_p(p_, rel);
  mpz_class u;
  mpz_powm_ui(u.get_mpz_t(), unit_.get_mpz_t(), static_cast<unsigned long>(e),
              mod.get_mpz_t());
  return from_unit_val(p_, val_ * (e - 1) + prec_, u, val_ * e);
}

bool PadicScalar::congruent(const PadicScalar& o, long k) const {
  check_same_p(o);
  if (prec_ < k || o.prec_ < k)
    throw budget_error("precision too small to decide congruence");
  return (*this - o).at_prec(k).is_zero();
}

bool PadicScalar::operator==(const PadicScalar& o) const {
  check_same_p(o);
  long k = std::min(prec_, o.prec_);
  return (*this - o).at_prec(k).is_zero();
}

std::string PadicScalar::to_text() const {
  std::ostringstream os;
  if (zero_) {
    os << "O(p^" << prec_ << ")";
    return os.str();
  }
  os << unit_.get_str();
  if (val_ != 0) os << "*p^" << val_;
  os << " + O(p^" << prec_ << ")";
  return os.str();
}

std::string PadicScalar::json() const {
  std::ostringstream os;
  os << "{\"p\":" << p_ << ",\"val\":" << val() << ",\"unit\":\""
     << (zero_ ? "0" : unit_.get_str()) << "\",\"prec\":" << prec_ << "}";
  return os.str();
}

PadicScalar teichmuller(long p, long prec, long a) {
  long a0 = ((a % p) + p) % p;
  if (a0 == 0) throw math_error("teichmuller of residue 0");
  mpz_class mod = pow_p(p, prec);
  mpz_class x = a0;
  for (long i = 0; i <= prec + 1; ++i) {
    mpz_class nx;
    mpz_powm_ui(nx.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(p),
                mod.get_mpz_t());
    if (nx == x) break;
    x = nx;
  }
  return PadicScalar::from_mpz(p, prec, x);
}

PadicScalar padic_log1p(const PadicScalar& x) {
  if (!x.is_zero() && x.val() < 1)
    throw math_error("log1p outside convergence domain (need val >= 1)");
  long p = x.p();
  long prec = x.prec();
  PadicScalar acc = PadicScalar::zero(p, prec);
  PadicScalar term = x;  // x^n, running
  for (long n = 1;; ++n) {
    if (term.is_zero() && n > 1) break;
    long vn = (n == 1) ? 0 : int_valuation(p, mpz_class(n));
    PadicScalar contrib =
        term * PadicScalar::from_rational(p, prec + vn + 1, (n % 2) ? 1 : -1,
                                          n);
    acc = acc + contrib;
    if (n > prec + 4) break;  // val(x^n/n) >= n - log_p(n) always past prec
    term = term * x;
  }
  return acc;
}

PadicScalar padic_exp(const PadicScalar& x) {
  if (!x.is_zero() && x.val() < 1)
    throw math_error("exp outside convergence domain (need val >= 1)");
  long p = x.p();
  long prec = x.prec();
  PadicScalar acc = PadicScalar::from_int(p, prec, 1);
  PadicScalar term = PadicScalar::from_int(p, prec, 1);
  mpz_class fact = 1;
  for (long n = 1;; ++n) {
    term = term * x;
    fact *= n;
    if (term.is_zero()) break;
    long vf = int_valuation(p, fact);
    PadicScalar contrib =
        term * PadicScalar::from_rational(p, prec + vf + 1, 1, fact);
    acc = acc + contrib;
    if (n > 2 * prec + 4) break;  // val(x^n/n!) >= n(p-2)/(p-1) past prec
  }
  return acc;
}

}  // namespace arithjet
