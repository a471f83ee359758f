#pragma once

#include <string>
#include <vector>

#include "arithjet/padic.hpp"

namespace arithjet {

// Truncated power series sum c_i T^i, i <= D, with PadicScalar
// coefficients. Dense storage; each coefficient carries its own precision.
// An optional valuation floor bounds coefficient valuations from below and
// is enforced, never silently truncated.
class PadicPowerSeries {
 public:
  PadicPowerSeries() = default;
  PadicPowerSeries(long p, long prec, long deg, std::string var = "T");

  static PadicPowerSeries var(long p, long prec, long deg,
                              std::string name = "T");

  long p() const { return p_; }
  long prec() const { return prec_; }
  long deg() const { return deg_; }
  const std::string& var_name() const { return var_; }
  const std::vector<PadicScalar>& coeffs() const { return c_; }
  const PadicScalar& coeff(long i) const { return c_.at(static_cast<size_t>(i)); }

  PadicPowerSeries with_coeff(long i, const PadicScalar& v) const;
  PadicPowerSeries with_val_floor(long floor) const;  // validates
  PadicPowerSeries truncate(long deg) const;

  bool is_zero() const;
  long order() const;  // T-order of the lowest nonzero coefficient; deg+1 if 0

  PadicPowerSeries operator-() const;
  PadicPowerSeries operator+(const PadicPowerSeries& o) const;
  PadicPowerSeries operator-(const PadicPowerSeries& o) const;
  PadicPowerSeries operator*(const PadicPowerSeries& o) const;
  PadicPowerSeries mul_scalar(const PadicScalar& s) const;
  PadicPowerSeries mul_int(long v) const;
  PadicPowerSeries pow(long e) const;  // e >= 0
  PadicPowerSeries inv() const;        // unit constant term

  PadicPowerSeries derivative() const;
  PadicPowerSeries integrate() const;  // no constant term; divides by i

  // Substitute g into f; requires g(0) = 0.
  PadicPowerSeries compose(const PadicPowerSeries& g) const;
  // Compositional inverse of f = T + O(T^2).
  PadicPowerSeries reverse() const;

  PadicScalar eval(const PadicScalar& x) const;

  bool congruent(const PadicPowerSeries& o, long k) const;
  bool operator==(const PadicPowerSeries& o) const;
  bool operator!=(const PadicPowerSeries& o) const { return !(*this == o); }

  std::string to_text() const;
  std::string json() const;

 private:
  long p_ = 0, prec_ = 0, deg_ = -1;
  bool has_floor_ = false;
  long val_floor_ = 0;
  std::string var_ = "T";
  std::vector<PadicScalar> c_;

  void check_compat(const PadicPowerSeries& o) const;
  void enforce_floor() const;
};

// log(1+s): s must have positive valuation or positive T-order.
PadicPowerSeries series_log1p(const PadicPowerSeries& s);
// exp(s): every coefficient of s must have valuation >= 1.
PadicPowerSeries series_exp(const PadicPowerSeries& s);

// The formal-group data of y^2 = x^3 + Ax + B at the parameter T = -x/y:
// logarithm log_series (c_1 = 1), its compositional inverse exp_series,
// and the invariant-differential coefficient omega = d(log)/dT.
struct FormalGroupLog {
  PadicScalar A, B;
  PadicPowerSeries log_series;   // l(T) = T + (2A/5)T^5 + (3B/7)T^7 + ...
  PadicPowerSeries exp_series;   // e(l(T)) = T; empty if not requested
  PadicPowerSeries omega;        // unit constant term
};

// Requires good reduction (4A^3 + 27B^2 a unit) and D >= 5.
FormalGroupLog formal_group_log(long p, long prec, const PadicScalar& A,
                                const PadicScalar& B, long D,
                                bool with_inverse = true);

}  // namespace arithjet
