#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "arithjet/budget.hpp"
#include "arithjet/padic.hpp"

namespace arithjet {

// Exponent vector of one monomial. Slot layout is family-major:
// slot(fam, order) = fam * (max_order + 1) + order; slot order 0 is the
// base variable of the family, order k >= 1 the k-th jet variable.
inline constexpr int kMaxSlots = 12;

struct Mono {
  std::array<int64_t, kMaxSlots> e{};
  bool operator==(const Mono& o) const { return e == o.e; }
  long total_degree() const {
    long t = 0;
    for (auto v : e) t += v;
    return t;
  }
};

// Canonical term order: graded, ties broken lexicographically with higher
// jet slots more significant. Gives reproducible renderings.
struct MonoCmp {
  bool operator()(const Mono& a, const Mono& b) const {
    long da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    for (int i = kMaxSlots - 1; i >= 0; --i)
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
    return false;
  }
};

// Ambient polynomial jet algebra: up to two variable families, each a base
// variable (Laurent exponents optional) with jet variables up to max_order.
// trunc_degree >= 0 switches on power-series semantics (terms of total base
// degree above the bound are discarded); floor_degree bounds Laurent tails.
// Discards are never silent: they set the `truncated` flag on the value.
struct JetRing {
  Budget budget;
  int families = 1;
  std::array<std::string, 2> names{"x", "y"};
  std::array<bool, 2> laurent{false, false};
  int max_order = 4;
  long trunc_degree = -1;
  bool has_floor = false;
  long floor_degree = 0;

  int slots() const { return families * (max_order + 1); }
  int slot(int fam, int order) const { return fam * (max_order + 1) + order; }
  int slot_family(int s) const { return s / (max_order + 1); }
  int slot_order(int s) const { return s % (max_order + 1); }
  void validate() const;
  std::string var_name(int s) const;
};

using RingPtr = std::shared_ptr<const JetRing>;

RingPtr make_ring(const JetRing& spec);

// A (Laurent) polynomial in the jet variables with PadicScalar coefficients.
//
// Coefficient precisions are tracked individually and capped at budget.N;
// `floor_prec` is the guaranteed level: every absent monomial is known to be
// 0 mod p^floor_prec, and every stored coefficient has at least that
// precision. Values are immutable.
class JetPolynomial {
 public:
  JetPolynomial() = default;
  explicit JetPolynomial(RingPtr ring);

  static JetPolynomial constant(RingPtr ring, const PadicScalar& c);
  static JetPolynomial from_int(RingPtr ring, long v);
  static JetPolynomial variable(RingPtr ring, int fam, int order,
                                long exp = 1);
  static JetPolynomial monomial(RingPtr ring, const Mono& m,
                                const PadicScalar& c);

  const RingPtr& ring() const { return ring_; }
  const std::map<Mono, PadicScalar, MonoCmp>& terms() const { return terms_; }
  long floor_prec() const { return floor_; }
  bool truncated() const { return truncated_; }
  size_t num_terms() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  // Largest jet order with a nonzero occurrence (0 if none).
  int top_jet_order() const;
  long min_coeff_val() const;  // 0 when empty
  PadicScalar coeff(const Mono& m) const;  // zero-at-floor when absent

  JetPolynomial operator-() const;
  JetPolynomial operator+(const JetPolynomial& o) const;
  JetPolynomial operator-(const JetPolynomial& o) const;
  JetPolynomial operator*(const JetPolynomial& o) const;
  JetPolynomial mul_scalar(const PadicScalar& c) const;
  JetPolynomial mul_int(long c) const;
  JetPolynomial mul_monomial(const Mono& m, const PadicScalar& c) const;
  JetPolynomial mul_pow_p(long k) const;
  JetPolynomial div_pow_p(long k) const;
  JetPolynomial pow(long e) const;  // e >= 0

  // The Frobenius lift: v -> v^p + p v' on every variable, identity on
  // scalars. Throws budget_error when the top jet order would be exceeded.
  JetPolynomial phi() const;
  // The p-derivation delta(f) = (phi(f) - f^p)/p; exact by construction.
  JetPolynomial delta() const;
  // Reduction mod p composed with Frobenius (exponents times p); agrees
  // with phi() mod p but never raises the jet order.
  JetPolynomial frobenius_mod_p() const;

  JetPolynomial at_prec(long k) const;  // lower all precisions to <= k
  bool congruent(const JetPolynomial& o, long k) const;
  bool operator==(const JetPolynomial& o) const;
  bool operator!=(const JetPolynomial& o) const { return !(*this == o); }

  // Smallest i with f in F^i = sum_k p^k B_{i+k}: every term with top jet
  // order t needs coefficient valuation >= t - i. nullopt when no i <=
  // max_order works.
  std::optional<long> filtration_level() const;

  // Evaluate at scalars, one value per slot (inverses taken as needed).
  PadicScalar eval(const std::vector<PadicScalar>& values) const;
  // Ring morphism determined by per-slot images living in target ring.
  // Negative exponents require the image to be an invertible monomial.
  JetPolynomial substitute(const RingPtr& target,
                           const std::vector<JetPolynomial>& images) const;

  std::string to_text() const;
  std::string json() const;

 private:
  RingPtr ring_;
  std::map<Mono, PadicScalar, MonoCmp> terms_;
  long floor_ = 0;
  bool truncated_ = false;

  void insert_term(const Mono& m, const PadicScalar& c);
  void check_ring(const JetPolynomial& o) const;
  JetPolynomial phi_slot_power(int s, long e) const;
};

// Parse the canonical text grammar, e.g. "2*p^1*x^-2*x' + 3*T''^2".
JetPolynomial parse_jet(RingPtr ring, const std::string& text);

// Addition-defect polynomial C_p(f,g) = (f^p + g^p - (f+g)^p)/p.
JetPolynomial cp_defect(const JetPolynomial& f, const JetPolynomial& g);

// exp(f) for f with all coefficient valuations >= 1.
JetPolynomial jet_exp(const JetPolynomial& f);
// log(1+f) for f with all coefficient valuations >= 1.
JetPolynomial jet_log1p(const JetPolynomial& f);
// (1+f)^(-1) for f with all coefficient valuations >= 1.
JetPolynomial jet_inv_one_plus(const JetPolynomial& f);
// (1+f)^(num/den) by binomial series, gcd(den, p) = 1, val(f) >= 1.
JetPolynomial jet_binomial_pow(const JetPolynomial& f, long num, long den);

}  // namespace arithjet
