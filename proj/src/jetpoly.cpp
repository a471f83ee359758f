#include "arithjet/jetpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace arithjet {

void JetRing::validate() const {
  budget.validate();
  if (families < 1 || families > 2) throw math_error("1 or 2 families");
  if (max_order < 0) throw math_error("negative jet order");
  if (slots() > kMaxSlots) throw budget_error("jet-order budget exceeded");
  if (has_floor && trunc_degree >= 0 && floor_degree > trunc_degree)
    throw math_error("empty degree window");
}

std::string JetRing::var_name(int s) const {
  std::string base = names[static_cast<size_t>(slot_family(s))];
  int order = slot_order(s);
  for (int i = 0; i < order; ++i) base += '\'';
  return base;
}

RingPtr make_ring(const JetRing& spec) {
  spec.validate();
  return std::make_shared<const JetRing>(spec);
}

JetPolynomial::JetPolynomial(RingPtr ring)
    : ring_(std::move(ring)), floor_(ring_->budget.N) {}

JetPolynomial JetPolynomial::constant(RingPtr ring, const PadicScalar& c) {
  JetPolynomial f(std::move(ring));
  f.insert_term(Mono{}, c);
  return f;
}

JetPolynomial JetPolynomial::from_int(RingPtr ring, long v) {
  long p = ring->budget.p, N = ring->budget.N;
  return constant(std::move(ring), PadicScalar::from_int(p, N, v));
}

JetPolynomial JetPolynomial::variable(RingPtr ring, int fam, int order,
                                      long exp) {
  Mono m;
  m.e[static_cast<size_t>(ring->slot(fam, order))] = exp;
  long p = ring->budget.p, N = ring->budget.N;
  return monomial(std::move(ring), m, PadicScalar::from_int(p, N, 1));
}

JetPolynomial JetPolynomial::monomial(RingPtr ring, const Mono& m,
                                      const PadicScalar& c) {
  JetPolynomial f(std::move(ring));
  f.insert_term(m, c);
  return f;
}

void JetPolynomial::insert_term(const Mono& m, const PadicScalar& c) {
  const JetRing& R = *ring_;
  long base_deg = 0;
  for (int s = 0; s < R.slots(); ++s) {
    long e = m.e[static_cast<size_t>(s)];
    if (e == 0) continue;
    int order = R.slot_order(s);
    if (e < 0) {
      if (order > 0) throw math_error("negative exponent on a jet variable");
      if (!R.laurent[static_cast<size_t>(R.slot_family(s))])
        throw math_error("negative exponent without Laurent flag");
    }
    if (order == 0) base_deg += e;
  }
  for (int s = R.slots(); s < kMaxSlots; ++s)
    if (m.e[static_cast<size_t>(s)] != 0)
      throw math_error("exponent outside ring slots");
  if (R.trunc_degree >= 0 && base_deg > R.trunc_degree) {
    truncated_ = true;
    return;
  }
  if (R.has_floor && base_deg < R.floor_degree) {
    truncated_ = true;
    return;
  }
  PadicScalar cc = c.at_prec(std::min(c.prec(), R.budget.N));
  if (cc.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, cc);
  } else {
    PadicScalar sum = it->second + cc;
    if (sum.is_zero())
      terms_.erase(it);
    else
      it->second = sum;
  }
}

void JetPolynomial::check_ring(const JetPolynomial& o) const {
  if (ring_.get() != o.ring_.get()) throw math_error("ring mismatch");
}

int JetPolynomial::top_jet_order() const {
  int top = 0;
  const JetRing& R = *ring_;
  for (const auto& [m, c] : terms_)
    for (int s = 0; s < R.slots(); ++s)
      if (m.e[static_cast<size_t>(s)] != 0)
        top = std::max(top, R.slot_order(s));
  return top;
}

long JetPolynomial::min_coeff_val() const {
  long v = 0;
  for (const auto& [m, c] : terms_) v = std::min(v, c.val());
  return v;
}

PadicScalar JetPolynomial::coeff(const Mono& m) const {
  auto it = terms_.find(m);
  if (it != terms_.end()) return it->second;
  return PadicScalar::zero(ring_->budget.p, floor_);
}

JetPolynomial JetPolynomial::operator-() const {
  JetPolynomial r(ring_);
  r.floor_ = floor_;
  r.truncated_ = truncated_;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

JetPolynomial JetPolynomial::operator+(const JetPolynomial& o) const {
  check_ring(o);
  JetPolynomial r(ring_);
  r.floor_ = std::min(floor_, o.floor_);
  r.truncated_ = truncated_ || o.truncated_;
  r.terms_ = terms_;
  for (const auto& [m, c] : o.terms_) r.insert_term(m, c);
  return r;
}

JetPolynomial JetPolynomial::operator-(const JetPolynomial& o) const {
  return *this + (-o);
}

JetPolynomial JetPolynomial::operator*(const JetPolynomial& o) const {
  check_ring(o);
  JetPolynomial r(ring_);
  r.floor_ = std::min(floor_ + o.min_coeff_val(), o.floor_ + min_coeff_val());
  r.floor_ = std::min(r.floor_, ring_->budget.N);
  r.truncated_ = truncated_ || o.truncated_;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      PadicScalar c = ca * cb;
      if (c.is_zero()) continue;
      Mono m;
      for (int i = 0; i < kMaxSlots; ++i)
        m.e[static_cast<size_t>(i)] =
            ma.e[static_cast<size_t>(i)] + mb.e[static_cast<size_t>(i)];
      r.insert_term(m, c);
    }
  }
  return r;
}

JetPolynomial JetPolynomial::mul_scalar(const PadicScalar& c) const {
  JetPolynomial r(ring_);
  r.floor_ = std::min({floor_ + std::min(0L, c.val()),
                       c.prec() + min_coeff_val(), ring_->budget.N});
  r.truncated_ = truncated_;
  for (const auto& [m, a] : terms_) r.insert_term(m, a * c);
  return r;
}

JetPolynomial JetPolynomial::mul_int(long c) const {
  JetPolynomial r(ring_);
  r.truncated_ = truncated_;
  if (c == 0) {
    r.floor_ = floor_;
    return r;
  }
  long vc = int_valuation(ring_->budget.p, mpz_class(c));
  r.floor_ = std::min(floor_ + vc, ring_->budget.N);
  for (const auto& [m, a] : terms_) r.insert_term(m, a.mul_int(c));
  return r;
}

JetPolynomial JetPolynomial::mul_monomial(const Mono& mm,
                                          const PadicScalar& c) const {
  JetPolynomial r(ring_);
  r.floor_ = std::min({floor_ + std::min(0L, c.val()),
                       c.prec() + min_coeff_val(), ring_->budget.N});
  r.truncated_ = truncated_;
  for (const auto& [m, a] : terms_) {
    PadicScalar cc = a * c;
    if (cc.is_zero()) continue;
    Mono nm;
    for (int i = 0; i < kMaxSlots; ++i)
      nm.e[static_cast<size_t>(i)] =
          m.e[static_cast<size_t>(i)] + mm.e[static_cast<size_t>(i)];
    r.insert_term(nm, cc);
  }
  return r;
}

JetPolynomial JetPolynomial::mul_pow_p(long k) const {
  if (k < 0) return div_pow_p(-k);
  JetPolynomial r(ring_);
  r.floor_ = std::min(floor_ + k, ring_->budget.N);
  r.truncated_ = truncated_;
  for (const auto& [m, c] : terms_) r.insert_term(m, c.mul_pow_p(k));
  return r;
}

JetPolynomial JetPolynomial::div_pow_p(long k) const {
  if (k < 0) return mul_pow_p(-k);
  if (k == 0) return *this;
  JetPolynomial r(ring_);
  if (floor_ - k <= 0)
    throw budget_error("precision exhausted by division by p^k");
  r.floor_ = floor_ - k;
  r.truncated_ = truncated_;
  for (const auto& [m, c] : terms_) r.insert_term(m, c.div_pow_p(k));
  return r;
}

JetPolynomial JetPolynomial::pow(long e) const {
  if (e < 0) throw math_error("negative polynomial power");
  JetPolynomial acc = from_int(ring_, 1);
  JetPolynomial base = *this;
  long k = e;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return acc;
}

namespace {

// Exact-integer polynomial used while expanding phi: coefficients are
// untruncated integers, so multiplying by them costs no precision.
using ExactPoly = std::map<Mono, mpz_class, MonoCmp>;

// phi(v^e) for the variable in slot s: sum_k C(e,k) p^k v^(p(e-k)) (v')^k.
// Terms whose p-valuation reaches `cut` are dropped (they die against the
// coefficient they will multiply).
ExactPoly phi_slot_power_exact(const JetRing& R, int s, long e, long cut) {
  int fam = R.slot_family(s), order = R.slot_order(s);
  if (order == R.max_order)
    throw budget_error("jet-order budget exceeded by phi");
  int next = R.slot(fam, order + 1);
  long p = R.budget.p;
  ExactPoly f;
  long kcap = (e >= 0) ? std::min(e, cut) : cut;
  for (long k = 0; k <= kcap; ++k) {
    mpz_class c = binom_int(e, static_cast<unsigned long>(k)) * pow_p(p, k);
    if (c == 0 || int_valuation(p, c) >= cut) continue;
    Mono m;
    m.e[static_cast<size_t>(s)] = p * (e - k);
    m.e[static_cast<size_t>(next)] = k;
    f[m] = c;
  }
  return f;
}

ExactPoly exact_mul(const JetRing& R, const ExactPoly& a, const ExactPoly& b,
                    long cut) {
  long p = R.budget.p;
  ExactPoly r;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      mpz_class c = ca * cb;
      if (int_valuation(p, c) >= cut) continue;
      Mono m;
      for (int i = 0; i < kMaxSlots; ++i)
        m.e[static_cast<size_t>(i)] =
            ma.e[static_cast<size_t>(i)] + mb.e[static_cast<size_t>(i)];
      auto [it, fresh] = r.emplace(m, c);
      if (!fresh) {
        it->second += c;
        if (it->second == 0) r.erase(it);
      }
    }
  }
  return r;
}

}  // namespace

JetPolynomial JetPolynomial::phi() const {
  JetPolynomial r(ring_);
  r.floor_ = floor_;
  r.truncated_ = truncated_;
  const JetRing& R = *ring_;
  for (const auto& [m, c] : terms_) {
    // Expansion terms with valuation >= cut die against c at precision.
    long cut = c.prec() - c.val();
    ExactPoly t{{Mono{}, mpz_class(1)}};
    for (int s = 0; s < R.slots(); ++s) {
      long e = m.e[static_cast<size_t>(s)];
      if (e == 0) continue;
      t = exact_mul(R, t, phi_slot_power_exact(R, s, e, cut), cut);
    }
    for (const auto& [tm, tc] : t) r.insert_term(tm, c.mul_exact(tc));
  }
  return r;
}

JetPolynomial JetPolynomial::delta() const {
  return (phi() - pow(ring_->budget.p)).div_pow_p(1);
}

JetPolynomial JetPolynomial::frobenius_mod_p() const {
  JetPolynomial r(ring_);
  r.floor_ = std::min(floor_, 1L);
  r.truncated_ = truncated_;
  long p = ring_->budget.p;
  for (const auto& [m, c] : terms_) {
    Mono nm;
    for (int i = 0; i < kMaxSlots; ++i)
      nm.e[static_cast<size_t>(i)] = p * m.e[static_cast<size_t>(i)];
    r.insert_term(nm, c.at_prec(std::min(c.prec(), 1L)));
  }
  return r;
}

JetPolynomial JetPolynomial::at_prec(long k) const {
  JetPolynomial r(ring_);
  r.floor_ = std::min(floor_, k);
  r.truncated_ = truncated_;
  for (const auto& [m, c] : terms_)
    r.insert_term(m, c.at_prec(std::min(c.prec(), k)));
  return r;
}

bool JetPolynomial::congruent(const JetPolynomial& o, long k) const {
  check_ring(o);
  if (floor_ < k || o.floor_ < k)
    throw budget_error("precision too small to decide congruence");
  return (*this - o).at_prec(k).is_zero();
}

bool JetPolynomial::operator==(const JetPolynomial& o) const {
  check_ring(o);
  return (*this - o).is_zero();
}

std::optional<long> JetPolynomial::filtration_level() const {
  const JetRing& R = *ring_;
  long level = 0;
  for (const auto& [m, c] : terms_) {
    int top = 0;
    for (int s = 0; s < R.slots(); ++s)
      if (m.e[static_cast<size_t>(s)] != 0)
        top = std::max(top, R.slot_order(s));
    level = std::max(level, static_cast<long>(top) - c.val());
  }
  // Absent monomials are only known to vanish mod p^floor: a hidden term of
  // top order max_order could force level max_order - floor.
  if (level < R.max_order - floor_)
    throw budget_error("filtration level undecidable at this precision");
  if (level > R.max_order) return std::nullopt;
  return level;
}

PadicScalar JetPolynomial::eval(const std::vector<PadicScalar>& values) const {
  const JetRing& R = *ring_;
  if (static_cast<int>(values.size()) < R.slots())
    throw math_error("missing evaluation values");
  PadicScalar acc = PadicScalar::zero(R.budget.p, floor_);
  for (const auto& [m, c] : terms_) {
    PadicScalar t = c;
    for (int s = 0; s < R.slots(); ++s) {
      long e = m.e[static_cast<size_t>(s)];
      if (e == 0) continue;
      t = t * values[static_cast<size_t>(s)].pow(e);
    }
    acc = acc + t;
  }
  return acc;
}

JetPolynomial JetPolynomial::substitute(
    const RingPtr& target, const std::vector<JetPolynomial>& images) const {
  const JetRing& R = *ring_;
  if (static_cast<int>(images.size()) < R.slots())
    throw math_error("missing substitution images");
  JetPolynomial acc(target);
  acc.floor_ = floor_;
  acc.truncated_ = truncated_;
  for (const auto& [m, c] : terms_) {
    JetPolynomial t = constant(target, c);
    for (int s = 0; s < R.slots(); ++s) {
      long e = m.e[static_cast<size_t>(s)];
      if (e == 0) continue;
      const JetPolynomial& img = images[static_cast<size_t>(s)];
      if (e > 0) {
        t = t * img.pow(e);
      } else {
        // Invert a one-term unit image.
        if (img.num_terms() != 1)
          throw math_error("negative exponent needs a monomial image");
        const auto& [im, ic] = *img.terms().begin();
        Mono inv;
        for (int i = 0; i < kMaxSlots; ++i)
          inv.e[static_cast<size_t>(i)] = e * im.e[static_cast<size_t>(i)];
        t = t.mul_monomial(inv, ic.pow(e));
      }
    }
    acc = acc + t;
  }
  return acc;
}

std::string JetPolynomial::to_text() const {
  if (terms_.empty()) return "0";
  const JetRing& R = *ring_;
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.unit().get_str();
    if (c.val() != 0) os << "*p^" << c.val();
    for (int s = 0; s < R.slots(); ++s) {
      long e = m.e[static_cast<size_t>(s)];
      if (e == 0) continue;
      os << "*" << R.var_name(s);
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

std::string JetPolynomial::json() const {
  const JetRing& R = *ring_;
  std::ostringstream os;
  os << "{\"floor_prec\":" << floor_ << ",\"truncated\":"
     << (truncated_ ? "true" : "false") << ",\"terms\":[";
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << ",";
    first = false;
    os << "{\"mono\":{";
    bool fm = true;
    for (int s = 0; s < R.slots(); ++s) {
      long e = m.e[static_cast<size_t>(s)];
      if (e == 0) continue;
      if (!fm) os << ",";
      fm = false;
      os << "\"" << R.var_name(s) << "\":" << e;
    }
    os << "},\"coeff\":" << c.json() << "}";
  }
  os << "]}";
  return os.str();
}

namespace {

struct Parser {
  const std::string& s;
  size_t i = 0;
  explicit Parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  long integer() {
    skip_ws();
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = (s[i++] == '-');
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
      throw math_error("parse error: integer expected");
    long v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
      v = v * 10 + (s[i++] - '0');
    return neg ? -v : v;
  }
  std::string ident() {
    skip_ws();
    size_t j = i;
    while (j < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
      ++j;
    std::string r = s.substr(i, j - i);
    i = j;
    return r;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
};

}  // namespace

JetPolynomial parse_jet(RingPtr ring, const std::string& text) {
  const JetRing& R = *ring;
  long p = R.budget.p, N = R.budget.N;
  Parser ps(text);
  JetPolynomial acc(ring);
  ps.skip_ws();
  if (text == "0" || ps.done()) return acc;
  while (true) {
    long unit = ps.integer();
    long val = 0;
    Mono m;
    while (ps.eat('*')) {
      size_t save = ps.i;
      std::string name = ps.ident();
      if (name == "p" && ps.eat('^')) {
        val += ps.integer();
        continue;
      }
      ps.i = save;
      name = ps.ident();
      int fam = -1;
      for (int f = 0; f < R.families; ++f)
        if (R.names[static_cast<size_t>(f)] == name) fam = f;
      if (fam < 0) throw math_error("parse error: unknown variable " + name);
      int order = 0;
      while (ps.eat('\'')) ++order;
      long e = 1;
      if (ps.eat('^')) e = ps.integer();
      if (order > R.max_order) throw budget_error("jet-order budget exceeded");
      m.e[static_cast<size_t>(R.slot(fam, order))] += e;
    }
    acc = acc + JetPolynomial::monomial(
                    ring, m, PadicScalar::from_unit_val(p, N, mpz_class(unit),
                                                        val));
    if (!ps.eat('+')) break;
  }
  if (!ps.done()) throw math_error("parse error: trailing input");
  return acc;
}

JetPolynomial cp_defect(const JetPolynomial& f, const JetPolynomial& g) {
  long p = f.ring()->budget.p;
  return (f.pow(p) + g.pow(p) - (f + g).pow(p)).div_pow_p(1);
}

namespace {

void require_val_ge1(const JetPolynomial& f, const char* what) {
  for (const auto& [m, c] : f.terms())
    if (c.val() < 1) throw math_error(std::string(what) +
                                      " needs all terms of valuation >= 1");
}

}  // namespace

JetPolynomial jet_exp(const JetPolynomial& f) {
  require_val_ge1(f, "exp");
  const long p = f.ring()->budget.p, N = f.ring()->budget.N;
  long kmax = (N * (p - 1)) / (p - 2) + 2;
  JetPolynomial acc = JetPolynomial::from_int(f.ring(), 1);
  JetPolynomial term = JetPolynomial::from_int(f.ring(), 1);
  mpz_class fact = 1;
  for (long k = 1; k <= kmax; ++k) {
    term = term * f;
    fact *= k;
    if (term.is_zero()) break;
    long vf = int_valuation(p, fact);
    JetPolynomial contrib =
        term.mul_scalar(PadicScalar::from_rational(p, N + vf, 1, fact));
    acc = acc + contrib;
  }
  return acc;
}

JetPolynomial jet_log1p(const JetPolynomial& f) {
  require_val_ge1(f, "log1p");
  const long p = f.ring()->budget.p, N = f.ring()->budget.N;
  JetPolynomial acc(f.ring());
  JetPolynomial term = JetPolynomial::from_int(f.ring(), 1);
  for (long k = 1; k <= N + 4; ++k) {
    term = term * f;
    if (term.is_zero()) break;
    long vk = (k == 1) ? 0 : int_valuation(p, mpz_class(k));
    acc = acc + term.mul_scalar(PadicScalar::from_rational(
                    p, N + vk, (k % 2) ? 1 : -1, k));
  }
  return acc;
}

JetPolynomial jet_inv_one_plus(const JetPolynomial& f) {
  require_val_ge1(f, "inverse");
  const long N = f.ring()->budget.N;
  JetPolynomial acc = JetPolynomial::from_int(f.ring(), 1);
  JetPolynomial term = JetPolynomial::from_int(f.ring(), 1);
  for (long k = 1; k <= N + 1; ++k) {
    term = term * f;
    if (term.is_zero()) break;
    acc = (k % 2) ? acc - term : acc + term;
  }
  return acc;
}

JetPolynomial jet_binomial_pow(const JetPolynomial& f, long num, long den) {
  require_val_ge1(f, "binomial series");
  const long p = f.ring()->budget.p, N = f.ring()->budget.N;
  if (den % p == 0) throw math_error("binomial exponent denominator not a unit");
  JetPolynomial acc = JetPolynomial::from_int(f.ring(), 1);
  JetPolynomial term = JetPolynomial::from_int(f.ring(), 1);
  // C(r, k) built recursively: C(r,k) = C(r,k-1) * (r-k+1)/k, r = num/den.
  mpz_class cnum = 1, cden = 1;
  for (long k = 1; k <= N + 4; ++k) {
    term = term * f;
    cnum *= (num - (k - 1) * den);
    cden *= k * den;
    if (term.is_zero() || cnum == 0) break;
    long shift = int_valuation(p, cden) + 2;
    acc = acc + term.mul_scalar(
                    PadicScalar::from_rational(p, N + shift, cnum, cden));
  }
  return acc;
}

}  // namespace arithjet
