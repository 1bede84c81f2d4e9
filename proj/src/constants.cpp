#include "chibound/constants.hpp"

#include <cmath>
#include <memory>

#include <mpfr.h>

#include "chibound/graph.hpp"

namespace chibound {

double Log2Bounds::log10_mid() const { return mid() * std::log10(2.0); }

mpq_class parse_rational(const std::string& text) {
  mpq_class q;
  const auto dot = text.find('.');
  try {
    if (dot == std::string::npos) {
      if (q.set_str(text, 10) != 0) throw InputError("not a rational number: " + text);
    } else {
      const std::string digits = text.substr(0, dot) + text.substr(dot + 1);
      const std::string scale = "1" + std::string(text.size() - dot - 1, '0');
      if (digits.empty() || q.set_str(digits + "/" + scale, 10) != 0) throw InputError("not a rational number: " + text);
    }
  } catch (const std::invalid_argument&) {
    throw InputError("not a rational number: " + text);
  }
  q.canonicalize();
  return q;
}

namespace {

constexpr mpfr_prec_t kPrec = 256;

// MPFR value pair with lower/upper directed rounding.
class Iv {
 public:
  Iv() {
    mpfr_init2(lo_, kPrec);
    mpfr_init2(hi_, kPrec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
  }
  Iv(const Iv& o) : Iv() {
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  Iv& operator=(const Iv& o) {
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
    return *this;
  }
  ~Iv() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
  }

  static Iv of(std::uint64_t v) {
    Iv r;
    mpfr_set_ui(r.lo_, v, MPFR_RNDD);
    mpfr_set_ui(r.hi_, v, MPFR_RNDU);
    return r;
  }
  static Iv of(const mpq_class& q) {
    Iv r;
    mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
    return r;
  }
  /// log2 of a positive integer
  static Iv log2_of(std::uint64_t v) {
    Iv r = of(v);
    mpfr_log2(r.lo_, r.lo_, MPFR_RNDD);
    mpfr_log2(r.hi_, r.hi_, MPFR_RNDU);
    return r;
  }

  friend Iv operator+(const Iv& a, const Iv& b) {
    Iv r;
    mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
  }
  // both operands are non-negative everywhere below
  friend Iv operator*(const Iv& a, const Iv& b) {
    Iv r;
    mpfr_mul(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_mul(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
  }
  friend Iv operator/(const Iv& a, const Iv& b) {
    Iv r;
    mpfr_div(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_div(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return r;
  }
  Iv pow_ui(unsigned long e) const {
    Iv r;
    mpfr_pow_ui(r.lo_, lo_, e, MPFR_RNDD);
    mpfr_pow_ui(r.hi_, hi_, e, MPFR_RNDU);
    return r;
  }
  /// Widen hi for log2(ceil(x)) given this = log2(x) with x >= 1:
  /// log2(x + 1) - log2(x) <= log2(e) / x <= 1.5 * 2^(-lo).
  Iv ceil_slack() const {
    Iv r = *this;
    mpfr_t s;
    mpfr_init2(s, kPrec);
    mpfr_neg(s, lo_, MPFR_RNDU);
    mpfr_exp2(s, s, MPFR_RNDU);
    mpfr_mul_d(s, s, 1.5, MPFR_RNDU);
    mpfr_add(r.hi_, r.hi_, s, MPFR_RNDU);
    mpfr_clear(s);
    return r;
  }
  /// Certified: every point of a is >= every point of b.
  friend bool certainly_ge(const Iv& a, const Iv& b) { return mpfr_greaterequal_p(a.lo_, b.hi_) != 0; }

  Log2Bounds bounds() const { return {mpfr_get_d(lo_, MPFR_RNDD), mpfr_get_d(hi_, MPFR_RNDU)}; }

 private:
  mpfr_t lo_, hi_;
};

bool fits_bits(double log2_bits, double cap) { return std::isfinite(log2_bits) && log2_bits <= cap; }

}  // namespace

BoundConstants bound_constants(const ConstantsInput& in) {
  if (in.t < 10 || in.t % 2 != 0) throw InputError("t must be even and at least 10");
  if (in.ell < 2) throw InputError("ell must be at least 2");
  if (in.epsilon <= 0 || in.epsilon > 1) throw InputError("epsilon must lie in (0, 1]");
  if (in.c < 1) throw InputError("c must be at least 1");
  const std::uint64_t t = in.t, ell = in.ell;
  BoundConstants pc;
  pc.input = in;

  const Iv inv_eps = Iv::of(mpq_class(1) / in.epsilon);
  // exponent of R: 2 t^4 / eps^(2t)
  const Iv e_r = Iv::of(2 * t * t * t * t) * inv_eps.pow_ui(2 * t);
  const Iv lr = (Iv::log2_of(2 * t) + e_r * Iv::log2_of(2 * t * t * t * ell)).ceil_slack();
  const Iv two = Iv::of(2);
  const Iv ln = two * (lr + Iv::log2_of(2 * t * ell));
  const Iv inner = Iv::log2_of(ell) + Iv::of(t / 2) * ln;  // log2(l N^(t/2))
  const Iv ls = two * ln + inner * inv_eps;                 // log2 of the Step-2 left side
  const Iv lz = (Iv::log2_of(3) + ls).ceil_slack();
  const Iv lw = Iv::of(1) + Iv::of(3) * Iv::log2_of(t) + two * lz;
  const Iv ld = Iv::log2_of(in.c) + two * lw;
  pc.log2_R = lr.bounds();
  pc.log2_N = ln.bounds();
  pc.log2_Z = lz.bounds();
  pc.log2_W = lw.bounds();
  pc.log2_d = ld.bounds();
  {
    // log2(100 t^5 / eps^(2t+1)) = log2(100 t^5) + (2t+1) log2(1/eps)
    const Log2Bounds ie = inv_eps.bounds();
    const double lo = std::log2(100.0 * std::pow(static_cast<double>(t), 5)) + (2.0 * t + 1) * std::log2(ie.lo);
    const double hi = std::log2(100.0 * std::pow(static_cast<double>(t), 5)) + (2.0 * t + 1) * std::log2(ie.hi);
    pc.log2_beta_bound = {std::nextafter(lo, -INFINITY), std::nextafter(hi, INFINITY)};
  }

  const mpq_class inv = mpq_class(1) / in.epsilon;
  const bool integral = inv.get_den() == 1;
  if (integral && fits_bits(pc.log2_d.hi, kExactBitCap) && fits_bits(pc.log2_R.hi, kExactBitCap)) {
    const unsigned long k = inv.get_num().get_ui();
    mpz_class r, base = static_cast<unsigned long>(2 * t * t * t * ell);
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), 2 * t * t * t * t * static_cast<unsigned long>(std::pow(k, 2 * t)));
    r *= static_cast<unsigned long>(2 * t);
    mpz_class n = r * static_cast<unsigned long>(2 * t * ell);
    n *= n;
    mpz_class nt, inner_z, s;
    mpz_pow_ui(nt.get_mpz_t(), n.get_mpz_t(), t / 2);
    inner_z = nt * static_cast<unsigned long>(ell);
    mpz_pow_ui(s.get_mpz_t(), inner_z.get_mpz_t(), k);
    s *= n * n;
    mpz_class z = 3 * s;
    mpz_class w = z * z * static_cast<unsigned long>(2 * t * t * t);
    mpz_class d = w * w * static_cast<unsigned long>(in.c);
    mpz_class nk;
    mpz_pow_ui(nk.get_mpz_t(), n.get_mpz_t(), k);
    pc.step2_first = s >= nk;
    pc.step2_second = s >= r * n * n;
    pc.step2_method = "exact";
    pc.R = std::move(r);
    pc.N = std::move(n);
    pc.Z = std::move(z);
    pc.W = std::move(w);
    pc.d = std::move(d);
  } else {
    pc.step2_first = certainly_ge(ls, ln * inv_eps);
    pc.step2_second = certainly_ge(ls, lr + two * ln);
    pc.step2_method = "interval";
  }
  return pc;
}

nlohmann::json to_json(const BoundConstants& pc) {
  auto logs = [](const Log2Bounds& b) { return nlohmann::json{{"log2_lo", b.lo}, {"log2_hi", b.hi}, {"log10", b.log10_mid()}}; };
  nlohmann::json j{{"t", pc.input.t},
                   {"ell", pc.input.ell},
                   {"epsilon", pc.input.epsilon.get_str()},
                   {"c", pc.input.c},
                   {"R", logs(pc.log2_R)},
                   {"N", logs(pc.log2_N)},
                   {"Z", logs(pc.log2_Z)},
                   {"W", logs(pc.log2_W)},
                   {"d", logs(pc.log2_d)},
                   {"beta_bound", logs(pc.log2_beta_bound)},
                   {"exact", pc.exact()},
                   {"step2_first", pc.step2_first},
                   {"step2_second", pc.step2_second},
                   {"step2_method", pc.step2_method}};
  if (pc.exact()) {
    for (auto [name, v] : {std::pair{"R", &pc.R}, {"N", &pc.N}, {"Z", &pc.Z}, {"W", &pc.W}, {"d", &pc.d}})
      j[name]["bits"] = mpz_sizeinbase((*v)->get_mpz_t(), 2);
  }
  return j;
}

}  // namespace chibound
