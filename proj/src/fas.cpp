#include "tourlab/fas.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include "tourlab/error.hpp"

namespace tourlab {

FasResult min_fas(const Tournament& t) {
  const int h = t.size();
  const std::uint32_t full = (1u << h) - 1u;
  std::vector<int> best(std::size_t{full} + 1, 0);
  std::vector<std::int8_t> last(std::size_t{full} + 1, -1);
  std::array<std::uint32_t, kMaxVertices> in{};
  for (int v = 0; v < h; ++v) in[v] = t.in_mask(v);

  for (std::uint32_t set = 1; set <= full; ++set) {
    int top = -1;
    for (std::uint32_t rest = set; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const std::uint32_t prefix = set & ~(1u << v);
      const int value = best[prefix] + std::popcount(in[v] & prefix);
      if (value > top) {
        top = value;
        last[set] = static_cast<std::int8_t>(v);
      }
    }
    best[set] = top;
  }

  FasResult r;
  r.max_forward = best[full];
  r.a = pair_count(h) - r.max_forward;
  r.witness_order.resize(h);
  std::uint32_t set = full;
  for (int pos = h - 1; pos >= 0; --pos) {
    const int v = last[set];
    r.witness_order[pos] = v;
    set &= ~(1u << v);
  }
  return r;
}

int forward_edges(const Tournament& t, const std::vector<int>& order) {
  int count = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) count += t.edge(order[i], order[j]);
  }
  return count;
}

bool in_A(const FasResult& fas, int h, const Rational& threshold) {
  if (threshold < 0) throw Error(Errc::BadParameters, "threshold t must be non-negative");
  return Rational(fas.a) <= Rational(pair_count(h), 2) - threshold;
}

bool in_A(const Tournament& t, const Rational& threshold) {
  return in_A(min_fas(t), t.size(), threshold);
}

namespace {

struct Counts {
  unsigned long f_minus_b;
  unsigned long b;
};

Counts check_params(int h, long a) {
  if (h < 1) throw Error(Errc::BadParameters, "h must be positive");
  const long m = static_cast<long>(h) * (h - 1) / 2;
  if (a < 0 || 2 * a > m) {
    throw Error(Errc::BadParameters,
                "a = " + std::to_string(a) + " outside [0, C(h,2)/2] for h=" + std::to_string(h));
  }
  return Counts{static_cast<unsigned long>(m - 2 * a), static_cast<unsigned long>(a)};
}

BigInt factorial(int h) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(h));
  return f;
}

Rational pow(const Rational& q, unsigned long e) {
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), e);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Scoped mpfr_t.
class Real {
 public:
  explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  ~Real() { mpfr_clear(v_); }
  Real(const Real&) = delete;
  Real& operator=(const Real&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

}  // namespace

bool fas_dominance_condition(int h, long a, const Rational& x) {
  const auto [f_minus_b, b] = check_params(h, a);
  if (!(x > 0 && x < Rational(1, 2))) {
    throw Error(Errc::BadParameters, "x = " + to_string(x) + " outside (0, 1/2)");
  }
  const Rational lhs = pow(Rational(1 + 2 * x), f_minus_b) * pow(Rational(1 - 4 * x * x), b);
  return lhs > Rational(factorial(h));
}

CertifiedResult fas_dominance_condition_certified(int h, long a, const XEnclosure& x,
                                                  mpfr_prec_t max_precision) {
  const auto [f_minus_b, b] = check_params(h, a);
  for (mpfr_prec_t prec = 64; prec <= max_precision; prec *= 2) {
    Real xlo(prec), xhi(prec), t(prec), l1(prec), l2(prec), glo(prec), ghi(prec), flo(prec),
        fhi(prec);
    x(xlo.get(), xhi.get(), prec);
    if (mpfr_sgn(xlo.get()) <= 0 || mpfr_cmp_d(xhi.get(), 0.5) >= 0) {
      throw Error(Errc::BadParameters, "x enclosure not inside (0, 1/2)");
    }

    // Lower bound: (f-b) log1p(2 x_lo) + b log1p(-4 x_hi^2).
    mpfr_mul_2ui(t.get(), xlo.get(), 1, MPFR_RNDD);
    mpfr_log1p(l1.get(), t.get(), MPFR_RNDD);
    mpfr_sqr(t.get(), xhi.get(), MPFR_RNDU);
    mpfr_mul_2ui(t.get(), t.get(), 2, MPFR_RNDU);
    mpfr_neg(t.get(), t.get(), MPFR_RNDD);
    mpfr_log1p(l2.get(), t.get(), MPFR_RNDD);
    mpfr_mul_ui(l1.get(), l1.get(), f_minus_b, MPFR_RNDD);
    mpfr_mul_ui(l2.get(), l2.get(), b, MPFR_RNDD);
    mpfr_add(glo.get(), l1.get(), l2.get(), MPFR_RNDD);

    // Upper bound: (f-b) log1p(2 x_hi) + b log1p(-4 x_lo^2).
    mpfr_mul_2ui(t.get(), xhi.get(), 1, MPFR_RNDU);
    mpfr_log1p(l1.get(), t.get(), MPFR_RNDU);
    mpfr_sqr(t.get(), xlo.get(), MPFR_RNDD);
    mpfr_mul_2ui(t.get(), t.get(), 2, MPFR_RNDD);
    mpfr_neg(t.get(), t.get(), MPFR_RNDU);
    mpfr_log1p(l2.get(), t.get(), MPFR_RNDU);
    mpfr_mul_ui(l1.get(), l1.get(), f_minus_b, MPFR_RNDU);
    mpfr_mul_ui(l2.get(), l2.get(), b, MPFR_RNDU);
    mpfr_add(ghi.get(), l1.get(), l2.get(), MPFR_RNDU);

    // ln h! = lngamma(h + 1), correctly rounded in each direction.
    mpfr_set_ui(t.get(), static_cast<unsigned long>(h) + 1, MPFR_RNDN);
    int sign = 0;
    mpfr_lgamma(flo.get(), &sign, t.get(), MPFR_RNDD);
    mpfr_lgamma(fhi.get(), &sign, t.get(), MPFR_RNDU);

    if (mpfr_greater_p(glo.get(), fhi.get())) return {Certified::True, prec};
    if (mpfr_lessequal_p(ghi.get(), flo.get())) return {Certified::False, prec};
  }
  return {Certified::Inconclusive, max_precision};
}

XEnclosure sqrt_log_ratio(int h) {
  if (h < 2) throw Error(Errc::BadParameters, "sqrt(ln h / h) needs h >= 2");
  return [h](mpfr_t lo, mpfr_t hi, mpfr_prec_t) {
    mpfr_set_ui(lo, static_cast<unsigned long>(h), MPFR_RNDN);
    mpfr_log(lo, lo, MPFR_RNDD);
    mpfr_div_ui(lo, lo, static_cast<unsigned long>(h), MPFR_RNDD);
    mpfr_sqrt(lo, lo, MPFR_RNDD);
    mpfr_set_ui(hi, static_cast<unsigned long>(h), MPFR_RNDN);
    mpfr_log(hi, hi, MPFR_RNDU);
    mpfr_div_ui(hi, hi, static_cast<unsigned long>(h), MPFR_RNDU);
    mpfr_sqrt(hi, hi, MPFR_RNDU);
  };
}

XEnclosure exact_x(const Rational& x) {
  return [x](mpfr_t lo, mpfr_t hi, mpfr_prec_t) {
    mpfr_set_q(lo, x.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi, x.get_mpq_t(), MPFR_RNDU);
  };
}

}  // namespace tourlab
