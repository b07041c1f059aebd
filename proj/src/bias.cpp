#include "tourlab/bias.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <sstream>

#include "tourlab/canonical.hpp"
#include "tourlab/error.hpp"
#include "tourlab/kernels.hpp"

namespace tourlab {

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double Polynomial::evaluate_approx(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t e = 0; e < other.coeffs_.size(); ++e) coeffs_[e] += other.coeffs_[e];
  trim();
  return *this;
}

std::string Polynomial::pretty(char var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t e = 0; e < coeffs_.size(); ++e) {
    const Rational& c = coeffs_[e];
    if (c == 0) continue;
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (e == 0 || mag != 1) os << to_string(mag);
    if (e >= 1) os << var;
    if (e >= 2) os << '^' << e;
  }
  return os.str();
}

std::string Polynomial::pairs() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t e = 0; e < coeffs_.size(); ++e) {
    if (coeffs_[e] == 0) continue;
    if (!first) os << ' ';
    first = false;
    os << e << ':' << coeffs_[e].get_num().get_str() << '/' << coeffs_[e].get_den().get_str();
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Forward histogram

ForwardHistogram forward_histogram(const Tournament& t) {
  const int h = t.size();
  const int m = pair_count(h);
  const std::size_t stride = static_cast<std::size_t>(m) + 1;
  const std::uint32_t full = (1u << h) - 1u;

  // ways[S * stride + k]: orderings of S with k forward edges.
  thread_local std::vector<std::uint32_t> ways;
  ways.assign((std::size_t{1} << h) * stride, 0u);
  ways[0] = 1;

  std::array<std::uint32_t, kMaxVertices> in{};
  for (int v = 0; v < h; ++v) in[v] = t.in_mask(v);

  for (std::uint32_t set = 1; set <= full; ++set) {
    const int s = std::popcount(set);
    // A prefix of s-1 vertices has at most C(s-1, 2) forward edges.
    const std::size_t len = static_cast<std::size_t>(pair_count(s - 1)) + 1;
    std::uint32_t* dst = &ways[set * stride];
    for (std::uint32_t rest = set; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const std::uint32_t prefix = set & ~(1u << v);
      // Appending v last makes every edge from the prefix into v forward.
      const int gained = std::popcount(in[v] & prefix);
      kernels::add_u32(dst + gained, &ways[prefix * stride], len);
    }
  }

  ForwardHistogram hist;
  hist.h = h;
  hist.counts.assign(ways.begin() + full * stride, ways.begin() + (full + 1) * stride);
  return hist;
}

// ---------------------------------------------------------------------------
// Polynomial assembly

namespace {

// expand[k][e] = coefficient of y^e in (1 + y)^k (1 - y)^(m - k). |entries| <= 2^m.
using ExpansionTable = std::vector<std::vector<std::int64_t>>;

ExpansionTable build_expansion(int m) {
  ExpansionTable table(m + 1, std::vector<std::int64_t>(m + 1, 0));
  for (int k = 0; k <= m; ++k) {
    std::vector<std::int64_t> poly{1};
    auto mul = [&](std::int64_t sign) {
      std::vector<std::int64_t> next(poly.size() + 1, 0);
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i] += poly[i];
        next[i + 1] += sign * poly[i];
      }
      poly = std::move(next);
    };
    for (int i = 0; i < k; ++i) mul(+1);
    for (int i = k; i < m; ++i) mul(-1);
    for (int e = 0; e <= m; ++e) table[k][e] = poly[e];
  }
  return table;
}

const ExpansionTable& expansion_for(int h) {
  static const std::array<ExpansionTable, kMaxVertices + 1> tables = [] {
    std::array<ExpansionTable, kMaxVertices + 1> all;
    for (int s = 0; s <= kMaxVertices; ++s) all[s] = build_expansion(pair_count(s));
    return all;
  }();
  return tables.at(h);
}

std::int64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void check_histogram(const ForwardHistogram& hist, std::uint64_t aut) {
  if (aut == 0) throw Error(Errc::BadParameters, "automorphism count must be positive");
  if (hist.edges() != pair_count(hist.h)) {
    throw Error(Errc::WrongLength, "histogram length does not match C(h,2)+1");
  }
}

}  // namespace

DensityPolynomialP density_poly_p(const ForwardHistogram& hist, std::uint64_t aut) {
  check_histogram(hist, aut);
  const int m = hist.edges();
  // p^k (1-p)^(m-k) = sum_e C(m-k, e-k) (-1)^(e-k) p^e
  std::vector<Rational> coeffs(m + 1);
  for (int e = 0; e <= m; ++e) {
    __int128 acc = 0;
    for (int k = 0; k <= e; ++k) {
      const std::int64_t c = binom(m - k, e - k);
      acc += static_cast<__int128>(hist.counts[k]) * ((e - k) % 2 ? -c : c);
    }
    coeffs[e] = Rational(to_bigint(acc), BigInt(static_cast<unsigned long>(aut)));
  }
  return DensityPolynomialP{hist.h, Polynomial(std::move(coeffs))};
}

DensityPolynomialP density_poly_p(const Tournament& t) {
  return density_poly_p(forward_histogram(t), aut_size(t));
}

BiasPolynomial bias_polynomial(const ForwardHistogram& hist, std::uint64_t aut) {
  check_histogram(hist, aut);
  const int m = hist.edges();
  const auto& expand = expansion_for(hist.h);
  // With y = 2x: B = 2^-m / aut * sum_k N[k] (1+y)^k (1-y)^(m-k).
  std::vector<Rational> coeffs(m + 1);
  for (int e = 0; e <= m; ++e) {
    __int128 acc = 0;
    for (int k = 0; k <= m; ++k) acc += static_cast<__int128>(hist.counts[k]) * expand[k][e];
    if (e % 2 == 1) {
      if (acc != 0) {
        throw Error(Errc::OddCoefficientResidue,
                    "coefficient of x^" + std::to_string(e) + " does not cancel");
      }
      continue;
    }
    BigInt den = BigInt(static_cast<unsigned long>(aut)) << (m - e);
    coeffs[e] = Rational(to_bigint(acc), den);
  }
  return BiasPolynomial{hist.h, Polynomial(std::move(coeffs))};
}

BiasPolynomial bias_polynomial(const Tournament& t) {
  return bias_polynomial(forward_histogram(t), aut_size(t));
}

Rational typical_density(int h, std::uint64_t aut) {
  if (aut == 0) throw Error(Errc::BadParameters, "automorphism count must be positive");
  BigInt num = 1;
  for (int i = 2; i <= h; ++i) num *= i;
  Rational d(num, BigInt(static_cast<unsigned long>(aut)) << pair_count(h));
  d.canonicalize();
  return d;
}

Rational typical_density(const Tournament& t) { return typical_density(t.size(), aut_size(t)); }

bool in_bias_subset(const BiasPolynomial& bias) {
  const auto& c = bias.poly.coeffs();
  for (std::size_t e = 1; e < c.size(); ++e) {
    if (c[e] != 0) return c[e] > 0;
  }
  // constant only for h <= 2, where 0 is not a strict minimum
  return false;
}

bool in_bias_subset(const Tournament& t) { return in_bias_subset(bias_polynomial(t)); }

namespace {

void check_x(const Rational& x) {
  if (!(x > 0 && x < Rational(1, 2))) {
    throw Error(Errc::XOutOfRange, "x = " + to_string(x) + " outside (0, 1/2)");
  }
}

}  // namespace

bool in_F(const BiasPolynomial& bias, const Rational& x) {
  check_x(x);
  return bias(x) > bias.poly.coeff(0);
}

bool in_F(const Tournament& t, const Rational& x) { return in_F(bias_polynomial(t), x); }

Rational ordered_model_margin(const std::vector<BiasPolynomial>& family, const Rational& x) {
  check_x(x);
  if (family.empty()) throw Error(Errc::BadParameters, "empty family");
  Rational best;
  bool first = true;
  for (const auto& b : family) {
    Rational r = b(x) / b.poly.coeff(0) - 1;
    if (first || r < best) best = r;
    first = false;
  }
  return best;
}

}  // namespace tourlab
