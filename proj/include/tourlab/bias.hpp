#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tourlab/rational.hpp"
#include "tourlab/tournament.hpp"

namespace tourlab {

/// counts[k] = number of vertex orderings with exactly k forward edges,
/// k = 0..C(h,2). An edge u -> v is forward when u precedes v.
struct ForwardHistogram {
  int h = 0;
  std::vector<std::uint64_t> counts;

  int edges() const noexcept { return static_cast<int>(counts.size()) - 1; }
  friend bool operator==(const ForwardHistogram&, const ForwardHistogram&) = default;
};

/// Dense univariate polynomial with exact rational coefficients; coeffs[e] is
/// the coefficient of the e-th power. Trailing zeros are trimmed.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  Rational coeff(std::size_t e) const { return e < coeffs_.size() ? coeffs_[e] : Rational(0); }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  Rational operator()(const Rational& x) const;
  double evaluate_approx(double x) const;

  Polynomial& operator+=(const Polynomial& other);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// "3/8 + 2x^2 + 2x^4" style, using `var` as the variable name.
  std::string pretty(char var = 'x') const;
  /// Space-separated "e:num/den" pairs for non-zero coefficients.
  std::string pairs() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// d(H, p): expected density of H in the ordered-edge random model, as a polynomial in p.
struct DensityPolynomialP {
  int h = 0;
  Polynomial poly;
};

/// B(H, x) = d(H, x + 1/2). Always even in x.
struct BiasPolynomial {
  int h = 0;
  Polynomial poly;

  Rational operator()(const Rational& x) const { return poly(x); }
  friend bool operator==(const BiasPolynomial&, const BiasPolynomial&) = default;
};

ForwardHistogram forward_histogram(const Tournament& t);

DensityPolynomialP density_poly_p(const ForwardHistogram& hist, std::uint64_t aut);
DensityPolynomialP density_poly_p(const Tournament& t);

/// Throws OddCoefficientResidue if an odd power survives the substitution.
BiasPolynomial bias_polynomial(const ForwardHistogram& hist, std::uint64_t aut);
BiasPolynomial bias_polynomial(const Tournament& t);

/// h! 2^{-C(h,2)} / aut(H).
Rational typical_density(int h, std::uint64_t aut);
Rational typical_density(const Tournament& t);

/// Sign test on the lowest-order non-constant term of B(H, x); false when B is constant.
bool in_bias_subset(const BiasPolynomial& bias);
bool in_bias_subset(const Tournament& t);

/// B(H, x) > d(H) for exact x in (0, 1/2); otherwise XOutOfRange.
bool in_F(const BiasPolynomial& bias, const Rational& x);
bool in_F(const Tournament& t, const Rational& x);

/// min over the family of B(H, x)/d(H) - 1, the margin the ordered-edge model
/// achieves simultaneously for every member. Family must be non-empty.
Rational ordered_model_margin(const std::vector<BiasPolynomial>& family, const Rational& x);

}  // namespace tourlab
