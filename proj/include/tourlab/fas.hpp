#pragma once

#include <functional>
#include <utility>
#include <vector>

#include <mpfr.h>

#include "tourlab/rational.hpp"
#include "tourlab/tournament.hpp"

namespace tourlab {

/// Minimum feedback arc set size a(H) with an ordering that attains it.
struct FasResult {
  int a = 0;
  /// Vertices (0-based) in order; all but `a` edges point forward along it.
  std::vector<int> witness_order;
  int max_forward = 0;
};

/// Exact optimum by subset DP; ties prefer the smallest vertex index.
FasResult min_fas(const Tournament& t);

/// Number of edges u -> v with u before v in `order`.
int forward_edges(const Tournament& t, const std::vector<int>& order);

/// a(H) <= C(h,2)/2 - t, compared exactly. t must be non-negative.
bool in_A(const Tournament& t, const Rational& threshold);
bool in_A(const FasResult& fas, int h, const Rational& threshold);

/// (1+2x)^(f-b) (1-4x^2)^b > h! with b = a and f = C(h,2) - a, in exact arithmetic.
/// Requires h >= 1, 0 <= 2a <= C(h,2) and 0 < x < 1/2 (BadParameters otherwise).
bool fas_dominance_condition(int h, long a, const Rational& x);

enum class Certified { True, False, Inconclusive };

/// Encloses x at the requested working precision: writes lo <= x <= hi.
using XEnclosure = std::function<void(mpfr_t lo, mpfr_t hi, mpfr_prec_t precision)>;

struct CertifiedResult {
  Certified verdict = Certified::Inconclusive;
  mpfr_prec_t precision = 0;
};

/// Log-domain evaluation of the same inequality with outward-rounded interval
/// bounds, doubling the precision from 64 bits up to max_precision until the
/// sign is decided.
CertifiedResult fas_dominance_condition_certified(int h, long a, const XEnclosure& x,
                                                  mpfr_prec_t max_precision = 4096);

/// Enclosure of sqrt(ln h / h).
XEnclosure sqrt_log_ratio(int h);
/// Enclosure of an exact rational.
XEnclosure exact_x(const Rational& x);

}  // namespace tourlab
