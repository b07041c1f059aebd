#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tourlab/big_tournament.hpp"
#include "tourlab/canonical.hpp"
#include "tourlab/rational.hpp"
#include "tourlab/rng.hpp"

namespace tourlab {

inline constexpr std::uint64_t kExactSubsetLimit = 100'000'000;

enum class DensityMode { Exact, MonteCarlo };

struct DensityOptions {
  DensityMode mode = DensityMode::Exact;
  std::uint64_t samples = 0;  // Monte Carlo only
  Seed seed{};                // Monte Carlo only
  unsigned threads = 1;
};

/// Measured density of one pattern against its typical density d(H).
struct DensityReport {
  CanonicalForm pattern;
  int n = 0;
  DensityMode mode = DensityMode::Exact;
  std::uint64_t samples = 0;
  Seed seed{};

  /// Copies of the pattern found, out of C(n,h) subsets (exact) or `samples` draws.
  std::uint64_t hits = 0;
  std::uint64_t total = 0;
  /// hits / total in lowest terms.
  Rational estimate;
  /// Zero in exact mode.
  double std_error = 0.0;
  Rational typical;
  Rational beta;
  /// estimate - (1 + beta) * typical.
  Rational margin;

  double ratio() const { return Rational(estimate / typical).get_d(); }
  bool meets_margin() const { return margin >= 0; }
};

std::uint64_t binomial(int n, int k);

/// Number of h-subsets of g inducing each isomorphism class, keyed by canonical code
/// and sorted by it. Throws TooLarge when C(n,h) exceeds kExactSubsetLimit.
std::vector<std::pair<std::uint64_t, std::uint64_t>> count_classes_exact(const BigTournament& g,
                                                                         int h, unsigned threads = 1);

/// Hits per class over `samples` uniformly random h-subsets drawn independently.
/// Sample i uses its own counter-derived generator, so results do not depend on threads.
std::vector<std::pair<std::uint64_t, std::uint64_t>> count_classes_sampled(
    const BigTournament& g, int h, std::uint64_t samples, Seed seed, unsigned threads = 1);

DensityReport density_exact(const BigTournament& g, const Tournament& pattern, unsigned threads = 1);
DensityReport density_montecarlo(const BigTournament& g, const Tournament& pattern,
                                 std::uint64_t samples, Seed seed, unsigned threads = 1);

/// One report per pattern (all of the same order), sharing a single pass over g.
std::vector<DensityReport> dominance_report(const std::vector<Tournament>& patterns,
                                            const BigTournament& g, const Rational& beta,
                                            const DensityOptions& options);

}  // namespace tourlab
