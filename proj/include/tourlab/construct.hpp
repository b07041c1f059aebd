#pragma once

#include <vector>

#include "tourlab/big_tournament.hpp"
#include "tourlab/rational.hpp"
#include "tourlab/rng.hpp"
#include "tourlab/tournament.hpp"

namespace tourlab {

/// Ordered-edge random tournament: pair (i, j), i < j, becomes i -> j with
/// probability p, drawn from the counter stream at the pair's index.
BigTournament build_tnp(int n, const Rational& p, Seed seed);

/// Vertex partition used by the transversal construction: parts 0..k-1 hold
/// n/h consecutive vertices each, part k holds the rest.
struct TransversalLayout {
  int n = 0;
  int h = 0;
  int k = 0;
  int part_size = 0;

  int part_of(int v) const noexcept { return v < k * part_size ? v / part_size : k; }
  int first_of(int part) const noexcept { return part * part_size; }
};

TransversalLayout transversal_layout(int n, int h, int k);

/// Every transversal of parts 0..k-1 induces `star` (k = |star| < h); all other
/// pairs are oriented uniformly at random.
BigTournament build_transversal(int n, int h, const Tournament& star, Seed seed);

struct Blowup {
  BigTournament graph;
  int r = 0;
  /// copies[i][j] = template vertex carrying vertex j of family member i.
  std::vector<std::vector<int>> copies;
  int restarts = 0;
  /// 2 r^2 < 2^h; the sufficient condition for beating typical density.
  bool beats_typical_bound = false;

  int part_size() const noexcept { return graph.size() / r; }
};

/// r = h * ceil(sqrt(h k)).
int blowup_template_size(int h, int k);

/// Finds k pairwise edge-disjoint copies of K_h in K_r by randomized greedy
/// packing with restarts. Throws PackingFailed after max_restarts attempts.
std::vector<std::vector<int>> pack_cliques(int r, int h, int k, Seed seed, int max_restarts,
                                           int* restarts_used = nullptr);

/// Blow-up of the packed template: n/r vertices per template vertex, pairs
/// between parts of copy i oriented by family member i, everything else low -> high.
Blowup build_blowup(const std::vector<Tournament>& family, int n, Seed seed,
                    int max_restarts = 1000);

}  // namespace tourlab
