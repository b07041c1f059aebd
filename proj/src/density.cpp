#include "tourlab/density.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <unordered_map>

#include "tourlab/bias.hpp"
#include "tourlab/error.hpp"
#include "tourlab/parallel.hpp"

namespace tourlab {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

namespace {

constexpr int kTableMaxOrder = 6;

// Labeled code -> canonical code for every labeled h-tournament, h <= 6.
const std::vector<std::uint64_t>& canon_table(int h) {
  static std::array<std::vector<std::uint64_t>, kTableMaxOrder + 1> tables;
  static std::array<std::once_flag, kTableMaxOrder + 1> once;
  std::call_once(once[h], [h] {
    const std::uint64_t count = std::uint64_t{1} << pair_count(h);
    auto& t = tables[h];
    t.resize(count);
    for (std::uint64_t code = 0; code < count; ++code) {
      t[code] = canonize(Tournament::from_code(h, code)).form.code;
    }
  });
  return tables[h];
}

struct CodeLayout {
  int h;
  // bit[i][d]: value of edge (i -> d) in the MSB-first code, i < d.
  std::array<std::array<std::uint64_t, kMaxVertices>, kMaxVertices> bit{};

  explicit CodeLayout(int order) : h(order) {
    const int m = pair_count(h);
    for (int d = 0; d < h; ++d) {
      for (int i = 0; i < d; ++i) bit[i][d] = std::uint64_t{1} << (m - 1 - pair_index(h, i, d));
    }
  }
};

// Accumulates class counts either over labeled codes (small h) or canonical codes.
class ClassCounter {
 public:
  explicit ClassCounter(int h) : h_(h) {
    if (h_ <= kTableMaxOrder) labeled_.assign(std::size_t{1} << pair_count(h_), 0);
  }

  void add(std::uint64_t labeled_code) {
    if (h_ <= kTableMaxOrder) {
      ++labeled_[labeled_code];
    } else {
      ++canonical_[canonize(Tournament::from_code(h_, labeled_code)).form.code];
    }
  }

  void merge_into(std::map<std::uint64_t, std::uint64_t>& out) const {
    if (h_ <= kTableMaxOrder) {
      const auto& table = canon_table(h_);
      for (std::size_t code = 0; code < labeled_.size(); ++code) {
        if (labeled_[code]) out[table[code]] += labeled_[code];
      }
    } else {
      for (const auto& [code, count] : canonical_) out[code] += count;
    }
  }

 private:
  int h_;
  std::vector<std::uint64_t> labeled_;
  std::unordered_map<std::uint64_t, std::uint64_t> canonical_;
};

void check_order(const BigTournament& g, int h) {
  if (h < 1 || h > kMaxVertices) {
    throw Error(Errc::Unsupported, "pattern order must be 1.." + std::to_string(kMaxVertices));
  }
  if (h > g.size()) {
    throw Error(Errc::SizeMismatch, "pattern larger than the tournament");
  }
}

struct SubsetWalker {
  const BigTournament& g;
  const CodeLayout& layout;
  ClassCounter& counter;
  std::array<int, kMaxVertices> chosen{};

  void walk(int depth, int next, std::uint64_t code) {
    const int h = layout.h;
    const int n = g.size();
    if (depth == h) {
      counter.add(code);
      return;
    }
    for (int w = next; w <= n - (h - depth); ++w) {
      std::uint64_t c = code;
      for (int i = 0; i < depth; ++i) {
        if (g.edge(chosen[i], w)) c |= layout.bit[i][depth];
      }
      chosen[depth] = w;
      walk(depth + 1, w + 1, c);
    }
  }
};

std::vector<std::pair<std::uint64_t, std::uint64_t>> flatten(
    const std::map<std::uint64_t, std::uint64_t>& m) {
  return {m.begin(), m.end()};
}

}  // namespace

std::vector<std::pair<std::uint64_t, std::uint64_t>> count_classes_exact(const BigTournament& g,
                                                                         int h, unsigned threads) {
  check_order(g, h);
  const std::uint64_t total = binomial(g.size(), h);
  if (total > kExactSubsetLimit) {
    throw Error(Errc::TooLarge, "C(" + std::to_string(g.size()) + "," + std::to_string(h) +
                                    ") exceeds the exact-mode limit of 10^8 subsets");
  }
  const CodeLayout layout(h);
  const std::size_t firsts = static_cast<std::size_t>(g.size() - h + 1);
  const unsigned workers = worker_count(threads, firsts);
  std::vector<ClassCounter> counters(workers, ClassCounter(h));
  parallel_chunks(firsts, workers, [&](unsigned w, std::size_t begin, std::size_t end) {
    SubsetWalker walker{g, layout, counters[w]};
    for (std::size_t first = begin; first < end; ++first) {
      walker.chosen[0] = static_cast<int>(first);
      walker.walk(1, static_cast<int>(first) + 1, 0);
    }
  });
  std::map<std::uint64_t, std::uint64_t> merged;
  for (const auto& c : counters) c.merge_into(merged);
  return flatten(merged);
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> count_classes_sampled(
    const BigTournament& g, int h, std::uint64_t samples, Seed seed, unsigned threads) {
  check_order(g, h);
  if (samples == 0) throw Error(Errc::BadParameters, "samples must be at least 1");
  const CodeLayout layout(h);
  const unsigned workers = worker_count(threads, samples);
  std::vector<ClassCounter> counters(workers, ClassCounter(h));
  const auto n = static_cast<std::uint64_t>(g.size());
  parallel_chunks(samples, workers, [&](unsigned w, std::size_t begin, std::size_t end) {
    std::array<int, kMaxVertices> pick{};
    for (std::size_t s = begin; s < end; ++s) {
      SplitMix64 rng(counter_draw(seed, streams::kMonteCarlo, s));
      // h distinct vertices, uniformly: every h-subset is equally likely.
      for (int d = 0; d < h; ++d) {
        bool fresh;
        do {
          pick[d] = static_cast<int>(rng.below(n));
          fresh = true;
          for (int i = 0; i < d; ++i) fresh = fresh && pick[i] != pick[d];
        } while (!fresh);
      }
      std::uint64_t code = 0;
      for (int d = 1; d < h; ++d) {
        for (int i = 0; i < d; ++i) {
          if (g.edge(pick[i], pick[d])) code |= layout.bit[i][d];
        }
      }
      counters[w].add(code);
    }
  });
  std::map<std::uint64_t, std::uint64_t> merged;
  for (const auto& c : counters) c.merge_into(merged);
  return flatten(merged);
}

namespace {

std::uint64_t lookup(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& counts,
                     std::uint64_t code) {
  const auto it = std::lower_bound(counts.begin(), counts.end(), std::make_pair(code, std::uint64_t{0}));
  return it != counts.end() && it->first == code ? it->second : 0;
}

DensityReport make_report(const Canonization& c, int n, std::uint64_t hits, std::uint64_t total,
                          const Rational& beta, const DensityOptions& options) {
  Rational estimate(BigInt(static_cast<unsigned long>(hits)),
                    BigInt(static_cast<unsigned long>(total)));
  estimate.canonicalize();
  DensityReport r;
  r.hits = hits;
  r.total = total;
  r.pattern = c.form;
  r.n = n;
  r.mode = options.mode;
  r.estimate = estimate;
  r.typical = typical_density(c.form.h, c.aut);
  r.beta = beta;
  r.margin = r.estimate - (1 + beta) * r.typical;
  if (options.mode == DensityMode::MonteCarlo) {
    r.samples = options.samples;
    r.seed = options.seed;
    const double q = estimate.get_d();
    r.std_error = std::sqrt(q * (1.0 - q) / static_cast<double>(options.samples));
  }
  return r;
}

}  // namespace

std::vector<DensityReport> dominance_report(const std::vector<Tournament>& patterns,
                                            const BigTournament& g, const Rational& beta,
                                            const DensityOptions& options) {
  if (patterns.empty()) return {};
  const int h = patterns.front().size();
  for (const auto& p : patterns) {
    if (p.size() != h) throw Error(Errc::BadParameters, "patterns must share the same order");
  }
  std::vector<std::pair<std::uint64_t, std::uint64_t>> counts;
  std::uint64_t total = 0;
  if (options.mode == DensityMode::Exact) {
    counts = count_classes_exact(g, h, options.threads);
    total = binomial(g.size(), h);
  } else {
    counts = count_classes_sampled(g, h, options.samples, options.seed, options.threads);
    total = options.samples;
  }
  std::vector<DensityReport> out;
  out.reserve(patterns.size());
  for (const auto& p : patterns) {
    const auto c = canonize(p);
    out.push_back(make_report(c, g.size(), lookup(counts, c.form.code), total, beta, options));
  }
  return out;
}

DensityReport density_exact(const BigTournament& g, const Tournament& pattern, unsigned threads) {
  DensityOptions options;
  options.threads = threads;
  return dominance_report({pattern}, g, Rational(0), options).front();
}

DensityReport density_montecarlo(const BigTournament& g, const Tournament& pattern,
                                 std::uint64_t samples, Seed seed, unsigned threads) {
  DensityOptions options;
  options.mode = DensityMode::MonteCarlo;
  options.samples = samples;
  options.seed = seed;
  options.threads = threads;
  return dominance_report({pattern}, g, Rational(0), options).front();
}

}  // namespace tourlab
