#include "tourlab/construct.hpp"

#include <algorithm>
#include <numeric>

#include "tourlab/error.hpp"

namespace tourlab {

namespace {

std::uint64_t big_pair_index(int n, int i, int j) {
  const auto ii = static_cast<std::uint64_t>(i);
  return ii * (2 * static_cast<std::uint64_t>(n) - ii - 1) / 2 + static_cast<std::uint64_t>(j - i - 1);
}

bool coin(Seed seed, std::uint64_t stream, std::uint64_t counter) {
  return (counter_draw(seed, stream, counter) >> 63) != 0;
}

}  // namespace

BigTournament build_tnp(int n, const Rational& p, Seed seed) {
  if (n < 2) throw Error(Errc::BadParameters, "T(n,p) needs n >= 2");
  if (p < 0 || p > 1) throw Error(Errc::BadProbability, "p = " + to_string(p) + " outside [0, 1]");

  // Edge iff draw < floor(p * 2^64); p = 1 gives 2^64, i.e. always.
  BigInt scaled = BigInt(p.get_num()) << 64;
  scaled /= p.get_den();
  const unsigned __int128 threshold =
      (static_cast<unsigned __int128>(BigInt(scaled >> 64).get_ui()) << 64) |
      BigInt(scaled & BigInt("18446744073709551615")).get_ui();

  BigTournament g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const std::uint64_t draw = counter_draw(seed, streams::kTnp, big_pair_index(n, i, j));
      if (static_cast<unsigned __int128>(draw) < threshold) {
        g.orient(i, j);
      } else {
        g.orient(j, i);
      }
    }
  }
  g.set_provenance(Provenance{"tnp", {{"n", n}, {"p", to_string(p)}}, seed.value});
  return g;
}

TransversalLayout transversal_layout(int n, int h, int k) {
  if (h < 1 || n < 1) throw Error(Errc::BadParameters, "n and h must be positive");
  if (n % h != 0) {
    throw Error(Errc::NotMultiple, "n = " + std::to_string(n) + " is not a multiple of h = " +
                                       std::to_string(h));
  }
  if (k >= h) {
    throw Error(Errc::StarTooBig, "pattern on " + std::to_string(k) + " vertices needs h > " +
                                      std::to_string(k));
  }
  return TransversalLayout{n, h, k, n / h};
}

BigTournament build_transversal(int n, int h, const Tournament& star, Seed seed) {
  const auto layout = transversal_layout(n, h, star.size());
  BigTournament g(n);
  for (int i = 0; i < n; ++i) {
    const int pi = layout.part_of(i);
    for (int j = i + 1; j < n; ++j) {
      const int pj = layout.part_of(j);
      bool forward;
      if (pi != pj && pi < layout.k && pj < layout.k) {
        forward = star.edge(pi, pj);
      } else {
        forward = coin(seed, streams::kTransversal, big_pair_index(n, i, j));
      }
      if (forward) {
        g.orient(i, j);
      } else {
        g.orient(j, i);
      }
    }
  }
  g.set_provenance(Provenance{
      "transversal", {{"n", n}, {"h", h}, {"k", star.size()}, {"hstar", star.to_string()}},
      seed.value});
  return g;
}

int blowup_template_size(int h, int k) {
  if (h < 1 || k < 1) throw Error(Errc::BadParameters, "blow-up needs h >= 1 and k >= 1");
  const long target = static_cast<long>(h) * k;
  long root = 0;
  while (root * root < target) ++root;
  return static_cast<int>(h * root);
}

std::vector<std::vector<int>> pack_cliques(int r, int h, int k, Seed seed, int max_restarts,
                                           int* restarts_used) {
  SplitMix64 rng(counter_draw(seed, streams::kPacking, 0));
  std::vector<int> order(r);
  const int tries_per_copy = 8 * r;
  for (int restart = 0; restart <= max_restarts; ++restart) {
    std::vector<char> used(static_cast<std::size_t>(r) * r, 0);
    std::vector<std::vector<int>> copies;
    bool failed = false;
    for (int c = 0; c < k && !failed; ++c) {
      bool placed = false;
      for (int attempt = 0; attempt < tries_per_copy && !placed; ++attempt) {
        std::iota(order.begin(), order.end(), 0);
        for (int i = r - 1; i > 0; --i) std::swap(order[i], order[rng.below(i + 1)]);
        std::vector<int> chosen;
        for (int v : order) {
          const bool free = std::all_of(chosen.begin(), chosen.end(),
                                        [&](int u) { return !used[u * r + v]; });
          if (free) chosen.push_back(v);
          if (static_cast<int>(chosen.size()) == h) break;
        }
        if (static_cast<int>(chosen.size()) < h) continue;
        std::sort(chosen.begin(), chosen.end());
        for (int a : chosen) {
          for (int b : chosen) {
            if (a != b) used[a * r + b] = 1;
          }
        }
        copies.push_back(std::move(chosen));
        placed = true;
      }
      failed = !placed;
    }
    if (!failed) {
      if (restarts_used) *restarts_used = restart;
      return copies;
    }
  }
  throw Error(Errc::PackingFailed, "no " + std::to_string(k) + " edge-disjoint K_" +
                                       std::to_string(h) + " in K_" + std::to_string(r) +
                                       " after " + std::to_string(max_restarts) + " restarts");
}

Blowup build_blowup(const std::vector<Tournament>& family, int n, Seed seed, int max_restarts) {
  if (family.empty()) throw Error(Errc::BadParameters, "blow-up family is empty");
  const int h = family.front().size();
  for (const auto& t : family) {
    if (t.size() != h) throw Error(Errc::BadParameters, "family members differ in size");
  }
  const int k = static_cast<int>(family.size());
  Blowup out;
  out.r = blowup_template_size(h, k);
  if (n % out.r != 0) {
    throw Error(Errc::NotMultiple, "n = " + std::to_string(n) + " is not a multiple of r = " +
                                       std::to_string(out.r));
  }
  out.copies = pack_cliques(out.r, h, k, seed, max_restarts, &out.restarts);
  // 2 r^2 < 2^h, evaluated without overflow.
  out.beats_typical_bound =
      h >= 63 || 2.0L * out.r * out.r < static_cast<long double>(std::uint64_t{1} << h);

  const int r = out.r;
  // owner[a * r + b] = (copy, position of a, position of b) for template pairs in a copy.
  struct Slot {
    int copy = -1;
    int ja = 0;
    int jb = 0;
  };
  std::vector<Slot> owner(static_cast<std::size_t>(r) * r);
  for (int c = 0; c < k; ++c) {
    const auto& verts = out.copies[c];
    for (int ja = 0; ja < h; ++ja) {
      for (int jb = 0; jb < h; ++jb) {
        if (ja != jb) owner[verts[ja] * r + verts[jb]] = Slot{c, ja, jb};
      }
    }
  }

  const int part = n / r;
  BigTournament g(n);  // low -> high everywhere by default
  for (int u = 0; u < n; ++u) {
    const int pu = u / part;
    for (int v = u + 1; v < n; ++v) {
      const int pv = v / part;
      if (pu == pv) continue;
      const Slot& s = owner[pu * r + pv];
      if (s.copy < 0) continue;
      if (family[s.copy].edge(s.ja, s.jb)) {
        g.orient(u, v);
      } else {
        g.orient(v, u);
      }
    }
  }

  nlohmann::json fam = nlohmann::json::array();
  for (const auto& t : family) fam.push_back(t.to_string());
  g.set_provenance(Provenance{"blowup",
                              {{"n", n}, {"h", h}, {"k", k}, {"r", r}, {"family", fam},
                               {"copies", out.copies}},
                              seed.value});
  out.graph = std::move(g);
  return out;
}

}  // namespace tourlab
