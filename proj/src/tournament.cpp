#include "tourlab/tournament.hpp"

#include <algorithm>
#include <bit>

#include "tourlab/error.hpp"

namespace tourlab {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::WrongLength: return "WrongLength";
    case Errc::BadCharacter: return "BadCharacter";
    case Errc::BadSubset: return "BadSubset";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::Unsupported: return "Unsupported";
    case Errc::CorruptCache: return "CorruptCache";
    case Errc::OddCoefficientResidue: return "OddCoefficientResidue";
    case Errc::XOutOfRange: return "XOutOfRange";
    case Errc::BadParameters: return "BadParameters";
    case Errc::BadProbability: return "BadProbability";
    case Errc::NotMultiple: return "NotMultiple";
    case Errc::StarTooBig: return "StarTooBig";
    case Errc::PackingFailed: return "PackingFailed";
    case Errc::TooLarge: return "TooLarge";
    case Errc::Io: return "Io";
  }
  return "Unknown";
}

namespace {

void check_order(int h) {
  if (h < 1 || h > kMaxVertices) {
    throw Error(Errc::Unsupported, "tournament order " + std::to_string(h) + " outside 1.." +
                                       std::to_string(kMaxVertices));
  }
}

}  // namespace

Tournament Tournament::transitive(int h) {
  check_order(h);
  Tournament t;
  t.h_ = h;
  for (int i = 0; i < h; ++i) {
    t.out_[i] = static_cast<Mask>(t.full_mask() & ~((1u << (i + 1)) - 1u));
  }
  return t;
}

Tournament Tournament::cyclic3() { return parse("101", 3); }

Tournament Tournament::parse(std::string_view text, int h) {
  check_order(h);
  const int m = pair_count(h);
  if (static_cast<int>(text.size()) != m) {
    throw Error(Errc::WrongLength, "expected " + std::to_string(m) + " characters for h=" +
                                       std::to_string(h) + ", got " +
                                       std::to_string(text.size()));
  }
  Tournament t;
  t.h_ = h;
  int idx = 0;
  for (int i = 0; i < h; ++i) {
    for (int j = i + 1; j < h; ++j, ++idx) {
      const char c = text[idx];
      if (c == '1') {
        t.out_[i] |= static_cast<Mask>(1u << j);
      } else if (c == '0') {
        t.out_[j] |= static_cast<Mask>(1u << i);
      } else {
        throw Error(Errc::BadCharacter,
                    "character '" + std::string(1, c) + "' at offset " + std::to_string(idx));
      }
    }
  }
  return t;
}

Tournament Tournament::from_code(int h, std::uint64_t code) {
  check_order(h);
  const int m = pair_count(h);
  Tournament t;
  t.h_ = h;
  int bit = m - 1;
  for (int i = 0; i < h; ++i) {
    for (int j = i + 1; j < h; ++j, --bit) {
      if ((code >> bit) & 1u) {
        t.out_[i] |= static_cast<Mask>(1u << j);
      } else {
        t.out_[j] |= static_cast<Mask>(1u << i);
      }
    }
  }
  return t;
}

Tournament Tournament::from_out_masks(int h, std::span<const Mask> out) {
  check_order(h);
  if (static_cast<int>(out.size()) != h) {
    throw Error(Errc::WrongLength, "expected one out-mask per vertex");
  }
  Tournament t;
  t.h_ = h;
  for (int v = 0; v < h; ++v) t.out_[v] = static_cast<Mask>(out[v] & t.full_mask());
  for (int i = 0; i < h; ++i) {
    if (t.edge(i, i)) throw Error(Errc::BadParameters, "self loop");
    for (int j = i + 1; j < h; ++j) {
      if (t.edge(i, j) == t.edge(j, i)) {
        throw Error(Errc::BadParameters, "pair without exactly one orientation");
      }
    }
  }
  return t;
}

int Tournament::out_degree(int v) const noexcept { return std::popcount(out_[v]); }

std::vector<int> Tournament::score_sequence() const {
  std::vector<int> s(h_);
  for (int v = 0; v < h_; ++v) s[v] = out_degree(v);
  return s;
}

std::uint64_t Tournament::code() const noexcept {
  std::uint64_t code = 0;
  for (int i = 0; i < h_; ++i) {
    for (int j = i + 1; j < h_; ++j) code = (code << 1) | (edge(i, j) ? 1u : 0u);
  }
  return code;
}

std::string Tournament::to_string() const {
  std::string s;
  s.reserve(pair_count(h_));
  for (int i = 0; i < h_; ++i) {
    for (int j = i + 1; j < h_; ++j) s.push_back(edge(i, j) ? '1' : '0');
  }
  return s;
}

Tournament Tournament::reversed() const {
  Tournament t;
  t.h_ = h_;
  for (int v = 0; v < h_; ++v) t.out_[v] = in_mask(v);
  return t;
}

Tournament Tournament::relabeled(std::span<const int> perm) const {
  Tournament t;
  t.h_ = h_;
  for (int u = 0; u < h_; ++u) {
    Mask m = out_[u];
    while (m) {
      const int v = std::countr_zero(m);
      m &= static_cast<Mask>(m - 1);
      t.out_[perm[u]] |= static_cast<Mask>(1u << perm[v]);
    }
  }
  return t;
}

bool Tournament::is_transitive() const noexcept {
  // Acyclic iff the score sequence is a permutation of 0..h-1.
  Mask seen = 0;
  for (int v = 0; v < h_; ++v) seen |= static_cast<Mask>(1u << out_degree(v));
  return seen == full_mask();
}

Tournament induced(const Tournament& t, std::span<const int> subset) {
  if (subset.empty()) throw Error(Errc::BadSubset, "empty vertex subset");
  std::vector<int> verts(subset.begin(), subset.end());
  std::sort(verts.begin(), verts.end());
  if (std::adjacent_find(verts.begin(), verts.end()) != verts.end()) {
    throw Error(Errc::BadSubset, "duplicate vertex in subset");
  }
  if (verts.front() < 0 || verts.back() >= t.size()) {
    throw Error(Errc::BadSubset, "vertex outside 1.." + std::to_string(t.size()));
  }
  const int k = static_cast<int>(verts.size());
  std::array<Tournament::Mask, kMaxVertices> out{};
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      if (a != b && t.edge(verts[a], verts[b])) out[a] |= static_cast<Tournament::Mask>(1u << b);
    }
  }
  return Tournament::from_out_masks(k, std::span(out.data(), k));
}

namespace {

struct InjectionSearch {
  const Tournament& host;
  const Tournament& pattern;
  std::array<int, kMaxVertices> image{};
  Tournament::Mask used = 0;

  bool extend(int depth) {
    const int k = pattern.size();
    if (depth == k) return true;
    // The image of a pattern vertex needs at least its out/in degree among the
    // host's unused vertices; score bounds prune most dead branches early.
    const int need_out = pattern.out_degree(depth);
    const int need_in = k - 1 - need_out;
    for (int v = 0; v < host.size(); ++v) {
      if ((used >> v) & 1u) continue;
      if (host.out_degree(v) < need_out || host.size() - 1 - host.out_degree(v) < need_in) continue;
      bool ok = true;
      for (int a = 0; a < depth && ok; ++a) {
        ok = pattern.edge(a, depth) == host.edge(image[a], v);
      }
      if (!ok) continue;
      image[depth] = v;
      used |= static_cast<Tournament::Mask>(1u << v);
      if (extend(depth + 1)) return true;
      used &= static_cast<Tournament::Mask>(~(1u << v));
    }
    return false;
  }
};

}  // namespace

bool contains_subtournament(const Tournament& t, const Tournament& pattern) {
  if (pattern.size() > t.size()) {
    throw Error(Errc::SizeMismatch, "pattern has more vertices than host");
  }
  InjectionSearch search{t, pattern};
  return search.extend(0);
}

}  // namespace tourlab
