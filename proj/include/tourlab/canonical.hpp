#pragma once

#include <array>
#include <cstdint>

#include "tourlab/tournament.hpp"

namespace tourlab {

/// Lexicographically minimal orient bit string over all vertex relabelings.
/// `code` uses the Tournament::code() layout, so comparing codes compares strings.
struct CanonicalForm {
  int h = 0;
  std::uint64_t code = 0;

  Tournament tournament() const { return Tournament::from_code(h, code); }

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct Canonization {
  CanonicalForm form;
  /// Number of relabelings that map the input onto the canonical tournament,
  /// which is the order of its automorphism group.
  std::uint64_t aut = 0;
  /// labeling[v] = position of input vertex v in the canonical tournament.
  std::array<int, kMaxVertices> labeling{};
};

Canonization canonize(const Tournament& t);

inline CanonicalForm canonical_form(const Tournament& t) { return canonize(t).form; }
inline std::uint64_t aut_size(const Tournament& t) { return canonize(t).aut; }
inline bool isomorphic(const Tournament& a, const Tournament& b) {
  return a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

}  // namespace tourlab
