#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tourlab {

inline constexpr int kMaxVertices = 10;

constexpr int pair_count(int h) noexcept { return h * (h - 1) / 2; }

// Position of the pair (i, j), i < j, 0-based, in the fixed serialization order
// (0,1),(0,2),...,(0,h-1),(1,2),...
constexpr int pair_index(int h, int i, int j) noexcept {
  return i * (2 * h - i - 1) / 2 + (j - i - 1);
}

/// Orientation of the complete graph on h <= 10 vertices.
///
/// Stored as one out-neighbour bitmask per vertex. The serialized form is the
/// orient bit string over pairs i < j in lexicographic order, '1' meaning i -> j.
/// Internally vertices are 0-based; text and CLI surfaces use 1-based labels.
class Tournament {
 public:
  using Mask = std::uint16_t;

  Tournament() = default;

  /// All pairs oriented low -> high (edge i -> j for i < j).
  static Tournament transitive(int h);
  /// The directed triangle 1 -> 2 -> 3 -> 1.
  static Tournament cyclic3();
  /// Unique tournament with the given orient bit string ("0"/"1" chars).
  static Tournament parse(std::string_view text, int h);
  /// Orientation code with pair index 0 stored in the most significant of the
  /// C(h,2) low bits, so integer order equals lexicographic order of the text.
  static Tournament from_code(int h, std::uint64_t code);
  static Tournament from_out_masks(int h, std::span<const Mask> out);

  int size() const noexcept { return h_; }
  int edge_count() const noexcept { return pair_count(h_); }

  bool edge(int u, int v) const noexcept { return (out_[u] >> v) & 1u; }
  Mask out_mask(int v) const noexcept { return out_[v]; }
  Mask in_mask(int v) const noexcept {
    return static_cast<Mask>(full_mask() & ~out_[v] & ~(Mask{1} << v));
  }
  Mask full_mask() const noexcept { return static_cast<Mask>((1u << h_) - 1u); }

  int out_degree(int v) const noexcept;
  std::vector<int> score_sequence() const;

  std::uint64_t code() const noexcept;
  std::string to_string() const;

  Tournament reversed() const;
  /// Vertex v of this tournament becomes vertex perm[v] of the result.
  Tournament relabeled(std::span<const int> perm) const;
  bool is_transitive() const noexcept;

  friend bool operator==(const Tournament& a, const Tournament& b) noexcept {
    return a.h_ == b.h_ && a.out_ == b.out_;
  }

 private:
  int h_ = 0;
  std::array<Mask, kMaxVertices> out_{};
};

/// Sub-tournament on the given vertices, renumbered by increasing original label.
/// Vertices are 0-based and need not be sorted; duplicates and out-of-range
/// entries raise BadSubset.
Tournament induced(const Tournament& t, std::span<const int> subset);

/// True iff some vertex subset of t induces a tournament isomorphic to pattern.
bool contains_subtournament(const Tournament& t, const Tournament& pattern);

}  // namespace tourlab
