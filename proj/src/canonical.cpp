#include "tourlab/canonical.hpp"

#include <bit>
#include <limits>

namespace tourlab {

namespace {

using Mask = Tournament::Mask;

// Branch-and-bound over vertex placements, one position per level.
//
// Unplaced vertices are kept in an ordered partition ("cells"): every vertex of
// a cell has the same relation to all placed vertices, and cell order fixes the
// position ranges. Placing vertex v at the next position emits row p of the code,
// whose minimum for each cell is 0^{in}1^{out}; so only candidates minimizing the
// row survive, and each cell then splits into (in-neighbours of v, out-neighbours).
// Every labeling that attains the global minimum follows such a path, hence the
// number of minimal leaves equals the automorphism count.
class LexMinSearch {
 public:
  explicit LexMinSearch(const Tournament& t) : t_(t), h_(t.size()), m_(pair_count(t.size())) {
    for (int v = 0; v < h_; ++v) in_[v] = t.in_mask(v);
  }

  Canonization run() {
    std::array<Mask, kMaxVertices> cells{};
    int ncells = 0;
    if (h_ > 0) cells[ncells++] = t_.full_mask();
    descend(0, cells, ncells, 0, 0);
    Canonization out;
    out.form = CanonicalForm{h_, best_code_};
    out.aut = aut_;
    out.labeling = best_labeling_;
    return out;
  }

 private:
  void descend(int depth, const std::array<Mask, kMaxVertices>& cells, int ncells,
               std::uint64_t code, int bits) {
    if (depth == h_) {
      if (!have_best_ || code < best_code_) {
        have_best_ = true;
        best_code_ = code;
        aut_ = 1;
        best_labeling_ = labeling_;
      } else if (code == best_code_) {
        ++aut_;
      }
      return;
    }

    const Mask first = cells[0];
    std::uint64_t best_row = std::numeric_limits<std::uint64_t>::max();
    Mask winners = 0;
    for (Mask rest = first; rest; rest &= static_cast<Mask>(rest - 1)) {
      const int v = std::countr_zero(rest);
      const std::uint64_t row = row_for(v, cells, ncells);
      if (row < best_row) {
        best_row = row;
        winners = static_cast<Mask>(1u << v);
      } else if (row == best_row) {
        winners |= static_cast<Mask>(1u << v);
      }
    }

    const int row_len = h_ - depth - 1;
    const std::uint64_t next_code = (code << row_len) | best_row;
    const int next_bits = bits + row_len;
    if (have_best_ && next_bits > 0) {
      const std::uint64_t best_prefix = best_code_ >> (m_ - next_bits);
      if (next_code > best_prefix) return;
    }

    for (Mask rest = winners; rest; rest &= static_cast<Mask>(rest - 1)) {
      const int v = std::countr_zero(rest);
      std::array<Mask, kMaxVertices> next{};
      int nnext = 0;
      const Mask in = in_[v];
      for (int c = 0; c < ncells; ++c) {
        const Mask cell = c == 0 ? static_cast<Mask>(cells[0] & ~(1u << v)) : cells[c];
        const Mask lo = cell & in;
        const Mask hi = cell & static_cast<Mask>(~in);
        if (lo) next[nnext++] = lo;
        if (hi) next[nnext++] = hi;
      }
      labeling_[v] = depth;
      descend(depth + 1, next, nnext, next_code, next_bits);
    }
  }

  std::uint64_t row_for(int v, const std::array<Mask, kMaxVertices>& cells, int ncells) const {
    std::uint64_t row = 0;
    const Mask in = in_[v];
    for (int c = 0; c < ncells; ++c) {
      const Mask cell = c == 0 ? static_cast<Mask>(cells[0] & ~(1u << v)) : cells[c];
      const int size = std::popcount(cell);
      const int zeros = std::popcount(static_cast<Mask>(cell & in));
      row = (row << size) | ((std::uint64_t{1} << (size - zeros)) - 1u);
    }
    return row;
  }

  const Tournament& t_;
  int h_;
  int m_;
  std::array<Mask, kMaxVertices> in_{};
  std::array<int, kMaxVertices> labeling_{};
  std::array<int, kMaxVertices> best_labeling_{};
  bool have_best_ = false;
  std::uint64_t best_code_ = 0;
  std::uint64_t aut_ = 0;
};

}  // namespace

Canonization canonize(const Tournament& t) { return LexMinSearch(t).run(); }

}  // namespace tourlab
