#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "tourlab/tournament.hpp"

namespace tourlab {

/// How a BigTournament was produced: {"kind": ..., "params": {...}, "seed": ...}.
struct Provenance {
  std::string kind;
  nlohmann::json params = nlohmann::json::object();
  std::uint64_t seed = 0;

  nlohmann::json to_json() const;
  static Provenance from_json(const nlohmann::json& j);
  friend bool operator==(const Provenance&, const Provenance&) = default;
};

/// n-vertex tournament stored as packed out-neighbour rows.
class BigTournament {
 public:
  BigTournament() = default;
  /// All pairs oriented low -> high until overwritten.
  explicit BigTournament(int n);

  int size() const noexcept { return n_; }
  bool edge(int u, int v) const noexcept {
    return (rows_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
  }
  /// Orients the pair {u, v} as u -> v.
  void orient(int u, int v) noexcept;

  const Provenance& provenance() const noexcept { return provenance_; }
  void set_provenance(Provenance p) { provenance_ = std::move(p); }

  /// Orient bits over pairs i < j in lexicographic order, '1' meaning i -> j.
  std::string orient_string() const;
  std::uint64_t forward_count() const;

  void write(std::ostream& os) const;
  static BigTournament read(std::istream& is);
  void save(const std::filesystem::path& file) const;
  static BigTournament load(const std::filesystem::path& file);

  friend bool operator==(const BigTournament& a, const BigTournament& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_ && a.provenance_ == b.provenance_;
  }

 private:
  int n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
  Provenance provenance_;
};

/// Sub-tournament on at most 10 vertices, renumbered by increasing label.
Tournament induced(const BigTournament& g, std::span<const int> subset);

inline constexpr int kMaxBigVertices = 4096;
inline constexpr std::size_t kBitLineWidth = 512;

}  // namespace tourlab
