#include "tourlab/big_tournament.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <istream>
#include <ostream>

#include "tourlab/error.hpp"

namespace tourlab {

nlohmann::json Provenance::to_json() const {
  return nlohmann::json{{"kind", kind}, {"params", params}, {"seed", seed}};
}

Provenance Provenance::from_json(const nlohmann::json& j) {
  Provenance p;
  p.kind = j.at("kind").get<std::string>();
  p.params = j.at("params");
  p.seed = j.at("seed").get<std::uint64_t>();
  return p;
}

BigTournament::BigTournament(int n) : n_(n) {
  if (n < 1 || n > kMaxBigVertices) {
    throw Error(Errc::Unsupported, "tournament size " + std::to_string(n) + " outside 1.." +
                                       std::to_string(kMaxBigVertices));
  }
  words_ = (static_cast<std::size_t>(n) + 63) / 64;
  rows_.assign(static_cast<std::size_t>(n) * words_, 0);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) rows_[u * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  }
}

void BigTournament::orient(int u, int v) noexcept {
  rows_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  rows_[static_cast<std::size_t>(v) * words_ + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
}

std::string BigTournament::orient_string() const {
  std::string s;
  s.reserve(static_cast<std::size_t>(n_) * (n_ - 1) / 2);
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) s.push_back(edge(i, j) ? '1' : '0');
  }
  return s;
}

std::uint64_t BigTournament::forward_count() const {
  std::uint64_t count = 0;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) count += edge(i, j);
  }
  return count;
}

void BigTournament::write(std::ostream& os) const {
  os << "n=" << n_ << '\n' << provenance_.to_json().dump() << '\n';
  const std::string bits = orient_string();
  for (std::size_t off = 0; off < bits.size(); off += kBitLineWidth) {
    os << std::string_view(bits).substr(off, kBitLineWidth) << '\n';
  }
}

BigTournament BigTournament::read(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line.rfind("n=", 0) != 0) {
    throw Error(Errc::Io, "tournament file must start with 'n=<n>'");
  }
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(line.substr(2), &used);
    if (used != line.size() - 2) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw Error(Errc::Io, "bad header '" + line + "'");
  }
  BigTournament g(n);
  if (!std::getline(is, line)) throw Error(Errc::Io, "missing provenance line");
  try {
    g.provenance_ = Provenance::from_json(nlohmann::json::parse(line));
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::Io, std::string("bad provenance line: ") + e.what());
  }

  std::string bits;
  const std::size_t m = static_cast<std::size_t>(n) * (n - 1) / 2;
  bits.reserve(m);
  while (std::getline(is, line)) {
    if (line.size() > kBitLineWidth) throw Error(Errc::Io, "bit line longer than 512");
    bits += line;
  }
  if (bits.size() != m) {
    throw Error(Errc::WrongLength,
                "expected " + std::to_string(m) + " orientation bits, got " + std::to_string(bits.size()));
  }
  std::size_t idx = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++idx) {
      const char c = bits[idx];
      if (c == '1') {
        g.orient(i, j);
      } else if (c == '0') {
        g.orient(j, i);
      } else {
        throw Error(Errc::BadCharacter, "orientation bit " + std::to_string(idx));
      }
    }
  }
  return g;
}

void BigTournament::save(const std::filesystem::path& file) const {
  std::ofstream os(file, std::ios::binary | std::ios::trunc);
  if (!os) throw Error(Errc::Io, "cannot write " + file.string());
  write(os);
  if (!os) throw Error(Errc::Io, "write failed for " + file.string());
}

BigTournament BigTournament::load(const std::filesystem::path& file) {
  std::ifstream is(file, std::ios::binary);
  if (!is) throw Error(Errc::Io, "cannot open " + file.string());
  return read(is);
}

Tournament induced(const BigTournament& g, std::span<const int> subset) {
  if (subset.empty() || subset.size() > static_cast<std::size_t>(kMaxVertices)) {
    throw Error(Errc::BadSubset, "subset size must be 1.." + std::to_string(kMaxVertices));
  }
  std::vector<int> verts(subset.begin(), subset.end());
  std::sort(verts.begin(), verts.end());
  if (std::adjacent_find(verts.begin(), verts.end()) != verts.end()) {
    throw Error(Errc::BadSubset, "duplicate vertex in subset");
  }
  if (verts.front() < 0 || verts.back() >= g.size()) {
    throw Error(Errc::BadSubset, "vertex outside 1.." + std::to_string(g.size()));
  }
  const int k = static_cast<int>(verts.size());
  std::array<Tournament::Mask, kMaxVertices> out{};
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      if (a != b && g.edge(verts[a], verts[b])) out[a] |= static_cast<Tournament::Mask>(1u << b);
    }
  }
  return Tournament::from_out_masks(k, std::span(out.data(), k));
}

}  // namespace tourlab
