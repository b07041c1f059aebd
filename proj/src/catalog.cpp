#include "tourlab/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "tourlab/error.hpp"
#include "tourlab/parallel.hpp"

namespace tourlab {

namespace {

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::vector<std::uint64_t> extend_level(const std::vector<Tournament>& parents, int h,
                                        unsigned threads) {
  const unsigned workers = worker_count(threads, parents.size());
  std::vector<std::vector<std::uint64_t>> found(workers);
  parallel_chunks(parents.size(), workers, [&](unsigned w, std::size_t begin, std::size_t end) {
    auto& local = found[w];
    const int s = h - 1;
    const std::uint32_t patterns = 1u << s;
    std::array<Tournament::Mask, kMaxVertices> out{};
    for (std::size_t i = begin; i < end; ++i) {
      const Tournament& parent = parents[i];
      for (std::uint32_t pat = 0; pat < patterns; ++pat) {
        // pat bit u set: new vertex s beats u; otherwise u beats s.
        for (int u = 0; u < s; ++u) {
          out[u] = parent.out_mask(u);
          if (!((pat >> u) & 1u)) out[u] |= static_cast<Tournament::Mask>(1u << s);
        }
        out[s] = static_cast<Tournament::Mask>(pat);
        local.push_back(canonize(Tournament::from_out_masks(h, std::span(out.data(), h))).form.code);
      }
      // Duplicates dominate the raw stream; compacting per parent batch keeps memory flat.
      if (local.size() > (1u << 20)) {
        std::sort(local.begin(), local.end());
        local.erase(std::unique(local.begin(), local.end()), local.end());
      }
    }
    std::sort(local.begin(), local.end());
    local.erase(std::unique(local.begin(), local.end()), local.end());
  });

  std::vector<std::uint64_t> merged;
  for (auto& part : found) merged.insert(merged.end(), part.begin(), part.end());
  std::sort(merged.begin(), merged.end());
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  return merged;
}

}  // namespace

TournamentCatalog enumerate(int h, const EnumerateOptions& options) {
  if (h < 1 || h > kMaxVertices) {
    throw Error(Errc::Unsupported,
                "enumeration supports 1 <= h <= " + std::to_string(kMaxVertices));
  }
  std::vector<Tournament> level{Tournament::transitive(1)};
  for (int s = 2; s <= h; ++s) {
    const auto codes = extend_level(level, s, options.threads);
    level.clear();
    level.reserve(codes.size());
    for (auto code : codes) level.push_back(Tournament::from_code(s, code));
  }
  return TournamentCatalog{h, std::move(level)};
}

std::filesystem::path cache_file(const std::filesystem::path& cache_dir, int h) {
  return cache_dir / ("tournaments_h" + std::to_string(h) + ".txt");
}

void write_catalog(const TournamentCatalog& catalog, const std::filesystem::path& file) {
  if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
  const auto tmp = std::filesystem::path(file.string() + ".tmp");
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw Error(Errc::Io, "cannot write " + tmp.string());
    os << "h=" << catalog.h << '\n';
    for (const auto& t : catalog.items) os << t.to_string() << '\n';
    if (!os) throw Error(Errc::Io, "write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, file);
}

TournamentCatalog read_catalog(const std::filesystem::path& file, int h) {
  std::ifstream is(file, std::ios::binary);
  if (!is) throw Error(Errc::Io, "cannot open " + file.string());
  const auto corrupt = [&](const std::string& why) {
    return Error(Errc::CorruptCache, file.string() + ": " + why);
  };

  std::string line;
  if (!std::getline(is, line) || line != "h=" + std::to_string(h)) {
    throw corrupt("missing or mismatched header");
  }
  TournamentCatalog catalog{h, {}};
  std::uint64_t mass = 0;
  const std::uint64_t hfact = factorial(h);
  bool have_prev = false;
  std::uint64_t prev = 0;
  while (std::getline(is, line)) {
    if (is.eof()) throw corrupt("last line not newline-terminated");
    Tournament t;
    try {
      t = Tournament::parse(line, h);
    } catch (const Error& e) {
      throw corrupt(std::string("bad line: ") + e.what());
    }
    const auto c = canonize(t);
    if (c.form.code != t.code()) throw corrupt("entry not in canonical form");
    if (have_prev && c.form.code <= prev) throw corrupt("entries not strictly sorted");
    have_prev = true;
    prev = c.form.code;
    mass += hfact / c.aut;
    catalog.items.push_back(t);
  }
  if (mass != (std::uint64_t{1} << pair_count(h))) {
    throw corrupt("labeled mass check failed (truncated or incomplete)");
  }
  return catalog;
}

CatalogLoad load_or_enumerate(int h, const std::filesystem::path& cache_dir,
                              const EnumerateOptions& options) {
  if (h < 1 || h > kMaxVertices) {
    throw Error(Errc::Unsupported,
                "enumeration supports 1 <= h <= " + std::to_string(kMaxVertices));
  }
  const auto file = cache_file(cache_dir, h);
  CatalogLoad result;
  if (std::filesystem::exists(file)) {
    try {
      result.catalog = read_catalog(file, h);
      result.source = CatalogSource::Cache;
      return result;
    } catch (const Error& e) {
      if (e.code() != Errc::CorruptCache) throw;
      result.warning = e.what();
      result.source = CatalogSource::Regenerated;
    }
  }
  result.catalog = enumerate(h, options);
  write_catalog(result.catalog, file);
  return result;
}

}  // namespace tourlab
