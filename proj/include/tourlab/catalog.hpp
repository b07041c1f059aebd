#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "tourlab/canonical.hpp"
#include "tourlab/tournament.hpp"

namespace tourlab {

/// All tournaments on h vertices up to isomorphism, each stored in canonical
/// form and sorted by canonical code.
struct TournamentCatalog {
  int h = 0;
  std::vector<Tournament> items;

  std::size_t size() const noexcept { return items.size(); }
};

struct EnumerateOptions {
  unsigned threads = 1;
};

/// Isomorph-free generation by one-vertex extension of the (h-1)-catalog.
/// h outside 1..10 raises Unsupported.
TournamentCatalog enumerate(int h, const EnumerateOptions& options = {});

enum class CatalogSource { Cache, Enumerated, Regenerated };

struct CatalogLoad {
  TournamentCatalog catalog;
  CatalogSource source = CatalogSource::Enumerated;
  /// Non-empty when a corrupt cache file was discarded.
  std::string warning;
};

std::filesystem::path cache_file(const std::filesystem::path& cache_dir, int h);

/// Reads tournaments_h<k>.txt from cache_dir when present and valid, otherwise
/// enumerates and writes it. A corrupt file is reported through `warning`.
CatalogLoad load_or_enumerate(int h, const std::filesystem::path& cache_dir,
                              const EnumerateOptions& options = {});

void write_catalog(const TournamentCatalog& catalog, const std::filesystem::path& file);
/// Parses and validates a cache file: every line canonical, strictly sorted,
/// and the labeled mass sum of h!/aut equals 2^C(h,2). Throws CorruptCache.
TournamentCatalog read_catalog(const std::filesystem::path& file, int h);

}  // namespace tourlab
