#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "tourlab/bias.hpp"
#include "tourlab/canonical.hpp"
#include "tourlab/catalog.hpp"
#include "tourlab/fas.hpp"

namespace tourlab {

struct ClassificationRecord {
  CanonicalForm canonical_form;
  std::uint64_t aut = 0;
  Rational typical_density;
  BiasPolynomial bias;
  FasResult fas;
  bool in_Bh = false;
};

ClassificationRecord classify(const Tournament& t);

/// Called with (records done, total) every few thousand records; may run on any worker.
using Progress = std::function<void(std::size_t, std::size_t)>;

/// One record per catalog entry, in catalog order.
std::vector<ClassificationRecord> classify_catalog(const TournamentCatalog& catalog,
                                                   unsigned threads = 1,
                                                   const Progress& progress = {});

struct ClassSummary {
  int h = 0;
  std::size_t classes = 0;
  std::size_t bias_subset = 0;
  Rational ratio;
};

ClassSummary summarize(int h, const std::vector<ClassificationRecord>& records);

/// Sum of all bias polynomials; identically 1 over a complete catalog.
Polynomial bias_sum(const std::vector<ClassificationRecord>& records, unsigned threads = 1);

}  // namespace tourlab
