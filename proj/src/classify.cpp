#include "tourlab/classify.hpp"

#include <atomic>
#include <mutex>

#include "tourlab/parallel.hpp"

namespace tourlab {

ClassificationRecord classify(const Tournament& t) {
  const auto c = canonize(t);
  ClassificationRecord r;
  r.canonical_form = c.form;
  r.aut = c.aut;
  r.typical_density = typical_density(t.size(), c.aut);
  // The histogram is label-independent, so the canonical tournament serves.
  r.bias = bias_polynomial(forward_histogram(c.form.tournament()), c.aut);
  r.fas = min_fas(c.form.tournament());
  r.in_Bh = in_bias_subset(r.bias);
  return r;
}

std::vector<ClassificationRecord> classify_catalog(const TournamentCatalog& catalog,
                                                   unsigned threads, const Progress& progress) {
  constexpr std::size_t kStep = 4096;
  std::vector<ClassificationRecord> records(catalog.size());
  std::atomic<std::size_t> done{0};
  std::mutex report;
  parallel_chunks(catalog.size(), threads, [&](unsigned, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      records[i] = classify(catalog.items[i]);
      const std::size_t d = ++done;
      if (progress && d % kStep == 0) {
        std::lock_guard lock(report);
        progress(d, catalog.size());
      }
    }
  });
  if (progress) progress(catalog.size(), catalog.size());
  return records;
}

ClassSummary summarize(int h, const std::vector<ClassificationRecord>& records) {
  ClassSummary s;
  s.h = h;
  s.classes = records.size();
  for (const auto& r : records) s.bias_subset += r.in_Bh ? 1 : 0;
  if (s.classes > 0) {
    s.ratio = Rational(static_cast<unsigned long>(s.bias_subset),
                       static_cast<unsigned long>(s.classes));
    s.ratio.canonicalize();
  }
  return s;
}

Polynomial bias_sum(const std::vector<ClassificationRecord>& records, unsigned threads) {
  const unsigned workers = worker_count(threads, records.size());
  std::vector<Polynomial> partial(workers);
  parallel_chunks(records.size(), workers, [&](unsigned w, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) partial[w] += records[i].bias.poly;
  });
  Polynomial total;
  for (const auto& p : partial) total += p;
  return total;
}

}  // namespace tourlab
