// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include <unistd.h>

#include "cli.hpp"
#include "oracles.hpp"
#include "tourlab/bias.hpp"
#include "tourlab/catalog.hpp"
#include "tourlab/classify.hpp"
#include "tourlab/construct.hpp"
#include "tourlab/density.hpp"
#include "tourlab/fas.hpp"

using namespace tourlab;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

const unsigned kThreads = std::max(1u, std::thread::hardware_concurrency());

std::map<int, TournamentCatalog>& catalogs() {
  static std::map<int, TournamentCatalog> c;
  return c;
}

const TournamentCatalog& catalog(int h) {
  auto& c = catalogs();
  if (!c.count(h)) c[h] = enumerate(h, {kThreads});
  return c.at(h);
}

std::map<int, std::vector<ClassificationRecord>>& record_cache() {
  static std::map<int, std::vector<ClassificationRecord>> r;
  return r;
}

const std::vector<ClassificationRecord>& records(int h) {
  auto& r = record_cache();
  if (!r.count(h)) r[h] = classify_catalog(catalog(h), kThreads);
  return r.at(h);
}

Rational q(const char* s) { return parse_rational(s); }

Polynomial even(std::initializer_list<const char*> cs) {
  std::vector<Rational> v;
  for (const char* c : cs) {
    v.push_back(q(c));
    v.push_back(0);
  }
  return Polynomial(std::move(v));
}

std::multiset<std::string> keys(const std::vector<Polynomial>& ps) {
  std::multiset<std::string> out;
  for (const auto& p : ps) out.insert(p.pairs());
  return out;
}

Outcome enumeration_counts() {
  Outcome o;
  const std::map<int, std::size_t> expected{{3, 2}, {4, 4}, {5, 12}, {6, 56}, {7, 456}, {8, 6880}, {9, 191536}};
  for (const auto& [h, count] : expected) {
    const auto got = catalog(h).size();
    o.require(got == count, "h=" + std::to_string(h) + " gave " + std::to_string(got));
  }
  o.detail = o.pass ? "2 4 12 56 456 6880 191536 for h=3..9" : o.detail;
  return o;
}

Outcome bias_tables() {
  Outcome o;
  std::vector<Polynomial> four, five;
  for (const auto& r : records(4)) four.push_back(r.bias.poly);
  for (const auto& r : records(5)) five.push_back(r.bias.poly);
  o.require(keys(four) == keys({even({"3/8", "2", "2"}), even({"3/8", "-2", "2"}), even({"1/8", "0", "-2"}),
                                 even({"1/8", "0", "-2"})}),
            "h=4 multiset differs");
  o.require(keys(five) == keys({
                              even({"15/128", "25/16", "6", "7", "2"}),
                              even({"5/128", "5/16", "-1/2", "-5", "-2"}),
                              even({"15/128", "5/16", "-4", "3", "2"}),
                              even({"5/128", "5/16", "-1/2", "-5", "-2"}),
                              even({"15/128", "-5/16", "1/2", "-3", "-6"}),
                              even({"15/128", "5/16", "-4", "3", "2"}),
                              even({"5/128", "5/16", "-1/2", "-5", "-2"}),
                              even({"15/128", "-5/16", "-5/2", "5", "10"}),
                              even({"15/128", "-15/16", "2", "-1", "2"}),
                              even({"5/128", "-5/16", "1", "-3", "6"}),
                              even({"15/128", "-15/16", "1", "7", "-14"}),
                              even({"3/128", "-5/16", "3/2", "-3", "2"}),
                          }),
            "h=5 multiset differs");
  if (o.pass) o.detail = "4 and 12 polynomials equal exactly";
  return o;
}

Outcome bias_subset_counts() {
  Outcome o;
  const std::map<int, std::size_t> expected{{3, 1}, {4, 1}, {5, 6}, {6, 25}, {7, 199}, {8, 2769}, {9, 79229}};
  std::string got_all;
  for (const auto& [h, count] : expected) {
    const auto s = summarize(h, records(h));
    got_all += (got_all.empty() ? "" : " ") + std::to_string(s.bias_subset);
    o.require(s.bias_subset == count, "h=" + std::to_string(h) + " gave " + std::to_string(s.bias_subset));
  }
  if (o.pass) o.detail = got_all + " for h=3..9";
  return o;
}

Outcome bias_identities() {
  Outcome o;
  for (int h = 2; h <= 7; ++h) {
    Polynomial sum;
    for (const auto& r : records(h)) {
      const auto& b = r.bias;
      for (int e = 1; e <= b.poly.degree(); e += 2) {
        o.require(b.poly.coeff(e) == 0, "odd coefficient at h=" + std::to_string(h));
      }
      o.require(b(0) == r.typical_density, "B(H,0) != d(H) at h=" + std::to_string(h));
      const Rational end = r.canonical_form.tournament().is_transitive() ? 1 : 0;
      o.require(b(Rational(1, 2)) == end && b(Rational(-1, 2)) == end, "endpoint at h=" + std::to_string(h));
      sum += b.poly;
    }
    o.require(sum == Polynomial({1}), "sum not 1 at h=" + std::to_string(h));
  }
  if (o.pass) o.detail = "evenness, B(H,0)=d(H), endpoints, sum=1 for h=2..7";
  return o;
}

Outcome fas_oracle() {
  Outcome o;
  int checked = 0;
  for (int h = 1; h <= 5; ++h) {
    for (const auto& t : catalog(h).items) {
      o.require(min_fas(t).max_forward == oracle::max_forward(t), "mismatch at h=" + std::to_string(h));
      ++checked;
    }
  }
  for (int h = 1; h <= 8; ++h) {
    o.require(min_fas(Tournament::transitive(h)).a == 0, "a(T_h) != 0");
    for (const auto& r : records(h)) o.require(2 * r.fas.a <= pair_count(h), "a above C(h,2)/2");
  }
  if (o.pass) o.detail = std::to_string(checked) + " classes match brute force; bounds hold to h=8";
  return o;
}

Outcome histogram_oracle() {
  Outcome o;
  for (int h = 1; h <= 5; ++h) {
    for (const auto& t : catalog(h).items) {
      o.require(forward_histogram(t).counts == oracle::forward_histogram(t), "mismatch at h=" + std::to_string(h));
    }
  }
  for (int h = 1; h <= 8; ++h) {
    for (const auto& t : catalog(h).items) {
      std::uint64_t total = 0;
      for (auto c : forward_histogram(t).counts) total += c;
      o.require(total == oracle::factorial(h), "mass != h! at h=" + std::to_string(h));
    }
  }
  if (o.pass) o.detail = "DP equals enumeration to h=5; sum N[k]=h! to h=8";
  return o;
}

Outcome labeled_mass() {
  Outcome o;
  for (int h = 1; h <= 8; ++h) {
    std::uint64_t mass = 0;
    for (const auto& r : records(h)) mass += oracle::factorial(h) / r.aut;
    o.require(mass == (std::uint64_t{1} << pair_count(h)), "h=" + std::to_string(h));
  }
  if (o.pass) o.detail = "sum h!/aut = 2^C(h,2) for h=1..8";
  return o;
}

Outcome construction_structure() {
  Outcome o;
  std::mt19937_64 rng(8);
  for (const auto& star : {Tournament::cyclic3(), Tournament::transitive(4)}) {
    const auto g = build_transversal(60, 6, star, Seed{2025});
    const auto l = transversal_layout(60, 6, star.size());
    int violations = 0;
    for (int u = 0; u < 60; ++u) {
      for (int v = u + 1; v < 60; ++v) {
        const int pu = l.part_of(u), pv = l.part_of(v);
        if (pu != pv && pu < l.k && pv < l.k) violations += g.edge(u, v) != star.edge(pu, pv);
      }
    }
    o.require(violations == 0, std::to_string(violations) + " between-part violations");
    int bad = 0;
    for (int s = 0; s < 1000; ++s) {
      std::vector<int> pick;
      for (int part = 0; part < l.k; ++part) pick.push_back(l.first_of(part) + static_cast<int>(rng() % l.part_size));
      bad += !(induced(g, pick) == star);
    }
    o.require(bad == 0, std::to_string(bad) + " sampled transversals differ");
  }
  if (o.pass) o.detail = "n=60 h=6, H*=C3 and T4: 0 violations, 2000/2000 transversals";
  return o;
}

Outcome desk_dominance() {
  Outcome o;
  const auto g = build_tnp(60, q("3/5"), Seed{7});
  const auto exact = density_exact(g, Tournament::transitive(4), kThreads);
  const Rational bound = q("21/20") * q("3/8");
  o.require(exact.estimate > bound, "T(60,3/5) T4 density " + to_string(exact.estimate));

  const auto b = build_blowup({Tournament::transitive(4)}, 2 * blowup_template_size(4, 1), Seed{7});
  const auto mc = density_montecarlo(b.graph, Tournament::transitive(4), 1'000'000, Seed{7}, kThreads);
  const double floor = 24.0 / std::pow(b.r, 4);
  o.require(mc.estimate.get_d() > floor - 4 * mc.std_error, "blow-up MC density too low");

  std::ostringstream d;
  d.precision(6);
  d << "T(60,3/5) seed 7: " << exact.estimate.get_d() << " > " << bound.get_d() << "; blow-up r=" << b.r
    << " n=" << b.graph.size() << ": " << mc.estimate.get_d() << " > " << floor << " - 4*" << mc.std_error;
  if (o.pass) o.detail = d.str();
  return o;
}

Outcome estimator_calibration() {
  Outcome o;
  const auto g = build_tnp(30, q("1/2"), Seed{30});
  double worst = 0;
  for (const auto& t : catalog(4).items) {
    const auto exact = density_exact(g, t, kThreads);
    const auto mc = density_montecarlo(g, t, 100'000, Seed{2718}, kThreads);
    const double z = std::abs(mc.estimate.get_d() - exact.estimate.get_d()) / mc.std_error;
    worst = std::max(worst, z);
    o.require(z <= 4, "MC off by " + std::to_string(z) + " sigma");
  }
  const auto g20 = build_tnp(20, q("1/2"), Seed{20});
  Rational total = 0;
  for (const auto& r : dominance_report(catalog(4).items, g20, Rational(0), {})) total += r.estimate;
  o.require(total == 1, "partition of unity sums to " + to_string(total));
  if (o.pass) o.detail = "max deviation " + std::to_string(worst).substr(0, 4) + " sigma; n=20 h=4 densities sum to 1";
  return o;
}

struct CliRun {
  int code;
  std::string out;
};

CliRun cli_run(std::vector<std::string> args) {
  args.insert(args.begin(), "tourlab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(is), {}};
}

Outcome determinism() {
  Outcome o;
  const auto dir = fs::temp_directory_path() / ("tourlab_acceptance_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  const auto cache = (dir / "cache").string();
  const auto graph = (dir / "graph.txt").string();
  {
    std::ofstream os(dir / "family.txt");
    os << "000000\n101100\n";
  }
  const std::vector<std::vector<std::string>> builders{
      {"construct", "tnp", "--n", "120", "--p", "3/5"},
      {"construct", "transversal", "--n", "60", "--h", "6", "--hstar", "C3"},
      {"construct", "blowup", "--n", "24", "--family", (dir / "family.txt").string()},
  };
  int matrix = 0;
  for (const auto& b : builders) {
    std::vector<std::string> bytes;
    for (const char* threads : {"1", "1", "4"}) {
      auto args = b;
      const auto file = (dir / "built.txt").string();
      args.insert(args.begin(), {"--threads", threads, "--cache-dir", cache});
      args.insert(args.end(), {"--seed", "13", "--out", file});
      const auto r = cli_run(args);
      o.require(r.code == 0, b[1] + " failed");
      bytes.push_back(r.out + slurp(file));
    }
    o.require(bytes[0] == bytes[1] && bytes[0] == bytes[2], b[1] + " output differs");
    ++matrix;
  }
  o.require(cli_run({"construct", "tnp", "--n", "60", "--p", "3/5", "--seed", "7", "--out", graph}).code == 0,
            "graph build failed");
  const std::vector<std::vector<std::string>> commands{
      {"enumerate", "--h", "7"},
      {"bias-table", "--h", "6"},
      {"classify", "--h", "7"},
      {"fas-table", "--h", "6", "--t", "1", "--x", "1/5"},
      {"density", "--graph", graph, "--pattern", "all", "--h", "4"},
      {"density", "--graph", graph, "--pattern", "all", "--h", "5", "--mode", "mc", "--samples", "50000"},
      {"dominance-check", "--h", "4", "--x", "1/10", "--graph", graph, "--beta", "1/20"},
  };
  for (const auto& c : commands) {
    for (const char* format : {"csv", "json"}) {
      std::vector<std::string> outs;
      for (const char* threads : {"1", "1", "4"}) {
        auto args = c;
        args.insert(args.begin(), {"--threads", threads, "--cache-dir", cache, "--format", format});
        const auto r = cli_run(args);
        o.require(r.code == 0, c[0] + " failed");
        outs.push_back(r.out);
      }
      o.require(outs[0] == outs[1] && outs[0] == outs[2], c[0] + " (" + format + ") output differs");
      ++matrix;
    }
  }
  fs::remove_all(dir);
  if (o.pass) o.detail = std::to_string(matrix) + " command/format cases identical over runs and threads {1,4}";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"enumeration counts", enumeration_counts},
      {"bias tables for h=4 and h=5", bias_tables},
      {"|B_h| counts", bias_subset_counts},
      {"bias polynomial identities", bias_identities},
      {"FAS oracle equivalence", fas_oracle},
      {"forward-histogram oracle", histogram_oracle},
      {"labeled-mass identity", labeled_mass},
      {"transversal construction structure", construction_structure},
      {"dominance at desk scale", desk_dominance},
      {"estimator calibration", estimator_calibration},
      {"determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !o.pass;
    std::printf("%s criterion %zu: %s (%s) [%.1fs]\n", o.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failures;
}
