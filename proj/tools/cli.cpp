#include "cli.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tourlab/bias.hpp"
#include "tourlab/catalog.hpp"
#include "tourlab/classify.hpp"
#include "tourlab/construct.hpp"
#include "tourlab/density.hpp"
#include "tourlab/fas.hpp"
#include "tourlab/parallel.hpp"

namespace tourlab::cli {

int exit_code(Errc code) noexcept {
  switch (code) {
    case Errc::Unsupported:
    case Errc::TooLarge:
    case Errc::PackingFailed:
      return kExitResource;
    case Errc::OddCoefficientResidue:
    case Errc::CorruptCache:
      return kExitInternal;
    default:
      return kExitBadArgs;
  }
}

namespace {

namespace fs = std::filesystem;
using Row = std::vector<nlohmann::json>;

// Orders at or above these need --allow-long.
constexpr int kLongClassify = 9;
constexpr int kLongEnumerate = 10;

struct Settings {
  // shared
  unsigned threads = 1;
  std::string cache_dir;
  std::string format = "csv";
  std::string out;
  bool allow_long = false;
  bool dump_config = false;
  // command parameters
  int h = 0;
  std::string x;
  std::string t;
  int n = 0;
  std::string p = "1/2";
  std::uint64_t seed = 1;
  std::uint64_t samples = 100000;
  std::string kind;
  std::string hstar;
  std::string family;
  std::string graph;
  std::string pattern;
  std::string mode = "exact";
  std::string beta = "0";
  int max_restarts = 1000;
};

struct Table {
  std::vector<std::string> columns;
  std::vector<Row> rows;
};

std::string cell_text(const nlohmann::json& v) {
  return v.is_string() ? v.get<std::string>() : v.dump();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

void emit(const Table& table, const std::string& format, std::ostream& os) {
  if (format == "json") {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
      nlohmann::ordered_json obj = nlohmann::ordered_json::object();
      for (std::size_t i = 0; i < table.columns.size(); ++i) obj[table.columns[i]] = row[i];
      arr.push_back(std::move(obj));
    }
    os << arr.dump(2) << '\n';
    return;
  }
  for (std::size_t i = 0; i < table.columns.size(); ++i) os << (i ? "," : "") << table.columns[i];
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(cell_text(row[i]));
    os << '\n';
  }
}

std::string approx(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string witness_text(const std::vector<int>& order) {
  std::string s;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(order[i] + 1);
  }
  return s;
}

std::string num(const Rational& q) { return q.get_num().get_str(); }
std::string den(const Rational& q) { return q.get_den().get_str(); }

fs::path default_cache_dir() {
  if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "tourlab";
  return ".tourlab-cache";
}

class Runner {
 public:
  Runner(Settings& s, std::ostream& out, std::ostream& err) : s_(s), out_(out), err_(err) {}

  void enumerate_cmd() {
    check_order(s_.h, kLongEnumerate);
    const auto cat = catalog(s_.h);
    emit_table({{"h", "classes"}, {{s_.h, cat.size()}}});
  }

  void bias_table() {
    check_order(s_.h, kLongClassify);
    Table t{{"h", "canon", "aut", "d_num", "d_den", "fas", "in_Bh", "bias", "max_forward", "witness"}, {}};
    for (const auto& r : records(s_.h)) {
      t.rows.push_back({s_.h, r.canonical_form.tournament().to_string(), r.aut, num(r.typical_density),
                        den(r.typical_density), r.fas.a, r.in_Bh, r.bias.poly.pretty(),
                        r.fas.max_forward, witness_text(r.fas.witness_order)});
    }
    emit_table(t);
  }

  void classify_cmd() {
    check_order(s_.h, kLongClassify);
    const auto s = summarize(s_.h, records(s_.h));
    err_ << "h=" << s.h << " T=" << s.classes << " B=" << s.bias_subset << " ratio=" << to_string(s.ratio)
         << " ~" << approx(s.ratio.get_d()) << '\n';
    emit_table({{"h", "classes", "bias_subset", "ratio", "ratio_approx"},
                {{s.h, s.classes, s.bias_subset, to_string(s.ratio), approx(s.ratio.get_d())}}});
  }

  void fas_table() {
    check_order(s_.h, kLongClassify);
    std::optional<Rational> t, x;
    if (!s_.t.empty()) t = parse_rational(s_.t);
    if (!s_.x.empty()) x = parse_rational(s_.x);
    Table table{{"h", "canon", "fas", "max_forward", "witness"}, {}};
    if (t) table.columns.insert(table.columns.end(), {"t", "in_A"});
    if (x) table.columns.insert(table.columns.end(), {"x", "condition"});
    const auto cat = catalog(s_.h);
    std::vector<FasResult> results(cat.size());
    parallel_fas(cat, results);
    for (std::size_t i = 0; i < cat.size(); ++i) {
      const auto& r = results[i];
      Row row{s_.h, cat.items[i].to_string(), r.a, r.max_forward, witness_text(r.witness_order)};
      if (t) {
        row.push_back(to_string(*t));
        row.push_back(in_A(r, s_.h, *t));
      }
      if (x) {
        row.push_back(to_string(*x));
        row.push_back(fas_dominance_condition(s_.h, r.a, *x));
      }
      table.rows.push_back(std::move(row));
    }
    emit_table(table);
  }

  void construct_cmd() {
    const Seed seed{s_.seed};
    Table table;
    BigTournament g;
    if (s_.kind == "tnp") {
      const auto p = parse_rational(s_.p);
      g = build_tnp(s_.n, p, seed);
      table = {{"kind", "n", "seed", "p", "forward_edges"},
               {{s_.kind, s_.n, s_.seed, to_string(p), g.forward_count()}}};
    } else if (s_.kind == "transversal") {
      const auto star = single_pattern(s_.hstar, "--hstar");
      g = build_transversal(s_.n, s_.h, star, seed);
      table = {{"kind", "n", "seed", "h", "hstar", "forward_edges"},
               {{s_.kind, s_.n, s_.seed, s_.h, star.to_string(), g.forward_count()}}};
    } else {
      if (s_.family.empty()) throw Error(Errc::BadParameters, "blowup needs --family");
      const auto family = resolve_patterns(s_.family, 0);
      const auto b = build_blowup(family, s_.n, seed, s_.max_restarts);
      g = b.graph;
      table = {{"kind", "n", "seed", "r", "part_size", "copies", "restarts", "beats_typical_bound",
                "forward_edges"},
               {{s_.kind, s_.n, s_.seed, b.r, b.part_size(), b.copies.size(), b.restarts,
                 b.beats_typical_bound, g.forward_count()}}};
    }
    if (s_.out.empty()) throw Error(Errc::BadParameters, "construct needs --out");
    g.save(s_.out);
    table_to(table, out_);
  }

  void density_cmd() {
    const auto g = BigTournament::load(s_.graph);
    const auto patterns = resolve_patterns(s_.pattern, s_.h);
    const auto beta = parse_rational(s_.beta);
    const auto reports = dominance_report(patterns, g, beta, density_options());
    Table table = density_columns();
    std::size_t met = 0;
    for (const auto& r : reports) {
      table.rows.push_back(density_row(r));
      met += r.meets_margin();
    }
    err_ << met << " of " << reports.size() << " patterns meet (1+" << to_string(beta) << ")d(H)\n";
    emit_table(table);
  }

  void dominance_check() {
    check_order(s_.h, kLongClassify);
    if (s_.x.empty()) throw Error(Errc::BadParameters, "dominance-check needs --x");
    const auto x = parse_rational(s_.x);
    const auto recs = records(s_.h);
    std::vector<Tournament> members;
    std::vector<BiasPolynomial> biases;
    Table table{{"h", "x", "canon", "aut", "typical", "bias_at_x", "excess"}, {}};
    for (const auto& r : recs) {
      if (!in_F(r.bias, x)) continue;
      members.push_back(r.canonical_form.tournament());
      biases.push_back(r.bias);
      const Rational b = r.bias(x);
      table.rows.push_back({s_.h, to_string(x), members.back().to_string(), r.aut, to_string(r.typical_density),
                            to_string(b), to_string(Rational(b / r.typical_density - 1))});
    }
    err_ << "F(" << s_.h << ", " << to_string(x) << "): " << members.size() << " of " << recs.size()
         << " classes\n";
    if (!biases.empty()) {
      const auto margin = ordered_model_margin(biases, x);
      err_ << "ordered-model margin " << to_string(margin) << " ~" << approx(margin.get_d()) << '\n';
    }
    if (!s_.graph.empty() && !members.empty()) {
      const auto g = BigTournament::load(s_.graph);
      const auto reports = dominance_report(members, g, parse_rational(s_.beta), density_options());
      for (const char* c : {"estimate", "margin", "meets_margin"}) table.columns.push_back(c);
      for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto& r = reports[i];
        table.rows[i].push_back(r.mode == DensityMode::Exact ? to_string(r.estimate)
                                                             : approx(r.estimate.get_d()));
        table.rows[i].push_back(to_string(r.margin));
        table.rows[i].push_back(r.meets_margin());
      }
    }
    emit_table(table);
  }

 private:
  Settings& s_;
  std::ostream& out_;
  std::ostream& err_;

  void check_order(int h, int long_from) const {
    if (h < 1 || h > kMaxVertices) {
      throw Error(Errc::Unsupported, "h=" + std::to_string(h) + " outside 1.." + std::to_string(kMaxVertices));
    }
    if (h >= long_from && !s_.allow_long) {
      throw Error(Errc::TooLarge, "h=" + std::to_string(h) + " runs for a long time; pass --allow-long");
    }
  }

  fs::path cache_dir() const { return s_.cache_dir.empty() ? default_cache_dir() : fs::path(s_.cache_dir); }

  TournamentCatalog catalog(int h) {
    if (h >= kLongClassify) err_ << "enumerating h=" << h << " (long)\n";
    auto load = load_or_enumerate(h, cache_dir(), {s_.threads});
    if (!load.warning.empty()) err_ << "warning: " << load.warning << '\n';
    static constexpr const char* kSource[] = {"cache", "enumerated", "regenerated"};
    err_ << "catalog h=" << h << ": " << load.catalog.size() << " classes ("
         << kSource[static_cast<int>(load.source)] << ", " << cache_file(cache_dir(), h).string() << ")\n";
    return std::move(load.catalog);
  }

  std::vector<ClassificationRecord> records(int h) {
    const auto cat = catalog(h);
    Progress progress;
    if (h >= kLongClassify) {
      progress = [this](std::size_t done, std::size_t total) {
        err_ << "classified " << done << "/" << total << '\n';
      };
    }
    return classify_catalog(cat, s_.threads, progress);
  }

  void parallel_fas(const TournamentCatalog& cat, std::vector<FasResult>& results) const {
    parallel_chunks(cat.size(), s_.threads, [&](unsigned, std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) results[i] = min_fas(cat.items[i]);
    });
  }

  DensityOptions density_options() const {
    DensityOptions o;
    if (s_.mode == "mc") {
      o.mode = DensityMode::MonteCarlo;
      o.samples = s_.samples;
      o.seed = Seed{s_.seed};
    }
    o.threads = s_.threads;
    return o;
  }

  Table density_columns() const {
    if (s_.mode == "mc") {
      return {{"pattern_canon", "n", "mode", "samples", "seed", "hits", "estimate", "stderr", "typical_num",
               "typical_den", "ratio", "margin"},
              {}};
    }
    return {{"pattern_canon", "n", "mode", "samples", "hits", "estimate_num", "estimate_den", "typical_num",
             "typical_den", "ratio", "margin"},
            {}};
  }

  Row density_row(const DensityReport& r) const {
    const std::string canon = r.pattern.tournament().to_string();
    if (r.mode == DensityMode::MonteCarlo) {
      return {canon, r.n, "mc", r.samples, r.seed.value, r.hits, approx(r.estimate.get_d()),
              approx(r.std_error), num(r.typical), den(r.typical), approx(r.ratio()), to_string(r.margin)};
    }
    return {canon, r.n, "exact", r.total, r.hits, num(r.estimate), den(r.estimate), num(r.typical),
            den(r.typical), approx(r.ratio()), to_string(r.margin)};
  }

  Tournament single_pattern(const std::string& spec, const char* flag) {
    if (spec.empty()) throw Error(Errc::BadParameters, std::string(flag) + " is required");
    const auto v = resolve_patterns(spec, 0);
    if (v.size() != 1) throw Error(Errc::BadParameters, std::string(flag) + " must name one tournament");
    return v.front();
  }

  // "T<h>", "C3", "all" (with --h) or a file of tournament strings.
  std::vector<Tournament> resolve_patterns(const std::string& spec, int h) {
    static const std::regex transitive_name("T([0-9]+)");
    std::smatch m;
    if (spec == "C3") return {Tournament::cyclic3()};
    if (std::regex_match(spec, m, transitive_name)) {
      const int k = std::stoi(m[1].str());
      if (k < 1 || k > kMaxVertices) throw Error(Errc::Unsupported, "pattern " + spec + " too large");
      return {Tournament::transitive(k)};
    }
    if (spec == "all") {
      if (h == 0) throw Error(Errc::BadParameters, "--pattern all needs --h");
      check_order(h, kLongClassify);
      return catalog(h).items;
    }
    return read_pattern_file(spec);
  }

  static std::vector<Tournament> read_pattern_file(const fs::path& file) {
    std::ifstream is(file);
    if (!is) throw Error(Errc::Io, "cannot open " + file.string());
    std::vector<Tournament> out;
    int header_h = 0;
    std::string line;
    while (std::getline(is, line)) {
      while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
      if (line.empty() || line[0] == '#') continue;
      if (line.rfind("h=", 0) == 0) {
        header_h = std::stoi(line.substr(2));
        continue;
      }
      int h = header_h;
      for (int k = 2; h == 0 && k <= kMaxVertices; ++k) {
        if (static_cast<std::size_t>(pair_count(k)) == line.size()) h = k;
      }
      if (h == 0) throw Error(Errc::WrongLength, "'" + line + "' is not C(h,2) characters long");
      out.push_back(Tournament::parse(line, h));
    }
    if (out.empty()) throw Error(Errc::BadParameters, file.string() + " holds no tournaments");
    return out;
  }

  void table_to(const Table& t, std::ostream& os) const { emit(t, s_.format, os); }

  void emit_table(const Table& t) const {
    if (s_.out.empty()) {
      table_to(t, out_);
      return;
    }
    std::ofstream os(s_.out, std::ios::binary | std::ios::trunc);
    if (!os) throw Error(Errc::Io, "cannot write " + s_.out);
    table_to(t, os);
    if (!os) throw Error(Errc::Io, "write failed for " + s_.out);
  }
};

std::string option_value(const CLI::Option* opt) {
  if (opt->count() > 0) {
    std::string v;
    for (const auto& r : opt->results()) v += (v.empty() ? "" : " ") + r;
    return v;
  }
  return opt->get_default_str();
}

// TOML holding the top-level options and those of the selected subcommand;
// feeding it back through --config reproduces the run.
std::string resolved_config(const CLI::App& app) {
  auto section = [](const CLI::App& a) {
    std::string text;
    for (const auto* opt : a.get_options()) {
      if (!opt->get_configurable() || opt->get_single_name().empty()) continue;
      const std::string name = opt->get_single_name();
      if (opt->get_expected_max() == 0 || opt->get_type_size_max() == 0) {
        text += name + "=" + (opt->count() > 0 && opt->as<bool>() ? "true" : "false") + "\n";
        continue;
      }
      const std::string v = option_value(opt);
      const bool bare = !v.empty() && v.find_first_not_of("0123456789") == std::string::npos;
      text += name + "=" + (bare ? v : "\"" + v + "\"") + "\n";
    }
    return text;
  };
  std::string text = section(app);
  for (const auto* sub : app.get_subcommands()) text += "[" + sub->get_name() + "]\n" + section(*sub);
  return text;
}

void add_common(CLI::App& app, Settings& s) {
  app.add_option("--threads", s.threads, "Worker threads")->check(CLI::Range(1u, 1024u));
  app.add_option("--cache-dir", s.cache_dir, "Catalog cache directory")->envname("TOURLAB_CACHE");
  app.add_option("--format", s.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", s.out, "Output file (default: stdout)");
  app.add_flag("--allow-long", s.allow_long, "Permit long runs (h >= 9)");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Exact tournament density laboratory", "tourlab"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.option_defaults()->always_capture_default();
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "Read options from a TOML file")->configurable(false);
  app.add_flag("--dump-config", s.dump_config, "Print the resolved configuration and exit")
      ->configurable(false);
  add_common(app, s);

  auto* enumerate_cmd = app.add_subcommand("enumerate", "Count tournaments up to isomorphism");
  auto* bias_cmd = app.add_subcommand("bias-table", "Bias polynomial and FAS per class");
  auto* classify_cmd = app.add_subcommand("classify", "Summary |T_h|, |B_h| and ratio");
  auto* fas_cmd = app.add_subcommand("fas-table", "Minimum feedback arc sets per class");
  auto* construct_cmd = app.add_subcommand("construct", "Build a large tournament");
  auto* density_cmd = app.add_subcommand("density", "Measure pattern densities in a tournament file");
  auto* dominance_cmd = app.add_subcommand("dominance-check", "List F(h,x) and optionally measure it");
  for (auto* sub : app.get_subcommands({})) sub->configurable();

  for (auto* sub : {enumerate_cmd, bias_cmd, classify_cmd, fas_cmd, dominance_cmd}) {
    sub->add_option("--h", s.h, "Vertices per tournament")->required();
  }
  fas_cmd->add_option("--t", s.t, "Threshold t for A(h,t), as a/b");
  fas_cmd->add_option("--x", s.x, "Bias x for the sufficient condition, as a/b");
  dominance_cmd->add_option("--x", s.x, "Bias x in (0, 1/2), as a/b")->required();

  construct_cmd->add_option("kind", s.kind, "tnp | transversal | blowup")
      ->required()
      ->check(CLI::IsMember({"tnp", "transversal", "blowup"}));
  construct_cmd->add_option("--n", s.n, "Vertices")->required();
  construct_cmd->add_option("--p", s.p, "Forward probability, as a/b");
  construct_cmd->add_option("--h", s.h, "Part count divisor (transversal)");
  construct_cmd->add_option("--hstar", s.hstar, "Pattern on the parts: name or file");
  construct_cmd->add_option("--family", s.family, "Family file for the blow-up");
  construct_cmd->add_option("--max-restarts", s.max_restarts, "Packing restarts");

  for (auto* sub : {construct_cmd, density_cmd, dominance_cmd}) {
    sub->add_option("--seed", s.seed, "64-bit seed");
  }
  density_cmd->add_option("--graph", s.graph, "Tournament file")->required();
  density_cmd->add_option("--pattern", s.pattern, "T<h> | C3 | all | file")->required();
  density_cmd->add_option("--h", s.h, "Order for --pattern all");
  dominance_cmd->add_option("--graph", s.graph, "Tournament file to measure");
  for (auto* sub : {density_cmd, dominance_cmd}) {
    sub->add_option("--mode", s.mode, "exact | mc")->check(CLI::IsMember({"exact", "mc"}));
    sub->add_option("--samples", s.samples, "Monte Carlo samples")->check(CLI::PositiveNumber);
    sub->add_option("--beta", s.beta, "Margin beta, as a/b");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadArgs;
  }

  const std::string config = resolved_config(app);
  if (s.dump_config) {
    out << config;
    return kExitOk;
  }
  err << "# resolved configuration\n" << config;

  Runner runner(s, out, err);
  try {
    if (*enumerate_cmd) runner.enumerate_cmd();
    if (*bias_cmd) runner.bias_table();
    if (*classify_cmd) runner.classify_cmd();
    if (*fas_cmd) runner.fas_table();
    if (*construct_cmd) runner.construct_cmd();
    if (*density_cmd) runner.density_cmd();
    if (*dominance_cmd) runner.dominance_check();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace tourlab::cli
