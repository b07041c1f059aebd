#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <set>

#include <unistd.h>

#include "oracles.hpp"
#include "tourlab/catalog.hpp"
#include "tourlab/error.hpp"

using namespace tourlab;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("tourlab_enum_" + std::to_string(::getpid()) + "_" + std::to_string(counter()++));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static int& counter() {
    static int c = 0;
    return c;
  }
};

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(is), {}};
}

}  // namespace

TEST_CASE("catalog sizes") {
  const std::vector<std::size_t> expected{1, 1, 2, 4, 12, 56, 456, 6880};
  for (int h = 1; h <= 8; ++h) CHECK(enumerate(h).size() == expected[h - 1]);
  CHECK_THROWS_AS(enumerate(11), Error);
  CHECK_THROWS_AS(enumerate(0), Error);
}

TEST_CASE("catalog entries are canonical, sorted and distinct") {
  for (int h = 1; h <= 7; ++h) {
    const auto cat = enumerate(h);
    for (std::size_t i = 0; i < cat.size(); ++i) {
      CHECK(canonical_form(cat.items[i]).code == cat.items[i].code());
      if (i > 0) CHECK(cat.items[i - 1].code() < cat.items[i].code());
    }
  }
}

TEST_CASE("completeness against labeled enumeration, h <= 4") {
  for (int h = 1; h <= 4; ++h) {
    std::set<std::uint64_t> labeled;
    for (const auto& t : oracle::all_labeled(h)) labeled.insert(oracle::min_code(t));
    std::set<std::uint64_t> listed;
    for (const auto& t : enumerate(h).items) listed.insert(t.code());
    CHECK(labeled == listed);
  }
}

TEST_CASE("labeled mass: sum of h!/aut equals 2^C(h,2)") {
  for (int h = 1; h <= 8; ++h) {
    std::uint64_t mass = 0;
    for (const auto& t : enumerate(h).items) mass += oracle::factorial(h) / aut_size(t);
    CHECK(mass == (std::uint64_t{1} << pair_count(h)));
  }
}

TEST_CASE("catalog does not depend on the thread count") {
  const auto one = enumerate(7, {1});
  const auto four = enumerate(7, {4});
  CHECK(one.items == four.items);
}

TEST_CASE("load_or_enumerate writes, reuses and repairs the cache") {
  TempDir dir;
  auto first = load_or_enumerate(5, dir.path);
  CHECK(first.source == CatalogSource::Enumerated);
  CHECK(first.catalog.size() == 12);
  const auto file = cache_file(dir.path, 5);
  REQUIRE(fs::exists(file));
  CHECK(file.filename() == "tournaments_h5.txt");
  const auto text = slurp(file);
  CHECK(text.rfind("h=5\n", 0) == 0);

  auto second = load_or_enumerate(5, dir.path);
  CHECK(second.source == CatalogSource::Cache);
  CHECK(second.catalog.items == first.catalog.items);
  CHECK(slurp(file) == text);

  // truncated cache for h=4
  load_or_enumerate(4, dir.path);
  const auto f4 = cache_file(dir.path, 4);
  const auto full4 = slurp(f4);
  {
    std::ofstream os(f4, std::ios::binary | std::ios::trunc);
    os << full4.substr(0, full4.size() - 4);
  }
  auto repaired = load_or_enumerate(4, dir.path);
  CHECK(repaired.source == CatalogSource::Regenerated);
  CHECK_FALSE(repaired.warning.empty());
  CHECK(repaired.catalog.size() == 4);
  CHECK(slurp(f4) == full4);
}

TEST_CASE("read_catalog rejects damaged files") {
  TempDir dir;
  const auto file = dir.path / "c.txt";
  write_catalog(enumerate(4), file);
  const auto good = slurp(file);
  auto write = [&](const std::string& s) {
    std::ofstream os(file, std::ios::binary | std::ios::trunc);
    os << s;
  };
  auto code_for = [&](const std::string& s, int h) {
    write(s);
    try {
      read_catalog(file, h);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::Io;
  };

  CHECK(read_catalog(file, 4).size() == 4);
  // dropping a whole line keeps every line well-formed: the mass check catches it
  const auto cut = good.substr(0, good.rfind('\n', good.size() - 2) + 1);
  CHECK(code_for(cut, 4) == Errc::CorruptCache);
  CHECK(code_for("h=5\n" + good.substr(4), 4) == Errc::CorruptCache);
  CHECK(code_for("h=4\n111111\n", 4) == Errc::CorruptCache);  // not canonical
  CHECK(code_for("h=4\n0000x0\n", 4) == Errc::CorruptCache);
}
