#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>

#include "oracles.hpp"
#include "tourlab/bias.hpp"
#include "tourlab/canonical.hpp"
#include "tourlab/catalog.hpp"
#include "tourlab/classify.hpp"
#include "tourlab/error.hpp"

using namespace tourlab;

namespace {

Rational q(const char* s) { return parse_rational(s); }

// even-power coefficients 0, 2, 4, ...
Polynomial even(std::initializer_list<const char*> cs) {
  std::vector<Rational> v;
  for (const char* c : cs) {
    v.push_back(q(c));
    v.push_back(0);
  }
  return Polynomial(std::move(v));
}

std::vector<std::string> multiset(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.pairs());
  std::sort(out.begin(), out.end());
  return out;
}

// first catalog class on h vertices with the given property
Tournament find_class(int h, auto&& pred) {
  for (const auto& t : enumerate(h).items) {
    if (pred(t)) return t;
  }
  FAIL("class not found");
  return {};
}

}  // namespace

TEST_CASE("forward histograms of the 3-vertex tournaments") {
  const auto t3 = forward_histogram(Tournament::transitive(3));
  CHECK(t3.counts == std::vector<std::uint64_t>{1, 2, 2, 1});
  CHECK(oracle::forward_histogram(Tournament::transitive(3)) == t3.counts);
  const auto c3 = forward_histogram(Tournament::cyclic3());
  CHECK(c3.counts == std::vector<std::uint64_t>{0, 3, 3, 0});
  CHECK(oracle::forward_histogram(Tournament::cyclic3()) == c3.counts);
}

TEST_CASE("histogram DP matches permutation enumeration for all classes, h <= 6") {
  for (int h = 1; h <= 6; ++h) {
    for (const auto& t : enumerate(h).items) {
      CHECK(forward_histogram(t).counts == oracle::forward_histogram(t));
    }
  }
}

TEST_CASE("histogram mass, symmetry and top entry") {
  for (int h = 1; h <= 8; ++h) {
    for (const auto& t : enumerate(h).items) {
      const auto hist = forward_histogram(t);
      const int m = pair_count(h);
      std::uint64_t total = 0;
      for (auto c : hist.counts) total += c;
      REQUIRE(total == oracle::factorial(h));
      for (int k = 0; k <= m; ++k) REQUIRE(hist.counts[k] == hist.counts[m - k]);
      // N[m] counts orderings with no backward edge: 1 for T_h, 0 otherwise
      REQUIRE(hist.counts[m] == (t.is_transitive() ? 1u : 0u));
    }
  }
}

TEST_CASE("density polynomial in p") {
  CHECK(density_poly_p(Tournament::transitive(3)).poly == Polynomial({1, -1, 1}));
  CHECK(density_poly_p(Tournament::cyclic3()).poly == Polynomial({0, 1, -1}));
  for (int h = 1; h <= 5; ++h) {
    for (const auto& t : enumerate(h).items) {
      const auto d = density_poly_p(t);
      CHECK(d.poly(Rational(1, 2)) == typical_density(t));
      // symmetric under p -> 1 - p
      for (const char* p : {"1/3", "1/7", "2/5"}) CHECK(d.poly(q(p)) == d.poly(1 - q(p)));
    }
  }
}

TEST_CASE("bias polynomials of named tournaments") {
  CHECK(bias_polynomial(Tournament::transitive(3)).poly == even({"3/4", "1"}));
  CHECK(bias_polynomial(Tournament::cyclic3()).poly == even({"1/4", "-1"}));
  CHECK(bias_polynomial(Tournament::transitive(4)).poly == even({"3/8", "2", "2"}));
  CHECK(bias_polynomial(Tournament::transitive(5)).poly == even({"15/128", "25/16", "6", "7", "2"}));
}

TEST_CASE("typical density") {
  CHECK(typical_density(Tournament::transitive(5)) == q("15/128"));
  CHECK(typical_density(Tournament::cyclic3()) == q("1/4"));
  const auto d = find_class(4, [](const Tournament& t) { return aut_size(t) == 3; });
  CHECK(typical_density(d) == q("1/8"));
}

TEST_CASE("bias polynomials of the 4-vertex classes") {
  std::vector<Polynomial> got;
  for (const auto& t : enumerate(4).items) got.push_back(bias_polynomial(t).poly);
  const std::vector<Polynomial> table{even({"3/8", "2", "2"}), even({"3/8", "-2", "2"}),
                                     even({"1/8", "0", "-2"}), even({"1/8", "0", "-2"})};
  CHECK(multiset(got) == multiset(table));
}

TEST_CASE("bias polynomials of the 5-vertex classes") {
  std::vector<Polynomial> got;
  for (const auto& t : enumerate(5).items) got.push_back(bias_polynomial(t).poly);
  const std::vector<Polynomial> table{
      even({"15/128", "25/16", "6", "7", "2"}),       even({"5/128", "5/16", "-1/2", "-5", "-2"}),
      even({"15/128", "5/16", "-4", "3", "2"}),       even({"5/128", "5/16", "-1/2", "-5", "-2"}),
      even({"15/128", "-5/16", "1/2", "-3", "-6"}),   even({"15/128", "5/16", "-4", "3", "2"}),
      even({"5/128", "5/16", "-1/2", "-5", "-2"}),    even({"15/128", "-5/16", "-5/2", "5", "10"}),
      even({"15/128", "-15/16", "2", "-1", "2"}),     even({"5/128", "-5/16", "1", "-3", "6"}),
      even({"15/128", "-15/16", "1", "7", "-14"}),    even({"3/128", "-5/16", "3/2", "-3", "2"}),
  };
  CHECK(multiset(got) == multiset(table));
}

TEST_CASE("bias subset membership") {
  CHECK(in_bias_subset(Tournament::transitive(3)));
  CHECK_FALSE(in_bias_subset(Tournament::cyclic3()));
  const auto c4 = find_class(4, [](const Tournament& t) {
    return bias_polynomial(t).poly == even({"3/8", "-2", "2"});
  });
  CHECK_FALSE(in_bias_subset(c4));
  int count = 0;
  for (const auto& t : enumerate(5).items) count += in_bias_subset(t);
  CHECK(count == 6);
}

TEST_CASE("constant bias polynomials are outside the bias subset") {
  CHECK(bias_polynomial(Tournament::transitive(2)).poly == Polynomial({1}));
  CHECK_FALSE(in_bias_subset(Tournament::transitive(1)));
  CHECK_FALSE(in_bias_subset(Tournament::transitive(2)));
}

TEST_CASE("|B_h| for h = 3..8") {
  const std::map<int, std::size_t> expected{{3, 1}, {4, 1}, {5, 6}, {6, 25}, {7, 199}, {8, 2769}};
  for (const auto& [h, count] : expected) {
    const auto s = summarize(h, classify_catalog(enumerate(h), 2));
    CHECK(s.bias_subset == count);
  }
  const auto s6 = summarize(6, classify_catalog(enumerate(6)));
  CHECK(s6.ratio == Rational(25, 56));
}

TEST_CASE("F(h, x) membership") {
  CHECK(in_F(Tournament::transitive(4), q("1/10")));
  const auto d = find_class(4, [](const Tournament& t) { return aut_size(t) == 3; });
  for (const char* x : {"1/100", "1/10", "1/4", "49/100"}) {
    CHECK_FALSE(in_F(Tournament::cyclic3(), q(x)));
    CHECK_FALSE(in_F(d, q(x)));
  }
  for (const char* bad : {"0", "1/2", "-1/10", "3/4"}) {
    try {
      in_F(Tournament::transitive(3), q(bad));
      FAIL("expected XOutOfRange");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::XOutOfRange);
    }
  }
}

TEST_CASE("lowest-term sign decides local minimum") {
  // B(H, x) - d(H) > 0 near 0 exactly when the lowest term is positive.
  for (const auto& t : enumerate(6).items) {
    const auto b = bias_polynomial(t);
    const Rational tiny(1, 1000);
    CHECK(in_bias_subset(b) == (b(tiny) > b.poly.coeff(0)));
  }
}

TEST_CASE("bias properties over complete catalogs, h <= 7") {
  for (int h = 2; h <= 7; ++h) {
    Polynomial sum;
    for (const auto& t : enumerate(h).items) {
      const auto b = bias_polynomial(t);
      for (int e = 1; e <= b.poly.degree(); e += 2) REQUIRE(b.poly.coeff(e) == 0);
      REQUIRE(b.poly.coeff(0) == typical_density(t));
      const Rational half(1, 2);
      const Rational expect = t.is_transitive() ? 1 : 0;
      REQUIRE(b(half) == expect);
      REQUIRE(b(-half) == expect);
      REQUIRE(bias_polynomial(t.reversed()) == b);
      sum += b.poly;
    }
    CHECK(sum == Polynomial({1}));
  }
}

TEST_CASE("odd residue is detected") {
  ForwardHistogram bad{3, {1, 2, 3, 0}};  // not symmetric
  try {
    bias_polynomial(bad, 1);
    FAIL("expected OddCoefficientResidue");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::OddCoefficientResidue);
  }
}

TEST_CASE("ordered-model margin") {
  const auto t4 = bias_polynomial(Tournament::transitive(4));
  const auto beta = ordered_model_margin({t4}, q("1/10"));
  CHECK(beta == t4(q("1/10")) / q("3/8") - 1);
  CHECK(beta > 0);
}

TEST_CASE("polynomial printing") {
  CHECK(even({"15/128", "25/16", "6", "7", "2"}).pretty() ==
        "15/128 + 25/16x^2 + 6x^4 + 7x^6 + 2x^8");
  CHECK(even({"1/4", "-1"}).pretty() == "1/4 - x^2");
  CHECK(even({"3/8", "2", "2"}).pairs() == "0:3/8 2:2/1 4:2/1");
  CHECK(Polynomial().pretty() == "0");
}
