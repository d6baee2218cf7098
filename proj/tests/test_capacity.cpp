#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "tandem/capacity.hpp"

using tandem::build_irr_graph;
using tandem::ConstrainedGraph;
using tandem::count_irr_fixed;
using tandem::count_rll;
using tandem::irr_graph_capacity;
using tandem::lambert_w0;
using tandem::rll_capacity;
using tandem::rll_member;
using tandem::Word;

namespace {

Word w(const char* text, int q) { return Word::parse(text, q); }

bool brute_rll(const oracle::Vec& v, int k) {
  int run = 0;
  for (int s : v) {
    run = s == 0 ? run + 1 : 0;
    if (run >= k) return false;
  }
  return true;
}

bool brute_square_free(const oracle::Vec& v, int max_half) {
  return oracle::naive_squares(v, oracle::up_to(max_half)).empty();
}

unsigned long long brute_irr_fixed_count(int n, int q, int k) {
  unsigned long long count = 0;
  oracle::for_each_word(q, n, [&](const oracle::Vec& v) {
    if (oracle::naive_squares(v, {k}).empty()) ++count;
  });
  return count;
}

}  // namespace

TEST_CASE("rll_member") {
  CHECK(rll_member(w("102", 4), 2));
  CHECK_FALSE(rll_member(w("0010002", 4), 2));
  CHECK(rll_member(Word::empty(4), 2));
}

TEST_CASE("count_rll worked examples") {
  for (int m = 0; m <= 10; ++m) CHECK(count_rll(m, 2, 1) == 1);
  CHECK(count_rll(3, 2, 2) == 5);
  CHECK(count_rll(0, 5, 3) == 1);
}

TEST_CASE("count_rll matches exhaustive enumeration") {
  for (int q = 2; q <= 3; ++q) {
    for (int k = 1; k <= 3; ++k) {
      for (int m = 0; m <= 12; ++m) {
        unsigned long long brute = 0;
        oracle::for_each_word(q, m, [&](const oracle::Vec& v) { brute += brute_rll(v, k); });
        CHECK(count_rll(m, q, k) == brute);
      }
    }
  }
}

TEST_CASE("count_irr_fixed worked examples and oracle") {
  CHECK(count_irr_fixed(4, 2, 2) == 12);
  CHECK(count_irr_fixed(3, 5, 3) == 125);  // n = k: every word is irreducible
  CHECK(count_irr_fixed(4, 2, 1) == 2);    // only 0101 and 1010
  CHECK_THROWS_AS(count_irr_fixed(1, 2, 2), std::invalid_argument);
  for (int q = 2; q <= 3; ++q) {
    for (int k = 1; k <= 3; ++k) {
      for (int n = k; n <= 9; ++n) {
        CHECK(count_irr_fixed(n, q, k) == brute_irr_fixed_count(n, q, k));
      }
    }
  }
}

TEST_CASE("the order-5 ternary graph matches the published vertex list") {
  const ConstrainedGraph g = build_irr_graph(3, 3);
  REQUIRE(g.states.size() == 30);
  static const char* kVertices[] = {
      "10201", "02010", "20102", "01020", "01021", "10210", "02101", "21012", "10121", "01210",
      "12101", "12102", "21021", "10212", "02120", "21202", "12021", "20212", "20210", "02102",
      "21020", "02012", "20121", "10120", "01202", "21201", "12010", "20120", "01201", "12012"};
  std::set<std::string> expected(std::begin(kVertices), std::end(kVertices));
  std::set<std::string> got;
  for (const Word& s : g.states) got.insert(s.str());
  CHECK(got == expected);
  // Deterministic per (state, label).
  for (const auto& edges : g.edges) {
    std::set<int> labels;
    for (const auto& [label, target] : edges) CHECK(labels.insert(label).second);
  }
}

TEST_CASE("the binary <=3 graph generates a finite language") {
  const ConstrainedGraph g = build_irr_graph(2, 3);
  CHECK(g.states.empty());
  CHECK(irr_graph_capacity(g).value == 0.0);
  CHECK(irr_graph_capacity(g).eigenvalue == 0.0);
}

TEST_CASE("graph path words match brute-force irreducibility") {
  const ConstrainedGraph g3 = build_irr_graph(3, 3);
  std::set<oracle::Vec> expected;
  oracle::for_each_word_up_to(3, 9, [&](const oracle::Vec& v) {
    if (!v.empty() && brute_square_free(v, 3)) expected.insert(v);
  });
  std::set<oracle::Vec> got;
  for (const Word& x : graph_language(g3, 9)) got.insert(x.symbols());
  CHECK(got == expected);

  // Same for the order-3 <=2 graph, including the finite binary case.
  const ConstrainedGraph g2 = build_irr_graph(3, 2);
  expected.clear();
  oracle::for_each_word_up_to(3, 9, [&](const oracle::Vec& v) {
    if (!v.empty() && brute_square_free(v, 2)) expected.insert(v);
  });
  got.clear();
  for (const Word& x : graph_language(g2, 9)) got.insert(x.symbols());
  CHECK(got == expected);

  const ConstrainedGraph g22 = build_irr_graph(2, 2);
  got.clear();
  for (const Word& x : graph_language(g22, 9)) got.insert(x.symbols());
  std::set<oracle::Vec> binary{{0}, {1}, {0, 1}, {1, 0}, {0, 1, 0}, {1, 0, 1}};
  CHECK(got == binary);

  // A larger alphabet as well, at a shorter horizon.
  const ConstrainedGraph g42 = build_irr_graph(4, 2);
  expected.clear();
  oracle::for_each_word_up_to(4, 7, [&](const oracle::Vec& v) {
    if (!v.empty() && brute_square_free(v, 2)) expected.insert(v);
  });
  got.clear();
  for (const Word& x : graph_language(g42, 7)) got.insert(x.symbols());
  CHECK(got == expected);
}

TEST_CASE("graph dump format") {
  const ConstrainedGraph g = build_irr_graph(2, 2);
  std::ostringstream out;
  dump_graph(g, out);
  CHECK(out.str().empty());  // two isolated states, no edges
  const ConstrainedGraph g3 = build_irr_graph(3, 2);
  std::ostringstream out3;
  dump_graph(g3, out3);
  std::string line;
  std::istringstream in(out3.str());
  std::size_t lines = 0;
  while (std::getline(in, line)) {
    ++lines;
    CHECK(line.size() == 3 + 1 + 1 + 1 + 3);  // state \t label \t state
    CHECK(line[3] == '\t');
    CHECK(line[5] == '\t');
  }
  CHECK(lines == g3.num_edges());
}

TEST_CASE("rll capacity worked examples") {
  // Golden ratio: binary strings with no 00 (max zero-run 1).
  const auto golden = rll_capacity(2, 1, 1e-12);
  CHECK(golden.eigenvalue == doctest::Approx((1 + std::sqrt(5.0)) / 2).epsilon(1e-10));
  CHECK_FALSE(golden.lower_bound.has_value());  // the excluded pair

  // Max zero-run 0: the 1x1 matrix (q-1).
  for (int q = 2; q <= 5; ++q) {
    CHECK(rll_capacity(q, 0, 1e-12).eigenvalue == doctest::Approx(q - 1).epsilon(1e-10));
  }

  // Characteristic polynomial cross-check: lambda is a root of
  // x^{d+2} - q x^{d+1} + q - 1.
  for (int q = 2; q <= 4; ++q) {
    for (int d = 1; d <= 6; ++d) {
      const double lambda = rll_capacity(q, d, 1e-13).eigenvalue;
      const double f = std::pow(lambda, d + 2) - q * std::pow(lambda, d + 1) + q - 1;
      CHECK(std::abs(f) < 1e-6 * std::pow(lambda, d + 2));
    }
  }

  // The d = 6, q = 4 bounds from the Lambert-W form.
  const auto r = rll_capacity(4, 6, 1e-12);
  REQUIRE(r.lower_bound.has_value());
  REQUIRE(r.upper_bound.has_value());
  const double scale = 3.0 / std::pow(4.0, 8);
  CHECK(*r.upper_bound == doctest::Approx(4 * std::exp(-scale)).epsilon(1e-12));
  const double alpha = std::exp(-lambert_w0(-scale * 8));
  CHECK(*r.lower_bound == doctest::Approx(4 * std::exp(-scale * alpha)).epsilon(1e-12));
  CHECK(*r.lower_bound <= r.eigenvalue);
  CHECK(r.eigenvalue <= *r.upper_bound);
}

TEST_CASE("lambert_w0") {
  CHECK(lambert_w0(0.0) == 0.0);
  CHECK(lambert_w0(std::exp(1.0)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(lambert_w0(-std::exp(-1.0)) == doctest::Approx(-1.0).epsilon(1e-6));
  CHECK_THROWS_AS(lambert_w0(-1.0), std::invalid_argument);
  // Self-consistency across a log-spaced grid.
  for (double z = 1e-6; z <= 1e3; z *= 3.0) {
    const double w0 = lambert_w0(z, 1e-13);
    CHECK(std::abs(w0 * std::exp(w0) - z) <= 1e-9 * std::max(1.0, z));
  }
  for (double z : {-0.367, -0.36, -0.3, -0.2, -0.1, -0.01}) {
    const double w0 = lambert_w0(z, 1e-13);
    CHECK(std::abs(w0 * std::exp(w0) - z) <= 1e-12);
    CHECK(w0 >= -1.0);
  }
}

TEST_CASE("asymptotic capacity") {
  CHECK(tandem::rll_capacity_asymptotic_log2(2, 1) ==
        doctest::Approx(1.0 - std::log2(std::exp(1.0)) / 8).epsilon(1e-12));
  // Agreement with the transfer matrix at d = 10.
  const double cap = std::log2(rll_capacity(2, 10, 1e-13).eigenvalue);
  CHECK(std::abs(cap - tandem::rll_capacity_asymptotic_log2(2, 10)) < 1e-3);
  for (int q = 2; q <= 5; ++q) {
    for (int d = 1; d <= 8; ++d) {
      CHECK(tandem::rll_capacity_asymptotic_log2(q, d) < std::log2(static_cast<double>(q)));
    }
  }
}

TEST_CASE("irreducible-word capacity values") {
  const auto cap3 = irr_graph_capacity(build_irr_graph(3, 3), 1e-12);
  CHECK(cap3.value == doctest::Approx(0.347934).epsilon(2e-5));
  CHECK(cap3.value >= 0.347934 - 1e-6);

  CHECK(irr_graph_capacity(build_irr_graph(2, 3), 1e-12).value == 0.0);
  CHECK(irr_graph_capacity(build_irr_graph(2, 2), 1e-12).value == 0.0);

  // The <=2 ternary graph growth rate against exhaustive counts.
  const auto cap2 = irr_graph_capacity(build_irr_graph(3, 2), 1e-12);
  CHECK(cap2.value > 0.0);
  CHECK(cap2.value < 1.0);
  // Count irreducible words by depth-first extension, which only ever
  // inspects suffix squares.
  std::vector<long long> counts(15, 0);
  std::vector<int> cur;
  const std::function<void(int)> extend = [&](int limit) {
    if (!cur.empty()) ++counts[cur.size()];
    if (static_cast<int>(cur.size()) == limit) return;
    for (int s = 0; s < 3; ++s) {
      cur.push_back(s);
      bool ok = true;
      const int len = static_cast<int>(cur.size());
      for (int half = 1; half <= 2 && 2 * half <= len && ok; ++half) {
        bool equal = true;
        for (int j = 0; j < half && equal; ++j) {
          equal = cur[len - 2 * half + j] == cur[len - half + j];
        }
        ok = !equal;
      }
      if (ok) extend(limit);
      cur.pop_back();
    }
  };
  extend(14);
  const double growth = std::log(static_cast<double>(counts[14]) / counts[13]) / std::log(3.0);
  CHECK(std::abs(growth - cap2.value) < 2e-2);
  // Monotone growth of the level counts.
  for (int n = 1; n + 1 <= 12; ++n) CHECK(counts[n + 1] >= counts[n]);
}
