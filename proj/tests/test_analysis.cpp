#include <doctest.h>

#include "sincov/analysis.hpp"
#include "sincov/genbench.hpp"
#include "support/helpers.hpp"

using namespace sincov;
using test::dmat;
using test::qmat;

namespace {

// Independent G~(x,y) = max_a G(a,y)/G(a,x).
Rational sup_ratio(const ExactInstance& g, std::size_t x, std::size_t y) {
  Rational best = g(0, y) / g(0, x);
  for (std::size_t a = 1; a < g.size(); ++a) best = std::max(best, Rational(g(a, y) / g(a, x)));
  return best;
}

ExactInstance positive_solution(Rng& rng, bool unit_diagonal) {
  GenSpec spec{unit_diagonal ? GenKind::via_closure : GenKind::bounded, 1 + rng.below(9),
               rng.next(), {}};
  return generate<Rational>(spec);
}

}  // namespace

TEST_CASE("tilde of a+b on {1,2}") {
  auto g = qmat({{"2", "3"}, {"3", "4"}});
  auto t = tilde(g);
  CHECK(t == qmat({{"1", "3/2"}, {"3/4", "1"}}));
  auto tf = tilde(to_float(g));
  CHECK(tf(1, 0) == 0.75);
  CHECK(tf(0, 1) == 1.5);
}

TEST_CASE("extremal solution where the unit diagonal is missing") {
  auto g = qmat({{"2", "3"}, {"3", "4"}});
  auto e = extremal_solution(g, 0, 0);
  CHECK(e.witness == 0);
  CHECK(e.solution == qmat({{"1", "3/2"}, {"2/3", "1"}}));
  CHECK(e.solution(0, 0) == 1);
  CHECK(g(0, 0) == 2);
}

TEST_CASE("extremal solution hits G at the requested point") {
  auto g = qmat({{"1", "4"}, {"1", "1"}});
  auto e = extremal_solution(g, 0, 1);
  CHECK(e.witness == 0);
  CHECK(e.solution == qmat({{"1", "4"}, {"1/4", "1"}}));
  CHECK(validate(e.solution, Law::mult_eq).pass);
}

TEST_CASE("extremal preconditions") {
  CHECK_THROWS_AS(extremal_solution(qmat({{"1", "0"}, {"1", "1"}}), 0, 1), DomainError);
  CHECK_THROWS_AS(extremal_solution(qmat({{"1", "3"}, {"1/5", "1"}}), 0, 1), DomainError);
  CHECK_THROWS_AS(tilde(qmat({{"1", "-1"}, {"1", "1"}})), DomainError);
}

TEST_CASE("tilde satisfies the four sup properties") {
  Rng rng(21);
  for (int i = 0; i < 150; ++i) {
    auto g = positive_solution(rng, i % 2 == 0);
    auto t = tilde(g);
    const std::size_t n = g.size();
    bool unit = true;
    for (std::size_t x = 0; x < n; ++x) unit = unit && g(x, x) == 1;
    for (std::size_t x = 0; x < n; ++x) {
      CHECK(t(x, x) == 1);
      for (std::size_t y = 0; y < n; ++y) {
        CHECK(t(x, y) == sup_ratio(g, x, y));
        CHECK(1 / g(y, x) <= t(x, y));
        CHECK(t(x, y) <= g(x, y));
      }
    }
    CHECK(test::brute_violations(t, Law::mult_ineq) == 0);
    if (unit) CHECK(t == g);
  }
}

TEST_CASE("extremal solutions across all anchor points") {
  Rng rng(22);
  for (int i = 0; i < 100; ++i) {
    auto g = positive_solution(rng, i % 2 == 0);
    const std::size_t n = g.size();
    for (std::size_t x0 = 0; x0 < n; ++x0) {
      for (std::size_t y0 = 0; y0 < n; ++y0) {
        auto e = extremal_solution(g, x0, y0);
        CHECK(test::brute_violations(e.solution, Law::mult_eq) == 0);
        CHECK(e.solution(x0, y0) == sup_ratio(g, x0, y0));
        for (std::size_t x = 0; x < n; ++x)
          for (std::size_t y = 0; y < n; ++y) {
            CHECK(1 / g(y, x) <= e.solution(x, y));
            CHECK(e.solution(x, y) <= g(x, y));
          }
      }
    }
  }
}

TEST_CASE("audit of a bounded positive solution") {
  auto g = qmat({{"2", "3"}, {"4", "2"}});
  auto r = audit(g);
  CHECK_FALSE(r.not_a_solution);
  CHECK(r.positive);
  CHECK_FALSE(r.has_zero);
  REQUIRE(r.bound_c);
  CHECK(*r.bound_c == 4.0);
  CHECK(r.lower_bound_ok);
  CHECK(r.diag_min == 2.0);
  CHECK(r.diag_max == 2.0);
  REQUIRE(r.sandwich_ok);
  CHECK(*r.sandwich_ok);
}

TEST_CASE("audit flags non-solutions and zeros") {
  auto r = audit(dmat({{1, 3}, {0.2, 1}}));
  CHECK(r.not_a_solution);
  auto z = audit(dmat({{0, 0}, {0, 0}}));
  CHECK(z.all_zero);
  CHECK(z.has_zero);
  CHECK_FALSE(z.not_a_solution);
  CHECK_FALSE(z.bound_c);
  CHECK_THROWS_AS(audit(dmat({{0, 1}, {1, 0}}, Mode::additive)), UsageError);
}

TEST_CASE("property (Z) on finite value lists") {
  std::vector<double> a{-1, 2}, b{-1, 0, 2}, c{1, 2}, d{-1, -2}, e{};
  CHECK_FALSE(has_zero_property<double>(a));
  CHECK(has_zero_property<double>(b));
  CHECK(has_zero_property<double>(c));
  CHECK(has_zero_property<double>(d));
  CHECK(has_zero_property<double>(e));
  std::vector<double> tiny{-1, 1e-13, 2};
  CHECK(has_zero_property<double>(tiny));
  CHECK_FALSE(has_zero_property<double>(tiny, Tolerance{1e-9, 0.0, false}));
}

TEST_CASE("a non-negative solution with a zero vanishes: exhaustive 3x3 over {0,1,2}") {
  std::size_t met = 0;
  for (int code = 0; code < 19683; ++code) {
    std::vector<Rational> e(9);
    int c = code;
    for (auto& v : e) {
      v = c % 3;
      c /= 3;
    }
    ExactInstance g(index_labels(3), e, Mode::multiplicative);
    auto r = oracle_check(g, "p0");
    CHECK(r.verdict != Verdict::violated);
    met += r.verdict == Verdict::holds;
    if (r.verdict == Verdict::holds) CHECK(audit(g).all_zero);
  }
  CHECK(met == 1);  // only the zero matrix qualifies
}

TEST_CASE("(Z) sections force a non-positive solution: exhaustive 3x3 over {-1,0,1}") {
  std::size_t met = 0;
  for (int code = 0; code < 19683; ++code) {
    std::vector<Rational> e(9);
    int c = code;
    for (auto& v : e) {
      v = c % 3 - 1;
      c /= 3;
    }
    ExactInstance g(index_labels(3), e, Mode::multiplicative);
    auto r = oracle_check(g, "t1-Z");
    CHECK(r.verdict != Verdict::violated);
    met += r.verdict == Verdict::holds;
  }
  CHECK(met == 512);  // every {-1,0} matrix meets the hypothesis
}

TEST_CASE("bounded positive solutions stay inside [1/c, c]") {
  Rng rng(23);
  for (int i = 0; i < 200; ++i) {
    auto g = positive_solution(rng, i % 3 == 0);
    auto r = oracle_check(g, "b");
    CHECK(r.verdict == Verdict::holds);
    auto a = audit(g);
    CHECK(a.lower_bound_ok);
    CHECK(a.diag_min >= 1.0);
  }
}
