#include <doctest.h>

#include "sincov/genbench.hpp"
#include "sincov/representation.hpp"
#include "sincov/reverse.hpp"
#include "support/helpers.hpp"

using namespace sincov;
using test::dmat;
using test::qmat;

namespace {

using QFamily = BasicPotentialFamily<Rational>;
using QPotential = BasicPotential<Rational>;

QFamily family(std::size_t n, Mode mode, std::vector<std::vector<Rational>> members) {
  QFamily f;
  f.labels = index_labels(n);
  f.mode = mode;
  for (auto& m : members) f.members.push_back({std::move(m)});
  return f;
}

}  // namespace

TEST_CASE("canonical family of a small G reproduces G") {
  auto g = qmat({{"1", "4"}, {"1", "1"}});
  auto fam = canonical_family(g);
  REQUIRE(fam.members.size() == 2);
  CHECK(fam.members[0].values == std::vector<Rational>{1, 1});
  CHECK(fam.members[1].values == std::vector<Rational>{4, 1});
  CHECK(reconstruct(fam, Direction::sup) == g);
  for (const auto& f : fam.members) CHECK(member_of(f, g, PotentialClass::g_class));
}

TEST_CASE("additive sup of two potentials") {
  auto fam = family(2, Mode::additive, {{0, 2}, {1, 0}});
  auto h = reconstruct(fam, Direction::sup);
  CHECK(h == qmat({{"0", "1"}, {"2", "0"}}, Mode::additive));
  CHECK(validate(h, Law::triangle).pass);
  CHECK_THROWS_AS(reconstruct(fam, Direction::inf), UsageError);
}

TEST_CASE("reconstruct rejects bad families") {
  auto empty = family(2, Mode::multiplicative, {});
  CHECK_THROWS_AS(reconstruct(empty, Direction::sup), UsageError);
  auto zero = family(2, Mode::multiplicative, {{1, 0}});
  CHECK_THROWS_AS(reconstruct(zero, Direction::sup), DomainError);
  auto ragged = family(2, Mode::multiplicative, {{1}});
  CHECK_THROWS_AS(reconstruct(ragged, Direction::sup), UsageError);
}

TEST_CASE("solve_equation recovers potentials, zero, or nothing") {
  auto s = qmat({{"1", "2"}, {"1/2", "1"}});
  auto r = solve_equation(s);
  REQUIRE(r.kind == EquationSolution<Rational>::Kind::potential);
  CHECK(r.potential.values == std::vector<Rational>{1, Rational(1, 2)});

  auto z = solve_equation(qmat({{"0", "0"}, {"0", "0"}}));
  CHECK(z.kind == EquationSolution<Rational>::Kind::zero);

  auto none = solve_equation(qmat({{"1", "2"}, {"1/2", "2"}}));
  CHECK(none.kind == EquationSolution<Rational>::Kind::none);

  auto fnone = solve_equation(dmat({{1, 2}, {0.5, 2}}));
  CHECK(fnone.kind == EquationSolution<double>::Kind::none);
}

TEST_CASE("solve_equation on random ratio matrices") {
  Rng rng(31);
  for (int i = 0; i < 200; ++i) {
    GenSpec spec{GenKind::ratio, 1 + rng.below(8), rng.next(), {}};
    auto s = generate<Rational>(spec);
    auto r = solve_equation(s);
    REQUIRE(r.kind == EquationSolution<Rational>::Kind::potential);
    const auto& f = r.potential.values;
    for (std::size_t a = 0; a < s.size(); ++a)
      for (std::size_t b = 0; b < s.size(); ++b) CHECK(s(a, b) == f[a] / f[b]);
  }
}

TEST_CASE("comparability of equation solutions") {
  auto s1 = qmat({{"1", "2"}, {"1/2", "1"}});
  auto s2 = qmat({{"1", "1/2"}, {"2", "1"}});
  CHECK(comparability_check(s1, s2) == Comparability::incomparable);
  CHECK(comparability_check(s1, s1) == Comparability::equal);
  CHECK(to_string(Comparability::violation) == "violation");
  CHECK_THROWS_AS(comparability_check(s1, qmat({{"1", "2"}, {"1/2", "2"}})), DomainError);
}

TEST_CASE("sign-changing solution lies below the all-ones solution") {
  // f = (1, -1) gives S = [[1,-1],[-1,1]]; both S and the constant 1 solve the
  // equation and S <= 1 entrywise without being equal.
  auto s = qmat({{"1", "-1"}, {"-1", "1"}});
  auto ones = qmat({{"1", "1"}, {"1", "1"}});
  CHECK(validate(s, Law::mult_eq).pass);
  CHECK(validate(ones, Law::mult_eq).pass);
  CHECK(comparability_check(s, ones) == Comparability::violation);
  CHECK(comparability_check(qmat({{"0", "0"}, {"0", "0"}}), ones) == Comparability::violation);
  CHECK(oracle_check(s, "remark1").verdict == Verdict::hypothesis_not_met);
}

TEST_CASE("positive comparable solutions are equal") {
  Rng rng(32);
  for (int i = 0; i < 300; ++i) {
    std::size_t n = 1 + rng.below(4);
    std::vector<Rational> f(n), g(n);
    for (auto& v : f) v = Rational(1 + static_cast<long>(rng.below(3)));
    for (auto& v : g) v = Rational(1 + static_cast<long>(rng.below(3)));
    std::vector<Rational> a, b;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        a.push_back(f[x] / f[y]);
        b.push_back(g[x] / g[y]);
      }
    ExactInstance s1(index_labels(n), a, Mode::multiplicative);
    ExactInstance s2(index_labels(n), b, Mode::multiplicative);
    CHECK(comparability_check(s1, s2) != Comparability::violation);
  }
}

TEST_CASE("G-class membership") {
  auto g = qmat({{"1", "2"}, {"2", "1"}});
  CHECK(member_of(QPotential{{1, 1}}, g, PotentialClass::g_class));
  CHECK(member_of(QPotential{{2, 1}}, g, PotentialClass::g_class));
  CHECK_FALSE(member_of(QPotential{{3, 1}}, g, PotentialClass::g_class));
  CHECK_THROWS_AS(member_of(QPotential{{1}}, g, PotentialClass::g_class), UsageError);
  auto h = qmat({{"0", "1"}, {"2", "0"}}, Mode::additive);
  CHECK(member_of(QPotential{{0, 2}}, h, PotentialClass::h_class));
  CHECK_FALSE(member_of(QPotential{{0, 3}}, h, PotentialClass::h_class));
}

TEST_CASE("every sup of a family solves the inequality and recovers the family's G") {
  Rng rng(33);
  for (int i = 0; i < 150; ++i) {
    std::size_t n = 1 + rng.below(6);
    std::size_t k = 1 + rng.below(4);
    std::vector<std::vector<Rational>> members(k, std::vector<Rational>(n));
    for (auto& m : members)
      for (auto& v : m) v = Rational(static_cast<long>(1 + rng.below(8)), 4);
    auto fam = family(n, Mode::multiplicative, members);
    auto g = reconstruct(fam, Direction::sup);
    CHECK(test::brute_violations(g, Law::mult_ineq) == 0);
    for (const auto& f : fam.members) CHECK(member_of(f, g, PotentialClass::g_class));
    CHECK(reconstruct(canonical_family(g), Direction::sup) == g);

    auto fmat = reconstruct(fam, Direction::inf);
    CHECK(test::brute_violations(fmat, Law::reverse_ineq) == 0);
    for (const auto& f : fam.members) CHECK(member_of(f, fmat, PotentialClass::f_class));
  }
}

TEST_CASE("canonical family requires a positive solution") {
  CHECK_THROWS_AS(canonical_family(qmat({{"1", "3"}, {"1/5", "1"}})), DomainError);
  CHECK_THROWS_AS(canonical_family(qmat({{"1", "0"}, {"1", "1"}})), DomainError);
  CHECK_THROWS_AS(canonical_family(qmat({{"0", "5"}, {"-6", "0"}}, Mode::additive)),
                  DomainError);
}
