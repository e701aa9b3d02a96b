#include <doctest.h>

#include "sincov/genbench.hpp"
#include "sincov/io.hpp"
#include "sincov/reverse.hpp"
#include "support/helpers.hpp"

using namespace sincov;
using test::dmat;
using test::qmat;

namespace {

ExactInstance fixture(const std::string& name) {
  const std::string path = std::string(SINCOV_SOURCE_DIR) + "/tests/data/" + name;
  return parse_instance<Rational>(read_file(path), Format::csv, {Mode::multiplicative});
}

const FZOutcome& outcome_at(const ZeroStructure& z, std::size_t a, std::size_t b) {
  for (const auto& o : z.outcomes)
    if (o.a == a && o.b == b) return o;
  throw std::logic_error("no such zero");
}

}  // namespace

TEST_CASE("invert is entrywise reciprocal") {
  auto f = dmat({{1, 0.25}, {1, 1}});
  CHECK(invert(f) == dmat({{1, 4}, {1, 1}}));
  CHECK(validate(f, Law::reverse_ineq).pass);
  CHECK(validate(invert(f), Law::mult_ineq).pass);
  CHECK_THROWS_AS(invert(dmat({{1, 0}, {1, 1}})), DomainError);
}

TEST_CASE("reverse inequality on small fixtures") {
  CHECK(validate(dmat({{0, 1}, {0, 0}}), Law::reverse_ineq).pass);
  CHECK(validate(qmat({{"0", "0", "1"}, {"1/2", "0", "1"}, {"0", "0", "0"}}),
                 Law::reverse_ineq)
            .pass);
  CHECK(validate(fixture("f3_grid.csv"), Law::reverse_ineq).pass);
  CHECK(validate(fixture("f3_shifted.csv"), Law::reverse_ineq).pass);
}

TEST_CASE("zero classification: row, column and cross") {
  auto f = qmat({{"0", "0", "0"}, {"0", "1", "0"}, {"0", "0", "1"}});
  REQUIRE(validate(f, Law::reverse_ineq).pass);
  auto z = zero_structure(f);
  CHECK(z.zeros.pairs.size() == 7);
  CHECK(z.violated_count == 0);
  CHECK(z.full_zero_rows == 1);
  CHECK(z.full_zero_columns == 1);

  CHECK(outcome_at(z, 1, 0).kind == FZKind::column_contained);
  CHECK(outcome_at(z, 0, 1).kind == FZKind::row_contained);
  const auto& cross = outcome_at(z, 1, 2);
  CHECK(cross.kind == FZKind::cross);
  CHECK(cross.u1 == std::vector<std::size_t>{1});
  CHECK(cross.u2 == std::vector<std::size_t>{2});
  CHECK(z.cross_count == 2);
  CHECK(to_string(FZKind::cross) == "Cross");
}

TEST_CASE("F3 zeros sit in a zero row") {
  auto z = zero_structure(fixture("f3_grid.csv"));
  REQUIRE(z.zeros.pairs.size() == 3);
  for (const auto& o : z.outcomes) CHECK(o.kind == FZKind::row_contained);
  CHECK(z.full_zero_rows == 1);
  CHECK(oracle_check(fixture("f3_grid.csv"), "FZ-alt").verdict == Verdict::holds);
}

TEST_CASE("a zero with a positive path through it is flagged") {
  // F(0,1) = 0 while F(0,2) F(2,1) > 0: not a reverse solution, so the
  // alternative fails with witness 2.
  auto f = qmat({{"1", "0", "1"}, {"1", "1", "1"}, {"1", "1", "1"}});
  auto z = zero_structure(f);
  REQUIRE(z.outcomes.size() == 1);
  CHECK(z.outcomes[0].kind == FZKind::alternative_violated);
  REQUIRE(z.outcomes[0].witness);
  CHECK(*z.outcomes[0].witness == 2);
  CHECK(z.violated_count == 1);
  CHECK_THROWS_AS(zero_structure(qmat({{"1", "-1"}, {"0", "1"}})), DomainError);
}

TEST_CASE("fsp audit") {
  auto f = fixture("f3_grid.csv");
  auto r = fsp_audit(f);
  CHECK(r.passes_reverse);
  CHECK(r.diag_in_unit_interval);
  CHECK(r.nonnegative);
  CHECK_FALSE(r.theorem_violation);

  auto g = fsp_audit(dmat({{2, 0}, {0, 0}}));
  CHECK_FALSE(g.passes_reverse);
}

TEST_CASE("exhaustive 3x3 over {-1,0,1}: diagonal and sign conclusions") {
  std::size_t met = 0;
  for (int code = 0; code < 19683; ++code) {
    std::vector<Rational> e(9);
    int c = code;
    for (auto& v : e) {
      v = c % 3 - 1;
      c /= 3;
    }
    ExactInstance f(index_labels(3), e, Mode::multiplicative);
    auto r = oracle_check(f, "Fsp");
    CHECK(r.verdict != Verdict::violated);
    met += r.verdict == Verdict::holds;
    if (r.verdict == Verdict::holds) CHECK_FALSE(fsp_audit(f).theorem_violation);
  }
  CHECK(met > 0);
}

TEST_CASE("exhaustive 3x3 over {0,1,2}: zero alternative") {
  std::size_t met = 0;
  for (int code = 0; code < 19683; ++code) {
    std::vector<Rational> e(9);
    int c = code;
    for (auto& v : e) {
      v = c % 3;
      c /= 3;
    }
    ExactInstance f(index_labels(3), e, Mode::multiplicative);
    auto r = oracle_check(f, "FZ-alt");
    CHECK(r.verdict != Verdict::violated);
    met += r.verdict == Verdict::holds;
    if (r.verdict == Verdict::holds) CHECK(zero_structure(f).violated_count == 0);
  }
  CHECK(met > 0);
}

TEST_CASE("products of indicator functions solve the reverse inequality") {
  // F(x,y) = chiA(x) chiB(y) with A, B arbitrary subsets.
  Rng rng(41);
  for (int i = 0; i < 200; ++i) {
    std::size_t n = 1 + rng.below(7);
    std::vector<int> in_a(n), in_b(n);
    for (auto& v : in_a) v = static_cast<int>(rng.below(2));
    for (auto& v : in_b) v = static_cast<int>(rng.below(2));
    std::vector<Rational> e;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) e.push_back(in_a[x] * in_b[y]);
    ExactInstance f(index_labels(n), e, Mode::multiplicative);
    CHECK(test::brute_violations(f, Law::reverse_ineq) == 0);
    CHECK(zero_structure(f).violated_count == 0);
  }
}

TEST_CASE("generated reverse solutions pass the zero alternative") {
  Rng rng(42);
  for (int i = 0; i < 100; ++i) {
    GenSpec spec{GenKind::reverse_f3, 2 + rng.below(8), rng.next(), {}};
    auto f = generate<Rational>(spec);
    CHECK(validate(f, Law::reverse_ineq).pass);
    auto z = zero_structure(f);
    CHECK(z.violated_count == 0);
    CHECK(z.outcomes.size() == z.zeros.pairs.size());
  }
}
