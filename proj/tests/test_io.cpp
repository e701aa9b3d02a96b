#include <doctest.h>

#include "sincov/genbench.hpp"
#include "sincov/io.hpp"
#include "support/helpers.hpp"

using namespace sincov;
using test::qmat;

namespace {

std::string error_of(const std::string& text, Format f) {
  try {
    parse_instance<double>(text, f, {std::nullopt, Mode::multiplicative, "in"});
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("CSV and JSON round trips") {
  for (GenKind k : all_gen_kinds()) {
    GenSpec spec{k, 7, 21, {}};
    auto q = generate<Rational>(spec);
    auto d = generate<double>(spec);
    ReadOptions opts{q.mode(), Mode::multiplicative, "t"};
    for (Format f : {Format::csv, Format::json}) {
      CHECK(parse_instance<Rational>(format_instance(q, f), f, opts) == q);
      CHECK(test::bit_equal(parse_instance<double>(format_instance(d, f), f, opts), d));
    }
  }
}

TEST_CASE("exact readers take decimals at face value") {
  auto q = parse_instance<Rational>(",a,b\na,1,0.1\nb,10,1\n", Format::csv);
  CHECK(q(0, 1) == Rational(1, 10));
  auto j = parse_instance<Rational>(R"({"labels":["a","b"],"matrix":[[1,0.1],["10","1"]]})",
                                    Format::json);
  CHECK(j(0, 1) == Rational(1, 10));
  CHECK(j.mode() == Mode::multiplicative);
  auto p = parse_instance<Rational>(",a\na,-3/6\n", Format::csv);
  CHECK(p(0, 0) == Rational(-1, 2));
}

TEST_CASE("quoted CSV labels") {
  auto m = parse_instance<double>(",\"x, y\",\"say \"\"hi\"\"\"\n\"x, y\",1,2\n\"say \"\"hi\"\"\",3,4\n",
                                  Format::csv);
  CHECK(m.label(0) == "x, y");
  CHECK(m.label(1) == "say \"hi\"");
  auto again = parse_instance<double>(format_instance(m, Format::csv), Format::csv);
  CHECK(again == m);
}

TEST_CASE("CSV errors carry line and column") {
  auto e = error_of(",a,b\na,1,2\nb,0.5,x\n", Format::csv);
  CHECK(e.find("in:3:7:") != std::string::npos);
  CHECK(error_of(",a,b\na,1\nb,1,1\n", Format::csv).find("in:2:") != std::string::npos);
  CHECK(error_of(",a,b\nb,1,2\na,1,1\n", Format::csv).find("in:2:") != std::string::npos);
  CHECK(error_of(",a,a\na,1,2\na,1,1\n", Format::csv).find("in:") != std::string::npos);
  CHECK_FALSE(error_of("", Format::csv).empty());
}

TEST_CASE("JSON errors") {
  CHECK(error_of("{\n  \"labels\": [\"a\"],\n  \"matrix\": [[1,]]\n}", Format::json)
            .find("in:3:") != std::string::npos);
  CHECK_FALSE(error_of(R"({"labels":["a"]})", Format::json).empty());
  CHECK_FALSE(error_of(R"({"labels":["a"],"matrix":[[true]]})", Format::json).empty());
  CHECK_FALSE(error_of(R"({"labels":["a"],"mode":"odd","matrix":[[1]]})", Format::json).empty());
  CHECK_FALSE(error_of(R"({"labels":["a","b"],"matrix":[[1,2]]})", Format::json).empty());
}

TEST_CASE("mode precedence: override, then file, then CSV default") {
  const std::string json = R"({"labels":["a"],"mode":"additive","matrix":[[0]]})";
  CHECK(parse_instance<double>(json, Format::json).mode() == Mode::additive);
  ReadOptions force{Mode::multiplicative, Mode::multiplicative, "j"};
  CHECK(parse_instance<double>(json, Format::json, force).mode() == Mode::multiplicative);
  ReadOptions csv_add{std::nullopt, Mode::additive, "c"};
  CHECK(parse_instance<double>(",a\na,0\n", Format::csv, csv_add).mode() == Mode::additive);
}

TEST_CASE("families") {
  BasicPotentialFamily<Rational> fam;
  fam.labels = {"p", "q"};
  fam.mode = Mode::additive;
  fam.members = {{{0, 2}}, {{1, Rational(-1, 3)}}};
  for (Format f : {Format::csv, Format::json}) {
    auto back = parse_family<Rational>(format_family(fam, f), f, {Mode::additive});
    CHECK(back.labels == fam.labels);
    CHECK(back.mode == Mode::additive);
    REQUIRE(back.members.size() == 2);
    CHECK(back.members[1] == fam.members[1]);
  }
  CHECK(format_family(fam, Format::csv).find("f1,") != std::string::npos);
}

TEST_CASE("format helpers") {
  CHECK(format_from_path("a/b.json") == Format::json);
  CHECK(format_from_path("a/b.CSV", Format::json) == Format::json);
  CHECK(format_from_path("x.csv") == Format::csv);
  CHECK(parse_format("json") == Format::json);
  CHECK_THROWS_AS(parse_format("xml"), UsageError);
  CHECK(scalar_json(Rational(3, 4)) == "3/4");
  CHECK(scalar_json(0.5) == 0.5);
  CHECK_THROWS_AS(read_file("/nonexistent/file.csv"), InputError);
}
