#include <cmath>
#include <sstream>

#include "doctest.h"
#include "oracle_values.hpp"
#include "support.hpp"
#include "szeta/errors.hpp"
#include "szeta/quadrature.hpp"
#include "szeta/smooth_terms.hpp"
#include "szeta/zero_data.hpp"

using namespace szeta;

namespace {
ZeroTable parse(const std::string& text, ZeroFormat fmt = ZeroFormat::plain_ascending,
                const std::string& label = "inline") {
  std::istringstream in(text);
  return parse_zero_file(in, fmt, label);
}
}  // namespace

TEST_CASE("plain files") {
  const auto t = parse("14.5\n21.0\n25.0");
  CHECK(t.size() == 3);
  CHECK(t.height_ceiling() == 25.0);
  CHECK(t.source() == "inline");

  const auto crlf = parse("# comment\r\n14.134725142\r\n\r\n# another\r\n21.022039639\r\n");
  CHECK(crlf.size() == 2);
  CHECK(crlf.ordinates()[0] == doctest::Approx(14.134725142));

  const std::string header = "# height_ceiling: 30\n# source: demo\n# precision_digits = 9\n14.5\n21.0\n";
  const auto headed = parse(header, ZeroFormat::plain_ascending, "");
  CHECK(headed.height_ceiling() == 30.0);
  CHECK(headed.source() == "demo");
  CHECK(parse(header).source() == "inline");
  CHECK(headed.precision_digits() == 9);

  const auto twice = parse("14.5\n21.0\n21.0\n25.0");
  CHECK(twice.count_upto(22.0) == 3);
}

TEST_CASE("rejected files") {
  CHECK_THROWS_AS(parse(""), EmptyTableError);
  CHECK_THROWS_AS(parse("# only comments\n"), EmptyTableError);
  CHECK_THROWS_AS(parse("14.5\nabc\n"), ParseError);
  CHECK_THROWS_AS(parse("14.5\n1e14\n"), ParseError);
  CHECK_THROWS_AS(parse("-3\n"), ParseError);
  CHECK_THROWS_AS(parse("14.0\n21.0\n"), DomainError);
  try {
    parse("21.0\n14.5\n");
    FAIL("expected MonotonicityError");
  } catch (const MonotonicityError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse("# height_ceiling: 20\n14.5\n21.0\n"), DomainError);
}

TEST_CASE("labeled files") {
  const auto t = parse("1 14.134725142\n2 21.022039639\n3 25.010857580\n", ZeroFormat::labeled);
  CHECK(t.size() == 3);
  CHECK_THROWS_AS(parse("2 14.5\n1 21.0\n", ZeroFormat::labeled), MonotonicityError);
  CHECK_THROWS_AS(parse("1.5 14.5\n", ZeroFormat::labeled), ParseError);
  CHECK(parse_zero_format("labeled") == ZeroFormat::labeled);
  CHECK_THROWS_AS(parse_zero_format("odlyzko"), DomainError);
}

TEST_CASE("write and read back") {
  const std::vector<double> ords{14.134725141735, 21.022039638772, 25.010857580146};
  std::ostringstream out;
  write_zero_file(out, ords, 26.0, 12, "round trip");
  std::istringstream in(out.str());
  const auto t = parse_zero_file(in, ZeroFormat::plain_ascending);
  CHECK(t.size() == 3);
  CHECK(t.height_ceiling() == 26.0);
  CHECK(t.source() == "round trip");
  for (std::size_t i = 0; i < 3; ++i) CHECK(t.ordinates()[i] == doctest::Approx(ords[i]).epsilon(1e-14));
}

TEST_CASE("counting on the generated table") {
  const auto& t = test::table();
  CHECK(t.ordinates()[0] == doctest::Approx(oracle::kZero1).epsilon(1e-12));
  CHECK(t.ordinates()[1] == doctest::Approx(oracle::kZero2).epsilon(1e-12));
  CHECK(t.ordinates()[28] == doctest::Approx(oracle::kZero29).epsilon(1e-12));
  CHECK(t.ordinates()[4999] == doctest::Approx(oracle::kZero5000).epsilon(1e-13));
  CHECK(t.ordinates()[99999] == doctest::Approx(oracle::kZero100000).epsilon(1e-14));
  CHECK(t.count_upto(14.0) == 0);
  CHECK(t.count_upto(15.0) == 1);
  CHECK(t.count_upto(100.0) == 29);
  CHECK(t.count_interval(14.0, 15.0) == 1);
  CHECK(t.count_interval(50.0, 50.0) == 0);
  CHECK(t.count_interval(0.0, t.height_ceiling()) == static_cast<std::int64_t>(t.size()));
  CHECK(t.count_interval(100.0, 200.0) + t.count_interval(200.0, 300.0) == t.count_interval(100.0, 300.0));
  CHECK_THROWS_AS(t.count_upto(t.height_ceiling() + 1.0), IncompleteTableError);
  CHECK_THROWS_AS(t.count_upto(-1.0), DomainError);

  // count sits within 1.2 log T of the smooth main term
  std::int64_t previous = 0;
  for (int k = 0; k <= 400; ++k) {
    const double T = 15.0 * std::pow(t.height_ceiling() / 15.0, k / 400.0);
    const auto n = t.count_upto(T);
    CHECK(n >= previous);
    previous = n;
    CHECK(std::abs(static_cast<double>(n) - main_term(T) - 0.875) <= 1.2 * std::log(T));
  }
}

TEST_CASE("truncation and pieces") {
  const auto& t = test::table();
  const auto small = t.truncated(100.0);
  CHECK(small.size() == 29);
  CHECK(small.height_ceiling() == 100.0);
  double covered = 0.0;
  std::int64_t last = -1;
  t.for_each_piece(10.0, 40.0, 1.0, [&](double lo, double hi, std::int64_t n) {
    CHECK(hi - lo <= 1.0 + 1e-12);
    CHECK(n == t.count_upto(0.5 * (lo + hi)));
    CHECK(n >= last);
    last = n;
    covered += hi - lo;
  });
  CHECK(covered == doctest::Approx(30.0));
}

TEST_CASE("off-line counters") {
  const OffLineZeroTable empty;
  const auto e = offline_counters(empty, 0.6, 100.0);
  CHECK(e.n_sigma == 0);
  CHECK(e.a_t == 0.0);

  const OffLineZeroTable one({{0.75, 10.0}}, "synthetic");
  const auto a = offline_counters(one, 0.6, 20.0);
  CHECK(a.n_sigma == 1);
  CHECK(a.a_t == doctest::Approx(0.0625));
  const auto b = offline_counters(one, 0.8, 20.0);
  CHECK(b.n_sigma == 0);
  CHECK(b.a_t == doctest::Approx(0.0625));
  CHECK(offline_counters(one, 0.6, 5.0).n_sigma == 0);
  CHECK_THROWS_AS(offline_counters(one, 0.5, 20.0), DomainError);
  CHECK_THROWS(OffLineZeroTable({{0.5, 10.0}}, "bad"));

  // A(T) = 2 int_{1/2}^1 (sigma - 1/2) N(sigma, T) d sigma
  const OffLineZeroTable several({{0.55, 30.0}, {0.7, 40.0}, {0.9, 50.0}, {0.62, 80.0}}, "synthetic");
  double integral = 0.0;
  const std::vector<double> breaks{0.5, 0.55, 0.62, 0.7, 0.9, 1.0};
  for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
    integral += gauss_rule(8).integrate(
        [&](double s) {
          return 2.0 * (s - 0.5) * static_cast<double>(offline_counters(several, s, 60.0).n_sigma);
        },
        breaks[k], breaks[k + 1]);
  }
  CHECK(std::abs(integral - offline_counters(several, 0.6, 60.0).a_t) < 1e-10);
}
