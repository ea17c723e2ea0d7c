#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "catalan/seq.hpp"
#include "catalan/series.hpp"

using namespace catalan;

TEST_CASE("sqrt(1-4x) starts 1, -2, -2, -4, -10, -28 and squares back") {
  const Series s = sqrt_one_minus_4x(200);
  const long head[] = {1, -2, -2, -4, -10, -28};
  for (unsigned k = 0; k < 6; ++k) CHECK(s.coeff(k) == head[k]);
  CHECK(s.integral());

  const Series square = series_mul(s, s);
  CHECK(square == Series({1, -4}, 200));
  CHECK_THROWS_AS(sqrt_one_minus_4x(0), std::domain_error);
}

TEST_CASE("catalan generating function matches the sequence") {
  const Series c = expand_catalan_gf(512);
  for (const auto& m : compare_with_sequence(c, SeqKind::C)) {
    CAPTURE(m.k);
    CHECK(m.match);
  }
}

TEST_CASE("index generating function is x/(1-x)^2") {
  const Series n = expand_index_gf(64);
  for (unsigned k = 0; k <= 64; ++k) CHECK(n.coeff(k) == k);
}

TEST_CASE("closed form rebuilds the component totals") {
  const Series a = expand_A_closed_form(512);
  CHECK(a.integral());
  for (const auto& m : compare_with_sequence(a, SeqKind::A)) {
    CAPTURE(m.k);
    CHECK(m.match);
  }

  const Series rebuilt = series_sub(
      series_add(expand_catalan_gf(512), expand_index_gf(512)), Series({0, 1}, 512));
  CHECK(a == rebuilt);
}

TEST_CASE("ring operations") {
  const Series p({1, 2, 3}, 16);
  const Series q({0, 5, 0, 7}, 16);
  CHECK(series_sub(series_add(p, q), q) == p);
  CHECK(series_mul(p, q) == series_mul(q, p));

  const Series s = sqrt_one_minus_4x(16);
  CHECK(series_div(series_mul(s, p), s) == p);

  CHECK_THROWS_AS(series_add(Series(4), Series(5)), std::invalid_argument);
  CHECK_THROWS_AS(series_div(p, Series({0, 1}, 16)), std::domain_error);
}

TEST_CASE("polynomial constructor pads and truncates") {
  const Series padded({1, 2}, 4);
  CHECK(padded.order() == 4);
  CHECK(padded.coeff(0) == 1);
  CHECK(padded.coeff(1) == 2);
  CHECK(padded.coeff(4) == 0);

  const Series truncated({1, 2, 3}, 1);
  CHECK(truncated.order() == 1);
  CHECK(truncated.coeff(1) == 2);

  CHECK_THROWS_AS((void)padded.coeff(5), std::out_of_range);
}

TEST_CASE("division undoes multiplication against the catalan gf") {
  // C(x) satisfies C = x + C^2: check it through the ring operations.
  const unsigned order = 128;
  const Series c = expand_catalan_gf(order);
  const Series x({0, 1}, order);
  CHECK(series_add(x, series_mul(c, c)) == c);
}
