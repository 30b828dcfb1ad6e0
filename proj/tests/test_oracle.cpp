#include <doctest.h>

#include "fstack/oracle.hpp"
#include "fstack/word.hpp"

using namespace fstack;
using oracle::Dyadic;
using oracle::PLMap;

TEST_CASE("dyadic arithmetic stays canonical") {
  CHECK(Dyadic(1, 1) + Dyadic(1, 2) == Dyadic(3, 2));
  CHECK(Dyadic(2, 1) == Dyadic(1));
  CHECK(Dyadic(1) - Dyadic(1, 2) == Dyadic(3, 2));
  CHECK(Dyadic(1, 1) * Dyadic(1, 1) == Dyadic(1, 2));
  CHECK(Dyadic(3, 2).scale_pow2(2) == Dyadic(3));
  CHECK(Dyadic(3, 2).scale_pow2(-1) == Dyadic(3, 3));
  CHECK(Dyadic(0).is_zero());
  CHECK(Dyadic(1, 2) < Dyadic(1, 1));
  CHECK(Dyadic(3, 2).str() == "3/4");
  CHECK(Dyadic(2).str() == "2");
}

TEST_CASE("generator maps act on dyadic points") {
  const PLMap x = oracle::generator_map(Gen::x);
  CHECK(x(Dyadic(1, 1)) == Dyadic(1, 2));
  CHECK(x(Dyadic(3, 2)) == Dyadic(1, 1));
  CHECK(x(Dyadic(1, 2)) == Dyadic(1, 3));
  const PLMap y = oracle::generator_map(Gen::y);
  CHECK(y(Dyadic(1, 1)) == Dyadic(1, 1));
  CHECK(y(Dyadic(1, 2)) == Dyadic(1, 2));  // fixed below 1/2
  CHECK(y(Dyadic(3, 2)) == Dyadic(5, 3));
  const PLMap xinv = oracle::generator_map(Gen::X);
  CHECK(xinv(Dyadic(1, 2)) == Dyadic(1, 1));
  CHECK(oracle::compose(x, xinv).is_identity());
}

TEST_CASE("both relators act as the identity homeomorphism") {
  CHECK(oracle::evaluate(relator_r1()).is_identity());
  CHECK(oracle::evaluate(relator_r2()).is_identity());
}

TEST_CASE("evaluation folds left to right") {
  const Word u = parse_word("xy");
  const Word v = parse_word("yx^-1");
  CHECK(oracle::evaluate(concat(u, v)) ==
        oracle::compose(oracle::evaluate(u), oracle::evaluate(v)));
  CHECK(oracle::evaluate(parse_word("xX")).is_identity());
  CHECK(oracle::evaluate(Word{}).is_identity());
}

TEST_CASE("oracle equates words that are equal in the group") {
  CHECK(oracle::equal(oracle::evaluate(parse_word("yxy")),
                      oracle::evaluate(parse_word("xyx^-2yx^2"))));
  CHECK(oracle::equal(oracle::evaluate(parse_word("yx^2y^-1")),
                      oracle::evaluate(parse_word("x^2y^-1x^-1yx"))));
  CHECK(!oracle::equal(oracle::evaluate(parse_word("x")), oracle::evaluate(parse_word("y"))));
  CHECK(!oracle::equal(oracle::evaluate(parse_word("xy")), oracle::evaluate(parse_word("yx"))));
}

TEST_CASE("inverse undoes a map exactly") {
  const PLMap f = oracle::evaluate(parse_word("x^2yx^-1y^-1"));
  CHECK(oracle::compose(f, oracle::inverse(f)).is_identity());
  CHECK(oracle::compose(oracle::inverse(f), f).is_identity());
}
