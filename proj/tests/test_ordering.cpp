#include <doctest.h>

#include <stdexcept>

#include "fstack/errors.hpp"
#include "fstack/normal_form.hpp"
#include "fstack/ordering.hpp"
#include "fstack/word.hpp"

using namespace fstack;

namespace {

Edge edge(const std::string& source, Gen g) {
  return Edge{normal_form_from_word(parse_word(source)), g};
}

}  // namespace

TEST_CASE("cell counts of boxes") {
  CHECK(c_seq(1) == 1);
  CHECK(c_seq(2) == 1);
  CHECK(c_seq(3) == 5);
  CHECK(c_seq(4) == 9);
  CHECK(c_seq(5) == 21);
  CHECK(c_seq(6) == 41);
  CHECK(c_seq(7) == 85);
  CHECK(c_seq(8) == 169);
  CHECK(c_seq(13) == 5461);
  for (unsigned i = 1; i <= 12; ++i) CHECK(c_seq(Int(i)) == c_seq_by_recurrence(i));
  CHECK_THROWS_AS((void)c_seq(0), std::domain_error);
  CHECK_THROWS_AS((void)c_seq(-3), std::domain_error);
}

TEST_CASE("edge endpoints and inverses") {
  const Edge e = edge("yx", Gen::y);
  CHECK(e.target().str() == "xyx^-2yx^2");
  CHECK(e.inverse().source.str() == "xyx^-2yx^2");
  CHECK(e.inverse().label == Gen::Y);
  CHECK(e.inverse().inverse() == e);
  CHECK(!e.in_tree());
  CHECK(edge("yx", Gen::x).in_tree());
  CHECK(edge("yx", Gen::Y).in_tree());
  CHECK(edge("yx^2", Gen::Y).in_tree() == false);
  CHECK(edge("x^4", Gen::y).in_tree());
}

TEST_CASE("size sequences read off the profile") {
  // y-edge at yx: s = (1, 1), m = 1, so sigma = (s_0) = (1)
  CHECK(size_sequence(edge("yx", Gen::y)) == SizeSequence{Int(1)});
  // y^-1-edge at yx^2: s_0 = 2, sigma = (s_0 - 1) = (1)
  CHECK(size_sequence(edge("yx^2", Gen::Y)) == SizeSequence{Int(1)});
  // y-edge at yx^3: m = 1, sigma = (3)
  CHECK(size_sequence(edge("yx^3", Gen::y)) == SizeSequence{Int(3)});
  // y-edge at yx^-1yx^2: s = (1, 1, 2) in subscript order, m = n = 2
  CHECK(size_sequence(edge("yx^-1yx^2", Gen::y)) == SizeSequence{Int(2), Int(1)});
  // tree edges have no size sequence
  CHECK_THROWS_AS((void)size_sequence(edge("yx", Gen::x)), precondition_error);
  CHECK_THROWS_AS((void)size_sequence(edge("x^2", Gen::y)), precondition_error);
}

TEST_CASE("sigma and W are invariant under edge reversal") {
  const Edge edges[] = {
      edge("yx", Gen::y),       edge("yx^2", Gen::Y),
      edge("yx^3", Gen::y),     edge("yx^-1yx^2", Gen::y),
      edge("x^2y^-1xy^-1x^-2yx^4", Gen::y),
  };
  for (const Edge& e : edges) {
    CHECK(size_sequence(e) == size_sequence(e.inverse()));
    CHECK(weight(e) == weight(e.inverse()));
  }
}

TEST_CASE("weights of named edges") {
  CHECK(weight(edge("yx", Gen::y)) == 1);
  CHECK(weight(edge("yx^3", Gen::y)) == 5);
  CHECK(weight(edge("yx^-1yx^2", Gen::y)) == 2);
  // the running example: sigma = (4, 2, 3), W = 9 + 1 + 5 = 15
  const Edge fig = edge("x^2y^-1xy^-1x^-2yx^4", Gen::y);
  CHECK(print_sizes(size_sequence(fig)) == "(4, 2, 3)");
  CHECK(weight(fig) == 15);
}

TEST_CASE("the order compares weights") {
  const Edge small = edge("yx", Gen::y);
  const Edge big = edge("yx^3", Gen::y);
  CHECK(precedes(small, big));
  CHECK(!precedes(big, small));
  CHECK(!precedes(small, small));
  CHECK_THROWS_AS((void)precedes(small, edge("yx", Gen::x)), precondition_error);
}

TEST_CASE("printing size sequences") {
  CHECK(print_sizes({}) == "()");
  CHECK(print_sizes({Int(7)}) == "(7)");
  CHECK(print_sizes({Int(1), Int(2), Int(1)}) == "(1, 2, 1)");
}
