#include <doctest.h>

#include <stdexcept>

#include "fstack/errors.hpp"
#include "fstack/normal_form.hpp"
#include "fstack/word.hpp"

using namespace fstack;

namespace {

NormalForm nf(const std::string& s) { return normal_form_from_word(parse_word(s)); }

}  // namespace

TEST_CASE("membership scanner") {
  CHECK(is_normal_form(parse_word("")));
  CHECK(is_normal_form(parse_word("x^5")));
  CHECK(is_normal_form(parse_word("xyx^-2yx^2")));
  CHECK(is_normal_form(parse_word("yxy^-1")));
  CHECK(is_normal_form(parse_word("x^2y^-1")));
  CHECK(is_normal_form(parse_word("yx^-2y")));
  CHECK(is_normal_form(parse_word("yyx")));
  CHECK(!is_normal_form(parse_word("yxy")));      // y-rule factor of size 1
  CHECK(!is_normal_form(parse_word("yx^2y^-1")));  // y^-1-rule factor of size 1
  CHECK(!is_normal_form(parse_word("xx^-1")));     // not freely reduced
  CHECK(!is_normal_form(parse_word("x^3yx^2yx")));
}

TEST_CASE("constructor validates the three shape conditions") {
  CHECK_NOTHROW(NormalForm({Int(1), Int(-2), Int(2)}, {1, 1}));
  // e_1 = +1 requires i_1 <= 0
  CHECK_THROWS_AS(NormalForm({Int(0), Int(1), Int(0)}, {1, 1}), std::invalid_argument);
  // e_1 = -1 allows i_1 = 1 but not 2
  CHECK_NOTHROW(NormalForm({Int(0), Int(1), Int(0)}, {1, -1}));
  CHECK_THROWS_AS(NormalForm({Int(0), Int(2), Int(0)}, {1, -1}), std::invalid_argument);
  // i_1 = 0 requires matching signs
  CHECK_THROWS_AS(NormalForm({Int(0), Int(0), Int(0)}, {1, -1}), std::invalid_argument);
  CHECK_NOTHROW(NormalForm({Int(0), Int(0), Int(0)}, {-1, -1}));
  // vector shapes must match
  CHECK_THROWS_AS(NormalForm({Int(1)}, {1}), std::invalid_argument);
}

TEST_CASE("subscript accessors use display storage") {
  const NormalForm g = nf("x^2y^-1xy^-1x^-2yx^4");
  CHECK(g.n() == 3);
  CHECK(g.i(0) == 4);
  CHECK(g.i(1) == -2);
  CHECK(g.i(2) == 1);
  CHECK(g.i(3) == 2);
  CHECK(g.eps(1) == 1);
  CHECK(g.eps(2) == -1);
  CHECK(g.eps(3) == -1);
  CHECK(g.str() == "x^2y^-1xy^-1x^-2yx^4");
  CHECK(g.to_word() == parse_word("x^2y^-1xy^-1x^-2yx^4"));
}

TEST_CASE("normal_form_from_word rejects words outside N") {
  CHECK_THROWS_AS((void)normal_form_from_word(parse_word("yxy")), std::invalid_argument);
  CHECK_THROWS_AS((void)normal_form_from_word(parse_word("xX")), std::invalid_argument);
}

TEST_CASE("rewriting to normal form, with trace") {
  const auto [result, derivation] = sigma_normalize(parse_word("yxy"));
  CHECK(result.str() == "xyx^-2yx^2");
  REQUIRE(derivation.steps.size() == 1);
  CHECK(derivation.steps[0].rule == DerivationStep::Rule::y_rule);
  CHECK(derivation.steps[0].size == 1);
  CHECK(derivation.steps[0].position == 0);
  CHECK(derivation.steps[0].before == parse_word("yxy"));
  CHECK(derivation.steps[0].after == parse_word("xyx^-2yx^2"));

  CHECK(sigma_normalize_word(parse_word("yx^2y^-1")) == parse_word("x^2y^-1x^-1yx"));
  CHECK(sigma_normalize_word(parse_word("xXyY")) == Word{});
  CHECK(sigma_normalize_word(parse_word("xyx^-2yx^2")) == parse_word("xyx^-2yx^2"));
}

TEST_CASE("redex search picks the earliest end position") {
  const Word w = parse_word("yxy");
  const auto r = find_sigma_redex(w);
  REQUIRE(r.has_value());
  CHECK(r->rule == DerivationStep::Rule::y_rule);
  CHECK(r->start == 0);
  CHECK(r->end == 2);
  CHECK(r->size == 1);
  CHECK(apply_sigma_redex(w, *r) == parse_word("xyx^-2yx^2"));

  const auto free_first = find_sigma_redex(parse_word("xXy"));
  REQUIRE(free_first.has_value());
  CHECK(free_first->rule == DerivationStep::Rule::free_reduction);
  CHECK(free_first->start == 0);

  CHECK(!find_sigma_redex(parse_word("xyx^-2yx^2")).has_value());

  // y^-1-rule needs an x-run of length >= 2
  const auto yinv = find_sigma_redex(parse_word("yx^3y^-1"));
  REQUIRE(yinv.has_value());
  CHECK(yinv->rule == DerivationStep::Rule::y_inv_rule);
  CHECK(yinv->size == 2);
  CHECK(!find_sigma_redex(parse_word("yxy^-1")).has_value());
}

TEST_CASE("cumulative exponent profile and cutoffs") {
  const ExponentProfile p = profile(nf("x^2y^-1xy^-1x^-2yx^4"));
  CHECK(p.s_k(0) == 4);
  CHECK(p.s_k(1) == 2);
  CHECK(p.s_k(2) == 3);
  CHECK(p.s_k(3) == 5);
  CHECK(p.m == 3);
  CHECK(p.m_prime == 3);

  const ExponentProfile q = profile(nf("y^-1x^-1yx"));
  CHECK(q.s_k(0) == 1);
  CHECK(q.s_k(1) == 0);
  CHECK(q.s_k(2) == 0);
  CHECK(q.m == 1);
  CHECK(q.m_prime == 0);  // s_0 = 1 <= 1 already

  const ExponentProfile e = profile(NormalForm{});
  CHECK(e.s.size() == 1);
  CHECK(e.s_k(0) == 0);
  CHECK(e.m == 0);
  CHECK(e.m_prime == 0);
}

TEST_CASE("tree membership of edges") {
  CHECK(in_tree(nf("yx"), Gen::x));
  CHECK(in_tree(nf("yx"), Gen::X));
  CHECK(!in_tree(nf("yx"), Gen::y));
  CHECK(in_tree(nf("yx"), Gen::Y));    // y^-1 needs i_0 >= 2 to leave the tree
  CHECK(!in_tree(nf("yx^2"), Gen::Y));
  CHECK(in_tree(nf("x^9"), Gen::y));   // n = 0: always on the tree
  CHECK(in_tree(nf("yx^-3"), Gen::y));
  CHECK(in_tree(NormalForm{}, Gen::y));
}

TEST_CASE("closed-form multiplication matches the worked products") {
  CHECK(multiply(nf("yx"), Gen::y).str() == "xyx^-2yx^2");
  CHECK(multiply(nf("yx^2"), Gen::Y).str() == "x^2y^-1x^-1yx");
  // cancellation cases
  CHECK(multiply(nf("y^-1x^-1yx"), Gen::y).str() == "x^-2yx^2");
  CHECK(multiply(nf("xyx^-2yx^2"), Gen::Y).str() == "yx");
  // tree cases append or cancel directly
  CHECK(multiply(nf("yx"), Gen::x).str() == "yx^2");
  CHECK(multiply(nf("yx"), Gen::Y).str() == "yxy^-1");
  CHECK(multiply(nf("yxy^-1"), Gen::y).str() == "yx");
  CHECK(multiply(NormalForm{}, Gen::Y).str() == "y^-1");
}

TEST_CASE("multiply_y demands an off-tree edge") {
  CHECK_THROWS_AS((void)multiply_y(nf("x^2"), 1), precondition_error);
  CHECK_THROWS_AS((void)multiply_y(nf("yx"), -1), precondition_error);
}

TEST_CASE("all routes agree on short words") {
  // exhaustive over |w| <= 4
  Word w;
  const Gen gens[4] = {Gen::x, Gen::X, Gen::y, Gen::Y};
  const auto rec = [&](auto&& self, std::size_t depth) -> void {
    const Word via_sigma = sigma_normalize_word(w);
    const NormalForm via_mult = normalize_by_multiplication(w);
    CHECK(via_sigma == via_mult.to_word());
    CHECK(is_normal_form(via_sigma));
    if (depth == 4) return;
    for (const Gen g : gens) {
      w.push_back(g);
      self(self, depth + 1);
      w.pop_back();
    }
  };
  rec(rec, 0);
}

TEST_CASE("a letter-level product agrees with the direct rewriting") {
  const NormalForm g = nf("yx^-1yx^2");
  const NormalForm lhs = multiply(g, Gen::y);
  Word w = g.to_word();
  w.push_back(Gen::y);
  CHECK(lhs.to_word() == sigma_normalize_word(w));
  CHECK(lhs.str() == "xyx^-2yx^-1yx^3");
}
