#include <doctest.h>

#include <set>
#include <string>

#include "fstack/cprs.hpp"
#include "fstack/errors.hpp"
#include "fstack/flow.hpp"
#include "fstack/normal_form.hpp"
#include "fstack/word.hpp"

using namespace fstack;

TEST_CASE("the rule table is the fixed fourteen-rule system") {
  const auto& rs = rules();
  REQUIRE(rs.size() == 14);
  // family order and identifiers
  CHECK(rs[0].id == "free-x");
  CHECK(rs[1].id == "free-x^-1");
  CHECK(rs[2].id == "free-y");
  CHECK(rs[3].id == "free-y^-1");
  CHECK(rs[4].id == "y-rule(+1,1)");
  CHECK(rs[5].id == "y-rule(+1,2)");
  CHECK(rs[6].id == "y-rule(-1,1)");
  CHECK(rs[7].id == "y-rule(-1,2)");
  CHECK(rs[8].id == "y^-1-rule(+1,2)");
  CHECK(rs[9].id == "y^-1-rule(+1,3)");
  CHECK(rs[10].id == "y^-1-rule(-1,2)");
  CHECK(rs[11].id == "y^-1-rule(-1,3)");
  CHECK(rs[12].id == "xy-rule");
  CHECK(rs[13].id == "x^2y^-1-rule");
  std::set<std::string> ids;
  for (const auto& r : rs) {
    ids.insert(r.id);
    CHECK(r.lhs_suffix.size() >= 1);
    CHECK(r.lhs_suffix.size() <= 5);
    CHECK(r.rhs_suffix.size() <= 10);
    CHECK(r.guard != nullptr);
  }
  CHECK(ids.size() == 14);  // identifiers are distinct

  // spot-check shapes
  CHECK(rs[0].lhs_suffix == parse_word("xx^-1"));
  CHECK(rs[0].rhs_suffix.empty());
  CHECK(rs[4].lhs_suffix == parse_word("yxy"));
  CHECK(rs[4].rhs_suffix == parse_word("xyx^-2yx^2"));
  CHECK(rs[7].lhs_suffix == parse_word("y^-1x^2y"));
  CHECK(rs[7].rhs_suffix == parse_word("x^2yx^-3y^-1x^3"));
  CHECK(rs[9].lhs_suffix == parse_word("yx^3y^-1"));
  CHECK(rs[9].rhs_suffix == parse_word("x^3y^-1x^-2yx^2"));
  CHECK(rs[12].lhs_suffix == parse_word("xy"));
  CHECK(rs[12].rhs_suffix == parse_word("y^-1xyx^-2yx^2"));
  CHECK(rs[13].lhs_suffix == parse_word("x^2y^-1"));
  CHECK(rs[13].rhs_suffix == parse_word("y^-1x^2y^-1x^-1yx"));
}

TEST_CASE("guards admit exactly the documented prefixes") {
  const auto& rs = rules();
  // free reductions fire after any prefix
  CHECK(rs[0].guard->accepts(parse_word("yxy")));
  // y-rule(+1,1): u such that u y x is a normal form
  CHECK(rs[4].guard->accepts(Word{}));
  CHECK(rs[4].guard->accepts(parse_word("x^5")));
  CHECK(rs[4].guard->accepts(parse_word("y")));   // y·yx = yyx is normal
  CHECK(!rs[4].guard->accepts(parse_word("yx"))); // yx·yx contains yxy
  CHECK(!rs[4].guard->accepts(parse_word("xX")));
  // xy-rule guard: normal forms with a y-letter and two trailing x's
  CHECK(rs[12].guard->accepts(parse_word("yx^2")));
  CHECK(rs[12].guard->accepts(parse_word("yx^6")));
  CHECK(!rs[12].guard->accepts(parse_word("x^2")));
  CHECK(!rs[12].guard->accepts(parse_word("yx")));
  CHECK(!rs[12].guard->accepts(parse_word("yxyx^2")));  // not a normal form
  CHECK(rs[12].guard->accepts(parse_word("yx^-1yx^2")));
  // x^2y^-1-rule shares the guard language
  CHECK(rs[13].guard->accepts(parse_word("yx^2")));
  CHECK(!rs[13].guard->accepts(parse_word("yx")));
}

TEST_CASE("single steps match the worked examples") {
  const auto s1 = rewrite_once(parse_word("yxy"));
  REQUIRE(s1.has_value());
  CHECK(s1->rule_id == "y-rule(+1,1)");
  CHECK(s1->split == 0);
  CHECK(s1->result == parse_word("xyx^-2yx^2"));

  const auto s2 = rewrite_once(parse_word("yx^3y"));
  REQUIRE(s2.has_value());
  CHECK(s2->rule_id == "xy-rule");
  CHECK(s2->split == 3);
  CHECK(s2->result == parse_word("yx^2y^-1xyx^-2yx^2"));

  const auto s3 = rewrite_once(parse_word("yx^4y^-1"));
  REQUIRE(s3.has_value());
  CHECK(s3->rule_id == "x^2y^-1-rule");
  CHECK(s3->split == 3);
  CHECK(s3->result == parse_word("yx^2y^-1x^2y^-1x^-1yx"));

  // free reduction wins at the earliest split
  const auto s4 = rewrite_once(parse_word("xx^-1y"));
  REQUIRE(s4.has_value());
  CHECK(s4->rule_id == "free-x");
  CHECK(s4->split == 0);
  CHECK(s4->result == parse_word("y"));

  // irreducible iff normal form
  CHECK(!rewrite_once(parse_word("xyx^-2yx^2")).has_value());
  CHECK(!rewrite_once(Word{}).has_value());
}

TEST_CASE("iterated rewriting reaches the unique normal form") {
  const RewriteResult r = rewrite_to_irreducible(parse_word("yx^3y"));
  CHECK(r.word == sigma_normalize_word(parse_word("yx^3y")));
  CHECK(r.steps >= 2);
  CHECK(is_normal_form(r.word));

  const RewriteResult id = rewrite_to_irreducible(parse_word("xyYx^-1"));
  CHECK(id.word.empty());
  CHECK(id.steps == 2);

  // exhaustive agreement with the other two normalization routes
  const Gen gens[4] = {Gen::x, Gen::X, Gen::y, Gen::Y};
  Word w;
  const auto rec = [&](auto&& self, std::size_t depth) -> void {
    CHECK(rewrite_to_irreducible(w).word == sigma_normalize_word(w));
    if (depth == 4) return;
    for (const Gen g : gens) {
      w.push_back(g);
      self(self, depth + 1);
      w.pop_back();
    }
  };
  rec(rec, 0);
}

TEST_CASE("flow triples pad to the image length") {
  const GraphPhiTriple t = graph_phi(normal_form_from_word(parse_word("yx")), Gen::y);
  CHECK(t.a == Gen::y);
  CHECK(t.out_label == phi(Edge{t.gamma, Gen::y}).label);
  CHECK(t.out_label.size() == 9);
  CHECK(t.padded().encode().size() == 9);

  const GraphPhiTriple tree = graph_phi(NormalForm{}, Gen::x);
  CHECK(tree.out_label == Word{Gen::x});
  CHECK(tree.padded().encode().size() == 1);
}
