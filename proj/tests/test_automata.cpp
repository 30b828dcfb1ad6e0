#include <doctest.h>

#include <cstdint>
#include <string>
#include <vector>

#include "fstack/automata.hpp"
#include "fstack/errors.hpp"
#include "fstack/flow.hpp"
#include "fstack/normal_form.hpp"
#include "fstack/ordering.hpp"
#include "fstack/word.hpp"

using namespace fstack;

namespace {

// Number of accepted symbol strings of exactly length n, via a path-count DP.
// Together with acceptance spot checks this pins the exact language of small
// product automata.
std::uint64_t count_accepted(const Automaton& a, std::size_t n) {
  const std::size_t sigma = alphabet_size(a.alphabet);
  std::vector<std::uint64_t> cur(a.num_states, 0);
  cur[a.initial] = 1;
  for (std::size_t step = 0; step < n; ++step) {
    std::vector<std::uint64_t> nxt(a.num_states, 0);
    for (std::uint32_t q = 0; q < a.num_states; ++q) {
      if (cur[q] == 0) continue;
      for (std::size_t s = 0; s < sigma; ++s) nxt[a.step(q, s)] += cur[q];
    }
    cur = std::move(nxt);
  }
  std::uint64_t total = 0;
  for (std::uint32_t q = 0; q < a.num_states; ++q)
    if (a.accepting[q]) total += cur[q];
  return total;
}

void check_all_words(const Automaton& a, std::size_t max_len,
                     bool (*pred)(const Word&)) {
  const Gen gens[4] = {Gen::x, Gen::X, Gen::y, Gen::Y};
  Word w;
  const auto rec = [&](auto&& self, std::size_t depth) -> void {
    CHECK(a.accepts(w) == pred(w));
    if (depth == max_len) return;
    for (const Gen g : gens) {
      w.push_back(g);
      self(self, depth + 1);
      w.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace

TEST_CASE("alphabet bookkeeping") {
  CHECK(alphabet_size(AlphabetKind::generators) == 4);
  CHECK(alphabet_size(AlphabetKind::padded_triples) == 125);
  CHECK(padded_symbol(pad_code, pad_code, pad_code) == 124);
  CHECK(symbol_name(AlphabetKind::generators, gen_index(Gen::X)) == "x^-1");
  CHECK(symbol_name(AlphabetKind::padded_triples, padded_symbol(2, 4, 0)) == "y,$,x");
}

TEST_CASE("basic language constructions") {
  const Automaton none = empty_automaton(AlphabetKind::generators);
  const Automaton all = universal_automaton(AlphabetKind::generators);
  CHECK(!none.accepts(Word{}));
  CHECK(all.accepts(Word{}));
  CHECK(all.accepts(parse_word("xyx")));
  CHECK(complement(all) == none);
  CHECK(complement(complement(nf_automaton())) == nf_automaton());
  CHECK(union_of(none, all) == all);
  CHECK(intersection(none, all) == none);

  const Automaton only = singleton_automaton(parse_word("xy"));
  CHECK(only.accepts(parse_word("xy")));
  CHECK(!only.accepts(parse_word("x")));
  CHECK(!only.accepts(parse_word("xyx")));
  CHECK(count_accepted(only, 2) == 1);
  CHECK(count_accepted(only, 1) == 0);

  const Automaton cat = concatenation(only, singleton_automaton(parse_word("x")));
  CHECK(cat == singleton_automaton(parse_word("xyx")));
}

TEST_CASE("canonical form makes equality a language test") {
  const Automaton a = nf_automaton();
  CHECK(minimize(a) == a);
  // the same language from a different pipeline: not-not-N
  const Automaton b = minimize(complement(complement(a)));
  CHECK(b == a);
  // a different language compares different
  CHECK(!(a == universal_automaton(AlphabetKind::generators)));
}

TEST_CASE("the word acceptor accepts exactly the normal forms") {
  const Automaton& a = nf_automaton();
  CHECK(a.num_states == 8);
  check_all_words(a, 6, &is_normal_form);
  CHECK(a.accepts(parse_word("x^2y^-1xy^-1x^-2yx^4")));
  CHECK(!a.accepts(parse_word("yx^5y")));
}

TEST_CASE("suffix, quotient and tail languages") {
  const Automaton sfx = suffix_automaton(parse_word("yx"));
  CHECK(sfx.accepts(parse_word("yx")));
  CHECK(sfx.accepts(parse_word("x^3yx")));
  CHECK(!sfx.accepts(parse_word("xy")));
  CHECK(!sfx.accepts(Word{}));

  // {w | w yx in N}: plain x is fine, yx is not (yxyx has a y-rule factor)
  const Automaton q = quotient(nf_automaton(), parse_word("yx"));
  CHECK(q.accepts(parse_word("x")));
  CHECK(q.accepts(parse_word("y")));
  CHECK(q.accepts(Word{}));
  CHECK(!q.accepts(parse_word("yx")));
  CHECK(!q.accepts(parse_word("xX")));

  const Automaton tail = y_then_x_tail_automaton(2);
  CHECK(tail.accepts(parse_word("yx^2")));
  CHECK(tail.accepts(parse_word("xy^-1x^5")));
  CHECK(tail.accepts(parse_word("yxyx^2")));
  CHECK(!tail.accepts(parse_word("x^2")));
  CHECK(!tail.accepts(parse_word("yx")));
  CHECK(!tail.accepts(parse_word("y")));
  CHECK_THROWS_AS((void)y_then_x_tail_automaton(0), precondition_error);
}

TEST_CASE("padded triples flatten as documented") {
  const PaddedTriple t{parse_word("xy"), parse_word("y"), Word{}};
  const std::vector<std::size_t> codes = t.encode();
  REQUIRE(codes.size() == 2);
  // (x, y, $) = (0*5 + 2)*5 + 4 = 14; (y, $, $) = (2*5 + 4)*5 + 4 = 74
  CHECK(codes[0] == 14);
  CHECK(codes[1] == 74);
  CHECK(PaddedTriple{}.encode().empty());
}

TEST_CASE("the synchronous product accepts exactly the padded encodings") {
  const Word u = parse_word("yx");
  const Word v = parse_word("y");
  const Word z = parse_word("x^-1y^-1xyx^-2yx^2");
  const Automaton prod = padded_product(u, v, z);
  CHECK(prod.accepts_symbols(PaddedTriple{u, v, z}.encode()));
  CHECK(!prod.accepts_symbols(PaddedTriple{u, v, parse_word("x")}.encode()));
  CHECK(!prod.accepts_symbols(PaddedTriple{v, u, z}.encode()));
  // exactly one string of length |z| = 9 and nothing else
  CHECK(count_accepted(prod, 9) == 1);
  for (std::size_t n = 0; n <= 8; ++n) CHECK(count_accepted(prod, n) == 0);

  // components may be whole languages
  const Automaton many =
      padded_product(nf_automaton(), v, universal_automaton(AlphabetKind::generators));
  CHECK(many.accepts_symbols(PaddedTriple{u, v, z}.encode()));
  CHECK(many.accepts_symbols(PaddedTriple{Word{}, v, Word{}}.encode()));
  CHECK(!many.accepts_symbols(PaddedTriple{parse_word("yxy"), v, z}.encode()));
}

TEST_CASE("the graph automaton accepts the flow triples") {
  const Automaton& a = graph_phi_automaton();
  CHECK(a.num_states == 559);
  CHECK(a.alphabet == AlphabetKind::padded_triples);
  CHECK(minimize(a) == a);
  const Gen gens[4] = {Gen::x, Gen::X, Gen::y, Gen::Y};
  // exhaustive over all sources with |gamma| <= 4
  Word w;
  const auto rec = [&](auto&& self, std::size_t depth) -> void {
    if (is_normal_form(w)) {
      const NormalForm gamma = normal_form_from_word(w);
      for (const Gen g : gens) {
        const DirectedPath img = phi(Edge{gamma, g});
        CHECK(a.accepts_symbols(
            PaddedTriple{w, Word{g}, img.label}.encode()));
      }
    }
    if (depth == 4) return;
    for (const Gen g : gens) {
      w.push_back(g);
      self(self, depth + 1);
      w.pop_back();
    }
  };
  rec(rec, 0);

  // wrong image label, non-normal source, and wrong-size middle all rejected
  CHECK(!a.accepts_symbols(
      PaddedTriple{parse_word("yx"), Word{Gen::y}, parse_word("x")}.encode()));
  CHECK(!a.accepts_symbols(
      PaddedTriple{parse_word("yxy"), Word{Gen::y},
                   parse_word("x^-1y^-1xyx^-2yx^2")}.encode()));
  CHECK(!a.accepts_symbols(
      PaddedTriple{parse_word("yx"), parse_word("yy"),
                   parse_word("x^-1y^-1xyx^-2yx^2")}.encode()));
}

TEST_CASE("table export round-trips the structure") {
  const Automaton a = singleton_automaton(parse_word("x"));
  const std::string table = export_table(a);
  CHECK(table.find("alphabet\tx\tx^-1\ty\ty^-1\n") != std::string::npos);
  CHECK(table.find("initial\t0\n") != std::string::npos);
  CHECK(table.find("accepting\t") != std::string::npos);
  // one transition row per (state, symbol)
  std::size_t rows = 0;
  for (const char c : table)
    if (c == '\n') ++rows;
  CHECK(rows == 3 + std::size_t{a.num_states} * 4);
}
