#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "fstack/word.hpp"

namespace fstack {

/// Alphabets used by the automata in this project.
///
/// `generators` is the four-letter alphabet A = {x, x^-1, y, y^-1},
/// with symbol codes given by gen_index. `padded_triples` is the
/// synchronous-product alphabet B = (A ∪ {$})^3 used to accept padded
/// encodings of word triples; each component code is a generator index
/// (0..3) or pad_code, and a triple (a, b, c) is flattened to
/// (a*5 + b)*5 + c, giving 125 symbols.
enum class AlphabetKind { generators, padded_triples };

/// Component code for the padding symbol '$' in the padded alphabet.
inline constexpr std::size_t pad_code = 4;

/// Number of symbols in the given alphabet (4 or 125).
constexpr std::size_t alphabet_size(AlphabetKind kind) {
  return kind == AlphabetKind::generators ? 4 : 125;
}

/// Flattened symbol code of a component-code triple over A ∪ {$}.
constexpr std::size_t padded_symbol(std::size_t a, std::size_t b, std::size_t c) {
  return (a * 5 + b) * 5 + c;
}

/// Printable name of a symbol: "x", "x^-1", "y", "y^-1" for the generator
/// alphabet, comma-joined component names such as "y,$,x" for the padded
/// alphabet ('$' denotes padding).
std::string symbol_name(AlphabetKind kind, std::size_t symbol);

/// A complete deterministic finite automaton.
///
/// Transitions are total: `trans` holds num_states * alphabet_size(alphabet)
/// entries, with the successor of state q on symbol s at q*sigma + s. All
/// construction functions in this module return automata in a canonical form
/// (minimal, states numbered in breadth-first order from the initial state),
/// so two such automata accept the same language iff they compare equal.
struct Automaton {
  AlphabetKind alphabet = AlphabetKind::generators;
  std::uint32_t num_states = 0;
  std::uint32_t initial = 0;
  std::vector<std::uint32_t> trans;
  std::vector<std::uint8_t> accepting;

  /// Successor state of `state` on symbol code `symbol`.
  std::uint32_t step(std::uint32_t state, std::size_t symbol) const {
    return trans[state * alphabet_size(alphabet) + symbol];
  }

  /// State reached from `from` by reading the symbol sequence.
  std::uint32_t run(const std::vector<std::size_t>& symbols, std::uint32_t from) const;

  /// Whether the symbol sequence is accepted.
  bool accepts_symbols(const std::vector<std::size_t>& symbols) const;

  /// Whether the word is accepted.
  /// pre: alphabet == generators (throws precondition_error otherwise).
  bool accepts(const Word& w) const;

  friend bool operator==(const Automaton&, const Automaton&) = default;
};

/// A nondeterministic finite automaton with epsilon moves, used as an
/// intermediate representation for language constructions.
struct Nfa {
  AlphabetKind alphabet = AlphabetKind::generators;
  std::vector<std::uint32_t> initial;
  std::vector<std::uint8_t> accepting;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> trans;
  std::vector<std::vector<std::uint32_t>> eps;

  std::uint32_t add_state(bool is_accepting = false);
  void add_edge(std::uint32_t from, std::size_t symbol, std::uint32_t to);
  void add_eps(std::uint32_t from, std::uint32_t to);
  std::size_t num_states() const { return accepting.size(); }
};

/// Subset construction. The result is complete and deterministic but not
/// minimized; state numbering is breadth-first from the initial subset.
Automaton determinize(const Nfa& nfa);

/// Minimal automaton for the same language, states renumbered breadth-first
/// from the initial state. Idempotent: minimize(minimize(a)) == minimize(a).
Automaton minimize(const Automaton& a);

/// Automaton for the complement language A* \ L (or B* \ L).
Automaton complement(const Automaton& a);

/// Automaton for the intersection of the two languages.
/// pre: same alphabet (throws precondition_error otherwise).
Automaton intersection(const Automaton& a, const Automaton& b);

/// Automaton for the union of the two languages.
/// pre: same alphabet (throws precondition_error otherwise).
Automaton union_of(const Automaton& a, const Automaton& b);

/// Automaton for the concatenation L(a)·L(b).
/// pre: same alphabet (throws precondition_error otherwise).
Automaton concatenation(const Automaton& a, const Automaton& b);

/// Right quotient by a fixed word: accepts {w | wz ∈ L}.
/// pre: alphabet == generators (throws precondition_error otherwise).
Automaton quotient(const Automaton& l, const Word& z);

/// Automaton accepting no words.
Automaton empty_automaton(AlphabetKind kind);

/// Automaton accepting every word over the alphabet.
Automaton universal_automaton(AlphabetKind kind);

/// Automaton accepting exactly {u} over the generator alphabet.
Automaton singleton_automaton(const Word& u);

/// Automaton for A*·u — all words ending with the factor u.
Automaton suffix_automaton(const Word& u);

/// Automaton for A*·y^{±1}·A*·x^k — words containing a y-letter and ending
/// with at least k plain x's after it.
/// pre: k >= 1 (throws precondition_error otherwise).
Automaton y_then_x_tail_automaton(int k);

/// The word acceptor: a DFA over A accepting exactly the normal-form
/// language N, built as the complement of A*·F·A* where F consists of the
/// free-reduction factors together with the factor families y^e x x* y and
/// y^e x^2 x* y^-1. The result is minimal and cached after first use.
const Automaton& nf_automaton();

/// A triple of words over A padded with '$' to common length.
struct PaddedTriple {
  Word first;
  Word second;
  Word third;

  /// Flattened symbol codes of the padded encoding; its length is the
  /// maximum component length.
  std::vector<std::size_t> encode() const;

  friend bool operator==(const PaddedTriple&, const PaddedTriple&) = default;
};

/// One component of a padded product: either an arbitrary regular language
/// or a singleton word (converted via singleton_automaton).
struct PaddedComponent {
  Automaton dfa;
  PaddedComponent(Automaton a) : dfa(std::move(a)) {}
  PaddedComponent(const Word& w) : dfa(singleton_automaton(w)) {}
};

/// Synchronous product: the DFA over B accepting exactly the padded
/// encodings of triples (w1, w2, w3) with wi in the i-th component language.
Automaton padded_product(const PaddedComponent& l1, const PaddedComponent& l2,
                         const PaddedComponent& l3);

/// The DFA over B accepting exactly the padded triples (γ, a, label) that
/// occur as (source, edge letter, flow image label) in the Cayley graph:
/// a union of fourteen padded products — for each letter a, a tree-edge term
/// over the quotient and suffix languages with output a; for each trailing
/// shape y^e x^i with small i, a term with the corresponding short flow
/// label; and the two heavy-tail terms with constant nine-letter labels.
/// The result is minimal and cached after first use.
const Automaton& graph_phi_automaton();

/// Serialize an automaton as a TSV table: an `alphabet` row listing symbol
/// names, an `initial` row, an `accepting` row listing accepting states,
/// then one `src  symbol  dst` row per transition.
std::string export_table(const Automaton& a);

}  // namespace fstack
