#include "fstack/automata.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <queue>
#include <utility>

#include "fstack/errors.hpp"

namespace fstack {

namespace {

constexpr std::uint32_t no_id = 0xffffffffu;

void require_same_alphabet(const Automaton& a, const Automaton& b) {
  if (a.alphabet != b.alphabet) {
    throw precondition_error("boolean operation on automata over different alphabets");
  }
}

void require_generators(const Automaton& a, const char* op) {
  if (a.alphabet != AlphabetKind::generators) {
    throw precondition_error(std::string(op) + " requires an automaton over the generator alphabet");
  }
}

/// Renumbers states in breadth-first discovery order from the initial state
/// (symbols scanned in code order) and drops unreachable states.
Automaton bfs_canonical(const Automaton& a) {
  const std::size_t sigma = alphabet_size(a.alphabet);
  std::vector<std::uint32_t> newid(a.num_states, no_id);
  std::vector<std::uint32_t> old_of;
  old_of.reserve(a.num_states);
  newid[a.initial] = 0;
  old_of.push_back(a.initial);
  for (std::size_t next = 0; next < old_of.size(); ++next) {
    const std::uint32_t q = old_of[next];
    for (std::size_t s = 0; s < sigma; ++s) {
      const std::uint32_t d = a.step(q, s);
      if (newid[d] == no_id) {
        newid[d] = static_cast<std::uint32_t>(old_of.size());
        old_of.push_back(d);
      }
    }
  }
  Automaton out;
  out.alphabet = a.alphabet;
  out.num_states = static_cast<std::uint32_t>(old_of.size());
  out.initial = 0;
  out.trans.resize(out.num_states * sigma);
  out.accepting.resize(out.num_states);
  for (std::uint32_t q = 0; q < out.num_states; ++q) {
    const std::uint32_t o = old_of[q];
    out.accepting[q] = a.accepting[o];
    for (std::size_t s = 0; s < sigma; ++s) {
      out.trans[q * sigma + s] = newid[a.step(o, s)];
    }
  }
  return out;
}

/// Product construction; accepting by conjunction or disjunction.
Automaton product(const Automaton& a, const Automaton& b, bool accept_union) {
  require_same_alphabet(a, b);
  const std::size_t sigma = alphabet_size(a.alphabet);
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> id_of;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  const std::pair<std::uint32_t, std::uint32_t> start{a.initial, b.initial};
  id_of.emplace(start, 0);
  pairs.push_back(start);
  Automaton out;
  out.alphabet = a.alphabet;
  out.initial = 0;
  for (std::size_t next = 0; next < pairs.size(); ++next) {
    const auto [qa, qb] = pairs[next];
    out.accepting.push_back(accept_union ? (a.accepting[qa] || b.accepting[qb])
                                         : (a.accepting[qa] && b.accepting[qb]));
    for (std::size_t s = 0; s < sigma; ++s) {
      const std::pair<std::uint32_t, std::uint32_t> d{a.step(qa, s), b.step(qb, s)};
      auto [it, fresh] = id_of.emplace(d, static_cast<std::uint32_t>(pairs.size()));
      if (fresh) pairs.push_back(d);
      out.trans.push_back(it->second);
    }
  }
  out.num_states = static_cast<std::uint32_t>(pairs.size());
  return minimize(out);
}

}  // namespace

std::string symbol_name(AlphabetKind kind, std::size_t symbol) {
  if (kind == AlphabetKind::generators) {
    return gen_name(static_cast<Gen>(symbol));
  }
  const std::size_t codes[3] = {symbol / 25, (symbol / 5) % 5, symbol % 5};
  std::string out;
  for (std::size_t j = 0; j < 3; ++j) {
    if (j != 0) out += ',';
    out += codes[j] == pad_code ? std::string("$") : gen_name(static_cast<Gen>(codes[j]));
  }
  return out;
}

std::uint32_t Automaton::run(const std::vector<std::size_t>& symbols, std::uint32_t from) const {
  std::uint32_t q = from;
  for (const std::size_t s : symbols) q = step(q, s);
  return q;
}

bool Automaton::accepts_symbols(const std::vector<std::size_t>& symbols) const {
  return accepting[run(symbols, initial)] != 0;
}

bool Automaton::accepts(const Word& w) const {
  require_generators(*this, "accepts(Word)");
  std::uint32_t q = initial;
  for (const Gen g : w) q = step(q, static_cast<std::size_t>(gen_index(g)));
  return accepting[q] != 0;
}

std::uint32_t Nfa::add_state(bool is_accepting) {
  const auto id = static_cast<std::uint32_t>(accepting.size());
  accepting.push_back(is_accepting ? 1 : 0);
  trans.emplace_back();
  eps.emplace_back();
  return id;
}

void Nfa::add_edge(std::uint32_t from, std::size_t symbol, std::uint32_t to) {
  trans[from].emplace_back(static_cast<std::uint32_t>(symbol), to);
}

void Nfa::add_eps(std::uint32_t from, std::uint32_t to) { eps[from].push_back(to); }

Automaton determinize(const Nfa& nfa) {
  const std::size_t sigma = alphabet_size(nfa.alphabet);
  const std::size_t n = nfa.num_states();

  std::vector<std::uint8_t> mark(n, 0);
  auto closure = [&](std::vector<std::uint32_t> work) {
    std::fill(mark.begin(), mark.end(), 0);
    for (const std::uint32_t u : work) mark[u] = 1;
    while (!work.empty()) {
      const std::uint32_t u = work.back();
      work.pop_back();
      for (const std::uint32_t v : nfa.eps[u]) {
        if (!mark[v]) {
          mark[v] = 1;
          work.push_back(v);
        }
      }
    }
    std::vector<std::uint32_t> out;
    for (std::uint32_t q = 0; q < n; ++q) {
      if (mark[q]) out.push_back(q);
    }
    return out;
  };

  std::map<std::vector<std::uint32_t>, std::uint32_t> id_of;
  std::vector<std::vector<std::uint32_t>> subsets;
  subsets.push_back(closure(nfa.initial));
  id_of.emplace(subsets.front(), 0);

  Automaton out;
  out.alphabet = nfa.alphabet;
  out.initial = 0;
  for (std::size_t next = 0; next < subsets.size(); ++next) {
    const std::vector<std::uint32_t> subset = subsets[next];
    bool acc = false;
    for (const std::uint32_t q : subset) acc = acc || nfa.accepting[q] != 0;
    out.accepting.push_back(acc ? 1 : 0);
    for (std::size_t s = 0; s < sigma; ++s) {
      std::vector<std::uint32_t> moved;
      for (const std::uint32_t q : subset) {
        for (const auto& [sym, dst] : nfa.trans[q]) {
          if (sym == s) moved.push_back(dst);
        }
      }
      std::vector<std::uint32_t> target = closure(std::move(moved));
      auto [it, fresh] = id_of.emplace(std::move(target), static_cast<std::uint32_t>(subsets.size()));
      if (fresh) subsets.push_back(it->first);
      out.trans.push_back(it->second);
    }
  }
  out.num_states = static_cast<std::uint32_t>(subsets.size());
  return out;
}

Automaton minimize(const Automaton& a) {
  if (a.num_states == 0) throw precondition_error("minimize requires at least one state");
  const Automaton r = bfs_canonical(a);
  const std::size_t sigma = alphabet_size(r.alphabet);
  const std::uint32_t n = r.num_states;

  // Moore refinement: start from the accepting/rejecting split and refine by
  // one-step behaviour until the class count is stable.
  std::vector<std::uint32_t> cls(n);
  std::size_t num_classes;
  {
    std::array<std::uint32_t, 2> seen{no_id, no_id};
    std::uint32_t fresh = 0;
    for (std::uint32_t q = 0; q < n; ++q) {
      const int bit = r.accepting[q] ? 1 : 0;
      if (seen[bit] == no_id) seen[bit] = fresh++;
      cls[q] = seen[bit];
    }
    num_classes = fresh;
  }
  for (;;) {
    std::map<std::vector<std::uint32_t>, std::uint32_t> sig_to_class;
    std::vector<std::uint32_t> next(n);
    for (std::uint32_t q = 0; q < n; ++q) {
      std::vector<std::uint32_t> sig;
      sig.reserve(sigma + 1);
      sig.push_back(cls[q]);
      for (std::size_t s = 0; s < sigma; ++s) sig.push_back(cls[r.step(q, s)]);
      auto [it, fresh] = sig_to_class.emplace(std::move(sig), static_cast<std::uint32_t>(sig_to_class.size()));
      next[q] = it->second;
    }
    const std::size_t count = sig_to_class.size();
    cls = std::move(next);
    if (count == num_classes) break;
    num_classes = count;
  }

  Automaton out;
  out.alphabet = r.alphabet;
  out.num_states = static_cast<std::uint32_t>(num_classes);
  out.initial = cls[r.initial];
  out.trans.assign(num_classes * sigma, 0);
  out.accepting.assign(num_classes, 0);
  std::vector<std::uint8_t> done(num_classes, 0);
  for (std::uint32_t q = 0; q < n; ++q) {
    const std::uint32_t c = cls[q];
    if (done[c]) continue;
    done[c] = 1;
    out.accepting[c] = r.accepting[q];
    for (std::size_t s = 0; s < sigma; ++s) out.trans[c * sigma + s] = cls[r.step(q, s)];
  }
  return bfs_canonical(out);
}

Automaton complement(const Automaton& a) {
  Automaton out = a;
  for (auto& bit : out.accepting) bit = bit ? 0 : 1;
  return minimize(out);
}

Automaton intersection(const Automaton& a, const Automaton& b) { return product(a, b, false); }

Automaton union_of(const Automaton& a, const Automaton& b) { return product(a, b, true); }

Automaton concatenation(const Automaton& a, const Automaton& b) {
  require_same_alphabet(a, b);
  const std::size_t sigma = alphabet_size(a.alphabet);
  Nfa nfa;
  nfa.alphabet = a.alphabet;
  for (std::uint32_t q = 0; q < a.num_states; ++q) nfa.add_state(false);
  for (std::uint32_t q = 0; q < b.num_states; ++q) nfa.add_state(b.accepting[q] != 0);
  const std::uint32_t offset = a.num_states;
  for (std::uint32_t q = 0; q < a.num_states; ++q) {
    for (std::size_t s = 0; s < sigma; ++s) nfa.add_edge(q, s, a.step(q, s));
    if (a.accepting[q]) nfa.add_eps(q, offset + b.initial);
  }
  for (std::uint32_t q = 0; q < b.num_states; ++q) {
    for (std::size_t s = 0; s < sigma; ++s) nfa.add_edge(offset + q, s, offset + b.step(q, s));
  }
  nfa.initial = {a.initial};
  return minimize(determinize(nfa));
}

Automaton quotient(const Automaton& l, const Word& z) {
  require_generators(l, "quotient");
  Automaton out = l;
  for (std::uint32_t q = 0; q < l.num_states; ++q) {
    std::uint32_t p = q;
    for (const Gen g : z) p = l.step(p, static_cast<std::size_t>(gen_index(g)));
    out.accepting[q] = l.accepting[p];
  }
  return minimize(out);
}

Automaton empty_automaton(AlphabetKind kind) {
  Automaton out;
  out.alphabet = kind;
  out.num_states = 1;
  out.initial = 0;
  out.trans.assign(alphabet_size(kind), 0);
  out.accepting.assign(1, 0);
  return out;
}

Automaton universal_automaton(AlphabetKind kind) {
  Automaton out = empty_automaton(kind);
  out.accepting[0] = 1;
  return out;
}

Automaton singleton_automaton(const Word& u) {
  const std::size_t sigma = alphabet_size(AlphabetKind::generators);
  const auto n = static_cast<std::uint32_t>(u.size());
  Automaton out;
  out.alphabet = AlphabetKind::generators;
  out.num_states = n + 2;  // chain plus dead state
  out.initial = 0;
  const std::uint32_t dead = n + 1;
  out.trans.assign(out.num_states * sigma, dead);
  out.accepting.assign(out.num_states, 0);
  out.accepting[n] = 1;
  for (std::uint32_t p = 0; p < n; ++p) {
    out.trans[p * sigma + static_cast<std::size_t>(gen_index(u[p]))] = p + 1;
  }
  return minimize(out);
}

Automaton suffix_automaton(const Word& u) {
  const std::size_t sigma = alphabet_size(AlphabetKind::generators);
  Nfa nfa;
  nfa.alphabet = AlphabetKind::generators;
  const std::uint32_t loop = nfa.add_state(u.empty());
  for (std::size_t s = 0; s < sigma; ++s) nfa.add_edge(loop, s, loop);
  std::uint32_t prev = loop;
  for (std::size_t p = 0; p < u.size(); ++p) {
    const std::uint32_t next = nfa.add_state(p + 1 == u.size());
    nfa.add_edge(prev, static_cast<std::size_t>(gen_index(u[p])), next);
    prev = next;
  }
  nfa.initial = {loop};
  return minimize(determinize(nfa));
}

Automaton y_then_x_tail_automaton(int k) {
  if (k < 1) throw precondition_error("y_then_x_tail_automaton requires k >= 1");
  const std::size_t sigma = alphabet_size(AlphabetKind::generators);
  Nfa nfa;
  nfa.alphabet = AlphabetKind::generators;
  const std::uint32_t start = nfa.add_state(false);
  const std::uint32_t after_y = nfa.add_state(false);
  for (std::size_t s = 0; s < sigma; ++s) {
    nfa.add_edge(start, s, start);
    nfa.add_edge(after_y, s, after_y);
  }
  nfa.add_edge(start, static_cast<std::size_t>(gen_index(Gen::y)), after_y);
  nfa.add_edge(start, static_cast<std::size_t>(gen_index(Gen::Y)), after_y);
  std::uint32_t prev = after_y;
  for (int p = 0; p < k; ++p) {
    const std::uint32_t next = nfa.add_state(p + 1 == k);
    nfa.add_edge(prev, static_cast<std::size_t>(gen_index(Gen::x)), next);
    prev = next;
  }
  nfa.initial = {start};
  return minimize(determinize(nfa));
}

const Automaton& nf_automaton() {
  static const Automaton cached = [] {
    // NFA for A* · F · A*, where F holds the forbidden factors: the four
    // cancelling pairs a a^-1, and the families y^e x x* y and
    // y^e x^2 x* y^-1. The normal-form language is its complement.
    const std::size_t sigma = alphabet_size(AlphabetKind::generators);
    Nfa nfa;
    nfa.alphabet = AlphabetKind::generators;
    const std::uint32_t start = nfa.add_state(false);
    const std::uint32_t bad = nfa.add_state(true);
    for (std::size_t s = 0; s < sigma; ++s) {
      nfa.add_edge(start, s, start);
      nfa.add_edge(bad, s, bad);
    }
    for (std::size_t s = 0; s < sigma; ++s) {
      const std::uint32_t mid = nfa.add_state(false);
      nfa.add_edge(start, s, mid);
      nfa.add_edge(mid, static_cast<std::size_t>(gen_index(inv(static_cast<Gen>(s)))), bad);
    }
    const std::uint32_t after_y = nfa.add_state(false);   // read y or y^-1
    const std::uint32_t one_x = nfa.add_state(false);     // then exactly one x so far
    const std::uint32_t many_x = nfa.add_state(false);    // then two or more x
    nfa.add_edge(start, static_cast<std::size_t>(gen_index(Gen::y)), after_y);
    nfa.add_edge(start, static_cast<std::size_t>(gen_index(Gen::Y)), after_y);
    nfa.add_edge(after_y, static_cast<std::size_t>(gen_index(Gen::x)), one_x);
    nfa.add_edge(one_x, static_cast<std::size_t>(gen_index(Gen::x)), many_x);
    nfa.add_edge(many_x, static_cast<std::size_t>(gen_index(Gen::x)), many_x);
    nfa.add_edge(one_x, static_cast<std::size_t>(gen_index(Gen::y)), bad);
    nfa.add_edge(many_x, static_cast<std::size_t>(gen_index(Gen::y)), bad);
    nfa.add_edge(many_x, static_cast<std::size_t>(gen_index(Gen::Y)), bad);
    nfa.initial = {start};
    return complement(determinize(nfa));
  }();
  return cached;
}

std::vector<std::size_t> PaddedTriple::encode() const {
  const std::size_t n = std::max({first.size(), second.size(), third.size()});
  std::vector<std::size_t> out;
  out.reserve(n);
  for (std::size_t p = 0; p < n; ++p) {
    const std::size_t a = p < first.size() ? static_cast<std::size_t>(gen_index(first[p])) : pad_code;
    const std::size_t b = p < second.size() ? static_cast<std::size_t>(gen_index(second[p])) : pad_code;
    const std::size_t c = p < third.size() ? static_cast<std::size_t>(gen_index(third[p])) : pad_code;
    out.push_back(padded_symbol(a, b, c));
  }
  return out;
}

Automaton padded_product(const PaddedComponent& l1, const PaddedComponent& l2,
                         const PaddedComponent& l3) {
  const std::array<const Automaton*, 3> comp{&l1.dfa, &l2.dfa, &l3.dfa};
  for (const Automaton* c : comp) require_generators(*c, "padded_product");

  // Component state encoding: 0..n-1 run the component automaton; n means the
  // component word has ended (padding seen after an accepted word); n+1 is dead.
  auto comp_step = [](const Automaton& dfa, std::uint32_t cs, std::size_t code) {
    const std::uint32_t done = dfa.num_states;
    const std::uint32_t dead = dfa.num_states + 1;
    if (cs == dead) return dead;
    if (cs == done) return code == pad_code ? done : dead;
    if (code == pad_code) return dfa.accepting[cs] ? done : dead;
    return dfa.step(cs, code);
  };
  auto comp_ok = [](const Automaton& dfa, std::uint32_t cs) {
    return cs == dfa.num_states || (cs < dfa.num_states && dfa.accepting[cs] != 0);
  };

  using Tuple = std::array<std::uint32_t, 3>;
  const Tuple all_dead{comp[0]->num_states + 1, comp[1]->num_states + 1, comp[2]->num_states + 1};
  std::map<Tuple, std::uint32_t> id_of;
  std::vector<Tuple> tuples;
  const Tuple start{comp[0]->initial, comp[1]->initial, comp[2]->initial};
  id_of.emplace(start, 0);
  tuples.push_back(start);

  Automaton out;
  out.alphabet = AlphabetKind::padded_triples;
  out.initial = 0;
  const std::size_t sigma = alphabet_size(AlphabetKind::padded_triples);
  for (std::size_t next = 0; next < tuples.size(); ++next) {
    const Tuple t = tuples[next];
    out.accepting.push_back(comp_ok(*comp[0], t[0]) && comp_ok(*comp[1], t[1]) &&
                                    comp_ok(*comp[2], t[2])
                                ? 1
                                : 0);
    for (std::size_t s = 0; s < sigma; ++s) {
      const std::size_t codes[3] = {s / 25, (s / 5) % 5, s % 5};
      Tuple d;
      if (codes[0] == pad_code && codes[1] == pad_code && codes[2] == pad_code) {
        d = all_dead;  // a padded word never contains the all-$ symbol
      } else {
        for (std::size_t j = 0; j < 3; ++j) d[j] = comp_step(*comp[j], t[j], codes[j]);
      }
      auto [it, fresh] = id_of.emplace(d, static_cast<std::uint32_t>(tuples.size()));
      if (fresh) tuples.push_back(d);
      out.trans.push_back(it->second);
    }
  }
  out.num_states = static_cast<std::uint32_t>(tuples.size());
  return minimize(out);
}

namespace {

/// Flow label of an edge whose source ends with y^eps x^i, for the small
/// values of i where the label depends on the trailing shape: the y-edge
/// label for b = +1 (i in {1, 2}) and the y^-1-edge label for b = -1
/// (i in {2, 3}).
Word short_flow_label(int b, int eps, int i) {
  const Int ii = i;
  const Int outer = b == 1 ? Int(ii + 1) : Int(ii - 1);
  const RunWord runs{{'x', -ii},    {'y', Int(-eps)}, {'x', ii},   {'y', Int(b)},
                     {'x', -outer}, {'y', Int(eps)},  {'x', outer}};
  return runs_to_word(runs);
}

}  // namespace

const Automaton& graph_phi_automaton() {
  static const Automaton cached = [] {
    const Automaton& nf = nf_automaton();
    Automaton acc = empty_automaton(AlphabetKind::padded_triples);
    auto add = [&acc](Automaton term) { acc = union_of(acc, std::move(term)); };

    // Tree edges: sources where appending the letter stays normal, or whose
    // last letter is the inverse of the edge letter; the label echoes the letter.
    for (const Gen a : {Gen::x, Gen::X, Gen::y, Gen::Y}) {
      const Word letter{a};
      const Automaton source =
          union_of(quotient(nf, letter), intersection(nf, suffix_automaton(Word{inv(a)})));
      add(padded_product(source, letter, letter));
    }
    // Short-tail y-edges: source ends y^eps x^i with i in {1, 2}.
    for (const int eps : {+1, -1}) {
      for (const int i : {1, 2}) {
        const Word tail = runs_to_word({{'y', Int(eps)}, {'x', Int(i)}});
        const Automaton source = intersection(nf, suffix_automaton(tail));
        add(padded_product(source, Word{Gen::y}, short_flow_label(+1, eps, i)));
      }
    }
    // Short-tail y^-1-edges: source ends y^eps x^i with i in {2, 3}.
    for (const int eps : {+1, -1}) {
      for (const int i : {2, 3}) {
        const Word tail = runs_to_word({{'y', Int(eps)}, {'x', Int(i)}});
        const Automaton source = intersection(nf, suffix_automaton(tail));
        add(padded_product(source, Word{Gen::Y}, short_flow_label(-1, eps, i)));
      }
    }
    // Long-tail edges: at least three (resp. four) trailing x's after a
    // y-letter; the label is a fixed nine-letter word.
    add(padded_product(intersection(nf, y_then_x_tail_automaton(3)), Word{Gen::y},
                       parse_word("x^-1y^-1xyx^-2yx^2")));
    add(padded_product(intersection(nf, y_then_x_tail_automaton(4)), Word{Gen::Y},
                       parse_word("x^-2y^-1x^2y^-1x^-1yx")));
    return acc;
  }();
  return cached;
}

std::string export_table(const Automaton& a) {
  const std::size_t sigma = alphabet_size(a.alphabet);
  std::string out = "alphabet";
  for (std::size_t s = 0; s < sigma; ++s) {
    out += '\t';
    out += symbol_name(a.alphabet, s);
  }
  out += "\ninitial\t";
  out += std::to_string(a.initial);
  out += "\naccepting";
  for (std::uint32_t q = 0; q < a.num_states; ++q) {
    if (a.accepting[q]) {
      out += '\t';
      out += std::to_string(q);
    }
  }
  out += '\n';
  for (std::uint32_t q = 0; q < a.num_states; ++q) {
    for (std::size_t s = 0; s < sigma; ++s) {
      out += std::to_string(q);
      out += '\t';
      out += symbol_name(a.alphabet, s);
      out += '\t';
      out += std::to_string(a.step(q, s));
      out += '\n';
    }
  }
  return out;
}

}  // namespace fstack
