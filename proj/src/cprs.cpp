#include "fstack/cprs.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "fstack/config.hpp"
#include "fstack/errors.hpp"
#include "fstack/flow.hpp"

namespace fstack {

namespace {

std::string sign_pair(int eps, int i) {
  std::ostringstream out;
  out << '(' << (eps > 0 ? "+1" : "-1") << ',' << i << ')';
  return out.str();
}

Word y_x_tail(int eps, int i) {
  return runs_to_word({{'y', Int(eps)}, {'x', Int(i)}});
}

std::vector<PrefixRule> build_rules() {
  std::vector<PrefixRule> out;
  const auto universal = std::make_shared<const Automaton>(universal_automaton(AlphabetKind::generators));
  for (const Gen a : {Gen::x, Gen::X, Gen::y, Gen::Y}) {
    out.push_back(PrefixRule{"free-" + gen_name(a), 1, universal, Word{a, inv(a)}, Word{}});
  }
  for (const int eps : {+1, -1}) {
    for (const int i : {1, 2}) {
      auto guard = std::make_shared<const Automaton>(quotient(nf_automaton(), y_x_tail(eps, i)));
      Word lhs = runs_to_word({{'y', Int(eps)}, {'x', Int(i)}, {'y', Int(1)}});
      Word rhs = runs_to_word(
          {{'x', Int(i)}, {'y', Int(1)}, {'x', Int(-i - 1)}, {'y', Int(eps)}, {'x', Int(i + 1)}});
      out.push_back(PrefixRule{"y-rule" + sign_pair(eps, i), 2, std::move(guard), std::move(lhs),
                               std::move(rhs)});
    }
  }
  for (const int eps : {+1, -1}) {
    for (const int i : {2, 3}) {
      auto guard = std::make_shared<const Automaton>(quotient(nf_automaton(), y_x_tail(eps, i)));
      Word lhs = runs_to_word({{'y', Int(eps)}, {'x', Int(i)}, {'y', Int(-1)}});
      Word rhs = runs_to_word(
          {{'x', Int(i)}, {'y', Int(-1)}, {'x', Int(-i + 1)}, {'y', Int(eps)}, {'x', Int(i - 1)}});
      out.push_back(PrefixRule{"y^-1-rule" + sign_pair(eps, i), 3, std::move(guard),
                               std::move(lhs), std::move(rhs)});
    }
  }
  const auto heavy_tail = std::make_shared<const Automaton>(
      intersection(nf_automaton(), y_then_x_tail_automaton(2)));
  out.push_back(PrefixRule{"xy-rule", 4, heavy_tail, parse_word("xy"),
                           parse_word("y^-1xyx^-2yx^2")});
  out.push_back(PrefixRule{"x^2y^-1-rule", 5, heavy_tail, parse_word("x^2y^-1"),
                           parse_word("y^-1x^2y^-1x^-1yx")});
  return out;
}

}  // namespace

const std::vector<PrefixRule>& rules() {
  static const std::vector<PrefixRule> fixed = build_rules();
  return fixed;
}

std::optional<RewriteStep> rewrite_once(const Word& w) {
  const std::vector<PrefixRule>& rs = rules();

  // The fourteen rules share only a handful of distinct guard automata; run
  // each distinct guard once over w so that membership of every prefix is a
  // single table lookup afterwards.
  static const std::vector<const Automaton*> guards = [] {
    std::vector<const Automaton*> out;
    for (const PrefixRule& r : rules()) {
      if (std::find(out.begin(), out.end(), r.guard.get()) == out.end()) {
        out.push_back(r.guard.get());
      }
    }
    return out;
  }();
  static const std::vector<std::size_t> slot_of_rule = [] {
    std::vector<std::size_t> out;
    for (const PrefixRule& r : rules()) {
      out.push_back(static_cast<std::size_t>(
          std::find(guards.begin(), guards.end(), r.guard.get()) - guards.begin()));
    }
    return out;
  }();

  const std::size_t len = w.size();
  thread_local std::vector<std::uint32_t> states;
  states.assign(guards.size() * (len + 1), 0);
  for (std::size_t gi = 0; gi < guards.size(); ++gi) {
    const Automaton& g = *guards[gi];
    std::uint32_t q = g.initial;
    states[gi * (len + 1)] = q;
    for (std::size_t p = 0; p < len; ++p) {
      q = g.step(q, static_cast<std::size_t>(gen_index(w[p])));
      states[gi * (len + 1) + p + 1] = q;
    }
  }

  for (std::size_t p = 0; p < len; ++p) {
    for (std::size_t ri = 0; ri < rs.size(); ++ri) {
      const PrefixRule& rule = rs[ri];
      const Word& lhs = rule.lhs_suffix;
      if (p + lhs.size() > len) continue;
      if (!std::equal(lhs.begin(), lhs.end(),
                      w.begin() + static_cast<std::ptrdiff_t>(p))) {
        continue;
      }
      const std::uint32_t q = states[slot_of_rule[ri] * (len + 1) + p];
      if (!guards[slot_of_rule[ri]]->accepting[q]) continue;
      Word result;
      result.reserve(len - lhs.size() + rule.rhs_suffix.size());
      result.insert(result.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
      result.insert(result.end(), rule.rhs_suffix.begin(), rule.rhs_suffix.end());
      result.insert(result.end(), w.begin() + static_cast<std::ptrdiff_t>(p + lhs.size()),
                    w.end());
      return RewriteStep{std::move(result), rule.id, p};
    }
  }
  return std::nullopt;
}

RewriteResult rewrite_to_irreducible(const Word& w) {
  Word current = w;
  std::size_t steps = 0;
  const std::size_t budget = config::max_rewrite_steps();
  while (auto step = rewrite_once(current)) {
    current = std::move(step->result);
    if (++steps > budget) {
      std::ostringstream msg;
      msg << "rewriting exceeded the step budget of " << budget;
      throw resource_limit_error(msg.str());
    }
  }
  return RewriteResult{std::move(current), steps};
}

PaddedTriple GraphPhiTriple::padded() const {
  return PaddedTriple{gamma.to_word(), Word{a}, out_label};
}

GraphPhiTriple graph_phi(const NormalForm& gamma, Gen a) {
  return GraphPhiTriple{gamma, a, phi(Edge{gamma, a}).label};
}

}  // namespace fstack
