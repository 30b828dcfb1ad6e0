#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fstack/automata.hpp"
#include "fstack/normal_form.hpp"
#include "fstack/word.hpp"

namespace fstack {

/// One prefix-rewriting rule u·lhs_suffix → u·rhs_suffix, applicable at a
/// factorization w = u·lhs_suffix·z whenever the prefix u lies in the guard
/// language. Suffix lengths are bounded: |lhs_suffix| <= 5, |rhs_suffix| <= 10.
struct PrefixRule {
  std::string id;
  int family;  // 1 free reduction, 2 y-rules, 3 y^-1-rules, 4 xy-rule, 5 x^2y^-1-rule
  std::shared_ptr<const Automaton> guard;
  Word lhs_suffix;
  Word rhs_suffix;
};

/// The fixed fourteen-rule system, in the order tried by the rewrite
/// strategy:
///   1. four unguarded cancellations u a a^-1 → u, for a = x, x^-1, y, y^-1;
///   2. u y^e x^i y → u x^i y x^{-i-1} y^e x^{i+1} for i in {1, 2}, guarded
///      by u y^e x^i ∈ N;
///   3. u y^e x^i y^-1 → u x^i y^-1 x^{-i+1} y^e x^{i-1} for i in {2, 3},
///      with the same guard shape;
///   4. u x y → u y^-1 x y x^-2 y x^2, guarded by u ∈ N ∩ A*y^{±1}A*x^2;
///   5. u x^2 y^-1 → u y^-1 x^2 y^-1 x^-1 y x, with the same guard.
const std::vector<PrefixRule>& rules();

/// The outcome of one rewriting step: the rewritten word, the identifier of
/// the rule that fired, and the length of the guarded prefix u.
struct RewriteStep {
  Word result;
  std::string rule_id;
  std::size_t split;
};

/// Applies the first applicable rule, scanning split positions left to right
/// and rules in their fixed order at each position. Returns absent iff w is
/// irreducible; the irreducible words are exactly the normal forms.
std::optional<RewriteStep> rewrite_once(const Word& w);

/// An irreducible word together with the number of steps taken to reach it.
struct RewriteResult {
  Word word;
  std::size_t steps;
};

/// Applies rewrite_once to a fixpoint. Throws resource_limit_error if the
/// step budget (config::max_rewrite_steps) is exceeded.
RewriteResult rewrite_to_irreducible(const Word& w);

/// A vertex-letter-label triple of the flow graph: out_label is the label of
/// the flow image of the edge at gamma with the given letter (so
/// |out_label| <= 13, and tree edges echo their letter).
struct GraphPhiTriple {
  NormalForm gamma;
  Gen a;
  Word out_label;

  /// The triple as a padded word, for the synchronous-automaton route.
  PaddedTriple padded() const;
};

/// The flow-graph triple at (gamma, a), computed directly from the flow
/// function; the automata module decides the same membership independently.
GraphPhiTriple graph_phi(const NormalForm& gamma, Gen a);

}  // namespace fstack
