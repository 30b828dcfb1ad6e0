#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace fstack {
namespace verify {

/// Outcome of one verification sweep.
struct SuiteResult {
  std::string name;  ///< suite slug, e.g. "claim-star"
  bool passed = false;
  std::size_t checked = 0;  ///< individual checks performed
  std::size_t failures = 0;
  std::string details;  ///< human-readable statistics, plus the first failure
};

/// Each sweep is exhaustive over its stated range.  Passing max_len = 0
/// selects the full acceptance scale, shown in brackets.  With `parallel`
/// set, independent enumeration subtrees fan out across OpenMP threads when
/// the build has OpenMP; the outcome is identical to a serial run.

/// Every freely reduced word with |w| <= max_len [10] evaluates to the same
/// homeomorphism as its normal form; both relators act as the identity.
SuiteResult check_oracle(std::size_t max_len = 0, bool parallel = true);

/// sigma_normalize, normalize_by_multiplication and rewrite_to_irreducible
/// agree letter-for-letter on every word with |w| <= max_len [10].
SuiteResult check_normalization(std::size_t max_len = 0, bool parallel = true);

/// Every prefix-rewriting step applied on words of length <= max_len [10]
/// replaces a suffix of at most 5 letters by at most 10 letters, and every
/// flow label from a source of length <= max_len has at most 13 letters.
SuiteResult check_bounds(std::size_t max_len = 0, bool parallel = true);

/// The size sequence and the weight are invariant under edge inversion for
/// every off-tree edge with source length <= max_len [10].
SuiteResult check_sigma_symmetry(std::size_t max_len = 0, bool parallel = true);

/// verify_claim_star passes for every off-tree edge with source length <=
/// max_len [10].
SuiteResult check_claim_star(std::size_t max_len = 0, bool parallel = true);

/// flow_to_tree terminates within the configured iteration budget for every
/// path labeled by a word of length <= max_len + 2 starting at a normal form
/// of length <= max_len [6].  Iteration acts edgewise, so a path needs
/// exactly as many rounds as its deepest edge: the sweep bounds the flow
/// depth of every edge leaving the radius-(max_len + 1) neighborhood of the
/// start set, then replays a deterministic sample of whole paths literally
/// and matches the predicted iteration counts.
SuiteResult check_flow_termination(std::size_t max_len = 0, bool parallel = true);

/// nf_automaton agrees with is_normal_form on every word of length <=
/// max_len [12]; graph_phi_automaton accepts the padded triple of every edge
/// with source length <= max_len - 4 [8] and rejects 1000 perturbed
/// non-members.
SuiteResult check_regularity(std::size_t max_len = 0, bool parallel = true);

/// cell_count(e) equals weight(e) for every off-tree y-edge with source
/// length <= max_len [8]; the C-sequence recurrence matches the closed form
/// through i = 30.
SuiteResult check_diagrams(std::size_t max_len = 0, bool parallel = true);

/// Recomputes the boxes of gamma = x^2 y^-1 x y^-1 x^-2 y x^4 from scratch —
/// cumulative x-exponent sums read off the raw word, cut off at the first
/// non-positive sum — and matches them against box_diagram.
SuiteResult check_figure_one();

/// Suite slugs, in the order the acceptance run reports them.
const std::vector<std::string>& suite_names();

/// Runs the named suite; throws std::invalid_argument for unknown names.
SuiteResult run_suite(const std::string& name, std::size_t max_len = 0, bool parallel = true);

}  // namespace verify
}  // namespace fstack
