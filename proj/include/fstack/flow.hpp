#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "fstack/integer.hpp"
#include "fstack/normal_form.hpp"
#include "fstack/ordering.hpp"
#include "fstack/word.hpp"

namespace fstack {

/// Largest possible |label| of a single flow image.
inline constexpr std::size_t flow_bound_k = 13;

/// A directed edge path in the Cayley graph: it starts at the vertex `start`
/// and follows the letters of `label` in order.
struct DirectedPath {
  NormalForm start;
  Word label;

  NormalForm target() const;
  /// The consecutive edges: edge k goes from start*label[0..k) along label[k].
  std::vector<Edge> edges() const;
  DirectedPath inverse() const { return DirectedPath{target(), invert(label)}; }
  bool all_in_tree() const;

  bool operator==(const DirectedPath& o) const {
    return label == o.label && start == o.start;
  }
};

/// The flow function.  Tree edges are fixed.  An edge off the tree has
/// source of the shape p y^e x^i, and its image is the path from the same
/// source labeled by
///   label y,    i > 2      :  x^-1 y^-1 x y x^-2 y x^2
///   label y,    1 <= i <= 2:  x^-i y^-e x^i y x^-i-1 y^e x^i+1
///   label y^-1, i > 3      :  x^-2 y^-1 x^2 y^-1 x^-1 y x
///   label y^-1, 2 <= i <= 3:  x^-i y^-e x^i y^-1 x^-i+1 y^e x^i-1
/// The image has the same endpoints as the edge, at most 13 letters, and
/// satisfies phi(e.inverse()) == phi(e).inverse().
DirectedPath phi(const Edge& e);

/// Edgewise extension: the images of the consecutive edges of p, with their
/// labels concatenated as written (no free reduction).  Same endpoints.
DirectedPath phi_hat(const DirectedPath& p);

/// The iteration record of flow_to_tree.  iterations[0] is the input path;
/// each further entry is the phi_hat image of the previous one.  When
/// `terminated` the final path lies entirely in the tree and
/// n_p() = iterations.size() - 1 is the number of iterations needed.
struct FlowTrace {
  std::vector<DirectedPath> iterations;
  bool terminated = false;

  std::size_t n_p() const {
    return iterations.empty() ? 0 : iterations.size() - 1;
  }
};

/// Iterates phi_hat on p until every edge lies in the tree, or until
/// max_iter iterations have been applied (0 means the configured default,
/// 10^4).  Exhausting the budget is reported via terminated=false, not an
/// error; intermediate labels are still subject to the global letter cap.
FlowTrace flow_to_tree(const DirectedPath& p, std::size_t max_iter = 0);

/// One edge of phi(e), as checked by verify_claim_star.
struct ClaimStarEdgeCheck {
  std::size_t index;  // position within phi(e).label
  Gen label;
  bool tree;
  Int edge_weight;  // 0 when tree
  bool ok;          // tree, or strictly lighter than e
};

struct ClaimStarReport {
  Edge edge;
  Int edge_weight;
  bool case_two;  // label y with i > 2, or label y^-1 with i > 3
  std::vector<ClaimStarEdgeCheck> checks;
  /// Case II only: phi(e) contains exactly three y^{+-1}-edges, all off the
  /// tree and strictly lighter.
  bool named_edges_ok = true;
  bool passed = false;
};

/// Checks, for an edge e off the tree, that every edge of phi(e) either lies
/// in the tree or is strictly lighter than e; in Case II additionally that
/// the three y^{+-1}-edges of the image are all off the tree and strictly
/// lighter.  Weights are recomputed from scratch.  Throws precondition_error
/// on tree edges.
ClaimStarReport verify_claim_star(const Edge& e);

/// The flow depth of an edge: the smallest k with phi_hat^k({e}) entirely in
/// the tree (0 for tree edges).  For a path p, the number of iterations
/// flow_to_tree needs equals the maximum flow depth over the edges of p.
/// Depths are memoized across calls; phi(e.inverse()) = phi(e).inverse()
/// makes the depth direction-independent, and both directions are cached.
class FlowDepthCache {
 public:
  std::size_t depth(const Edge& e);
  std::size_t size() const { return memo_.size(); }

 private:
  std::size_t depth_of(const NormalForm& source, Gen label);
  std::unordered_map<std::string, std::size_t> memo_;
};

}  // namespace fstack
