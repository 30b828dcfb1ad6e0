#pragma once

#include <string>
#include <vector>

#include "fstack/integer.hpp"
#include "fstack/normal_form.hpp"
#include "fstack/word.hpp"

namespace fstack {

/// A directed edge of the Cayley graph: from the vertex `source` along the
/// generator `label` to multiply(source, label).
struct Edge {
  NormalForm source;
  Gen label;

  NormalForm target() const { return multiply(source, label); }
  Edge inverse() const { return Edge{target(), inv(label)}; }
  bool in_tree() const { return fstack::in_tree(source, label); }

  bool operator==(const Edge& o) const {
    return label == o.label && source == o.source;
  }
  bool operator!=(const Edge& o) const { return !(*this == o); }
};

/// Sizes of the rules applied along an edge, in order of application.
using SizeSequence = std::vector<Int>;

/// Cell count of the box of size i:
///   C(1) = C(2) = 1,   C(i) = C(i-1) + 2 C(i-2) + 2   for i >= 3,
/// evaluated via the closed form C(i) = (2/3)2^i - (2/3)(-1)^i - 1 in exact
/// integer arithmetic.  Throws std::domain_error for i <= 0.
Int c_seq(const Int& i);

/// Same values from the recurrence directly (for cross-checks).
Int c_seq_by_recurrence(unsigned i);

/// The size sequence sigma(e) of an edge off the tree: sizes of the rules
/// the standard derivation applies when reducing source*label.  For a y-edge
/// this is (s_0, ..., s_{m-1}); for a y^-1-edge it is
/// (s_0 - 1, ..., s_{m'-1} - 1), both read from the source's own profile
/// (no multiplication needed).  Invariant: sigma(e) == sigma(e.inverse()).
/// Throws precondition_error on tree edges, which have no size sequence.
SizeSequence size_sequence(const Edge& e);

/// The weight W(e) = sum of C(i) over i in size_sequence(e).
/// Invariant: W(e) == W(e.inverse()).  Throws precondition_error on tree
/// edges.
Int weight(const Edge& e);

/// The strict order e < e' iff W(e) < W(e'), defined only off the tree;
/// throws precondition_error if either edge lies on the tree.
bool precedes(const Edge& a, const Edge& b);

/// "(1, 2, 1)" (empty sequence prints "()").
std::string print_sizes(const SizeSequence& s);

}  // namespace fstack
