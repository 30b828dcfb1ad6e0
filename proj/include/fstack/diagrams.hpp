#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "fstack/integer.hpp"
#include "fstack/ordering.hpp"
#include "fstack/word.hpp"

namespace fstack {

/// One rectangle of a box diagram: its left and right sides are labeled
/// x^{size} y x^{-size-1}, its top and bottom carry the crossing letter
/// y^{crossing_sign}.
struct Box {
  Int size;           // s_k, always >= 1
  int crossing_sign;  // e_{k+1}, the sign of the y-letter the box sits under

  friend bool operator==(const Box&, const Box&) = default;
};

/// The diagram over the infinite presentation for the edge (gamma, y): a
/// 1-dimensional prefix path x^{i_n} y^{e_n} ... y^{e_{m+1}} x^{i_m} followed
/// by the m boxes in rewriting order (sizes s_0, ..., s_{m-1}).
struct BoxDiagram {
  Word prefix_path;
  std::vector<Box> boxes;

  /// Reconstructs gamma: the prefix path followed by
  /// y^{e_m} x^{i_{m-1}} ... y^{e_1} x^{i_0}, where i_k = s_k - s_{k-1}.
  Word gamma_word() const;

  friend bool operator==(const BoxDiagram&, const BoxDiagram&) = default;
};

/// Box diagram of a non-tree edge labeled y. For an edge labeled y^-1, pass
/// its inverse edge instead; tree edges and other labels throw
/// precondition_error.
BoxDiagram box_diagram(const Edge& e);

/// A traversal of an edge: forward reads the stored letter, backward its
/// inverse.
struct HalfEdge {
  std::uint32_t edge;
  bool forward;

  friend bool operator==(const HalfEdge&, const HalfEdge&) = default;
};

/// An undirected edge of the complex, stored with its positive letter (x or
/// y) read from `from` to `to`.
struct EdgeRec {
  std::uint32_t from;
  std::uint32_t to;
  Gen letter;

  friend bool operator==(const EdgeRec&, const EdgeRec&) = default;
};

/// A finite combinatorial 2-complex: the filled diagram. Cells are closed
/// boundary walks; `outer` is the closed boundary walk of the whole diagram,
/// starting at the basepoint and spelling gamma y (gamma')^{-1}.
struct CellComplex {
  std::size_t num_vertices = 0;
  std::uint32_t basepoint = 0;
  std::vector<EdgeRec> edges;
  std::vector<std::vector<HalfEdge>> cells;
  std::vector<HalfEdge> outer;

  /// The boundary word of one 2-cell (a rotation of a defining relator or of
  /// an inverse of one).
  Word cell_word(std::size_t cell) const;

  /// The outer boundary word from the basepoint.
  Word outer_word() const;

  /// Checks the complex invariants: walks are closed and connected, every
  /// cell boundary spells [y,xyx^-2]^{+-1} or [y,x^2yx^-3]^{+-1} up to
  /// rotation, and every edge is used exactly twice across cell boundaries
  /// and the outer walk. Throws std::logic_error on violation.
  void validate() const;

  /// DOT rendering of the 1-skeleton with edge labels.
  std::string to_dot() const;
};

/// Fills the box diagram over the finite presentation: replays the rewriting
/// of gamma y phase by phase, gluing one 2-cell per elementary replacement
/// and folding mirrored edges maximally. The resulting complex has exactly
/// C(s_k) cells for box k. Throws std::invalid_argument if the boxes are
/// inconsistent with the rewriting of gamma_word()·y, and
/// resource_limit_error if the total cell count would exceed 10^6.
CellComplex fill(const BoxDiagram& d);

/// The recursive layout of a filled box: a box of size i <= 2 is a single
/// 2-cell; a box of size i >= 3 holds two base 2-cells and three child fills
/// of sizes i-2, i-1, i-2 (in construction order).
struct FilledBox {
  Int size;
  std::size_t base_cells = 0;
  std::vector<FilledBox> children;

  /// Total number of 2-cells: base cells plus all descendants.
  Int cell_count() const;
};

/// Builds the layout for a box of the given size (>= 1; sizes above 20 throw
/// resource_limit_error since the layout grows exponentially).
FilledBox filled_box(const Int& size);

/// Number of 2-cells of the filled diagram of a non-tree edge; equals
/// ordering.weight(e). Edges labeled y^-1 are counted via their inverse
/// edge; tree edges throw precondition_error.
Int cell_count(const Edge& e);

}  // namespace fstack
