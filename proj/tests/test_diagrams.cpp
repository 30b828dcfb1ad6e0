#include <doctest.h>

#include <stdexcept>

#include "fstack/diagrams.hpp"
#include "fstack/errors.hpp"
#include "fstack/normal_form.hpp"
#include "fstack/ordering.hpp"
#include "fstack/word.hpp"

using namespace fstack;

namespace {

Edge edge(const std::string& source, Gen g) {
  return Edge{normal_form_from_word(parse_word(source)), g};
}

}  // namespace

TEST_CASE("box diagrams read off the profile") {
  // the running example: sizes (4, 2, 3) under crossings (+1, -1, -1)
  const BoxDiagram d = box_diagram(edge("x^2y^-1xy^-1x^-2yx^4", Gen::y));
  CHECK(d.prefix_path == parse_word("x^2"));
  REQUIRE(d.boxes.size() == 3);
  CHECK(d.boxes[0] == Box{Int(4), 1});
  CHECK(d.boxes[1] == Box{Int(2), -1});
  CHECK(d.boxes[2] == Box{Int(3), -1});
  CHECK(d.gamma_word() == parse_word("x^2y^-1xy^-1x^-2yx^4"));

  // a single box
  const BoxDiagram one = box_diagram(edge("yx", Gen::y));
  CHECK(one.prefix_path.empty());
  REQUIRE(one.boxes.size() == 1);
  CHECK(one.boxes[0] == Box{Int(1), 1});
  CHECK(one.gamma_word() == parse_word("yx"));

  // m < n leaves a y-letter inside the prefix path
  const BoxDiagram two = box_diagram(edge("yx^-3yx^2", Gen::y));
  CHECK(two.prefix_path == parse_word("yx^-3"));
  REQUIRE(two.boxes.size() == 1);
  CHECK(two.boxes[0] == Box{Int(2), 1});
  CHECK(two.gamma_word() == parse_word("yx^-3yx^2"));

  CHECK_THROWS_AS((void)box_diagram(edge("x^3", Gen::y)), precondition_error);
  CHECK_THROWS_AS((void)box_diagram(edge("yx", Gen::x)), precondition_error);
  // y^-1 edges go through the inverse edge
  CHECK_THROWS_AS((void)box_diagram(edge("yx^2", Gen::Y)), precondition_error);
}

TEST_CASE("filling realizes one cell per elementary step") {
  // sizes (4, 2, 1): 9 + 1 + 1 = 11 cells
  const BoxDiagram d = box_diagram(edge("yx^-1yx^-2yx^4", Gen::y));
  REQUIRE(d.boxes.size() == 3);
  CHECK(d.boxes[0].size == 4);
  CHECK(d.boxes[1].size == 2);
  CHECK(d.boxes[2].size == 1);
  const CellComplex c = fill(d);
  CHECK(c.cells.size() == 11);
  CHECK_NOTHROW(c.validate());

  // the outer boundary spells gamma y (gamma')^{-1} from the basepoint
  const NormalForm gamma = normal_form_from_word(parse_word("yx^-1yx^-2yx^4"));
  Word expected = gamma.to_word();
  expected.push_back(Gen::y);
  const Word primed = invert(multiply(gamma, Gen::y).to_word());
  expected.insert(expected.end(), primed.begin(), primed.end());
  CHECK(c.outer_word() == expected);
}

TEST_CASE("cell counts equal weights") {
  const Edge cases[] = {
      edge("yx", Gen::y),           edge("yx^2", Gen::y),
      edge("yx^3", Gen::y),         edge("yx^-1yx^2", Gen::y),
      edge("x^2y^-1xy^-1x^-2yx^4", Gen::y),
  };
  for (const Edge& e : cases) CHECK(cell_count(e) == weight(e));
  CHECK(cell_count(edge("x^2y^-1xy^-1x^-2yx^4", Gen::y)) == 15);

  // y^-1 edges delegate to their inverses
  const Edge back = edge("yx^2", Gen::Y);
  CHECK(cell_count(back) == cell_count(back.inverse()));
  CHECK(cell_count(back) == weight(back));

  CHECK_THROWS_AS((void)cell_count(edge("yx", Gen::x)), precondition_error);
}

TEST_CASE("filled complexes are checkable diagrams") {
  const CellComplex c = fill(box_diagram(edge("yx^2", Gen::y)));
  CHECK(c.cells.size() == 1);
  CHECK_NOTHROW(c.validate());
  // the single cell spells a rotation of a defining relator
  CHECK((is_rotation_of_relator(c.cell_word(0), relator_r1()) ||
         is_rotation_of_relator(c.cell_word(0), relator_r2())));
  // every edge occurs exactly twice over cells + outer, so with one cell the
  // outer walk uses each edge at least once
  CHECK(c.outer.size() >= c.edges.size());
  CHECK(c.num_vertices > 0);
  CHECK(c.basepoint == 0);

  const std::string dot = c.to_dot();
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("y") != std::string::npos);
}

TEST_CASE("inconsistent boxes are rejected") {
  // gamma_word = yxyx is not a normal form
  CHECK_THROWS_AS((void)fill(BoxDiagram{parse_word("yx"), {Box{Int(1), 1}}}),
                  std::invalid_argument);
  // gamma_word = yx^-1yx^2 needs two boxes (sizes 2 and 1), one given
  CHECK_THROWS_AS((void)fill(BoxDiagram{parse_word("yx^-1"), {Box{Int(2), 1}}}),
                  std::invalid_argument);
  // sizes below one and signs off {-1, +1} are malformed
  CHECK_THROWS_AS((void)fill(BoxDiagram{Word{}, {Box{Int(0), 1}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)fill(BoxDiagram{Word{}, {Box{Int(1), 2}}}),
                  std::invalid_argument);
  // a consistent single-box diagram passes and realizes C(2) = 1 cell
  CHECK(fill(BoxDiagram{Word{}, {Box{Int(2), 1}}}).cells.size() == 1);
}

TEST_CASE("hand-built complexes are validated") {
  // a square spelling x y x^-1 y^-1 is not a relator: validate must reject it
  CellComplex c;
  c.num_vertices = 4;
  c.basepoint = 0;
  c.edges = {EdgeRec{0, 1, Gen::x}, EdgeRec{1, 2, Gen::y}, EdgeRec{3, 2, Gen::x},
             EdgeRec{0, 3, Gen::y}};
  c.cells = {{HalfEdge{0, true}, HalfEdge{1, true}, HalfEdge{2, false}, HalfEdge{3, false}}};
  c.outer = {HalfEdge{0, true}, HalfEdge{1, true}, HalfEdge{2, false}, HalfEdge{3, false}};
  CHECK(c.cell_word(0) == parse_word("xyx^-1y^-1"));
  CHECK_THROWS_AS(c.validate(), std::logic_error);
}

TEST_CASE("recursive box layout") {
  const FilledBox b1 = filled_box(Int(1));
  CHECK(b1.base_cells == 1);
  CHECK(b1.children.empty());
  CHECK(b1.cell_count() == 1);
  CHECK(filled_box(Int(2)).cell_count() == 1);

  const FilledBox b4 = filled_box(Int(4));
  CHECK(b4.base_cells == 2);
  REQUIRE(b4.children.size() == 3);
  CHECK(b4.children[0].size == 2);
  CHECK(b4.children[1].size == 3);
  CHECK(b4.children[2].size == 2);
  CHECK(b4.cell_count() == 9);
  CHECK(filled_box(Int(8)).cell_count() == 169);

  for (unsigned i = 1; i <= 10; ++i)
    CHECK(filled_box(Int(i)).cell_count() == c_seq(Int(i)));

  CHECK_THROWS_AS((void)filled_box(Int(0)), precondition_error);
  CHECK_THROWS_AS((void)filled_box(Int(21)), resource_limit_error);
}
