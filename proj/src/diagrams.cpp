#include "fstack/diagrams.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "fstack/errors.hpp"
#include "fstack/normal_form.hpp"

namespace fstack {

namespace {

void push_run(RunWord& runs, char base, const Int& e) {
  if (e == 0) return;
  if (!runs.empty() && runs.back().base == base) {
    runs.back().exponent += e;
    if (runs.back().exponent == 0) runs.pop_back();
    return;
  }
  runs.push_back(Run{base, e});
}

void append_power(Word& w, Gen positive, const Int& power) {
  const Gen letter = power > 0 ? positive : inv(positive);
  for (Int c = abs(power); c > 0; --c) w.push_back(letter);
}

/// Builds the complex incrementally: a frontier path is rewritten step by
/// step, each elementary replacement enclosing one 2-cell, and mirrored
/// adjacent edges are folded (identified) like free reductions. Vertices use
/// a plain union-find; edges use a union-find with an orientation parity bit
/// so that a fold can identify two edges traversed in opposite directions.
class Builder {
 public:
  struct Half {
    std::uint32_t edge;
    bool forward;
  };

  std::uint32_t new_vertex() {
    const auto id = static_cast<std::uint32_t>(vparent_.size());
    vparent_.push_back(id);
    return id;
  }

  std::uint32_t find_vertex(std::uint32_t v) {
    while (vparent_[v] != v) {
      vparent_[v] = vparent_[vparent_[v]];
      v = vparent_[v];
    }
    return v;
  }

  void union_vertex(std::uint32_t a, std::uint32_t b) {
    a = find_vertex(a);
    b = find_vertex(b);
    if (a != b) vparent_[b] = a;
  }

  std::uint32_t new_edge(std::uint32_t from, std::uint32_t to, Gen letter) {
    const auto id = static_cast<std::uint32_t>(edges_.size());
    edges_.push_back(Stored{from, to, letter});
    eparent_.push_back(id);
    eflip_.push_back(0);
    return id;
  }

  std::pair<std::uint32_t, bool> find_edge(std::uint32_t e) {
    if (eparent_[e] == e) return {e, false};
    const auto [root, parent_flip] = find_edge(eparent_[e]);
    const bool flip = (eflip_[e] != 0) != parent_flip;
    eparent_[e] = root;
    eflip_[e] = flip ? 1 : 0;
    return {root, flip};
  }

  /// Identifies edges a and b; `flipped` states whether their stored
  /// directions disagree. Throws if they are already identified with the
  /// opposite parity.
  void union_edge(std::uint32_t a, std::uint32_t b, bool flipped) {
    const auto [ra, fa] = find_edge(a);
    const auto [rb, fb] = find_edge(b);
    if (ra == rb) {
      if ((fa != fb) != flipped) {
        throw std::logic_error("fold would identify an edge with its own reverse");
      }
      return;
    }
    eparent_[rb] = ra;
    eflip_[rb] = ((fa != fb) != flipped) ? 1 : 0;
  }

  Gen half_letter(const Half& h) const {
    const Gen base = edges_[h.edge].letter;
    return h.forward ? base : inv(base);
  }

  std::uint32_t half_source(const Half& h) {
    const Stored& e = edges_[h.edge];
    return find_vertex(h.forward ? e.from : e.to);
  }

  std::uint32_t half_target(const Half& h) {
    const Stored& e = edges_[h.edge];
    return find_vertex(h.forward ? e.to : e.from);
  }

  std::vector<Half> make_path(std::uint32_t from, std::uint32_t to, const Word& w) {
    std::vector<Half> out;
    out.reserve(w.size());
    std::uint32_t prev = from;
    for (std::size_t p = 0; p < w.size(); ++p) {
      const std::uint32_t next = p + 1 == w.size() ? to : new_vertex();
      out.push_back(make_half(prev, next, w[p]));
      prev = next;
    }
    return out;
  }

  std::vector<Half> make_open_path(std::uint32_t from, const Word& w) {
    std::vector<Half> out;
    out.reserve(w.size());
    std::uint32_t prev = from;
    for (const Gen g : w) {
      const std::uint32_t next = new_vertex();
      out.push_back(make_half(prev, next, g));
      prev = next;
    }
    return out;
  }

  Word path_word(const std::vector<Half>& path, std::size_t lo, std::size_t hi) const {
    Word out;
    out.reserve(hi - lo);
    for (std::size_t p = lo; p < hi; ++p) out.push_back(half_letter(path[p]));
    return out;
  }

  /// Replaces path[lo, hi) — which must spell `expect` — by a fresh subpath
  /// spelling `repl`, recording the enclosed 2-cell (boundary expect·repl⁻¹).
  void replace(std::vector<Half>& path, std::size_t lo, std::size_t hi, const Word& expect,
               const Word& repl) {
    if (path_word(path, lo, hi) != expect) {
      throw std::logic_error("diagram construction out of step with the rewriting");
    }
    const std::uint32_t from = half_source(path[lo]);
    const std::uint32_t to = half_target(path[hi - 1]);
    const std::vector<Half> fresh = make_path(from, to, repl);
    std::vector<Half> cell(path.begin() + static_cast<std::ptrdiff_t>(lo),
                           path.begin() + static_cast<std::ptrdiff_t>(hi));
    for (auto it = fresh.rbegin(); it != fresh.rend(); ++it) {
      cell.push_back(Half{it->edge, !it->forward});
    }
    cells_.push_back(std::move(cell));
    path.erase(path.begin() + static_cast<std::ptrdiff_t>(lo),
               path.begin() + static_cast<std::ptrdiff_t>(hi));
    path.insert(path.begin() + static_cast<std::ptrdiff_t>(lo), fresh.begin(), fresh.end());
  }

  /// Folds mirrored adjacent pairs within path[lo, lo+span), cascading;
  /// returns the new span.
  std::size_t fold_range(std::vector<Half>& path, std::size_t lo, std::size_t span) {
    std::size_t p = lo;
    while (span >= 2 && p + 1 < lo + span) {
      if (half_letter(path[p + 1]) == inv(half_letter(path[p]))) {
        fold_pair(path[p], path[p + 1]);
        path.erase(path.begin() + static_cast<std::ptrdiff_t>(p),
                   path.begin() + static_cast<std::ptrdiff_t>(p + 2));
        span -= 2;
        if (p > lo) --p;
      } else {
        ++p;
      }
    }
    return span;
  }

  /// Rewrites path[lo, lo+i+2) = y^dlt x^i y into x^i y x^{-i-1} y^dlt x^{i+1},
  /// gluing C(i) cells.
  void up(std::vector<Half>& path, std::size_t lo, std::size_t i, int dlt) {
    if (path_word(path, lo, lo + i + 2) != up_lhs(i, dlt)) {
      throw std::logic_error("up-script applied off its pattern");
    }
    if (i <= 2) {
      replace(path, lo, lo + i + 2, up_lhs(i, dlt), up_rhs(i, dlt));
      return;
    }
    replace(path, lo + i, lo + i + 2, words().xy, words().xy_to);
    down(path, lo, i - 2, dlt);
    up(path, lo + 2 * i - 2, i - 1, dlt);
    if (fold_range(path, lo, 5 * i + 4) != 3 * i + 4) {
      throw std::logic_error("up-script fold left an unexpected span");
    }
    replace(path, lo + i - 1, lo + i + 2, words().yxy, words().yxy_to);
    if (fold_range(path, lo, 3 * i + 8) != 3 * i + 4) {
      throw std::logic_error("up-script fold left an unexpected span");
    }
    up(path, lo + 2 * i + 2, i - 2, dlt);
    if (fold_range(path, lo, 5 * i + 2) != 3 * i + 4) {
      throw std::logic_error("up-script fold left an unexpected span");
    }
    if (path_word(path, lo, lo + 3 * i + 4) != up_rhs(i, dlt)) {
      throw std::logic_error("up-script produced an unexpected subpath");
    }
  }

  /// Rewrites path[lo, lo+j+3) = y^dlt x^{j+1} y^-1 into
  /// x^{j+1} y^-1 x^{-j} y^dlt x^j, gluing C(j) cells.
  void down(std::vector<Half>& path, std::size_t lo, std::size_t j, int dlt) {
    if (path_word(path, lo, lo + j + 3) != down_lhs(j, dlt)) {
      throw std::logic_error("down-script applied off its pattern");
    }
    if (j <= 2) {
      replace(path, lo, lo + j + 3, down_lhs(j, dlt), down_rhs(j, dlt));
      return;
    }
    replace(path, lo + j, lo + j + 3, words().xxY, words().xxY_to);
    down(path, lo, j - 2, dlt);
    down(path, lo + 2 * j - 2, j - 1, dlt);
    if (fold_range(path, lo, 5 * j + 1) != 3 * j + 3) {
      throw std::logic_error("down-script fold left an unexpected span");
    }
    replace(path, lo + j - 1, lo + j + 3, words().YxxY, words().YxxY_to);
    if (fold_range(path, lo, 3 * j + 5) != 3 * j + 3) {
      throw std::logic_error("down-script fold left an unexpected span");
    }
    up(path, lo + 2 * j + 2, j - 2, dlt);
    if (fold_range(path, lo, 5 * j + 1) != 3 * j + 3) {
      throw std::logic_error("down-script fold left an unexpected span");
    }
    if (path_word(path, lo, lo + 3 * j + 3) != down_rhs(j, dlt)) {
      throw std::logic_error("down-script produced an unexpected subpath");
    }
  }

  CellComplex export_complex(const std::vector<Half>& outer) {
    CellComplex out;
    std::map<std::uint32_t, std::uint32_t> vid;
    std::map<std::uint32_t, std::uint32_t> eid;
    auto pub_vertex = [&](std::uint32_t v) {
      const std::uint32_t root = find_vertex(v);
      return vid.emplace(root, static_cast<std::uint32_t>(vid.size())).first->second;
    };
    auto pub_half = [&](const Half& h) {
      const auto [root, flip] = find_edge(h.edge);
      auto it = eid.find(root);
      if (it == eid.end()) {
        it = eid.emplace(root, static_cast<std::uint32_t>(out.edges.size())).first;
        const Stored& s = edges_[root];
        out.edges.push_back(EdgeRec{pub_vertex(s.from), pub_vertex(s.to), s.letter});
      }
      return HalfEdge{it->second, h.forward != flip};
    };
    if (!outer.empty()) out.basepoint = pub_vertex(half_source(outer.front()));
    out.outer.reserve(outer.size());
    for (const Half& h : outer) out.outer.push_back(pub_half(h));
    out.cells.reserve(cells_.size());
    for (const std::vector<Half>& cell : cells_) {
      std::vector<HalfEdge> walk;
      walk.reserve(cell.size());
      for (const Half& h : cell) walk.push_back(pub_half(h));
      out.cells.push_back(std::move(walk));
    }
    out.num_vertices = vid.size();
    return out;
  }

  std::size_t cell_count() const { return cells_.size(); }

 private:
  struct Stored {
    std::uint32_t from;
    std::uint32_t to;
    Gen letter;
  };

  struct ScriptWords {
    Word xy = parse_word("xy");
    Word xy_to = parse_word("y^-1xyx^-2yx^2");
    Word yxy = parse_word("y^-1xy");
    Word yxy_to = parse_word("xyx^-2y^-1x^2");
    Word xxY = parse_word("x^2y^-1");
    Word xxY_to = parse_word("y^-1x^2y^-1x^-1yx");
    Word YxxY = parse_word("y^-1x^2y^-1");
    Word YxxY_to = parse_word("x^2y^-1x^-1y^-1x");
  };

  static const ScriptWords& words() {
    static const ScriptWords w;
    return w;
  }

  static Word up_lhs(std::size_t i, int dlt) {
    return runs_to_word({{'y', Int(dlt)}, {'x', Int(i)}, {'y', Int(1)}});
  }
  static Word up_rhs(std::size_t i, int dlt) {
    return runs_to_word({{'x', Int(i)},
                         {'y', Int(1)},
                         {'x', -Int(i) - 1},
                         {'y', Int(dlt)},
                         {'x', Int(i) + 1}});
  }
  static Word down_lhs(std::size_t j, int dlt) {
    return runs_to_word({{'y', Int(dlt)}, {'x', Int(j) + 1}, {'y', Int(-1)}});
  }
  static Word down_rhs(std::size_t j, int dlt) {
    return runs_to_word(
        {{'x', Int(j) + 1}, {'y', Int(-1)}, {'x', -Int(j)}, {'y', Int(dlt)}, {'x', Int(j)}});
  }

  Half make_half(std::uint32_t from, std::uint32_t to, Gen g) {
    if (is_positive(g)) return Half{new_edge(from, to, g), true};
    return Half{new_edge(to, from, inv(g)), false};
  }

  void fold_pair(const Half& a, const Half& b) {
    if (half_letter(b) != inv(half_letter(a)) || half_target(a) != half_source(b)) {
      throw std::logic_error("fold requested on a non-mirrored pair");
    }
    union_vertex(half_source(a), half_target(b));
    union_edge(a.edge, b.edge, a.forward == b.forward);
  }

  std::vector<std::uint32_t> vparent_;
  std::vector<Stored> edges_;
  std::vector<std::uint32_t> eparent_;
  std::vector<std::uint8_t> eflip_;
  std::vector<std::vector<Half>> cells_;
};

}  // namespace

Word BoxDiagram::gamma_word() const {
  Word out = prefix_path;
  for (std::size_t k = boxes.size(); k-- > 0;) {
    out.push_back(boxes[k].crossing_sign > 0 ? Gen::y : Gen::Y);
    const Int i_k = boxes[k].size - (k >= 1 ? boxes[k - 1].size : Int(0));
    append_power(out, Gen::x, i_k);
  }
  return out;
}

BoxDiagram box_diagram(const Edge& e) {
  if (e.in_tree()) throw precondition_error("tree edges have no box diagram");
  if (e.label != Gen::y) {
    throw precondition_error("box diagrams are built for edges labeled y; pass the inverse edge");
  }
  const NormalForm& gamma = e.source;
  const ExponentProfile p = profile(gamma);
  const std::size_t m = p.m;
  BoxDiagram d;
  RunWord prefix;
  for (std::size_t k = gamma.n();; --k) {
    push_run(prefix, 'x', gamma.i(k));
    if (k == m) break;
    push_run(prefix, 'y', Int(gamma.eps(k)));
  }
  d.prefix_path = runs_to_word(prefix);
  for (std::size_t k = 0; k < m; ++k) {
    d.boxes.push_back(Box{p.s_k(k), gamma.eps(k + 1)});
  }
  if (d.gamma_word() != gamma.to_word()) {
    throw std::logic_error("box diagram does not reconstruct its vertex word");
  }
  return d;
}

Word CellComplex::cell_word(std::size_t cell) const {
  Word out;
  const std::vector<HalfEdge>& walk = cells.at(cell);
  out.reserve(walk.size());
  for (const HalfEdge& h : walk) {
    out.push_back(h.forward ? edges[h.edge].letter : inv(edges[h.edge].letter));
  }
  return out;
}

Word CellComplex::outer_word() const {
  Word out;
  out.reserve(outer.size());
  for (const HalfEdge& h : outer) {
    out.push_back(h.forward ? edges[h.edge].letter : inv(edges[h.edge].letter));
  }
  return out;
}

void CellComplex::validate() const {
  auto src = [this](const HalfEdge& h) { return h.forward ? edges[h.edge].from : edges[h.edge].to; };
  auto dst = [this](const HalfEdge& h) { return h.forward ? edges[h.edge].to : edges[h.edge].from; };
  std::vector<std::size_t> uses(edges.size(), 0);
  auto check_walk = [&](const std::vector<HalfEdge>& walk) {
    for (std::size_t t = 0; t < walk.size(); ++t) {
      if (walk[t].edge >= edges.size()) throw std::logic_error("walk references an unknown edge");
      ++uses[walk[t].edge];
      if (t + 1 < walk.size() && dst(walk[t]) != src(walk[t + 1])) {
        throw std::logic_error("walk is not connected");
      }
    }
    if (!walk.empty() && dst(walk.back()) != src(walk.front())) {
      throw std::logic_error("walk is not closed");
    }
  };
  for (const std::vector<HalfEdge>& cell : cells) {
    if (cell.empty()) throw std::logic_error("empty cell boundary");
    check_walk(cell);
  }
  check_walk(outer);
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const Word w = cell_word(c);
    if (!is_rotation_of_relator(w, relator_r1()) && !is_rotation_of_relator(w, relator_r2())) {
      throw std::logic_error("cell boundary does not spell a defining relator");
    }
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (uses[i] != 2) throw std::logic_error("edge is not used exactly twice");
    if (edges[i].from >= num_vertices || edges[i].to >= num_vertices) {
      throw std::logic_error("edge endpoint out of range");
    }
    if (edges[i].letter != Gen::x && edges[i].letter != Gen::y) {
      throw std::logic_error("edges must store positive letters");
    }
  }
  if (!outer.empty() && src(outer.front()) != basepoint) {
    throw std::logic_error("outer walk must start at the basepoint");
  }
}

std::string CellComplex::to_dot() const {
  std::ostringstream out;
  out << "digraph diagram {\n";
  out << "  rankdir=LR;\n";
  out << "  node [shape=point];\n";
  out << "  v" << basepoint << " [shape=circle, width=0.15, label=\"\"];\n";
  for (const EdgeRec& e : edges) {
    out << "  v" << e.from << " -> v" << e.to << " [label=\"" << gen_name(e.letter) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

CellComplex fill(const BoxDiagram& d) {
  const Word gamma_w = d.gamma_word();
  const NormalForm gamma = normal_form_from_word(gamma_w);

  Int total_cells = 0;
  for (const Box& box : d.boxes) {
    if (box.size < 1) throw std::invalid_argument("box sizes must be positive");
    if (box.crossing_sign != 1 && box.crossing_sign != -1) {
      throw std::invalid_argument("crossing signs must be +1 or -1");
    }
    total_cells += c_seq(box.size);
  }
  if (total_cells > 1000000) {
    throw resource_limit_error("filled diagram would exceed the cell budget of 10^6");
  }

  Builder builder;
  const std::uint32_t base = builder.new_vertex();
  Word start = gamma_w;
  start.push_back(Gen::y);
  std::vector<Builder::Half> frontier = builder.make_open_path(base, start);
  const std::vector<Builder::Half> top = frontier;

  for (const Box& box : d.boxes) {
    const Word fw = builder.path_word(frontier, 0, frontier.size());
    const auto redex = find_sigma_redex(fw);
    const Gen crossing = box.crossing_sign > 0 ? Gen::y : Gen::Y;
    if (!redex || redex->rule != DerivationStep::Rule::y_rule ||
        Int(redex->size) != box.size || fw[redex->start] != crossing) {
      throw std::invalid_argument("box diagram is inconsistent with the rewriting of gamma y");
    }
    builder.up(frontier, redex->start, redex->size, box.crossing_sign);
    builder.fold_range(frontier, 0, frontier.size());
  }

  const Word final_w = builder.path_word(frontier, 0, frontier.size());
  if (find_sigma_redex(final_w)) {
    throw std::invalid_argument("box diagram has fewer boxes than the rewriting needs");
  }
  if (final_w != multiply(gamma, Gen::y).to_word()) {
    throw std::logic_error("frontier does not spell the product normal form");
  }

  std::vector<Builder::Half> outer = top;
  outer.reserve(top.size() + frontier.size());
  for (auto it = frontier.rbegin(); it != frontier.rend(); ++it) {
    outer.push_back(Builder::Half{it->edge, !it->forward});
  }
  CellComplex out = builder.export_complex(outer);
  if (Int(out.cells.size()) != total_cells) {
    throw std::logic_error("filled diagram has an unexpected number of cells");
  }
  out.validate();
  return out;
}

Int FilledBox::cell_count() const {
  Int total = Int(base_cells);
  for (const FilledBox& child : children) total += child.cell_count();
  return total;
}

namespace {

FilledBox build_filled(long size) {
  FilledBox out;
  out.size = size;
  if (size <= 2) {
    out.base_cells = 1;
    return out;
  }
  out.base_cells = 2;
  out.children.push_back(build_filled(size - 2));
  out.children.push_back(build_filled(size - 1));
  out.children.push_back(build_filled(size - 2));
  return out;
}

}  // namespace

FilledBox filled_box(const Int& size) {
  if (size < 1) throw precondition_error("box size must be at least 1");
  if (size > 20) {
    throw resource_limit_error("filled-box layouts above size 20 are too large to materialize");
  }
  return build_filled(size.convert_to<long>());
}

Int cell_count(const Edge& e) {
  if (e.in_tree()) throw precondition_error("tree edges bound no filled diagram");
  if (e.label == Gen::Y) return cell_count(e.inverse());
  return Int(fill(box_diagram(e)).cells.size());
}

}  // namespace fstack
