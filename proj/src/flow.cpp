#include "fstack/flow.hpp"

#include <sstream>
#include <stdexcept>

#include "fstack/config.hpp"
#include "fstack/errors.hpp"

namespace fstack {

namespace {

void append_power(Word& w, Gen g, std::size_t count) {
  w.insert(w.end(), count, g);
}

Gen y_of(int sign) { return sign == 1 ? Gen::y : Gen::Y; }

}  // namespace

NormalForm DirectedPath::target() const {
  NormalForm v = start;
  for (Gen g : label) v = multiply(v, g);
  return v;
}

std::vector<Edge> DirectedPath::edges() const {
  std::vector<Edge> out;
  out.reserve(label.size());
  NormalForm v = start;
  for (Gen g : label) {
    out.push_back(Edge{v, g});
    v = multiply(v, g);
  }
  return out;
}

bool DirectedPath::all_in_tree() const {
  NormalForm v = start;
  for (Gen g : label) {
    if (!in_tree(v, g)) return false;
    v = multiply(v, g);
  }
  return true;
}

DirectedPath phi(const Edge& e) {
  if (e.in_tree()) return DirectedPath{e.source, Word{e.label}};
  const int b = e.label == Gen::y ? 1 : -1;
  const int eps = e.source.eps(1);
  const Int& i_big = e.source.i(0);
  static const Word case_two_y = parse_word("x^-1y^-1xyx^-2yx^2");
  static const Word case_two_y_inv = parse_word("x^-2y^-1x^2y^-1x^-1yx");
  Word out;
  if (b == 1 && i_big > 2) {
    out = case_two_y;
  } else if (b == -1 && i_big > 3) {
    out = case_two_y_inv;
  } else {
    const std::size_t i = i_big.convert_to<std::size_t>();
    out.reserve(4 * i + 5);
    append_power(out, Gen::X, i);
    out.push_back(y_of(-eps));
    append_power(out, Gen::x, i);
    if (b == 1) {
      out.push_back(Gen::y);
      append_power(out, Gen::X, i + 1);
      out.push_back(y_of(eps));
      append_power(out, Gen::x, i + 1);
    } else {
      out.push_back(Gen::Y);
      append_power(out, Gen::X, i - 1);
      out.push_back(y_of(eps));
      append_power(out, Gen::x, i - 1);
    }
  }
  return DirectedPath{e.source, std::move(out)};
}

DirectedPath phi_hat(const DirectedPath& p) {
  Word out;
  NormalForm v = p.start;
  for (Gen g : p.label) {
    const Edge e{v, g};
    if (e.in_tree()) {
      out.push_back(g);
    } else {
      const Word img = phi(e).label;
      out.insert(out.end(), img.begin(), img.end());
    }
    if (out.size() > config::max_letters()) {
      throw resource_limit_error("flow image exceeded the letter cap");
    }
    v = multiply(v, g);
  }
  return DirectedPath{p.start, std::move(out)};
}

FlowTrace flow_to_tree(const DirectedPath& p, std::size_t max_iter) {
  if (max_iter == 0) max_iter = config::max_flow_iterations();
  FlowTrace trace;
  trace.iterations.push_back(p);
  while (!trace.iterations.back().all_in_tree()) {
    if (trace.iterations.size() > max_iter) return trace;  // not terminated
    trace.iterations.push_back(phi_hat(trace.iterations.back()));
  }
  trace.terminated = true;
  return trace;
}

ClaimStarReport verify_claim_star(const Edge& e) {
  if (e.in_tree()) {
    throw precondition_error("verify_claim_star expects an edge off the tree");
  }
  ClaimStarReport rep;
  rep.edge = e;
  rep.edge_weight = weight(e);
  rep.case_two = (e.label == Gen::y && e.source.i(0) > 2) ||
                 (e.label == Gen::Y && e.source.i(0) > 3);
  std::size_t named_seen = 0;
  bool all_ok = true;
  std::size_t index = 0;
  for (const Edge& sub : phi(e).edges()) {
    ClaimStarEdgeCheck chk;
    chk.index = index++;
    chk.label = sub.label;
    chk.tree = sub.in_tree();
    chk.edge_weight = chk.tree ? Int(0) : weight(sub);
    chk.ok = chk.tree || chk.edge_weight < rep.edge_weight;
    all_ok = all_ok && chk.ok;
    if (rep.case_two && (sub.label == Gen::y || sub.label == Gen::Y)) {
      ++named_seen;
      if (chk.tree || chk.edge_weight >= rep.edge_weight) {
        rep.named_edges_ok = false;
      }
    }
    rep.checks.push_back(chk);
  }
  if (rep.case_two && named_seen != 3) rep.named_edges_ok = false;
  rep.passed = all_ok && rep.named_edges_ok;
  return rep;
}

namespace {

std::string edge_key(const NormalForm& source, Gen label) {
  std::string k = source.str();
  k.push_back('\x01');
  k.push_back(gen_char(label));
  return k;
}

}  // namespace

std::size_t FlowDepthCache::depth(const Edge& e) {
  return depth_of(e.source, e.label);
}

std::size_t FlowDepthCache::depth_of(const NormalForm& source, Gen label) {
  if (in_tree(source, label)) return 0;
  const std::string key = edge_key(source, label);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  const Edge e{source, label};
  std::size_t worst = 0;
  for (const Edge& sub : phi(e).edges()) {
    worst = std::max(worst, depth_of(sub.source, sub.label));
  }
  const std::size_t d = 1 + worst;
  memo_.emplace(key, d);
  memo_.emplace(edge_key(e.target(), inv(label)), d);
  return d;
}

}  // namespace fstack
