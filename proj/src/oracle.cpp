#include "fstack/oracle.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fstack {
namespace oracle {

void Dyadic::normalize() {
  if (num_.is_zero()) {
    exp_ = 0;
    return;
  }
  while (exp_ > 0 && (num_ & 1) == 0) {
    num_ >>= 1;
    --exp_;
  }
}

Dyadic Dyadic::operator+(const Dyadic& o) const {
  unsigned e = std::max(exp_, o.exp_);
  Int a = num_ << (e - exp_);
  Int b = o.num_ << (e - o.exp_);
  return Dyadic(a + b, e);
}

Dyadic Dyadic::operator-(const Dyadic& o) const { return *this + (-o); }

Dyadic Dyadic::operator*(const Dyadic& o) const {
  return Dyadic(num_ * o.num_, exp_ + o.exp_);
}

Dyadic Dyadic::scale_pow2(long k) const {
  if (num_.is_zero()) return Dyadic();
  if (k >= 0) return Dyadic(num_ << k, exp_);
  long drop = -k;
  return Dyadic(num_, exp_ + static_cast<unsigned>(drop));
}

bool Dyadic::operator<(const Dyadic& o) const {
  unsigned e = std::max(exp_, o.exp_);
  return (num_ << (e - exp_)) < (o.num_ << (e - o.exp_));
}

std::string Dyadic::str() const {
  std::ostringstream os;
  os << num_.str();
  if (exp_ > 0) {
    Int den = Int(1) << exp_;
    os << '/' << den.str();
  }
  return os.str();
}

namespace {

/// Prunes interior breakpoints that are collinear with their neighbours.
std::vector<PLMap::Point> prune(std::vector<PLMap::Point> pts) {
  std::vector<PLMap::Point> out;
  out.reserve(pts.size());
  for (const auto& p : pts) {
    while (out.size() >= 2) {
      const auto& a = out[out.size() - 2];
      const auto& b = out.back();
      // b lies on segment [a, p]  <=>  (b.y-a.y)*(p.x-a.x) == (p.y-a.y)*(b.x-a.x)
      if ((b.second - a.second) * (p.first - a.first) ==
          (p.second - a.second) * (b.first - a.first)) {
        out.pop_back();
      } else {
        break;
      }
    }
    out.push_back(p);
  }
  return out;
}

void check_endpoints(const std::vector<PLMap::Point>& pts) {
  if (pts.size() < 2 || !pts.front().first.is_zero() || !pts.front().second.is_zero() ||
      pts.back().first != Dyadic(1) || pts.back().second != Dyadic(1)) {
    throw std::invalid_argument("PL map must run from (0,0) to (1,1)");
  }
  for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
    if (!(pts[k].first < pts[k + 1].first) || !(pts[k].second < pts[k + 1].second)) {
      throw std::invalid_argument("PL map breakpoints must be strictly increasing");
    }
  }
}

/// The slope between two breakpoints as the exponent k of a power 2^k.
/// Throws if the slope is not an exact power of 2 (a violated invariant).
long slope_exponent(const PLMap::Point& a, const PLMap::Point& b) {
  Dyadic dy = b.second - a.second;
  Dyadic dx = b.first - a.first;
  // Both numerators are odd in canonical form, so dy/dx is a power of 2
  // exactly when the numerators agree.
  if (dy.numerator() != dx.numerator()) {
    throw std::logic_error("PL segment slope is not a power of 2");
  }
  return static_cast<long>(dx.exponent()) - static_cast<long>(dy.exponent());
}

}  // namespace

PLMap::PLMap() : pts_{{Dyadic(0), Dyadic(0)}, {Dyadic(1), Dyadic(1)}} {}

PLMap::PLMap(std::vector<Point> breakpoints) : pts_(prune(std::move(breakpoints))) {
  check_endpoints(pts_);
}

Dyadic PLMap::operator()(const Dyadic& t) const {
  if (t < pts_.front().first || pts_.back().first < t) {
    throw std::invalid_argument("PL map evaluated outside [0,1]");
  }
  for (std::size_t k = 0; k + 1 < pts_.size(); ++k) {
    const Point& a = pts_[k];
    const Point& b = pts_[k + 1];
    if (t == a.first) return a.second;
    if (t < b.first || t == b.first) {
      if (t == b.first) return b.second;
      long s = slope_exponent(a, b);
      return a.second + (t - a.first).scale_pow2(s);
    }
  }
  return pts_.back().second;
}

bool PLMap::is_identity() const {
  return pts_.size() == 2;  // endpoints are fixed, so two points means t -> t
}

PLMap identity_map() { return PLMap(); }

PLMap inverse(const PLMap& m) {
  std::vector<PLMap::Point> pts;
  pts.reserve(m.breakpoints().size());
  for (const auto& p : m.breakpoints()) pts.emplace_back(p.second, p.first);
  return PLMap(std::move(pts));
}

PLMap compose(const PLMap& f, const PLMap& g) {
  // Breakpoints of t -> f(g(t)): where g breaks, plus the preimages under g
  // of where f breaks.
  std::set<std::pair<Int, Int>> keys;  // (aligned numerator, exponent) for ordering
  std::vector<Dyadic> xs;
  auto add = [&](const Dyadic& d) {
    auto key = std::make_pair(d.numerator(), Int(d.exponent()));
    if (keys.insert(key).second) xs.push_back(d);
  };
  for (const auto& p : g.breakpoints()) add(p.first);
  PLMap ginv = inverse(g);
  for (const auto& p : f.breakpoints()) add(ginv(p.first));
  std::sort(xs.begin(), xs.end());
  std::vector<PLMap::Point> pts;
  pts.reserve(xs.size());
  for (const Dyadic& t : xs) pts.emplace_back(t, f(g(t)));
  return PLMap(std::move(pts));
}

PLMap generator_map(Gen g) {
  static const PLMap xmap(std::vector<PLMap::Point>{
      {Dyadic(0), Dyadic(0)},
      {Dyadic(1, 1), Dyadic(1, 2)},
      {Dyadic(3, 2), Dyadic(1, 1)},
      {Dyadic(1), Dyadic(1)},
  });
  static const PLMap ymap(std::vector<PLMap::Point>{
      {Dyadic(0), Dyadic(0)},
      {Dyadic(1, 1), Dyadic(1, 1)},
      {Dyadic(3, 2), Dyadic(5, 3)},
      {Dyadic(7, 3), Dyadic(3, 2)},
      {Dyadic(1), Dyadic(1)},
  });
  switch (g) {
    case Gen::x: return xmap;
    case Gen::X: return inverse(xmap);
    case Gen::y: return ymap;
    case Gen::Y: return inverse(ymap);
  }
  throw std::logic_error("generator_map: bad generator");
}

namespace {

PLMap evaluate_unchecked(const Word& w) {
  PLMap m;
  for (Gen g : w) m = compose(m, generator_map(g));
  return m;
}

void validate_convention() {
  static std::once_flag flag;
  std::call_once(flag, [] {
    for (const Word& r : {relator_r1(), relator_r2()}) {
      if (!evaluate_unchecked(r).is_identity()) {
        throw std::logic_error(
            "oracle convention check failed: a defining relator does not "
            "evaluate to the identity map");
      }
    }
  });
}

}  // namespace

PLMap evaluate(const Word& w) {
  validate_convention();
  return evaluate_unchecked(w);
}

bool equal(const PLMap& a, const PLMap& b) { return a == b; }

}  // namespace oracle
}  // namespace fstack
