#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fstack/integer.hpp"
#include "fstack/word.hpp"

namespace fstack {
namespace oracle {

/// Exact dyadic rational numerator / 2^exponent, kept canonical: the
/// numerator is odd or zero, and zero always has exponent 0.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(long long value) : num_(value) { normalize(); }  // NOLINT(google-explicit-constructor)
  Dyadic(Int numerator, unsigned exponent) : num_(std::move(numerator)), exp_(exponent) {
    normalize();
  }

  const Int& numerator() const { return num_; }
  unsigned exponent() const { return exp_; }

  Dyadic operator+(const Dyadic& o) const;
  Dyadic operator-(const Dyadic& o) const;
  Dyadic operator*(const Dyadic& o) const;
  Dyadic operator-() const { return Dyadic(-num_, exp_); }

  /// Multiplies by 2^k (k may be negative); always exact.
  Dyadic scale_pow2(long k) const;

  bool operator==(const Dyadic& o) const { return num_ == o.num_ && exp_ == o.exp_; }
  bool operator!=(const Dyadic& o) const { return !(*this == o); }
  bool operator<(const Dyadic& o) const;
  bool operator<=(const Dyadic& o) const { return *this < o || *this == o; }

  bool is_zero() const { return num_.is_zero(); }

  /// Reduced fraction, e.g. "3/4"; integers print without a denominator.
  std::string str() const;

 private:
  void normalize();

  Int num_ = 0;
  unsigned exp_ = 0;  // value = num_ / 2^exp_
};

/// An orientation-preserving piecewise linear homeomorphism of [0,1],
/// represented by its breakpoint list from (0,0) to (1,1).  All breakpoints
/// are dyadic and every linear piece has slope an exact power of 2; these
/// invariants are preserved by composition and inversion and are enforced
/// during evaluation.
class PLMap {
 public:
  using Point = std::pair<Dyadic, Dyadic>;

  PLMap();                                      // identity map
  explicit PLMap(std::vector<Point> breakpoints);

  const std::vector<Point>& breakpoints() const { return pts_; }

  Dyadic operator()(const Dyadic& t) const;     // evaluate at t in [0,1]
  bool is_identity() const;

  bool operator==(const PLMap& o) const { return pts_ == o.pts_; }
  bool operator!=(const PLMap& o) const { return !(*this == o); }

 private:
  std::vector<Point> pts_;  // strictly increasing in both coordinates, collinear-pruned
};

/// The PL map of a single generator.
PLMap generator_map(Gen g);

/// Function composition f after g: t -> f(g(t)).
PLMap compose(const PLMap& f, const PLMap& g);

/// Exact inverse homeomorphism.
PLMap inverse(const PLMap& m);

/// Identity map.
PLMap identity_map();

/// Evaluates a word to its PL map by folding the letters left to right:
/// evaluate(c1 c2 ... cn) = c1 o c2 o ... o cn, so the rightmost letter acts
/// on the point first and evaluate(uv) = compose(evaluate(u), evaluate(v)).
/// The first call validates the convention by checking that both defining
/// relators evaluate to the identity map.
PLMap evaluate(const Word& w);

/// Exact equality of maps (canonical breakpoint lists compared).
bool equal(const PLMap& a, const PLMap& b);

}  // namespace oracle
}  // namespace fstack
