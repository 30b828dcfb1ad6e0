#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fstack/integer.hpp"
#include "fstack/word.hpp"

namespace fstack {

/// A word in the normal-form language N, i.e. of the shape
///
///   x^{i_n} y^{e_n} x^{i_{n-1}} y^{e_{n-1}} ... x^{i_1} y^{e_1} x^{i_0}
///
/// subject to, for 1 <= j <= n-1:
///   - i_j = 0 implies e_j = e_{j+1}   (the word is freely reduced),
///   - e_j = +1 implies i_j <= 0,
///   - e_j = -1 implies i_j <= 1.
///
/// Stored run-length: the exponent vector i_n..i_0 and the sign vector
/// e_n..e_1, never as flat letters.
class NormalForm {
 public:
  /// The identity element (empty word).
  NormalForm();

  /// Constructs from the vectors in display order (i_n..i_0 and e_n..e_1).
  /// Throws std::invalid_argument if the shape or the three conditions above
  /// are violated.
  NormalForm(std::vector<Int> exponents, std::vector<int> signs);

  /// Number n of y^{+-1} letters.
  std::size_t n() const { return signs_.size(); }

  /// Exponent i_k and sign e_k by their subscript (i: 0..n, e: 1..n).
  const Int& i(std::size_t k) const { return exps_[n() - k]; }
  int eps(std::size_t k) const { return signs_[n() - k]; }

  /// The stored vectors in display order, i_n..i_0 and e_n..e_1.
  const std::vector<Int>& exponents() const { return exps_; }
  const std::vector<int>& signs() const { return signs_; }

  /// The underlying word, one letter at a time (may be large).
  Word to_word() const;
  /// Canonical printed form (run-length, safe for huge exponents).
  std::string str() const;
  RunWord to_runs() const;

  bool operator==(const NormalForm& o) const {
    return exps_ == o.exps_ && signs_ == o.signs_;
  }
  bool operator!=(const NormalForm& o) const { return !(*this == o); }

 private:
  std::vector<Int> exps_;   // i_n .. i_0  (size n+1)
  std::vector<int> signs_;  // e_n .. e_1  (size n)
};

/// Cumulative x-exponents s_k = i_k + ... + i_0 with the two cutoffs.  The
/// vector is stored in display order (s_n, ..., s_0) and always has at least
/// one entry: s(empty) = (0).
struct ExponentProfile {
  std::vector<Int> s;      // s_n .. s_0
  std::size_t m;           // min{k | s_k <= 0}, or n if no such k
  std::size_t m_prime;     // min{k | s_k <= 1}, or n if no such k

  const Int& s_k(std::size_t k) const { return s[s.size() - 1 - k]; }
};

/// One rewriting step: either a free reduction a a^-1 -> (empty), the
/// y-rule of size i
///   y^e x^i y   ->  x^i y x^{-i-1} y^e x^{i+1}     (i >= 1),
/// or the y^-1-rule of size i
///   y^e x^{i+1} y^-1 -> x^{i+1} y^-1 x^{-i} y^e x^i  (i >= 1).
struct DerivationStep {
  enum class Rule { free_reduction, y_rule, y_inv_rule };
  Rule rule;
  Int size;          // rule size i; 0 for free reductions
  std::size_t position;  // index of the first letter of the replaced factor
  Word before;
  Word after;
};

/// A derivation: the sequence of steps taken by sigma_normalize.
struct Derivation {
  std::vector<DerivationStep> steps;
};

/// True iff w contains no factor a a^-1, no y^e x^i y with i >= 1 and no
/// y^e x^{i+1} y^-1 with i >= 1; these are exactly the members of N.
bool is_normal_form(const Word& w);

/// A rewritable factor inside a word: which rule applies, the inclusive
/// letter range [start, end] it occupies, and the rule size i (0 for free
/// reductions).
struct SigmaRedex {
  DerivationStep::Rule rule;
  std::size_t start;
  std::size_t end;
  std::size_t size;
};

/// Finds the rewritable factor whose end position is smallest but at least
/// `min_end`, if any; at most one rule matches a given end position, so the
/// result is the unique next step of the rewriting strategy.
std::optional<SigmaRedex> find_sigma_redex(const Word& w, std::size_t min_end = 1);

/// Applies one rewriting step and returns the resulting word.
Word apply_sigma_redex(Word w, const SigmaRedex& r);

/// Rewrites w to its normal form, applying at each step the rule whose
/// replaced factor ends earliest (the shortest rewritable prefix); at most
/// one rule matches any given end position, so the strategy is
/// deterministic.  `letter_cap` bounds intermediate word length (0 means the
/// configured default, 10^6); exceeding it throws resource_limit_error.
std::pair<NormalForm, Derivation> sigma_normalize(const Word& w,
                                                  std::size_t letter_cap = 0);

/// Same rewriting, without recording steps.
Word sigma_normalize_word(Word w, std::size_t letter_cap = 0);

/// Cumulative x-exponents and cutoffs of a normal form.
ExponentProfile profile(const NormalForm& nf);

/// True iff the edge from `nf` labeled `g` lies on the normal-form tree,
/// i.e. the free reduction of nf*g is itself in N.  Equivalently: edges
/// labeled x^{+-1} always do; an edge labeled y does not iff n >= 1 and
/// i_0 >= 1; an edge labeled y^-1 does not iff n >= 1 and i_0 >= 2.
bool in_tree(const NormalForm& nf, Gen g);

/// Closed-form multiplication by y (b = +1) or y^-1 (b = -1) across an edge
/// that is NOT on the tree.  Dispatches between the no-cancellation and the
/// cancellation case:
///   b = +1: cancellation iff m < n, s_m = 0 and e_{m+1} = -1;
///   b = -1: cancellation iff m' < n, s_{m'} = 0 and e_{m'+1} = +1.
/// Throws precondition_error when the edge is on the tree (callers must then
/// simply append the letter and freely reduce).
NormalForm multiply_y(const NormalForm& nf, int b);

/// nf(gamma * g) for any generator: appends and freely reduces in the tree
/// cases, and delegates to multiply_y otherwise.
NormalForm multiply(const NormalForm& nf, Gen g);

/// Left-to-right fold of `multiply` over the letters of w.
NormalForm normalize_by_multiplication(const Word& w);

/// Builds a NormalForm from a word already in N (throws
/// std::invalid_argument otherwise).
NormalForm normal_form_from_word(const Word& w);

}  // namespace fstack
