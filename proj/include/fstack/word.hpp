#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fstack/integer.hpp"

namespace fstack {

/// Generator alphabet of Thompson's group F: x, y and their inverses.
/// The numeric values are chosen so that `inv` is a single bit flip.
enum class Gen : std::uint8_t { x = 0, X = 1, y = 2, Y = 3 };

constexpr Gen inv(Gen g) { return static_cast<Gen>(static_cast<std::uint8_t>(g) ^ 1u); }
constexpr bool is_positive(Gen g) { return (static_cast<std::uint8_t>(g) & 1u) == 0; }
constexpr char base_char(Gen g) { return static_cast<std::uint8_t>(g) < 2 ? 'x' : 'y'; }
constexpr int gen_index(Gen g) { return static_cast<int>(g); }
char gen_char(Gen g);                  // one of 'x','X','y','Y'
std::string gen_name(Gen g);           // canonical form: "x", "x^-1", "y", "y^-1"
Gen gen_from_char(char c);             // throws std::invalid_argument on anything else

/// A word over the generators, stored one letter at a time.
using Word = std::vector<Gen>;

/// Run-length form of a word: maximal runs of the same base letter with a
/// signed arbitrary-precision exponent (never zero, adjacent bases distinct).
struct Run {
  char base;  // 'x' or 'y'
  Int exponent;
};
using RunWord = std::vector<Run>;

/// Parses the wire format.  Tokens are the letters x, y (generators) and
/// X, Y (their inverses), each optionally followed by `^` and a decimal
/// integer power.  Parenthesised groups `(w)` and commutators `[u,v]`
/// (meaning u^-1 v^-1 u v) are accepted as atoms and may also carry powers.
/// Whitespace is ignored.  Throws std::invalid_argument on malformed input
/// and resource_limit_error if the expansion exceeds the letter budget.
Word parse_word(const std::string& text);

/// Canonical printing: maximal runs are printed as `g` for exponent 1 and
/// `g^k` otherwise, with g a lowercase letter and k a (possibly negative)
/// integer, e.g. x^-2.  The empty word prints as the empty string.
std::string print_word(const Word& w);
std::string print_runs(const RunWord& runs);
RunWord to_runs(const Word& w);

/// Expands a run word into letters.  Throws resource_limit_error if the
/// total length would exceed the letter budget.
Word runs_to_word(const RunWord& runs);

/// Free reduction: repeatedly deletes adjacent inverse pairs.  The result is
/// the unique freely reduced representative.
Word free_reduce(const Word& w);
bool is_freely_reduced(const Word& w);

/// Formal inverse: reverse the word and invert every letter.
Word invert(const Word& w);

/// Concatenation helper.
Word concat(const Word& a, const Word& b);

/// Commutator [u, v] = u^-1 v^-1 u v.
Word commutator(const Word& u, const Word& v);

/// The two defining relators of the finite presentation used throughout:
/// [y, xyx^-2] and [y, x^2yx^-3].
Word relator_r1();
Word relator_r2();

/// True if `w` is a cyclic rotation of `r` or of the inverse of `r`.
bool is_rotation_of_relator(const Word& w, const Word& r);

}  // namespace fstack
