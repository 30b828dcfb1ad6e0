#include "fstack/word.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "fstack/config.hpp"
#include "fstack/errors.hpp"

namespace fstack {

namespace config {

namespace {
std::size_t read_env(const char* name, std::size_t fallback) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return fallback;
  char* end = nullptr;
  unsigned long long parsed = std::strtoull(v, &end, 10);
  if (end == v || *end != '\0' || parsed == 0) return fallback;
  return static_cast<std::size_t>(parsed);
}
}  // namespace

std::size_t max_letters() {
  static const std::size_t v = read_env("FSTACK_MAX_LETTERS", 1000000);
  return v;
}
std::size_t max_rewrite_steps() {
  static const std::size_t v = read_env("FSTACK_MAX_REWRITE_STEPS", 100000);
  return v;
}
std::size_t max_flow_iterations() {
  static const std::size_t v = read_env("FSTACK_MAX_FLOW_ITERS", 10000);
  return v;
}

}  // namespace config

char gen_char(Gen g) {
  static constexpr char chars[4] = {'x', 'X', 'y', 'Y'};
  return chars[gen_index(g)];
}

std::string gen_name(Gen g) {
  switch (g) {
    case Gen::x: return "x";
    case Gen::X: return "x^-1";
    case Gen::y: return "y";
    case Gen::Y: return "y^-1";
  }
  throw std::logic_error("gen_name: bad generator");
}

Gen gen_from_char(char c) {
  switch (c) {
    case 'x': return Gen::x;
    case 'X': return Gen::X;
    case 'y': return Gen::y;
    case 'Y': return Gen::Y;
    default:
      throw std::invalid_argument(std::string("not a generator letter: '") + c + "'");
  }
}

namespace {

struct Parser {
  const std::string& text;
  std::size_t pos = 0;

  explicit Parser(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool done() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return text[pos];
  }

  [[noreturn]] void fail(const std::string& msg) const {
    std::ostringstream os;
    os << "parse error at position " << pos << ": " << msg;
    throw std::invalid_argument(os.str());
  }

  long long parse_int() {
    skip_ws();
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits) fail("expected an integer exponent after '^'");
    if (pos - start > 18) fail("exponent too large to expand");
    return std::stoll(text.substr(start, pos - start));
  }

  // Appends `unit` repeated `power` times (inverted when power < 0) to out.
  void append_power(Word& out, const Word& unit, long long power) const {
    Word base = unit;
    if (power < 0) {
      base = invert(unit);
      power = -power;
    }
    if (!base.empty() &&
        static_cast<unsigned long long>(power) > config::max_letters()) {
      throw resource_limit_error("parsed word exceeds the letter budget");
    }
    unsigned long long total =
        static_cast<unsigned long long>(power) * base.size() + out.size();
    if (total > config::max_letters()) {
      throw resource_limit_error("parsed word exceeds the letter budget");
    }
    for (long long k = 0; k < power; ++k) out.insert(out.end(), base.begin(), base.end());
  }

  // word := atom-with-power*   (stops at ')' / ',' / ']' / end)
  Word parse_sequence() {
    Word out;
    while (!done()) {
      char c = peek();
      if (c == ')' || c == ']' || c == ',') break;
      Word atom;
      if (c == '(') {
        ++pos;
        atom = parse_sequence();
        if (done() || peek() != ')') fail("expected ')'");
        ++pos;
      } else if (c == '[') {
        ++pos;
        Word u = parse_sequence();
        if (done() || peek() != ',') fail("expected ',' inside commutator");
        ++pos;
        Word v = parse_sequence();
        if (done() || peek() != ']') fail("expected ']'");
        ++pos;
        atom = commutator(u, v);
      } else {
        atom.push_back(gen_from_char(c));
        ++pos;
      }
      long long power = 1;
      if (!done() && peek() == '^') {
        ++pos;
        power = parse_int();
      }
      append_power(out, atom, power);
    }
    return out;
  }
};

}  // namespace

Word parse_word(const std::string& text) {
  Parser p(text);
  Word w = p.parse_sequence();
  if (!p.done()) p.fail("unexpected character");
  return w;
}

RunWord to_runs(const Word& w) {
  // A run is a maximal block of one letter, so the encoding is faithful even
  // for words that are not freely reduced (x x^-1 stays two runs).
  RunWord runs;
  for (Gen g : w) {
    char base = base_char(g);
    int delta = is_positive(g) ? 1 : -1;
    if (!runs.empty() && runs.back().base == base &&
        (runs.back().exponent > 0) == (delta > 0)) {
      runs.back().exponent += delta;
    } else {
      runs.push_back(Run{base, delta});
    }
  }
  return runs;
}

std::string print_runs(const RunWord& runs) {
  std::ostringstream os;
  for (const Run& r : runs) {
    os << r.base;
    if (r.exponent != 1) os << '^' << r.exponent.str();
  }
  return os.str();
}

std::string print_word(const Word& w) { return print_runs(to_runs(w)); }

Word runs_to_word(const RunWord& runs) {
  Int total = 0;
  for (const Run& r : runs) total += abs(r.exponent);
  if (total > Int(config::max_letters())) {
    throw resource_limit_error("expanded word exceeds the letter budget");
  }
  Word out;
  out.reserve(static_cast<std::size_t>(total));
  for (const Run& r : runs) {
    Gen g;
    if (r.base == 'x') {
      g = r.exponent > 0 ? Gen::x : Gen::X;
    } else {
      g = r.exponent > 0 ? Gen::y : Gen::Y;
    }
    Int n = abs(r.exponent);
    for (Int k = 0; k < n; ++k) out.push_back(g);
  }
  return out;
}

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Gen g : w) {
    if (!out.empty() && out.back() == inv(g)) {
      out.pop_back();
    } else {
      out.push_back(g);
    }
  }
  return out;
}

bool is_freely_reduced(const Word& w) {
  for (std::size_t k = 0; k + 1 < w.size(); ++k) {
    if (w[k + 1] == inv(w[k])) return false;
  }
  return true;
}

Word invert(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inv(*it));
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word commutator(const Word& u, const Word& v) {
  Word out = invert(u);
  Word vi = invert(v);
  out.insert(out.end(), vi.begin(), vi.end());
  out.insert(out.end(), u.begin(), u.end());
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

Word relator_r1() { return parse_word("[y,xyx^-2]"); }
Word relator_r2() { return parse_word("[y,x^2yx^-3]"); }

bool is_rotation_of_relator(const Word& w, const Word& r) {
  for (const Word& base : {r, invert(r)}) {
    if (w.size() != base.size()) continue;
    Word doubled = concat(base, base);
    for (std::size_t off = 0; off < base.size(); ++off) {
      bool match = true;
      for (std::size_t k = 0; k < w.size(); ++k) {
        if (doubled[off + k] != w[k]) {
          match = false;
          break;
        }
      }
      if (match) return true;
    }
  }
  return false;
}

}  // namespace fstack
