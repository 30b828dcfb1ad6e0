#include "fstack/normal_form.hpp"

#include <cassert>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "fstack/config.hpp"
#include "fstack/errors.hpp"

namespace fstack {

namespace {

std::size_t effective_cap(std::size_t cap) {
  return cap == 0 ? config::max_letters() : cap;
}

bool is_y_type(Gen g) { return g == Gen::y || g == Gen::Y; }

}  // namespace

NormalForm::NormalForm() : exps_{Int(0)} {}

NormalForm::NormalForm(std::vector<Int> exponents, std::vector<int> signs)
    : exps_(std::move(exponents)), signs_(std::move(signs)) {
  if (exps_.size() != signs_.size() + 1) {
    throw std::invalid_argument(
        "normal form needs exactly one more exponent than signs");
  }
  const std::size_t n = signs_.size();
  for (int s : signs_) {
    if (s != 1 && s != -1) {
      throw std::invalid_argument("normal form signs must be +1 or -1");
    }
  }
  for (std::size_t j = 1; j + 1 <= n; ++j) {
    const Int& ij = i(j);
    const int ej = eps(j);
    if (ij == 0 && ej != eps(j + 1)) {
      throw std::invalid_argument("normal form violated: i_j = 0 needs equal "
                                  "neighbouring signs");
    }
    if (ej == 1 && ij > 0) {
      throw std::invalid_argument("normal form violated: e_j = +1 needs i_j <= 0");
    }
    if (ej == -1 && ij > 1) {
      throw std::invalid_argument("normal form violated: e_j = -1 needs i_j <= 1");
    }
  }
}

RunWord NormalForm::to_runs() const {
  RunWord runs;
  auto push = [&runs](char base, const Int& e) {
    if (e == 0) return;
    if (!runs.empty() && runs.back().base == base) {
      runs.back().exponent += e;
      if (runs.back().exponent == 0) runs.pop_back();
      return;
    }
    runs.push_back(Run{base, e});
  };
  const std::size_t nn = n();
  for (std::size_t k = nn + 1; k-- > 0;) {
    push('x', i(k));
    if (k >= 1) push('y', Int(eps(k)));
  }
  return runs;
}

Word NormalForm::to_word() const { return runs_to_word(to_runs()); }

std::string NormalForm::str() const { return print_runs(to_runs()); }

bool is_normal_form(const Word& w) {
  if (!is_freely_reduced(w)) return false;
  std::size_t xrun = 0;    // length of the positive-x run ending just before here
  bool after_y = false;    // is that run immediately preceded by y^{+-1}?
  for (Gen g : w) {
    switch (g) {
      case Gen::x:
        ++xrun;
        break;
      case Gen::X:
        xrun = 0;
        after_y = false;
        break;
      case Gen::y:
        if (after_y && xrun >= 1) return false;
        xrun = 0;
        after_y = true;
        break;
      case Gen::Y:
        if (after_y && xrun >= 2) return false;
        xrun = 0;
        after_y = true;
        break;
    }
  }
  return true;
}

namespace {

void apply_redex(Word& w, const SigmaRedex& r) {
  Word repl;
  const Gen head = w[r.start];  // the y^e starting the factor (y rules only)
  switch (r.rule) {
    case DerivationStep::Rule::free_reduction:
      break;
    case DerivationStep::Rule::y_rule: {
      const std::size_t i = r.size;
      repl.reserve(3 * i + 4);
      repl.insert(repl.end(), i, Gen::x);
      repl.push_back(Gen::y);
      repl.insert(repl.end(), i + 1, Gen::X);
      repl.push_back(head);
      repl.insert(repl.end(), i + 1, Gen::x);
      break;
    }
    case DerivationStep::Rule::y_inv_rule: {
      const std::size_t i = r.size;
      repl.reserve(3 * i + 3);
      repl.insert(repl.end(), i + 1, Gen::x);
      repl.push_back(Gen::Y);
      repl.insert(repl.end(), i, Gen::X);
      repl.push_back(head);
      repl.insert(repl.end(), i, Gen::x);
      break;
    }
  }
  w.erase(w.begin() + static_cast<std::ptrdiff_t>(r.start),
          w.begin() + static_cast<std::ptrdiff_t>(r.end + 1));
  w.insert(w.begin() + static_cast<std::ptrdiff_t>(r.start), repl.begin(),
           repl.end());
}

Word normalize_loop(Word w, std::size_t cap, Derivation* record) {
  std::size_t min_end = 1;
  while (auto r = find_sigma_redex(w, min_end)) {
    DerivationStep step;
    if (record != nullptr) {
      step.rule = r->rule;
      step.size = Int(r->size);
      step.position = r->start;
      step.before = w;
    }
    apply_redex(w, *r);
    if (w.size() > cap) {
      std::ostringstream msg;
      msg << "rewriting exceeded the cap of " << cap << " letters";
      throw resource_limit_error(msg.str());
    }
    if (record != nullptr) {
      step.after = w;
      record->steps.push_back(std::move(step));
    }
    min_end = std::max<std::size_t>(r->start, 1);
  }
  return w;
}

}  // namespace

std::optional<SigmaRedex> find_sigma_redex(const Word& w, std::size_t min_end) {
  if (w.size() < 2) return std::nullopt;
  for (std::size_t e = std::max<std::size_t>(min_end, 1); e < w.size(); ++e) {
    if (w[e] == inv(w[e - 1])) {
      return SigmaRedex{DerivationStep::Rule::free_reduction, e - 1, e, 0};
    }
    if (!is_y_type(w[e])) continue;
    std::size_t run = 0;
    while (run < e && w[e - 1 - run] == Gen::x) ++run;
    if (run == 0 || run >= e || !is_y_type(w[e - 1 - run])) continue;
    if (w[e] == Gen::y) {
      return SigmaRedex{DerivationStep::Rule::y_rule, e - 1 - run, e, run};
    }
    if (run >= 2) {
      return SigmaRedex{DerivationStep::Rule::y_inv_rule, e - 1 - run, e, run - 1};
    }
  }
  return std::nullopt;
}

Word apply_sigma_redex(Word w, const SigmaRedex& r) {
  apply_redex(w, r);
  return w;
}

std::pair<NormalForm, Derivation> sigma_normalize(const Word& w,
                                                  std::size_t letter_cap) {
  Derivation d;
  Word out = normalize_loop(w, effective_cap(letter_cap), &d);
  return {normal_form_from_word(out), std::move(d)};
}

Word sigma_normalize_word(Word w, std::size_t letter_cap) {
  return normalize_loop(std::move(w), effective_cap(letter_cap), nullptr);
}

NormalForm normal_form_from_word(const Word& w) {
  if (!is_normal_form(w)) {
    throw std::invalid_argument("word is not in normal form: " + print_word(w));
  }
  std::vector<Int> exps;
  std::vector<int> signs;
  for (const Run& r : to_runs(w)) {
    if (r.base == 'x') {
      exps.push_back(r.exponent);
    } else {
      const int sign = r.exponent > 0 ? 1 : -1;
      for (Int c = abs(r.exponent); c > 0; --c) {
        if (exps.size() == signs.size()) exps.push_back(Int(0));
        signs.push_back(sign);
      }
    }
  }
  if (exps.size() == signs.size()) exps.push_back(Int(0));
  return NormalForm(std::move(exps), std::move(signs));
}

ExponentProfile profile(const NormalForm& nf) {
  const std::size_t n = nf.n();
  std::vector<Int> s_math(n + 1);
  Int acc = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    acc += nf.i(k);
    s_math[k] = acc;
  }
  ExponentProfile p;
  p.m = n;
  p.m_prime = n;
  for (std::size_t k = 0; k <= n; ++k) {
    if (s_math[k] <= 0) {
      p.m = k;
      break;
    }
  }
  for (std::size_t k = 0; k <= n; ++k) {
    if (s_math[k] <= 1) {
      p.m_prime = k;
      break;
    }
  }
  p.s.assign(s_math.rbegin(), s_math.rend());
  return p;
}

bool in_tree(const NormalForm& nf, Gen g) {
  if (g == Gen::x || g == Gen::X) return true;
  if (nf.n() == 0) return true;
  const Int& i0 = nf.i(0);
  return g == Gen::y ? i0 < 1 : i0 < 2;
}

NormalForm multiply_y(const NormalForm& nf, int b) {
  if (b != 1 && b != -1) {
    throw std::invalid_argument("multiply_y expects b = +1 or b = -1");
  }
  if (in_tree(nf, b == 1 ? Gen::y : Gen::Y)) {
    throw precondition_error(
        "multiply_y handles only edges off the tree; append instead");
  }
  const std::size_t n = nf.n();
  // Math-order copies: iv[k] = i_k, ev[k] = e_{k+1}, sv[k] = s_k.
  std::vector<Int> iv(n + 1), sv(n + 1);
  std::vector<int> ev(n);
  {
    Int acc = 0;
    for (std::size_t k = 0; k <= n; ++k) {
      iv[k] = nf.i(k);
      acc += iv[k];
      sv[k] = acc;
      if (k >= 1) ev[k - 1] = nf.eps(k);
    }
  }
  const Int bound = b == 1 ? Int(0) : Int(1);
  std::size_t m = n;
  for (std::size_t k = 0; k <= n; ++k) {
    if (sv[k] <= bound) {
      m = k;
      break;
    }
  }
  // Off the tree s_0 = i_0 exceeds the bound, so m >= 1.
  const bool cancels = m < n && sv[m] == 0 && ev[m] == -b;

  std::vector<Int> j;
  std::vector<int> e2;
  j.push_back(iv[0] + b);
  for (std::size_t k = 1; k + 1 <= m; ++k) j.push_back(iv[k]);
  e2.insert(e2.end(), ev.begin(), ev.begin() + static_cast<std::ptrdiff_t>(m));
  if (!cancels) {
    j.push_back(-sv[m - 1] - b);
    j.push_back(sv[m]);
    for (std::size_t k = m + 1; k <= n; ++k) j.push_back(iv[k]);
    e2.push_back(b);
    e2.insert(e2.end(), ev.begin() + static_cast<std::ptrdiff_t>(m), ev.end());
  } else {
    j.push_back(iv[m + 1] + iv[m] - b);
    for (std::size_t k = m + 2; k <= n; ++k) j.push_back(iv[k]);
    e2.insert(e2.end(), ev.begin() + static_cast<std::ptrdiff_t>(m + 1),
              ev.end());
  }
  std::vector<Int> exps(j.rbegin(), j.rend());
  std::vector<int> signs(e2.rbegin(), e2.rend());
  return NormalForm(std::move(exps), std::move(signs));
}

NormalForm multiply(const NormalForm& nf, Gen g) {
  std::vector<Int> exps = nf.exponents();
  std::vector<int> signs = nf.signs();
  switch (g) {
    case Gen::x:
      exps.back() += 1;
      return NormalForm(std::move(exps), std::move(signs));
    case Gen::X:
      exps.back() -= 1;
      return NormalForm(std::move(exps), std::move(signs));
    case Gen::y:
    case Gen::Y: {
      const int b = g == Gen::y ? 1 : -1;
      if (!in_tree(nf, g)) return multiply_y(nf, b);
      if (nf.n() >= 1 && nf.i(0) == 0 && nf.eps(1) == -b) {
        exps.pop_back();  // merge x^{i_1} y^{e_1} y^{-e_1} into x^{i_1}
        signs.pop_back();
        return NormalForm(std::move(exps), std::move(signs));
      }
      exps.push_back(Int(0));
      signs.push_back(b);
      return NormalForm(std::move(exps), std::move(signs));
    }
  }
  throw std::logic_error("unreachable generator");
}

NormalForm normalize_by_multiplication(const Word& w) {
  NormalForm acc;
  for (Gen g : w) acc = multiply(acc, g);
  return acc;
}

}  // namespace fstack
