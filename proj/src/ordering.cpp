#include "fstack/ordering.hpp"

#include <sstream>
#include <stdexcept>

#include "fstack/errors.hpp"

namespace fstack {

Int c_seq(const Int& i) {
  if (i <= 0) throw std::domain_error("C(i) is defined for i >= 1 only");
  if (i > 10'000'000) {
    throw resource_limit_error("C(i) overflow guard: i > 10^7");
  }
  const unsigned long n = i.convert_to<unsigned long>();
  Int num = (Int(1) << (n + 1)) - 3;  // 2*2^n - 2(-1)^n - 3, then / 3
  num -= (n % 2 == 0) ? 2 : -2;
  return num / 3;
}

Int c_seq_by_recurrence(unsigned i) {
  if (i == 0) throw std::domain_error("C(i) is defined for i >= 1 only");
  if (i <= 2) return 1;
  Int prev2 = 1, prev1 = 1;
  for (unsigned k = 3; k <= i; ++k) {
    Int cur = prev1 + 2 * prev2 + 2;
    prev2 = prev1;
    prev1 = cur;
  }
  return prev1;
}

SizeSequence size_sequence(const Edge& e) {
  if (e.in_tree()) {
    throw precondition_error("tree edges have no size sequence");
  }
  const ExponentProfile p = profile(e.source);
  SizeSequence out;
  if (e.label == Gen::y) {
    out.reserve(p.m);
    for (std::size_t k = 0; k < p.m; ++k) out.push_back(p.s_k(k));
  } else {
    out.reserve(p.m_prime);
    for (std::size_t k = 0; k < p.m_prime; ++k) out.push_back(p.s_k(k) - 1);
  }
  return out;
}

Int weight(const Edge& e) {
  Int w = 0;
  for (const Int& i : size_sequence(e)) w += c_seq(i);
  return w;
}

bool precedes(const Edge& a, const Edge& b) {
  return weight(a) < weight(b);
}

std::string print_sizes(const SizeSequence& s) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k > 0) os << ", ";
    os << s[k];
  }
  os << ')';
  return os.str();
}

}  // namespace fstack
