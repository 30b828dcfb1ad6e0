// Compares the OpenMP-parallel verification sweeps against the serial
// reference implementation on a few representative workloads.

#include <chrono>
#include <cstddef>
#include <iomanip>
#include <iostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "fstack/verify.hpp"

namespace {

using fstack::verify::SuiteResult;

double run_timed(const std::string& name, std::size_t max_len, bool parallel,
                 std::size_t* checked) {
  const auto begin = std::chrono::steady_clock::now();
  const SuiteResult r = fstack::verify::run_suite(name, max_len, parallel);
  const auto end = std::chrono::steady_clock::now();
  if (!r.passed) std::cerr << "warning: " << name << " reported failures\n";
  *checked = r.checked;
  return std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(end - begin)
      .count();
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::cout << "OpenMP enabled, max threads = " << omp_get_max_threads() << "\n";
#else
  std::cout << "OpenMP disabled; both columns run the serial implementation\n";
#endif
  std::cout << std::left << std::setw(18) << "suite" << std::right << std::setw(8) << "scope"
            << std::setw(12) << "checks" << std::setw(12) << "serial" << std::setw(12)
            << "parallel" << std::setw(10) << "speedup" << '\n';

  const struct {
    const char* name;
    std::size_t max_len;
  } workloads[] = {
      {"normalization", 8},
      {"sigma-symmetry", 9},
      {"claim-star", 9},
      {"regularity", 10},
      {"diagrams", 7},
  };

  // Warm up the lazily built rule tables and automata so the one-time
  // construction cost does not land in the first timed column.
  for (const auto& w : workloads) {
    std::size_t ignored = 0;
    (void)run_timed(w.name, 4, false, &ignored);
  }

  for (const auto& w : workloads) {
    std::size_t checked_serial = 0;
    std::size_t checked_parallel = 0;
    const double ser = run_timed(w.name, w.max_len, false, &checked_serial);
    const double par = run_timed(w.name, w.max_len, true, &checked_parallel);
    std::cout << std::left << std::setw(18) << w.name << std::right << std::setw(8) << w.max_len
              << std::setw(12) << checked_serial << std::setw(10) << std::fixed
              << std::setprecision(1) << ser << "ms" << std::setw(10) << par << "ms"
              << std::setw(9) << std::setprecision(2) << (par > 0 ? ser / par : 0.0) << 'x'
              << '\n';
    if (checked_serial != checked_parallel) {
      std::cerr << "warning: serial and parallel disagree on the number of checks\n";
    }
  }
  return 0;
}
