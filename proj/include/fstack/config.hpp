#pragma once

#include <cstddef>

namespace fstack {

/// Runtime budgets.  Each can be overridden through an environment variable;
/// the value is read once on first use.
///
///   FSTACK_MAX_LETTERS        cap on intermediate word length (default 10^6)
///   FSTACK_MAX_REWRITE_STEPS  cap on prefix-rewriting steps   (default 10^5)
///   FSTACK_MAX_FLOW_ITERS     cap on flow iterations          (default 10^4)
namespace config {

std::size_t max_letters();
std::size_t max_rewrite_steps();
std::size_t max_flow_iterations();

}  // namespace config
}  // namespace fstack
