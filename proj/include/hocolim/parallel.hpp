#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <string>
#include <vector>

namespace hocolim {

struct CaseOutcome {
  bool passed = false;
  std::string message;  // empty on success

  bool operator==(const CaseOutcome&) const = default;
};

using CaseFn = std::function<CaseOutcome(std::size_t)>;

namespace detail {
inline CaseOutcome run_guarded(const CaseFn& fn, std::size_t k)
{
  try {
    return fn(k);
  } catch (const std::exception& e) {
    return {false, std::string("exception: ") + e.what()};
  }
}
}  // namespace detail

/// Reference loop.
inline std::vector<CaseOutcome> run_cases_serial(std::size_t n, const CaseFn& fn)
{
  std::vector<CaseOutcome> out(n);
  for (std::size_t k = 0; k < n; ++k)
    out[k] = detail::run_guarded(fn, k);
  return out;
}

/// Same results as run_cases_serial; fn must not touch shared mutable state.
inline std::vector<CaseOutcome> run_cases_parallel(std::size_t n, const CaseFn& fn)
{
  std::vector<CaseOutcome> out(n);
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (long k = 0; k < count; ++k)
    out[k] = detail::run_guarded(fn, static_cast<std::size_t>(k));
  return out;
}

inline std::vector<CaseOutcome> run_cases(std::size_t n, const CaseFn& fn, bool parallel)
{
  return parallel ? run_cases_parallel(n, fn) : run_cases_serial(n, fn);
}

}  // namespace hocolim
