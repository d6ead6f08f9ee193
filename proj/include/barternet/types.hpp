#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace barternet {

// Agents carry dense ids 1..n; the organizer is vertex 0 and owns no good.
// Good g_i is owned by agent i, so the two id spaces coincide.
using AgentId = int;
using GoodId = int;

inline constexpr AgentId kOrganizer = 0;

inline GoodId good_of(AgentId owner) { return owner; }
inline AgentId owner_of(GoodId good) { return good; }

/// A scenario file could not be parsed; the message carries "origin:line".
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An exhaustive enumeration would exceed its configured cap.
struct CapExceededError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An instance is too large for an exhaustive scan (and no sampled mode applies).
struct SizeGuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

// Small sorted-vector set helpers; all public id collections are kept sorted
// and duplicate-free so results are deterministic and comparable.

inline bool sorted_contains(const std::vector<int>& v, int x) {
  return std::binary_search(v.begin(), v.end(), x);
}

inline void sorted_insert(std::vector<int>& v, int x) {
  auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it == v.end() || *it != x) v.insert(it, x);
}

inline void sorted_erase(std::vector<int>& v, int x) {
  auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it != v.end() && *it == x) v.erase(it);
}

inline std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

inline std::vector<int> sorted_intersection(const std::vector<int>& a,
                                            const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

inline std::vector<int> sorted_union(const std::vector<int>& a,
                                     const std::vector<int>& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

inline std::vector<int> sorted_difference(const std::vector<int>& a,
                                          const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

inline std::string join_ids(const std::vector<int>& v, const char* sep = " ") {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += sep;
    out += std::to_string(v[k]);
  }
  return out;
}

}  // namespace detail

}  // namespace barternet
