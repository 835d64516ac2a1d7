#pragma once

#include <cassert>
#include <cstdint>
#include <numeric>
#include <vector>

namespace bcast {

/// Binary informed-indicator vector over the nodes of a network.
/// A node that is informed stays informed (the process is monotone).
struct NetworkState {
  std::vector<std::uint8_t> x;

  int n() const { return static_cast<int>(x.size()); }

  bool informed(int i) const { return x[static_cast<std::size_t>(i)] != 0; }

  int informed_count() const {
    return std::accumulate(x.begin(), x.end(), 0,
                           [](int a, std::uint8_t b) { return a + (b ? 1 : 0); });
  }

  bool all_informed() const { return informed_count() == n(); }

  /// Bitmask encoding (bit i set <=> node i informed); requires n <= 32.
  std::uint32_t mask() const {
    assert(n() <= 32);
    std::uint32_t m = 0;
    for (int i = 0; i < n(); ++i) {
      if (x[static_cast<std::size_t>(i)]) m |= (1u << i);
    }
    return m;
  }

  static NetworkState none_informed(int n) {
    NetworkState s;
    s.x.assign(static_cast<std::size_t>(n), 0);
    return s;
  }

  static NetworkState single_seed(int n, int root) {
    NetworkState s = none_informed(n);
    s.x[static_cast<std::size_t>(root)] = 1;
    return s;
  }

  static NetworkState from_mask(int n, std::uint32_t m) {
    NetworkState s = none_informed(n);
    for (int i = 0; i < n; ++i) {
      if (m & (1u << i)) s.x[static_cast<std::size_t>(i)] = 1;
    }
    return s;
  }
};

}  // namespace bcast
