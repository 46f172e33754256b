#pragma once

// Shared test fixtures.  The five named lattices below are used throughout
// the suites; op() builds the order dual, which several anti-isomorphism
// checks need.

#include <latdual/core.hpp>

namespace fx {

using latdual::FiniteBoundedLattice;

inline FiniteBoundedLattice two() {
  return latdual::from_covers({"0", "1"}, {{"0", "1"}});
}

inline FiniteBoundedLattice c3() {
  return latdual::from_covers({"0", "m", "1"}, {{"0", "m"}, {"m", "1"}});
}

inline FiniteBoundedLattice b4() {
  return latdual::from_covers({"0", "a", "b", "1"},
                              {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
}

inline FiniteBoundedLattice m3() {
  return latdual::from_covers(
      {"0", "a", "b", "c", "1"},
      {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}});
}

inline FiniteBoundedLattice m4() {
  return latdual::from_covers({"0", "a", "b", "c", "d", "1"},
                              {{"0", "a"},
                               {"0", "b"},
                               {"0", "c"},
                               {"0", "d"},
                               {"a", "1"},
                               {"b", "1"},
                               {"c", "1"},
                               {"d", "1"}});
}

// Pentagon: 0 < c < 1 and 0 < a < b < 1.
inline FiniteBoundedLattice n5() {
  return latdual::from_covers(
      {"0", "a", "b", "c", "1"},
      {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}});
}

inline FiniteBoundedLattice op(const FiniteBoundedLattice& a) {
  FiniteBoundedLattice r = a;
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j)
      r.leq[static_cast<size_t>(i) * a.n + j] = a.leq[static_cast<size_t>(j) * a.n + i];
  std::swap(r.meet_tab, r.join_tab);
  std::swap(r.bottom, r.top);
  return r;
}

}  // namespace fx
