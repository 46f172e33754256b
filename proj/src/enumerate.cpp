#include <latdual/core.hpp>

#include <algorithm>
#include <numeric>
#include <set>

namespace latdual {

std::vector<uint8_t> canonical_order_matrix(const FiniteBoundedLattice& a) {
  int n = a.n;
  std::vector<int> middle;
  for (int i = 0; i < n; ++i)
    if (i != a.bottom && i != a.top) middle.push_back(i);
  std::sort(middle.begin(), middle.end());
  std::vector<uint8_t> best;
  std::vector<int> pos(static_cast<size_t>(n));
  do {
    pos[static_cast<size_t>(a.bottom)] = 0;
    pos[static_cast<size_t>(a.top)] = n - 1;
    for (size_t k = 0; k < middle.size(); ++k)
      pos[static_cast<size_t>(middle[k])] = static_cast<int>(k) + 1;
    std::vector<uint8_t> m(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        m[static_cast<size_t>(pos[static_cast<size_t>(i)]) * n +
          pos[static_cast<size_t>(j)]] = a.leq[static_cast<size_t>(i) * n + j];
    if (best.empty() || m < best) best = std::move(m);
  } while (std::next_permutation(middle.begin(), middle.end()));
  return best;
}

namespace {

// Meet/join existence for a full order matrix (bounds already implied by the
// caller's construction).
bool is_lattice_order(int n, const std::vector<uint8_t>& le) {
  auto at = [&](int i, int j) { return le[static_cast<size_t>(i) * n + j] != 0; };
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      bool have_meet = false, have_join = false;
      for (int z = 0; z < n && !(have_meet && have_join); ++z) {
        if (!have_meet && at(z, x) && at(z, y)) {
          bool greatest = true;
          for (int w = 0; w < n; ++w)
            if (at(w, x) && at(w, y) && !at(w, z)) greatest = false;
          have_meet = greatest;
        }
        if (!have_join && at(x, z) && at(y, z)) {
          bool least = true;
          for (int w = 0; w < n; ++w)
            if (at(x, w) && at(y, w) && !at(z, w)) least = false;
          have_join = least;
        }
      }
      if (!have_meet || !have_join) return false;
    }
  return true;
}

}  // namespace

void enumerate_lattices(int max_n,
                        const std::function<void(const FiniteBoundedLattice&)>& emit) {
  if (max_n > kMaxEnumerationSize)
    throw BoundTooLarge("lattice enumeration capped at " +
                        std::to_string(kMaxEnumerationSize) + " elements");
  for (int n = 1; n <= max_n; ++n) {
    if (n == 1) {
      LabeledPoset p;
      p.n = 1;
      p.leq = {1};
      emit(lattice_of(p));
      continue;
    }
    // Generate triangular order matrices: index 0 is forced least and n-1
    // forced greatest, middle elements only relate upward in index order.
    // Every lattice has a linear extension listing bottom first and top
    // last, so each iso class shows up at least once; the canonical form
    // dedups the rest.
    int k = n - 2;
    std::vector<std::pair<int, int>> slot;
    for (int i = 1; i <= k; ++i)
      for (int j = i + 1; j <= k; ++j) slot.emplace_back(i, j);
    std::set<std::vector<uint8_t>> canon;
    for (uint32_t code = 0; code < (1u << slot.size()); ++code) {
      std::vector<uint8_t> le(static_cast<size_t>(n) * n, 0);
      for (int i = 0; i < n; ++i) {
        le[static_cast<size_t>(i) * n + i] = 1;
        le[static_cast<size_t>(0) * n + i] = 1;
        le[static_cast<size_t>(i) * n + (n - 1)] = 1;
      }
      for (size_t s = 0; s < slot.size(); ++s)
        if (code >> s & 1)
          le[static_cast<size_t>(slot[s].first) * n + slot[s].second] = 1;
      bool transitive = true;
      for (int i = 1; i <= k && transitive; ++i)
        for (int j = 1; j <= k && transitive; ++j)
          for (int m = 1; m <= k && transitive; ++m)
            if (le[static_cast<size_t>(i) * n + j] &&
                le[static_cast<size_t>(j) * n + m] &&
                !le[static_cast<size_t>(i) * n + m])
              transitive = false;
      if (!transitive) continue;
      if (!is_lattice_order(n, le)) continue;
      LabeledPoset p;
      p.n = n;
      p.leq = le;
      canon.insert(canonical_order_matrix(lattice_of(p)));
    }
    for (const auto& m : canon) {
      LabeledPoset p;
      p.n = n;
      p.leq = m;
      emit(lattice_of(p));
    }
  }
}

std::vector<FiniteBoundedLattice> enumerate_lattices(int max_n) {
  std::vector<FiniteBoundedLattice> out;
  enumerate_lattices(max_n, [&](const FiniteBoundedLattice& a) { out.push_back(a); });
  return out;
}

namespace {

void extend_hom(const FiniteBoundedLattice& a, const FiniteBoundedLattice& b,
                std::vector<int>& f, int next, std::vector<LatticeHom>& out) {
  if (next == a.n) {
    if (is_lattice_hom(a, b, f)) out.push_back(LatticeHom{a, b, f});
    return;
  }
  for (int y = 0; y < b.n; ++y) {
    if (next == a.bottom && y != b.bottom) continue;
    if (next == a.top && y != b.top) continue;
    bool ok = true;
    for (int x = 0; x < next && ok; ++x) {
      if (a.le(x, next) && !b.le(f[static_cast<size_t>(x)], y)) ok = false;
      if (a.le(next, x) && !b.le(y, f[static_cast<size_t>(x)])) ok = false;
      // meets and joins that already have both arguments assigned must agree
      int mz = a.meet(x, next);
      if (mz < next && mz != x && mz != next &&
          b.meet(f[static_cast<size_t>(x)], y) != f[static_cast<size_t>(mz)])
        ok = false;
      int jz = a.join(x, next);
      if (jz < next && jz != x && jz != next &&
          b.join(f[static_cast<size_t>(x)], y) != f[static_cast<size_t>(jz)])
        ok = false;
    }
    if (!ok) continue;
    f[static_cast<size_t>(next)] = y;
    extend_hom(a, b, f, next + 1, out);
  }
}

}  // namespace

std::vector<LatticeHom> enumerate_homs(const FiniteBoundedLattice& a,
                                       const FiniteBoundedLattice& b) {
  std::vector<LatticeHom> out;
  std::vector<int> f(static_cast<size_t>(a.n), 0);
  extend_hom(a, b, f, 0, out);
  return out;
}

namespace {

bool extend_iso(const FiniteBoundedLattice& a, const FiniteBoundedLattice& b,
                std::vector<int>& f, std::vector<uint8_t>& used, int next) {
  if (next == a.n) return true;
  for (int y = 0; y < b.n; ++y) {
    if (used[static_cast<size_t>(y)]) continue;
    if (next == a.bottom && y != b.bottom) continue;
    if (next == a.top && y != b.top) continue;
    bool ok = true;
    for (int x = 0; x < next && ok; ++x) {
      if (a.le(x, next) != b.le(f[static_cast<size_t>(x)], y)) ok = false;
      if (a.le(next, x) != b.le(y, f[static_cast<size_t>(x)])) ok = false;
    }
    if (!ok) continue;
    f[static_cast<size_t>(next)] = y;
    used[static_cast<size_t>(y)] = 1;
    if (extend_iso(a, b, f, used, next + 1)) return true;
    used[static_cast<size_t>(y)] = 0;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> lattice_iso(const FiniteBoundedLattice& a,
                                            const FiniteBoundedLattice& b) {
  if (a.n != b.n) return std::nullopt;
  std::vector<int> f(static_cast<size_t>(a.n), 0);
  std::vector<uint8_t> used(static_cast<size_t>(a.n), 0);
  if (extend_iso(a, b, f, used, 0)) return f;
  return std::nullopt;
}

}  // namespace latdual
