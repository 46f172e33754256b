#include <latdual/core.hpp>

#include <algorithm>
#include <map>
#include <numeric>

namespace latdual {

int ElementSubset::count() const {
  return static_cast<int>(std::count(in.begin(), in.end(), uint8_t{1}));
}

bool ElementSubset::is_subset_of(const ElementSubset& o) const {
  if (universe != o.universe) throw SideMismatch("subset universes differ");
  for (int i = 0; i < universe; ++i)
    if (in[static_cast<size_t>(i)] && !o.in[static_cast<size_t>(i)]) return false;
  return true;
}

ElementSubset ElementSubset::complement() const {
  ElementSubset r(universe);
  for (int i = 0; i < universe; ++i)
    r.in[static_cast<size_t>(i)] = in[static_cast<size_t>(i)] ? 0 : 1;
  return r;
}

ElementSubset ElementSubset::intersect(const ElementSubset& o) const {
  if (universe != o.universe) throw SideMismatch("subset universes differ");
  ElementSubset r(universe);
  for (int i = 0; i < universe; ++i)
    r.in[static_cast<size_t>(i)] = in[static_cast<size_t>(i)] & o.in[static_cast<size_t>(i)];
  return r;
}

ElementSubset ElementSubset::unite(const ElementSubset& o) const {
  if (universe != o.universe) throw SideMismatch("subset universes differ");
  ElementSubset r(universe);
  for (int i = 0; i < universe; ++i)
    r.in[static_cast<size_t>(i)] = in[static_cast<size_t>(i)] | o.in[static_cast<size_t>(i)];
  return r;
}

ElementSubset ElementSubset::minus(const ElementSubset& o) const {
  if (universe != o.universe) throw SideMismatch("subset universes differ");
  ElementSubset r(universe);
  for (int i = 0; i < universe; ++i)
    r.in[static_cast<size_t>(i)] =
        static_cast<uint8_t>(in[static_cast<size_t>(i)] && !o.in[static_cast<size_t>(i)]);
  return r;
}

std::vector<int> ElementSubset::elements() const {
  std::vector<int> out;
  for (int i = 0; i < universe; ++i)
    if (in[static_cast<size_t>(i)]) out.push_back(i);
  return out;
}

bool subset_lex_less(const ElementSubset& a, const ElementSubset& b) {
  if (a.universe != b.universe) return a.universe < b.universe;
  return a.in < b.in;
}

void normalize_family(std::vector<ElementSubset>& family) {
  std::sort(family.begin(), family.end(), subset_lex_less);
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

int FiniteBoundedLattice::meet_all(const std::vector<int>& xs) const {
  int g = top;
  for (int x : xs) g = meet(g, x);
  return g;
}

int FiniteBoundedLattice::join_all(const std::vector<int>& xs) const {
  int g = bottom;
  for (int x : xs) g = join(g, x);
  return g;
}

ElementSubset FiniteBoundedLattice::up_set(int x) const {
  ElementSubset s(n);
  for (int y = 0; y < n; ++y)
    if (le(x, y)) s.add(y);
  return s;
}

ElementSubset FiniteBoundedLattice::down_set(int x) const {
  ElementSubset s(n);
  for (int y = 0; y < n; ++y)
    if (le(y, x)) s.add(y);
  return s;
}

namespace {

// Meet/join tables for an order matrix; nullopt names the first offending
// pair through *bad.
std::optional<std::pair<std::vector<int>, std::vector<int>>> try_tables(
    int n, const std::vector<uint8_t>& leq, std::pair<int, int>* bad) {
  auto at = [&](int i, int j) { return leq[static_cast<size_t>(i) * n + j] != 0; };
  std::vector<int> meet(static_cast<size_t>(n) * n, -1);
  std::vector<int> join(static_cast<size_t>(n) * n, -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int g = -1, l = -1;
      for (int z = 0; z < n; ++z) {
        if (at(z, x) && at(z, y)) {
          bool greatest = true;
          for (int w = 0; w < n; ++w)
            if (at(w, x) && at(w, y) && !at(w, z)) greatest = false;
          if (greatest) g = z;
        }
        if (at(x, z) && at(y, z)) {
          bool least = true;
          for (int w = 0; w < n; ++w)
            if (at(x, w) && at(y, w) && !at(z, w)) least = false;
          if (least) l = z;
        }
      }
      if (g < 0 || l < 0) {
        if (bad) *bad = {x, y};
        return std::nullopt;
      }
      meet[static_cast<size_t>(x) * n + y] = g;
      join[static_cast<size_t>(x) * n + y] = l;
    }
  return std::make_pair(std::move(meet), std::move(join));
}

FiniteBoundedLattice finish_lattice(int n, std::vector<uint8_t> leq,
                                    std::vector<std::string> labels) {
  auto at = [&](int i, int j) { return leq[static_cast<size_t>(i) * n + j] != 0; };
  int bottom = -1, top = -1;
  for (int b = 0; b < n; ++b) {
    bool least = true;
    for (int x = 0; x < n; ++x)
      if (!at(b, x)) least = false;
    if (least) bottom = b;
  }
  for (int t = 0; t < n; ++t) {
    bool greatest = true;
    for (int x = 0; x < n; ++x)
      if (!at(x, t)) greatest = false;
    if (greatest) top = t;
  }
  if (bottom < 0) throw NoBound("no least element");
  if (top < 0) throw NoBound("no greatest element");
  std::pair<int, int> bad{-1, -1};
  auto tabs = try_tables(n, leq, &bad);
  if (!tabs)
    throw NotALattice("no meet or join for " + labels[static_cast<size_t>(bad.first)] +
                      " and " + labels[static_cast<size_t>(bad.second)]);
  FiniteBoundedLattice a;
  a.n = n;
  a.leq = std::move(leq);
  a.meet_tab = std::move(tabs->first);
  a.join_tab = std::move(tabs->second);
  a.bottom = bottom;
  a.top = top;
  a.labels = std::move(labels);
  return a;
}

}  // namespace

FiniteBoundedLattice from_covers(
    const std::vector<std::string>& elements,
    const std::vector<std::pair<std::string, std::string>>& covers) {
  int n = static_cast<int>(elements.size());
  if (n == 0) throw NoBound("empty carrier");
  std::map<std::string, int> index;
  for (int i = 0; i < n; ++i) {
    if (!index.emplace(elements[static_cast<size_t>(i)], i).second)
      throw ParseError("duplicate element label: " + elements[static_cast<size_t>(i)]);
  }
  std::vector<uint8_t> leq(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) leq[static_cast<size_t>(i) * n + i] = 1;
  for (const auto& [lo, hi] : covers) {
    auto a = index.find(lo);
    auto b = index.find(hi);
    if (a == index.end()) throw ParseError("unknown element in cover: " + lo);
    if (b == index.end()) throw ParseError("unknown element in cover: " + hi);
    if (a->second == b->second)
      throw ParseError("cover relates " + lo + " to itself");
    leq[static_cast<size_t>(a->second) * n + b->second] = 1;
  }
  // reflexive-transitive closure
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (leq[static_cast<size_t>(i) * n + k])
        for (int j = 0; j < n; ++j)
          if (leq[static_cast<size_t>(k) * n + j]) leq[static_cast<size_t>(i) * n + j] = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (leq[static_cast<size_t>(i) * n + j] && leq[static_cast<size_t>(j) * n + i])
        throw CycleDetected("cover cycle through " + elements[static_cast<size_t>(i)] +
                            " and " + elements[static_cast<size_t>(j)]);
  return finish_lattice(n, std::move(leq), elements);
}

FiniteBoundedLattice lattice_of(const LabeledPoset& p) {
  int n = p.n;
  for (int i = 0; i < n; ++i)
    if (!p.le(i, i)) throw NotALattice("order matrix is not reflexive");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i != j && p.le(i, j) && p.le(j, i))
        throw NotALattice("order matrix is not antisymmetric");
      for (int k = 0; k < n; ++k)
        if (p.le(i, j) && p.le(j, k) && !p.le(i, k))
          throw NotALattice("order matrix is not transitive");
    }
  std::vector<std::string> labels = p.labels;
  if (labels.empty())
    for (int i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
  return finish_lattice(n, p.leq, std::move(labels));
}

LabeledPoset filt(const FiniteBoundedLattice& a) {
  LabeledPoset f;
  f.n = a.n;
  f.leq.assign(static_cast<size_t>(a.n) * a.n, 0);
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j)
      // up(i) included in up(j) exactly when j <= i
      f.leq[static_cast<size_t>(i) * a.n + j] = a.le(j, i) ? 1 : 0;
  for (const auto& l : a.labels) f.labels.push_back("↑" + l);
  return f;
}

LabeledPoset idl(const FiniteBoundedLattice& a) {
  LabeledPoset f;
  f.n = a.n;
  f.leq = a.leq;
  for (const auto& l : a.labels) f.labels.push_back("↓" + l);
  return f;
}

FiniteBoundedLattice filt_lattice(const FiniteBoundedLattice& a) {
  return lattice_of(filt(a));
}

FiniteBoundedLattice idl_lattice(const FiniteBoundedLattice& a) {
  return lattice_of(idl(a));
}

bool distributive_meet(const FiniteBoundedLattice& a, const std::vector<int>& m) {
  if (m.empty()) throw EmptyFamily("distributive_meet of an empty family");
  int g = a.meet_all(m);
  for (int x = 0; x < a.n; ++x) {
    int rhs = a.top;
    for (int mi : m) rhs = a.meet(rhs, a.join(x, mi));
    if (a.join(x, g) != rhs) return false;
  }
  return true;
}

namespace {

bool d_prime_at(const FiniteBoundedLattice& z, int x, DPrimeMode mode) {
  if (x == z.top) return false;  // the empty meet is the top
  if (mode == DPrimeMode::PairsAndEmpty) {
    for (int m1 = 0; m1 < z.n; ++m1)
      for (int m2 = m1; m2 < z.n; ++m2) {
        if (!z.le(z.meet(m1, m2), x)) continue;
        if (!distributive_meet(z, {m1, m2})) continue;
        if (!z.le(m1, x) && !z.le(m2, x)) return false;
      }
    return true;
  }
  for (uint32_t s = 1; s < (1u << z.n); ++s) {
    std::vector<int> m;
    for (int i = 0; i < z.n; ++i)
      if (s >> i & 1) m.push_back(i);
    if (!z.le(z.meet_all(m), x)) continue;
    if (!distributive_meet(z, m)) continue;
    bool hit = false;
    for (int mi : m)
      if (z.le(mi, x)) hit = true;
    if (!hit) return false;
  }
  return true;
}

}  // namespace

ElementSubset d_prime(const FiniteBoundedLattice& z, DPrimeMode mode) {
  ElementSubset s(z.n);
  for (int x = 0; x < z.n; ++x)
    if (d_prime_at(z, x, mode)) s.add(x);
  return s;
}

ElementSubset meet_irreducibles(const FiniteBoundedLattice& z) {
  ElementSubset s(z.n);
  for (int x = 0; x < z.n; ++x) {
    if (x == z.top) continue;
    bool irred = true;
    for (int y = 0; y < z.n && irred; ++y)
      for (int w = 0; w < z.n && irred; ++w)
        if (z.meet(y, w) == x && y != x && w != x) irred = false;
    if (irred) s.add(x);
  }
  return s;
}

bool is_filter(const FiniteBoundedLattice& a, const ElementSubset& s) {
  if (s.universe != a.n || s.empty()) return false;
  for (int x = 0; x < a.n; ++x) {
    if (!s.contains(x)) continue;
    for (int y = 0; y < a.n; ++y) {
      if (a.le(x, y) && !s.contains(y)) return false;
      if (s.contains(y) && !s.contains(a.meet(x, y))) return false;
    }
  }
  return true;
}

bool is_ideal(const FiniteBoundedLattice& a, const ElementSubset& s) {
  if (s.universe != a.n || s.empty()) return false;
  for (int x = 0; x < a.n; ++x) {
    if (!s.contains(x)) continue;
    for (int y = 0; y < a.n; ++y) {
      if (a.le(y, x) && !s.contains(y)) return false;
      if (s.contains(y) && !s.contains(a.join(x, y))) return false;
    }
  }
  return true;
}

std::vector<ElementSubset> prime_filters(const FiniteBoundedLattice& a) {
  std::vector<ElementSubset> out;
  // every filter is the upset of its generator
  for (int x = 0; x < a.n; ++x) {
    if (x == a.bottom) continue;  // improper
    bool prime = true;
    for (int y = 0; y < a.n && prime; ++y)
      for (int w = 0; w < a.n && prime; ++w)
        if (a.le(x, a.join(y, w)) && !a.le(x, y) && !a.le(x, w)) prime = false;
    if (prime) out.push_back(a.up_set(x));
  }
  normalize_family(out);
  return out;
}

bool is_distributive(const FiniteBoundedLattice& a) {
  for (int x = 0; x < a.n; ++x)
    for (int y = 0; y < a.n; ++y)
      for (int z = 0; z < a.n; ++z)
        if (a.meet(x, a.join(y, z)) != a.join(a.meet(x, y), a.meet(x, z)))
          return false;
  return true;
}

bool is_lattice_hom(const FiniteBoundedLattice& a, const FiniteBoundedLattice& b,
                    const std::vector<int>& f) {
  if (static_cast<int>(f.size()) != a.n) return false;
  for (int x : f)
    if (x < 0 || x >= b.n) return false;
  if (f[static_cast<size_t>(a.bottom)] != b.bottom) return false;
  if (f[static_cast<size_t>(a.top)] != b.top) return false;
  for (int x = 0; x < a.n; ++x)
    for (int y = 0; y < a.n; ++y) {
      if (f[static_cast<size_t>(a.meet(x, y))] !=
          b.meet(f[static_cast<size_t>(x)], f[static_cast<size_t>(y)]))
        return false;
      if (f[static_cast<size_t>(a.join(x, y))] !=
          b.join(f[static_cast<size_t>(x)], f[static_cast<size_t>(y)]))
        return false;
    }
  return true;
}

bool preserves_all_meets(const FiniteBoundedLattice& a,
                         const FiniteBoundedLattice& b, const std::vector<int>& f) {
  // finite carrier: preserving the empty meet and binary meets covers all
  if (f[static_cast<size_t>(a.top)] != b.top) return false;
  for (int x = 0; x < a.n; ++x)
    for (int y = 0; y < a.n; ++y)
      if (f[static_cast<size_t>(a.meet(x, y))] !=
          b.meet(f[static_cast<size_t>(x)], f[static_cast<size_t>(y)]))
        return false;
  return true;
}

bool preserves_all_joins(const FiniteBoundedLattice& a,
                         const FiniteBoundedLattice& b, const std::vector<int>& f) {
  if (f[static_cast<size_t>(a.bottom)] != b.bottom) return false;
  for (int x = 0; x < a.n; ++x)
    for (int y = 0; y < a.n; ++y)
      if (f[static_cast<size_t>(a.join(x, y))] !=
          b.join(f[static_cast<size_t>(x)], f[static_cast<size_t>(y)]))
        return false;
  return true;
}

std::optional<std::vector<int>> adjoint(const LatticeHom& h, AdjointSide side) {
  const FiniteBoundedLattice& a = h.source;
  const FiniteBoundedLattice& b = h.target;
  for (int x = 0; x < a.n; ++x)
    for (int y = 0; y < a.n; ++y)
      if (a.le(x, y) &&
          !b.le(h.map[static_cast<size_t>(x)], h.map[static_cast<size_t>(y)]))
        throw NotMonotone("map is not order-preserving");
  std::vector<int> g(static_cast<size_t>(b.n));
  if (side == AdjointSide::Left) {
    // ell(y) = meet of the preimage of up(y); Galois: ell(y) <= x iff y <= f(x)
    for (int y = 0; y < b.n; ++y) {
      int m = a.top;
      for (int x = 0; x < a.n; ++x)
        if (b.le(y, h.map[static_cast<size_t>(x)])) m = a.meet(m, x);
      g[static_cast<size_t>(y)] = m;
    }
    for (int y = 0; y < b.n; ++y)
      for (int x = 0; x < a.n; ++x)
        if (a.le(g[static_cast<size_t>(y)], x) != b.le(y, h.map[static_cast<size_t>(x)]))
          return std::nullopt;
    return g;
  }
  for (int y = 0; y < b.n; ++y) {
    int m = a.bottom;
    for (int x = 0; x < a.n; ++x)
      if (b.le(h.map[static_cast<size_t>(x)], y)) m = a.join(m, x);
    g[static_cast<size_t>(y)] = m;
  }
  for (int y = 0; y < b.n; ++y)
    for (int x = 0; x < a.n; ++x)
      if (a.le(x, g[static_cast<size_t>(y)]) != b.le(h.map[static_cast<size_t>(x)], y))
        return std::nullopt;
  return g;
}

}  // namespace latdual
