#pragma once

// Finite bounded lattices and the order-theoretic primitives the rest of the
// workbench is built on.
//
// Conventions used throughout:
//  * carriers are 0..n-1; all matrices are row-major (leq[i*n+j] = (i <= j));
//  * every enumeration is deterministic: families of subsets are sorted by
//    subset_lex_less, witnesses are lexicographically least, and hom/lattice
//    enumerations follow ascending carrier order;
//  * filt(A) indexes filters by generator (filter i is the upset of element i)
//    and orders them by inclusion, so filt(A) is anti-isomorphic to A;
//    idl(A) is isomorphic to A the same way;
//  * the empty meet is the top and the empty join is the bottom.

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace latdual {

struct CycleDetected : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotALattice : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NoBound : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct EmptyFamily : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotMonotone : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotAntisymmetric : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BoundTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SideMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotValidated : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CategoryMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotComposable : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct WitnessFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ComponentNotIso : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A subset of a fixed finite carrier, kept as an explicit membership vector.
struct ElementSubset {
  int universe = 0;
  std::vector<uint8_t> in;

  ElementSubset() = default;
  explicit ElementSubset(int n) : universe(n), in(static_cast<size_t>(n), 0) {}

  static ElementSubset full(int n) {
    ElementSubset s(n);
    std::fill(s.in.begin(), s.in.end(), uint8_t{1});
    return s;
  }
  static ElementSubset of(int n, std::initializer_list<int> xs) {
    ElementSubset s(n);
    for (int x : xs) s.in[static_cast<size_t>(x)] = 1;
    return s;
  }

  bool contains(int x) const { return in[static_cast<size_t>(x)] != 0; }
  void add(int x) { in[static_cast<size_t>(x)] = 1; }
  void remove(int x) { in[static_cast<size_t>(x)] = 0; }

  int count() const;
  bool empty() const { return count() == 0; }
  bool is_subset_of(const ElementSubset& o) const;
  ElementSubset complement() const;
  ElementSubset intersect(const ElementSubset& o) const;
  ElementSubset unite(const ElementSubset& o) const;
  ElementSubset minus(const ElementSubset& o) const;
  std::vector<int> elements() const;

  bool operator==(const ElementSubset&) const = default;
};

// Lexicographic order on membership vectors; the one reproducible order used
// whenever a family of subsets is materialized.
bool subset_lex_less(const ElementSubset& a, const ElementSubset& b);

// Sort + dedup a family into the canonical order.
void normalize_family(std::vector<ElementSubset>& family);

struct LabeledPoset {
  int n = 0;
  std::vector<uint8_t> leq;
  std::vector<std::string> labels;

  bool le(int i, int j) const { return leq[static_cast<size_t>(i) * n + j] != 0; }

  bool operator==(const LabeledPoset&) const = default;
};

struct FiniteBoundedLattice {
  int n = 0;
  std::vector<uint8_t> leq;
  std::vector<int> meet_tab, join_tab;
  int bottom = 0, top = 0;
  std::vector<std::string> labels;

  bool le(int i, int j) const { return leq[static_cast<size_t>(i) * n + j] != 0; }
  int meet(int i, int j) const { return meet_tab[static_cast<size_t>(i) * n + j]; }
  int join(int i, int j) const { return join_tab[static_cast<size_t>(i) * n + j]; }
  int meet_all(const std::vector<int>& xs) const;
  int join_all(const std::vector<int>& xs) const;
  ElementSubset up_set(int x) const;
  ElementSubset down_set(int x) const;
  LabeledPoset poset() const { return LabeledPoset{n, leq, labels}; }

  bool operator==(const FiniteBoundedLattice&) const = default;
};

struct LatticeHom {
  FiniteBoundedLattice source, target;
  std::vector<int> map;
};

// Builds a lattice from element labels and cover pairs (lower, upper).
// Throws ParseError on unknown/duplicate labels, CycleDetected if the cover
// graph has a cycle, NoBound if there is no least or greatest element, and
// NotALattice if some pair lacks a meet or join.
FiniteBoundedLattice from_covers(
    const std::vector<std::string>& elements,
    const std::vector<std::pair<std::string, std::string>>& covers);

// Completes an order matrix to a lattice (same errors as from_covers, minus
// the cover-graph ones).
FiniteBoundedLattice lattice_of(const LabeledPoset& p);

// All filters of A ordered by inclusion, labeled "↑x"; anti-isomorphic to A.
// Filter i is the principal upset of carrier element i.
LabeledPoset filt(const FiniteBoundedLattice& a);
// All ideals of A ordered by inclusion, labeled "↓x"; isomorphic to A.
LabeledPoset idl(const FiniteBoundedLattice& a);
FiniteBoundedLattice filt_lattice(const FiniteBoundedLattice& a);
FiniteBoundedLattice idl_lattice(const FiniteBoundedLattice& a);

// Whether the meet of m (nonempty; EmptyFamily otherwise) distributes over
// joins: a v /\m == /\{a v mi} for every a.
bool distributive_meet(const FiniteBoundedLattice& a, const std::vector<int>& m);

// d_prime: x != top such that every distributive meet /\M <= x has some
// member m <= x (the empty meet is the top, which is what excludes it).
// The quantification genuinely needs arbitrary subsets: in M3 the atom
// triple is a distributive meet hitting bottom while no atom pair is
// distributive, so a pairs-only check keeps the bottom by mistake.  The
// faithful FullPowerSet mode is therefore the default; PairsAndEmpty is the
// cheap under-approximation, equivalent exactly on distributive lattices.
enum class DPrimeMode { PairsAndEmpty, FullPowerSet };
ElementSubset d_prime(const FiniteBoundedLattice& z,
                      DPrimeMode mode = DPrimeMode::FullPowerSet);

// x != top with x = y /\ z implying x == y or x == z.
ElementSubset meet_irreducibles(const FiniteBoundedLattice& z);

// Nonempty, upward-closed, meet-closed subset (dually for ideals).
bool is_filter(const FiniteBoundedLattice& a, const ElementSubset& s);
bool is_ideal(const FiniteBoundedLattice& a, const ElementSubset& s);

// Proper filters F with a v b in F implying a in F or b in F, returned as
// carrier subsets in subset_lex_less order.
std::vector<ElementSubset> prime_filters(const FiniteBoundedLattice& a);

bool is_distributive(const FiniteBoundedLattice& a);

// One representative per isomorphism class, n = 1..max_n, in ascending size
// then lexicographic canonical-matrix order.  Throws BoundTooLarge above
// kMaxEnumerationSize.
inline constexpr int kMaxEnumerationSize = 8;
void enumerate_lattices(int max_n,
                        const std::function<void(const FiniteBoundedLattice&)>& emit);
std::vector<FiniteBoundedLattice> enumerate_lattices(int max_n);

// Canonical form: the lexicographically least order matrix over all carrier
// permutations that send bottom to 0 and top to n-1.
std::vector<uint8_t> canonical_order_matrix(const FiniteBoundedLattice& a);

// All bound-, meet- and join-preserving maps a -> b in lexicographic order.
std::vector<LatticeHom> enumerate_homs(const FiniteBoundedLattice& a,
                                       const FiniteBoundedLattice& b);

bool is_lattice_hom(const FiniteBoundedLattice& a, const FiniteBoundedLattice& b,
                    const std::vector<int>& f);
inline bool is_lattice_hom(const LatticeHom& h) {
  return is_lattice_hom(h.source, h.target, h.map);
}

// Lexicographically least isomorphism witness, if any.
std::optional<std::vector<int>> lattice_iso(const FiniteBoundedLattice& a,
                                            const FiniteBoundedLattice& b);

// Left adjoint exists iff f preserves all meets (ell(y) = /\ f^{-1}(up y)),
// right adjoint iff f preserves all joins; the Galois property is verified
// before returning.  Throws NotMonotone if f is not order-preserving.
enum class AdjointSide { Left, Right };
std::optional<std::vector<int>> adjoint(const LatticeHom& f, AdjointSide side);

bool preserves_all_meets(const FiniteBoundedLattice& a,
                         const FiniteBoundedLattice& b, const std::vector<int>& f);
bool preserves_all_joins(const FiniteBoundedLattice& a,
                         const FiniteBoundedLattice& b, const std::vector<int>& f);
inline bool preserves_all_meets(const LatticeHom& h) {
  return preserves_all_meets(h.source, h.target, h.map);
}
inline bool preserves_all_joins(const LatticeHom& h) {
  return preserves_all_joins(h.source, h.target, h.map);
}

}  // namespace latdual
