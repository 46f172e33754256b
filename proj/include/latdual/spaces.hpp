#pragma once

// The seven dual representations of a finite bounded lattice and the
// point-level machinery they share: derived (quasi-)orders, the distinguished
// point sets X0/Y0, maximal pairs, Galois maps, and stable-set families.
//
// Carrier conventions: a space's points are indexed 0..n-1 with a parallel
// label vector.  Two-sided spaces (DH, GvG, Hg) keep an X side and a Y side
// joined by R (rows = X, columns = Y); one-sided spaces (Urq, Plo, CG) have a
// single carrier Z / Xm.

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "latdual/core.hpp"
#include "latdual/relation.hpp"

namespace latdual {

// Order matches the variant order of AnySpace below.
enum class Category { Filt, CG, DH, GvG, Hg, Urq, Plo };

std::string_view category_name(Category c);
std::optional<Category> category_from_name(std::string_view name);

// Two bounded lattices joined by a relation; the prototype is
// (Filt(A), R, Idl(A)) with F R I iff F and I are disjoint.
struct DHSpace {
  FiniteBoundedLattice X, Y;
  BinaryRelation R;

  bool operator==(const DHSpace&) const = default;
};

// Two posets joined by a relation; both orders must agree with the orders
// derived from R (shrinking images / preimages).
struct GvGSpace {
  LabeledPoset X, Y;
  BinaryRelation R;

  bool operator==(const GvGSpace&) const = default;
};

// Bare carriers joined by a relation; the orders on X and Y are not stored
// but derived from R on demand (derived_orders_hg).
struct HgSpace {
  std::vector<std::string> X, Y;
  BinaryRelation R;

  int nx() const { return static_cast<int>(X.size()); }
  int ny() const { return static_cast<int>(Y.size()); }

  bool operator==(const HgSpace&) const = default;
};

// One carrier with two quasi-orders whose intersection is the diagonal.
struct UrqSpace {
  std::vector<std::string> Z;
  BinaryRelation le1, le2;

  int n() const { return static_cast<int>(Z.size()); }
  bool le_1(int x, int y) const { return le1.at(x, y); }
  bool le_2(int x, int y) const { return le2.at(x, y); }

  bool operator==(const UrqSpace&) const = default;
};

// One carrier with a single reflexive relation; both quasi-orders are
// recoverable from R (quasi_orders_plo).
struct PloSpace {
  std::vector<std::string> Z;
  BinaryRelation R;

  int n() const { return static_cast<int>(Z.size()); }

  bool operator==(const PloSpace&) const = default;
};

// One carrier with a distinguished family K of subsets (closed under finite
// unions); the reconstructed lattice lives on the complements of K.
struct CGSpace {
  std::vector<std::string> X;
  std::vector<ElementSubset> K;

  int n() const { return static_cast<int>(X.size()); }

  bool operator==(const CGSpace&) const = default;
};

// The Filt endpoint carries the filter lattice itself, so a plain
// FiniteBoundedLattice doubles as the seventh variant.
using AnySpace = std::variant<FiniteBoundedLattice, CGSpace, DHSpace, GvGSpace,
                              HgSpace, UrqSpace, PloSpace>;

Category category_of(const AnySpace& s);

// Morphism between two dual spaces of the same category.  DH morphisms are
// function pairs (f, g); GvG/Hg carry relation pairs (S, T); Urq/Plo carry
// relation pairs conventionally written (P, Q) but stored in the same slots;
// CG carries the single relation S.  Source and target are embedded because
// star-composition and validation need their stable families, and keeping
// them attached prevents direction mistakes with the contravariant
// constructions.
struct DualMorphism {
  Category cat = Category::DH;
  AnySpace source, target;
  std::vector<int> f, g;
  BinaryRelation S, T;

  bool operator==(const DualMorphism&) const = default;
};

// The family of stable subsets of a space's (X-side) carrier together with
// the bounded lattice it forms under inclusion.  Members are kept in
// subset_lex_less order; meet is intersection and join is the least member
// containing the union, which the per-category closure operators guarantee
// exists.  For Urquhart spaces phi[i] is the Galois image of members[i] (the
// co-stable family); other categories leave phi empty.
struct StableFamily {
  Category cat = Category::GvG;
  int carrier = 0;
  std::vector<std::string> point_labels;
  std::vector<ElementSubset> members;
  std::vector<ElementSubset> phi;
  FiniteBoundedLattice lattice;

  int index_of(const ElementSubset& s) const;  // -1 when absent
};

// x <= x' iff R[x'] is contained in R[x]; always reflexive and transitive.
BinaryRelation image_containment_order(const BinaryRelation& r);
// y <= y' iff R^{-1}[y'] is contained in R^{-1}[y].
BinaryRelation preimage_containment_order(const BinaryRelation& r);

// The two point orders an Hg space induces on its carriers (image containment
// on X, preimage containment on Y).  Throws NotAntisymmetric when either
// fails to be a partial order.
std::pair<LabeledPoset, LabeledPoset> derived_orders_hg(
    const std::vector<std::string>& x_labels,
    const std::vector<std::string>& y_labels, const BinaryRelation& r);
std::pair<LabeledPoset, LabeledPoset> derived_orders_hg(const HgSpace& h);

// The two quasi-orders of a Plo space: x <=1 z iff R[z] subset of R[x],
// y <=2 z iff R^{-1}[z] subset of R^{-1}[y].
std::pair<BinaryRelation, BinaryRelation> quasi_orders_plo(const PloSpace& p);

// X0 collects the maxima of the preimages R^{-1}[y] (maxima in X's order),
// Y0 the maxima of the images R[x] in Y's order.
std::pair<ElementSubset, ElementSubset> x0_y0(const LabeledPoset& x,
                                              const BinaryRelation& r,
                                              const LabeledPoset& y);

// The pairs (x, y) in R with x maximal among R^{-1}[y] and y maximal among
// R[x], in lexicographic order; the carrier of the Urquhart space.
std::vector<std::pair<int, int>> maximal_pairs(const HgSpace& h);

// The antitone Galois pair of a doubly ordered carrier:
//   phi C = complement of the <=2-downset of C,
//   psi C = complement of the <=1-downset of C.
enum class GaloisMap { Phi, Psi };
ElementSubset galois_do(const UrqSpace& u, const ElementSubset& c, GaloisMap which);

// Least member of the complement family of K containing s (the complements
// are intersection-closed and include the whole carrier).
ElementSubset delta_closure(const CGSpace& c, const ElementSubset& s);

// All fixed points of a closure operator on subsets of {0..n-1}, in
// subset_lex_less order.  Saturates from cl(empty) and the point closures
// under cl(union), which reaches every closed set on a finite carrier.
std::vector<ElementSubset> closure_fixed_points(
    int n, const std::function<ElementSubset(const ElementSubset&)>& cl);

// Per-category stable-set families, computed without any validity gate (the
// validators themselves need them on candidate spaces):
//   GvG:  upsets of X with box(R, bdiamond(R, U)) = U
//   Hg:   subsets of X with the same fixed-point property
//   Urq:  subsets with psi(phi(C)) = C (these are automatically <=1-upsets)
//   Plo:  subsets with box(R, bdiamond(R, C)) = C
//   CG:   complements of the members of K
std::vector<ElementSubset> stable_sets(const GvGSpace& g);
std::vector<ElementSubset> stable_sets(const HgSpace& h);
std::vector<ElementSubset> stable_sets(const UrqSpace& u);
std::vector<ElementSubset> stable_sets(const PloSpace& p);
std::vector<ElementSubset> stable_sets(const CGSpace& c);

// The stable family with its induced lattice.  Validates the space first and
// throws NotValidated on failure.  For DH spaces and bare lattices the family
// is the principal-upset family of X (labeled by generator), whose inclusion
// order is anti-isomorphic to X; for the others it is stable_sets with
// set-notation labels, plus the Galois companions for Urq.
StableFamily stable_family(const FiniteBoundedLattice& l);
StableFamily stable_family(const CGSpace& c);
StableFamily stable_family(const DHSpace& d);
StableFamily stable_family(const GvGSpace& g);
StableFamily stable_family(const HgSpace& h);
StableFamily stable_family(const UrqSpace& u);
StableFamily stable_family(const PloSpace& p);
StableFamily stable_family(const AnySpace& s);

// Bounded lattice over a family of subsets ordered by inclusion (the family
// must contain binary intersections and least covers of unions; NotALattice
// otherwise).  Used by StableFamily and the reconstruction endpoints.
FiniteBoundedLattice lattice_of_family(const std::vector<ElementSubset>& members,
                                       const std::vector<std::string>& member_labels);

// "{a,b,c}" from the members of s, in carrier order.
std::string subset_label(const ElementSubset& s,
                         const std::vector<std::string>& point_labels);

}  // namespace latdual
