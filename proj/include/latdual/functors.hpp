#pragma once

// Translations between bounded lattices and the seven dual representations,
// on objects and on morphisms, together with star-composition and the
// per-category identity morphisms.
//
// Direction conventions.  The lattice-level duals are contravariant:
// dh_of_hom and cg_of_hom turn an arrow A' -> A into a morphism from the
// dual of A to the dual of A'.  The space-to-space functors (G, Hg, U, P,
// P_inv, D) are covariant, as are the translations that start from a filter
// lattice (cg_from_filt, e_functor) and the reconstruction filt_from_cg.
// Every morphism-level overload recomputes the object translation of its
// endpoints and embeds them, so outputs are self-contained.

#include "latdual/core.hpp"
#include "latdual/relation.hpp"
#include "latdual/spaces.hpp"

namespace latdual {

// (Filt(A), R, Idl(A)) with up(x) R down(y) iff the filter and ideal are
// disjoint, which for the principal generators means x is not below y.
DHSpace dh_of(const FiniteBoundedLattice& a);

// The dual of alpha: A' -> A is (f, g): dh_of(A) -> dh_of(A') taking a
// filter and an ideal to their alpha-preimages.
DualMorphism dh_of_hom(const LatticeHom& alpha);

// Restriction to the d-prime points of both sides; morphisms become the
// relation pair x S_f x' iff f(x) <= x' (order of the full target lattice),
// and likewise for g.
GvGSpace functor_G(const DHSpace& d);
DualMorphism functor_G(const DualMorphism& m);

// Restriction to X0 and Y0; morphism relations are restricted likewise.
HgSpace functor_Hg(const GvGSpace& g);
DualMorphism functor_Hg(const DualMorphism& m);

// The doubly ordered set of maximal pairs with the coordinate quasi-orders;
// morphism relations are lifted coordinatewise.
UrqSpace functor_U(const HgSpace& h);
DualMorphism functor_U(const DualMorphism& m);

// z R z' iff some point lies le1-above z and le2-above z'; morphisms carry
// over unchanged.  functor_P_inv recovers the quasi-orders from R, and the
// two are mutually inverse on the nose.
PloSpace functor_P(const UrqSpace& u);
DualMorphism functor_P(const DualMorphism& m);
UrqSpace functor_P_inv(const PloSpace& p);
DualMorphism functor_P_inv(const DualMorphism& m);

// The concrete-lattice space (LC, R, RC): LC is the family of stable sets
// and RC the family of their Galois images, both ordered by reverse
// inclusion, with D R E iff D and E meet.  A morphism (P, Q) becomes the
// function pair
//   f(D) = intersection of the stable C' with D inside box_P(C'),
//   g(E) = intersection of the phi(C') with E inside box_Q(phi C').
DHSpace functor_D(const UrqSpace& u);
DualMorphism functor_D(const DualMorphism& m);

// The lattice-to-CG dual: points are the meet-irreducible filters (indexed
// by their join-irreducible generators), K collects the complements of
// s(a) = {points containing a}.  cg_of_hom(alpha: A -> B) is the relation
// from cg_of(B) to cg_of(A) with y S x iff the alpha-preimage of y is
// contained in x.
CGSpace cg_of(const FiniteBoundedLattice& a);
DualMorphism cg_of_hom(const LatticeHom& alpha);

// The same construction applied directly to a filter lattice (or any finite
// lattice playing one): points X_m are the meet-irreducibles, K the
// complements of the principal-upset traces.  The morphism overload takes a
// meet-preserving arrow between such lattices and returns the relation
// x S y iff f(x) <= y.
CGSpace cg_from_filt(const FiniteBoundedLattice& x);
DualMorphism cg_from_filt(const LatticeHom& f);

// The union-closure of K ordered by inclusion (join is union, meet is the
// largest member under the intersection).  The morphism overload sends a CG
// relation S to the map H -> union of the V in the target K whose
// S-preimage lies inside H.
FiniteBoundedLattice filt_from_cg(const CGSpace& c);
LatticeHom filt_from_cg(const DualMorphism& s);

// The finite form of the embedding of a lattice into a DH space over its
// open filters: (X, R, Filt(X)) with x R F iff x is outside F.  On a
// meet-preserving arrow f the pair is (f, r) with r the right adjoint of
// the filter-preimage map; throws NotValidated when that adjoint does not
// exist (f is then not an arrow of this kind).
DHSpace e_functor(const FiniteBoundedLattice& x);
DualMorphism e_functor(const LatticeHom& f);

// The category's identity on a validated space: identity functions for the
// lattice-carrying categories, the order pair for GvG/Hg/Urq/Plo, and the
// dual of the specialization order for CG.
DualMorphism identity_morphism(const AnySpace& s);

// Star-composition m2 after m1.  DH and Filt compose componentwise as
// functions; the relational categories quantify over the stable family of
// the far target, which is generally larger than the plain relational
// composite.  Throws CategoryMismatch when the categories differ and
// NotComposable when m1's target is not m2's source.
DualMorphism star_compose(const DualMorphism& m2, const DualMorphism& m1);

}  // namespace latdual
