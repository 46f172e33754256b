#pragma once

// Binary relations between two finite carriers, plus the four modal image
// operators every dual-space construction leans on.  A relation is stored as
// a dense row-major 0/1 matrix; rows range over the left carrier, columns
// over the right one.

#include <cstdint>
#include <utility>
#include <vector>

#include "latdual/core.hpp"

namespace latdual {

struct BinaryRelation {
  int nx = 0, ny = 0;
  std::vector<uint8_t> mat;

  BinaryRelation() = default;
  BinaryRelation(int left, int right)
      : nx(left), ny(right), mat(static_cast<size_t>(left) * right, 0) {}

  static BinaryRelation from_pairs(int left, int right,
                                   const std::vector<std::pair<int, int>>& pairs);
  // The order matrix of a poset viewed as a relation on one carrier.
  static BinaryRelation from_leq(const LabeledPoset& p);
  static BinaryRelation identity(int n);

  bool at(int x, int y) const { return mat[static_cast<size_t>(x) * ny + y] != 0; }
  void set(int x, int y, bool v) { mat[static_cast<size_t>(x) * ny + y] = v ? 1 : 0; }

  // R[x] as a subset of the right carrier, R^{-1}[y] of the left one.
  ElementSubset image_of(int x) const;
  ElementSubset preimage_of(int y) const;
  // R[A] and R^{-1}[B]; throw SideMismatch when the argument lives on the
  // wrong carrier.
  ElementSubset image(const ElementSubset& a) const;
  ElementSubset preimage(const ElementSubset& b) const;

  BinaryRelation converse() const;
  std::vector<std::pair<int, int>> pairs() const;

  bool operator==(const BinaryRelation&) const = default;
};

// Relational composite x (s2 o s1) z iff x s1 y and y s2 z for some y.
// Throws NotComposable when the middle carriers disagree.  Note this is the
// plain composite; the dual categories mostly use star_compose instead.
BinaryRelation relation_compose(const BinaryRelation& s2, const BinaryRelation& s1);

// The four operators, in the direction conventions used everywhere here:
//   diamond(R, B)       = R^{-1}[B]                      (right -> left)
//   box(R, B)           = {x : R[x] subset of B}         (right -> left)
//   black_diamond(R, A) = R[A]                           (left -> right)
//   black_box(R, A)     = {y : R^{-1}[y] subset of A}    (left -> right)
// diamond/box expect a subset of the right carrier, the black pair a subset
// of the left one; SideMismatch otherwise.  black_diamond -| box is an
// adjoint pair: black_diamond(A) subset of B iff A subset of box(B).
ElementSubset diamond(const BinaryRelation& r, const ElementSubset& b);
ElementSubset box(const BinaryRelation& r, const ElementSubset& b);
ElementSubset black_diamond(const BinaryRelation& r, const ElementSubset& a);
ElementSubset black_box(const BinaryRelation& r, const ElementSubset& a);

enum class Modal { Diamond, Box, BlackDiamond, BlackBox };

ElementSubset modal(const BinaryRelation& r, const ElementSubset& s, Modal which);

}  // namespace latdual
