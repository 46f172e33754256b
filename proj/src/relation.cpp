#include "latdual/relation.hpp"

#include <string>

namespace latdual {

BinaryRelation BinaryRelation::from_pairs(
    int left, int right, const std::vector<std::pair<int, int>>& pairs) {
  BinaryRelation r(left, right);
  for (auto [x, y] : pairs) {
    if (x < 0 || x >= left || y < 0 || y >= right)
      throw SideMismatch("relation pair (" + std::to_string(x) + "," +
                         std::to_string(y) + ") outside " + std::to_string(left) +
                         "x" + std::to_string(right) + " carrier");
    r.set(x, y, true);
  }
  return r;
}

BinaryRelation BinaryRelation::from_leq(const LabeledPoset& p) {
  BinaryRelation r(p.n, p.n);
  r.mat = p.leq;
  return r;
}

BinaryRelation BinaryRelation::identity(int n) {
  BinaryRelation r(n, n);
  for (int i = 0; i < n; ++i) r.set(i, i, true);
  return r;
}

ElementSubset BinaryRelation::image_of(int x) const {
  ElementSubset s(ny);
  for (int y = 0; y < ny; ++y)
    if (at(x, y)) s.add(y);
  return s;
}

ElementSubset BinaryRelation::preimage_of(int y) const {
  ElementSubset s(nx);
  for (int x = 0; x < nx; ++x)
    if (at(x, y)) s.add(x);
  return s;
}

ElementSubset BinaryRelation::image(const ElementSubset& a) const {
  if (a.universe != nx)
    throw SideMismatch("image argument lives on a " + std::to_string(a.universe) +
                       "-point carrier, relation rows have " + std::to_string(nx));
  ElementSubset s(ny);
  for (int x = 0; x < nx; ++x)
    if (a.contains(x))
      for (int y = 0; y < ny; ++y)
        if (at(x, y)) s.add(y);
  return s;
}

ElementSubset BinaryRelation::preimage(const ElementSubset& b) const {
  if (b.universe != ny)
    throw SideMismatch("preimage argument lives on a " + std::to_string(b.universe) +
                       "-point carrier, relation columns have " + std::to_string(ny));
  ElementSubset s(nx);
  for (int y = 0; y < ny; ++y)
    if (b.contains(y))
      for (int x = 0; x < nx; ++x)
        if (at(x, y)) s.add(x);
  return s;
}

BinaryRelation BinaryRelation::converse() const {
  BinaryRelation r(ny, nx);
  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < ny; ++y)
      if (at(x, y)) r.set(y, x, true);
  return r;
}

std::vector<std::pair<int, int>> BinaryRelation::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < ny; ++y)
      if (at(x, y)) out.emplace_back(x, y);
  return out;
}

BinaryRelation relation_compose(const BinaryRelation& s2, const BinaryRelation& s1) {
  if (s1.ny != s2.nx)
    throw NotComposable("middle carriers disagree: " + std::to_string(s1.ny) +
                        " vs " + std::to_string(s2.nx));
  BinaryRelation r(s1.nx, s2.ny);
  for (int x = 0; x < s1.nx; ++x)
    for (int y = 0; y < s1.ny; ++y)
      if (s1.at(x, y))
        for (int z = 0; z < s2.ny; ++z)
          if (s2.at(y, z)) r.set(x, z, true);
  return r;
}

ElementSubset diamond(const BinaryRelation& r, const ElementSubset& b) {
  return r.preimage(b);
}

ElementSubset box(const BinaryRelation& r, const ElementSubset& b) {
  return r.preimage(b.complement()).complement();
}

ElementSubset black_diamond(const BinaryRelation& r, const ElementSubset& a) {
  return r.image(a);
}

ElementSubset black_box(const BinaryRelation& r, const ElementSubset& a) {
  return r.image(a.complement()).complement();
}

ElementSubset modal(const BinaryRelation& r, const ElementSubset& s, Modal which) {
  switch (which) {
    case Modal::Diamond: return diamond(r, s);
    case Modal::Box: return box(r, s);
    case Modal::BlackDiamond: return black_diamond(r, s);
    case Modal::BlackBox: return black_box(r, s);
  }
  throw std::logic_error("unreachable");
}

}  // namespace latdual
