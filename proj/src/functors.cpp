#include "latdual/functors.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "latdual/validate.hpp"

namespace latdual {

namespace {

size_t idx(int i) { return static_cast<size_t>(i); }

// Restriction of a lattice's order to the points listed in keep.
LabeledPoset subposet(const FiniteBoundedLattice& l, const ElementSubset& keep) {
  const std::vector<int> pts = keep.elements();
  const int n = static_cast<int>(pts.size());
  LabeledPoset p;
  p.n = n;
  p.leq.assign(idx(n) * idx(n), 0);
  for (int i = 0; i < n; ++i) {
    p.labels.push_back(l.labels[idx(pts[idx(i)])]);
    for (int j = 0; j < n; ++j)
      p.leq[idx(i) * idx(n) + idx(j)] = l.le(pts[idx(i)], pts[idx(j)]) ? 1 : 0;
  }
  return p;
}

BinaryRelation restrict_relation(const BinaryRelation& r, const std::vector<int>& rows,
                                 const std::vector<int>& cols) {
  BinaryRelation out(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (int i = 0; i < out.nx; ++i)
    for (int j = 0; j < out.ny; ++j)
      out.set(i, j, r.at(rows[idx(i)], cols[idx(j)]));
  return out;
}

// Lattice over a family of subsets ordered by *reverse* inclusion, as the
// concrete-lattice side of a DH space requires.
FiniteBoundedLattice reverse_inclusion_lattice(const std::vector<ElementSubset>& members,
                                               const std::vector<std::string>& pts) {
  const int n = static_cast<int>(members.size());
  LabeledPoset p;
  p.n = n;
  p.leq.assign(idx(n) * idx(n), 0);
  for (int i = 0; i < n; ++i) {
    p.labels.push_back(subset_label(members[idx(i)], pts));
    for (int j = 0; j < n; ++j)
      p.leq[idx(i) * idx(n) + idx(j)] =
          members[idx(j)].is_subset_of(members[idx(i)]) ? 1 : 0;
  }
  return lattice_of(p);
}

int index_of_member(const std::vector<ElementSubset>& members, const ElementSubset& s) {
  for (size_t i = 0; i < members.size(); ++i)
    if (members[i] == s) return static_cast<int>(i);
  throw NotValidated("a translated member left the stable family; input space invalid");
}

// The stable sets of an Urquhart space with their Galois companions, both in
// canonical order and related by position: co[i] = phi(st[i]).
struct GaloisFamilies {
  std::vector<ElementSubset> st, co;
};

GaloisFamilies galois_families(const UrqSpace& u) {
  GaloisFamilies f;
  f.st = stable_sets(u);
  for (const ElementSubset& c : f.st) f.co.push_back(galois_do(u, c, GaloisMap::Phi));
  return f;
}

void require_category(const DualMorphism& m, Category c, const char* who) {
  if (m.cat != c)
    throw CategoryMismatch(std::string(who) + " expects a morphism of its source category");
}

std::vector<int> compose_tables(const std::vector<int>& second,
                                const std::vector<int>& first) {
  std::vector<int> out(first.size());
  for (size_t i = 0; i < first.size(); ++i) out[i] = second[idx(first[i])];
  return out;
}

}  // namespace

// ---- DH of a lattice -------------------------------------------------------

DHSpace dh_of(const FiniteBoundedLattice& a) {
  DHSpace d;
  d.X = filt_lattice(a);
  d.Y = idl_lattice(a);
  d.R = BinaryRelation(a.n, a.n);
  for (int x = 0; x < a.n; ++x)
    for (int y = 0; y < a.n; ++y)
      d.R.set(x, y, !a.le(x, y));  // up(x) misses down(y) exactly when x is not below y
  return d;
}

DualMorphism dh_of_hom(const LatticeHom& alpha) {
  const FiniteBoundedLattice& ap = alpha.source;
  const FiniteBoundedLattice& a = alpha.target;
  DualMorphism m;
  m.cat = Category::DH;
  m.source = dh_of(a);
  m.target = dh_of(ap);
  m.f.resize(idx(a.n));
  m.g.resize(idx(a.n));
  for (int x = 0; x < a.n; ++x) {
    std::vector<int> above, below;
    for (int z = 0; z < ap.n; ++z) {
      if (a.le(x, alpha.map[idx(z)])) above.push_back(z);
      if (a.le(alpha.map[idx(z)], x)) below.push_back(z);
    }
    m.f[idx(x)] = ap.meet_all(above);  // preimage of a filter is a filter
    m.g[idx(x)] = ap.join_all(below);  // preimage of an ideal is an ideal
  }
  return m;
}

// ---- G ----------------------------------------------------------------------

GvGSpace functor_G(const DHSpace& d) {
  const ElementSubset xp = d_prime(d.X);
  const ElementSubset yp = d_prime(d.Y);
  return GvGSpace{subposet(d.X, xp), subposet(d.Y, yp),
                  restrict_relation(d.R, xp.elements(), yp.elements())};
}

DualMorphism functor_G(const DualMorphism& m) {
  require_category(m, Category::DH, "functor_G");
  const DHSpace& s = std::get<DHSpace>(m.source);
  const DHSpace& t = std::get<DHSpace>(m.target);
  const std::vector<int> xs = d_prime(s.X).elements(), xt = d_prime(t.X).elements();
  const std::vector<int> ys = d_prime(s.Y).elements(), yt = d_prime(t.Y).elements();

  DualMorphism out;
  out.cat = Category::GvG;
  out.source = functor_G(s);
  out.target = functor_G(t);
  out.S = BinaryRelation(static_cast<int>(xs.size()), static_cast<int>(xt.size()));
  out.T = BinaryRelation(static_cast<int>(ys.size()), static_cast<int>(yt.size()));
  for (int p = 0; p < out.S.nx; ++p)
    for (int q = 0; q < out.S.ny; ++q)
      out.S.set(p, q, t.X.le(m.f[idx(xs[idx(p)])], xt[idx(q)]));
  for (int p = 0; p < out.T.nx; ++p)
    for (int q = 0; q < out.T.ny; ++q)
      out.T.set(p, q, t.Y.le(m.g[idx(ys[idx(p)])], yt[idx(q)]));
  return out;
}

// ---- Hg ----------------------------------------------------------------------

HgSpace functor_Hg(const GvGSpace& g) {
  const auto [x0, y0] = x0_y0(g.X, g.R, g.Y);
  HgSpace h;
  for (int x : x0.elements()) h.X.push_back(g.X.labels[idx(x)]);
  for (int y : y0.elements()) h.Y.push_back(g.Y.labels[idx(y)]);
  h.R = restrict_relation(g.R, x0.elements(), y0.elements());
  return h;
}

DualMorphism functor_Hg(const DualMorphism& m) {
  require_category(m, Category::GvG, "functor_Hg");
  const GvGSpace& s = std::get<GvGSpace>(m.source);
  const GvGSpace& t = std::get<GvGSpace>(m.target);
  const auto [xs, ys] = x0_y0(s.X, s.R, s.Y);
  const auto [xt, yt] = x0_y0(t.X, t.R, t.Y);

  DualMorphism out;
  out.cat = Category::Hg;
  out.source = functor_Hg(s);
  out.target = functor_Hg(t);
  out.S = restrict_relation(m.S, xs.elements(), xt.elements());
  out.T = restrict_relation(m.T, ys.elements(), yt.elements());
  return out;
}

// ---- U ----------------------------------------------------------------------

UrqSpace functor_U(const HgSpace& h) {
  const auto [px, py] = derived_orders_hg(h);
  const std::vector<std::pair<int, int>> zs = maximal_pairs(h);
  const int n = static_cast<int>(zs.size());
  UrqSpace u{{}, BinaryRelation(n, n), BinaryRelation(n, n)};
  for (const auto& [x, y] : zs)
    u.Z.push_back("(" + h.X[idx(x)] + "," + h.Y[idx(y)] + ")");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      u.le1.set(i, j, px.le(zs[idx(i)].first, zs[idx(j)].first));
      u.le2.set(i, j, py.le(zs[idx(i)].second, zs[idx(j)].second));
    }
  return u;
}

DualMorphism functor_U(const DualMorphism& m) {
  require_category(m, Category::Hg, "functor_U");
  const HgSpace& s = std::get<HgSpace>(m.source);
  const HgSpace& t = std::get<HgSpace>(m.target);
  const auto zs = maximal_pairs(s);
  const auto zt = maximal_pairs(t);

  DualMorphism out;
  out.cat = Category::Urq;
  out.source = functor_U(s);
  out.target = functor_U(t);
  out.S = BinaryRelation(static_cast<int>(zs.size()), static_cast<int>(zt.size()));
  out.T = out.S;
  for (int i = 0; i < out.S.nx; ++i)
    for (int j = 0; j < out.S.ny; ++j) {
      out.S.set(i, j, m.S.at(zs[idx(i)].first, zt[idx(j)].first));
      out.T.set(i, j, m.T.at(zs[idx(i)].second, zt[idx(j)].second));
    }
  return out;
}

// ---- P and its inverse -------------------------------------------------------

PloSpace functor_P(const UrqSpace& u) {
  PloSpace p{u.Z, BinaryRelation(u.n(), u.n())};
  for (int x = 0; x < u.n(); ++x)
    for (int y = 0; y < u.n(); ++y) {
      bool rel = false;
      for (int w = 0; w < u.n() && !rel; ++w) rel = u.le_1(x, w) && u.le_2(y, w);
      p.R.set(x, y, rel);
    }
  return p;
}

DualMorphism functor_P(const DualMorphism& m) {
  require_category(m, Category::Urq, "functor_P");
  DualMorphism out;
  out.cat = Category::Plo;
  out.source = functor_P(std::get<UrqSpace>(m.source));
  out.target = functor_P(std::get<UrqSpace>(m.target));
  out.S = m.S;
  out.T = m.T;
  return out;
}

UrqSpace functor_P_inv(const PloSpace& p) {
  const auto [le1, le2] = quasi_orders_plo(p);
  return UrqSpace{p.Z, le1, le2};
}

DualMorphism functor_P_inv(const DualMorphism& m) {
  require_category(m, Category::Plo, "functor_P_inv");
  DualMorphism out;
  out.cat = Category::Urq;
  out.source = functor_P_inv(std::get<PloSpace>(m.source));
  out.target = functor_P_inv(std::get<PloSpace>(m.target));
  out.S = m.S;
  out.T = m.T;
  return out;
}

// ---- D ----------------------------------------------------------------------

DHSpace functor_D(const UrqSpace& u) {
  const GaloisFamilies fam = galois_families(u);
  std::vector<ElementSubset> co = fam.co;
  normalize_family(co);

  DHSpace d;
  d.X = reverse_inclusion_lattice(fam.st, u.Z);
  d.Y = reverse_inclusion_lattice(co, u.Z);
  d.R = BinaryRelation(d.X.n, d.Y.n);
  for (int i = 0; i < d.X.n; ++i)
    for (int j = 0; j < d.Y.n; ++j)
      d.R.set(i, j, !fam.st[idx(i)].intersect(co[idx(j)]).empty());
  return d;
}

DualMorphism functor_D(const DualMorphism& m) {
  require_category(m, Category::Urq, "functor_D");
  const UrqSpace& s = std::get<UrqSpace>(m.source);
  const UrqSpace& t = std::get<UrqSpace>(m.target);
  const GaloisFamilies fs = galois_families(s);
  const GaloisFamilies ft = galois_families(t);
  std::vector<ElementSubset> cos = fs.co, cot = ft.co;
  normalize_family(cos);
  normalize_family(cot);

  DualMorphism out;
  out.cat = Category::DH;
  out.source = functor_D(s);
  out.target = functor_D(t);

  // f(D) = intersection of the target stable sets C' with D inside box_P(C').
  out.f.resize(fs.st.size());
  for (size_t i = 0; i < fs.st.size(); ++i) {
    ElementSubset acc = ElementSubset::full(t.n());  // the full carrier is stable
    for (const ElementSubset& cp : ft.st)
      if (fs.st[i].is_subset_of(box(m.S, cp))) acc = acc.intersect(cp);
    out.f[i] = index_of_member(ft.st, acc);
  }

  // g(E) = intersection of the phi(C') with E inside box_Q(phi C').
  out.g.resize(cos.size());
  for (size_t j = 0; j < cos.size(); ++j) {
    ElementSubset acc = ElementSubset::full(t.n());
    for (const ElementSubset& pc : ft.co)
      if (cos[j].is_subset_of(box(m.T, pc))) acc = acc.intersect(pc);
    out.g[j] = index_of_member(cot, acc);
  }
  return out;
}

// ---- CG of a lattice ---------------------------------------------------------

namespace {

// Positions of the meet-irreducibles and the K family of a lattice read as a
// filter lattice; shared by cg_of and cg_from_filt.
CGSpace cg_points_and_k(const FiniteBoundedLattice& fl) {
  const std::vector<int> xs = meet_irreducibles(fl).elements();
  const int n = static_cast<int>(xs.size());
  CGSpace c;
  for (int x : xs) c.X.push_back(fl.labels[idx(x)]);
  for (int k = 0; k < fl.n; ++k) {
    ElementSubset u(n);
    for (int p = 0; p < n; ++p)
      if (!fl.le(k, xs[idx(p)])) u.add(p);  // complement of the trace of up(k)
    c.K.push_back(u);
  }
  normalize_family(c.K);
  return c;
}

}  // namespace

CGSpace cg_of(const FiniteBoundedLattice& a) { return cg_points_and_k(filt_lattice(a)); }

DualMorphism cg_of_hom(const LatticeHom& alpha) {
  const FiniteBoundedLattice& a = alpha.source;
  const FiniteBoundedLattice& b = alpha.target;
  const FiniteBoundedLattice fa = filt_lattice(a), fb = filt_lattice(b);
  const std::vector<int> xa = meet_irreducibles(fa).elements();
  const std::vector<int> xb = meet_irreducibles(fb).elements();

  DualMorphism m;
  m.cat = Category::CG;
  m.source = cg_points_and_k(fb);
  m.target = cg_points_and_k(fa);
  m.S = BinaryRelation(static_cast<int>(xb.size()), static_cast<int>(xa.size()));
  for (int q = 0; q < m.S.nx; ++q) {
    // The preimage of the filter generated by d is the filter generated by
    // the meet of everything alpha sends above d.
    std::vector<int> pre;
    for (int z = 0; z < a.n; ++z)
      if (b.le(xb[idx(q)], alpha.map[idx(z)])) pre.push_back(z);
    const int gen = a.meet_all(pre);
    for (int p = 0; p < m.S.ny; ++p) m.S.set(q, p, a.le(xa[idx(p)], gen));
  }
  return m;
}

CGSpace cg_from_filt(const FiniteBoundedLattice& x) { return cg_points_and_k(x); }

DualMorphism cg_from_filt(const LatticeHom& f) {
  const std::vector<int> xs = meet_irreducibles(f.source).elements();
  const std::vector<int> ys = meet_irreducibles(f.target).elements();
  DualMorphism m;
  m.cat = Category::CG;
  m.source = cg_points_and_k(f.source);
  m.target = cg_points_and_k(f.target);
  m.S = BinaryRelation(static_cast<int>(xs.size()), static_cast<int>(ys.size()));
  for (int p = 0; p < m.S.nx; ++p)
    for (int q = 0; q < m.S.ny; ++q)
      m.S.set(p, q, f.target.le(f.map[idx(xs[idx(p)])], ys[idx(q)]));
  return m;
}

// ---- lattice from a CG space ---------------------------------------------------

namespace {

// All unions of subfamilies of K: the empty union plus the saturation of K
// under pairwise unions, in canonical order.
std::vector<ElementSubset> union_family(const CGSpace& c) {
  std::vector<ElementSubset> fam{ElementSubset(c.n())};
  fam.insert(fam.end(), c.K.begin(), c.K.end());
  normalize_family(fam);
  for (size_t i = 0; i < fam.size(); ++i)
    for (size_t j = 0; j < i; ++j) {
      const ElementSubset u = fam[i].unite(fam[j]);
      if (std::find(fam.begin(), fam.end(), u) == fam.end()) fam.push_back(u);
    }
  normalize_family(fam);
  return fam;
}

FiniteBoundedLattice inclusion_lattice(const std::vector<ElementSubset>& members,
                                       const std::vector<std::string>& pts) {
  const int n = static_cast<int>(members.size());
  LabeledPoset p;
  p.n = n;
  p.leq.assign(idx(n) * idx(n), 0);
  for (int i = 0; i < n; ++i) {
    p.labels.push_back(subset_label(members[idx(i)], pts));
    for (int j = 0; j < n; ++j)
      p.leq[idx(i) * idx(n) + idx(j)] =
          members[idx(i)].is_subset_of(members[idx(j)]) ? 1 : 0;
  }
  return lattice_of(p);
}

}  // namespace

FiniteBoundedLattice filt_from_cg(const CGSpace& c) {
  return inclusion_lattice(union_family(c), c.X);
}

LatticeHom filt_from_cg(const DualMorphism& s) {
  require_category(s, Category::CG, "filt_from_cg");
  const CGSpace& c1 = std::get<CGSpace>(s.source);
  const CGSpace& c2 = std::get<CGSpace>(s.target);
  const std::vector<ElementSubset> h1 = union_family(c1);
  const std::vector<ElementSubset> h2 = union_family(c2);

  LatticeHom out;
  out.source = inclusion_lattice(h1, c1.X);
  out.target = inclusion_lattice(h2, c2.X);
  for (const ElementSubset& h : h1) {
    ElementSubset img(c2.n());
    for (const ElementSubset& v : c2.K)
      if (s.S.preimage(v).is_subset_of(h)) img = img.unite(v);
    out.map.push_back(index_of_member(h2, img));
  }
  return out;
}

// ---- the open-filter embedding -----------------------------------------------

DHSpace e_functor(const FiniteBoundedLattice& x) {
  DHSpace d;
  d.X = x;
  d.Y = filt_lattice(x);
  d.R = BinaryRelation(x.n, x.n);
  for (int a = 0; a < x.n; ++a)
    for (int k = 0; k < x.n; ++k) d.R.set(a, k, !x.le(k, a));  // a outside up(k)
  return d;
}

DualMorphism e_functor(const LatticeHom& f) {
  const FiniteBoundedLattice& x1 = f.source;
  const FiniteBoundedLattice& x2 = f.target;
  const FiniteBoundedLattice f1 = filt_lattice(x1), f2 = filt_lattice(x2);

  // The filter-preimage map Filt(x2) -> Filt(x1), on principal generators.
  LatticeHom finv{f2, f1, {}};
  for (int l = 0; l < x2.n; ++l) {
    std::vector<int> pre;
    for (int z = 0; z < x1.n; ++z)
      if (x2.le(l, f.map[idx(z)])) pre.push_back(z);
    finv.map.push_back(x1.meet_all(pre));
  }
  const auto r = adjoint(finv, AdjointSide::Right);
  if (!r)
    throw NotValidated(
        "the filter-preimage map has no right adjoint; the arrow does not "
        "preserve the structure this embedding needs");

  DualMorphism m;
  m.cat = Category::DH;
  m.source = e_functor(x1);
  m.target = e_functor(x2);
  m.f = f.map;
  m.g = *r;
  return m;
}

// ---- identities ----------------------------------------------------------------

namespace {

BinaryRelation cg_specialization_dual(const CGSpace& c) {
  // x <= y iff every complement of a K member containing x also contains y.
  BinaryRelation s(c.n(), c.n());
  for (int x = 0; x < c.n(); ++x)
    for (int y = 0; y < c.n(); ++y) {
      bool le = true;
      for (const ElementSubset& u : c.K)
        if (!u.contains(x) && u.contains(y)) le = false;
      s.set(x, y, le);
    }
  return s;
}

}  // namespace

DualMorphism identity_morphism(const AnySpace& s) {
  DualMorphism m;
  m.cat = category_of(s);
  m.source = s;
  m.target = s;
  switch (m.cat) {
    case Category::Filt: {
      const auto& l = std::get<FiniteBoundedLattice>(s);
      m.f.resize(idx(l.n));
      for (int i = 0; i < l.n; ++i) m.f[idx(i)] = i;
      break;
    }
    case Category::DH: {
      const auto& d = std::get<DHSpace>(s);
      m.f.resize(idx(d.X.n));
      m.g.resize(idx(d.Y.n));
      for (int i = 0; i < d.X.n; ++i) m.f[idx(i)] = i;
      for (int i = 0; i < d.Y.n; ++i) m.g[idx(i)] = i;
      break;
    }
    case Category::GvG: {
      const auto& g = std::get<GvGSpace>(s);
      m.S = BinaryRelation::from_leq(g.X);
      m.T = BinaryRelation::from_leq(g.Y);
      break;
    }
    case Category::Hg: {
      const auto [px, py] = derived_orders_hg(std::get<HgSpace>(s));
      m.S = BinaryRelation::from_leq(px);
      m.T = BinaryRelation::from_leq(py);
      break;
    }
    case Category::Urq: {
      const auto& u = std::get<UrqSpace>(s);
      m.S = u.le1;
      m.T = u.le2;
      break;
    }
    case Category::Plo: {
      const auto [le1, le2] = quasi_orders_plo(std::get<PloSpace>(s));
      m.S = le1;
      m.T = le2;
      break;
    }
    case Category::CG:
      m.S = cg_specialization_dual(std::get<CGSpace>(s));
      break;
  }
  return m;
}

// ---- star composition ------------------------------------------------------------

namespace {

// x (s2 * s1) z iff membership of x in box_{s1} box_{s2} C forces z into C,
// for every C in the given family over the far carrier.
BinaryRelation star_by_family(const BinaryRelation& s1, const BinaryRelation& s2,
                              const std::vector<ElementSubset>& family) {
  BinaryRelation out(s1.nx, s2.ny);
  for (auto& cell : out.mat) cell = 1;
  for (const ElementSubset& c : family) {
    const ElementSubset bb = box(s1, box(s2, c));
    for (int x = 0; x < out.nx; ++x) {
      if (!bb.contains(x)) continue;
      for (int z = 0; z < out.ny; ++z)
        if (!c.contains(z)) out.set(x, z, false);
    }
  }
  return out;
}

// y (t2 * t1) w iff membership of w in A forces y into diamond_{t1}
// diamond_{t2} A, for every A in the family (already pushed to the far Y).
BinaryRelation star_by_codomain_family(const BinaryRelation& t1, const BinaryRelation& t2,
                                       const std::vector<ElementSubset>& family) {
  BinaryRelation out(t1.nx, t2.ny);
  for (auto& cell : out.mat) cell = 1;
  for (const ElementSubset& a : family) {
    const ElementSubset dd = diamond(t1, diamond(t2, a));
    for (int y = 0; y < out.nx; ++y) {
      if (dd.contains(y)) continue;
      for (int w = 0; w < out.ny; ++w)
        if (a.contains(w)) out.set(y, w, false);
    }
  }
  return out;
}

}  // namespace

DualMorphism star_compose(const DualMorphism& m2, const DualMorphism& m1) {
  if (m1.cat != m2.cat)
    throw CategoryMismatch("star composition needs morphisms of one category");
  if (!(m1.target == m2.source))
    throw NotComposable("middle spaces disagree");

  DualMorphism out;
  out.cat = m1.cat;
  out.source = m1.source;
  out.target = m2.target;

  switch (m1.cat) {
    case Category::Filt:
      out.f = compose_tables(m2.f, m1.f);
      break;

    case Category::DH:
      out.f = compose_tables(m2.f, m1.f);
      out.g = compose_tables(m2.g, m1.g);
      break;

    case Category::CG: {
      const auto& c3 = std::get<CGSpace>(m2.target);
      out.S = star_by_family(m1.S, m2.S, stable_sets(c3));
      break;
    }

    case Category::GvG: {
      const auto& g3 = std::get<GvGSpace>(m2.target);
      const std::vector<ElementSubset> fam = stable_sets(g3);
      out.S = star_by_family(m1.S, m2.S, fam);
      std::vector<ElementSubset> pushed;
      for (const ElementSubset& u : fam) pushed.push_back(black_diamond(g3.R, u));
      out.T = star_by_codomain_family(m1.T, m2.T, pushed);
      break;
    }

    case Category::Hg: {
      const auto& h3 = std::get<HgSpace>(m2.target);
      const std::vector<ElementSubset> fam = stable_sets(h3);
      out.S = star_by_family(m1.S, m2.S, fam);
      std::vector<ElementSubset> pushed;
      for (const ElementSubset& a : fam) pushed.push_back(black_diamond(h3.R, a));
      out.T = star_by_codomain_family(m1.T, m2.T, pushed);
      break;
    }

    case Category::Urq: {
      const auto& u3 = std::get<UrqSpace>(m2.target);
      const std::vector<ElementSubset> fam = stable_sets(u3);
      out.S = star_by_family(m1.S, m2.S, fam);
      std::vector<ElementSubset> pushed;
      for (const ElementSubset& c : fam) pushed.push_back(galois_do(u3, c, GaloisMap::Phi));
      out.T = star_by_family(m1.T, m2.T, pushed);
      break;
    }

    case Category::Plo: {
      const auto& p3 = std::get<PloSpace>(m2.target);
      const std::vector<ElementSubset> fam = stable_sets(p3);
      out.S = star_by_family(m1.S, m2.S, fam);
      std::vector<ElementSubset> pushed;
      for (const ElementSubset& c : fam)
        pushed.push_back(black_diamond(p3.R, c).complement());
      out.T = star_by_family(m1.T, m2.T, pushed);
      break;
    }
  }
  return out;
}

}  // namespace latdual
