#include "latdual/spaces.hpp"

#include <algorithm>
#include <map>

#include "latdual/validate.hpp"

namespace latdual {

std::string_view category_name(Category c) {
  switch (c) {
    case Category::Filt: return "filt";
    case Category::CG: return "cg";
    case Category::DH: return "dh";
    case Category::GvG: return "gvg";
    case Category::Hg: return "hg";
    case Category::Urq: return "urq";
    case Category::Plo: return "plo";
  }
  return "?";
}

std::optional<Category> category_from_name(std::string_view name) {
  for (Category c : {Category::Filt, Category::CG, Category::DH, Category::GvG,
                     Category::Hg, Category::Urq, Category::Plo})
    if (category_name(c) == name) return c;
  return std::nullopt;
}

Category category_of(const AnySpace& s) {
  return static_cast<Category>(s.index());
}

int StableFamily::index_of(const ElementSubset& s) const {
  for (size_t i = 0; i < members.size(); ++i)
    if (members[i] == s) return static_cast<int>(i);
  return -1;
}

BinaryRelation image_containment_order(const BinaryRelation& r) {
  std::vector<ElementSubset> img;
  img.reserve(static_cast<size_t>(r.nx));
  for (int x = 0; x < r.nx; ++x) img.push_back(r.image_of(x));
  BinaryRelation leq(r.nx, r.nx);
  for (int x = 0; x < r.nx; ++x)
    for (int y = 0; y < r.nx; ++y)
      if (img[static_cast<size_t>(y)].is_subset_of(img[static_cast<size_t>(x)]))
        leq.set(x, y, true);
  return leq;
}

BinaryRelation preimage_containment_order(const BinaryRelation& r) {
  return image_containment_order(r.converse());
}

namespace {

// Partial-order check for a containment order (reflexivity and transitivity
// hold by construction); returns an offending pair on failure.
std::optional<std::pair<int, int>> antisymmetry_failure(const BinaryRelation& leq) {
  for (int x = 0; x < leq.nx; ++x)
    for (int y = x + 1; y < leq.nx; ++y)
      if (leq.at(x, y) && leq.at(y, x)) return std::make_pair(x, y);
  return std::nullopt;
}

}  // namespace

std::pair<LabeledPoset, LabeledPoset> derived_orders_hg(
    const std::vector<std::string>& x_labels,
    const std::vector<std::string>& y_labels, const BinaryRelation& r) {
  BinaryRelation lx = image_containment_order(r);
  BinaryRelation ly = preimage_containment_order(r);
  if (auto bad = antisymmetry_failure(lx))
    throw NotAntisymmetric("X order: " + x_labels[static_cast<size_t>(bad->first)] +
                           " and " + x_labels[static_cast<size_t>(bad->second)] +
                           " have equal R-images");
  if (auto bad = antisymmetry_failure(ly))
    throw NotAntisymmetric("Y order: " + y_labels[static_cast<size_t>(bad->first)] +
                           " and " + y_labels[static_cast<size_t>(bad->second)] +
                           " have equal R-preimages");
  return {LabeledPoset{r.nx, lx.mat, x_labels}, LabeledPoset{r.ny, ly.mat, y_labels}};
}

std::pair<LabeledPoset, LabeledPoset> derived_orders_hg(const HgSpace& h) {
  return derived_orders_hg(h.X, h.Y, h.R);
}

std::pair<BinaryRelation, BinaryRelation> quasi_orders_plo(const PloSpace& p) {
  return {image_containment_order(p.R), preimage_containment_order(p.R)};
}

namespace {

// Maximal elements of s under the order of p.
ElementSubset maxima(const LabeledPoset& p, const ElementSubset& s) {
  ElementSubset out(s.universe);
  for (int x = 0; x < s.universe; ++x) {
    if (!s.contains(x)) continue;
    bool top_of_s = true;
    for (int y = 0; y < s.universe && top_of_s; ++y)
      if (y != x && s.contains(y) && p.le(x, y)) top_of_s = false;
    if (top_of_s) out.add(x);
  }
  return out;
}

}  // namespace

std::pair<ElementSubset, ElementSubset> x0_y0(const LabeledPoset& x,
                                              const BinaryRelation& r,
                                              const LabeledPoset& y) {
  if (r.nx != x.n || r.ny != y.n)
    throw SideMismatch("relation does not join the given posets");
  ElementSubset x0(x.n), y0(y.n);
  for (int j = 0; j < y.n; ++j)
    x0 = x0.unite(maxima(x, r.preimage_of(j)));
  for (int i = 0; i < x.n; ++i)
    y0 = y0.unite(maxima(y, r.image_of(i)));
  return {x0, y0};
}

std::vector<std::pair<int, int>> maximal_pairs(const HgSpace& h) {
  const BinaryRelation lx = image_containment_order(h.R);
  const BinaryRelation ly = preimage_containment_order(h.R);
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < h.R.nx; ++x)
    for (int y = 0; y < h.R.ny; ++y) {
      if (!h.R.at(x, y)) continue;
      bool x_max = true;
      for (int x2 = 0; x2 < h.R.nx && x_max; ++x2)
        if (x2 != x && lx.at(x, x2) && h.R.at(x2, y)) x_max = false;
      bool y_max = true;
      for (int y2 = 0; y2 < h.R.ny && y_max; ++y2)
        if (y2 != y && ly.at(y, y2) && h.R.at(x, y2)) y_max = false;
      if (x_max && y_max) out.emplace_back(x, y);
    }
  return out;
}

ElementSubset galois_do(const UrqSpace& u, const ElementSubset& c, GaloisMap which) {
  if (c.universe != u.n())
    throw SideMismatch("argument does not live on the space's carrier");
  const BinaryRelation& le = (which == GaloisMap::Phi) ? u.le2 : u.le1;
  return le.preimage(c).complement();
}

ElementSubset delta_closure(const CGSpace& c, const ElementSubset& s) {
  if (s.universe != c.n())
    throw SideMismatch("argument does not live on the space's carrier");
  ElementSubset out = ElementSubset::full(c.n());
  for (const ElementSubset& u : c.K) {
    ElementSubset a = u.complement();
    if (s.is_subset_of(a)) out = out.intersect(a);
  }
  return out;
}

std::vector<ElementSubset> closure_fixed_points(
    int n, const std::function<ElementSubset(const ElementSubset&)>& cl) {
  std::map<std::vector<uint8_t>, int> seen;
  std::vector<ElementSubset> found;
  auto insert = [&](const ElementSubset& s) -> bool {
    if (seen.emplace(s.in, 1).second) {
      found.push_back(s);
      return true;
    }
    return false;
  };
  insert(cl(ElementSubset(n)));
  for (int z = 0; z < n; ++z) {
    ElementSubset pt(n);
    pt.add(z);
    insert(cl(pt));
  }
  // Saturate under closure of unions: every closed set is a finite join of
  // point closures, so the loop below reaches all of them.
  for (size_t i = 0; i < found.size(); ++i)
    for (size_t j = 0; j < i; ++j)
      insert(cl(found[i].unite(found[j])));
  std::vector<ElementSubset> out = found;
  normalize_family(out);
  return out;
}

namespace {

ElementSubset box_bdiamond(const BinaryRelation& r, const ElementSubset& s) {
  return box(r, black_diamond(r, s));
}

bool is_upset_of(const LabeledPoset& p, const ElementSubset& s) {
  for (int x = 0; x < p.n; ++x)
    if (s.contains(x))
      for (int y = 0; y < p.n; ++y)
        if (p.le(x, y) && !s.contains(y)) return false;
  return true;
}

}  // namespace

std::vector<ElementSubset> stable_sets(const GvGSpace& g) {
  std::vector<ElementSubset> fixed = closure_fixed_points(
      g.R.nx, [&](const ElementSubset& s) { return box_bdiamond(g.R, s); });
  // Stability forces upward closure only when the space satisfies its order
  // conditions, so candidates are filtered against the stored order.
  std::vector<ElementSubset> out;
  for (const ElementSubset& s : fixed)
    if (is_upset_of(g.X, s)) out.push_back(s);
  return out;
}

std::vector<ElementSubset> stable_sets(const HgSpace& h) {
  return closure_fixed_points(
      h.R.nx, [&](const ElementSubset& s) { return box_bdiamond(h.R, s); });
}

std::vector<ElementSubset> stable_sets(const UrqSpace& u) {
  // psi after phi is inflationary only on le1-upsets, so close under le1
  // first. The composite is then a closure operator on arbitrary subsets
  // whose fixed points are exactly the stable sets.
  return closure_fixed_points(u.n(), [&](const ElementSubset& s) {
    return galois_do(u, galois_do(u, u.le1.image(s), GaloisMap::Phi),
                     GaloisMap::Psi);
  });
}

std::vector<ElementSubset> stable_sets(const PloSpace& p) {
  return closure_fixed_points(
      p.n(), [&](const ElementSubset& s) { return box_bdiamond(p.R, s); });
}

std::vector<ElementSubset> stable_sets(const CGSpace& c) {
  std::vector<ElementSubset> out;
  out.reserve(c.K.size());
  for (const ElementSubset& u : c.K) out.push_back(u.complement());
  normalize_family(out);
  return out;
}

std::string subset_label(const ElementSubset& s,
                         const std::vector<std::string>& point_labels) {
  std::string out = "{";
  bool first = true;
  for (int x : s.elements()) {
    if (!first) out += ",";
    out += point_labels[static_cast<size_t>(x)];
    first = false;
  }
  return out + "}";
}

FiniteBoundedLattice lattice_of_family(const std::vector<ElementSubset>& members,
                                       const std::vector<std::string>& member_labels) {
  if (members.empty()) throw EmptyFamily("family has no members");
  const int n = static_cast<int>(members.size());
  LabeledPoset p{n, std::vector<uint8_t>(static_cast<size_t>(n) * n, 0), member_labels};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (members[static_cast<size_t>(i)].is_subset_of(members[static_cast<size_t>(j)]))
        p.leq[static_cast<size_t>(i) * n + j] = 1;
  try {
    return lattice_of(p);
  } catch (const NoBound& e) {
    throw NotALattice(e.what());
  }
}

namespace {

void require_valid(const ValidationReport& report) {
  if (!report.ok) throw NotValidated(report.summary());
}

StableFamily family_from_sets(Category cat, int carrier,
                              const std::vector<std::string>& point_labels,
                              std::vector<ElementSubset> members) {
  StableFamily fam;
  fam.cat = cat;
  fam.carrier = carrier;
  fam.point_labels = point_labels;
  fam.members = std::move(members);
  std::vector<std::string> labels;
  labels.reserve(fam.members.size());
  for (const ElementSubset& m : fam.members)
    labels.push_back(subset_label(m, point_labels));
  fam.lattice = lattice_of_family(fam.members, labels);
  return fam;
}

// The principal-upset family of a lattice, ordered by inclusion; this is the
// lattice of compact-generated filters, anti-isomorphic to the input.
StableFamily principal_upset_family(Category cat, const FiniteBoundedLattice& l) {
  std::vector<std::pair<ElementSubset, std::string>> rows;
  rows.reserve(static_cast<size_t>(l.n));
  for (int k = 0; k < l.n; ++k)
    rows.emplace_back(l.up_set(k), "↑" + l.labels[static_cast<size_t>(k)]);
  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return subset_lex_less(a.first, b.first); });
  StableFamily fam;
  fam.cat = cat;
  fam.carrier = l.n;
  fam.point_labels = l.labels;
  std::vector<std::string> labels;
  for (auto& [member, label] : rows) {
    fam.members.push_back(member);
    labels.push_back(label);
  }
  fam.lattice = lattice_of_family(fam.members, labels);
  return fam;
}

}  // namespace

StableFamily stable_family(const FiniteBoundedLattice& l) {
  require_valid(validate_space(l));
  return principal_upset_family(Category::Filt, l);
}

StableFamily stable_family(const DHSpace& d) {
  require_valid(validate_space(d));
  return principal_upset_family(Category::DH, d.X);
}

StableFamily stable_family(const CGSpace& c) {
  require_valid(validate_space(c));
  return family_from_sets(Category::CG, c.n(), c.X, stable_sets(c));
}

StableFamily stable_family(const GvGSpace& g) {
  require_valid(validate_space(g));
  return family_from_sets(Category::GvG, g.R.nx, g.X.labels, stable_sets(g));
}

StableFamily stable_family(const HgSpace& h) {
  require_valid(validate_space(h));
  return family_from_sets(Category::Hg, h.nx(), h.X, stable_sets(h));
}

StableFamily stable_family(const UrqSpace& u) {
  require_valid(validate_space(u));
  StableFamily fam = family_from_sets(Category::Urq, u.n(), u.Z, stable_sets(u));
  fam.phi.reserve(fam.members.size());
  for (const ElementSubset& m : fam.members)
    fam.phi.push_back(galois_do(u, m, GaloisMap::Phi));
  return fam;
}

StableFamily stable_family(const PloSpace& p) {
  require_valid(validate_space(p));
  return family_from_sets(Category::Plo, p.n(), p.Z, stable_sets(p));
}

StableFamily stable_family(const AnySpace& s) {
  return std::visit([](const auto& space) { return stable_family(space); }, s);
}

}  // namespace latdual
