#include "latdual/validate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace latdual {

namespace {

using Labels = std::vector<std::string>;
using Witness = std::optional<std::vector<std::string>>;

struct Reporter {
  ValidationReport rep;

  void add(std::string clause, ClauseStatus st, std::vector<std::string> wit = {},
           std::string note = {}) {
    if (st == ClauseStatus::Failed) {
      rep.ok = false;
      if (rep.first_failure < 0)
        rep.first_failure = static_cast<int>(rep.clauses.size());
    }
    rep.clauses.push_back({std::move(clause), st, std::move(wit), std::move(note)});
  }

  // A clause whose check either produced a least counterexample or nothing.
  void check(std::string clause, Witness wit, std::string note = {}) {
    if (wit)
      add(std::move(clause), ClauseStatus::Failed, std::move(*wit), std::move(note));
    else
      add(std::move(clause), ClauseStatus::Checked, {}, std::move(note));
  }

  void vacuous(std::string clause, std::string note) {
    add(std::move(clause), ClauseStatus::Vacuous, {}, std::move(note));
  }

  void skipped(std::string clause, std::string note) {
    add(std::move(clause), ClauseStatus::Skipped, {}, std::move(note));
  }
};

// ---- order axioms ------------------------------------------------------

struct PosetCheck {
  Witness wit;
  std::string note;
};

PosetCheck poset_failure(int n, const std::function<bool(int, int)>& le,
                         const Labels& lab) {
  for (int x = 0; x < n; ++x)
    if (!le(x, x)) return {{{lab[x]}}, "fails reflexivity"};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y && le(x, y) && le(y, x))
        return {{{lab[x], lab[y]}}, "fails antisymmetry"};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!le(x, y)) continue;
      for (int z = 0; z < n; ++z)
        if (le(y, z) && !le(x, z))
          return {{{lab[x], lab[y], lab[z]}}, "fails transitivity"};
    }
  return {std::nullopt, {}};
}

PosetCheck quasi_order_failure(int n, const std::function<bool(int, int)>& le,
                               const Labels& lab) {
  for (int x = 0; x < n; ++x)
    if (!le(x, x)) return {{{lab[x]}}, "fails reflexivity"};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!le(x, y)) continue;
      for (int z = 0; z < n; ++z)
        if (le(y, z) && !le(x, z))
          return {{{lab[x], lab[y], lab[z]}}, "fails transitivity"};
    }
  return {std::nullopt, {}};
}

Witness antisymmetry_failure(const BinaryRelation& q, const Labels& lab) {
  for (int x = 0; x < q.nx; ++x)
    for (int y = x + 1; y < q.nx; ++y)
      if (q.at(x, y) && q.at(y, x)) return {{lab[x], lab[y]}};
  return std::nullopt;
}

// ---- family utilities --------------------------------------------------

bool family_contains(const std::vector<ElementSubset>& fam, const ElementSubset& s) {
  return std::binary_search(fam.begin(), fam.end(), s, subset_lex_less);
}

std::vector<ElementSubset> sorted_copy(std::vector<ElementSubset> fam) {
  normalize_family(fam);
  return fam;
}

ElementSubset subset_of_mask(int n, unsigned mask) {
  ElementSubset s(n);
  for (int i = 0; i < n; ++i)
    if (mask & (1u << i)) s.add(i);
  return s;
}

bool is_upset_of(const LabeledPoset& p, const ElementSubset& s) {
  for (int x = 0; x < p.n; ++x) {
    if (!s.contains(x)) continue;
    for (int y = 0; y < p.n; ++y)
      if (p.le(x, y) && !s.contains(y)) return false;
  }
  return true;
}

bool is_downset_of(const LabeledPoset& p, const ElementSubset& s) {
  for (int x = 0; x < p.n; ++x) {
    if (!s.contains(x)) continue;
    for (int y = 0; y < p.n; ++y)
      if (p.le(y, x) && !s.contains(y)) return false;
  }
  return true;
}

// All subsets of {0..n-1} satisfying pred, in subset_lex_less order.  Callers
// guard n against ValidateOptions::upset_enum_bound first.
std::vector<ElementSubset> all_subsets_where(
    int n, const std::function<bool(const ElementSubset&)>& pred) {
  std::vector<ElementSubset> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    ElementSubset s = subset_of_mask(n, mask);
    if (pred(s)) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), subset_lex_less);
  return out;
}

// The closed sets of the topology a finite subbasis of closed sets generates:
// the saturation of the subbasis together with the empty set and the whole
// carrier under pairwise intersections and unions.  Returns nothing when the
// family outgrows the cap.
constexpr size_t kGeneratedFamilyCap = 4096;

std::optional<std::vector<ElementSubset>> generated_closed_sets(
    int n, const std::vector<ElementSubset>& subbasis) {
  std::map<std::vector<uint8_t>, int> seen;
  std::vector<ElementSubset> fam;
  auto insert = [&](const ElementSubset& s) -> bool {
    if (seen.emplace(s.in, 1).second) {
      fam.push_back(s);
      return true;
    }
    return false;
  };
  insert(ElementSubset(n));
  insert(ElementSubset::full(n));
  for (const ElementSubset& s : subbasis) insert(s);
  bool grew = true;
  while (grew) {
    grew = false;
    const size_t sz = fam.size();
    for (size_t i = 0; i < sz; ++i)
      for (size_t j = i + 1; j < sz; ++j) {
        if (insert(fam[i].intersect(fam[j]))) grew = true;
        if (insert(fam[i].unite(fam[j]))) grew = true;
        if (fam.size() > kGeneratedFamilyCap) return std::nullopt;
      }
  }
  std::sort(fam.begin(), fam.end(), subset_lex_less);
  return fam;
}

// ---- shared morphism clause blocks --------------------------------------

// The four stability/separation clauses shared by the two-sided relational
// morphisms (GvG and Hartung), plus the R-forward clause.  "transform" is the
// category's down-operator on X-side sets: bdiamond(R, -) for both GvG and
// Hartung.
void two_sided_morphism_clauses(Reporter& r, const BinaryRelation& s,
                                const BinaryRelation& t, const BinaryRelation& r1,
                                const BinaryRelation& r2,
                                const std::vector<ElementSubset>& fam1,
                                const std::vector<ElementSubset>& fam2,
                                const Labels& x1, const Labels& y1,
                                const Labels& x2, const Labels& y2) {
  std::vector<ElementSubset> boxes, bdia2, dia;
  boxes.reserve(fam2.size());
  for (const ElementSubset& u : fam2) {
    boxes.push_back(box(s, u));
    bdia2.push_back(black_diamond(r2, u));
    dia.push_back(diamond(t, bdia2.back()));
  }

  auto stab = [&]() -> Witness {
    for (size_t i = 0; i < fam2.size(); ++i)
      if (!family_contains(fam1, boxes[i])) return {{subset_label(fam2[i], x2)}};
    return std::nullopt;
  };
  r.check("box_S of a stable set is stable", stab());

  auto commute = [&]() -> Witness {
    for (size_t i = 0; i < fam2.size(); ++i)
      if (black_diamond(r1, boxes[i]) != dia[i]) return {{subset_label(fam2[i], x2)}};
    return std::nullopt;
  };
  r.check("bdiamond of box_S equals diamond_T of bdiamond", commute());

  auto sep_s = [&]() -> Witness {
    for (int x = 0; x < s.nx; ++x)
      for (int xp = 0; xp < s.ny; ++xp) {
        if (s.at(x, xp)) continue;
        bool found = false;
        for (size_t i = 0; i < fam2.size() && !found; ++i)
          found = boxes[i].contains(x) && !fam2[i].contains(xp);
        if (!found) return {{x1[x], x2[xp]}};
      }
    return std::nullopt;
  };
  r.check("pairs outside S are separated by a box_S image", sep_s());

  auto sep_t = [&]() -> Witness {
    for (int y = 0; y < t.nx; ++y)
      for (int yp = 0; yp < t.ny; ++yp) {
        if (t.at(y, yp)) continue;
        bool found = false;
        for (size_t i = 0; i < fam2.size() && !found; ++i)
          found = !dia[i].contains(y) && bdia2[i].contains(yp);
        if (!found) return {{y1[y], y2[yp]}};
      }
    return std::nullopt;
  };
  r.check("pairs outside T are separated by a bdiamond image", sep_t());

  auto forward = [&]() -> Witness {
    for (int x = 0; x < r1.nx; ++x)
      for (int y = 0; y < r1.ny; ++y) {
        if (!r1.at(x, y)) continue;
        bool found = false;
        for (int xp = 0; xp < r2.nx && !found; ++xp) {
          if (!s.at(x, xp)) continue;
          for (int yp = 0; yp < r2.ny && !found; ++yp)
            found = t.at(y, yp) && r2.at(xp, yp);
        }
        if (!found) return {{x1[x], y1[y]}};
      }
    return std::nullopt;
  };
  r.check("R1-related pairs map into R2 through S and T",
          forward());
}

// The meet-semilattice homomorphism conditions on one component of a DH
// morphism, including the finite-meet preservation of its left adjoint.
void dh_component_clauses(Reporter& r, const FiniteBoundedLattice& a,
                          const FiniteBoundedLattice& b, const std::vector<int>& f,
                          const std::string& name) {
  auto meets = [&]() -> Witness {
    for (int x = 0; x < a.n; ++x)
      for (int y = x; y < a.n; ++y)
        if (f[static_cast<size_t>(a.meet(x, y))] !=
            b.meet(f[static_cast<size_t>(x)], f[static_cast<size_t>(y)]))
          return {{a.labels[x], a.labels[y]}};
    return std::nullopt;
  };
  r.check(name + " preserves binary meets", meets());

  auto top = [&]() -> Witness {
    if (f[static_cast<size_t>(a.top)] != b.top) return {{a.labels[a.top]}};
    return std::nullopt;
  };
  r.check(name + " preserves the top", top());

  // ell(y) = meet of the preimage of the upset of y; the left adjoint when
  // the component preserves all meets.
  std::vector<int> ell(static_cast<size_t>(b.n));
  for (int y = 0; y < b.n; ++y) {
    std::vector<int> pre;
    for (int x = 0; x < a.n; ++x)
      if (b.le(y, f[static_cast<size_t>(x)])) pre.push_back(x);
    ell[static_cast<size_t>(y)] = a.meet_all(pre);
  }

  auto adj_meets = [&]() -> Witness {
    for (int y = 0; y < b.n; ++y)
      for (int yp = y; yp < b.n; ++yp)
        if (ell[static_cast<size_t>(b.meet(y, yp))] !=
            a.meet(ell[static_cast<size_t>(y)], ell[static_cast<size_t>(yp)]))
          return {{b.labels[y], b.labels[yp]}};
    return std::nullopt;
  };
  r.check("the left adjoint of " + name + " preserves binary meets", adj_meets());

  auto adj_top = [&]() -> Witness {
    if (ell[static_cast<size_t>(b.top)] != a.top) return {{b.labels[b.top]}};
    return std::nullopt;
  };
  r.check("the left adjoint of " + name + " preserves the top", adj_top(),
          "equivalently, only the top maps to the top");
}

void require_map(const std::vector<int>& f, int dom, int cod, const char* what) {
  if (static_cast<int>(f.size()) != dom)
    throw SideMismatch(std::string(what) + " is not defined on the whole source carrier");
  for (int v : f)
    if (v < 0 || v >= cod)
      throw SideMismatch(std::string(what) + " maps outside the target carrier");
}

void require_dims(const BinaryRelation& r, int nx, int ny, const char* what) {
  if (r.nx != nx || r.ny != ny)
    throw SideMismatch(std::string(what) + " does not match the carriers");
}

}  // namespace

std::string ValidationReport::summary() const {
  if (ok) return "ok";
  const ClauseReport& c = clauses[static_cast<size_t>(first_failure)];
  std::string s = "FAIL " + c.clause;
  if (!c.witnesses.empty()) {
    s += " [";
    for (size_t i = 0; i < c.witnesses.size(); ++i) {
      if (i) s += ", ";
      s += c.witnesses[i];
    }
    s += "]";
  }
  return s;
}

// ---- bounded lattice -----------------------------------------------------

ValidationReport validate_space(const FiniteBoundedLattice& l, const ValidateOptions&) {
  const int n = l.n;
  if (n <= 0 || l.labels.size() != static_cast<size_t>(n) ||
      l.leq.size() != static_cast<size_t>(n) * n ||
      l.meet_tab.size() != static_cast<size_t>(n) * n ||
      l.join_tab.size() != static_cast<size_t>(n) * n)
    throw SideMismatch("lattice tables do not match the carrier");

  Reporter r;
  PosetCheck pc = poset_failure(n, [&](int a, int b) { return l.le(a, b); }, l.labels);
  r.check("order is a partial order", pc.wit, pc.note);

  auto table = [&](bool is_meet) -> Witness {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const int m = is_meet ? l.meet(a, b) : l.join(a, b);
        if (m < 0 || m >= n) return {{l.labels[a], l.labels[b]}};
        const bool below = is_meet ? (l.le(m, a) && l.le(m, b))
                                   : (l.le(a, m) && l.le(b, m));
        if (!below) return {{l.labels[a], l.labels[b]}};
        for (int z = 0; z < n; ++z) {
          const bool competes = is_meet ? (l.le(z, a) && l.le(z, b) && !l.le(z, m))
                                        : (l.le(a, z) && l.le(b, z) && !l.le(m, z));
          if (competes) return {{l.labels[a], l.labels[b], l.labels[z]}};
        }
      }
    return std::nullopt;
  };
  r.check("meet entries are greatest lower bounds", table(true));
  r.check("join entries are least upper bounds", table(false));

  auto bound = [&](int e, bool least) -> Witness {
    if (e < 0 || e >= n) return {{std::to_string(e)}};
    for (int x = 0; x < n; ++x)
      if (!(least ? l.le(e, x) : l.le(x, e))) return {{l.labels[x]}};
    return std::nullopt;
  };
  r.check("bottom is the least element", bound(l.bottom, true));
  r.check("top is the greatest element", bound(l.top, false));
  return r.rep;
}

// ---- DH ------------------------------------------------------------------

ValidationReport validate_space(const DHSpace& d, const ValidateOptions& opts) {
  require_dims(d.R, d.X.n, d.Y.n, "R");
  Reporter r;

  for (const auto* side : {&d.X, &d.Y}) {
    const char* name = (side == &d.X) ? "X" : "Y";
    ValidationReport sub = validate_space(*side, opts);
    if (sub.ok)
      r.add(std::string(name) + " is a bounded lattice", ClauseStatus::Checked);
    else
      r.add(std::string(name) + " is a bounded lattice", ClauseStatus::Failed,
            sub.clauses[static_cast<size_t>(sub.first_failure)].witnesses,
            sub.summary());
  }

  r.vacuous("R is an interior relation",
            "finite carriers are discrete, so box(R, -) lands in opens");

  auto img_filter = [&]() -> Witness {
    for (int x = 0; x < d.X.n; ++x)
      if (!is_filter(d.Y, d.R.image_of(x).complement())) return {{d.X.labels[x]}};
    return std::nullopt;
  };
  r.check("complement of each R-image is a filter of Y", img_filter());

  auto pre_filter = [&]() -> Witness {
    for (int y = 0; y < d.Y.n; ++y)
      if (!is_filter(d.X, d.R.preimage_of(y).complement())) return {{d.Y.labels[y]}};
    return std::nullopt;
  };
  r.check("complement of each R-preimage is a filter of X", pre_filter());

  auto img_rev = [&]() -> Witness {
    for (int x = 0; x < d.X.n; ++x)
      for (int xp = 0; xp < d.X.n; ++xp)
        if (d.R.image_of(x).is_subset_of(d.R.image_of(xp)) && !d.X.le(xp, x))
          return {{d.X.labels[x], d.X.labels[xp]}};
    return std::nullopt;
  };
  r.check("containment of R-images reverses the X order", img_rev());

  auto pre_rev = [&]() -> Witness {
    for (int y = 0; y < d.Y.n; ++y)
      for (int yp = 0; yp < d.Y.n; ++yp)
        if (d.R.preimage_of(y).is_subset_of(d.R.preimage_of(yp)) && !d.Y.le(yp, y))
          return {{d.Y.labels[y], d.Y.labels[yp]}};
    return std::nullopt;
  };
  r.check("containment of R-preimages reverses the Y order", pre_rev());
  return r.rep;
}

// ---- GvG -------------------------------------------------------------------

ValidationReport validate_space(const GvGSpace& g, const ValidateOptions& opts) {
  require_dims(g.R, g.X.n, g.Y.n, "R");
  Reporter r;

  PosetCheck px = poset_failure(g.X.n, [&](int a, int b) { return g.X.le(a, b); },
                                g.X.labels);
  r.check("X order is a partial order", px.wit, px.note);
  PosetCheck py = poset_failure(g.Y.n, [&](int a, int b) { return g.Y.le(a, b); },
                                g.Y.labels);
  r.check("Y order is a partial order", py.wit, py.note);

  auto order_match = [&](const BinaryRelation& derived, const LabeledPoset& p)
      -> Witness {
    for (int a = 0; a < p.n; ++a)
      for (int b = 0; b < p.n; ++b)
        if (p.le(a, b) != derived.at(a, b)) return {{p.labels[a], p.labels[b]}};
    return std::nullopt;
  };
  r.check("X order equals reverse containment of R-images",
          order_match(image_containment_order(g.R), g.X));
  r.check("Y order equals reverse containment of R-preimages",
          order_match(preimage_containment_order(g.R), g.Y));

  r.vacuous("bdiamond of an upset is a downset",
            "follows from the preimage-containment condition on a finite carrier");
  r.vacuous("box of a downset is an upset",
            "follows from the image-containment condition on a finite carrier");

  const std::vector<ElementSubset> fam = stable_sets(g);
  auto sep = [&]() -> Witness {
    for (int x = 0; x < g.X.n; ++x)
      for (int y = 0; y < g.Y.n; ++y) {
        if (g.R.at(x, y)) continue;
        bool found = false;
        for (const ElementSubset& u : fam) {
          if (u.contains(x) && !black_diamond(g.R, u).contains(y)) {
            found = true;
            break;
          }
        }
        if (!found) return {{g.X.labels[x], g.Y.labels[y]}};
      }
    return std::nullopt;
  };
  r.check("stable upsets separate pairs outside R", sep());

  if (g.X.n > opts.upset_enum_bound || g.Y.n > opts.upset_enum_bound) {
    r.skipped("upsets absorbing their closure on X0 are stable",
              "carrier exceeds the upset enumeration bound");
    r.skipped("downsets supported on Y0 are co-stable",
              "carrier exceeds the upset enumeration bound");
    return r.rep;
  }

  const auto [x0, y0] = x0_y0(g.X, g.R, g.Y);

  auto absorb_up = [&]() -> Witness {
    for (const ElementSubset& u : all_subsets_where(
             g.X.n, [&](const ElementSubset& s) { return is_upset_of(g.X, s); })) {
      ElementSubset closed = box(g.R, black_diamond(g.R, u));
      if (x0.intersect(closed).is_subset_of(u) && closed != u)
        return {{subset_label(u, g.X.labels)}};
    }
    return std::nullopt;
  };
  r.check("upsets absorbing their closure on X0 are stable", absorb_up(),
          "an upset U with X0 * box(bdiamond U) inside U must equal box(bdiamond U)");

  auto absorb_down = [&]() -> Witness {
    for (const ElementSubset& v : all_subsets_where(
             g.Y.n, [&](const ElementSubset& s) { return is_downset_of(g.Y, s); })) {
      ElementSubset core = black_diamond(g.R, box(g.R, v));
      if (y0.intersect(v).is_subset_of(core) && core != v)
        return {{subset_label(v, g.Y.labels)}};
    }
    return std::nullopt;
  };
  r.check("downsets supported on Y0 are co-stable", absorb_down(),
          "a downset V with Y0 * V inside bdiamond(box V) must equal bdiamond(box V)");
  return r.rep;
}

// ---- Hartung ---------------------------------------------------------------

ValidationReport validate_space(const HgSpace& h, const ValidateOptions&) {
  require_dims(h.R, h.nx(), h.ny(), "R");
  Reporter r;

  const BinaryRelation qx = image_containment_order(h.R);
  const BinaryRelation qy = preimage_containment_order(h.R);
  r.check("derived X order is antisymmetric", antisymmetry_failure(qx, h.X),
          "reflexivity and transitivity hold for any containment order");
  r.check("derived Y order is antisymmetric", antisymmetry_failure(qy, h.Y),
          "reflexivity and transitivity hold for any containment order");

  r.vacuous("R is a compact relation", "finite product spaces are compact");
  r.vacuous("stable sets form a closed subbasis on X and their bdiamond "
            "complements on Y",
            "a finite space carries exactly the topology its subbasis generates");

  const std::vector<ElementSubset> fam = stable_sets(h);

  auto closed_x = [&]() -> std::optional<Witness> {
    auto closed = generated_closed_sets(h.nx(), fam);
    if (!closed) return std::nullopt;
    for (const ElementSubset& a : *closed)
      if (!family_contains(*closed, box(h.R, black_diamond(h.R, a))))
        return {Witness{{subset_label(a, h.X)}}};
    return {Witness{std::nullopt}};
  };
  if (auto res = closed_x())
    r.check("box bdiamond maps closed subsets of X to closed subsets", *res);
  else
    r.skipped("box bdiamond maps closed subsets of X to closed subsets",
              "generated closed family exceeds the enumeration cap");

  auto closed_y = [&]() -> std::optional<Witness> {
    std::vector<ElementSubset> sub;
    sub.reserve(fam.size());
    for (const ElementSubset& a : fam)
      sub.push_back(black_diamond(h.R, a).complement());
    auto closed = generated_closed_sets(h.ny(), sub);
    if (!closed) return std::nullopt;
    for (const ElementSubset& b : *closed)
      if (!family_contains(*closed, black_box(h.R, diamond(h.R, b))))
        return {Witness{{subset_label(b, h.Y)}}};
    return {Witness{std::nullopt}};
  };
  if (auto res = closed_y())
    r.check("bblack-box diamond maps closed subsets of Y to closed subsets", *res);
  else
    r.skipped("bblack-box diamond maps closed subsets of Y to closed subsets",
              "generated closed family exceeds the enumeration cap");

  auto dominated = [&]() -> Witness {
    for (int x = 0; x < h.nx(); ++x)
      for (int y = 0; y < h.ny(); ++y) {
        if (!h.R.at(x, y)) continue;
        bool found_x = false;
        for (int xp = 0; xp < h.nx() && !found_x; ++xp) {
          if (!qx.at(x, xp) || !h.R.at(xp, y)) continue;
          bool maximal = true;
          for (int xq = 0; xq < h.nx() && maximal; ++xq)
            if (xq != xp && qx.at(xp, xq) && h.R.at(xq, y)) maximal = false;
          found_x = maximal;
        }
        bool found_y = false;
        for (int yp = 0; yp < h.ny() && !found_y; ++yp) {
          if (!qy.at(y, yp) || !h.R.at(x, yp)) continue;
          bool maximal = true;
          for (int yq = 0; yq < h.ny() && maximal; ++yq)
            if (yq != yp && qy.at(yp, yq) && h.R.at(x, yq)) maximal = false;
          found_y = maximal;
        }
        if (!found_x || !found_y) return {{h.X[x], h.Y[y]}};
      }
    return std::nullopt;
  };
  r.check("every related pair is dominated by maximal points", dominated());

  auto sep = [&]() -> Witness {
    for (int x = 0; x < h.nx(); ++x)
      for (int y = 0; y < h.ny(); ++y) {
        if (h.R.at(x, y)) continue;
        bool found = false;
        for (const ElementSubset& a : fam) {
          if (a.contains(x) && !black_diamond(h.R, a).contains(y)) {
            found = true;
            break;
          }
        }
        if (!found) return {{h.X[x], h.Y[y]}};
      }
    return std::nullopt;
  };
  r.check("stable sets separate pairs outside R", sep());
  return r.rep;
}

// ---- Urquhart ----------------------------------------------------------------

ValidationReport validate_space(const UrqSpace& u, const ValidateOptions&) {
  require_dims(u.le1, u.n(), u.n(), "le1");
  require_dims(u.le2, u.n(), u.n(), "le2");
  Reporter r;

  r.vacuous("Z is compact", "finite spaces are compact");

  auto doubly = [&]() -> PosetCheck {
    PosetCheck q1 = quasi_order_failure(
        u.n(), [&](int a, int b) { return u.le_1(a, b); }, u.Z);
    if (q1.wit) return {q1.wit, "le1 " + q1.note};
    PosetCheck q2 = quasi_order_failure(
        u.n(), [&](int a, int b) { return u.le_2(a, b); }, u.Z);
    if (q2.wit) return {q2.wit, "le2 " + q2.note};
    for (int x = 0; x < u.n(); ++x)
      for (int y = 0; y < u.n(); ++y)
        if (x != y && u.le_1(x, y) && u.le_2(x, y))
          return {{{u.Z[x], u.Z[y]}}, "the orders meet outside the diagonal"};
    return {std::nullopt, {}};
  }();
  r.check("le1 and le2 are quasi-orders intersecting in the diagonal", doubly.wit,
          doubly.note);

  r.vacuous("stable sets and their phi images form a closed subbasis",
            "separation and the double order make a finite generated topology discrete");
  r.vacuous("phi of stable intersections and psi of phi intersections are closed",
            "every subset of a finite carrier is closed");

  const std::vector<ElementSubset> fam = stable_sets(u);

  auto sep1 = [&]() -> Witness {
    for (int x = 0; x < u.n(); ++x)
      for (int y = 0; y < u.n(); ++y) {
        if (u.le_1(x, y)) continue;
        bool found = false;
        for (const ElementSubset& c : fam)
          if (c.contains(x) && !c.contains(y)) {
            found = true;
            break;
          }
        if (!found) return {{u.Z[x], u.Z[y]}};
      }
    return std::nullopt;
  };
  r.check("stable sets separate pairs outside le1", sep1());

  auto sep2 = [&]() -> Witness {
    for (int x = 0; x < u.n(); ++x)
      for (int y = 0; y < u.n(); ++y) {
        if (u.le_2(x, y)) continue;
        bool found = false;
        for (const ElementSubset& c : fam) {
          ElementSubset ph = galois_do(u, c, GaloisMap::Phi);
          if (ph.contains(x) && !ph.contains(y)) {
            found = true;
            break;
          }
        }
        if (!found) return {{u.Z[x], u.Z[y]}};
      }
    return std::nullopt;
  };
  r.check("phi images separate pairs outside le2", sep2());
  return r.rep;
}

// ---- Ploscica ----------------------------------------------------------------

ValidationReport validate_space(const PloSpace& p, const ValidateOptions&) {
  require_dims(p.R, p.n(), p.n(), "R");
  Reporter r;

  auto refl = [&]() -> Witness {
    for (int x = 0; x < p.n(); ++x)
      if (!p.R.at(x, x)) return {{p.Z[x]}};
    return std::nullopt;
  };
  r.check("R is reflexive", refl());

  const std::vector<ElementSubset> fam = stable_sets(p);
  std::vector<ElementSubset> subbasis;
  subbasis.reserve(2 * fam.size());
  for (const ElementSubset& c : fam) {
    subbasis.push_back(c.complement());
    subbasis.push_back(black_diamond(p.R, c));
  }

  auto t1 = [&]() -> Witness {
    for (int x = 0; x < p.n(); ++x)
      for (int y = 0; y < p.n(); ++y) {
        if (x == y) continue;
        bool found = false;
        for (const ElementSubset& s : subbasis)
          if (s.contains(x) && !s.contains(y)) {
            found = true;
            break;
          }
        if (!found) return {{p.Z[x], p.Z[y]}};
      }
    return std::nullopt;
  };
  r.check("the open subbasis separates every ordered pair of distinct points", t1(),
          "finite content of compactness with T1 for the topology generated by "
          "complements and bdiamond images of stable sets");

  r.vacuous("the separating family is an open subbasis",
            "a finite space carries exactly the topology its subbasis generates");
  r.vacuous("complements of stable intersections and closures of stable unions "
            "are closed",
            "every subset of a finite carrier is closed");

  auto sep1 = [&]() -> Witness {
    for (int x = 0; x < p.n(); ++x)
      for (int y = 0; y < p.n(); ++y) {
        if (p.R.image_of(y).is_subset_of(p.R.image_of(x))) continue;
        bool found = false;
        for (const ElementSubset& c : fam)
          if (c.contains(x) && !c.contains(y)) {
            found = true;
            break;
          }
        if (!found) return {{p.Z[x], p.Z[y]}};
      }
    return std::nullopt;
  };
  r.check("stable sets separate pairs with non-shrinking images", sep1(),
          "R[y] not inside R[x] demands C with x in C, y outside C");

  auto sep2 = [&]() -> Witness {
    for (int x = 0; x < p.n(); ++x)
      for (int y = 0; y < p.n(); ++y) {
        if (p.R.preimage_of(y).is_subset_of(p.R.preimage_of(x))) continue;
        bool found = false;
        for (const ElementSubset& c : fam) {
          ElementSubset bd = black_diamond(p.R, c);
          if (!bd.contains(x) && bd.contains(y)) {
            found = true;
            break;
          }
        }
        if (!found) return {{p.Z[x], p.Z[y]}};
      }
    return std::nullopt;
  };
  r.check("bdiamond images separate pairs with non-shrinking preimages", sep2(),
          "R^-1[y] not inside R^-1[x] demands C with y in bdiamond C, x outside");

  auto refine = [&]() -> Witness {
    const auto [q1, q2] = quasi_orders_plo(p);
    for (int x = 0; x < p.n(); ++x)
      for (int y = 0; y < p.n(); ++y) {
        if (!p.R.at(x, y)) continue;
        bool found = false;
        for (int z = 0; z < p.n() && !found; ++z)
          found = q1.at(x, z) && q2.at(y, z);
        if (!found) return {{p.Z[x], p.Z[y]}};
      }
    return std::nullopt;
  };
  r.check("every related pair has a common refinement point", refine());
  return r.rep;
}

// ---- CG ------------------------------------------------------------------------

ValidationReport validate_space(const CGSpace& c, const ValidateOptions& opts) {
  for (const ElementSubset& u : c.K)
    if (u.universe != c.n())
      throw SideMismatch("a member of K does not live on the carrier");
  Reporter r;

  r.vacuous("members of K are compact open",
            "every subset of a finite carrier is compact open");

  auto t0 = [&]() -> Witness {
    for (int x = 0; x < c.n(); ++x)
      for (int y = x + 1; y < c.n(); ++y) {
        bool found = false;
        for (const ElementSubset& d : c.K)
          if (d.contains(x) != d.contains(y)) {
            found = true;
            break;
          }
        if (!found) return {{c.X[x], c.X[y]}};
      }
    return std::nullopt;
  };
  r.check("points are distinguished by K", t0());

  auto cover = [&]() -> Witness {
    for (int x = 0; x < c.n(); ++x) {
      bool found = false;
      for (const ElementSubset& d : c.K)
        if (d.contains(x)) {
          found = true;
          break;
        }
      if (!found) return {{c.X[x]}};
    }
    return std::nullopt;
  };
  r.check("K covers the carrier", cover());

  const std::vector<ElementSubset> kfam = sorted_copy(c.K);
  auto unions = [&]() -> Witness {
    if (!family_contains(kfam, ElementSubset(c.n())))
      return {std::vector<std::string>{}};
    for (size_t i = 0; i < kfam.size(); ++i)
      for (size_t j = i + 1; j < kfam.size(); ++j)
        if (!family_contains(kfam, kfam[i].unite(kfam[j])))
          return {{subset_label(kfam[i], c.X), subset_label(kfam[j], c.X)}};
    return std::nullopt;
  };
  r.check("K is closed under finite unions", unions(),
          "the empty union and all pairwise unions must be members");

  auto refinement = [&]() -> Witness {
    for (const ElementSubset& u : kfam)
      for (const ElementSubset& v : kfam) {
        ElementSubset uv = u.intersect(v);
        for (int x : uv.elements()) {
          bool found = false;
          for (const ElementSubset& d : kfam) {
            if (!d.contains(x)) continue;
            for (const ElementSubset& w : kfam) {
              if (w.contains(x)) continue;
              if (d.is_subset_of(uv.unite(w))) {
                found = true;
                break;
              }
            }
            if (found) break;
          }
          if (!found)
            return {{subset_label(u, c.X), subset_label(v, c.X), c.X[x]}};
        }
      }
    return std::nullopt;
  };
  r.check("members refine intersections around each point", refinement(),
          "x in U * V demands members W, D with x in D - W and D inside (U * V) + W");

  const std::vector<ElementSubset> lc = stable_sets(c);
  if (static_cast<int>(lc.size()) > opts.cg_family_bound) {
    r.skipped("relatively directed families that each miss part of a closed set "
              "jointly miss part of it",
              "stable family exceeds the subfamily enumeration bound");
  } else {
    auto is_y_family = [&](const ElementSubset& y, const std::vector<int>& zidx) {
      for (int ai : zidx)
        for (int bi : zidx) {
          bool found = false;
          for (const ElementSubset& hset : lc) {
            if (!y.is_subset_of(hset)) continue;
            for (int ci : zidx) {
              if (lc[static_cast<size_t>(ai)].intersect(hset).is_subset_of(
                      lc[static_cast<size_t>(ci)]) &&
                  lc[static_cast<size_t>(bi)].intersect(hset).is_subset_of(
                      lc[static_cast<size_t>(ci)])) {
                found = true;
                break;
              }
            }
            if (found) break;
          }
          if (!found) return false;
        }
      return true;
    };

    auto directed = [&]() -> Witness {
      const std::vector<ElementSubset> closed = closure_fixed_points(
          c.n(), [&](const ElementSubset& s) { return delta_closure(c, s); });
      for (const ElementSubset& y : closed) {
        for (unsigned mask = 1; mask < (1u << lc.size()); ++mask) {
          std::vector<int> zidx;
          ElementSubset escape = y;
          bool premise = true;
          for (size_t i = 0; i < lc.size() && premise; ++i) {
            if (!(mask & (1u << i))) continue;
            zidx.push_back(static_cast<int>(i));
            premise = !y.minus(lc[i]).empty();
            escape = escape.minus(lc[i]);
          }
          if (!premise || !escape.empty()) continue;
          if (!is_y_family(y, zidx)) continue;
          std::vector<std::string> wit{subset_label(y, c.X)};
          for (int i : zidx) wit.push_back(subset_label(lc[static_cast<size_t>(i)], c.X));
          return {wit};
        }
      }
      return std::nullopt;
    };
    r.check("relatively directed families that each miss part of a closed set "
            "jointly miss part of it",
            directed(),
            "witness lists the closed set, then the members of the family");
  }

  auto whole = [&]() -> Witness {
    if (!family_contains(kfam, ElementSubset::full(c.n())))
      return {std::vector<std::string>{}};
    return std::nullopt;
  };
  r.check("the whole carrier belongs to K", whole());

  auto inner_union = [&]() -> Witness {
    for (const ElementSubset& u : kfam)
      for (const ElementSubset& v : kfam) {
        ElementSubset uv = u.intersect(v);
        ElementSubset inner(c.n());
        for (const ElementSubset& w : kfam)
          if (w.is_subset_of(uv)) inner = inner.unite(w);
        if (!family_contains(kfam, inner))
          return {{subset_label(u, c.X), subset_label(v, c.X)}};
      }
    return std::nullopt;
  };
  r.check("unions of members inside an intersection belong to K", inner_union());
  return r.rep;
}

ValidationReport validate_space(const AnySpace& s, const ValidateOptions& opts) {
  return std::visit([&](const auto& sp) { return validate_space(sp, opts); }, s);
}

// ---- morphisms --------------------------------------------------------------

ValidationReport validate_morphism(const DualMorphism& m, const AnySpace& source,
                                   const AnySpace& target,
                                   const ValidateOptions&) {
  if (category_of(source) != m.cat || category_of(target) != m.cat)
    throw CategoryMismatch("morphism and end spaces disagree on category");
  Reporter r;

  switch (m.cat) {
    case Category::Filt: {
      // Arrows between filter lattices are meet-preserving maps whose left
      // adjoint preserves finite meets; they need not preserve the bottom
      // (the dual of a surjection onto a collapsed quotient does not).
      const auto& a = std::get<FiniteBoundedLattice>(source);
      const auto& b = std::get<FiniteBoundedLattice>(target);
      require_map(m.f, a.n, b.n, "f");
      dh_component_clauses(r, a, b, m.f, "f");
      break;
    }

    case Category::DH: {
      const auto& d1 = std::get<DHSpace>(source);
      const auto& d2 = std::get<DHSpace>(target);
      require_map(m.f, d1.X.n, d2.X.n, "f");
      require_map(m.g, d1.Y.n, d2.Y.n, "g");
      dh_component_clauses(r, d1.X, d2.X, m.f, "f");
      dh_component_clauses(r, d1.Y, d2.Y, m.g, "g");

      auto forward = [&]() -> Witness {
        for (int x = 0; x < d1.X.n; ++x)
          for (int y = 0; y < d1.Y.n; ++y)
            if (d1.R.at(x, y) &&
                !d2.R.at(m.f[static_cast<size_t>(x)], m.g[static_cast<size_t>(y)]))
              return {{d1.X.labels[x], d1.Y.labels[y]}};
        return std::nullopt;
      };
      r.check("related pairs map to related pairs", forward());

      auto lift_f = [&]() -> Witness {
        for (int xp = 0; xp < d2.X.n; ++xp)
          for (int y = 0; y < d1.Y.n; ++y) {
            if (!d2.R.at(xp, m.g[static_cast<size_t>(y)])) continue;
            bool found = false;
            for (int x = 0; x < d1.X.n && !found; ++x)
              found = d1.R.at(x, y) && d2.X.le(xp, m.f[static_cast<size_t>(x)]);
            if (!found) return {{d2.X.labels[xp], d1.Y.labels[y]}};
          }
        return std::nullopt;
      };
      r.check("points related to a g-value are bounded by an f-value over R1",
              lift_f(), "x' R2 g(y) demands x with x R1 y and x' <= f(x)");

      auto lift_g = [&]() -> Witness {
        for (int x = 0; x < d1.X.n; ++x)
          for (int yp = 0; yp < d2.Y.n; ++yp) {
            if (!d2.R.at(m.f[static_cast<size_t>(x)], yp)) continue;
            bool found = false;
            for (int y = 0; y < d1.Y.n && !found; ++y)
              found = d1.R.at(x, y) && d2.Y.le(yp, m.g[static_cast<size_t>(y)]);
            if (!found) return {{d1.X.labels[x], d2.Y.labels[yp]}};
          }
        return std::nullopt;
      };
      r.check("points related from an f-value are bounded by a g-value over R1",
              lift_g(), "f(x) R2 y' demands y with x R1 y and y' <= g(y)");
      break;
    }

    case Category::GvG: {
      const auto& g1 = std::get<GvGSpace>(source);
      const auto& g2 = std::get<GvGSpace>(target);
      require_dims(m.S, g1.X.n, g2.X.n, "S");
      require_dims(m.T, g1.Y.n, g2.Y.n, "T");
      two_sided_morphism_clauses(r, m.S, m.T, g1.R, g2.R, stable_sets(g1),
                                 stable_sets(g2), g1.X.labels, g1.Y.labels,
                                 g2.X.labels, g2.Y.labels);
      break;
    }

    case Category::Hg: {
      const auto& h1 = std::get<HgSpace>(source);
      const auto& h2 = std::get<HgSpace>(target);
      require_dims(m.S, h1.nx(), h2.nx(), "S");
      require_dims(m.T, h1.ny(), h2.ny(), "T");
      two_sided_morphism_clauses(r, m.S, m.T, h1.R, h2.R, stable_sets(h1),
                                 stable_sets(h2), h1.X, h1.Y, h2.X, h2.Y);
      break;
    }

    case Category::Urq: {
      const auto& u1 = std::get<UrqSpace>(source);
      const auto& u2 = std::get<UrqSpace>(target);
      require_dims(m.S, u1.n(), u2.n(), "P");
      require_dims(m.T, u1.n(), u2.n(), "Q");
      const std::vector<ElementSubset> fam1 = stable_sets(u1);
      const std::vector<ElementSubset> fam2 = stable_sets(u2);
      std::vector<ElementSubset> boxes, phi2, qboxes;
      for (const ElementSubset& c : fam2) {
        boxes.push_back(box(m.S, c));
        phi2.push_back(galois_do(u2, c, GaloisMap::Phi));
        qboxes.push_back(box(m.T, phi2.back()));
      }

      auto stab = [&]() -> Witness {
        for (size_t i = 0; i < fam2.size(); ++i)
          if (!family_contains(fam1, boxes[i])) return {{subset_label(fam2[i], u2.Z)}};
        return std::nullopt;
      };
      r.check("box_P of a stable set is stable", stab());

      auto commute = [&]() -> Witness {
        for (size_t i = 0; i < fam2.size(); ++i)
          if (galois_do(u1, boxes[i], GaloisMap::Phi) != qboxes[i])
            return {{subset_label(fam2[i], u2.Z)}};
        return std::nullopt;
      };
      r.check("phi of box_P equals box_Q of phi", commute());

      auto sep_p = [&]() -> Witness {
        for (int z = 0; z < u1.n(); ++z)
          for (int zp = 0; zp < u2.n(); ++zp) {
            if (m.S.at(z, zp)) continue;
            bool found = false;
            for (size_t i = 0; i < fam2.size() && !found; ++i)
              found = boxes[i].contains(z) && !fam2[i].contains(zp);
            if (!found) return {{u1.Z[z], u2.Z[zp]}};
          }
        return std::nullopt;
      };
      r.check("pairs outside P are separated by a box_P image", sep_p());

      auto sep_q = [&]() -> Witness {
        for (int z = 0; z < u1.n(); ++z)
          for (int zp = 0; zp < u2.n(); ++zp) {
            if (m.T.at(z, zp)) continue;
            bool found = false;
            for (size_t i = 0; i < fam2.size() && !found; ++i)
              found = qboxes[i].contains(z) && !phi2[i].contains(zp);
            if (!found) return {{u1.Z[z], u2.Z[zp]}};
          }
        return std::nullopt;
      };
      r.check("pairs outside Q are separated by a box_Q phi image", sep_q());

      auto meet_pt = [&]() -> Witness {
        for (int z = 0; z < u1.n(); ++z)
          if (m.S.image_of(z).intersect(m.T.image_of(z)).empty())
            return {{u1.Z[z]}};
        return std::nullopt;
      };
      r.check("P and Q images share a point", meet_pt());
      break;
    }

    case Category::Plo: {
      const auto& p1 = std::get<PloSpace>(source);
      const auto& p2 = std::get<PloSpace>(target);
      require_dims(m.S, p1.n(), p2.n(), "P");
      require_dims(m.T, p1.n(), p2.n(), "Q");
      const std::vector<ElementSubset> fam1 = stable_sets(p1);
      const std::vector<ElementSubset> fam2 = stable_sets(p2);
      std::vector<ElementSubset> boxes, bdia2, qdia;
      for (const ElementSubset& c : fam2) {
        boxes.push_back(box(m.S, c));
        bdia2.push_back(black_diamond(p2.R, c));
        qdia.push_back(diamond(m.T, bdia2.back()));
      }

      auto stab = [&]() -> Witness {
        for (size_t i = 0; i < fam2.size(); ++i)
          if (!family_contains(fam1, boxes[i])) return {{subset_label(fam2[i], p2.Z)}};
        return std::nullopt;
      };
      r.check("box_P of a stable set is stable", stab());

      auto commute = [&]() -> Witness {
        for (size_t i = 0; i < fam2.size(); ++i)
          if (black_diamond(p1.R, boxes[i]) != qdia[i])
            return {{subset_label(fam2[i], p2.Z)}};
        return std::nullopt;
      };
      r.check("bdiamond of box_P equals diamond_Q of bdiamond", commute());

      auto sep_p = [&]() -> Witness {
        for (int z = 0; z < p1.n(); ++z)
          for (int zp = 0; zp < p2.n(); ++zp) {
            if (m.S.at(z, zp)) continue;
            bool found = false;
            for (size_t i = 0; i < fam2.size() && !found; ++i)
              found = boxes[i].contains(z) && !fam2[i].contains(zp);
            if (!found) return {{p1.Z[z], p2.Z[zp]}};
          }
        return std::nullopt;
      };
      r.check("pairs outside P are separated by a box_P image", sep_p());

      auto sep_q = [&]() -> Witness {
        for (int z = 0; z < p1.n(); ++z)
          for (int zp = 0; zp < p2.n(); ++zp) {
            if (m.T.at(z, zp)) continue;
            bool found = false;
            for (size_t i = 0; i < fam2.size() && !found; ++i)
              found = !qdia[i].contains(z) && bdia2[i].contains(zp);
            if (!found) return {{p1.Z[z], p2.Z[zp]}};
          }
        return std::nullopt;
      };
      r.check("pairs outside Q are separated by a bdiamond image", sep_q());

      auto meet_pt = [&]() -> Witness {
        for (int z = 0; z < p1.n(); ++z)
          if (m.S.image_of(z).intersect(m.T.image_of(z)).empty())
            return {{p1.Z[z]}};
        return std::nullopt;
      };
      r.check("P and Q images share a point", meet_pt());
      break;
    }

    case Category::CG: {
      const auto& c1 = std::get<CGSpace>(source);
      const auto& c2 = std::get<CGSpace>(target);
      require_dims(m.S, c1.n(), c2.n(), "S");
      const std::vector<ElementSubset> lc1 = stable_sets(c1);
      const std::vector<ElementSubset> lc2 = stable_sets(c2);

      auto stab = [&]() -> Witness {
        for (const ElementSubset& b : lc2)
          if (!family_contains(lc1, box(m.S, b))) return {{subset_label(b, c2.X)}};
        return std::nullopt;
      };
      r.check("box_S of a stable set is stable", stab());

      auto images_closed = [&]() -> Witness {
        for (int x = 0; x < c1.n(); ++x) {
          ElementSubset img = m.S.image_of(x);
          if (delta_closure(c2, img) != img) return {{c1.X[x]}};
        }
        return std::nullopt;
      };
      r.check("S-images are delta-closed in the target", images_closed());

      auto serial = [&]() -> Witness {
        for (int x = 0; x < c1.n(); ++x)
          if (m.S.image_of(x).empty()) return {{c1.X[x]}};
        return std::nullopt;
      };
      r.check("S is serial", serial());

      auto distributes = [&]() -> Witness {
        for (const ElementSubset& b1 : lc2)
          for (const ElementSubset& b2 : lc2) {
            ElementSubset lhs = box(m.S, delta_closure(c2, b1.unite(b2)));
            ElementSubset rhs =
                delta_closure(c1, box(m.S, b1).unite(box(m.S, b2)));
            if (!lhs.is_subset_of(rhs))
              return {{subset_label(b1, c2.X), subset_label(b2, c2.X)}};
          }
        return std::nullopt;
      };
      r.check("box_S distributes over joins up to closure", distributes());
      break;
    }
  }
  return r.rep;
}

ValidationReport validate_morphism(const DualMorphism& m, const ValidateOptions& opts) {
  return validate_morphism(m, m.source, m.target, opts);
}

}  // namespace latdual
