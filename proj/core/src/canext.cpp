#include "proxlat/canext.hpp"

#include <algorithm>

#include "proxlat/error.hpp"

namespace proxlat {

ElementSet galois_l(const Polarity& p, const ElementSet& u) {
  auto out = ElementSet::full(p.y_size());
  for (auto x : u) out &= p.z.image(x);
  return out;
}

ElementSet galois_r(const Polarity& p, const ElementSet& v) {
  auto out = ElementSet::full(p.x_size());
  for (auto y : v) out &= p.z.preimage(y);
  return out;
}

ElementSet galois_closure(const Polarity& p, const ElementSet& u) { return galois_r(p, galois_l(p, u)); }

std::optional<std::size_t> ConceptLattice::index_of(const ElementSet& closed_set) const {
  auto it = std::lower_bound(closed.begin(), closed.end(), closed_set);
  if (it == closed.end() || *it != closed_set) return std::nullopt;
  return static_cast<std::size_t>(it - closed.begin());
}

ConceptLattice concept_lattice(const Polarity& p) {
  const auto nx = p.x_size();
  const auto ny = p.y_size();
  ConceptLattice out;
  if (nx <= kSubsetSweepLimit) {
    std::vector<ElementSet> found;
    for (std::size_t mask = 0; mask < (std::size_t{1} << nx); ++mask) {
      ElementSet u;
      for (std::size_t i = 0; i < nx; ++i)
        if (mask & (std::size_t{1} << i)) u.insert(i);
      found.push_back(galois_closure(p, u));
    }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    out.closed = std::move(found);
  } else {
    // Every closed set is r(v) = intersection of the r({y}), y in v.
    std::vector<ElementSet> gens;
    for (std::size_t y = 0; y < ny; ++y) gens.push_back(galois_r(p, ElementSet::singleton(y)));
    out.closed = intersection_closure(gens, ElementSet::full(nx));
  }
  out.lattice = lattice_from_sets(out.closed);

  for (std::size_t x = 0; x < nx; ++x) {
    auto idx = out.index_of(galois_closure(p, ElementSet::singleton(x)));
    ensure(idx.has_value(), "c({x}) is closed");
    out.f.table.push_back(*idx);
  }
  for (std::size_t y = 0; y < ny; ++y) {
    auto idx = out.index_of(galois_r(p, ElementSet::singleton(y)));
    ensure(idx.has_value(), "r({y}) is closed");
    out.g.table.push_back(*idx);
  }

  const auto& c = out.lattice;
  for (std::size_t u = 0; u < c.size(); ++u) {
    ElementSet below, above;
    for (auto fx : out.f.table)
      if (c.leq(fx, u)) below.insert(fx);
    for (auto gy : out.g.table)
      if (c.leq(u, gy)) above.insert(gy);
    ensure(c.join_of(below) == u, "f-image join-generates the concept lattice");
    ensure(c.meet_of(above) == u, "g-image meet-generates the concept lattice");
  }
  for (std::size_t x = 0; x < nx; ++x)
    for (std::size_t y = 0; y < ny; ++y)
      ensure(c.leq(out.f(x), out.g(y)) == p.z.holds(x, y), "f(x) <= g(y) iff xZy");
  return out;
}

Preorder polarity_preorder(const Polarity& p) {
  const auto nx = p.x_size();
  const auto ny = p.y_size();
  Preorder q;
  for (std::size_t x = 0; x < nx; ++x) q.names.push_back("x" + std::to_string(x));
  for (std::size_t y = 0; y < ny; ++y) q.names.push_back("y" + std::to_string(y));
  q.above.resize(nx + ny);
  for (std::size_t x1 = 0; x1 < nx; ++x1) {
    for (std::size_t x2 = 0; x2 < nx; ++x2)
      if (p.z.image(x2).subset_of(p.z.image(x1))) q.above[x1].insert(x2);
    for (auto y : p.z.image(x1)) q.above[x1].insert(nx + y);
  }
  for (std::size_t y1 = 0; y1 < ny; ++y1) {
    for (std::size_t y2 = 0; y2 < ny; ++y2)
      if (p.z.preimage(y1).subset_of(p.z.preimage(y2))) q.above[nx + y1].insert(nx + y2);
    for (std::size_t x = 0; x < nx; ++x) {
      bool below = true;
      for (auto x2 : p.z.preimage(y1))
        if (!p.z.image(x).subset_of(p.z.image(x2))) {
          below = false;
          break;
        }
      if (below) q.above[nx + y1].insert(x);
    }
  }
  return q;
}

bool matches_macneille(const Polarity& p, const ConceptLattice& c) {
  auto mac = dedekind_macneille(polarity_preorder(p));
  std::vector<std::pair<std::size_t, std::size_t>> pins;
  for (std::size_t x = 0; x < p.x_size(); ++x) pins.emplace_back(c.f(x), mac.embedding(x));
  for (std::size_t y = 0; y < p.y_size(); ++y) pins.emplace_back(c.g(y), mac.embedding(p.x_size() + y));
  return find_isomorphism(c.lattice, mac.lattice, pins).has_value();
}

std::string_view to_string(ExtensionKind kind) { return kind == ExtensionKind::pi ? "pi" : "sigma"; }

Polarity round_polarity(const ProximityLattice& p) {
  auto filters = round_subsets(p, RoundKind::filter);
  auto ideals = round_subsets(p, RoundKind::ideal);
  Polarity out{Relation(filters.size(), ideals.size())};
  for (std::size_t f = 0; f < filters.size(); ++f)
    for (std::size_t i = 0; i < ideals.size(); ++i)
      if (filters[f].intersects(ideals[i])) out.z.insert(f, i);
  return out;
}

namespace {

ElementSet image_in(const LatticeMap& h, const ElementSet& s) {
  ElementSet out;
  for (auto a : s) out.insert(h(a));
  return out;
}

std::size_t position(const std::vector<ElementSet>& sorted, const ElementSet& s) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), s);
  ensure(it != sorted.end() && *it == s, "set is present in the canonical list");
  return static_cast<std::size_t>(it - sorted.begin());
}

}  // namespace

CanonicalExtension pi_extension(const ProximityLattice& p) {
  if (!p.flags().join_strong) throw Error(ErrorKind::NotJoinStrong, "pi-extension needs join-strongness");
  CanonicalExtension e;
  e.kind = ExtensionKind::pi;
  e.source = p;
  e.filters = round_subsets(p, RoundKind::filter);
  e.ideals = round_subsets(p, RoundKind::ideal);
  auto pol = round_polarity(p);
  auto cl = concept_lattice(pol);
  e.lattice = cl.lattice;
  e.filter_element = cl.f;
  e.ideal_element = cl.g;
  e.closed_sets = cl.closed;
  for (std::size_t a = 0; a < p.size(); ++a) {
    auto i = position(e.ideals, p.relation().preimage(a));
    e.embed.table.push_back(cl.g(i));
    ElementSet containing;
    for (std::size_t f = 0; f < e.filters.size(); ++f)
      if (e.filters[f].contains(a)) containing.insert(f);
    ensure(cl.closed[e.embed(a)] == containing, "h(a) = {F : a in F}");
  }
  ensure(is_homomorphism(p.lattice(), e.lattice, e.embed), "h is a lattice homomorphism");
  return e;
}

CanonicalExtension sigma_extension(const ProximityLattice& p) {
  if (!p.flags().meet_strong) throw Error(ErrorKind::NotMeetStrong, "sigma-extension needs meet-strongness");
  auto op = pi_extension(opposite(p));
  CanonicalExtension e;
  e.kind = ExtensionKind::sigma;
  e.source = p;
  e.lattice = opposite(op.lattice);
  e.embed = op.embed;
  // Round ideals of the opposite are the round filters here, and vice versa.
  e.filters = op.ideals;
  e.filter_element = op.ideal_element;
  e.ideals = op.filters;
  e.ideal_element = op.filter_element;
  e.closed_sets = op.closed_sets;
  ensure(is_homomorphism(p.lattice(), e.lattice, e.embed), "k is a lattice homomorphism");
  for (std::size_t a = 0; a < p.size(); ++a)
    ensure(e.embed(a) == e.lattice.meet_of(image_in(e.embed, p.relation().image(a))),
           "k(a) = meet {k(b) : aRb}");
  return e;
}

CanonicalExtension make_extension(ExtensionKind kind, const ProximityLattice& source, FiniteLattice c,
                                  LatticeMap embed) {
  if (embed.size() != source.size())
    throw Error(ErrorKind::DimensionMismatch, "embedding is not total on the source");
  for (auto v : embed.table)
    if (v >= c.size()) throw Error(ErrorKind::DimensionMismatch, "embedding value out of range");
  CanonicalExtension e;
  e.kind = kind;
  e.source = source;
  e.lattice = std::move(c);
  e.embed = std::move(embed);
  e.filters = round_subsets(source, RoundKind::filter);
  e.ideals = round_subsets(source, RoundKind::ideal);
  for (const auto& f : e.filters) e.filter_element.table.push_back(e.lattice.meet_of(image_in(e.embed, f)));
  for (const auto& i : e.ideals) e.ideal_element.table.push_back(e.lattice.join_of(image_in(e.embed, i)));
  return e;
}

CanonicalExtension pi_extension_via_macneille(const ProximityLattice& p) {
  if (!p.flags().join_strong) throw Error(ErrorKind::NotJoinStrong, "pi-extension needs join-strongness");
  auto pol = round_polarity(p);
  auto mac = dedekind_macneille(polarity_preorder(pol));
  auto ideals = round_subsets(p, RoundKind::ideal);
  LatticeMap embed;
  for (std::size_t a = 0; a < p.size(); ++a)
    embed.table.push_back(mac.embedding(pol.x_size() + position(ideals, p.relation().preimage(a))));
  return make_extension(ExtensionKind::pi, p, mac.lattice, std::move(embed));
}

bool ExtensionReport::valid() const { return kind == ExtensionKind::pi ? valid_pi() : valid_sigma(); }

namespace {

void check_homomorphism(Check& check, const FiniteLattice& l, const FiniteLattice& c, const LatticeMap& h) {
  if (h(l.bot()) != c.bot()) return check.fail("h(" + l.name(l.bot()) + ") is not the bottom");
  if (h(l.top()) != c.top()) return check.fail("h(" + l.name(l.top()) + ") is not the top");
  for (std::size_t a = 0; a < l.size(); ++a)
    for (std::size_t b = a + 1; b < l.size(); ++b) {
      if (h(l.meet(a, b)) != c.meet(h(a), h(b)))
        return check.fail("h does not preserve the meet of " + l.name(a) + " and " + l.name(b));
      if (h(l.join(a, b)) != c.join(h(a), h(b)))
        return check.fail("h does not preserve the join of " + l.name(a) + " and " + l.name(b));
    }
}

std::vector<ElementSet> subsets_of(std::size_t n) {
  std::vector<ElementSet> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    ElementSet s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) s.insert(i);
    out.push_back(s);
  }
  return out;
}

}  // namespace

ExtensionReport verify_extension(const CanonicalExtension& e) {
  const auto& l = e.source.lattice();
  const auto& r = e.source.relation();
  const auto& c = e.lattice;
  const auto& h = e.embed;
  ExtensionReport rep;
  rep.kind = e.kind;

  check_homomorphism(rep.homomorphism, l, c, h);

  std::vector<std::size_t> fe, ie;
  ElementSet filter_elems, ideal_elems;
  for (const auto& f : e.filters) {
    fe.push_back(c.meet_of(image_in(h, f)));
    filter_elems.insert(fe.back());
  }
  for (const auto& i : e.ideals) {
    ie.push_back(c.join_of(image_in(h, i)));
    ideal_elems.insert(ie.back());
  }

  for (std::size_t u = 0; u < c.size(); ++u) {
    ElementSet below, above;
    for (auto x : filter_elems)
      if (c.leq(x, u)) below.insert(x);
    for (auto y : ideal_elems)
      if (c.leq(u, y)) above.insert(y);
    if (c.join_of(below) != u) {
      rep.dense.fail(c.name(u) + " is not the join of the round filter elements below it");
      break;
    }
    if (c.meet_of(above) != u) {
      rep.dense.fail(c.name(u) + " is not the meet of the round ideal elements above it");
      break;
    }
  }

  for (std::size_t a = 0; a < l.size() && rep.increasing; ++a)
    for (auto b : r.image(a))
      if (!c.leq(h(a), h(b))) {
        rep.increasing.fail(l.name(a) + " R " + l.name(b) + " but h(" + l.name(a) + ") is not below h(" +
                            l.name(b) + ")");
        break;
      }

  Check compact_char;
  for (std::size_t f = 0; f < e.filters.size() && compact_char; ++f)
    for (std::size_t i = 0; i < e.ideals.size(); ++i)
      if (c.leq(fe[f], ie[i]) && !e.filters[f].intersects(e.ideals[i])) {
        compact_char.fail("F=" + set_text(l, e.filters[f]) + ", I=" + set_text(l, e.ideals[i]) +
                          ": meet h[F] <= join h[I] but F and I are disjoint");
        break;
      }

  if (l.size() <= kRawCompactLimit) {
    rep.compact_subsets_checked = true;
    const auto subsets = subsets_of(l.size());
    std::vector<std::size_t> lhs, rhs;
    std::vector<ElementSet> meets, joins;
    for (const auto& s : subsets) {
      lhs.push_back(c.meet_of(image_in(h, r.image(s))));
      rhs.push_back(c.join_of(image_in(h, r.preimage(s))));
      meets.push_back(r.image(meet_closure(l, s)));
      joins.push_back(join_closure(l, s));
    }
    for (std::size_t si = 0; si < subsets.size() && rep.compact_subsets; ++si)
      for (std::size_t ti = 0; ti < subsets.size(); ++ti)
        if (c.leq(lhs[si], rhs[ti]) && !meets[si].intersects(joins[ti])) {
          rep.compact_subsets.fail("S=" + set_text(l, subsets[si]) + ", T=" + set_text(l, subsets[ti]) +
                                   ": meet h[R[S]] <= join h[R^-1[T]] but no finite S', T' with "
                                   "meet S' R join T'");
          break;
        }
  }

  if (rep.increasing)
    rep.compact = compact_char;
  else if (rep.compact_subsets_checked)
    rep.compact = rep.compact_subsets;
  else
    rep.compact.fail("not R-increasing and the carrier is too large for the subset form");

  for (std::size_t a = 0; a < l.size(); ++a)
    if (h(a) != c.join_of(image_in(h, r.preimage(a)))) {
      rep.join_preserving.fail("h(" + l.name(a) + ") differs from join {h(b) : b R " + l.name(a) + "}");
      break;
    }
  for (std::size_t a = 0; a < l.size(); ++a)
    if (h(a) != c.meet_of(image_in(h, r.image(a)))) {
      rep.meet_preserving.fail("h(" + l.name(a) + ") differs from meet {h(b) : " + l.name(a) + " R b}");
      break;
    }

  if (e.filter_element.size() != e.filters.size() || e.ideal_element.size() != e.ideals.size()) {
    rep.element_tables.fail("filter or ideal element table does not match the round subsets");
  } else {
    for (std::size_t f = 0; f < e.filters.size() && rep.element_tables; ++f)
      if (e.filter_element(f) != fe[f])
        rep.element_tables.fail("f(" + set_text(l, e.filters[f]) + ") differs from meet h[F]");
    for (std::size_t i = 0; i < e.ideals.size() && rep.element_tables; ++i)
      if (e.ideal_element(i) != ie[i])
        rep.element_tables.fail("g(" + set_text(l, e.ideals[i]) + ") differs from join h[I]");
  }
  return rep;
}

namespace {

std::string first_failure(const ExtensionReport& rep) {
  const Check* order[] = {&rep.dense, &rep.compact, &rep.increasing,
                          rep.kind == ExtensionKind::pi ? &rep.join_preserving : &rep.meet_preserving};
  for (const auto* c : order)
    if (!c->holds) return c->witness;
  return {};
}

}  // namespace

std::optional<LatticeMap> check_uniqueness(const CanonicalExtension& e1, const CanonicalExtension& e2) {
  if (e1.kind != e2.kind) throw Error(ErrorKind::KindMismatch, "extensions have different kinds");
  if (!(e1.source == e2.source)) throw Error(ErrorKind::KindMismatch, "extensions have different sources");
  for (const auto* e : {&e1, &e2}) {
    auto rep = verify_extension(*e);
    if (!rep.valid())
      throw Error(ErrorKind::PreconditionFailed,
                  std::string("not a ") + std::string(to_string(e->kind)) + "-extension: " + first_failure(rep));
  }
  std::vector<std::pair<std::size_t, std::size_t>> pins;
  for (std::size_t a = 0; a < e1.embed.size(); ++a) pins.emplace_back(e2.embed(a), e1.embed(a));
  for (std::size_t f = 0; f < e1.filter_element.size(); ++f)
    pins.emplace_back(e2.filter_element(f), e1.filter_element(f));
  for (std::size_t i = 0; i < e1.ideal_element.size(); ++i)
    pins.emplace_back(e2.ideal_element(i), e1.ideal_element(i));
  return find_isomorphism(e2.lattice, e1.lattice, pins);
}

ComparisonReport pi_sigma_comparison(const ProximityLattice& p) {
  if (!p.doubly_strong()) throw Error(ErrorKind::NotDoublyStrong, "comparison needs a doubly strong lattice");
  const auto& l = p.lattice();
  ComparisonReport rep;
  rep.reflexive = p.flags().reflexive;
  auto pi = pi_extension(p);
  auto sigma = sigma_extension(p);
  std::vector<std::pair<std::size_t, std::size_t>> pins;
  for (std::size_t a = 0; a < p.size(); ++a) pins.emplace_back(pi.embed(a), sigma.embed(a));
  rep.phi = find_isomorphism(pi.lattice, sigma.lattice, pins);

  if (!rep.reflexive) {
    for (std::size_t a = 0; a < p.size(); ++a)
      if (!p.relation().holds(a, a)) {
        rep.witness = "not " + l.name(a) + " R " + l.name(a);
        break;
      }
  }
  if (!rep.phi) {
    std::string why = "no isomorphism phi with phi(h(a)) = k(a) for all a";
    for (std::size_t a = 0; a < p.size(); ++a) {
      bool hb = pi.embed(a) == pi.lattice.bot(), kb = sigma.embed(a) == sigma.lattice.bot();
      bool ht = pi.embed(a) == pi.lattice.top(), kt = sigma.embed(a) == sigma.lattice.top();
      if (hb != kb || ht != kt) {
        why = "h(" + l.name(a) + ") is " + (hb ? "bottom" : ht ? "top" : "neither bound") + " but k(" +
              l.name(a) + ") is " + (kb ? "bottom" : kt ? "top" : "neither bound");
        break;
      }
    }
    rep.witness = rep.witness.empty() ? why : rep.witness + "; " + why;
  }
  return rep;
}

}  // namespace proxlat
