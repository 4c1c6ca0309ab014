#include "proxlat/morphext.hpp"

#include <algorithm>

#include "proxlat/error.hpp"

namespace proxlat {

namespace {

ElementSet image_in(const LatticeMap& h, const ElementSet& s) {
  ElementSet out;
  for (auto a : s) out.insert(h(a));
  return out;
}

}  // namespace

ExtendedMap extend_pi(const CanonicalExtension& source_ext, const CanonicalExtension& target_ext,
                      const Relation& t) {
  if (source_ext.kind != ExtensionKind::pi || target_ext.kind != ExtensionKind::pi)
    throw Error(ErrorKind::KindMismatch, "T^pi needs two pi-extensions");
  auto rep = verify_morphism(source_ext.source, target_ext.source, t);
  if (!rep.proximity()) {
    for (const auto* c : {&rep.converse_absorbs_source, &rep.target_absorbs_converse, &rep.joins_on_left,
                          &rep.meets_on_right})
      if (!c->holds) throw Error(ErrorKind::NotAProximityMorphism, c->witness);
  }

  ExtendedMap m;
  m.source_ext = source_ext;
  m.target_ext = target_ext;
  m.t = t;
  m.j = rep.j();
  const auto& cl = source_ext.lattice;
  const auto& cm = target_ext.lattice;
  const auto& hl = source_ext.embed;
  const auto& hm = target_ext.embed;
  for (auto y : source_ext.ideal_element.table) m.ideal_elements.insert(y);

  std::vector<std::size_t> on_ideals(cl.size(), 0);
  for (auto y : m.ideal_elements) {
    ElementSet below;
    for (std::size_t a = 0; a < hl.size(); ++a)
      if (cl.leq(hl(a), y)) below.insert(a);
    on_ideals[y] = cm.join_of(image_in(hm, t.image(below)));
  }
  for (std::size_t u = 0; u < cl.size(); ++u) {
    ElementSet above;
    for (auto y : m.ideal_elements)
      if (cl.leq(u, y)) above.insert(on_ideals[y]);
    m.table.table.push_back(cm.meet_of(above));
  }
  for (auto y : m.ideal_elements)
    ensure(m.table(y) == on_ideals[y], "both stages of T^pi agree on round ideal elements");
  for (std::size_t a = 0; a < hl.size(); ++a)
    ensure(m.table(hl(a)) == cm.join_of(image_in(hm, t.image(a))), "T^pi(h_L(a)) = join h_M[T[a]]");
  return m;
}

PreservationReport check_preservation(const ExtendedMap& m) {
  const auto& cl = m.source_ext.lattice;
  const auto& cm = m.target_ext.lattice;
  const auto& l = m.source_ext.source.lattice();
  const auto& f = m.table;
  PreservationReport rep;
  rep.j = m.j;

  for (std::size_t a = 0; a < l.size(); ++a)
    if (f(m.source_ext.embed(a)) != cm.join_of(image_in(m.target_ext.embed, m.t.image(a)))) {
      rep.extends.fail("T^pi(h(" + l.name(a) + ")) differs from join h_M[T[" + l.name(a) + "]]");
      break;
    }

  for (std::size_t u = 0; u < cl.size() && rep.monotone; ++u)
    for (auto v : cl.up(u))
      if (!cm.leq(f(u), f(v))) {
        rep.monotone.fail(cl.name(u) + " <= " + cl.name(v) + " but their images are not ordered");
        break;
      }

  if (f(cl.top()) != cm.top()) rep.meets.fail("the top is not preserved");
  for (std::size_t u = 0; u < cl.size() && rep.meets; ++u)
    for (std::size_t v = u + 1; v < cl.size(); ++v)
      if (f(cl.meet(u, v)) != cm.meet(f(u), f(v))) {
        rep.meets.fail("meet of " + cl.name(u) + " and " + cl.name(v) + " is not preserved");
        break;
      }

  std::vector<std::size_t> ideals(m.ideal_elements.begin(), m.ideal_elements.end());
  auto check_directed = [&](const ElementSet& family) {
    for (auto x : family)
      for (auto y : family) {
        bool bounded = false;
        for (auto z : family)
          if (cl.leq(x, z) && cl.leq(y, z)) {
            bounded = true;
            break;
          }
        if (!bounded) return;
      }
    if (f(cl.join_of(family)) != cm.join_of(image_in(f, family)))
      rep.directed_joins.fail("directed family " + set_text(cl, family) + " has its join moved");
  };
  if (ideals.size() <= kDirectedSubsetLimit) {
    for (std::size_t mask = 1; mask < (std::size_t{1} << ideals.size()) && rep.directed_joins; ++mask) {
      ElementSet family;
      for (std::size_t i = 0; i < ideals.size(); ++i)
        if (mask & (std::size_t{1} << i)) family.insert(ideals[i]);
      check_directed(family);
    }
  } else {
    rep.directed_exhaustive = false;
    for (auto x : ideals)
      for (auto y : ideals)
        if (rep.directed_joins && cl.leq(x, y)) check_directed(ElementSet{x, y});
  }

  if (f(cl.bot()) != cm.bot()) rep.finite_ideal_joins.fail("the empty join of round ideal elements is not preserved");
  for (std::size_t i = 0; i < ideals.size() && rep.finite_ideal_joins; ++i)
    for (std::size_t k = i + 1; k < ideals.size(); ++k) {
      auto x = ideals[i], y = ideals[k];
      if (f(cl.join(x, y)) != cm.join(f(x), f(y))) {
        rep.finite_ideal_joins.fail("join of round ideal elements " + cl.name(x) + " and " + cl.name(y) +
                                    " is not preserved");
        break;
      }
    }

  if (f(cl.bot()) != cm.bot()) rep.all_joins.fail("the bottom is not preserved");
  for (std::size_t u = 0; u < cl.size() && rep.all_joins; ++u)
    for (std::size_t v = u + 1; v < cl.size(); ++v)
      if (f(cl.join(u, v)) != cm.join(f(u), f(v))) {
        rep.all_joins.fail("join of " + cl.name(u) + " and " + cl.name(v) + " is not preserved");
        break;
      }
  return rep;
}

DualComparison compare_with_dual(const ExtendedMap& m) {
  const auto& src = m.source_ext.source;
  const auto& tgt = m.target_ext.source;
  auto ws = canext_via_duality(src);
  auto wt = canext_via_duality(tgt);
  ensure(ws.report.valid() && wt.report.valid(), "saturated sets of the spectrum form a pi-extension");
  auto iso_s = check_uniqueness(m.source_ext, ws.via_spectrum);
  auto iso_t = check_uniqueness(m.target_ext, wt.via_spectrum);
  ensure(iso_s.has_value() && iso_t.has_value(), "pi-extensions are unique up to isomorphism");
  auto dm = dual_map(src, tgt, m.t);

  const auto sat_s = saturated_sets(ws.spectrum.space);
  const auto sat_t = saturated_sets(wt.spectrum.space);
  DualComparison out;
  out.saturated_sets = sat_s.size();
  for (std::size_t s = 0; s < sat_s.size(); ++s) {
    ElementSet pre;
    for (std::size_t p = 0; p < dm.table.size(); ++p)
      if (sat_s[s].contains(dm.table[p])) pre.insert(p);
    auto it = std::lower_bound(sat_t.begin(), sat_t.end(), pre);
    ensure(it != sat_t.end() && *it == pre, "inverse image of a saturated set is saturated");
    auto expected = (*iso_t)(static_cast<std::size_t>(it - sat_t.begin()));
    auto actual = m.table((*iso_s)(s));
    if (expected != actual) {
      if (out.discrepancies == 0)
        out.witness = "saturated set " + point_set_text(ws.spectrum.space, sat_s[s]) + ": T^pi gives " +
                      m.target_ext.lattice.name(actual) + ", f_T^-1 gives " +
                      m.target_ext.lattice.name(expected);
      ++out.discrepancies;
    }
  }
  return out;
}

}  // namespace proxlat
