#include "proxlat/spectra.hpp"

#include <algorithm>
#include <unordered_set>

#include "proxlat/error.hpp"

namespace proxlat {

bool FiniteSpace::is_open(const ElementSet& u) const {
  return std::binary_search(opens.begin(), opens.end(), u);
}

std::string point_set_text(const FiniteSpace& s, const ElementSet& u) {
  std::string out = "{";
  bool first = true;
  for (auto x : u) {
    if (!first) out += ",";
    out += s.points[x];
    first = false;
  }
  return out + "}";
}

FiniteSpace make_space(std::vector<std::string> points, std::vector<ElementSet> opens) {
  FiniteSpace s;
  s.points = std::move(points);
  if (s.points.size() > ElementSet::kCapacity)
    throw Error(ErrorKind::CapacityExceeded, "space has too many points");
  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  s.opens = std::move(opens);
  const auto all = ElementSet::full(s.size());
  for (const auto& u : s.opens)
    if (!u.subset_of(all)) throw Error(ErrorKind::InvalidSpace, "open set mentions an unknown point");
  if (!s.is_open(ElementSet{})) throw Error(ErrorKind::InvalidSpace, "the empty set is not open");
  if (!s.is_open(all)) throw Error(ErrorKind::InvalidSpace, "the whole space is not open");
  for (const auto& u : s.opens)
    for (const auto& v : s.opens) {
      if (!s.is_open(u | v))
        throw Error(ErrorKind::InvalidSpace,
                    "union of " + point_set_text(s, u) + " and " + point_set_text(s, v) + " is not open");
      if (!s.is_open(u & v))
        throw Error(ErrorKind::InvalidSpace,
                    "intersection of " + point_set_text(s, u) + " and " + point_set_text(s, v) + " is not open");
    }
  return s;
}

FiniteSpace space_from_order(std::vector<std::string> points, const std::vector<ElementSet>& up) {
  const auto n = points.size();
  std::vector<ElementSet> opens;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    ElementSet u;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) u.insert(i);
    bool upward = true;
    for (auto x : u)
      if (!up[x].subset_of(u)) {
        upward = false;
        break;
      }
    if (upward) opens.push_back(u);
  }
  return make_space(std::move(points), std::move(opens));
}

ElementSet saturation(const FiniteSpace& s, std::size_t x) {
  auto out = ElementSet::full(s.size());
  for (const auto& u : s.opens)
    if (u.contains(x)) out &= u;
  return out;
}

bool is_t0(const FiniteSpace& s) {
  std::unordered_set<ElementSet, ElementSetHash> seen;
  for (std::size_t x = 0; x < s.size(); ++x)
    if (!seen.insert(saturation(s, x)).second) return false;
  return true;
}

std::vector<ElementSet> saturated_sets(const FiniteSpace& s) {
  return intersection_closure(s.opens, ElementSet::full(s.size()));
}

namespace {

FiniteLattice lattice_of(const FiniteSpace& s, const std::vector<ElementSet>& sets) {
  std::vector<std::string> names;
  for (const auto& u : sets) names.push_back(point_set_text(s, u));
  return lattice_from_sets(sets, std::move(names));
}

std::vector<ElementSet> union_closure(const std::vector<ElementSet>& generators) {
  std::unordered_set<ElementSet, ElementSetHash> seen{ElementSet{}};
  std::vector<ElementSet> family{ElementSet{}};
  for (const auto& g : generators) {
    const auto current = family.size();
    for (std::size_t i = 0; i < current; ++i) {
      auto u = family[i] | g;
      if (seen.insert(u).second) family.push_back(u);
    }
  }
  std::sort(family.begin(), family.end());
  return family;
}

std::size_t position(const std::vector<ElementSet>& sorted, const ElementSet& s) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), s);
  ensure(it != sorted.end() && *it == s, "set is present in the canonical list");
  return static_cast<std::size_t>(it - sorted.begin());
}

void require_t0(const FiniteSpace& s) {
  if (!is_t0(s)) throw Error(ErrorKind::NotT0, "two points have the same open neighbourhoods");
}

void require_spectral(const ProximityLattice& p) {
  if (!p.flags().distributive) throw Error(ErrorKind::NotDistributive, "the lattice is not distributive");
  if (!p.flags().join_strong) throw Error(ErrorKind::NotJoinStrong, "the proximity lattice is not join-strong");
}

}  // namespace

FiniteLattice saturated_lattice(const FiniteSpace& s) { return lattice_of(s, saturated_sets(s)); }

FiniteLattice open_lattice(const FiniteSpace& s) { return lattice_of(s, s.opens); }

FiniteSpace co_compact_dual(const FiniteSpace& s) {
  const auto all = ElementSet::full(s.size());
  std::vector<ElementSet> opens;
  for (const auto& k : saturated_sets(s)) opens.push_back(all - k);
  return make_space(s.points, std::move(opens));
}

std::vector<FiniteSpace> t0_spaces(std::size_t n) {
  if (n > 5) throw Error(ErrorKind::CapacityExceeded, "T0 space enumeration is limited to 5 points");
  std::vector<std::pair<std::size_t, std::size_t>> offdiag;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b) offdiag.emplace_back(a, b);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));

  std::vector<FiniteSpace> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << offdiag.size()); ++mask) {
    std::vector<ElementSet> up(n);
    for (std::size_t a = 0; a < n; ++a) up[a].insert(a);
    for (std::size_t k = 0; k < offdiag.size(); ++k)
      if (mask & (std::size_t{1} << k)) up[offdiag[k].first].insert(offdiag[k].second);
    bool order = true;
    for (std::size_t a = 0; a < n && order; ++a)
      for (auto b : up[a]) {
        if (b != a && up[b].contains(a)) order = false;
        if (!up[b].subset_of(up[a])) order = false;
      }
    if (order) out.push_back(space_from_order(names, up));
  }
  return out;
}

bool is_continuous(const FiniteSpace& x, const FiniteSpace& y, const PointMap& f) {
  if (f.size() != x.size()) return false;
  for (auto v : f)
    if (v >= y.size()) return false;
  for (const auto& v : y.opens) {
    ElementSet pre;
    for (std::size_t p = 0; p < x.size(); ++p)
      if (v.contains(f[p])) pre.insert(p);
    if (!x.is_open(pre)) return false;
  }
  return true;
}

namespace {

class HomeoSearch {
 public:
  HomeoSearch(const FiniteSpace& x, const FiniteSpace& y) : x_(x), y_(y), map_(x.size()), used_(y.size()) {
    for (std::size_t p = 0; p < x.size(); ++p) sx_.push_back(saturation(x, p).size());
    for (std::size_t p = 0; p < y.size(); ++p) sy_.push_back(saturation(y, p).size());
  }

  std::optional<PointMap> run() {
    if (x_.size() != y_.size() || x_.opens.size() != y_.opens.size()) return std::nullopt;
    if (descend(0)) return map_;
    return std::nullopt;
  }

 private:
  bool descend(std::size_t p) {
    if (p == x_.size()) return is_continuous(x_, y_, map_) && opens_forward();
    for (std::size_t q = 0; q < y_.size(); ++q) {
      if (used_[q] || sx_[p] != sy_[q]) continue;
      map_[p] = q;
      used_[q] = true;
      if (descend(p + 1)) return true;
      used_[q] = false;
    }
    return false;
  }

  bool opens_forward() const {
    for (const auto& u : x_.opens) {
      ElementSet img;
      for (auto p : u) img.insert(map_[p]);
      if (!y_.is_open(img)) return false;
    }
    return true;
  }

  const FiniteSpace& x_;
  const FiniteSpace& y_;
  PointMap map_;
  std::vector<bool> used_;
  std::vector<std::size_t> sx_, sy_;
};

}  // namespace

std::optional<PointMap> find_homeomorphism(const FiniteSpace& x, const FiniteSpace& y) {
  return HomeoSearch(x, y).run();
}

ProximityLattice open_basis_presentation(const FiniteSpace& s) {
  require_t0(s);
  auto lat = open_lattice(s);
  const auto sat = saturated_sets(s);
  Relation r(lat.size(), lat.size());
  for (std::size_t d = 0; d < s.opens.size(); ++d)
    for (std::size_t e = 0; e < s.opens.size(); ++e)
      for (const auto& k : sat)
        if (s.opens[d].subset_of(k) && k.subset_of(s.opens[e])) {
          r.insert(d, e);
          break;
        }
  ensure(r == Relation::order(lat), "open-basis relation collapses to inclusion");
  auto p = ProximityLattice::make(std::move(lat), std::move(r));
  ensure(p.flags().join_strong && p.flags().increasing && p.flags().distributive,
         "open-basis presentation is join-strong, increasing and distributive");
  return p;
}

ProximityLattice compsat_basis_presentation(const FiniteSpace& s) {
  require_t0(s);
  auto dual = co_compact_dual(s);
  auto p = open_basis_presentation(dual);
  const auto all = ElementSet::full(s.size());
  std::vector<std::string> names;
  std::vector<ElementSet> up(dual.opens.size());
  for (std::size_t i = 0; i < dual.opens.size(); ++i) {
    names.push_back(point_set_text(s, all - dual.opens[i]));
    up[i] = p.lattice().up(i);
  }
  auto relabeled = lattice_from_order(std::move(names), std::move(up));
  return ProximityLattice::make(std::move(relabeled), p.relation());
}

ProximityLattice pairs_presentation(const FiniteSpace& s) {
  require_t0(s);
  const auto sat = saturated_sets(s);
  std::vector<std::pair<ElementSet, ElementSet>> pairs;
  for (const auto& d : s.opens)
    for (const auto& e : sat)
      if (d.subset_of(e)) pairs.emplace_back(d, e);
  const auto n = pairs.size();
  if (n > ElementSet::kCapacity)
    throw Error(ErrorKind::CapacityExceeded, "pairs presentation has " + std::to_string(n) + " elements");
  std::vector<std::string> names;
  std::vector<ElementSet> up(n);
  Relation t(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("(" + point_set_text(s, pairs[i].first) + "," + point_set_text(s, pairs[i].second) + ")");
    for (std::size_t j = 0; j < n; ++j) {
      if (pairs[i].first.subset_of(pairs[j].first) && pairs[i].second.subset_of(pairs[j].second)) up[i].insert(j);
      if (pairs[i].second.subset_of(pairs[j].first)) t.insert(i, j);
    }
  }
  auto p = ProximityLattice::make(lattice_from_order(std::move(names), std::move(up)), std::move(t));
  ensure(p.doubly_strong() && p.flags().distributive, "pairs presentation is doubly strong and distributive");
  return p;
}

bool is_prime_filter(const FiniteLattice& lat, const ElementSet& f) {
  if (f.contains(lat.bot())) return false;
  for (std::size_t a = 0; a < lat.size(); ++a)
    for (std::size_t b = a + 1; b < lat.size(); ++b)
      if (f.contains(lat.join(a, b)) && !f.contains(a) && !f.contains(b)) return false;
  return true;
}

std::vector<ElementSet> prime_round_filters(const ProximityLattice& p, bool exploratory) {
  if (!exploratory) require_spectral(p);
  std::vector<ElementSet> out;
  for (const auto& f : round_subsets(p, RoundKind::filter))
    if (is_prime_filter(p.lattice(), f)) out.push_back(f);
  return out;
}

std::optional<ElementSet> prime_filter_between(const ProximityLattice& p, const ElementSet& g,
                                               const ElementSet& j) {
  require_spectral(p);
  const auto& lat = p.lattice();
  if (!is_round_filter(p, g))
    throw Error(ErrorKind::InvalidRoundSubset, set_text(lat, g) + " is not a round filter");
  if (!is_round_ideal(p, j))
    throw Error(ErrorKind::InvalidRoundSubset, set_text(lat, j) + " is not a round ideal");
  if (g.intersects(j)) return std::nullopt;

  std::optional<ElementSet> best;
  for (const auto& f : round_subsets(p, RoundKind::filter))
    if (g.subset_of(f) && !f.intersects(j) && (!best || f.size() > best->size())) best = f;
  ensure(best.has_value(), "G itself belongs to the family");
  if (best->contains(lat.bot()))
    throw Error(ErrorKind::InternalInvariant, "maximal filter " + set_text(lat, *best) + " contains the bottom");
  for (std::size_t a = 0; a < lat.size(); ++a)
    for (std::size_t b = a + 1; b < lat.size(); ++b)
      if (best->contains(lat.join(a, b)) && !best->contains(a) && !best->contains(b))
        throw Error(ErrorKind::InternalInvariant, "maximal filter " + set_text(lat, *best) + " contains " +
                                                      lat.name(lat.join(a, b)) + " = " + lat.name(a) +
                                                      " v " + lat.name(b) + " but neither disjunct");
  return best;
}

SpectrumResult spectrum(const ProximityLattice& p) {
  require_spectral(p);
  const auto& lat = p.lattice();
  SpectrumResult out;
  out.source = p;
  out.point_filters = prime_round_filters(p);
  std::vector<std::string> names;
  for (const auto& f : out.point_filters) names.push_back(set_text(lat, f));
  for (std::size_t d = 0; d < lat.size(); ++d) {
    ElementSet u;
    for (std::size_t i = 0; i < out.point_filters.size(); ++i)
      if (out.point_filters[i].contains(d)) u.insert(i);
    out.basic_open.push_back(u);
  }
  const auto n = out.point_filters.size();
  ensure(out.basic_open[lat.top()] == ElementSet::full(n), "U_top is every point");
  ensure(out.basic_open[lat.bot()].empty(), "U_bot is empty");
  for (std::size_t d = 0; d < lat.size(); ++d)
    for (std::size_t e = d + 1; e < lat.size(); ++e) {
      ensure(out.basic_open[lat.meet(d, e)] == (out.basic_open[d] & out.basic_open[e]), "U_(d^e) = U_d n U_e");
      ensure(out.basic_open[lat.join(d, e)] == (out.basic_open[d] | out.basic_open[e]), "U_(dve) = U_d u U_e");
    }
  out.space = make_space(std::move(names), union_closure(out.basic_open));
  return out;
}

DualityWitness canext_via_duality(const ProximityLattice& p) {
  DualityWitness w;
  w.spectrum = spectrum(p);
  const auto sat = saturated_sets(w.spectrum.space);
  LatticeMap embed;
  for (std::size_t d = 0; d < p.size(); ++d) embed.table.push_back(position(sat, w.spectrum.basic_open[d]));
  w.via_spectrum = make_extension(ExtensionKind::pi, p, saturated_lattice(w.spectrum.space), std::move(embed));
  w.report = verify_extension(w.via_spectrum);
  w.pi = pi_extension(p);
  if (w.report.valid()) w.iso = check_uniqueness(w.pi, w.via_spectrum);
  return w;
}

DualMap dual_map(const ProximityLattice& src, const ProximityLattice& tgt, const Relation& t) {
  auto rep = verify_morphism(src, tgt, t);
  if (!rep.j())
    throw Error(ErrorKind::NotAJMorphism,
                rep.proximity() ? rep.join_approximable.witness : "not a proximity morphism");
  DualMap out;
  out.domain = spectrum(tgt);
  out.codomain = spectrum(src);
  for (const auto& f : out.domain.point_filters) {
    auto image = t.preimage(f);
    auto it = std::lower_bound(out.codomain.point_filters.begin(), out.codomain.point_filters.end(), image);
    ensure(it != out.codomain.point_filters.end() && *it == image, "T^-1 sends prime round filters to prime round filters");
    out.table.push_back(static_cast<std::size_t>(it - out.codomain.point_filters.begin()));
  }
  ensure(is_continuous(out.domain.space, out.codomain.space, out.table), "f_T is continuous");
  return out;
}

SpectralProximitySpace make_spectral_proximity_space(FiniteSpace space, PointMap f) {
  if (!is_continuous(space, space, f)) throw Error(ErrorKind::InvalidSpace, "retraction is not continuous");
  for (std::size_t x = 0; x < f.size(); ++x)
    if (f[f[x]] != f[x]) throw Error(ErrorKind::InvalidSpace, "retraction is not idempotent at " + space.points[x]);
  return {std::move(space), std::move(f)};
}

bool karoubi_check(const SpectralProximitySpace& x, const SpectralProximitySpace& y, const PointMap& g) {
  if (!is_continuous(x.space, y.space, g)) return false;
  for (std::size_t p = 0; p < x.space.size(); ++p) {
    if (y.retraction[g[p]] != g[p]) return false;
    if (g[x.retraction[p]] != g[p]) return false;
  }
  return true;
}

FiniteSpace retract_image(const SpectralProximitySpace& x) {
  ElementSet image;
  for (auto v : x.retraction) image.insert(v);
  std::vector<std::size_t> index(x.space.size(), 0);
  std::vector<std::string> names;
  for (auto p : image) {
    index[p] = names.size();
    names.push_back(x.space.points[p]);
  }
  std::vector<ElementSet> opens;
  for (const auto& u : x.space.opens) {
    ElementSet v;
    for (auto p : u & image) v.insert(index[p]);
    opens.push_back(v);
  }
  return make_space(std::move(names), std::move(opens));
}

SpectralCaseReport spectral_case_check(const ProximityLattice& p, std::size_t limit) {
  require_spectral(p);
  SpectralCaseReport rep;
  rep.reflexive = p.flags().reflexive;
  auto spec = spectrum(p);
  rep.opens = open_lattice(spec.space);
  auto q = ProximityLattice::with_order(rep.opens);
  auto forward = enumerate_morphisms(p, q, MorphismClass::j, limit);
  auto backward = enumerate_morphisms(q, p, MorphismClass::j, limit);
  rep.search_complete = forward.size() < limit && backward.size() < limit;
  const auto r_inv = p.relation().converse();
  const auto s_inv = q.relation().converse();
  for (const auto& phi : forward) {
    for (const auto& psi : backward) {
      ++rep.candidates;
      if (compose(phi, psi) != r_inv || compose(psi, phi) != s_inv) continue;
      rep.j_iso = std::make_pair(phi, psi);
      rep.also_m_iso = verify_morphism(p, q, phi).m() && verify_morphism(q, p, psi).m();
      return rep;
    }
  }
  return rep;
}

}  // namespace proxlat
