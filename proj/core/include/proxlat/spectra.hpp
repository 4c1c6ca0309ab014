#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "proxlat/canext.hpp"
#include "proxlat/element_set.hpp"
#include "proxlat/lattice.hpp"
#include "proxlat/proximity.hpp"

namespace proxlat {

/// A finite topological space given by its full family of open sets.
///
/// In a finite space every saturated set (intersection of opens) is compact,
/// and the opens themselves are closed under all intersections, so
/// "compact saturated" and "open" single out the same sets. Several
/// distinctions the general theory relies on (spectral vs stably compact,
/// open basis vs compact-saturated basis) disappear at this scale.
struct FiniteSpace {
  std::vector<std::string> points;
  std::vector<ElementSet> opens;  // canonical order

  std::size_t size() const { return points.size(); }
  bool is_open(const ElementSet& u) const;
  friend bool operator==(const FiniteSpace&, const FiniteSpace&) = default;
};

/// Validates that the family contains the empty and full sets and is closed
/// under binary unions and intersections. Throws InvalidSpace.
FiniteSpace make_space(std::vector<std::string> points, std::vector<ElementSet> opens);

/// The space whose opens are the up-sets of a partial order given as
/// up-sets (up[x] = points above x). Every finite T0 space arises this way.
FiniteSpace space_from_order(std::vector<std::string> points, const std::vector<ElementSet>& up);

/// Smallest saturated set containing x: the intersection of its open
/// neighbourhoods, i.e. the points above x in the specialization order.
ElementSet saturation(const FiniteSpace& s, std::size_t x);
bool is_t0(const FiniteSpace& s);

/// Intersections of opens, canonical order.
std::vector<ElementSet> saturated_sets(const FiniteSpace& s);
/// Saturated sets under inclusion; elements are named by their point sets.
FiniteLattice saturated_lattice(const FiniteSpace& s);
/// Opens under inclusion; elements are named by their point sets.
FiniteLattice open_lattice(const FiniteSpace& s);

/// Opens are the complements of the (compact) saturated sets.
FiniteSpace co_compact_dual(const FiniteSpace& s);

/// All labeled T0 spaces on n points, n <= 5, via their specialization orders.
std::vector<FiniteSpace> t0_spaces(std::size_t n);

/// Text for a set of points, e.g. "{x,y}".
std::string point_set_text(const FiniteSpace& s, const ElementSet& u);

/// Point map f : X -> Y; the spaces are supplied by the caller.
using PointMap = std::vector<std::size_t>;

bool is_continuous(const FiniteSpace& x, const FiniteSpace& y, const PointMap& f);
/// A bijection preserving opens in both directions, found by search.
std::optional<PointMap> find_homeomorphism(const FiniteSpace& x, const FiniteSpace& y);

/// Opens ordered by inclusion with dRe iff d is inside some compact
/// saturated k inside e. Throws NotT0.
ProximityLattice open_basis_presentation(const FiniteSpace& s);
/// Open-basis presentation of the co-compact dual, each element relabeled as
/// the complementary saturated set of s (so the order is reverse inclusion).
ProximityLattice compsat_basis_presentation(const FiniteSpace& s);
/// Pairs (d, e), d open, e saturated, d inside e, ordered componentwise;
/// (d,e) T (d',e') iff e is inside d'. Throws NotT0.
ProximityLattice pairs_presentation(const FiniteSpace& s);

/// Throws NotDistributive or NotJoinStrong unless `exploratory` is set, in
/// which case non-distributive inputs are searched anyway.
std::vector<ElementSet> prime_round_filters(const ProximityLattice& p, bool exploratory = false);

bool is_prime_filter(const FiniteLattice& lat, const ElementSet& f);

/// A prime round filter containing G and missing J, absent when G meets J.
/// Takes a largest member of {round filters F : G inside F, F misses J}.
/// Throws InvalidRoundSubset, NotDistributive, NotJoinStrong.
std::optional<ElementSet> prime_filter_between(const ProximityLattice& p, const ElementSet& g,
                                               const ElementSet& j);

struct SpectrumResult {
  ProximityLattice source;
  FiniteSpace space;
  std::vector<ElementSet> point_filters;  // point -> prime round filter
  std::vector<ElementSet> basic_open;     // d -> U_d
};

/// Points are the prime round filters, U_d = {F : d in F}, opens are unions
/// of basic opens. Throws NotDistributive, NotJoinStrong.
SpectrumResult spectrum(const ProximityLattice& p);

struct DualityWitness {
  SpectrumResult spectrum;
  CanonicalExtension via_spectrum;  // d -> U_d into the saturated sets
  CanonicalExtension pi;
  ExtensionReport report;
  std::optional<LatticeMap> iso;  // via_spectrum.lattice -> pi.lattice

  bool ok() const { return report.valid() && iso.has_value(); }
};

/// Throws NotDistributive, NotJoinStrong.
DualityWitness canext_via_duality(const ProximityLattice& p);

/// f_T(F) = T^-1[F], a continuous map spec(E,S) -> spec(D,R).
struct DualMap {
  SpectrumResult domain;    // spectrum of the target of T
  SpectrumResult codomain;  // spectrum of the source of T
  PointMap table;
};

/// Throws NotAJMorphism, NotDistributive, NotJoinStrong.
DualMap dual_map(const ProximityLattice& src, const ProximityLattice& tgt, const Relation& t);

/// A finite space with a continuous idempotent self-map.
struct SpectralProximitySpace {
  FiniteSpace space;
  PointMap retraction;
};

/// Throws InvalidSpace unless f is continuous and idempotent.
SpectralProximitySpace make_spectral_proximity_space(FiniteSpace space, PointMap f);

/// g continuous with f'g = g = gf.
bool karoubi_check(const SpectralProximitySpace& x, const SpectralProximitySpace& y, const PointMap& g);

/// Subspace on f[X] with the subspace topology.
FiniteSpace retract_image(const SpectralProximitySpace& x);

struct SpectralCaseReport {
  bool reflexive = false;
  FiniteLattice opens;  // compact opens of the spectrum; all opens here
  std::optional<std::pair<Relation, Relation>> j_iso;  // P -> (E,<=), (E,<=) -> P
  bool also_m_iso = false;
  std::size_t candidates = 0;  // j-morphism pairs examined
  bool search_complete = true;
};

/// Searches j-morphisms between P and (opens of spec P, <=) for a
/// j-isomorphism. Throws NotDistributive, NotJoinStrong.
SpectralCaseReport spectral_case_check(const ProximityLattice& p, std::size_t limit = 100'000);

}  // namespace proxlat
