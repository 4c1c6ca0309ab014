#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "proxlat/element_set.hpp"
#include "proxlat/lattice.hpp"
#include "proxlat/proximity.hpp"

namespace proxlat {

/// A triple (X, Y, Z) with Z a relation from X to Y.
struct Polarity {
  Relation z;

  std::size_t x_size() const { return z.source_size(); }
  std::size_t y_size() const { return z.target_size(); }
};

/// l(u) = {y : every x in u has x Z y}
ElementSet galois_l(const Polarity& p, const ElementSet& u);
/// r(v) = {x : x Z y for every y in v}
ElementSet galois_r(const Polarity& p, const ElementSet& v);
/// c = r . l
ElementSet galois_closure(const Polarity& p, const ElementSet& u);

/// The complete lattice of closed subsets of X, ordered by inclusion, with
/// f(x) = c({x}) and g(y) = r({y}) given as element indices.
struct ConceptLattice {
  FiniteLattice lattice;
  std::vector<ElementSet> closed;  // canonical order; index = lattice element
  LatticeMap f;
  LatticeMap g;

  std::optional<std::size_t> index_of(const ElementSet& closed_set) const;
};

/// Above this many X-points the closed sets are generated as intersections
/// of the r({y}) instead of closing every subset of X.
inline constexpr std::size_t kSubsetSweepLimit = 12;

ConceptLattice concept_lattice(const Polarity& p);

/// The preorder on X followed by Y induced by the polarity:
/// x <= y iff xZy; x1 <= x2 iff every y with x2 Z y has x1 Z y;
/// y1 <= y2 iff every x with x Z y1 has x Z y2;
/// y <= x iff x' Z y and x Z y' imply x' Z y' for all x', y'.
Preorder polarity_preorder(const Polarity& p);

/// True iff the concept lattice is isomorphic to the Dedekind-MacNeille
/// completion of polarity_preorder by a map sending f(x) and g(y) to the
/// cuts of x and y.
bool matches_macneille(const Polarity& p, const ConceptLattice& c);

enum class ExtensionKind { pi, sigma };

std::string_view to_string(ExtensionKind kind);

/// An extension h : L -> C of a proximity lattice together with the round
/// filters and ideals of its source and their elements f(F), g(I) in C.
struct CanonicalExtension {
  ExtensionKind kind = ExtensionKind::pi;
  ProximityLattice source;
  FiniteLattice lattice;
  LatticeMap embed;
  std::vector<ElementSet> filters;
  std::vector<ElementSet> ideals;
  LatticeMap filter_element;
  LatticeMap ideal_element;
  /// Elements of C as Galois-closed sets of the underlying polarity; empty
  /// for extensions not built from one.
  std::vector<ElementSet> closed_sets;
};

/// Round filters as X, round ideals as Y, F Z I iff F and I meet.
Polarity round_polarity(const ProximityLattice& p);

/// Galois-closed sets of round_polarity with h(a) = g(R^-1[a]).
/// Throws NotJoinStrong.
CanonicalExtension pi_extension(const ProximityLattice& p);

/// The pi-extension of (L^op, R^-1) read in the opposite order.
/// Throws NotMeetStrong.
CanonicalExtension sigma_extension(const ProximityLattice& p);

/// Builds an extension from a lattice and an embedding; the filter and ideal
/// elements are computed as meets and joins of images.
CanonicalExtension make_extension(ExtensionKind kind, const ProximityLattice& source, FiniteLattice c,
                                  LatticeMap embed);

struct ExtensionReport {
  Check homomorphism;
  Check dense;            // every u is a join of round filter elements below and a meet of round ideal elements above
  Check compact;          // meet h[F] <= join h[I] implies F and I meet
  Check compact_subsets;  // the raw subset form; checked on small carriers only
  bool compact_subsets_checked = false;
  Check increasing;       // aRb implies h(a) <= h(b)
  Check join_preserving;  // h(a) = join {h(b) : bRa}
  Check meet_preserving;  // h(a) = meet {h(b) : aRb}
  Check element_tables;   // f(F) = meet h[F], g(I) = join h[I]

  bool valid_pi() const {
    return dense.holds && compact.holds && increasing.holds && join_preserving.holds;
  }
  bool valid_sigma() const {
    return dense.holds && compact.holds && increasing.holds && meet_preserving.holds;
  }
  bool valid() const;
  ExtensionKind kind = ExtensionKind::pi;
};

/// Carriers up to this size also get the raw subset form of R-compactness.
inline constexpr std::size_t kRawCompactLimit = 8;

ExtensionReport verify_extension(const CanonicalExtension& e);

/// The isomorphism phi : E2 -> E1 with phi . embed2 = embed1 that also
/// matches round filter and ideal elements, if one exists. Throws
/// PreconditionFailed if either extension fails verify_extension for its kind,
/// KindMismatch if the kinds or sources differ.
std::optional<LatticeMap> check_uniqueness(const CanonicalExtension& e1, const CanonicalExtension& e2);

/// The pi-extension rebuilt as the Dedekind-MacNeille completion of the
/// polarity preorder; an independent route to the same lattice.
CanonicalExtension pi_extension_via_macneille(const ProximityLattice& p);

struct ComparisonReport {
  bool reflexive = false;
  std::optional<LatticeMap> phi;  // C_pi -> C_sigma with phi . h = k
  std::string witness;            // why phi does not exist, or why R is not reflexive

  bool agrees() const { return reflexive == phi.has_value(); }
};

/// Throws NotDoublyStrong.
ComparisonReport pi_sigma_comparison(const ProximityLattice& p);

}  // namespace proxlat
