#pragma once

#include <cstddef>
#include <string>

#include "proxlat/canext.hpp"
#include "proxlat/lattice.hpp"
#include "proxlat/proximity.hpp"
#include "proxlat/spectra.hpp"

namespace proxlat {

/// T^pi : C_L -> C_M for a proximity morphism T between the sources of two
/// pi-extensions.
struct ExtendedMap {
  CanonicalExtension source_ext;
  CanonicalExtension target_ext;
  Relation t;
  bool j = false;
  /// Round ideal elements of the source extension.
  ElementSet ideal_elements;
  LatticeMap table;
};

/// On a round ideal element y, T^pi(y) = join {h_M(b) : a T b, h_L(a) <= y};
/// on any u, T^pi(u) = meet {T^pi(y) : u <= y round ideal element}.
/// Throws KindMismatch, NotAProximityMorphism.
ExtendedMap extend_pi(const CanonicalExtension& source_ext, const CanonicalExtension& target_ext,
                      const Relation& t);

struct PreservationReport {
  Check extends;             // T^pi(h_L(a)) = join h_M[T[a]]
  Check monotone;
  Check meets;               // all meets: top and binary
  Check directed_joins;      // directed families of round ideal elements
  Check finite_ideal_joins;  // finite joins of round ideal elements, empty included
  Check all_joins;           // bottom and binary
  bool directed_exhaustive = true;
  bool j = false;

  /// What the theory guarantees: (c) only for j-morphisms, (d) not at all.
  bool required_hold() const {
    return extends.holds && monotone.holds && meets.holds && directed_joins.holds &&
           (!j || finite_ideal_joins.holds);
  }
};

/// Directed families are enumerated as subsets when there are at most this
/// many round ideal elements; beyond that only chains of length two are used,
/// which suffices because a finite directed family has a largest member.
inline constexpr std::size_t kDirectedSubsetLimit = 16;

PreservationReport check_preservation(const ExtendedMap& m);

struct DualComparison {
  std::size_t saturated_sets = 0;
  std::size_t discrepancies = 0;
  std::string witness;

  bool ok() const { return discrepancies == 0; }
};

/// Transports T^pi along the isomorphisms from the saturated-set lattices of
/// the spectra and compares it with inverse image under f_T.
/// Throws NotDistributive, NotJoinStrong, NotAJMorphism.
DualComparison compare_with_dual(const ExtendedMap& m);

}  // namespace proxlat
