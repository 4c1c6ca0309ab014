#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "proxlat/element_set.hpp"

namespace proxlat {

/// A finite bounded lattice with precomputed meet and join tables.
///
/// Elements are indices 0..size()-1; names are only used for I/O. Instances
/// are built through lattice_from_order and are immutable afterwards.
class FiniteLattice {
 public:
  FiniteLattice() = default;

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t a) const { return names_[a]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool leq(std::size_t a, std::size_t b) const { return up_[a].contains(b); }
  std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a * size() + b]; }
  std::size_t join(std::size_t a, std::size_t b) const { return join_[a * size() + b]; }
  std::size_t top() const { return top_; }
  std::size_t bot() const { return bot_; }

  /// {b : a <= b}
  const ElementSet& up(std::size_t a) const { return up_[a]; }
  /// {b : b <= a}
  const ElementSet& down(std::size_t a) const { return down_[a]; }

  /// Join of a finite set; the empty join is bot().
  std::size_t join_of(const ElementSet& s) const;
  /// Meet of a finite set; the empty meet is top().
  std::size_t meet_of(const ElementSet& s) const;

  /// Cover relation of the Hasse diagram, in index order.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

  /// Table equality on identical carriers (names included).
  friend bool operator==(const FiniteLattice&, const FiniteLattice&) = default;

 private:
  friend FiniteLattice lattice_from_order(std::vector<std::string>, std::vector<ElementSet>);
  friend FiniteLattice opposite(const FiniteLattice&);

  std::vector<std::string> names_;
  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
  std::vector<std::uint16_t> meet_;
  std::vector<std::uint16_t> join_;
  std::size_t top_ = 0;
  std::size_t bot_ = 0;
};

/// A total function between carriers; which lattices it connects is supplied
/// by the caller of each operation.
struct LatticeMap {
  std::vector<std::size_t> table;

  std::size_t operator()(std::size_t a) const { return table[a]; }
  std::size_t size() const { return table.size(); }
  friend bool operator==(const LatticeMap&, const LatticeMap&) = default;
};

/// A reflexive transitive relation on a finite index set. above[a] holds the
/// elements above a.
struct Preorder {
  std::vector<std::string> names;
  std::vector<ElementSet> above;

  std::size_t size() const { return names.size(); }
  bool leq(std::size_t a, std::size_t b) const { return above[a].contains(b); }
};

/// Builds a lattice from a partial order given as up-sets (up[a] = {b : a <= b}).
/// Throws NotAPartialOrder, or NotALattice with a witness pair lacking a bound.
FiniteLattice lattice_from_order(std::vector<std::string> names, std::vector<ElementSet> up);

/// Same, from a list of (lower, upper) pairs; the reflexive-transitive closure
/// of the pairs is taken first.
FiniteLattice lattice_from_pairs(std::vector<std::string> names,
                                 std::span<const std::pair<std::size_t, std::size_t>> pairs);

/// Lattice of sets ordered by inclusion. The family must be closed under the
/// lattice operations induced by inclusion; names default to "c<i>".
FiniteLattice lattice_from_sets(std::span<const ElementSet> sets, std::vector<std::string> names = {});

/// Smallest family containing `universe` and every generator that is closed
/// under binary intersection, in canonical ElementSet order.
std::vector<ElementSet> intersection_closure(std::span<const ElementSet> generators,
                                             const ElementSet& universe);

/// Reflexive-transitive closure of a relation given as successor sets.
std::vector<ElementSet> transitive_closure(std::vector<ElementSet> rel);

bool is_distributive(const FiniteLattice& lat);
FiniteLattice opposite(const FiniteLattice& lat);

/// True iff f preserves binary meets and joins as well as top and bottom.
bool is_homomorphism(const FiniteLattice& src, const FiniteLattice& tgt, const LatticeMap& f);
bool is_order_preserving(const FiniteLattice& src, const FiniteLattice& tgt, const LatticeMap& f);

LatticeMap identity_map(const FiniteLattice& lat);
/// (g after f)
LatticeMap compose(const LatticeMap& f, const LatticeMap& g);

/// Result of the Dedekind-MacNeille completion: the lattice of cuts of the
/// preorder (as subsets of its carrier) with the natural map q -> cut of q.
struct MacNeilleCompletion {
  FiniteLattice lattice;
  std::vector<ElementSet> cuts;
  LatticeMap embedding;
};

MacNeilleCompletion dedekind_macneille(const Preorder& q);

/// Brute-force order isomorphism search with pruning. `fixed` pins some
/// source elements to target elements in advance.
std::optional<LatticeMap> find_isomorphism(
    const FiniteLattice& l, const FiniteLattice& m,
    std::span<const std::pair<std::size_t, std::size_t>> fixed = {});

/// Diagnostic text for the first pair that breaks a lattice law, or empty.
std::string check_lattice_laws(const FiniteLattice& lat);

}  // namespace proxlat
