#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "proxlat/element_set.hpp"
#include "proxlat/lattice.hpp"

namespace proxlat {

/// A relation between two finite index sets, stored both row-wise (R[a])
/// and column-wise (R^-1[b]).
class Relation {
 public:
  Relation() = default;
  Relation(std::size_t source_size, std::size_t target_size);

  static Relation from_pairs(std::size_t source_size, std::size_t target_size,
                             std::span<const std::pair<std::size_t, std::size_t>> pairs);
  /// The lattice order <= as a relation on the carrier.
  static Relation order(const FiniteLattice& lat);
  static Relation full(std::size_t source_size, std::size_t target_size);

  std::size_t source_size() const { return source_size_; }
  std::size_t target_size() const { return target_size_; }

  bool holds(std::size_t a, std::size_t b) const { return rows_[a].contains(b); }
  void insert(std::size_t a, std::size_t b);
  void erase(std::size_t a, std::size_t b);

  /// R[a]
  const ElementSet& image(std::size_t a) const { return rows_[a]; }
  /// R[A]
  ElementSet image(const ElementSet& a) const;
  /// R^-1[b]
  const ElementSet& preimage(std::size_t b) const { return cols_[b]; }
  /// R^-1[B]
  ElementSet preimage(const ElementSet& b) const;

  Relation converse() const;
  bool empty() const;
  std::size_t pair_count() const;
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

  friend bool operator==(const Relation& a, const Relation& b) {
    return a.source_size_ == b.source_size_ && a.target_size_ == b.target_size_ && a.rows_ == b.rows_;
  }

 private:
  std::size_t source_size_ = 0;
  std::size_t target_size_ = 0;
  std::vector<ElementSet> rows_;
  std::vector<ElementSet> cols_;
};

/// a (R;S) c iff there is b with aRb and bSc. Throws DimensionMismatch.
Relation compose(const Relation& r, const Relation& s);

/// Outcome of one checked property. `witness` names the least counterexample.
struct Check {
  bool holds = true;
  std::string witness;

  explicit operator bool() const { return holds; }
  void fail(std::string w) {
    if (holds) {
      holds = false;
      witness = std::move(w);
    }
  }
};

/// How the "for every finite subset" quantifiers are evaluated.
///
/// `reduced` checks the nullary, unary and binary instances only. For the
/// biconditional axioms 2 and 3 that is a proof: a join of n+1 elements is a
/// binary join of a join of n elements with one more, and both sides of the
/// biconditional split the same way, so induction on n covers every finite
/// set. For the strongness axioms no such argument is claimed; `exhaustive`
/// quantifies over every subset (carriers up to kExhaustiveLimit) and is used
/// to cross-check the reduction empirically.
enum class QuantifierMode { reduced, exhaustive };
inline constexpr std::size_t kExhaustiveLimit = 10;

struct AxiomReport {
  Check axiom1;       // R;R = R
  Check axiom2;       // join on the left
  Check axiom3;       // meet on the right
  Check join_strong;  // axiom 4
  Check meet_strong;  // axiom 5
  Check increasing;
  Check reflexive;
  bool distributive = false;

  bool proximity_lattice() const { return axiom1.holds && axiom2.holds && axiom3.holds; }
};

AxiomReport verify_axioms(const FiniteLattice& lat, const Relation& r,
                          QuantifierMode mode = QuantifierMode::reduced);

struct ProximityFlags {
  bool axioms_ok = false;
  bool join_strong = false;
  bool meet_strong = false;
  bool increasing = false;
  bool reflexive = false;
  bool distributive = false;
};

/// A finite lattice together with a relation satisfying axioms 1-3.
class ProximityLattice {
 public:
  ProximityLattice() = default;

  /// Verifies the axioms and records the flags. Throws NotAProximityLattice
  /// with the first failing axiom's witness.
  static ProximityLattice make(FiniteLattice lat, Relation r);
  /// (L, <=)
  static ProximityLattice with_order(FiniteLattice lat);

  const FiniteLattice& lattice() const { return lattice_; }
  const Relation& relation() const { return relation_; }
  const ProximityFlags& flags() const { return flags_; }
  std::size_t size() const { return lattice_.size(); }
  bool doubly_strong() const { return flags_.join_strong && flags_.meet_strong; }

  friend bool operator==(const ProximityLattice& a, const ProximityLattice& b) {
    return a.lattice_ == b.lattice_ && a.relation_ == b.relation_;
  }

 private:
  FiniteLattice lattice_;
  Relation relation_;
  ProximityFlags flags_;
};

/// (L^op, R^-1)
ProximityLattice opposite(const ProximityLattice& p);

enum class RoundKind { ideal, filter };

/// Lemma form: R^-1[S] = S and S closed under finite joins (the empty join
/// included, so S is nonempty); dually for filters.
bool is_round_ideal(const ProximityLattice& p, const ElementSet& s);
bool is_round_filter(const ProximityLattice& p, const ElementSet& s);
bool is_round(const ProximityLattice& p, const ElementSet& s, RoundKind kind);

/// All round ideals (filters) in canonical order.
///
/// Round subsets are lattice ideals (filters), and in a finite lattice every
/// nonempty join-closed down-set is principal, so the candidates are exactly
/// the principal ideals (filters) and each is passed through the fixpoint
/// condition.
std::vector<ElementSet> round_subsets(const ProximityLattice& p, RoundKind kind);

/// {joins of finite subsets of s}, including the empty join.
ElementSet join_closure(const FiniteLattice& lat, const ElementSet& s);
ElementSet meet_closure(const FiniteLattice& lat, const ElementSet& s);

/// The lattice of round ideals under inclusion, with the way-below relation
/// I << J iff there is d in J with I contained in R^-1[d].
struct RoundIdealLattice {
  std::vector<ElementSet> ideals;
  FiniteLattice lattice;
  Relation way_below;

  std::optional<std::size_t> index_of(const ElementSet& ideal) const;
};

RoundIdealLattice round_ideal_lattice(const ProximityLattice& p);

/// Smallest round ideal containing two round ideals, computed from the
/// generating formula R^-1[{join B : B finite subset of I u J}].
ElementSet round_ideal_join(const ProximityLattice& p, const ElementSet& i, const ElementSet& j);

/// Checks of T : P -> Q, where T relates P's carrier to Q's carrier.
struct MorphismReport {
  // The four conditions making T^-1 a proximity relation from Q to P.
  Check converse_absorbs_source;   // T^-1 ; R = T^-1
  Check target_absorbs_converse;   // S ; T^-1 = T^-1
  Check joins_on_left;             // join A T^-1 b iff every a T^-1 b
  Check meets_on_right;            // a T^-1 meet B iff every a T^-1 b
  // Equivalent characterization: T[a] round ideals, T^-1[b] round filters.
  Check round_images;
  Check join_approximable;  // j-morphism when proximity() holds
  Check meet_approximable;  // m-morphism

  bool by_axioms() const {
    return converse_absorbs_source.holds && target_absorbs_converse.holds && joins_on_left.holds &&
           meets_on_right.holds;
  }
  bool proximity() const { return by_axioms(); }
  bool characterizations_agree() const { return by_axioms() == round_images.holds; }
  bool j() const { return proximity() && join_approximable.holds; }
  bool m() const { return proximity() && meet_approximable.holds; }
};

MorphismReport verify_morphism(const ProximityLattice& src, const ProximityLattice& tgt, const Relation& t);

struct ProximityMorphism {
  Relation relation;
  bool j = false;
  bool m = false;
};

/// Classifies T; throws NotAProximityMorphism with a witness when it is not one.
ProximityMorphism make_morphism(const ProximityLattice& src, const ProximityLattice& tgt, const Relation& t);

/// R^-1, the identity j-morphism. Requires a join-strong proximity lattice.
Relation identity_morphism(const ProximityLattice& p);

/// a F(h) b iff h(a) >= b, a relation from L to M.
Relation functor_F(const FiniteLattice& l, const FiniteLattice& m, const LatticeMap& h);

/// I |-> T[I] between round-ideal lattices (indices as in round_ideal_lattice).
/// Throws NotAJMorphism.
LatticeMap functor_G(const ProximityLattice& src, const ProximityLattice& tgt, const Relation& t);

/// Transposes across F -| G. A j-morphism T : (L, <=) -> (M, S) becomes the
/// homomorphism a |-> T[a] into the round ideals of M.
LatticeMap transpose_to_homomorphism(const FiniteLattice& l, const ProximityLattice& m, const Relation& t);
/// A homomorphism f : L -> Sidl(M) becomes a T_f b iff b in f(a).
Relation transpose_to_morphism(const FiniteLattice& l, const ProximityLattice& m, const LatticeMap& f);

/// (Ridl(P), <<) with the j-isomorphism Phi : P -> Ridl, Psi : Ridl -> P.
struct IncreasingPresentation {
  RoundIdealLattice ideals;
  ProximityLattice increasing;
  Relation phi;
  Relation psi;
};

IncreasingPresentation increasing_presentation(const ProximityLattice& p);

/// True iff phi;psi = R^-1, psi;phi = S^-1 and both are j-morphisms.
bool is_j_isomorphism(const ProximityLattice& p, const ProximityLattice& q, const Relation& phi,
                      const Relation& psi);

enum class MorphismClass { proximity, j, m };

/// Every morphism of the requested class from src to tgt, in canonical
/// order. A proximity morphism is determined by a |-> T[a], which is a round
/// ideal of tgt, so the search runs over those assignments. Returns at most
/// `limit` results.
std::vector<Relation> enumerate_morphisms(const ProximityLattice& src, const ProximityLattice& tgt,
                                          MorphismClass cls, std::size_t limit = 1'000'000);

/// Text for a set of elements, e.g. "{0,a}".
std::string set_text(const FiniteLattice& lat, const ElementSet& s);

}  // namespace proxlat
