#include "proxlat/proximity.hpp"

#include <algorithm>

#include "proxlat/error.hpp"

namespace proxlat {

// ---------------------------------------------------------------------------
// Relation

Relation::Relation(std::size_t source_size, std::size_t target_size)
    : source_size_(source_size), target_size_(target_size), rows_(source_size), cols_(target_size) {
  if (source_size > ElementSet::kCapacity || target_size > ElementSet::kCapacity)
    throw Error(ErrorKind::CapacityExceeded, "relation carrier exceeds " +
                                                 std::to_string(ElementSet::kCapacity) + " elements");
}

Relation Relation::from_pairs(std::size_t source_size, std::size_t target_size,
                              std::span<const std::pair<std::size_t, std::size_t>> pairs) {
  Relation r(source_size, target_size);
  for (auto [a, b] : pairs) {
    if (a >= source_size || b >= target_size)
      throw Error(ErrorKind::DimensionMismatch, "relation pair out of range");
    r.insert(a, b);
  }
  return r;
}

Relation Relation::order(const FiniteLattice& lat) {
  Relation r(lat.size(), lat.size());
  for (std::size_t a = 0; a < lat.size(); ++a)
    for (auto b : lat.up(a)) r.insert(a, b);
  return r;
}

Relation Relation::full(std::size_t source_size, std::size_t target_size) {
  Relation r(source_size, target_size);
  for (std::size_t a = 0; a < source_size; ++a)
    for (std::size_t b = 0; b < target_size; ++b) r.insert(a, b);
  return r;
}

void Relation::insert(std::size_t a, std::size_t b) {
  rows_[a].insert(b);
  cols_[b].insert(a);
}

void Relation::erase(std::size_t a, std::size_t b) {
  rows_[a].erase(b);
  cols_[b].erase(a);
}

ElementSet Relation::image(const ElementSet& a) const {
  ElementSet out;
  for (auto x : a) out |= rows_[x];
  return out;
}

ElementSet Relation::preimage(const ElementSet& b) const {
  ElementSet out;
  for (auto y : b) out |= cols_[y];
  return out;
}

Relation Relation::converse() const {
  Relation r;
  r.source_size_ = target_size_;
  r.target_size_ = source_size_;
  r.rows_ = cols_;
  r.cols_ = rows_;
  return r;
}

bool Relation::empty() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const auto& s) { return s.empty(); });
}

std::size_t Relation::pair_count() const {
  std::size_t n = 0;
  for (const auto& s : rows_) n += s.size();
  return n;
}

std::vector<std::pair<std::size_t, std::size_t>> Relation::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < source_size_; ++a)
    for (auto b : rows_[a]) out.emplace_back(a, b);
  return out;
}

Relation compose(const Relation& r, const Relation& s) {
  if (r.target_size() != s.source_size())
    throw Error(ErrorKind::DimensionMismatch, "cannot compose relations: middle carriers have sizes " +
                                                  std::to_string(r.target_size()) + " and " +
                                                  std::to_string(s.source_size()));
  Relation out(r.source_size(), s.target_size());
  for (std::size_t a = 0; a < r.source_size(); ++a)
    for (auto c : s.image(r.image(a))) out.insert(a, c);
  return out;
}

std::string set_text(const FiniteLattice& lat, const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  for (auto a : s) {
    if (!first) out += ",";
    out += lat.name(a);
    first = false;
  }
  return out + "}";
}

ElementSet join_closure(const FiniteLattice& lat, const ElementSet& s) {
  ElementSet closed = s;
  closed.insert(lat.bot());
  std::vector<std::size_t> items(closed.begin(), closed.end());
  for (std::size_t i = 0; i < items.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      auto v = lat.join(items[i], items[j]);
      if (!closed.contains(v)) {
        closed.insert(v);
        items.push_back(v);
      }
    }
  return closed;
}

ElementSet meet_closure(const FiniteLattice& lat, const ElementSet& s) {
  ElementSet closed = s;
  closed.insert(lat.top());
  std::vector<std::size_t> items(closed.begin(), closed.end());
  for (std::size_t i = 0; i < items.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      auto v = lat.meet(items[i], items[j]);
      if (!closed.contains(v)) {
        closed.insert(v);
        items.push_back(v);
      }
    }
  return closed;
}

// ---------------------------------------------------------------------------
// Axioms

namespace {

/// Subsets of size 0, 1 and 2 of {0..n-1}, in lexicographic order.
std::vector<ElementSet> small_subsets(std::size_t n) {
  std::vector<ElementSet> out{ElementSet{}};
  for (std::size_t a = 0; a < n; ++a) {
    out.push_back(ElementSet::singleton(a));
    for (std::size_t b = a + 1; b < n; ++b) out.push_back(ElementSet{a, b});
  }
  return out;
}

std::vector<ElementSet> all_subsets(std::size_t n) {
  if (n > kExhaustiveLimit)
    throw Error(ErrorKind::CapacityExceeded,
                "exhaustive quantifier mode supports carriers up to " + std::to_string(kExhaustiveLimit));
  std::vector<ElementSet> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    ElementSet s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) s.insert(i);
    out.push_back(s);
  }
  return out;
}

std::vector<ElementSet> quantifier_sets(std::size_t n, QuantifierMode mode) {
  return mode == QuantifierMode::reduced ? small_subsets(n) : all_subsets(n);
}

ElementSet intersect_rows(const Relation& r, const ElementSet& a, std::size_t target_size) {
  auto acc = ElementSet::full(target_size);
  for (auto x : a) acc &= r.image(x);
  return acc;
}

ElementSet intersect_cols(const Relation& r, const ElementSet& b, std::size_t source_size) {
  auto acc = ElementSet::full(source_size);
  for (auto y : b) acc &= r.preimage(y);
  return acc;
}

void check_equal_relations(Check& check, const FiniteLattice& src, const FiniteLattice& tgt,
                           const Relation& expected, const Relation& actual, const std::string& label) {
  for (std::size_t a = 0; a < expected.source_size() && check.holds; ++a) {
    auto diff = (expected.image(a) - actual.image(a)) | (actual.image(a) - expected.image(a));
    if (auto b = diff.first()) {
      bool in_expected = expected.holds(a, *b);
      check.fail(label + " differs at (" + src.name(a) + ", " + tgt.name(*b) + "): pair " +
                 (in_expected ? "missing from" : "extra in") + " the composite");
    }
  }
}

}  // namespace

AxiomReport verify_axioms(const FiniteLattice& lat, const Relation& r, QuantifierMode mode) {
  const auto n = lat.size();
  if (r.source_size() != n || r.target_size() != n)
    throw Error(ErrorKind::DimensionMismatch, "relation does not live on the lattice carrier");

  AxiomReport rep;
  rep.distributive = is_distributive(lat);

  check_equal_relations(rep.axiom1, lat, lat, r, compose(r, r), "R;R = R");

  const auto all = ElementSet::full(n);
  const auto sets = quantifier_sets(n, mode);

  // Axiom 2: R[join A] = intersection of R[a], a in A.
  for (const auto& a : sets) {
    auto lhs = r.image(lat.join_of(a));
    auto rhs = intersect_rows(r, a, n);
    if (lhs != rhs) {
      auto b = *((lhs - rhs) | (rhs - lhs)).first();
      rep.axiom2.fail("A=" + set_text(lat, a) + ", b=" + lat.name(b) + ": join(A) R b is " +
                      (lhs.contains(b) ? "true" : "false") + " but every a R b is " +
                      (rhs.contains(b) ? "true" : "false"));
      break;
    }
  }
  // Axiom 3: R^-1[meet B] = intersection of R^-1[b], b in B.
  for (const auto& b : sets) {
    auto lhs = r.preimage(lat.meet_of(b));
    auto rhs = intersect_cols(r, b, n);
    if (lhs != rhs) {
      auto a = *((lhs - rhs) | (rhs - lhs)).first();
      rep.axiom3.fail("B=" + set_text(lat, b) + ", a=" + lat.name(a) + ": a R meet(B) is " +
                      (lhs.contains(a) ? "true" : "false") + " but every a R b is " +
                      (rhs.contains(a) ? "true" : "false"));
      break;
    }
  }
  // Axiom 4: a R join B implies a R join B' for some finite B' within R^-1[B].
  // The joins of finite subsets of R^-1[B] are exactly its join closure.
  for (const auto& b : sets) {
    auto reachable = join_closure(lat, r.preimage(b));
    for (auto a : r.preimage(lat.join_of(b))) {
      if (!r.image(a).intersects(reachable)) {
        rep.join_strong.fail("B=" + set_text(lat, b) + ", a=" + lat.name(a) +
                             ": a R join(B) but a R join(B') fails for every finite B' within R^-1[B]");
        break;
      }
    }
    if (!rep.join_strong) break;
  }
  // Axiom 5: meet A R b implies meet A' R b for some finite A' within R[A].
  for (const auto& a : sets) {
    auto reachable = meet_closure(lat, r.image(a));
    for (auto b : r.image(lat.meet_of(a))) {
      if (!r.preimage(b).intersects(reachable)) {
        rep.meet_strong.fail("A=" + set_text(lat, a) + ", b=" + lat.name(b) +
                             ": meet(A) R b but meet(A') R b fails for every finite A' within R[A]");
        break;
      }
    }
    if (!rep.meet_strong) break;
  }

  for (std::size_t a = 0; a < n && rep.increasing; ++a)
    if (auto b = (r.image(a) - lat.up(a)).first())
      rep.increasing.fail(lat.name(a) + " R " + lat.name(*b) + " but not " + lat.name(a) + " <= " +
                          lat.name(*b));
  for (std::size_t a = 0; a < n; ++a)
    if (!r.holds(a, a)) {
      rep.reflexive.fail("not " + lat.name(a) + " R " + lat.name(a));
      break;
    }
  (void)all;
  return rep;
}

ProximityLattice ProximityLattice::make(FiniteLattice lat, Relation r) {
  auto rep = verify_axioms(lat, r);
  if (!rep.axiom1) throw Error(ErrorKind::NotAProximityLattice, "axiom 1: " + rep.axiom1.witness);
  if (!rep.axiom2) throw Error(ErrorKind::NotAProximityLattice, "axiom 2: " + rep.axiom2.witness);
  if (!rep.axiom3) throw Error(ErrorKind::NotAProximityLattice, "axiom 3: " + rep.axiom3.witness);
  ProximityLattice p;
  p.lattice_ = std::move(lat);
  p.relation_ = std::move(r);
  p.flags_ = {true,
              rep.join_strong.holds,
              rep.meet_strong.holds,
              rep.increasing.holds,
              rep.reflexive.holds,
              rep.distributive};
  return p;
}

ProximityLattice ProximityLattice::with_order(FiniteLattice lat) {
  auto r = Relation::order(lat);
  return make(std::move(lat), std::move(r));
}

ProximityLattice opposite(const ProximityLattice& p) {
  return ProximityLattice::make(opposite(p.lattice()), p.relation().converse());
}

// ---------------------------------------------------------------------------
// Round ideals and filters

bool is_round_ideal(const ProximityLattice& p, const ElementSet& s) {
  if (s.empty()) return false;
  if (p.relation().preimage(s) != s) return false;
  return join_closure(p.lattice(), s) == s;
}

bool is_round_filter(const ProximityLattice& p, const ElementSet& s) {
  if (s.empty()) return false;
  if (p.relation().image(s) != s) return false;
  return meet_closure(p.lattice(), s) == s;
}

bool is_round(const ProximityLattice& p, const ElementSet& s, RoundKind kind) {
  return kind == RoundKind::ideal ? is_round_ideal(p, s) : is_round_filter(p, s);
}

std::vector<ElementSet> round_subsets(const ProximityLattice& p, RoundKind kind) {
  std::vector<ElementSet> out;
  for (std::size_t m = 0; m < p.size(); ++m) {
    const auto& candidate = kind == RoundKind::ideal ? p.lattice().down(m) : p.lattice().up(m);
    if (is_round(p, candidate, kind)) out.push_back(candidate);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::size_t> RoundIdealLattice::index_of(const ElementSet& ideal) const {
  auto it = std::lower_bound(ideals.begin(), ideals.end(), ideal);
  if (it == ideals.end() || *it != ideal) return std::nullopt;
  return static_cast<std::size_t>(it - ideals.begin());
}

RoundIdealLattice round_ideal_lattice(const ProximityLattice& p) {
  RoundIdealLattice out;
  out.ideals = round_subsets(p, RoundKind::ideal);
  std::vector<std::string> names;
  for (const auto& i : out.ideals) names.push_back(set_text(p.lattice(), i));
  out.lattice = lattice_from_sets(out.ideals, std::move(names));
  const auto k = out.ideals.size();
  out.way_below = Relation(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (auto d : out.ideals[j])
        if (out.ideals[i].subset_of(p.relation().preimage(d))) {
          out.way_below.insert(i, j);
          break;
        }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      auto joined = round_ideal_join(p, out.ideals[i], out.ideals[j]);
      ensure(out.ideals[out.lattice.join(i, j)] == joined,
             "round ideal join agrees with the generating formula");
    }
  return out;
}

ElementSet round_ideal_join(const ProximityLattice& p, const ElementSet& i, const ElementSet& j) {
  return p.relation().preimage(join_closure(p.lattice(), i | j));
}

// ---------------------------------------------------------------------------
// Morphisms

MorphismReport verify_morphism(const ProximityLattice& src, const ProximityLattice& tgt, const Relation& t) {
  const auto& l = src.lattice();
  const auto& m = tgt.lattice();
  if (t.source_size() != l.size() || t.target_size() != m.size())
    throw Error(ErrorKind::DimensionMismatch, "morphism relation does not match the carriers");
  const auto& r = src.relation();
  const auto& s = tgt.relation();
  const auto g = t.converse();  // from M to L

  MorphismReport rep;
  check_equal_relations(rep.converse_absorbs_source, m, l, g, compose(g, r), "T^-1;R = T^-1");
  check_equal_relations(rep.target_absorbs_converse, m, l, g, compose(s, g), "S;T^-1 = T^-1");

  const auto m_sets = small_subsets(m.size());
  const auto l_sets = small_subsets(l.size());

  // join A T^-1 b iff every a T^-1 b, i.e. T^-1[join A] is the intersection.
  for (const auto& a : m_sets) {
    auto lhs = t.preimage(m.join_of(a));
    auto rhs = intersect_cols(t, a, l.size());
    if (lhs != rhs) {
      auto b = *((lhs - rhs) | (rhs - lhs)).first();
      rep.joins_on_left.fail("A=" + set_text(m, a) + ", b=" + l.name(b) + ": b T join(A) is " +
                             (lhs.contains(b) ? "true" : "false") + " but every b T a is " +
                             (rhs.contains(b) ? "true" : "false"));
      break;
    }
  }
  for (const auto& b : l_sets) {
    auto lhs = t.image(l.meet_of(b));
    auto rhs = intersect_rows(t, b, m.size());
    if (lhs != rhs) {
      auto a = *((lhs - rhs) | (rhs - lhs)).first();
      rep.meets_on_right.fail("B=" + set_text(l, b) + ", a=" + m.name(a) + ": meet(B) T a is " +
                              (lhs.contains(a) ? "true" : "false") + " but every b T a is " +
                              (rhs.contains(a) ? "true" : "false"));
      break;
    }
  }

  for (std::size_t a = 0; a < l.size() && rep.round_images; ++a)
    if (!is_round_ideal(tgt, t.image(a)))
      rep.round_images.fail("T[" + l.name(a) + "] = " + set_text(m, t.image(a)) + " is not a round ideal");
  for (std::size_t b = 0; b < m.size() && rep.round_images; ++b)
    if (!is_round_filter(src, t.preimage(b)))
      rep.round_images.fail("T^-1[" + m.name(b) + "] = " + set_text(l, t.preimage(b)) +
                            " is not a round filter");

  // join B T a implies a S join A for some finite A within T[B].
  for (const auto& b : l_sets) {
    auto reachable = join_closure(m, t.image(b));
    for (auto a : t.image(l.join_of(b)))
      if (!s.image(a).intersects(reachable)) {
        rep.join_approximable.fail("B=" + set_text(l, b) + ", a=" + m.name(a) +
                                   ": join(B) T a but a S join(A) fails for every finite A within T[B]");
        break;
      }
    if (!rep.join_approximable) break;
  }
  // b T meet A implies meet B R b for some finite B within T^-1[A].
  for (const auto& a : m_sets) {
    auto reachable = meet_closure(l, t.preimage(a));
    for (auto b : t.preimage(m.meet_of(a)))
      if (!r.preimage(b).intersects(reachable)) {
        rep.meet_approximable.fail("A=" + set_text(m, a) + ", b=" + l.name(b) +
                                   ": b T meet(A) but meet(B) R b fails for every finite B within T^-1[A]");
        break;
      }
    if (!rep.meet_approximable) break;
  }
  return rep;
}

ProximityMorphism make_morphism(const ProximityLattice& src, const ProximityLattice& tgt, const Relation& t) {
  auto rep = verify_morphism(src, tgt, t);
  if (!rep.proximity()) {
    for (const auto* c : {&rep.converse_absorbs_source, &rep.target_absorbs_converse, &rep.joins_on_left,
                          &rep.meets_on_right})
      if (!c->holds) throw Error(ErrorKind::NotAProximityMorphism, c->witness);
  }
  return {t, rep.j(), rep.m()};
}

Relation identity_morphism(const ProximityLattice& p) {
  if (!p.flags().join_strong) throw Error(ErrorKind::NotJoinStrong, "identity j-morphism needs join-strongness");
  return p.relation().converse();
}

Relation functor_F(const FiniteLattice& l, const FiniteLattice& m, const LatticeMap& h) {
  if (h.size() != l.size()) throw Error(ErrorKind::DimensionMismatch, "map is not total on the source");
  Relation out(l.size(), m.size());
  for (std::size_t a = 0; a < l.size(); ++a) {
    if (h(a) >= m.size()) throw Error(ErrorKind::DimensionMismatch, "map value out of range");
    for (auto b : m.down(h(a))) out.insert(a, b);
  }
  return out;
}

LatticeMap functor_G(const ProximityLattice& src, const ProximityLattice& tgt, const Relation& t) {
  auto rep = verify_morphism(src, tgt, t);
  if (!rep.j())
    throw Error(ErrorKind::NotAJMorphism,
                rep.proximity() ? rep.join_approximable.witness : "not a proximity morphism");
  auto from = round_ideal_lattice(src);
  auto to = round_ideal_lattice(tgt);
  LatticeMap out;
  for (const auto& ideal : from.ideals) {
    auto image = to.index_of(t.image(ideal));
    ensure(image.has_value(), "T[I] is a round ideal");
    out.table.push_back(*image);
  }
  ensure(is_homomorphism(from.lattice, to.lattice, out), "G(T) is a lattice homomorphism");
  return out;
}

LatticeMap transpose_to_homomorphism(const FiniteLattice& l, const ProximityLattice& m, const Relation& t) {
  auto src = ProximityLattice::with_order(l);
  auto rep = verify_morphism(src, m, t);
  if (!rep.j())
    throw Error(ErrorKind::NotAJMorphism,
                rep.proximity() ? rep.join_approximable.witness : "not a proximity morphism");
  auto ideals = round_ideal_lattice(m);
  LatticeMap f;
  for (std::size_t a = 0; a < l.size(); ++a) {
    auto idx = ideals.index_of(t.image(a));
    ensure(idx.has_value(), "T[a] is a round ideal");
    f.table.push_back(*idx);
  }
  ensure(is_homomorphism(l, ideals.lattice, f), "transpose of a j-morphism is a homomorphism");
  return f;
}

Relation transpose_to_morphism(const FiniteLattice& l, const ProximityLattice& m, const LatticeMap& f) {
  auto ideals = round_ideal_lattice(m);
  if (f.size() != l.size()) throw Error(ErrorKind::DimensionMismatch, "map is not total on the source");
  for (auto v : f.table)
    if (v >= ideals.ideals.size()) throw Error(ErrorKind::DimensionMismatch, "map value is not a round ideal");
  if (!is_homomorphism(l, ideals.lattice, f))
    throw Error(ErrorKind::NotAHomomorphism, "map into the round ideals is not a lattice homomorphism");
  Relation t(l.size(), m.size());
  for (std::size_t a = 0; a < l.size(); ++a)
    for (auto b : ideals.ideals[f(a)]) t.insert(a, b);
  ensure(verify_morphism(ProximityLattice::with_order(l), m, t).j(), "transpose of a homomorphism is a j-morphism");
  return t;
}

bool is_j_isomorphism(const ProximityLattice& p, const ProximityLattice& q, const Relation& phi,
                      const Relation& psi) {
  if (phi.source_size() != p.size() || phi.target_size() != q.size()) return false;
  if (psi.source_size() != q.size() || psi.target_size() != p.size()) return false;
  if (compose(phi, psi) != p.relation().converse()) return false;
  if (compose(psi, phi) != q.relation().converse()) return false;
  return verify_morphism(p, q, phi).j() && verify_morphism(q, p, psi).j();
}

IncreasingPresentation increasing_presentation(const ProximityLattice& p) {
  if (!p.flags().join_strong)
    throw Error(ErrorKind::NotJoinStrong, "increasing presentation needs join-strongness");
  IncreasingPresentation out;
  out.ideals = round_ideal_lattice(p);
  out.increasing = ProximityLattice::make(out.ideals.lattice, out.ideals.way_below);
  const auto n = p.size();
  const auto k = out.ideals.ideals.size();
  out.phi = Relation(n, k);
  out.psi = Relation(k, n);
  for (std::size_t a = 0; a < n; ++a) {
    auto below_a = out.ideals.index_of(p.relation().preimage(a));
    ensure(below_a.has_value(), "R^-1[a] is a round ideal");
    for (std::size_t i = 0; i < k; ++i)
      if (out.ideals.way_below.holds(i, *below_a)) out.phi.insert(a, i);
  }
  for (std::size_t i = 0; i < k; ++i)
    for (auto a : out.ideals.ideals[i]) out.psi.insert(i, a);

  ensure(out.increasing.flags().increasing, "way-below is increasing");
  ensure(out.increasing.flags().join_strong, "(Ridl, <<) is join-strong");
  ensure(compose(out.phi, out.psi) == p.relation().converse(), "Phi;Psi = R^-1");
  ensure(compose(out.psi, out.phi) == out.ideals.way_below.converse(), "Psi;Phi = <<^-1");
  ensure(verify_morphism(p, out.increasing, out.phi).j(), "Phi is a j-morphism");
  ensure(verify_morphism(out.increasing, p, out.psi).j(), "Psi is a j-morphism");
  return out;
}

namespace {

class MorphismEnumerator {
 public:
  MorphismEnumerator(const ProximityLattice& src, const ProximityLattice& tgt, MorphismClass cls,
                     std::size_t limit)
      : src_(src), tgt_(tgt), cls_(cls), limit_(limit), ideals_(round_subsets(tgt, RoundKind::ideal)),
        choice_(src.size(), 0) {}

  std::vector<Relation> run() {
    if (!ideals_.empty()) descend(0);
    return std::move(out_);
  }

 private:
  void descend(std::size_t a) {
    if (out_.size() >= limit_) return;
    if (a == src_.size()) {
      Relation t(src_.size(), tgt_.size());
      for (std::size_t x = 0; x < src_.size(); ++x)
        for (auto b : ideals_[choice_[x]]) t.insert(x, b);
      auto rep = verify_morphism(src_, tgt_, t);
      bool keep = rep.proximity() && (cls_ == MorphismClass::proximity ||
                                      (cls_ == MorphismClass::j && rep.j()) ||
                                      (cls_ == MorphismClass::m && rep.m()));
      if (keep) out_.push_back(std::move(t));
      return;
    }
    const auto& l = src_.lattice();
    for (std::size_t k = 0; k < ideals_.size(); ++k) {
      choice_[a] = k;
      bool ok = true;
      // T[.] is monotone and turns meets into intersections.
      for (std::size_t x = 0; x < a && ok; ++x) {
        const auto& ix = ideals_[choice_[x]];
        const auto& ia = ideals_[k];
        if (l.leq(x, a) && !ix.subset_of(ia)) ok = false;
        if (l.leq(a, x) && !ia.subset_of(ix)) ok = false;
        auto mt = l.meet(x, a);
        if (ok && mt <= a && ideals_[choice_[mt]] != (ix & ia)) ok = false;
      }
      if (ok) descend(a + 1);
    }
  }

  const ProximityLattice& src_;
  const ProximityLattice& tgt_;
  MorphismClass cls_;
  std::size_t limit_;
  std::vector<ElementSet> ideals_;
  std::vector<std::size_t> choice_;
  std::vector<Relation> out_;
};

}  // namespace

std::vector<Relation> enumerate_morphisms(const ProximityLattice& src, const ProximityLattice& tgt,
                                          MorphismClass cls, std::size_t limit) {
  return MorphismEnumerator(src, tgt, cls, limit).run();
}

}  // namespace proxlat
