#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "proxlat/error.hpp"
#include "proxlat/fixtures.hpp"
#include "proxlat/proximity.hpp"

using namespace proxlat;
namespace fx = proxlat::fixtures;

namespace {

ProximityLattice fixture(std::string_view name) { return *fx::proximity(name); }

std::size_t at(const FiniteLattice& l, std::string_view name) { return *l.index_of(name); }

ElementSet names(const FiniteLattice& l, std::initializer_list<const char*> ns) {
  ElementSet s;
  for (auto n : ns) s.insert(at(l, n));
  return s;
}

/// Relations between carriers of the two lattices: all of them when the
/// grid is small, otherwise a fixed-seed sample.
std::vector<Relation> relation_sweep(std::size_t n, std::size_t m, std::size_t sample = 3000) {
  if (n * m <= 16) return oracle::all_relations(n, m);
  std::mt19937 rng(20240917);
  std::bernoulli_distribution coin(0.5);
  std::vector<Relation> out;
  for (std::size_t k = 0; k < sample; ++k) {
    Relation r(n, m);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < m; ++b)
        if (coin(rng)) r.insert(a, b);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

TEST_CASE("axiom flags of the fixture corpus") {
  struct Row {
    const char* name;
    bool join_strong, meet_strong, increasing, reflexive, distributive;
  };
  const Row table[] = {
      {"C2", true, true, true, true, true},     {"C3", true, true, true, true, true},
      {"B2", true, true, true, true, true},     {"M3", true, true, true, true, false},
      {"FULL2", true, true, false, true, true}, {"C3R", true, true, true, false, true},
  };
  for (const auto& row : table) {
    CAPTURE(row.name);
    auto p = fixture(row.name);
    auto rep = verify_axioms(p.lattice(), p.relation());
    CHECK(rep.proximity_lattice());
    CHECK(rep.join_strong.holds == row.join_strong);
    CHECK(rep.meet_strong.holds == row.meet_strong);
    CHECK(rep.increasing.holds == row.increasing);
    CHECK(rep.reflexive.holds == row.reflexive);
    CHECK(rep.distributive == row.distributive);
  }
  CHECK(verify_axioms(fixture("C3R").lattice(), fixture("C3R").relation()).reflexive.witness == "not a R a");
  CHECK(verify_axioms(fixture("FULL2").lattice(), fixture("FULL2").relation()).increasing.witness ==
        "1 R 0 but not 1 <= 0");
}

TEST_CASE("axiom 1 holds exactly when R;R equals R") {
  for (const auto& [name, p] : corpus::extended()) {
    CAPTURE(name);
    CHECK(compose(p.relation(), p.relation()) == p.relation());
  }
  for (const auto& r : oracle::all_relations(3, 3))
    CHECK(verify_axioms(fx::chain(3), r).axiom1.holds == (oracle::compose(r, r) == r));
}

TEST_CASE("reduced and exhaustive modes agree with the literal axioms on every relation") {
  for (const auto& lat : {fx::chain(2), fx::chain(3), fx::boolean_square()}) {
    CAPTURE(lat.size());
    std::size_t proximity = 0;
    for (const auto& r : oracle::all_relations(lat.size(), lat.size())) {
      auto reduced = verify_axioms(lat, r, QuantifierMode::reduced);
      auto exhaustive = verify_axioms(lat, r, QuantifierMode::exhaustive);
      auto lit = oracle::axioms(lat, r);
      CHECK(reduced.axiom1.holds == lit.a1);
      CHECK(reduced.axiom2.holds == lit.a2);
      CHECK(reduced.axiom3.holds == lit.a3);
      CHECK(exhaustive.axiom2.holds == lit.a2);
      CHECK(exhaustive.axiom3.holds == lit.a3);
      if (!reduced.proximity_lattice()) continue;
      ++proximity;
      CHECK(reduced.join_strong.holds == lit.join_strong);
      CHECK(reduced.meet_strong.holds == lit.meet_strong);
      CHECK(exhaustive.join_strong.holds == lit.join_strong);
      CHECK(exhaustive.meet_strong.holds == lit.meet_strong);
    }
    CHECK(proximity > 0);
  }
}

TEST_CASE("exhaustive mode refuses large carriers") {
  auto big = fx::chain(kExhaustiveLimit + 1);
  CHECK_THROWS_AS(verify_axioms(big, Relation::order(big), QuantifierMode::exhaustive), Error);
}

TEST_CASE("order duality of strongness") {
  auto check = [](const ProximityLattice& p) {
    auto op = opposite(p);
    CHECK(op.flags().meet_strong == p.flags().join_strong);
    CHECK(op.flags().join_strong == p.flags().meet_strong);
    CHECK(opposite(op) == p);
  };
  for (const auto& [name, p] : corpus::extended()) check(p);
  for (const auto& lat : {fx::chain(3), fx::boolean_square()})
    for (const auto& p : oracle::proximity_lattices_on(lat)) check(p);
}

TEST_CASE("not every proximity lattice is join-strong") {
  std::size_t weak = 0;
  for (const auto& p : oracle::proximity_lattices_on(fx::boolean_square()))
    if (!p.flags().join_strong) ++weak;
  CHECK(weak > 0);
}

TEST_CASE("increasing join-strong: reflexive iff R is the order") {
  auto check = [](const ProximityLattice& p) {
    if (!p.flags().increasing || !p.flags().join_strong) return;
    CHECK(p.flags().reflexive == (p.relation() == Relation::order(p.lattice())));
  };
  for (const auto& [name, p] : corpus::extended()) check(p);
  for (const auto& lat : {fx::chain(3), fx::boolean_square()})
    for (const auto& p : oracle::proximity_lattices_on(lat)) check(p);
}

TEST_CASE("relation composition") {
  auto c2 = fixture("C2");
  CHECK(compose(c2.relation(), c2.relation()) == c2.relation());
  auto c3r = fixture("C3R");
  CHECK(compose(c3r.relation(), c3r.relation()) == c3r.relation());
  CHECK(compose(Relation(2, 2), c2.relation()).empty());
  CHECK_THROWS_AS(compose(Relation(2, 3), Relation(2, 2)), Error);
  std::mt19937 rng(7);
  for (int k = 0; k < 200; ++k) {
    Relation r(4, 5), s(5, 3);
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 5; ++b)
        if (rng() % 3 == 0) r.insert(a, b);
    for (std::size_t a = 0; a < 5; ++a)
      for (std::size_t b = 0; b < 3; ++b)
        if (rng() % 3 == 0) s.insert(a, b);
    CHECK(compose(r, s) == oracle::compose(r, s));
  }
}

TEST_CASE("round subsets of small fixtures") {
  auto c2 = fixture("C2");
  const auto& l2 = c2.lattice();
  CHECK(round_subsets(c2, RoundKind::ideal) == std::vector<ElementSet>{names(l2, {"0"}), names(l2, {"0", "1"})});

  auto c3r = fixture("C3R");
  const auto& l3 = c3r.lattice();
  auto ideals = round_subsets(c3r, RoundKind::ideal);
  auto filters = round_subsets(c3r, RoundKind::filter);
  CHECK(ideals.size() == 2);
  CHECK(filters.size() == 2);
  CHECK(std::find(ideals.begin(), ideals.end(), names(l3, {"0"})) != ideals.end());
  CHECK(std::find(ideals.begin(), ideals.end(), ElementSet::full(3)) != ideals.end());
  CHECK(std::find(filters.begin(), filters.end(), names(l3, {"1"})) != filters.end());
  CHECK(std::find(filters.begin(), filters.end(), ElementSet::full(3)) != filters.end());

  CHECK(round_subsets(fixture("FULL2"), RoundKind::ideal) == std::vector<ElementSet>{ElementSet::full(2)});
}

TEST_CASE("round subsets match an all-subsets sweep") {
  for (const auto& [name, p] : corpus::extended()) {
    if (p.size() > 12) continue;
    CAPTURE(name);
    for (auto kind : {RoundKind::ideal, RoundKind::filter}) {
      auto got = round_subsets(p, kind);
      std::sort(got.begin(), got.end());
      CHECK(got == oracle::round_subsets(p, kind));
      for (const auto& s : got) CHECK(is_round(p, s, kind));
    }
  }
  for (const auto& p : oracle::proximity_lattices_on(fx::boolean_square()))
    for (auto kind : {RoundKind::ideal, RoundKind::filter}) {
      auto got = round_subsets(p, kind);
      std::sort(got.begin(), got.end());
      CHECK(got == oracle::round_subsets(p, kind));
    }
}

TEST_CASE("round ideal lattice examples") {
  auto c2 = round_ideal_lattice(fixture("C2"));
  CHECK(c2.ideals.size() == 2);
  CHECK(c2.way_below == Relation::order(c2.lattice));

  auto c3r = round_ideal_lattice(fixture("C3R"));
  REQUIRE(c3r.ideals.size() == 2);
  auto small = *c3r.index_of(ElementSet{0});
  auto full = *c3r.index_of(ElementSet::full(3));
  CHECK(c3r.lattice.leq(small, full));
  CHECK(c3r.way_below.holds(small, full));

  CHECK(round_ideal_lattice(fixture("FULL2")).ideals.size() == 1);
}

TEST_CASE("round ideal lattice operations agree with the generating formula") {
  auto check = [](const ProximityLattice& p) {
    if (p.size() > 16) return;
    auto ril = round_ideal_lattice(p);
    for (std::size_t i = 0; i < ril.ideals.size(); ++i)
      for (std::size_t j = 0; j < ril.ideals.size(); ++j) {
        const auto& a = ril.ideals[i];
        const auto& b = ril.ideals[j];
        CHECK(ril.ideals[ril.lattice.join(i, j)] == round_ideal_join(p, a, b));
        // Meet: largest round ideal inside the intersection.
        auto meet = ril.ideals[ril.lattice.meet(i, j)];
        CHECK(meet.subset_of(a & b));
        for (const auto& k : ril.ideals)
          if (k.subset_of(a & b)) CHECK(k.subset_of(meet));
        bool wb = false;
        for (auto d : b) wb = wb || a.subset_of(p.relation().preimage(d));
        CHECK(ril.way_below.holds(i, j) == wb);
      }
  };
  for (const auto& [name, p] : corpus::extended()) check(p);
  for (const auto& p : oracle::proximity_lattices_on(fx::boolean_square())) check(p);
}

TEST_CASE("morphism examples") {
  auto c3r = fixture("C3R");
  auto id = verify_morphism(c3r, c3r, c3r.relation().converse());
  CHECK(id.proximity());
  CHECK(id.j());
  CHECK(id.m());

  auto c2 = fixture("C2");
  auto ge = c2.relation().converse();
  auto rep = verify_morphism(c2, c2, ge);
  CHECK(rep.proximity());
  CHECK(rep.j());

  auto empty = verify_morphism(c2, c2, Relation(2, 2));
  CHECK_FALSE(empty.proximity());
  CHECK_FALSE(empty.round_images.holds);
  CHECK_THROWS_AS(make_morphism(c2, c2, Relation(2, 2)), Error);

  // R itself is not a morphism on C3R: R[a] = {1} is not an ideal.
  CHECK_FALSE(verify_morphism(c3r, c3r, c3r.relation()).proximity());
}

TEST_CASE("both morphism characterizations agree and match the literal conditions") {
  auto names = fx::proximity_names();
  std::size_t checked = 0, literal = 0;
  for (const auto& sn : names)
    for (const auto& tn : names) {
      auto src = fixture(sn);
      auto tgt = fixture(tn);
      CAPTURE(sn);
      CAPTURE(tn);
      for (const auto& t : relation_sweep(src.size(), tgt.size())) {
        auto rep = verify_morphism(src, tgt, t);
        CHECK(rep.characterizations_agree());
        ++checked;
        if (src.size() * tgt.size() > 12) continue;
        auto lit = oracle::morphism(src, tgt, t);
        CHECK(rep.proximity() == lit.proximity);
        if (lit.proximity) {
          ++literal;
          CHECK(rep.j() == lit.j);
          CHECK(rep.m() == lit.m);
        }
      }
    }
  CHECK(checked > 10000);
  CHECK(literal > 20);
}

TEST_CASE("enumerated morphisms match a filtered brute-force sweep") {
  for (const auto& sn : {"C2", "C3", "B2", "FULL2", "C3R"})
    for (const auto& tn : {"C2", "C3", "C3R", "FULL2"}) {
      auto src = fixture(sn);
      auto tgt = fixture(tn);
      CAPTURE(sn);
      CAPTURE(tn);
      for (auto cls : {MorphismClass::proximity, MorphismClass::j, MorphismClass::m}) {
        std::vector<Relation> brute;
        for (const auto& t : oracle::all_relations(src.size(), tgt.size())) {
          auto rep = verify_morphism(src, tgt, t);
          bool keep = cls == MorphismClass::proximity ? rep.proximity()
                      : cls == MorphismClass::j       ? rep.j()
                                                      : rep.m();
          if (keep) brute.push_back(t);
        }
        auto got = enumerate_morphisms(src, tgt, cls);
        CHECK(got.size() == brute.size());
        for (const auto& t : got) CHECK(std::find(brute.begin(), brute.end(), t) != brute.end());
      }
    }
}

TEST_CASE("identity morphism and identity laws") {
  auto c2 = fixture("C2");
  CHECK(identity_morphism(c2) == c2.relation().converse());
  auto c3r = fixture("C3R");
  auto id = identity_morphism(c3r);
  CHECK(id == c3r.relation().converse());
  CHECK(compose(id, id) == id);

  auto js = {"C2", "C3", "B2", "FULL2", "C3R", "M3"};
  for (const auto& sn : js)
    for (const auto& tn : js) {
      auto src = fixture(sn);
      auto tgt = fixture(tn);
      for (const auto& t : enumerate_morphisms(src, tgt, MorphismClass::j)) {
        CHECK(compose(identity_morphism(src), t) == t);
        CHECK(compose(t, identity_morphism(tgt)) == t);
      }
    }
}

TEST_CASE("j-morphisms compose") {
  auto js = {"C2", "C3R", "B2", "FULL2"};
  std::size_t composites = 0;
  for (const auto& an : js)
    for (const auto& bn : js)
      for (const auto& cn : js) {
        auto a = fixture(an), b = fixture(bn), c = fixture(cn);
        auto ab = enumerate_morphisms(a, b, MorphismClass::j);
        auto bc = enumerate_morphisms(b, c, MorphismClass::j);
        for (const auto& t : ab)
          for (const auto& u : bc) {
            CHECK(verify_morphism(a, c, compose(t, u)).j());
            ++composites;
          }
      }
  CHECK(composites >= 90);
}

TEST_CASE("functor F examples") {
  auto c2 = fx::chain(2);
  auto id = functor_F(c2, c2, identity_map(c2));
  CHECK(id == Relation::order(c2).converse());
  auto c2p = ProximityLattice::with_order(c2);
  CHECK(verify_morphism(c2p, c2p, id).j());
  CHECK_FALSE(verify_morphism(c2p, c2p, functor_F(c2, c2, LatticeMap{{1, 1}})).j());

  auto b2 = fx::boolean_square();
  LatticeMap proj{{at(c2, "0"), at(c2, "1"), at(c2, "0"), at(c2, "1")}};
  CHECK(verify_morphism(ProximityLattice::with_order(b2), c2p, functor_F(b2, c2, proj)).j());
}

TEST_CASE("F(h) is a j-morphism exactly when h is a homomorphism") {
  std::vector<FiniteLattice> ls{fx::chain(2), fx::chain(3), fx::boolean_square(), fx::diamond()};
  for (const auto& l : ls)
    for (const auto& m : ls) {
      auto lp = ProximityLattice::with_order(l);
      auto mp = ProximityLattice::with_order(m);
      for (const auto& h : oracle::all_maps(l.size(), m.size())) {
        auto t = functor_F(l, m, h);
        CHECK(verify_morphism(lp, mp, t).j() == is_homomorphism(l, m, h));
      }
    }
}

TEST_CASE("F is functorial") {
  std::vector<FiniteLattice> ls{fx::chain(2), fx::chain(3), fx::boolean_square(), fx::diamond()};
  auto homs = [](const FiniteLattice& l, const FiniteLattice& m) {
    std::vector<LatticeMap> out;
    for (const auto& h : oracle::all_maps(l.size(), m.size()))
      if (is_homomorphism(l, m, h)) out.push_back(h);
    return out;
  };
  std::size_t pairs = 0;
  for (const auto& a : ls) {
    CHECK(functor_F(a, a, identity_map(a)) == identity_morphism(ProximityLattice::with_order(a)));
    for (const auto& b : ls)
      for (const auto& c : ls)
        for (const auto& h : homs(a, b))
          for (const auto& k : homs(b, c)) {
            CHECK(compose(functor_F(a, b, h), functor_F(b, c, k)) == functor_F(a, c, compose(h, k)));
            ++pairs;
          }
  }
  CHECK(pairs > 20);
}

TEST_CASE("functor G examples") {
  auto c3r = fixture("C3R");
  auto g = functor_G(c3r, c3r, identity_morphism(c3r));
  CHECK(g == identity_map(round_ideal_lattice(c3r).lattice));

  auto c2 = fixture("C2");
  CHECK(functor_G(c2, c2, identity_morphism(c2)) == identity_map(round_ideal_lattice(c2).lattice));

  // The full relation is a proximity morphism but not a j-morphism: the empty
  // join 0 is related to a, yet a is not below the empty join in S.
  CHECK(verify_morphism(c3r, c3r, Relation::full(3, 3)).proximity());
  CHECK_THROWS_AS(functor_G(c3r, c3r, Relation::full(3, 3)), Error);

  CHECK_THROWS_AS(functor_G(c2, c2, Relation(2, 2)), Error);
}

TEST_CASE("functor G is a homomorphism preserving identities on every j-morphism") {
  auto js = {"C2", "C3", "B2", "FULL2", "C3R"};
  for (const auto& sn : js)
    for (const auto& tn : js) {
      auto src = fixture(sn), tgt = fixture(tn);
      auto from = round_ideal_lattice(src), to = round_ideal_lattice(tgt);
      for (const auto& t : enumerate_morphisms(src, tgt, MorphismClass::j))
        CHECK(is_homomorphism(from.lattice, to.lattice, functor_G(src, tgt, t)));
    }
}

TEST_CASE("transposes across the adjunction round-trip") {
  auto c2 = fx::chain(2);
  auto c2p = ProximityLattice::with_order(c2);
  auto unit = transpose_to_homomorphism(c2, c2p, identity_morphism(c2p));
  auto ideals = round_ideal_lattice(c2p);
  for (std::size_t a = 0; a < c2.size(); ++a) CHECK(ideals.ideals[unit(a)] == c2.down(a));

  std::size_t morphisms = 0, homs = 0;
  std::vector<FiniteLattice> ls{fx::chain(2), fx::chain(3), fx::boolean_square()};
  for (const auto& l : ls)
    for (const auto& mn : {"C2", "C3", "B2", "FULL2", "C3R"}) {
      auto m = fixture(mn);
      auto lp = ProximityLattice::with_order(l);
      for (const auto& t : enumerate_morphisms(lp, m, MorphismClass::j)) {
        CHECK(transpose_to_morphism(l, m, transpose_to_homomorphism(l, m, t)) == t);
        ++morphisms;
      }
      auto ril = round_ideal_lattice(m);
      for (const auto& f : oracle::all_maps(l.size(), ril.ideals.size())) {
        if (!is_homomorphism(l, ril.lattice, f)) {
          CHECK_THROWS_AS(transpose_to_morphism(l, m, f), Error);
          continue;
        }
        CHECK(transpose_to_homomorphism(l, m, transpose_to_morphism(l, m, f)) == f);
        ++homs;
      }
    }
  CHECK(morphisms == homs);
  CHECK(morphisms > 20);
}

TEST_CASE("increasing presentation") {
  for (const auto& [name, p] : corpus::extended()) {
    if (!p.flags().join_strong || p.size() > 16) continue;
    CAPTURE(name);
    auto ip = increasing_presentation(p);
    CHECK(ip.increasing.flags().increasing);
    CHECK(ip.increasing.flags().join_strong);
    CHECK(compose(ip.phi, ip.psi) == p.relation().converse());
    CHECK(compose(ip.psi, ip.phi) == ip.ideals.way_below.converse());
    CHECK(is_j_isomorphism(p, ip.increasing, ip.phi, ip.psi));
  }
  auto full = increasing_presentation(fixture("FULL2"));
  CHECK(full.increasing.size() == 1);
  CHECK(compose(full.phi, full.psi) == Relation::full(2, 2));

  auto c2 = increasing_presentation(fixture("C2"));
  CHECK(c2.increasing.flags().reflexive);
  CHECK(c2.increasing.relation() == Relation::order(c2.increasing.lattice()));
  CHECK(find_isomorphism(c2.increasing.lattice(), fx::chain(2)).has_value());

  // On C3R the round ideals {0} < L are way-below each other and themselves.
  auto c3r = increasing_presentation(fixture("C3R"));
  CHECK(c3r.increasing.size() == 2);
  CHECK(c3r.increasing.flags().reflexive);
}

TEST_CASE("set text") {
  auto l = fx::chain(3);
  CHECK(set_text(l, names(l, {"0", "a"})) == "{0,a}");
  CHECK(set_text(l, {}) == "{}");
}
