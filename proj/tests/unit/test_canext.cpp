#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "proxlat/canext.hpp"
#include "proxlat/error.hpp"
#include "proxlat/fixtures.hpp"

using namespace proxlat;
namespace fx = proxlat::fixtures;

namespace {

ProximityLattice fixture(std::string_view name) { return *fx::proximity(name); }

std::size_t at(const FiniteLattice& l, std::string_view name) { return *l.index_of(name); }

std::vector<Polarity> polarities() {
  std::vector<Polarity> out;
  for (const auto& [name, p] : corpus::extended()) {
    if (!p.flags().join_strong) continue;
    out.push_back(round_polarity(p));
  }
  std::mt19937 rng(31);
  for (std::size_t k = 0; k < 20; ++k) {
    // Mix of sizes; the wide ones go through the intersection branch.
    std::size_t nx = k % 2 == 0 ? 4 + k % 5 : kSubsetSweepLimit + 2, ny = 3 + k % 4;
    Relation z(nx, ny);
    for (std::size_t x = 0; x < nx; ++x)
      for (std::size_t y = 0; y < ny; ++y)
        if (rng() % 2 == 0) z.insert(x, y);
    out.push_back({z});
  }
  out.push_back({Relation(3, 0)});
  out.push_back({Relation(0, 2)});
  return out;
}

/// Ideals as X, filters as Y, opposite of the concept lattice, k(a) = g(R[a]).
struct ExplicitSigma {
  FiniteLattice lattice;
  LatticeMap embed;
};

ExplicitSigma explicit_sigma(const ProximityLattice& p) {
  auto ideals = round_subsets(p, RoundKind::ideal);
  auto filters = round_subsets(p, RoundKind::filter);
  Relation z(ideals.size(), filters.size());
  for (std::size_t i = 0; i < ideals.size(); ++i)
    for (std::size_t f = 0; f < filters.size(); ++f)
      if (ideals[i].intersects(filters[f])) z.insert(i, f);
  auto cl = concept_lattice(Polarity{z});
  ExplicitSigma out{opposite(cl.lattice), {}};
  for (std::size_t a = 0; a < p.size(); ++a) {
    auto it = std::find(filters.begin(), filters.end(), p.relation().image(a));
    REQUIRE(it != filters.end());
    out.embed.table.push_back(cl.g(static_cast<std::size_t>(it - filters.begin())));
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> embed_pins(const LatticeMap& from, const LatticeMap& to) {
  std::vector<std::pair<std::size_t, std::size_t>> pins;
  for (std::size_t a = 0; a < from.size(); ++a) pins.emplace_back(from(a), to(a));
  return pins;
}

}  // namespace

TEST_CASE("Galois maps on empty sets") {
  for (const auto& p : polarities()) {
    CHECK(galois_l(p, {}) == ElementSet::full(p.y_size()));
    CHECK(galois_r(p, {}) == ElementSet::full(p.x_size()));
  }
}

TEST_CASE("Galois closure examples") {
  auto full = round_polarity(fixture("FULL2"));
  CHECK(full.x_size() == 1);
  CHECK(galois_closure(full, {}) == ElementSet{0});

  auto c3r = fixture("C3R");
  auto pol = round_polarity(c3r);
  auto filters = round_subsets(c3r, RoundKind::filter);
  auto top_filter = static_cast<std::size_t>(
      std::find(filters.begin(), filters.end(), ElementSet{at(c3r.lattice(), "1")}) - filters.begin());
  CHECK(galois_closure(pol, ElementSet{top_filter}) == ElementSet::full(pol.x_size()));
}

TEST_CASE("closure is a closure operator and matches the pairwise definition") {
  for (const auto& p : polarities()) {
    if (p.x_size() > 14) continue;
    auto subs = oracle::subsets(p.x_size());
    for (const auto& u : subs) {
      auto c = galois_closure(p, u);
      CHECK(c == oracle::closure(p, u));
      CHECK(u.subset_of(c));
      CHECK(galois_closure(p, c) == c);
    }
    for (std::size_t k = 0; k + 1 < subs.size() && k < 64; ++k) {
      auto u = subs[k] & subs[k + 1];
      CHECK(galois_closure(p, u).subset_of(galois_closure(p, subs[k])));
    }
  }
}

TEST_CASE("concept lattice matches the closed-set oracle") {
  for (const auto& p : polarities()) {
    CAPTURE(p.x_size());
    auto cl = concept_lattice(p);
    auto expect = oracle::closed_sets(p);
    CHECK(cl.closed == expect);
    for (std::size_t x = 0; x < p.x_size(); ++x) CHECK(cl.closed[cl.f(x)] == oracle::closure(p, ElementSet{x}));
    for (std::size_t y = 0; y < p.y_size(); ++y) CHECK(cl.closed[cl.g(y)] == galois_r(p, ElementSet{y}));
    for (std::size_t x = 0; x < p.x_size(); ++x)
      for (std::size_t y = 0; y < p.y_size(); ++y) CHECK(cl.lattice.leq(cl.f(x), cl.g(y)) == p.z.holds(x, y));
  }
}

TEST_CASE("concept lattice is the MacNeille completion of the polarity preorder") {
  for (const auto& p : polarities()) CHECK(matches_macneille(p, concept_lattice(p)));
}

TEST_CASE("concept lattice of small polarities") {
  CHECK(concept_lattice(round_polarity(fixture("FULL2"))).lattice.size() == 1);
  auto c3r = concept_lattice(round_polarity(fixture("C3R")));
  CHECK(find_isomorphism(c3r.lattice, fx::chain(2)).has_value());
  auto c2 = concept_lattice(round_polarity(fixture("C2")));
  CHECK(find_isomorphism(c2.lattice, fx::chain(2)).has_value());
}

TEST_CASE("pi-extension examples") {
  auto c2 = pi_extension(fixture("C2"));
  CHECK(find_isomorphism(c2.lattice, fx::chain(2)).has_value());
  CHECK(c2.embed(0) != c2.embed(1));

  auto full = pi_extension(fixture("FULL2"));
  CHECK(full.lattice.size() == 1);
  CHECK(full.embed(0) == full.embed(1));

  auto p = fixture("C3R");
  auto c3r = pi_extension(p);
  const auto& l = p.lattice();
  CHECK(c3r.lattice.size() == 2);
  CHECK(c3r.embed(at(l, "0")) == c3r.lattice.bot());
  CHECK(c3r.embed(at(l, "a")) == c3r.lattice.bot());
  CHECK(c3r.embed(at(l, "1")) == c3r.lattice.top());
}

TEST_CASE("pi embedding sends a to the filters containing it") {
  for (const auto& [name, p] : corpus::extended()) {
    if (!p.flags().join_strong) continue;
    CAPTURE(name);
    auto e = pi_extension(p);
    REQUIRE_FALSE(e.closed_sets.empty());
    for (std::size_t a = 0; a < p.size(); ++a) {
      ElementSet expect;
      for (std::size_t f = 0; f < e.filters.size(); ++f)
        if (e.filters[f].contains(a)) expect.insert(f);
      CHECK(e.closed_sets[e.embed(a)] == expect);
    }
    CHECK(is_homomorphism(p.lattice(), e.lattice, e.embed));
  }
}

TEST_CASE("sigma-extension examples") {
  auto c2p = fixture("C2");
  auto c2 = sigma_extension(c2p);
  CHECK(find_isomorphism(c2.lattice, fx::chain(2)).has_value());
  auto pi = pi_extension(c2p);
  CHECK(find_isomorphism(c2.lattice, pi.lattice, embed_pins(c2.embed, pi.embed)).has_value());

  auto p = fixture("C3R");
  auto k = sigma_extension(p);
  const auto& l = p.lattice();
  CHECK(k.lattice.size() == 2);
  CHECK(k.embed(at(l, "0")) == k.lattice.bot());
  CHECK(k.embed(at(l, "a")) == k.lattice.top());
  CHECK(k.embed(at(l, "1")) == k.lattice.top());

  auto full = sigma_extension(fixture("FULL2"));
  CHECK(full.lattice.size() == 1);
}

TEST_CASE("sigma via the opposite agrees with the explicit ideal-filter polarity") {
  auto check = [](const ProximityLattice& p) {
    if (!p.flags().meet_strong) return;
    auto k = sigma_extension(p);
    auto ex = explicit_sigma(p);
    CHECK(find_isomorphism(k.lattice, ex.lattice, embed_pins(k.embed, ex.embed)).has_value());
  };
  for (const auto& [name, p] : corpus::extended()) {
    CAPTURE(name);
    check(p);
  }
  for (const auto& p : oracle::proximity_lattices_on(fx::boolean_square())) check(p);
}

TEST_CASE("verify_extension on fixtures") {
  auto c3r = verify_extension(pi_extension(fixture("C3R")));
  CHECK(c3r.dense.holds);
  CHECK(c3r.compact.holds);
  CHECK(c3r.join_preserving.holds);
  CHECK_FALSE(c3r.meet_preserving.holds);
  CHECK(c3r.meet_preserving.witness.find("a") != std::string::npos);
  CHECK(c3r.valid());

  auto c2 = verify_extension(pi_extension(fixture("C2")));
  CHECK(c2.dense.holds);
  CHECK(c2.compact.holds);
  CHECK(c2.join_preserving.holds);
  CHECK(c2.meet_preserving.holds);
}

TEST_CASE("a hand-built embedding with h(a) at the top is not a pi-extension") {
  auto p = fixture("C3R");
  auto bad = make_extension(ExtensionKind::pi, p, fx::chain(2), LatticeMap{{0, 1, 1}});
  auto rep = verify_extension(bad);
  CHECK_FALSE(rep.join_preserving.holds);
  CHECK_FALSE(rep.join_preserving.witness.empty());
  CHECK_FALSE(rep.valid());
}

TEST_CASE("canonical extensions exist on every strong corpus member") {
  auto check = [](const ProximityLattice& p) {
    if (p.flags().join_strong) {
      auto e = pi_extension(p);
      auto rep = verify_extension(e);
      CHECK(rep.valid_pi());
      CHECK(rep.homomorphism.holds);
      CHECK(rep.element_tables.holds);
      if (rep.compact_subsets_checked) CHECK(rep.compact_subsets.holds == rep.compact.holds);
      for (std::size_t f = 0; f < e.filters.size(); ++f) {
        ElementSet image;
        for (auto a : e.filters[f]) image.insert(e.embed(a));
        CHECK(e.filter_element(f) == e.lattice.meet_of(image));
      }
      for (std::size_t i = 0; i < e.ideals.size(); ++i) {
        ElementSet image;
        for (auto a : e.ideals[i]) image.insert(e.embed(a));
        CHECK(e.ideal_element(i) == e.lattice.join_of(image));
      }
    } else {
      CHECK_THROWS_AS(pi_extension(p), Error);
    }
    if (p.flags().meet_strong) {
      auto rep = verify_extension(sigma_extension(p));
      CHECK(rep.valid_sigma());
      CHECK(rep.element_tables.holds);
    } else {
      CHECK_THROWS_AS(sigma_extension(p), Error);
    }
  };
  for (const auto& [name, p] : corpus::extended()) {
    CAPTURE(name);
    check(p);
  }
  for (const auto& p : oracle::proximity_lattices_on(fx::chain(3))) check(p);
  for (const auto& p : oracle::proximity_lattices_on(fx::boolean_square())) check(p);
}

TEST_CASE("for the lattice order the pi-extension is the lattice itself") {
  for (const auto& name : {"C2", "C3", "B2", "M3"}) {
    auto p = fixture(name);
    auto e = pi_extension(p);
    CHECK(find_isomorphism(p.lattice(), e.lattice, embed_pins(identity_map(p.lattice()), e.embed)).has_value());
  }
}

TEST_CASE("uniqueness of the pi-extension") {
  for (const auto& [name, p] : corpus::extended()) {
    if (!p.flags().join_strong) continue;
    CAPTURE(name);
    auto e = pi_extension(p);
    auto self = check_uniqueness(e, e);
    REQUIRE(self.has_value());
    CHECK(*self == identity_map(e.lattice));
    CHECK(check_uniqueness(e, pi_extension_via_macneille(p)).has_value());
  }
}

TEST_CASE("uniqueness rejects a sigma-extension posing as a pi-extension") {
  auto p = fixture("C3R");
  auto pi = pi_extension(p);
  auto sigma = sigma_extension(p);
  try {
    check_uniqueness(pi, sigma);
    FAIL("expected KindMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::KindMismatch);
  }
  sigma.kind = ExtensionKind::pi;
  try {
    check_uniqueness(pi, sigma);
    FAIL("expected PreconditionFailed");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PreconditionFailed);
  }
}

TEST_CASE("pi and sigma coincide exactly on reflexive relations") {
  auto c2 = pi_sigma_comparison(fixture("C2"));
  CHECK(c2.reflexive);
  CHECK(c2.phi.has_value());

  auto c3r = pi_sigma_comparison(fixture("C3R"));
  CHECK_FALSE(c3r.reflexive);
  CHECK_FALSE(c3r.phi.has_value());
  CHECK(c3r.witness.find("h(a) is bottom but k(a) is top") != std::string::npos);

  auto full = pi_sigma_comparison(fixture("FULL2"));
  CHECK(full.reflexive);
  CHECK(full.phi.has_value());

  std::size_t reflexive = 0, not_reflexive = 0;
  auto check = [&](const ProximityLattice& p) {
    if (!p.doubly_strong()) {
      CHECK_THROWS_AS(pi_sigma_comparison(p), Error);
      return;
    }
    auto rep = pi_sigma_comparison(p);
    CHECK(rep.agrees());
    (rep.reflexive ? reflexive : not_reflexive)++;
  };
  for (const auto& [name, p] : corpus::extended()) check(p);
  for (const auto& p : oracle::proximity_lattices_on(fx::chain(3))) check(p);
  for (const auto& p : oracle::proximity_lattices_on(fx::boolean_square())) check(p);
  CHECK(reflexive > 0);
  CHECK(not_reflexive > 0);
}

TEST_CASE("extension kind names") {
  CHECK(to_string(ExtensionKind::pi) == "pi");
  CHECK(to_string(ExtensionKind::sigma) == "sigma");
}
