#include "proxlat/fixtures.hpp"

#include "proxlat/error.hpp"

namespace proxlat::fixtures {

FiniteLattice chain(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::NotALattice, "a chain needs a bottom and a top");
  std::vector<std::string> names{"0"};
  for (std::size_t i = 1; i + 1 < n; ++i) names.emplace_back(1, static_cast<char>('a' + i - 1));
  names.push_back("1");
  std::vector<ElementSet> up(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) up[i].insert(j);
  return lattice_from_order(std::move(names), std::move(up));
}

FiniteLattice boolean_square() {
  std::vector<std::pair<std::size_t, std::size_t>> covers{{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  return lattice_from_pairs({"0", "a", "b", "1"}, covers);
}

FiniteLattice diamond() {
  std::vector<std::pair<std::size_t, std::size_t>> covers{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}};
  return lattice_from_pairs({"0", "a", "b", "c", "1"}, covers);
}

std::optional<ProximityLattice> proximity(std::string_view name) {
  if (name == "C2") return ProximityLattice::with_order(chain(2));
  if (name == "C3") return ProximityLattice::with_order(chain(3));
  if (name == "B2") return ProximityLattice::with_order(boolean_square());
  if (name == "M3") return ProximityLattice::with_order(diamond());
  if (name == "FULL2") return ProximityLattice::make(chain(2), Relation::full(2, 2));
  if (name == "C3R") {
    auto c3 = chain(3);
    Relation r(3, 3);
    for (std::size_t x = 0; x < 3; ++x)
      for (std::size_t y = 0; y < 3; ++y)
        if (x == c3.bot() || y == c3.top()) r.insert(x, y);
    return ProximityLattice::make(std::move(c3), std::move(r));
  }
  return std::nullopt;
}

const std::vector<std::string>& proximity_names() {
  static const std::vector<std::string> names{"C2", "C3", "B2", "M3", "FULL2", "C3R"};
  return names;
}

std::optional<FiniteSpace> space(std::string_view name) {
  if (name == "point") return make_space({"x"}, {ElementSet{}, ElementSet{0}});
  if (name == "sierpinski") return make_space({"x", "y"}, {ElementSet{}, ElementSet{0}, ElementSet{0, 1}});
  if (name == "discrete2")
    return make_space({"x", "y"}, {ElementSet{}, ElementSet{0}, ElementSet{1}, ElementSet{0, 1}});
  if (name == "empty") return make_space({}, {ElementSet{}});
  return std::nullopt;
}

const std::vector<std::string>& space_names() {
  static const std::vector<std::string> names{"point", "sierpinski", "discrete2", "empty"};
  return names;
}

}  // namespace proxlat::fixtures
