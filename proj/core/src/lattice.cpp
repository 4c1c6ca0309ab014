#include "proxlat/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "proxlat/error.hpp"

namespace proxlat {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotAPartialOrder: return "NotAPartialOrder";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::CapacityExceeded: return "CapacityExceeded";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotAProximityLattice: return "NotAProximityLattice";
    case ErrorKind::NotJoinStrong: return "NotJoinStrong";
    case ErrorKind::NotMeetStrong: return "NotMeetStrong";
    case ErrorKind::NotDoublyStrong: return "NotDoublyStrong";
    case ErrorKind::NotAProximityMorphism: return "NotAProximityMorphism";
    case ErrorKind::NotAJMorphism: return "NotAJMorphism";
    case ErrorKind::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorKind::NotDistributive: return "NotDistributive";
    case ErrorKind::NotT0: return "NotT0";
    case ErrorKind::InvalidRoundSubset: return "InvalidRoundSubset";
    case ErrorKind::InvalidSpace: return "InvalidSpace";
    case ErrorKind::KindMismatch: return "KindMismatch";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

std::optional<std::size_t> FiniteLattice::index_of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::size_t FiniteLattice::join_of(const ElementSet& s) const {
  std::size_t acc = bot_;
  for (auto a : s) acc = join(acc, a);
  return acc;
}

std::size_t FiniteLattice::meet_of(const ElementSet& s) const {
  std::size_t acc = top_;
  for (auto a : s) acc = meet(acc, a);
  return acc;
}

std::vector<std::pair<std::size_t, std::size_t>> FiniteLattice::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < size(); ++a) {
    for (auto b : up_[a]) {
      if (b == a) continue;
      // a < b is a cover iff nothing lies strictly between.
      auto between = up_[a] & down_[b];
      if (between.size() == 2) out.emplace_back(a, b);
    }
  }
  return out;
}

namespace {

std::string pair_text(const std::vector<std::string>& names, std::size_t a, std::size_t b) {
  return "(" + names[a] + ", " + names[b] + ")";
}

}  // namespace

std::vector<ElementSet> transitive_closure(std::vector<ElementSet> rel) {
  const auto n = rel.size();
  for (std::size_t a = 0; a < n; ++a) rel[a].insert(a);
  // Warshall over successor sets.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a)
      if (rel[a].contains(k)) rel[a] |= rel[k];
  return rel;
}

FiniteLattice lattice_from_order(std::vector<std::string> names, std::vector<ElementSet> up) {
  const auto n = names.size();
  if (n > ElementSet::kCapacity)
    throw Error(ErrorKind::CapacityExceeded, "lattice has " + std::to_string(n) + " elements");
  if (up.size() != n) throw Error(ErrorKind::DimensionMismatch, "order rows do not match element count");
  if (n == 0) throw Error(ErrorKind::NotALattice, "empty carrier has no top or bottom");

  const auto all = ElementSet::full(n);
  for (std::size_t a = 0; a < n; ++a) {
    if (!up[a].subset_of(all)) throw Error(ErrorKind::DimensionMismatch, "order row out of range");
    if (!up[a].contains(a)) throw Error(ErrorKind::NotAPartialOrder, "not reflexive at " + names[a]);
    for (auto b : up[a]) {
      if (b != a && up[b].contains(a))
        throw Error(ErrorKind::NotAPartialOrder, "not antisymmetric on " + pair_text(names, a, b));
      if (!up[b].subset_of(up[a])) {
        auto c = *(up[b] - up[a]).first();
        throw Error(ErrorKind::NotAPartialOrder,
                    "not transitive: " + names[a] + " <= " + names[b] + " <= " + names[c]);
      }
    }
  }

  FiniteLattice lat;
  lat.names_ = std::move(names);
  lat.up_ = std::move(up);
  lat.down_.assign(n, ElementSet{});
  for (std::size_t a = 0; a < n; ++a)
    for (auto b : lat.up_[a]) lat.down_[b].insert(a);

  lat.meet_.assign(n * n, 0);
  lat.join_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      auto lower = lat.down_[a] & lat.down_[b];
      std::optional<std::size_t> glb;
      for (auto m : lower)
        if (lower.subset_of(lat.down_[m])) {
          glb = m;
          break;
        }
      if (!glb) throw Error(ErrorKind::NotALattice, "pair " + pair_text(lat.names_, a, b) + " has no meet");
      auto upper = lat.up_[a] & lat.up_[b];
      std::optional<std::size_t> lub;
      for (auto m : upper)
        if (upper.subset_of(lat.up_[m])) {
          lub = m;
          break;
        }
      if (!lub) throw Error(ErrorKind::NotALattice, "pair " + pair_text(lat.names_, a, b) + " has no join");
      lat.meet_[a * n + b] = lat.meet_[b * n + a] = static_cast<std::uint16_t>(*glb);
      lat.join_[a * n + b] = lat.join_[b * n + a] = static_cast<std::uint16_t>(*lub);
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (lat.down_[a] == all) lat.top_ = a;
    if (lat.up_[a] == all) lat.bot_ = a;
  }
  return lat;
}

FiniteLattice lattice_from_pairs(std::vector<std::string> names,
                                 std::span<const std::pair<std::size_t, std::size_t>> pairs) {
  const auto n = names.size();
  if (n > ElementSet::kCapacity)
    throw Error(ErrorKind::CapacityExceeded, "lattice has " + std::to_string(n) + " elements");
  std::vector<ElementSet> rel(n);
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n) throw Error(ErrorKind::DimensionMismatch, "order pair out of range");
    rel[a].insert(b);
  }
  return lattice_from_order(std::move(names), transitive_closure(std::move(rel)));
}

FiniteLattice lattice_from_sets(std::span<const ElementSet> sets, std::vector<std::string> names) {
  const auto n = sets.size();
  if (names.empty())
    for (std::size_t i = 0; i < n; ++i) names.push_back("c" + std::to_string(i));
  std::vector<ElementSet> up(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (sets[i].subset_of(sets[j])) up[i].insert(j);
  return lattice_from_order(std::move(names), std::move(up));
}

std::vector<ElementSet> intersection_closure(std::span<const ElementSet> generators,
                                             const ElementSet& universe) {
  std::unordered_set<ElementSet, ElementSetHash> seen{universe};
  std::vector<ElementSet> family{universe};
  for (const auto& g : generators) {
    const auto current = family.size();
    for (std::size_t i = 0; i < current; ++i) {
      auto s = family[i] & g;
      if (seen.insert(s).second) family.push_back(s);
    }
  }
  std::sort(family.begin(), family.end());
  return family;
}

bool is_distributive(const FiniteLattice& lat) {
  const auto n = lat.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = b; c < n; ++c)
        if (lat.meet(a, lat.join(b, c)) != lat.join(lat.meet(a, b), lat.meet(a, c))) return false;
  return true;
}

FiniteLattice opposite(const FiniteLattice& lat) {
  FiniteLattice op;
  op.names_ = lat.names_;
  op.up_ = lat.down_;
  op.down_ = lat.up_;
  op.meet_ = lat.join_;
  op.join_ = lat.meet_;
  op.top_ = lat.bot_;
  op.bot_ = lat.top_;
  return op;
}

bool is_order_preserving(const FiniteLattice& src, const FiniteLattice& tgt, const LatticeMap& f) {
  if (f.size() != src.size()) return false;
  for (std::size_t a = 0; a < src.size(); ++a)
    for (auto b : src.up(a))
      if (!tgt.leq(f(a), f(b))) return false;
  return true;
}

bool is_homomorphism(const FiniteLattice& src, const FiniteLattice& tgt, const LatticeMap& f) {
  if (f.size() != src.size()) return false;
  for (auto v : f.table)
    if (v >= tgt.size()) return false;
  if (f(src.top()) != tgt.top() || f(src.bot()) != tgt.bot()) return false;
  for (std::size_t a = 0; a < src.size(); ++a)
    for (std::size_t b = a + 1; b < src.size(); ++b) {
      if (f(src.meet(a, b)) != tgt.meet(f(a), f(b))) return false;
      if (f(src.join(a, b)) != tgt.join(f(a), f(b))) return false;
    }
  return true;
}

LatticeMap identity_map(const FiniteLattice& lat) {
  LatticeMap id;
  id.table.resize(lat.size());
  std::iota(id.table.begin(), id.table.end(), std::size_t{0});
  return id;
}

LatticeMap compose(const LatticeMap& f, const LatticeMap& g) {
  LatticeMap out;
  out.table.reserve(f.size());
  for (auto v : f.table) out.table.push_back(g(v));
  return out;
}

MacNeilleCompletion dedekind_macneille(const Preorder& q) {
  const auto n = q.size();
  if (n > ElementSet::kCapacity)
    throw Error(ErrorKind::CapacityExceeded, "preorder has " + std::to_string(n) + " elements");
  // below[a] = principal down-set of a; every cut is an intersection of these.
  std::vector<ElementSet> below(n);
  for (std::size_t a = 0; a < n; ++a)
    for (auto b : q.above[a]) below[b].insert(a);

  MacNeilleCompletion out;
  out.cuts = intersection_closure(below, ElementSet::full(n));
  out.lattice = lattice_from_sets(out.cuts);
  out.embedding.table.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    auto it = std::lower_bound(out.cuts.begin(), out.cuts.end(), below[a]);
    ensure(it != out.cuts.end() && *it == below[a], "principal down-set is a cut");
    out.embedding.table[a] = static_cast<std::size_t>(it - out.cuts.begin());
  }
  return out;
}

namespace {

class IsoSearch {
 public:
  IsoSearch(const FiniteLattice& l, const FiniteLattice& m) : l_(l), m_(m), map_(l.size(), kUnset) {
    used_.assign(m.size(), false);
  }

  bool pin(std::size_t a, std::size_t b) {
    if (a >= l_.size() || b >= m_.size()) return false;
    if (map_[a] != kUnset) return map_[a] == b;
    if (used_[b] || !compatible(a, b)) return false;
    map_[a] = b;
    used_[b] = true;
    return true;
  }

  std::optional<LatticeMap> run() {
    // Assign bottom-up so that order constraints prune early.
    for (std::size_t a = 0; a < l_.size(); ++a)
      if (map_[a] == kUnset) order_.push_back(a);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](auto x, auto y) { return l_.down(x).size() < l_.down(y).size(); });
    if (!extend(0)) return std::nullopt;
    return LatticeMap{map_};
  }

 private:
  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  bool compatible(std::size_t a, std::size_t b) const {
    if (l_.down(a).size() != m_.down(b).size() || l_.up(a).size() != m_.up(b).size()) return false;
    for (std::size_t x = 0; x < l_.size(); ++x) {
      if (map_[x] == kUnset) continue;
      if (l_.leq(x, a) != m_.leq(map_[x], b) || l_.leq(a, x) != m_.leq(b, map_[x])) return false;
    }
    return true;
  }

  bool extend(std::size_t i) {
    if (i == order_.size()) return true;
    auto a = order_[i];
    for (std::size_t b = 0; b < m_.size(); ++b) {
      if (used_[b] || !compatible(a, b)) continue;
      map_[a] = b;
      used_[b] = true;
      if (extend(i + 1)) return true;
      map_[a] = kUnset;
      used_[b] = false;
    }
    return false;
  }

  const FiniteLattice& l_;
  const FiniteLattice& m_;
  std::vector<std::size_t> map_;
  std::vector<bool> used_;
  std::vector<std::size_t> order_;
};

}  // namespace

std::optional<LatticeMap> find_isomorphism(const FiniteLattice& l, const FiniteLattice& m,
                                           std::span<const std::pair<std::size_t, std::size_t>> fixed) {
  if (l.size() != m.size()) return std::nullopt;
  IsoSearch search(l, m);
  for (auto [a, b] : fixed)
    if (!search.pin(a, b)) return std::nullopt;
  return search.run();
}

std::string check_lattice_laws(const FiniteLattice& lat) {
  const auto n = lat.size();
  std::ostringstream out;
  for (std::size_t a = 0; a < n; ++a) {
    if (lat.meet(a, a) != a || lat.join(a, a) != a) {
      out << "idempotence fails at " << lat.name(a);
      return out.str();
    }
    for (std::size_t b = 0; b < n; ++b) {
      if (lat.meet(a, b) != lat.meet(b, a) || lat.join(a, b) != lat.join(b, a)) {
        out << "commutativity fails at " << pair_text(lat.names(), a, b);
        return out.str();
      }
      if (lat.meet(a, lat.join(a, b)) != a || lat.join(a, lat.meet(a, b)) != a) {
        out << "absorption fails at " << pair_text(lat.names(), a, b);
        return out.str();
      }
      for (std::size_t c = 0; c < n; ++c) {
        if (lat.meet(lat.meet(a, b), c) != lat.meet(a, lat.meet(b, c)) ||
            lat.join(lat.join(a, b), c) != lat.join(a, lat.join(b, c))) {
          out << "associativity fails at " << lat.name(a) << ", " << lat.name(b) << ", " << lat.name(c);
          return out.str();
        }
      }
    }
  }
  return {};
}

}  // namespace proxlat
