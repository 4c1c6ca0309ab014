#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "proxlat/canext.hpp"
#include "proxlat/lattice.hpp"
#include "proxlat/morphext.hpp"
#include "proxlat/proximity.hpp"
#include "proxlat/spectra.hpp"

namespace proxlat::io {

using json = nlohmann::json;

inline constexpr const char* kSchema = "proxlat/1";

/// Reads and parses a JSON file. Throws ParseError.
json read_json_file(const std::filesystem::path& path);

json to_json(const FiniteLattice& lat);
/// {"elements": [...], "leq": [[lo, hi], ...]}; the pairs are closed under
/// reflexivity and transitivity on load.
FiniteLattice lattice_from_json(const json& doc);

json to_json(const ProximityLattice& p);

/// A lattice and relation as written, before the axioms are checked.
struct RawProximity {
  FiniteLattice lattice;
  Relation relation;
};

RawProximity raw_proximity_from_json(const json& doc);
/// {"lattice": <lattice or fixture name>, "R": [[a, b], ...]}. A missing R
/// means the lattice order; a bare string names a fixture.
ProximityLattice proximity_from_json(const json& doc);

json to_json(const FiniteSpace& s);
/// {"points": [...], "opens": [[...], ...]} or a space fixture name.
FiniteSpace space_from_json(const json& doc);

struct MorphismDoc {
  ProximityLattice source;
  ProximityLattice target;
  Relation t;
};

json to_json(const MorphismDoc& m);
MorphismDoc morphism_from_json(const json& doc);

json relation_json(const FiniteLattice& src, const FiniteLattice& tgt, const Relation& r);

json to_json(const Check& c);
json to_json(const AxiomReport& r);
json to_json(const ProximityFlags& f);
json to_json(const MorphismReport& r);
json to_json(const CanonicalExtension& e);
json to_json(const ExtensionReport& r);
json to_json(const ExtendedMap& m);
json to_json(const PreservationReport& r);
json to_json(const DualComparison& d);
json to_json(const SpectrumResult& s);

/// Hasse diagram; highlighted elements are drawn filled.
std::string lattice_dot(const FiniteLattice& lat, const ElementSet& highlight = {},
                        const std::string& graph_name = "lattice");
/// Specialization order of a finite space (x below y when y is in every
/// open containing x), drawn as its cover relation.
std::string space_dot(const FiniteSpace& s, const std::string& graph_name = "space");

}  // namespace proxlat::io
