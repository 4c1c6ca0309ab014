#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "proxlat/lattice.hpp"
#include "proxlat/proximity.hpp"
#include "proxlat/spectra.hpp"

namespace proxlat::fixtures {

/// Chain 0 < a < b < ... < 1 with n elements (n >= 2).
FiniteLattice chain(std::size_t n);
FiniteLattice boolean_square();  // 0, a, b, 1
FiniteLattice diamond();         // 0, a, b, c, 1

/// C2, C3, B2, M3 with R the lattice order; FULL2 = (C2, all pairs);
/// C3R = (C3, {(x,y) : x = 0 or y = 1}).
std::optional<ProximityLattice> proximity(std::string_view name);
const std::vector<std::string>& proximity_names();

/// point, sierpinski (x open, y closed), discrete2, empty.
std::optional<FiniteSpace> space(std::string_view name);
const std::vector<std::string>& space_names();

}  // namespace proxlat::fixtures
