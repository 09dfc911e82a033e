#pragma once

// JSON encodings of the library's values and the SVG rendering of weighted
// Farey triangles. Big integers are always written as decimal strings.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qfarey/contfrac.hpp"
#include "qfarey/farey.hpp"
#include "qfarey/laurent.hpp"
#include "qfarey/quadirr.hpp"
#include "qfarey/spherical.hpp"

namespace qfarey {

using Json = nlohmann::ordered_json;

/// [[exponent, "coefficient"], ...] by ascending exponent.
Json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);

/// {"num": ..., "den": ...}
Json to_json(const QRatFunc& f);
QRatFunc qrat_from_json(const Json& j);

/// {"R": ..., "P": ..., "S": ...}
Json to_json(const Surd& s);
Surd surd_from_json(const Json& j);

/// ["c0", "c1", ..., "c_order"]
Json to_json(const PowerSeries& s);

/// {"P1": ..., "P2": ...}
Json to_json(const FunctionalPair& f);

/// [["sigma1", -2], ["sigma2", 2], ...]
Json to_json(const TwistWord& w);

Json to_json(const WeightedTriangle& t);
Json to_json(const std::vector<WeightedTriangle>& triangles);

/// Semicircle diagram on a horizontal baseline: 0 at the left end, infinity
/// at the right end, each new vertex halfway between its two parents.
/// Vertices are labelled r/s and edges q^w. Output is deterministic.
std::string render_svg(const std::vector<WeightedTriangle>& triangles);

}  // namespace qfarey
