#pragma once

#include <iosfwd>
#include <string>

#include "qv/dynkin.hpp"
#include "qv/strat.hpp"

namespace qv {

/** Serializes (g, a) as a quiver document: a JSON object with the keys
    `vertices`, `edges` (rows [i, j, mult] with i < j, ascending), `loops`
    and `dim`, always in that order.  The output is deterministic down to
    the byte and ends with a newline. */
std::string write_quiver(const WeightedGraph& g, const DimVector& a);

/** Parses a quiver document.  Throws std::invalid_argument on malformed
    JSON, missing or extra keys, out-of-range vertex indices, nonpositive
    multiplicities, negative loops or dims, or length mismatches. */
RootedGraph read_quiver(const std::string& text);

/** Reads the whole stream and parses it as one quiver document. */
RootedGraph read_quiver(std::istream& in);

/** DOT digraph of a closure diagram, edges pointing from larger to smaller
    leaves.  Node labels carry the leaf dimension and representation type,
    edge labels the slice type when one is attached. */
std::string hasse_dot(const HasseDiagram& h);

/** Line-per-item rendering of the same diagram: numbered nodes first, then
    `upper -> lower  [label]` rows. */
std::string hasse_text(const HasseDiagram& h);

} // namespace qv
