#pragma once

#include <string>

#include "wsum/diagram.hpp"

namespace wsum {

struct ParseError : std::runtime_error {
    int line, col;
    ParseError(int line, int col, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) +
                             ": " + msg),
          line(line), col(col) {}
};

// Annotated PD text. One crossing per line:
//   X<id> u_in=<edge> o_out=<edge> u_out=<edge> o_in=<edge>     (positive crossing)
//   X<id> u_in=<edge> o_in=<edge> u_out=<edge> o_out=<edge>     (negative crossing)
// The four fields are written in counterclockwise order around the crossing
// starting from the under-in slot; the crossing sign is derived from that order.
// An optional sign=+1|-1 field is cross-checked against the derived sign.
// Ambient block:
//   ambient sphere
//   ambient annulus origin=(<crossing>,<QUAD>) inf=(<crossing>,<QUAD>)
//   ambient torus            followed by lines: edge <id> class=<p>,<q>
Diagram parse_pd(const std::string& text);

std::string write_pd(const Diagram& d);

Diagram load_pd_file(const std::string& path);

}  // namespace wsum
