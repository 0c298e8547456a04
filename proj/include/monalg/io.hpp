#pragma once

#include <string>
#include <vector>

#include "monalg/clutter.hpp"
#include "monalg/codes.hpp"
#include "monalg/monomial.hpp"

namespace monalg {

/// Rows of non-negative integers, one per non-blank line, all of one length.
/// Lines starting with '#' are comments. Errors carry line and column.
std::vector<ExponentVector> parse_exponent_rows(const std::string& text);

/// One generator per line as space-separated exponents.
MonomialIdeal parse_ideal(const std::string& text);

/// First line s, then one edge "u v" per line with 1-based vertices.
/// "u u" is a loop and needs allow_loops.
Graph parse_graph(const std::string& text, bool allow_loops = false);

/// First line "q s", then one point per line with coordinates in 0..q-1.
PointSet parse_point_set(const std::string& text);

std::string graph_to_text(const Graph& g);
std::string point_set_to_text(const PointSet& x);

std::string read_file(const std::string& path);

}  // namespace monalg
