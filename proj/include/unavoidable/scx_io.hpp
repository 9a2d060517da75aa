#pragma once

#include <string>
#include <string_view>

#include "unavoidable/complex.hpp"

namespace unav {

/// Parses the .scx complex format:
///
///   # comment
///   m 5
///   1 2
///   2 3 4
///   -            (the empty facet)
///
/// The first non-comment line is `m <int>`; every further non-comment line is
/// one facet as 1-based vertex indices. Throws ParseError with a line number.
SimplicialComplex parse_scx(std::string_view text);

/// Canonical form: `m <int>` then facets in canonical order, members
/// increasing, one per line. parse_scx(format_scx(K)) == K, and
/// format_scx(parse_scx(t)) == t for canonical t.
std::string format_scx(const SimplicialComplex& k);

/// Reads and parses a file; ParseError on I/O failure as well.
SimplicialComplex read_scx_file(const std::string& path);

}  // namespace unav
