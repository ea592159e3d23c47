#pragma once

#include "latgraph/graphs.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace latgraph {

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::invalid_argument(message + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Graph constructor expressions:
///
///   expr := name | name "(" arg ("," arg)* ")"
///   arg  := integer | expr
///
/// Names: empty(n), complete(n), cycle(n), path(n), hamming(d,q),
/// kneser(n,k), johnson(n,k), folded_cube(d), petersen, clebsch, shrikhande,
/// schlafli, gosset, line_graph(g), complement(g), disjoint_union(g,copies),
/// cartesian(g,h), direct(g,h) (alias tensor), strong(g,h),
/// lexicographic(g,h). The resulting graph is labelled with the normalised
/// expression.
Graph parse_graph(std::string_view text);

/// The grammar above as help text.
std::string graph_dsl_help();

}  // namespace latgraph
