#pragma once

#include <string>

#include "homquiver/liecoh.hpp"
#include "homquiver/pathalg.hpp"

namespace homquiver {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line, int col)
        : std::runtime_error("parse error at " + std::to_string(line) + ":" + std::to_string(col) +
                             ": " + msg),
          line(line),
          col(col) {}
    int line, col;
};

struct AlgebraDescription {
    Quiver quiver;
    std::vector<Relation> relations;
    Convention convention = Convention::RightToLeft;
};

// Plain-text grammar, one statement per line, '#' comments:
//   vertices: 1 2 3
//   arrow a: 1 -> 2
//   relation: a*b = d*c
//   composition: right-to-left
AlgebraDescription parse_algebra_text(const std::string& text);
AlgebraDescription parse_algebra_file(const std::string& path);

// Companion format for Lie algebras:
//   lie: 3
//   basis: x y z
//   bracket x y: z
//   bracket h e: 2*e
LieAlgebra parse_lie_text(const std::string& text);
LieAlgebra parse_lie_file(const std::string& path);

std::string read_file(const std::string& path);

}  // namespace homquiver
