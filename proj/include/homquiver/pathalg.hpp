#pragma once

#include <map>
#include <string>
#include <vector>

#include "homquiver/algebra.hpp"

namespace homquiver {

struct Quiver {
    std::vector<std::string> vertices;
    struct Arrow {
        std::string name;
        int src = -1, tgt = -1;
    };
    std::vector<Arrow> arrows;

    int vertex_index(const std::string& label) const;  // -1 if unknown
    int arrow_index(const std::string& name) const;
    void validate() const;  // throws on duplicate ids or undeclared endpoints
};

enum class Convention { RightToLeft, LeftToRight };

// One side of a relation: a rational combination of arrow products, each
// product written in source order (as it appears in "a*b*c").
struct RelTerm {
    Rat coeff = 1;
    std::vector<int> arrows;
};
struct Relation {
    std::vector<RelTerm> lhs, rhs;  // rhs empty means zero
    std::string text;               // original display form
};

class MalformedRelation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};
class NotFiniteDimensional : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Finite-dimensional quotient of a path algebra. The basis consists of
// normal-form paths; saturation_length is the least L such that every path of
// length >= L reduces to a combination of shorter normal forms.
struct PathAlgebra {
    Quiver quiver;
    Convention convention = Convention::RightToLeft;
    std::vector<Relation> relations;
    Algebra alg;
    std::vector<std::vector<int>> path_words;  // traversal-order arrow indices per basis elem
    int saturation_length = 0;
    int build_cap = 0;

    int dim() const { return alg.dim(); }
    // Product in the declared convention: right-to-left reads x*y as
    // "traverse y first, then x".
    Vec multiply(const Vec& x, const Vec& y) const;
    Vec basis_vec(int k) const;
    // Value of one relation side as an element (used for validation/tests).
    Vec eval_terms(const std::vector<RelTerm>& terms) const;
    std::string path_name(int k) const;
};

constexpr int kDefaultBuildCap = 16;

PathAlgebra build_path_algebra(const Quiver& q, const std::vector<Relation>& rels,
                               Convention conv = Convention::RightToLeft,
                               int cap = kDefaultBuildCap);

}  // namespace homquiver
