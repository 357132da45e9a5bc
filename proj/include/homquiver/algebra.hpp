#pragma once

#include <string>
#include <utility>
#include <vector>

#include "homquiver/linalg.hpp"

namespace homquiver {

// Sparse vector over an algebra basis, sorted by index.
using SparseVec = std::vector<std::pair<int, Rat>>;

SparseVec sparse_add(const SparseVec& a, const SparseVec& b);
SparseVec sparse_scale(const Rat& c, const SparseVec& v);
Vec sparse_to_dense(const SparseVec& v, int dim);
SparseVec dense_to_sparse(const Vec& v);

struct BasisElem {
    int src = -1;      // vertex the element starts at
    int tgt = -1;      // vertex it ends at
    int len = 0;       // path length; 0 exactly for vertex idempotents
    std::string name;  // display form, e.g. "e1" or "a*b"
};

// Finite-dimensional basic algebra with a fixed basis graded by (src, tgt)
// vertex pairs. The product table is stored for the internal composition
//   compose(x, y) = "traverse y, then x"
// so that left modules satisfy rho(compose(x,y)) = rho(x) * rho(y).
// Built either from a quiver with relations or as a quotient by an ideal.
struct Algebra {
    std::vector<std::string> vertex_labels;
    std::vector<int> idem;  // vertex -> basis index of its idempotent, -1 if absent
    std::vector<BasisElem> basis;
    std::vector<std::vector<SparseVec>> table;  // table[i][j] = compose(basis i, basis j)
    int radical_nilpotency = 0;                 // least k with (span of len>0)^k = 0

    int dim() const { return static_cast<int>(basis.size()); }
    int num_vertices() const { return static_cast<int>(vertex_labels.size()); }
    std::vector<int> alive_vertices() const;

    const SparseVec& compose_basis(int i, int j) const { return table[i][j]; }
    Vec compose(const Vec& x, const Vec& y) const;

    int vertex_by_label(const std::string& label) const;  // -1 if unknown

    // Certification helpers.
    bool check_associativity() const;   // exhaustive over basis triples
    bool check_idempotents() const;     // orthogonal, sum to identity
    void certify_radical_nilpotent();   // fills radical_nilpotency or throws
};

// Quotient of an algebra by a two-sided ideal given as a subspace (the caller
// guarantees ideal-ness). Surviving basis elements are the original ones kept
// greedily in basis order; kills idempotents whose vertex lies in the ideal.
struct AlgebraQuotient {
    Algebra quotient;
    std::vector<int> surviving;  // quotient basis index -> ambient basis index
    Mat projection;              // quotient.dim() x ambient.dim(): coordinates mod ideal
};

AlgebraQuotient quotient_algebra(const Algebra& a, const Subspace& ideal);

}  // namespace homquiver
