#pragma once

#include <string>
#include <vector>

#include "homquiver/linalg.hpp"

namespace homquiver {

// Finite-dimensional Lie algebra over Q by structure constants:
// [x_i, x_j] = sum_k c[i][j][k] x_k. Antisymmetry and Jacobi are validated.
struct LieAlgebra {
    std::string name;
    int dim = 0;
    std::vector<std::string> basis_names;
    std::vector<std::vector<Vec>> c;  // c[i][j] = bracket coefficients

    Vec bracket(const Vec& x, const Vec& y) const;
    Mat ad(int i) const;
    bool is_unimodular() const;  // trace of every ad x_i vanishes
    void validate() const;       // throws on antisymmetry or Jacobi failure
};

struct LieModule {
    const LieAlgebra* alg = nullptr;
    int dim = 0;
    std::vector<Mat> rho;  // one matrix per Lie algebra basis element

    void validate() const;  // [rho x, rho y] = rho [x, y] on all basis pairs
};

LieModule trivial_module(const LieAlgebra& a, int copies = 1);
LieModule adjoint_module(const LieAlgebra& a);
LieModule dual_module(const LieModule& v);
LieModule direct_sum(const LieModule& v, const LieModule& w);
LieModule conjugate_module(const LieModule& v, const Mat& g);  // g rho g^{-1}

// Chevalley-Eilenberg cochain spaces Lambda^d(a^*) (x) V and differential.
Mat ce_differential(const LieAlgebra& a, const LieModule& v, int d);  // C^d -> C^{d+1}

struct CohomologyResult {
    int dimension = 0;
    Mat cocycle_basis;  // columns in the C^d coordinate order
};
// Degrees outside 0..dim a yield dimension 0.
CohomologyResult ce_cohomology(const LieAlgebra& a, const LieModule& v, int d);

// dim H^{dim a}(a, V) against dim Hom_a(V, trivial), each computed
// independently. Valid for unimodular algebras; otherwise skipped with notice
// (the identity genuinely fails without the modular twist).
struct TopDegreeReport {
    bool applicable = false;  // unimodular
    int lhs = -1, rhs = -1;
    bool pass = false;
    std::string note;
};
TopDegreeReport top_degree_check(const LieAlgebra& a, const LieModule& v);

struct PoincareReport {
    bool applicable = false;
    std::vector<int> cohomology;  // dim H^p, p = 0..n
    std::vector<int> homology;    // dim H_p, p = 0..n (via the dual module)
    bool pass = false;
    std::string note;
};
PoincareReport poincare_check(const LieAlgebra& a, const LieModule& v);

// Bundled structure constants.
LieAlgebra lie_abelian(int n);
LieAlgebra lie_sl2();
LieAlgebra lie_borel_sl2();
LieAlgebra lie_heisenberg();
LieAlgebra lie_sl2_plus_sl2();

}  // namespace homquiver
