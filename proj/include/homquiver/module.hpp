#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homquiver/algebra.hpp"
#include "homquiver/pathalg.hpp"

namespace homquiver {

// Finite-dimensional left module over a based algebra, stored as one block
// matrix per basis element (tgt-dim x src-dim). The algebra must outlive the
// module.
struct Module {
    const Algebra* alg = nullptr;
    std::vector<int> dims;   // per vertex
    std::vector<Mat> act;    // per basis element

    int total_dim() const;
    bool is_zero() const { return total_dim() == 0; }
    // rho extended to arbitrary elements
    Mat act_elem(const Vec& x, int src_vertex, int tgt_vertex) const;
};

struct ModuleMap {
    Module dom, cod;
    std::vector<Mat> f;  // per vertex

    bool is_zero() const;
};

Module zero_module(const Algebra& a);
Module simple_module(const Algebra& a, int vertex);
// Column module A e_v over the basis elements with source v.
Module projective_module(const Algebra& a, int vertex);
// Module from per-arrow matrices over a path algebra; validates the relations.
Module module_from_arrows(const PathAlgebra& pa, const std::vector<int>& dims,
                          const std::vector<Mat>& arrow_act);

// Structural validity: multiplicativity against the table and idempotent blocks.
bool validate_module(const Module& m);
bool is_module_map(const ModuleMap& h);

struct DirectSum {
    Module sum;
    std::vector<ModuleMap> inject;   // summand -> sum
    std::vector<ModuleMap> project;  // sum -> summand
};
DirectSum direct_sum(const std::vector<Module>& parts);
ModuleMap direct_sum_map(const DirectSum& dsd, const DirectSum& dsc, const std::vector<ModuleMap>& parts);

ModuleMap compose(const ModuleMap& g, const ModuleMap& f);  // g after f
ModuleMap zero_map(const Module& dom, const Module& cod);
ModuleMap identity_map(const Module& m);
ModuleMap add_maps(const ModuleMap& a, const ModuleMap& b);
ModuleMap scale_map(const Rat& c, const ModuleMap& a);

// Submodule spanned by the given per-vertex columns (closed under the action;
// checked). Returns the module plus its inclusion.
struct SubQuot {
    Module mod;
    ModuleMap map;  // inclusion for sub, projection for quotient
};
SubQuot submodule(const Module& m, const std::vector<Mat>& vertex_cols);
SubQuot quotient_module(const Module& m, const std::vector<Mat>& vertex_cols);

// Smallest submodule containing the given vectors (per-vertex stacked seeds).
std::vector<Mat> generated_submodule(const Module& m, const std::vector<Vec>& seeds,
                                     const std::vector<int>& seed_vertices);

std::vector<Mat> radical_columns(const Module& m);       // span of positive-length actions
std::vector<Mat> radical_columns_audit(const Module& m); // intersection of maximal submodules
SubQuot radical(const Module& m);  // with inclusion
SubQuot top(const Module& m);      // with projection
SubQuot socle(const Module& m);    // with inclusion

// Radical filtration layers, top first; each entry is the dims-per-vertex
// multiset of simples in that layer.
std::vector<std::vector<int>> loewy_series(const Module& m);

std::vector<ModuleMap> hom_basis(const Module& m, const Module& n);
int hom_dim(const Module& m, const Module& n);

struct Cover {
    Module proj;
    ModuleMap onto;
    std::vector<int> multiplicities;  // per vertex
};
Cover projective_cover(const Module& m);

SubQuot kernel(const ModuleMap& h);  // with inclusion into dom

bool is_isomorphic(const Module& m, const Module& n);

// Vectorized coordinates of a module map (per-vertex blocks flattened).
Vec map_coords(const ModuleMap& h);

}  // namespace homquiver
