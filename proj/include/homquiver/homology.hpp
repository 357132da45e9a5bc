#pragma once

#include <map>
#include <optional>
#include <vector>

#include "homquiver/module.hpp"

namespace homquiver {

class BeyondCap : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class ResolutionStatus { Finite, TruncatedAtCap, CertifiedInfinitePeriodic };

// Minimal projective resolution: term d covers the d-th syzygy.
struct Resolution {
    Module target;
    std::vector<Module> terms;
    std::vector<std::vector<int>> mults;  // projective multiplicities per term
    ModuleMap aug;                        // terms[0] ->> target
    std::vector<ModuleMap> diffs;         // diffs[d]: terms[d+1] -> terms[d]
    std::vector<Module> syzygies;         // syzygy d+1 inside terms[d]
    ResolutionStatus status = ResolutionStatus::Finite;
    int period_from = -1, period_to = -1;  // syzygy indices with period_from < period_to isomorphic

    int computed_terms() const { return static_cast<int>(terms.size()); }
    int length() const;  // only for Finite
};

int default_degree_cap(const Algebra& a);

Resolution minimal_resolution(const Module& m, int cap);

// Complex/exactness/minimality certificates (rank-checked).
bool verify_resolution(const Resolution& r);

// Ext dimensions of (target of r, n) for degrees 0..max_d via the Hom complex.
std::vector<int> ext_dims_hom_complex(const Resolution& r, const Module& n, int max_d);
// Multiplicity route: Ext^d(M, L_j) read off the minimal resolution terms.
// Periodic resolutions extend beyond the computed window; throws BeyondCap on
// a truncated one.
int multiplicity_at(const Resolution& r, int d, int vertex);
std::vector<int> ext_dims_multiplicity(const Resolution& r, int vertex, int max_d);

// Throws BeyondCap when the resolution is truncated below degree d.
int ext_dim(const Module& m, const Module& n, int d, int cap);

struct PdResult {
    enum class Kind { Finite, Infinite, Undetermined } kind = Kind::Undetermined;
    int value = -1;                        // for Finite
    int period_from = -1, period_to = -1;  // certificate for Infinite

    bool finite() const { return kind == Kind::Finite; }
};
PdResult proj_dim(const Module& m, int cap);
PdResult proj_dim(const Resolution& r);
PdResult global_dim(const Algebra& a, int cap);

// pd comparison in N ∪ {∞}; Undetermined propagates.
struct ExtTable {
    std::vector<int> vertices;
    int max_degree = 0;
    // entry(i, j, d) = dim Ext^d(L_i, L_j); nullopt when undetermined
    std::map<std::pair<int, int>, std::vector<std::optional<int>>> entries;

    std::optional<int> entry(int i, int j, int d) const;
};
ExtTable ext_table(const Algebra& a, int max_degree, int cap);

struct LesReport {
    bool exact = false;              // input was a short exact sequence
    bool alternating_sum_ok = false; // degreewise dimension identity
    bool pd_sub_ok = false;          // pd X <= max(pd Y, pd Z - 1)
    bool pd_quot_ok = false;         // pd Z <= max(pd X + 1, pd Y)
    bool certified = false;          // all pds finite and range covered them
    std::vector<int> ext_sub, ext_mid, ext_quot;  // e_d(-) = dim Ext^d(-, K)
    PdResult pd_sub, pd_mid, pd_quot;
};
LesReport les_dimension_check(const ModuleMap& incl, const ModuleMap& proj, const Module& k,
                              int max_degree, int cap);

}  // namespace homquiver
