#pragma once

#include <memory>
#include <string>
#include <vector>

#include "homquiver/homology.hpp"

namespace homquiver {

// Serre subcategory of A-mod generated by the simples in S, realized as the
// module category of the quotient A/(AeA)^N, where e is the idempotent of the
// complementary vertices and N is the stabilization exponent of the ideal
// power chain. Plain AeA is too small when extensions inside S pass through
// the killed vertices.
struct SerreSubcat {
    const Algebra* ambient = nullptr;
    std::vector<int> simples;       // sorted vertex indices
    int stabilization_exponent = 0;
    std::shared_ptr<Algebra> quotient;  // stable address for modules over it
    std::vector<int> surviving;     // quotient basis index -> ambient basis index
    Mat projection;                 // quotient coords of ambient elements
};

SerreSubcat serre_subcategory(const Algebra& a, const std::vector<int>& simples);

// A quotient-algebra module viewed as a module over the ambient algebra.
Module restrict_to_ambient(const SerreSubcat& s, const Module& over_quotient);
// Inverse direction; requires all composition factors in S (dims vanish
// outside S), which makes the killed ideal act by zero automatically.
Module view_in_quotient(const SerreSubcat& s, const Module& over_ambient);

struct PhiEntry {
    int from_vertex = -1, to_vertex = -1;  // simple pair (M = L_from, N = L_to)
    int degree = 0;
    int dim_sub = 0, dim_amb = 0;  // Ext in the subcategory vs the ambient category
    int rank = 0;                  // rank of the canonical comparison map
    bool injective = false, surjective = false;

    bool iso() const { return injective && surjective; }
};

enum class FullnessVerdict { ExtensionFull, NotExtensionFull, Undetermined };
enum class Certification { FullyCertified, CertifiedUpToCap };

struct ComparisonReport {
    std::vector<int> simples;
    std::vector<PhiEntry> entries;
    FullnessVerdict verdict = FullnessVerdict::Undetermined;
    Certification certification = Certification::CertifiedUpToCap;
    int checked_through_degree = -1;
    std::string note;
};

// Single comparison-map entry for quotient-algebra modules M, N at degree d.
PhiEntry comparison_map(const SerreSubcat& s, const Module& m_quot, const Module& n_quot, int d,
                        int cap);

// Extension-fullness decision on all simple pairs of S (sufficient for the
// whole subcategory since every object has finite length). min_degree forces
// entries at least through that degree.
ComparisonReport extension_fullness(const Algebra& a, const std::vector<int>& simples, int cap,
                                    int min_degree = -1);

class InfiniteGlobalDimension : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// All subsets of simples closed under the downward condition: L in S,
// pd L' = pd L - 1 and Ext^1(L, L') != 0 force L' in S.
std::vector<std::vector<int>> initial_segments(const Algebra& a, int cap);

struct GuichardetReport {
    bool verdict = false;
    bool certified = false;
    std::vector<std::vector<int>> segments;
    std::vector<ComparisonReport> reports;
    int failing_segment = -1;  // index into segments when verdict is false
};
GuichardetReport guichardet(const Algebra& a, int cap);

}  // namespace homquiver
