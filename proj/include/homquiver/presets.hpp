#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "homquiver/liecoh.hpp"
#include "homquiver/pathalg.hpp"

namespace homquiver {

struct CoxeterAnnotation {
    std::string type;               // Weyl group type
    std::vector<int> parabolic;     // stabilizer generators (0-based)
    std::string verma_vertex;       // vertex label of the simple Verma module
    std::vector<std::string> dominant_vertices;  // candidates for the dominant simple
    std::map<std::string, std::string> element_vertex;  // group element word -> vertex label
};

struct QuiverAnnotations {
    std::map<std::string, int> expected_pd;  // vertex label -> pd of its simple
    int expected_gldim = -1;
    // expected minimal resolution shapes: simple label -> term labels, degree 0 first
    std::map<std::string, std::vector<std::string>> expected_resolutions;
    bool expected_guichardet = false;
    std::optional<CoxeterAnnotation> coxeter;
    std::vector<std::string> notes;
};

struct QuiverPreset {
    std::string name;
    std::string text;  // algebra description in the file grammar
    QuiverAnnotations annotations;
};

struct LiePreset {
    std::string name;
    std::vector<std::string> notes;
    LieAlgebra algebra;
};

const std::vector<std::string>& quiver_preset_names();
const std::vector<std::string>& lie_preset_names();  // parametrized abelian_n listed as "abelian_n"
bool is_quiver_preset(const std::string& name);
bool is_lie_preset(const std::string& name);

const QuiverPreset& quiver_preset(const std::string& name);  // throws on unknown name
LiePreset lie_preset(const std::string& name);               // accepts abelian_1..abelian_6

// Builds the algebra from the embedded text (round-trips through the parser).
PathAlgebra build_preset_algebra(const QuiverPreset& p);

// Re-derives every annotation with the engine; returns failure messages.
std::vector<std::string> preset_self_test(const std::string& name);

}  // namespace homquiver
