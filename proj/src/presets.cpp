#include "homquiver/presets.hpp"

#include <algorithm>

#include "homquiver/algfile.hpp"
#include "homquiver/homology.hpp"
#include "homquiver/serre.hpp"

namespace homquiver {

namespace {

const char* kSl2PrincipalText = R"(# principal block of category O for sl(2)
vertices: 1 2
arrow a: 1 -> 2
arrow b: 2 -> 1
relation: a*b = 0
composition: right-to-left
)";

const char* kSl3SingularText = R"(# singular integral block of category O for sl(3)
vertices: 1 2 3
arrow a: 1 -> 2
arrow b: 2 -> 1
arrow c: 2 -> 3
arrow d: 3 -> 2
relation: c*d = 0
relation: a*b = d*c
composition: right-to-left
)";

const char* kSl3SingularMonomialText = R"(# monomial companion of the singular sl(3) block quiver
vertices: 1 2 3
arrow a: 1 -> 2
arrow b: 2 -> 1
arrow c: 2 -> 3
arrow d: 3 -> 2
relation: c*d = 0
relation: a*b = 0
composition: right-to-left
)";

std::vector<QuiverPreset> make_quiver_presets() {
    std::vector<QuiverPreset> out;

    {
        QuiverPreset p;
        p.name = "sl2_principal";
        p.text = kSl2PrincipalText;
        p.annotations.expected_pd = {{"1", 1}, {"2", 2}};
        p.annotations.expected_gldim = 2;
        p.annotations.expected_resolutions = {{"1", {"P1", "P2"}}, {"2", {"P2", "P1", "P2"}}};
        p.annotations.expected_guichardet = true;
        CoxeterAnnotation cx;
        cx.type = "A1";
        cx.parabolic = {};
        cx.verma_vertex = "1";
        cx.dominant_vertices = {"2"};
        cx.element_vertex = {{"e", "2"}, {"s1", "1"}};
        p.annotations.coxeter = cx;
        p.annotations.notes = {"principal block of category O for sl(2)",
                               "quasi-hereditary; every coideal segment is extension full"};
        out.push_back(std::move(p));
    }
    {
        QuiverPreset p;
        p.name = "sl3_singular";
        p.text = kSl3SingularText;
        p.annotations.expected_pd = {{"1", 1}, {"2", 2}, {"3", 2}};
        p.annotations.expected_gldim = 2;
        p.annotations.expected_resolutions = {{"1", {"P1", "P2"}}, {"3", {"P3", "P2", "P3"}}};
        p.annotations.expected_guichardet = false;
        CoxeterAnnotation cx;
        cx.type = "A2";
        cx.parabolic = {0};  // s1
        cx.verma_vertex = "1";
        cx.dominant_vertices = {"2", "3"};
        p.annotations.coxeter = cx;
        p.annotations.notes = {"singular integral block of category O for sl(3)",
                               "projective dimensions are not strictly monotone, so the block fails "
                               "the Guichardet property"};
        out.push_back(std::move(p));
    }
    {
        QuiverPreset p;
        p.name = "sl3_singular_monomial";
        p.text = kSl3SingularMonomialText;
        p.annotations.expected_pd = {{"1", 1}, {"2", 2}, {"3", 2}};
        p.annotations.expected_gldim = 2;
        p.annotations.expected_resolutions = {{"3", {"P3", "P2", "P3"}}};
        p.annotations.expected_guichardet = false;
        p.annotations.notes = {"same quiver with both length-two relations monomial",
                               "the segment generated by vertices 1 and 3 is semisimple but not "
                               "extension full"};
        out.push_back(std::move(p));
    }
    return out;
}

const std::vector<QuiverPreset>& quiver_presets() {
    static const std::vector<QuiverPreset> presets = make_quiver_presets();
    return presets;
}

}  // namespace

const std::vector<std::string>& quiver_preset_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const QuiverPreset& p : quiver_presets()) n.push_back(p.name);
        return n;
    }();
    return names;
}

const std::vector<std::string>& lie_preset_names() {
    static const std::vector<std::string> names = {"abelian_n", "sl2_lie", "borel_sl2", "heisenberg",
                                                   "g_plus_g_sl2"};
    return names;
}

bool is_quiver_preset(const std::string& name) {
    for (const QuiverPreset& p : quiver_presets())
        if (p.name == name) return true;
    return false;
}

bool is_lie_preset(const std::string& name) {
    if (name == "sl2" || name == "sl2_lie" || name == "borel_sl2" || name == "heisenberg" ||
        name == "g_plus_g_sl2")
        return true;
    return name.rfind("abelian_", 0) == 0;
}

const QuiverPreset& quiver_preset(const std::string& name) {
    for (const QuiverPreset& p : quiver_presets())
        if (p.name == name) return p;
    throw std::invalid_argument("unknown preset '" + name + "'");
}

LiePreset lie_preset(const std::string& name_in) {
    std::string name = name_in == "sl2" ? "sl2_lie" : name_in;
    LiePreset p;
    p.name = name;
    if (name == "sl2_lie") {
        p.algebra = lie_sl2();
        p.notes = {"simple three-dimensional Lie algebra"};
    } else if (name == "borel_sl2") {
        p.algebra = lie_borel_sl2();
        p.notes = {"two-dimensional nonabelian Lie algebra; not unimodular"};
    } else if (name == "heisenberg") {
        p.algebra = lie_heisenberg();
        p.notes = {"three-dimensional Heisenberg algebra"};
    } else if (name == "g_plus_g_sl2") {
        p.algebra = lie_sl2_plus_sl2();
        p.notes = {"sl(2) + sl(2); models bimodules over sl(2)"};
    } else if (name.rfind("abelian_", 0) == 0) {
        int n = std::stoi(name.substr(8));
        if (n < 0 || n > 6) throw std::invalid_argument("abelian preset dimension out of range");
        p.algebra = lie_abelian(n);
        p.notes = {"abelian Lie algebra"};
    } else {
        throw std::invalid_argument("unknown preset '" + name + "'");
    }
    return p;
}

PathAlgebra build_preset_algebra(const QuiverPreset& p) {
    AlgebraDescription d = parse_algebra_text(p.text);
    return build_path_algebra(d.quiver, d.relations, d.convention);
}

std::vector<std::string> preset_self_test(const std::string& name) {
    std::vector<std::string> failures;
    if (is_quiver_preset(name)) {
        const QuiverPreset& p = quiver_preset(name);
        PathAlgebra pa = build_preset_algebra(p);
        const Algebra& a = pa.alg;
        int cap = default_degree_cap(a);
        for (auto& [label, expected] : p.annotations.expected_pd) {
            int v = a.vertex_by_label(label);
            PdResult pd = proj_dim(simple_module(a, v), cap);
            if (!pd.finite() || pd.value != expected)
                failures.push_back("pd L" + label + " != " + std::to_string(expected));
        }
        if (p.annotations.expected_gldim >= 0) {
            PdResult gd = global_dim(a, cap);
            if (!gd.finite() || gd.value != p.annotations.expected_gldim)
                failures.push_back("gl.dim != " + std::to_string(p.annotations.expected_gldim));
        }
        for (auto& [label, shape] : p.annotations.expected_resolutions) {
            int v = a.vertex_by_label(label);
            Resolution r = minimal_resolution(simple_module(a, v), cap);
            bool ok = r.status == ResolutionStatus::Finite &&
                      r.computed_terms() == static_cast<int>(shape.size());
            for (size_t d = 0; ok && d < shape.size(); ++d) {
                // each expected term is a single indecomposable "P<label>"
                std::vector<int> mult(a.num_vertices(), 0);
                mult[a.vertex_by_label(shape[d].substr(1))] = 1;
                if (r.mults[d] != mult) ok = false;
            }
            if (!ok) failures.push_back("resolution shape of L" + label + " differs");
        }
        GuichardetReport g = guichardet(a, cap);
        if (!g.certified || g.verdict != p.annotations.expected_guichardet)
            failures.push_back("Guichardet verdict differs");
    } else if (is_lie_preset(name)) {
        LiePreset p = lie_preset(name);
        try {
            p.algebra.validate();
        } catch (const std::exception& e) {
            failures.push_back(e.what());
        }
    } else {
        throw std::invalid_argument("unknown preset '" + name + "'");
    }
    return failures;
}

}  // namespace homquiver
