#include "homquiver/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <cstdlib>

#include "homquiver/algfile.hpp"
#include "homquiver/coxeter.hpp"
#include "homquiver/homology.hpp"
#include "homquiver/liecoh.hpp"
#include "homquiver/presets.hpp"
#include "homquiver/serre.hpp"

namespace homquiver {

namespace {

using nlohmann::ordered_json;

struct AlgebraSource {
    PathAlgebra pa;
    std::string origin;
};

AlgebraSource load_algebra(const std::string& path, const std::string& preset) {
    if (!path.empty() && !preset.empty())
        throw std::invalid_argument("give either a file path or --preset, not both");
    if (!path.empty()) {
        if (is_quiver_preset(path)) {  // convenience: bare preset name as path
            AlgebraDescription d = parse_algebra_text(quiver_preset(path).text);
            return {build_path_algebra(d.quiver, d.relations, d.convention), path};
        }
        std::string resolved = path;
        if (!std::ifstream(resolved).good() && std::ifstream(resolved + ".alg").good())
            resolved += ".alg";
        AlgebraDescription d = parse_algebra_file(resolved);
        return {build_path_algebra(d.quiver, d.relations, d.convention), path};
    }
    if (!preset.empty()) {
        const QuiverPreset& p = quiver_preset(preset);
        return {build_preset_algebra(p), preset};
    }
    throw std::invalid_argument("no algebra given: pass a file path or --preset <name>");
}

int effective_cap(int flag_cap, const Algebra& a) {
    if (flag_cap > 0) return flag_cap;
    if (const char* env = std::getenv("HOMQUIVER_CAP")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return default_degree_cap(a);
}

int parse_simple_label(const Algebra& a, std::string label) {
    if (!label.empty() && (label[0] == 'L' || label[0] == 'P')) label = label.substr(1);
    int v = a.vertex_by_label(label);
    if (v < 0 || a.idem[v] < 0) throw std::invalid_argument("unknown simple '" + label + "'");
    return v;
}

std::vector<int> parse_simple_list(const Algebra& a, const std::string& text) {
    std::vector<int> out;
    std::string cur;
    auto flush = [&] {
        if (!cur.empty()) out.push_back(parse_simple_label(a, cur));
        cur.clear();
    };
    for (char c : text) {
        if (c == ',' || c == ' ') flush();
        else cur += c;
    }
    flush();
    return out;
}

std::string pd_string(const PdResult& p) {
    switch (p.kind) {
        case PdResult::Kind::Finite: return std::to_string(p.value);
        case PdResult::Kind::Infinite: return "infinite";
        default: return "undetermined";
    }
}

ordered_json term_labels(const Algebra& a, const std::vector<int>& mults) {
    ordered_json arr = ordered_json::array();
    for (int v = 0; v < a.num_vertices(); ++v)
        for (int c = 0; c < mults[v]; ++c) arr.push_back("P" + a.vertex_labels[v]);
    return arr;
}

ordered_json layer_labels(const Algebra& a, const std::vector<int>& dims) {
    ordered_json arr = ordered_json::array();
    for (int v = 0; v < a.num_vertices(); ++v)
        for (int c = 0; c < dims[v]; ++c) arr.push_back("L" + a.vertex_labels[v]);
    return arr;
}

std::string segment_label(const Algebra& a, const std::vector<int>& seg) {
    std::string s = "{";
    for (size_t i = 0; i < seg.size(); ++i) {
        if (i) s += ",";
        s += "L" + a.vertex_labels[seg[i]];
    }
    return s + "}";
}

ordered_json fullness_json(const Algebra& a, const ComparisonReport& rep) {
    ordered_json out;
    out["simples"] = segment_label(a, rep.simples);
    out["verdict"] = rep.verdict == FullnessVerdict::ExtensionFull ? "extension-full"
                     : rep.verdict == FullnessVerdict::NotExtensionFull ? "not-extension-full"
                                                                        : "undetermined";
    out["certification"] = rep.certification == Certification::FullyCertified
                               ? "fully-certified"
                               : "certified-up-to-cap";
    out["checked_through_degree"] = rep.checked_through_degree;
    ordered_json entries = ordered_json::array();
    for (const PhiEntry& e : rep.entries) {
        ordered_json je;
        je["from"] = "L" + a.vertex_labels[e.from_vertex];
        je["to"] = "L" + a.vertex_labels[e.to_vertex];
        je["degree"] = e.degree;
        je["dim_sub"] = e.dim_sub;
        je["dim_ambient"] = e.dim_amb;
        je["rank"] = e.rank;
        je["injective"] = e.injective;
        je["surjective"] = e.surjective;
        entries.push_back(je);
    }
    out["entries"] = entries;
    if (!rep.note.empty()) out["note"] = rep.note;
    return out;
}

void cmd_basis(Report& rep, const AlgebraSource& src) {
    const Algebra& a = src.pa.alg;
    rep.results["algebra"] = src.origin;
    rep.results["dimension"] = a.dim();
    rep.results["saturation_length"] = src.pa.saturation_length;
    ordered_json arr = ordered_json::array();
    for (int k = 0; k < a.dim(); ++k) {
        ordered_json e;
        e["name"] = a.basis[k].name;
        e["source"] = a.vertex_labels[a.basis[k].src];
        e["target"] = a.vertex_labels[a.basis[k].tgt];
        e["length"] = a.basis[k].len;
        arr.push_back(e);
    }
    rep.results["basis"] = arr;
}

void cmd_projectives(Report& rep, const AlgebraSource& src) {
    const Algebra& a = src.pa.alg;
    rep.results["algebra"] = src.origin;
    ordered_json arr = ordered_json::array();
    for (int v : a.alive_vertices()) {
        Module p = projective_module(a, v);
        ordered_json e;
        e["projective"] = "P" + a.vertex_labels[v];
        e["dims"] = p.dims;
        e["total"] = p.total_dim();
        ordered_json layers = ordered_json::array();
        for (const auto& layer : loewy_series(p)) layers.push_back(layer_labels(a, layer));
        e["loewy"] = layers;
        arr.push_back(e);
    }
    rep.results["projectives"] = arr;
}

void cmd_resolve(Report& rep, const AlgebraSource& src, const std::string& simple, int cap) {
    const Algebra& a = src.pa.alg;
    int v = parse_simple_label(a, simple);
    Resolution r = minimal_resolution(simple_module(a, v), cap);
    rep.results["target"] = "L" + a.vertex_labels[v];
    ordered_json terms = ordered_json::array();
    for (const auto& m : r.mults) terms.push_back(term_labels(a, m));
    rep.results["terms"] = terms;
    switch (r.status) {
        case ResolutionStatus::Finite:
            rep.results["status"] = "finite";
            rep.results["length"] = r.length();
            break;
        case ResolutionStatus::CertifiedInfinitePeriodic:
            rep.results["status"] = "certified_infinite_periodic";
            rep.results["period"] = {{"from_syzygy", r.period_from}, {"to_syzygy", r.period_to}};
            break;
        case ResolutionStatus::TruncatedAtCap:
            rep.results["status"] = "truncated_at_cap";
            rep.statuses["resolution"] = "truncated";
            break;
    }
}

void cmd_ext(Report& rep, const AlgebraSource& src, const std::string& ms, const std::string& ns,
             int max_degree, int cap) {
    const Algebra& a = src.pa.alg;
    int mi = parse_simple_label(a, ms), ni = parse_simple_label(a, ns);
    Resolution r = minimal_resolution(simple_module(a, mi), cap);
    Module n = simple_module(a, ni);
    rep.results["from"] = "L" + a.vertex_labels[mi];
    rep.results["to"] = "L" + a.vertex_labels[ni];
    ordered_json dims = ordered_json::array();
    bool undetermined = false;
    std::vector<int> hom_dims =
        ext_dims_hom_complex(r, n, std::min(max_degree, std::max(0, r.computed_terms() - 1)));
    for (int d = 0; d <= max_degree; ++d) {
        bool hom_ok = r.status == ResolutionStatus::Finite || d + 1 < r.computed_terms();
        if (hom_ok) {
            dims.push_back(d < static_cast<int>(hom_dims.size()) ? hom_dims[d] : 0);
        } else if (r.status == ResolutionStatus::CertifiedInfinitePeriodic) {
            dims.push_back(multiplicity_at(r, d, ni));
        } else {
            dims.push_back(nullptr);
            undetermined = true;
        }
    }
    rep.results["dims_by_degree"] = dims;
    if (undetermined) rep.statuses["ext"] = "undetermined beyond cap";
}

void cmd_pd(Report& rep, const AlgebraSource& src, int cap) {
    const Algebra& a = src.pa.alg;
    ordered_json table;
    for (int v : a.alive_vertices())
        table["L" + a.vertex_labels[v]] = pd_string(proj_dim(simple_module(a, v), cap));
    rep.results["pd"] = table;
}

void cmd_gldim(Report& rep, const AlgebraSource& src, int cap) {
    PdResult g = global_dim(src.pa.alg, cap);
    rep.results["global_dimension"] = pd_string(g);
    if (g.kind == PdResult::Kind::Undetermined) rep.statuses["global_dimension"] = "undetermined";
}

void cmd_ext_quiver(Report& rep, const AlgebraSource& src, int max_degree, int cap) {
    const Algebra& a = src.pa.alg;
    ExtTable t = ext_table(a, max_degree, cap);
    ordered_json table;
    for (int i : t.vertices) {
        ordered_json row;
        for (int j : t.vertices) {
            ordered_json dims = ordered_json::array();
            for (int d = 0; d <= max_degree; ++d) {
                auto e = t.entry(i, j, d);
                if (e) dims.push_back(*e);
                else dims.push_back(nullptr);
            }
            row["L" + a.vertex_labels[j]] = dims;
        }
        table["L" + a.vertex_labels[i]] = row;
    }
    rep.results["max_degree"] = max_degree;
    rep.results["ext_quiver"] = table;
}

void cmd_serre(Report& rep, const AlgebraSource& src, const std::string& simples, bool check_fullness,
               int min_degree, int cap) {
    const Algebra& a = src.pa.alg;
    std::vector<int> s = parse_simple_list(a, simples);
    SerreSubcat sub = serre_subcategory(a, s);
    rep.results["simples"] = segment_label(a, sub.simples);
    rep.results["stabilization_exponent"] = sub.stabilization_exponent;
    rep.results["quotient_dimension"] = sub.quotient->dim();
    ordered_json basis = ordered_json::array();
    for (const BasisElem& b : sub.quotient->basis) basis.push_back(b.name);
    rep.results["quotient_basis"] = basis;
    if (check_fullness) {
        ComparisonReport fr = extension_fullness(a, s, cap, min_degree);
        rep.results["fullness"] = fullness_json(a, fr);
        if (fr.verdict == FullnessVerdict::Undetermined)
            rep.statuses["fullness"] = "certified-up-to-cap";
    }
}

void cmd_initial_segments(Report& rep, const AlgebraSource& src, int cap) {
    const Algebra& a = src.pa.alg;
    ordered_json arr = ordered_json::array();
    for (const auto& seg : initial_segments(a, cap)) arr.push_back(segment_label(a, seg));
    rep.results["initial_segments"] = arr;
}

void cmd_guichardet(Report& rep, const AlgebraSource& src, int cap) {
    const Algebra& a = src.pa.alg;
    GuichardetReport g = guichardet(a, cap);
    rep.results["guichardet"] = g.verdict;
    rep.results["certified"] = g.certified;
    ordered_json segs = ordered_json::array();
    for (size_t i = 0; i < g.segments.size(); ++i) {
        ordered_json e;
        e["segment"] = segment_label(a, g.segments[i]);
        const ComparisonReport& fr = g.reports[i];
        e["verdict"] = fr.verdict == FullnessVerdict::ExtensionFull ? "extension-full"
                       : fr.verdict == FullnessVerdict::NotExtensionFull ? "not-extension-full"
                                                                         : "undetermined";
        if (fr.verdict == FullnessVerdict::NotExtensionFull) {
            for (const PhiEntry& en : fr.entries)
                if (en.dim_sub != en.dim_amb || !en.iso()) {
                    e["fails_at"] = {{"from", "L" + a.vertex_labels[en.from_vertex]},
                                     {"to", "L" + a.vertex_labels[en.to_vertex]},
                                     {"degree", en.degree},
                                     {"dim_sub", en.dim_sub},
                                     {"dim_ambient", en.dim_amb}};
                    break;
                }
        }
        segs.push_back(e);
    }
    rep.results["segments"] = segs;
    if (!g.certified) rep.statuses["guichardet"] = "certified-up-to-cap";
}

void cmd_coxeter(Report& rep, const std::string& type, const std::string& eval,
                 const std::string& parabolic, const std::string& element,
                 int base_pd_flag, bool has_base_pd) {
    WeylGroup w = build_weyl_group(type);
    rep.results["type"] = w.type;
    rep.results["order"] = w.order;
    rep.results["longest_length"] = w.length[w.w0];
    if (eval == "info") {
        rep.results["dim_g"] = w.dim_g;
        rep.results["dim_h"] = w.dim_h;
        rep.results["positive_roots"] = w.num_positive_roots;
        ordered_json a_values;
        for (int u = 0; u < w.order; ++u) a_values[w.word_name(u)] = w.a_value[u];
        rep.results["a_function"] = a_values;
    } else if (eval == "block-invariants") {
        std::vector<int> j = parse_generator_set(w, parabolic);
        BlockInvariants b = singular_block_invariants(w, j);
        rep.results["parabolic"] = parabolic.empty() ? "none" : parabolic;
        rep.results["pd_simple_verma"] = b.pd_simple_verma;
        rep.results["global_dimension"] = b.global_dimension;
        rep.results["pd_dominant_simple"] = b.pd_dominant_simple;
    } else if (eval == "pd-regular") {
        int e = parse_element(w, element);
        rep.results["element"] = w.word_name(e);
        rep.results["pd_simple"] = regular_block_pd_simple(w, e);
    } else if (eval == "thick-pd") {
        int e = parse_element(w, element);
        ThickCategoryPd t = thick_category_pd(
            w, e, has_base_pd ? std::optional<int>(base_pd_flag) : std::nullopt);
        rep.results["element"] = w.word_name(e);
        rep.results["pd_simple"] = t.pd_simple;
        rep.results["pd_verma"] = t.pd_verma;
        if (t.shifted_pd) rep.results["shifted_pd"] = *t.shifted_pd;
        rep.results["global_dimension"] = t.global_dimension;
        rep.results["min_pd"] = t.min_pd;
    } else if (eval == "coideals") {
        std::vector<uint32_t> cs = coideals(w);
        rep.results["count"] = static_cast<int>(cs.size());
        ordered_json arr = ordered_json::array();
        for (uint32_t mask : cs) {
            ordered_json one = ordered_json::array();
            for (int u = 0; u < w.order; ++u)
                if (mask & (1u << u)) one.push_back(w.word_name(u));
            arr.push_back(one);
        }
        rep.results["coideals"] = arr;
    } else {
        throw std::invalid_argument("unknown eval '" + eval + "'");
    }
}

void cmd_liecoh(Report& rep, const std::string& preset, const std::string& file,
                const std::string& module_name, int degree, bool has_degree,
                const std::string& check) {
    LieAlgebra a;
    if (!preset.empty() && !file.empty())
        throw std::invalid_argument("give either --preset or --file, not both");
    if (!preset.empty()) a = lie_preset(preset).algebra;
    else if (!file.empty()) a = parse_lie_file(file);
    else throw std::invalid_argument("no Lie algebra given: pass --preset or --file");

    LieModule v;
    if (module_name == "trivial") v = trivial_module(a);
    else if (module_name == "adjoint") v = adjoint_module(a);
    else throw std::invalid_argument("unknown module '" + module_name + "' (trivial|adjoint)");

    rep.results["algebra"] = a.name;
    rep.results["dim"] = a.dim;
    rep.results["unimodular"] = a.is_unimodular();
    rep.results["module"] = module_name;
    if (has_degree) {
        rep.results["degree"] = degree;
        rep.results["cohomology_dim"] = ce_cohomology(a, v, degree).dimension;
    } else {
        ordered_json dims = ordered_json::array();
        for (int d = 0; d <= a.dim; ++d) dims.push_back(ce_cohomology(a, v, d).dimension);
        rep.results["cohomology_dims"] = dims;
    }
    if (check == "top" || check == "all") {
        TopDegreeReport t = top_degree_check(a, v);
        ordered_json jt;
        jt["applicable"] = t.applicable;
        if (t.applicable) {
            jt["top_cohomology"] = t.lhs;
            jt["invariant_functionals"] = t.rhs;
            jt["pass"] = t.pass;
            if (!t.pass) rep.exit_code = 1;
        } else {
            jt["note"] = t.note;
            rep.notes.push_back("top-degree check " + t.note);
        }
        rep.results["top_degree_check"] = jt;
    }
    if (check == "poincare" || check == "all") {
        PoincareReport p = poincare_check(a, v);
        ordered_json jp;
        jp["applicable"] = p.applicable;
        if (p.applicable) {
            jp["cohomology"] = p.cohomology;
            jp["homology"] = p.homology;
            jp["pass"] = p.pass;
            if (!p.pass) rep.exit_code = 1;
        } else {
            jp["note"] = p.note;
            rep.notes.push_back("duality check " + p.note);
        }
        rep.results["poincare_check"] = jp;
    }
}

void cmd_preset(Report& rep, const std::string& name, bool self_test, bool dump) {
    if (is_quiver_preset(name)) {
        const QuiverPreset& p = quiver_preset(name);
        rep.results["preset"] = p.name;
        rep.results["kind"] = "quiver";
        PathAlgebra pa = build_preset_algebra(p);
        rep.results["dimension"] = pa.dim();
        for (const std::string& n : p.annotations.notes) rep.notes.push_back(n);
        if (dump) rep.results["text"] = p.text;
    } else {
        LiePreset p = lie_preset(name);
        rep.results["preset"] = p.name;
        rep.results["kind"] = "lie";
        rep.results["dimension"] = p.algebra.dim;
        for (const std::string& n : p.notes) rep.notes.push_back(n);
    }
    if (self_test) {
        std::vector<std::string> failures = preset_self_test(name);
        rep.results["self_test"] = failures.empty() ? "pass" : "fail";
        if (!failures.empty()) {
            rep.results["failures"] = failures;
            rep.exit_code = 1;
        }
    }
}

void cmd_cross_validate(Report& rep, const std::string& name, int flag_cap) {
    const QuiverPreset& p = quiver_preset(name);
    if (!p.annotations.coxeter)
        throw std::invalid_argument("preset '" + name + "' carries no Weyl group annotation");
    const CoxeterAnnotation& cx = *p.annotations.coxeter;
    WeylGroup w = build_weyl_group(cx.type);
    BlockInvariants predicted = singular_block_invariants(w, cx.parabolic);

    PathAlgebra pa = build_preset_algebra(p);
    const Algebra& a = pa.alg;
    int cap = effective_cap(flag_cap, a);
    auto pd_of = [&](const std::string& label) {
        PdResult r = proj_dim(simple_module(a, a.vertex_by_label(label)), cap);
        if (!r.finite()) throw std::runtime_error("pd undetermined for L" + label);
        return r.value;
    };
    int engine_verma = pd_of(cx.verma_vertex);
    PdResult gd = global_dim(a, cap);
    if (!gd.finite()) throw std::runtime_error("global dimension undetermined");

    rep.results["preset"] = name;
    rep.results["weyl_type"] = cx.type;
    rep.results["predicted"] = {{"pd_simple_verma", predicted.pd_simple_verma},
                                {"global_dimension", predicted.global_dimension},
                                {"pd_dominant_simple", predicted.pd_dominant_simple}};
    ordered_json computed;
    computed["pd_simple_verma"] = engine_verma;
    computed["global_dimension"] = gd.value;
    bool match = engine_verma == predicted.pd_simple_verma && gd.value == predicted.global_dimension;
    ordered_json dom = ordered_json::array();
    for (const std::string& label : cx.dominant_vertices) {
        int v = pd_of(label);
        dom.push_back({{"vertex", "L" + label}, {"pd", v}});
        if (v != predicted.pd_dominant_simple) match = false;
    }
    computed["pd_dominant_candidates"] = dom;
    rep.results["computed"] = computed;
    rep.results["match"] = match;
    if (!match) {
        rep.statuses["cross_validate"] = "mismatch";
        rep.exit_code = 1;
    }
}

}  // namespace

Report run_command(const std::vector<std::string>& args) {
    Report rep;
    rep.command = args;

    CLI::App app{"homological invariants of finite-dimensional quiver algebras"};
    app.require_subcommand(0, 1);

    bool json_flag = false;
    app.add_flag("--json", json_flag, "machine-readable output");
    int cap_flag = 0;

    std::string src_path, src_preset, simple_arg, from_arg, to_arg, simples_arg;
    int max_degree = -1, min_degree = -1;
    bool check_fullness = false;

    auto add_source = [&](CLI::App* sub, bool positional_required) {
        sub->add_option("algebra", src_path, "algebra description file (or preset name)")
            ->required(positional_required);
        sub->add_option("--preset", src_preset, "bundled preset name");
        sub->add_option("--cap", cap_flag, "degree cap override");
    };

    CLI::App* basis = app.add_subcommand("basis", "normal-form basis of the algebra");
    add_source(basis, false);
    CLI::App* projectives = app.add_subcommand("projectives", "indecomposable projectives");
    add_source(projectives, false);
    CLI::App* resolve = app.add_subcommand("resolve", "minimal projective resolution of a simple");
    resolve->add_option("simple", simple_arg, "simple module, e.g. L3")->required();
    add_source(resolve, false);
    CLI::App* ext = app.add_subcommand("ext", "Ext dimensions between two simples");
    ext->add_option("from", from_arg)->required();
    ext->add_option("to", to_arg)->required();
    ext->add_option("--max", max_degree, "maximal degree");
    add_source(ext, false);
    CLI::App* pd = app.add_subcommand("pd", "projective dimensions of the simples");
    add_source(pd, false);
    CLI::App* gldim = app.add_subcommand("gldim", "global dimension");
    add_source(gldim, false);
    CLI::App* extq = app.add_subcommand("ext-quiver", "Ext table on simples");
    extq->add_option("--max", max_degree, "maximal degree");
    add_source(extq, false);
    CLI::App* serre = app.add_subcommand("serre", "Serre subcategory generated by simples");
    serre->add_option("--simples", simples_arg, "comma-separated vertex labels")->required();
    serre->add_flag("--check-fullness", check_fullness, "run the extension-fullness comparison");
    serre->add_option("--min-degree", min_degree, "check at least through this degree");
    add_source(serre, false);
    CLI::App* initseg = app.add_subcommand("initial-segments", "initial segments of the algebra");
    add_source(initseg, false);
    CLI::App* guich = app.add_subcommand("guichardet", "Guichardet verdict over all initial segments");
    add_source(guich, false);

    std::string cox_type, cox_eval = "info", cox_parabolic, cox_element = "e";
    int base_pd = 0;
    CLI::App* cox = app.add_subcommand("coxeter", "Weyl group data and closed-form predictions");
    cox->add_option("--type", cox_type, "A1..A5, A1xA1, B2, G2")->required();
    cox->add_option("--eval", cox_eval, "info|block-invariants|pd-regular|thick-pd|coideals");
    cox->add_option("--parabolic", cox_parabolic, "stabilizer generators, e.g. s1,s2");
    cox->add_option("--element", cox_element, "group element word, e.g. s1s2");
    CLI::Option* base_pd_opt = cox->add_option("--base-pd", base_pd, "finite pd in the base category");

    std::string lie_preset_name, lie_file, lie_module = "trivial", lie_check = "none";
    int lie_degree = 0;
    CLI::App* lie = app.add_subcommand("liecoh", "Lie algebra cohomology");
    lie->add_option("--preset", lie_preset_name, "abelian_n, sl2_lie, borel_sl2, heisenberg, g_plus_g_sl2");
    lie->add_option("--file", lie_file, "structure constants file");
    lie->add_option("--module", lie_module, "trivial|adjoint");
    CLI::Option* lie_degree_opt = lie->add_option("--degree", lie_degree, "single degree to compute");
    lie->add_option("--check", lie_check, "top|poincare|all|none");

    std::string preset_name;
    bool self_test = false, dump = false;
    CLI::App* preset = app.add_subcommand("preset", "bundled presets");
    preset->add_option("name", preset_name, "preset name")->required();
    preset->add_flag("--self-test", self_test, "re-derive every annotation");
    preset->add_flag("--dump", dump, "include the description text");

    std::string cv_name;
    CLI::App* crossv = app.add_subcommand("cross-validate", "closed formulas against the quiver engine");
    crossv->add_option("preset", cv_name, "annotated preset name")->required();
    crossv->add_option("--cap", cap_flag, "degree cap override");

    // global flags remain valid after a subcommand name
    for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; })) sub->fallthrough();

    std::vector<const char*> argv;
    argv.push_back("homquiver");
    for (const std::string& s : args) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        rep.results["help"] = app.help();
        return rep;
    } catch (const CLI::ParseError& e) {
        rep.exit_code = 2;
        rep.statuses["usage"] = e.what();
        return rep;
    }
    if (app.get_subcommands().empty()) {
        rep.exit_code = 2;
        rep.statuses["usage"] = "a subcommand is required";
        return rep;
    }

    try {
        if (basis->parsed() || projectives->parsed() || resolve->parsed() || ext->parsed() ||
            pd->parsed() || gldim->parsed() || extq->parsed() || serre->parsed() ||
            initseg->parsed() || guich->parsed()) {
            AlgebraSource src = load_algebra(src_path, src_preset);
            int cap = effective_cap(cap_flag, src.pa.alg);
            int maxd = max_degree >= 0 ? max_degree : default_degree_cap(src.pa.alg);
            if (basis->parsed()) cmd_basis(rep, src);
            else if (projectives->parsed()) cmd_projectives(rep, src);
            else if (resolve->parsed()) cmd_resolve(rep, src, simple_arg, cap);
            else if (ext->parsed()) cmd_ext(rep, src, from_arg, to_arg, maxd, cap);
            else if (pd->parsed()) cmd_pd(rep, src, cap);
            else if (gldim->parsed()) cmd_gldim(rep, src, cap);
            else if (extq->parsed()) cmd_ext_quiver(rep, src, maxd, cap);
            else if (serre->parsed()) cmd_serre(rep, src, simples_arg, check_fullness, min_degree, cap);
            else if (initseg->parsed()) cmd_initial_segments(rep, src, cap);
            else if (guich->parsed()) cmd_guichardet(rep, src, cap);
        } else if (cox->parsed()) {
            cmd_coxeter(rep, cox_type, cox_eval, cox_parabolic, cox_element, base_pd,
                        base_pd_opt->count() > 0);
        } else if (lie->parsed()) {
            cmd_liecoh(rep, lie_preset_name, lie_file, lie_module, lie_degree,
                       lie_degree_opt->count() > 0, lie_check);
        } else if (preset->parsed()) {
            cmd_preset(rep, preset_name, self_test, dump);
        } else if (crossv->parsed()) {
            cmd_cross_validate(rep, cv_name, cap_flag);
        }
    } catch (const std::exception& e) {
        rep.exit_code = 1;
        rep.statuses["error"] = e.what();
    }
    (void)json_flag;
    return rep;
}

}  // namespace homquiver
