#include "generators.hpp"

#include <cassert>

#include "homquiver/cli.hpp"
#include "homquiver/homology.hpp"
#include "homquiver/presets.hpp"
#include "homquiver/serre.hpp"

namespace homquiver::testgen {

namespace {

int pick(Rng& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<uint64_t>(hi - lo + 1));
}

const std::vector<PathAlgebra>& preset_algebras() {
    static const std::vector<PathAlgebra> algebras = [] {
        std::vector<PathAlgebra> out;
        for (const std::string& name : quiver_preset_names())
            out.push_back(build_preset_algebra(quiver_preset(name)));
        return out;
    }();
    return algebras;
}

}  // namespace

Module random_module(const Algebra& a, Rng& rng, int max_copies, int max_seeds) {
    for (int attempt = 0; attempt < 32; ++attempt) {
        std::vector<Module> parts;
        for (int v : a.alive_vertices()) {
            int copies = pick(rng, 0, max_copies);
            for (int c = 0; c < copies; ++c) parts.push_back(projective_module(a, v));
        }
        if (parts.empty()) continue;
        DirectSum ds = direct_sum(parts);
        Module p = ds.sum;

        auto rad = radical_columns(p);
        std::vector<Vec> seeds;
        std::vector<int> seed_vertices;
        int nseeds = pick(rng, 0, max_seeds);
        for (int s = 0; s < nseeds; ++s) {
            int v = pick(rng, 0, a.num_vertices() - 1);
            if (rad[v].cols() == 0) continue;
            Vec x(p.dims[v]);
            for (int c = 0; c < rad[v].cols(); ++c) {
                int coeff = pick(rng, -2, 2);
                if (coeff == 0) continue;
                for (int i = 0; i < p.dims[v]; ++i) x[i] += coeff * rad[v](i, c);
            }
            if (!vec_is_zero(x)) {
                seeds.push_back(std::move(x));
                seed_vertices.push_back(v);
            }
        }
        std::vector<Mat> sub = generated_submodule(p, seeds, seed_vertices);
        SubQuot q = quotient_module(p, sub);
        if (!q.mod.is_zero()) return q.mod;
    }
    return simple_module(a, a.alive_vertices()[0]);
}

Mat random_invertible(Rng& rng, int n) {
    // unitriangular times unitriangular with shuffled signs stays invertible
    Mat l = Mat::identity(n), u = Mat::identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) l(i, j) = pick(rng, -2, 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) u(i, j) = pick(rng, -2, 2);
    for (int i = 0; i < n; ++i)
        if (pick(rng, 0, 1)) u(i, i) = -1;
    return l * u;
}

namespace {

// irreducible sl2 module of dimension m with integer matrices
LieModule sl2_irrep(const LieAlgebra& a, int m) {
    LieModule v;
    v.alg = &a;
    v.dim = m;
    Mat e(m, m), f(m, m), h(m, m);
    for (int j = 0; j < m; ++j) {
        h(j, j) = m - 1 - 2 * j;
        if (j + 1 < m) f(j + 1, j) = 1;
        if (j > 0) e(j - 1, j) = j * (m - j);
    }
    v.rho = {e, f, h};
    return v;
}

Mat kron(const Mat& x, const Mat& y) {
    Mat out(x.rows() * y.rows(), x.cols() * y.cols());
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j) {
            if (x(i, j) == 0) continue;
            for (int k = 0; k < y.rows(); ++k)
                for (int l = 0; l < y.cols(); ++l)
                    out(i * y.rows() + k, j * y.cols() + l) = x(i, j) * y(k, l);
        }
    return out;
}

LieModule lie_block(const LieAlgebra& a, const std::string& preset, Rng& rng, int dim_budget) {
    LieModule v;
    v.alg = &a;
    if (preset.rfind("abelian_", 0) == 0) {
        int n = pick(rng, 1, dim_budget);
        Mat x(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) x(i, j) = pick(rng, -2, 2);
        // commuting family: rational polynomials in one matrix
        v.dim = n;
        for (int i = 0; i < a.dim; ++i) {
            Mat m = Mat::identity(n).scaled(pick(rng, -2, 2));
            m = m + x.scaled(pick(rng, -2, 2));
            m = m + (x * x).scaled(ratio(pick(rng, -1, 1), 2));
            v.rho.push_back(m);
        }
        if (a.dim == 0) v.rho.clear();
        return v;
    }
    if (preset == "sl2_lie") return sl2_irrep(a, pick(rng, 1, dim_budget));
    if (preset == "borel_sl2") {
        if (dim_budget >= 2 && pick(rng, 0, 1)) {
            // indecomposable 2-dim: h = diag(l+2, l), e = mu E12
            Rat l = pick(rng, -3, 3), mu = pick(rng, 1, 3);
            Mat h(2, 2), e(2, 2);
            h(0, 0) = l + 2;
            h(1, 1) = l;
            e(0, 1) = mu;
            v.dim = 2;
            v.rho = {h, e};
        } else {
            Mat h(1, 1), e(1, 1);
            h(0, 0) = pick(rng, -3, 3);
            v.dim = 1;
            v.rho = {h, e};
        }
        return v;
    }
    if (preset == "heisenberg") {
        if (dim_budget >= 3 && pick(rng, 0, 1)) {
            Rat p = pick(rng, 1, 3), q = pick(rng, 1, 3);
            Mat x(3, 3), y(3, 3), z(3, 3);
            x(0, 1) = p;
            y(1, 2) = q;
            z(0, 2) = p * q;
            v.dim = 3;
            v.rho = {x, y, z};
        } else {
            Mat x(1, 1), y(1, 1), z(1, 1);
            x(0, 0) = pick(rng, -3, 3);
            y(0, 0) = pick(rng, -3, 3);
            v.dim = 1;
            v.rho = {x, y, z};
        }
        return v;
    }
    if (preset == "g_plus_g_sl2") {
        int m1 = pick(rng, 1, std::min(2, dim_budget));
        int m2 = pick(rng, 1, std::max(1, dim_budget / m1));
        LieAlgebra sl2 = lie_sl2();
        LieModule v1 = sl2_irrep(sl2, m1), v2 = sl2_irrep(sl2, m2);
        v.dim = m1 * m2;
        Mat id1 = Mat::identity(m1), id2 = Mat::identity(m2);
        for (int i = 0; i < 3; ++i) v.rho.push_back(kron(v1.rho[i], id2));
        for (int i = 0; i < 3; ++i) v.rho.push_back(kron(id1, v2.rho[i]));
        return v;
    }
    throw std::invalid_argument("lie_block: unknown preset " + preset);
}

}  // namespace

LieModule random_lie_module(const LieAlgebra& a, const std::string& preset_name, Rng& rng,
                            int max_dim) {
    LieModule v = lie_block(a, preset_name, rng, max_dim);
    while (v.dim < max_dim && pick(rng, 0, 1)) {
        LieModule w = lie_block(a, preset_name, rng, max_dim - v.dim);
        if (v.dim + w.dim > max_dim) break;
        v = direct_sum(v, w);
    }
    v = conjugate_module(v, random_invertible(rng, v.dim));
    v.validate();
    return v;
}

SuiteResult suite_resolution_invariants(uint64_t seed, int cases) {
    SuiteResult out{"resolution complex/exactness/minimality", 0, 0, {}};
    Rng rng(seed);
    for (int t = 0; t < cases; ++t) {
        const Algebra& a = preset_algebras()[t % preset_algebras().size()].alg;
        Module m = random_module(a, rng);
        Resolution r = minimal_resolution(m, default_degree_cap(a));
        ++out.cases;
        if (r.status != ResolutionStatus::Finite || !verify_resolution(r)) {
            ++out.failures;
            out.messages.push_back("resolution invariants failed at case " + std::to_string(t));
        }
    }
    return out;
}

SuiteResult suite_ext_dual_route(uint64_t seed, int cases) {
    SuiteResult out{"minimal multiplicities match hom-complex ext", 0, 0, {}};
    Rng rng(seed);
    for (int t = 0; t < cases; ++t) {
        const Algebra& a = preset_algebras()[t % preset_algebras().size()].alg;
        Module m = random_module(a, rng);
        Resolution r = minimal_resolution(m, default_degree_cap(a));
        if (r.status != ResolutionStatus::Finite) continue;
        int top = r.length() + 1;
        bool ok = true;
        for (int j : a.alive_vertices())
            if (ext_dims_hom_complex(r, simple_module(a, j), top) !=
                ext_dims_multiplicity(r, j, top))
                ok = false;
        ++out.cases;
        if (!ok) {
            ++out.failures;
            out.messages.push_back("route mismatch at case " + std::to_string(t));
        }
    }
    return out;
}

SuiteResult suite_ext_additivity(uint64_t seed, int cases) {
    SuiteResult out{"ext additivity in direct sums", 0, 0, {}};
    Rng rng(seed);
    for (int t = 0; t < cases; ++t) {
        const Algebra& a = preset_algebras()[t % preset_algebras().size()].alg;
        int cap = default_degree_cap(a);
        Module m = random_module(a, rng), n = random_module(a, rng);
        Module l = simple_module(a, pick(rng, 0, a.num_vertices() - 1));
        DirectSum ds = direct_sum({m, n});
        bool ok = true;
        for (int d = 0; d <= 3; ++d) {
            if (ext_dim(ds.sum, l, d, cap) != ext_dim(m, l, d, cap) + ext_dim(n, l, d, cap))
                ok = false;
            if (ext_dim(l, ds.sum, d, cap) != ext_dim(l, m, d, cap) + ext_dim(l, n, d, cap))
                ok = false;
        }
        ++out.cases;
        if (!ok) {
            ++out.failures;
            out.messages.push_back("additivity failed at case " + std::to_string(t));
        }
    }
    return out;
}

SuiteResult suite_pd_inequalities(uint64_t seed, int cases) {
    SuiteResult out{"pd inequalities on radical-filtration sequences", 0, 0, {}};
    Rng rng(seed);
    for (int t = 0; t < cases; ++t) {
        const Algebra& a = preset_algebras()[t % preset_algebras().size()].alg;
        int cap = default_degree_cap(a);
        Module m = random_module(a, rng);
        // submodule rad^k M for random k >= 1
        int k = pick(rng, 1, 3);
        std::vector<Mat> cols(a.num_vertices());
        for (int v = 0; v < a.num_vertices(); ++v) cols[v] = Mat::identity(m.dims[v]);
        for (int step = 0; step < k; ++step) {
            std::vector<Subspace> next;
            for (int v = 0; v < a.num_vertices(); ++v) next.emplace_back(m.dims[v]);
            for (int b = 0; b < a.dim(); ++b) {
                if (a.basis[b].len == 0) continue;
                next[a.basis[b].tgt].add_columns(m.act[b] * cols[a.basis[b].src]);
            }
            for (int v = 0; v < a.num_vertices(); ++v) cols[v] = next[v].basis_matrix();
        }
        SubQuot sub = submodule(m, cols);
        SubQuot quot = quotient_module(m, cols);
        if (sub.mod.is_zero() || quot.mod.is_zero()) continue;
        Module kmod = simple_module(a, pick(rng, 0, a.num_vertices() - 1));
        LesReport rep = les_dimension_check(sub.map, quot.map, kmod, 6, cap);
        ++out.cases;
        if (!(rep.exact && rep.alternating_sum_ok && rep.pd_sub_ok && rep.pd_quot_ok &&
              rep.certified)) {
            ++out.failures;
            out.messages.push_back("les check failed at case " + std::to_string(t));
        }
    }
    return out;
}

SuiteResult suite_phi_low_degrees(uint64_t seed, int cases) {
    SuiteResult out{"phi^0 and phi^1 are isomorphisms for Serre subsets", 0, 0, {}};
    Rng rng(seed);
    for (int t = 0; t < cases; ++t) {
        const Algebra& a = preset_algebras()[t % preset_algebras().size()].alg;
        int cap = default_degree_cap(a);
        std::vector<int> verts = a.alive_vertices();
        std::vector<int> s;
        for (int v : verts)
            if (pick(rng, 0, 1)) s.push_back(v);
        if (s.empty()) s.push_back(verts[pick(rng, 0, static_cast<int>(verts.size()) - 1)]);
        SerreSubcat sub = serre_subcategory(a, s);
        int i = s[pick(rng, 0, static_cast<int>(s.size()) - 1)];
        int j = s[pick(rng, 0, static_cast<int>(s.size()) - 1)];
        bool ok = true;
        for (int d : {0, 1}) {
            PhiEntry e = comparison_map(sub, simple_module(*sub.quotient, i),
                                        simple_module(*sub.quotient, j), d, cap);
            if (!e.injective || !e.surjective) ok = false;
        }
        ++out.cases;
        if (!ok) {
            ++out.failures;
            out.messages.push_back("phi failed at case " + std::to_string(t));
        }
    }
    return out;
}

SuiteResult suite_report_determinism(int repeats) {
    SuiteResult out{"byte-identical machine reports across reruns", 0, 0, {}};
    std::vector<std::vector<std::string>> commands = {
        {"guichardet", "--preset", "sl3_singular"},
        {"ext-quiver", "--max", "3", "--preset", "sl3_singular_monomial"},
        {"serre", "--simples", "1,2", "--check-fullness", "--preset", "sl3_singular"},
        {"coxeter", "--type", "B2", "--eval", "coideals"},
        {"liecoh", "--preset", "g_plus_g_sl2", "--check", "all"},
        {"pd", "--preset", "sl2_principal"},
    };
    for (const auto& cmd : commands) {
        std::string base = render_machine(run_command(cmd));
        for (int r = 0; r < repeats; ++r) {
            ++out.cases;
            if (render_machine(run_command(cmd)) != base) {
                ++out.failures;
                out.messages.push_back("nondeterministic output for " + cmd[0]);
            }
        }
    }
    return out;
}

SuiteResult suite_full_embedding_ext_agreement(uint64_t seed, int cases) {
    SuiteResult out{"full embeddings preserve ext dims on finite-length pairs", 0, 0, {}};
    Rng rng(seed);
    // extension-full pairs: the subcategory of vertices {1,2} in the singular
    // block and {1} in the sl2 block
    const Algebra& sing = preset_algebras()[1].alg;
    SerreSubcat sub = serre_subcategory(sing, {0, 1});
    int cap = default_degree_cap(sing);
    for (int t = 0; t < cases; ++t) {
        Module m = random_module(*sub.quotient, rng, 1, 2);
        Module n = random_module(*sub.quotient, rng, 1, 2);
        Resolution rq = minimal_resolution(m, cap);
        Resolution ra = minimal_resolution(restrict_to_ambient(sub, m), cap);
        if (rq.status != ResolutionStatus::Finite || ra.status != ResolutionStatus::Finite)
            continue;
        int top = std::max(rq.length(), ra.length()) + 1;
        auto sub_dims = ext_dims_hom_complex(rq, n, top);
        auto amb_dims = ext_dims_hom_complex(ra, restrict_to_ambient(sub, n), top);
        ++out.cases;
        if (sub_dims != amb_dims) {
            ++out.failures;
            out.messages.push_back("ext dims diverge at case " + std::to_string(t));
        }
    }
    return out;
}

SuiteResult suite_lie_top_degree(uint64_t seed, int cases_per_algebra) {
    SuiteResult out{"top-degree identity on random rational modules", 0, 0, {}};
    Rng rng(seed);
    for (const char* cname : {"abelian_2", "abelian_3", "sl2_lie", "heisenberg", "g_plus_g_sl2",
                              "borel_sl2"}) {
        std::string name = cname;
        LieAlgebra a = lie_preset(name).algebra;
        for (int t = 0; t < cases_per_algebra; ++t) {
            LieModule v = random_lie_module(a, name, rng);
            TopDegreeReport rep = top_degree_check(a, v);
            if (!rep.applicable) {
                // the check skips non-unimodular algebras
                break;
            }
            ++out.cases;
            if (!rep.pass) {
                ++out.failures;
                out.messages.push_back("top-degree failed for " + name + " case " +
                                       std::to_string(t));
            }
        }
    }
    return out;
}

}  // namespace homquiver::testgen
