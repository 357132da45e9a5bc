#include "homquiver/liecoh.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <stdexcept>

namespace homquiver {

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
    Vec r(dim);
    for (int i = 0; i < dim; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < dim; ++j) {
            if (y[j] == 0) continue;
            Rat f = x[i] * y[j];
            for (int k = 0; k < dim; ++k) r[k] += f * c[i][j][k];
        }
    }
    return r;
}

Mat LieAlgebra::ad(int i) const {
    Mat m(dim, dim);
    for (int j = 0; j < dim; ++j)
        for (int k = 0; k < dim; ++k) m(k, j) = c[i][j][k];
    return m;
}

bool LieAlgebra::is_unimodular() const {
    for (int i = 0; i < dim; ++i) {
        Rat tr = 0;
        for (int j = 0; j < dim; ++j) tr += c[i][j][j];
        if (tr != 0) return false;
    }
    return true;
}

void LieAlgebra::validate() const {
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k)
                if (c[i][j][k] != -c[j][i][k])
                    throw std::invalid_argument("structure constants not antisymmetric");
    Vec ei(dim), ej(dim), ek(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
            for (int k = j + 1; k < dim; ++k) {
                std::fill(ei.begin(), ei.end(), Rat(0));
                std::fill(ej.begin(), ej.end(), Rat(0));
                std::fill(ek.begin(), ek.end(), Rat(0));
                ei[i] = 1; ej[j] = 1; ek[k] = 1;
                Vec s = vec_add(bracket(bracket(ei, ej), ek),
                                vec_add(bracket(bracket(ej, ek), ei), bracket(bracket(ek, ei), ej)));
                if (!vec_is_zero(s)) throw std::invalid_argument("Jacobi identity fails");
            }
}

void LieModule::validate() const {
    const LieAlgebra& a = *alg;
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) {
            Mat lhs = rho[i] * rho[j] - rho[j] * rho[i];
            Mat rhs(dim, dim);
            for (int k = 0; k < a.dim; ++k)
                if (a.c[i][j][k] != 0) rhs = rhs + rho[k].scaled(a.c[i][j][k]);
            if (lhs != rhs) throw std::invalid_argument("module matrices do not represent the bracket");
        }
}

LieModule trivial_module(const LieAlgebra& a, int copies) {
    LieModule v;
    v.alg = &a;
    v.dim = copies;
    for (int i = 0; i < a.dim; ++i) v.rho.emplace_back(copies, copies);
    return v;
}

LieModule adjoint_module(const LieAlgebra& a) {
    LieModule v;
    v.alg = &a;
    v.dim = a.dim;
    for (int i = 0; i < a.dim; ++i) v.rho.push_back(a.ad(i));
    v.validate();
    return v;
}

LieModule dual_module(const LieModule& v) {
    LieModule w;
    w.alg = v.alg;
    w.dim = v.dim;
    for (const Mat& m : v.rho) w.rho.push_back(m.transpose().scaled(Rat(-1)));
    return w;
}

LieModule direct_sum(const LieModule& v, const LieModule& w) {
    LieModule s;
    s.alg = v.alg;
    s.dim = v.dim + w.dim;
    for (size_t i = 0; i < v.rho.size(); ++i) {
        Mat m(s.dim, s.dim);
        for (int r = 0; r < v.dim; ++r)
            for (int c = 0; c < v.dim; ++c) m(r, c) = v.rho[i](r, c);
        for (int r = 0; r < w.dim; ++r)
            for (int c = 0; c < w.dim; ++c) m(v.dim + r, v.dim + c) = w.rho[i](r, c);
        s.rho.push_back(std::move(m));
    }
    return s;
}

LieModule conjugate_module(const LieModule& v, const Mat& g) {
    auto ginv = inverse(g);
    if (!ginv) throw std::invalid_argument("conjugate_module: singular matrix");
    LieModule w;
    w.alg = v.alg;
    w.dim = v.dim;
    for (const Mat& m : v.rho) w.rho.push_back(g * m * *ginv);
    return w;
}

namespace {

std::vector<std::vector<int>> subsets_of_size(int n, int d) {
    std::vector<std::vector<int>> out;
    if (d < 0 || d > n) return out;
    std::vector<int> cur(d);
    std::iota(cur.begin(), cur.end(), 0);
    while (true) {
        out.push_back(cur);
        int i = d - 1;
        while (i >= 0 && cur[i] == n - d + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < d; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

// sign and position of inserting value k into the sorted set rest; -1 if present
std::pair<int, std::vector<int>> insert_sorted(const std::vector<int>& rest, int k) {
    std::vector<int> merged;
    int sign = 1;
    bool placed = false;
    for (int x : rest) {
        if (x == k) return {0, {}};
        if (!placed && x > k) { merged.push_back(k); placed = true; }
        if (!placed) sign = -sign;
        merged.push_back(x);
    }
    if (!placed) merged.push_back(k);
    // sign = (-1)^(number of elements before k)
    return {sign, merged};
}

}  // namespace

Mat ce_differential(const LieAlgebra& a, const LieModule& v, int d) {
    int n = a.dim;
    auto dom_sets = subsets_of_size(n, d);
    auto cod_sets = subsets_of_size(n, d + 1);
    std::map<std::vector<int>, int> dom_index, cod_index;
    for (size_t i = 0; i < dom_sets.size(); ++i) dom_index[dom_sets[i]] = static_cast<int>(i);
    for (size_t i = 0; i < cod_sets.size(); ++i) cod_index[cod_sets[i]] = static_cast<int>(i);

    Mat m(static_cast<int>(cod_sets.size()) * v.dim, static_cast<int>(dom_sets.size()) * v.dim);
    // (d omega)(x_T) = sum_p (-1)^p x_{t_p} . omega(T \ t_p)
    //                + sum_{p<q} (-1)^{p+q} omega([x_{t_p}, x_{t_q}] ^ T \ {t_p,t_q})
    for (size_t ti = 0; ti < cod_sets.size(); ++ti) {
        const std::vector<int>& t = cod_sets[ti];
        for (int p = 0; p <= d; ++p) {
            std::vector<int> rest;
            for (int q = 0; q <= d; ++q)
                if (q != p) rest.push_back(t[q]);
            int sign = (p % 2 == 0) ? 1 : -1;
            int dcol = dom_index[rest];
            for (int r = 0; r < v.dim; ++r)
                for (int ccol = 0; ccol < v.dim; ++ccol)
                    m(static_cast<int>(ti) * v.dim + r, dcol * v.dim + ccol) +=
                        sign * v.rho[t[p]](r, ccol);
        }
        for (int p = 0; p <= d; ++p)
            for (int q = p + 1; q <= d; ++q) {
                std::vector<int> rest;
                for (int u = 0; u <= d; ++u)
                    if (u != p && u != q) rest.push_back(t[u]);
                int base_sign = ((p + q) % 2 == 0) ? 1 : -1;
                for (int k = 0; k < n; ++k) {
                    const Rat& coeff = a.c[t[p]][t[q]][k];
                    if (coeff == 0) continue;
                    auto [ins_sign, merged] = insert_sorted(rest, k);
                    if (ins_sign == 0) continue;
                    int dcol = dom_index[merged];
                    Rat f = base_sign * ins_sign * coeff;
                    for (int r = 0; r < v.dim; ++r)
                        m(static_cast<int>(ti) * v.dim + r, dcol * v.dim + r) += f;
                }
            }
    }
    return m;
}

CohomologyResult ce_cohomology(const LieAlgebra& a, const LieModule& v, int d) {
    CohomologyResult out;
    if (d < 0 || d > a.dim) {
        out.cocycle_basis = Mat(0, 0);
        return out;
    }
    Mat dout = ce_differential(a, v, d);
    out.cocycle_basis = kernel_basis(dout);
    int rank_in = 0;
    if (d >= 1) rank_in = rank(ce_differential(a, v, d - 1));
    out.dimension = out.cocycle_basis.cols() - rank_in;
    return out;
}

TopDegreeReport top_degree_check(const LieAlgebra& a, const LieModule& v) {
    TopDegreeReport rep;
    if (!a.is_unimodular()) {
        rep.note = "skipped: algebra is not unimodular";
        return rep;
    }
    rep.applicable = true;
    rep.lhs = ce_cohomology(a, v, a.dim).dimension;
    // invariant functionals: f with f(x.w) = 0 for all x, i.e. f kills the
    // span of all module images
    Subspace images(v.dim);
    for (const Mat& m : v.rho) images.add_columns(m);
    rep.rhs = v.dim - images.dim();
    rep.pass = rep.lhs == rep.rhs;
    return rep;
}

PoincareReport poincare_check(const LieAlgebra& a, const LieModule& v) {
    PoincareReport rep;
    if (!a.is_unimodular()) {
        rep.note = "skipped: algebra is not unimodular";
        return rep;
    }
    rep.applicable = true;
    LieModule vd = dual_module(v);
    rep.pass = true;
    for (int p = 0; p <= a.dim; ++p) {
        rep.cohomology.push_back(ce_cohomology(a, v, p).dimension);
        rep.homology.push_back(ce_cohomology(a, vd, p).dimension);
    }
    for (int p = 0; p <= a.dim; ++p)
        if (rep.cohomology[p] != rep.homology[a.dim - p]) rep.pass = false;
    return rep;
}

namespace {

LieAlgebra make_algebra(const std::string& name, const std::vector<std::string>& basis,
                        const std::vector<std::tuple<int, int, std::vector<std::pair<int, long>>>>& brackets) {
    LieAlgebra a;
    a.name = name;
    a.dim = static_cast<int>(basis.size());
    a.basis_names = basis;
    a.c.assign(a.dim, std::vector<Vec>(a.dim, Vec(a.dim)));
    for (auto& [i, j, terms] : brackets)
        for (auto& [k, coeff] : terms) {
            a.c[i][j][k] = coeff;
            a.c[j][i][k] = -Rat(coeff);
        }
    a.validate();
    return a;
}

}  // namespace

LieAlgebra lie_abelian(int n) {
    if (n < 0) throw std::invalid_argument("abelian dimension must be nonnegative");
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
    return make_algebra("abelian_" + std::to_string(n), names, {});
}

LieAlgebra lie_sl2() {
    // [e,f] = h, [h,e] = 2e, [h,f] = -2f
    return make_algebra("sl2", {"e", "f", "h"},
                        {{0, 1, {{2, 1}}}, {2, 0, {{0, 2}}}, {2, 1, {{1, -2}}}});
}

LieAlgebra lie_borel_sl2() {
    // [h,e] = 2e
    return make_algebra("borel_sl2", {"h", "e"}, {{0, 1, {{1, 2}}}});
}

LieAlgebra lie_heisenberg() {
    // [x,y] = z
    return make_algebra("heisenberg", {"x", "y", "z"}, {{0, 1, {{2, 1}}}});
}

LieAlgebra lie_sl2_plus_sl2() {
    std::vector<std::tuple<int, int, std::vector<std::pair<int, long>>>> br = {
        {0, 1, {{2, 1}}}, {2, 0, {{0, 2}}}, {2, 1, {{1, -2}}},
        {3, 4, {{5, 1}}}, {5, 3, {{3, 2}}}, {5, 4, {{4, -2}}}};
    return make_algebra("sl2_plus_sl2", {"e1", "f1", "h1", "e2", "f2", "h2"}, br);
}

}  // namespace homquiver
