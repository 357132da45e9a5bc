#include "homquiver/algebra.hpp"

#include <cassert>
#include <stdexcept>

namespace homquiver {

SparseVec sparse_add(const SparseVec& a, const SparseVec& b) {
    SparseVec r;
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first) r.push_back(a[i++]);
        else if (a[i].first > b[j].first) r.push_back(b[j++]);
        else {
            Rat c = a[i].second + b[j].second;
            if (c != 0) r.emplace_back(a[i].first, c);
            ++i; ++j;
        }
    }
    while (i < a.size()) r.push_back(a[i++]);
    while (j < b.size()) r.push_back(b[j++]);
    return r;
}

SparseVec sparse_scale(const Rat& c, const SparseVec& v) {
    if (c == 0) return {};
    SparseVec r;
    r.reserve(v.size());
    for (auto& [k, x] : v) r.emplace_back(k, c * x);
    return r;
}

Vec sparse_to_dense(const SparseVec& v, int dim) {
    Vec d(dim);
    for (auto& [k, x] : v) d[k] = x;
    return d;
}

SparseVec dense_to_sparse(const Vec& v) {
    SparseVec s;
    for (size_t k = 0; k < v.size(); ++k)
        if (v[k] != 0) s.emplace_back(static_cast<int>(k), v[k]);
    return s;
}

std::vector<int> Algebra::alive_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < num_vertices(); ++v)
        if (idem[v] >= 0) out.push_back(v);
    return out;
}

Vec Algebra::compose(const Vec& x, const Vec& y) const {
    Vec r(dim());
    for (int i = 0; i < dim(); ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < dim(); ++j) {
            if (y[j] == 0) continue;
            Rat c = x[i] * y[j];
            for (auto& [k, v] : table[i][j]) r[k] += c * v;
        }
    }
    return r;
}

int Algebra::vertex_by_label(const std::string& label) const {
    for (int v = 0; v < num_vertices(); ++v)
        if (vertex_labels[v] == label) return v;
    return -1;
}

bool Algebra::check_associativity() const {
    int n = dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (basis[j].tgt != basis[i].src && !table[i][j].empty()) return false;
            for (int k = 0; k < n; ++k) {
                // (i∘j)∘k vs i∘(j∘k)
                SparseVec lhs, rhs;
                for (auto& [m, c] : table[i][j]) lhs = sparse_add(lhs, sparse_scale(c, table[m][k]));
                for (auto& [m, c] : table[j][k]) rhs = sparse_add(rhs, sparse_scale(c, table[i][m]));
                if (lhs != rhs) return false;
            }
        }
    return true;
}

bool Algebra::check_idempotents() const {
    for (int v = 0; v < num_vertices(); ++v) {
        int e = idem[v];
        if (e < 0) continue;
        for (int w = 0; w < num_vertices(); ++w) {
            int f = idem[w];
            if (f < 0) continue;
            const SparseVec& p = table[e][f];
            if (v == w) {
                if (p.size() != 1 || p[0].first != e || p[0].second != 1) return false;
            } else if (!p.empty()) {
                return false;
            }
        }
        // e_v acts as the identity on both sides of its (src,tgt) slots
        for (int k = 0; k < dim(); ++k) {
            SparseVec unit{{k, Rat(1)}};
            if (basis[k].tgt == v && table[e][k] != unit) return false;
            if (basis[k].src == v && table[k][e] != unit) return false;
        }
    }
    return true;
}

void Algebra::certify_radical_nilpotent() {
    int n = dim();
    Subspace cur(n);
    std::vector<Vec> cur_basis;
    for (int k = 0; k < n; ++k)
        if (basis[k].len > 0) {
            Vec e(n);
            e[k] = 1;
            if (cur.add(e)) cur_basis.push_back(e);
        }
    int steps = 1;
    while (cur.dim() > 0) {
        if (steps > n + 1)
            throw std::runtime_error(
                "relation ideal is not admissible: span of positive-length basis elements is not nilpotent");
        Subspace next(n);
        std::vector<Vec> next_basis;
        for (const Vec& x : cur_basis)
            for (int k = 0; k < n; ++k) {
                if (basis[k].len == 0) continue;
                Vec e(n);
                e[k] = 1;
                Vec p = compose(e, x);
                if (!vec_is_zero(p) && next.add(p)) next_basis.push_back(p);
            }
        if (next.dim() >= cur.dim() && next.dim() > 0)
            throw std::runtime_error(
                "relation ideal is not admissible: span of positive-length basis elements is not nilpotent");
        cur = std::move(next);
        cur_basis = std::move(next_basis);
        ++steps;
    }
    radical_nilpotency = steps;
}

AlgebraQuotient quotient_algebra(const Algebra& a, const Subspace& ideal) {
    int n = a.dim();
    assert(ideal.ambient() == n);

    Subspace grown = ideal;
    std::vector<int> surviving;
    for (int k = 0; k < n; ++k) {
        Vec e(n);
        e[k] = 1;
        if (grown.add(e)) surviving.push_back(k);
    }
    int q = static_cast<int>(surviving.size());

    // coords(v) = coefficients on surviving elements of v mod ideal
    Mat ext = ideal.basis_matrix();
    for (int k : surviving) {
        Vec e(n);
        e[k] = 1;
        ext = Mat::hstack(ext, Mat::from_columns(n, {e}));
    }
    int icols = ideal.dim();
    auto coords = [&](const Vec& v) {
        auto x = solve(ext, v);
        if (!x) throw std::logic_error("quotient_algebra: reduction failed");
        Vec c(q);
        for (int j = 0; j < q; ++j) c[j] = (*x)[icols + j];
        return c;
    };

    Mat proj(q, n);
    for (int k = 0; k < n; ++k) {
        Vec e(n);
        e[k] = 1;
        proj.set_col(k, coords(e));
    }

    AlgebraQuotient out;
    out.surviving = surviving;
    out.projection = proj;

    Algebra& b = out.quotient;
    b.vertex_labels = a.vertex_labels;
    b.idem.assign(a.num_vertices(), -1);
    for (int qi = 0; qi < q; ++qi) {
        const BasisElem& e = a.basis[surviving[qi]];
        b.basis.push_back(e);
        if (e.len == 0) b.idem[e.src] = qi;
    }
    // idempotents that fell into the ideal mark dead vertices; make sure no
    // stray idempotent survives half-reduced
    for (int v = 0; v < a.num_vertices(); ++v) {
        if (a.idem[v] < 0) continue;
        Vec e(n);
        e[a.idem[v]] = 1;
        bool dead = ideal.contains(e);
        if (dead != (b.idem[v] < 0)) throw std::logic_error("quotient_algebra: idempotent not reduced");
    }

    b.table.assign(q, std::vector<SparseVec>(q));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) {
            if (b.basis[j].tgt != b.basis[i].src) continue;
            SparseVec prod = a.table[surviving[i]][surviving[j]];
            Vec c = coords(sparse_to_dense(prod, n));
            b.table[i][j] = dense_to_sparse(c);
        }
    b.certify_radical_nilpotent();
    return out;
}

}  // namespace homquiver
