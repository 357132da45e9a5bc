#include "homquiver/linalg.hpp"

#include <cassert>

namespace homquiver {

bool vec_is_zero(const Vec& v) {
    for (const Rat& x : v)
        if (x != 0) return false;
    return true;
}

Vec vec_add(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec vec_scale(const Rat& c, const Vec& v) {
    Vec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Mat Mat::from_columns(int rows, const std::vector<Vec>& cols) {
    Mat m(rows, static_cast<int>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j) {
        assert(static_cast<int>(cols[j].size()) == rows);
        for (int i = 0; i < rows; ++i) m(i, static_cast<int>(j)) = cols[j][i];
    }
    return m;
}

Mat Mat::hstack(const Mat& a, const Mat& b) {
    assert(a.rows() == b.rows());
    Mat m(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
        for (int j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
    }
    return m;
}

Mat Mat::vstack(const Mat& a, const Mat& b) {
    assert(a.cols() == b.cols());
    Mat m(a.rows() + b.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) m(a.rows() + i, j) = b(i, j);
    return m;
}

bool Mat::is_zero() const {
    for (const Rat& x : a_)
        if (x != 0) return false;
    return true;
}

Mat Mat::operator*(const Mat& o) const {
    assert(cols_ == o.rows_);
    Mat m(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& x = (*this)(i, k);
            if (x == 0) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Rat& y = o(k, j);
                if (y != 0) m(i, j) += x * y;
            }
        }
    return m;
}

Vec Mat::operator*(const Vec& v) const {
    assert(static_cast<int>(v.size()) == cols_);
    Vec r(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if ((*this)(i, j) != 0 && v[j] != 0) r[i] += (*this)(i, j) * v[j];
    return r;
}

Mat Mat::operator+(const Mat& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    Mat m(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + o.a_[i];
    return m;
}

Mat Mat::operator-(const Mat& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    Mat m(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - o.a_[i];
    return m;
}

Mat Mat::scaled(const Rat& c) const {
    Mat m(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = c * a_[i];
    return m;
}

Mat Mat::transpose() const {
    Mat m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

Vec Mat::col(int j) const {
    Vec v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

Vec Mat::row(int i) const {
    Vec v(cols_);
    for (int j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
    return v;
}

void Mat::set_col(int j, const Vec& v) {
    assert(static_cast<int>(v.size()) == rows_);
    for (int i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

Mat rref(Mat m, std::vector<int>* pivots) {
    if (pivots) pivots->clear();
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m(i, c) != 0) { p = i; break; }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        Rat inv = 1 / m(r, c);
        for (int j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rat f = m(i, c);
            for (int j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        if (pivots) pivots->push_back(c);
        ++r;
    }
    return m;
}

int rank(const Mat& m) {
    std::vector<int> piv;
    rref(m, &piv);
    return static_cast<int>(piv.size());
}

Mat kernel_basis(const Mat& m) {
    std::vector<int> piv;
    Mat r = rref(m, &piv);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : piv) is_pivot[c] = true;
    std::vector<Vec> cols;
    for (int c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        Vec v(m.cols());
        v[c] = 1;
        for (size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -r(static_cast<int>(k), c);
        cols.push_back(std::move(v));
    }
    return Mat::from_columns(m.cols(), cols);
}

std::optional<Vec> solve(const Mat& m, const Vec& b) {
    assert(static_cast<int>(b.size()) == m.rows());
    Mat aug = Mat::hstack(m, Mat::from_columns(m.rows(), {b}));
    std::vector<int> piv;
    Mat r = rref(std::move(aug), &piv);
    for (int c : piv)
        if (c == m.cols()) return std::nullopt;  // inconsistent
    Vec x(m.cols());
    for (size_t k = 0; k < piv.size(); ++k) x[piv[k]] = r(static_cast<int>(k), m.cols());
    return x;
}

std::optional<Mat> solve_matrix(const Mat& m, const Mat& B) {
    assert(B.rows() == m.rows());
    Mat aug = Mat::hstack(m, B);
    std::vector<int> piv;
    Mat r = rref(std::move(aug), &piv);
    for (int c : piv)
        if (c >= m.cols()) return std::nullopt;
    Mat x(m.cols(), B.cols());
    for (size_t k = 0; k < piv.size(); ++k)
        for (int j = 0; j < B.cols(); ++j) x(piv[k], j) = r(static_cast<int>(k), m.cols() + j);
    return x;
}

Rat determinant(Mat m) {
    assert(m.rows() == m.cols());
    int n = m.rows();
    Rat det = 1;
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (m(i, c) != 0) { p = i; break; }
        if (p < 0) return Rat(0);
        if (p != c) {
            for (int j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        Rat inv = 1 / m(c, c);
        for (int i = c + 1; i < n; ++i) {
            if (m(i, c) == 0) continue;
            Rat f = m(i, c) * inv;
            for (int j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

std::optional<Mat> inverse(const Mat& m) {
    assert(m.rows() == m.cols());
    return solve_matrix(m, Mat::identity(m.rows()));
}

bool Subspace::add(Vec v) {
    assert(static_cast<int>(v.size()) == ambient_);
    v = reduce(std::move(v));
    int pc = -1;
    for (int j = 0; j < ambient_; ++j)
        if (v[j] != 0) { pc = j; break; }
    if (pc < 0) return false;
    Rat inv = 1 / v[pc];
    for (int j = pc; j < ambient_; ++j) v[j] *= inv;
    for (size_t k = 0; k < rows_.size(); ++k) {
        Rat f = rows_[k][pc];
        if (f != 0)
            for (int j = 0; j < ambient_; ++j) rows_[k][j] -= f * v[j];
    }
    // keep rows ordered by pivot column
    size_t pos = 0;
    while (pos < pivot_cols_.size() && pivot_cols_[pos] < pc) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivot_cols_.insert(pivot_cols_.begin() + pos, pc);
    return true;
}

void Subspace::add_columns(const Mat& cols) {
    for (int j = 0; j < cols.cols(); ++j) add(cols.col(j));
}

Vec Subspace::reduce(Vec v) const {
    for (size_t k = 0; k < rows_.size(); ++k) {
        Rat f = v[pivot_cols_[k]];
        if (f != 0)
            for (int j = 0; j < ambient_; ++j) v[j] -= f * rows_[k][j];
    }
    return v;
}

bool Subspace::contains(Vec v) const { return vec_is_zero(reduce(std::move(v))); }

Mat Subspace::basis_matrix() const {
    std::vector<Vec> cols(rows_.begin(), rows_.end());
    return Mat::from_columns(ambient_, cols);
}

bool Subspace::same_span(const Subspace& o) const {
    if (ambient_ != o.ambient_ || dim() != o.dim()) return false;
    for (const Vec& r : rows_)
        if (!o.contains(r)) return false;
    return true;
}

Mat quotient_map(const Subspace& u) {
    int n = u.ambient();
    std::vector<bool> is_pivot(n, false);
    for (int c : u.pivots()) is_pivot[c] = true;
    std::vector<int> free_coords;
    for (int j = 0; j < n; ++j)
        if (!is_pivot[j]) free_coords.push_back(j);
    Mat q(static_cast<int>(free_coords.size()), n);
    for (int j = 0; j < n; ++j) {
        Vec e(n);
        e[j] = 1;
        Vec r = u.reduce(std::move(e));
        for (size_t k = 0; k < free_coords.size(); ++k) q(static_cast<int>(k), j) = r[free_coords[k]];
    }
    return q;
}

}  // namespace homquiver
