#pragma once

#include <optional>
#include <vector>

#include "homquiver/rational.hpp"

namespace homquiver {

using Vec = std::vector<Rat>;

bool vec_is_zero(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Rat& c, const Vec& v);

// Dense matrix over the rationals. Row-major; all elimination is exact.
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static Mat identity(int n);
    static Mat from_columns(int rows, const std::vector<Vec>& cols);
    static Mat hstack(const Mat& a, const Mat& b);
    static Mat vstack(const Mat& a, const Mat& b);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Rat& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool is_zero() const;
    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat operator*(const Mat& o) const;
    Vec operator*(const Vec& v) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat scaled(const Rat& c) const;
    Mat transpose() const;
    Vec col(int j) const;
    Vec row(int i) const;
    void set_col(int j, const Vec& v);

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

// Gauss-Jordan; returns reduced row echelon form, pivot columns in *pivots.
Mat rref(Mat m, std::vector<int>* pivots = nullptr);
int rank(const Mat& m);
// Columns span the null space {x : m x = 0}; reduced deterministic basis.
Mat kernel_basis(const Mat& m);
// One solution of m x = b, free variables set to zero.
std::optional<Vec> solve(const Mat& m, const Vec& b);
// Columnwise: m X = B.
std::optional<Mat> solve_matrix(const Mat& m, const Mat& B);
Rat determinant(Mat m);
std::optional<Mat> inverse(const Mat& m);

// Incremental row space with full reduction; used for span bookkeeping.
class Subspace {
public:
    explicit Subspace(int ambient) : ambient_(ambient) {}

    int ambient() const { return ambient_; }
    int dim() const { return static_cast<int>(rows_.size()); }
    // Returns true when v enlarged the span.
    bool add(Vec v);
    void add_columns(const Mat& cols);
    bool contains(Vec v) const;
    Vec reduce(Vec v) const;  // residual after eliminating against the span
    // Columns form a reduced basis of the span.
    Mat basis_matrix() const;
    const std::vector<int>& pivots() const { return pivot_cols_; }
    bool same_span(const Subspace& o) const;

private:
    int ambient_;
    std::vector<Vec> rows_;        // reduced rows, pivot entry 1
    std::vector<int> pivot_cols_;  // pivot column per row
};

// Linear map onto a complement of the given subspace: quotient coordinates.
// Returns a ((dim V - dim U) x dim V) matrix Q with ker Q = U.
Mat quotient_map(const Subspace& u);

}  // namespace homquiver
