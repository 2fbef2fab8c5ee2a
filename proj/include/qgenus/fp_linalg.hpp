#pragma once

#include <vector>

// Dense linear algebra over a small prime field F_p (p < 2^15).
namespace qgenus::fp {

using Vec = std::vector<int>;
using Mat = std::vector<Vec>;  // row-major

int normalize(long v, int p);
int inverse(int a, int p);

struct Echelon {
    Mat rows;                 // nonzero rows in reduced echelon form
    std::vector<int> pivots;  // pivot column of each row
};

Echelon rref(Mat m, int p);
int rank(const Mat& m, int p);

// Basis of {x : m x = 0} for an r x ncols matrix m.
Mat kernel(const Mat& m, int ncols, int p);

// Basis of {x : x^T m = 0}, i.e. the left kernel.
Mat left_kernel(const Mat& m, int p);

Mat transpose(const Mat& m, int ncols);
Mat multiply(const Mat& a, const Mat& b, int p);
Mat identity(int n);
// Inverse of a square matrix; throws invalid_input when singular.
Mat invert(const Mat& m, int p);
Vec mul(const Mat& m, const Vec& v, int p);  // m * v

// Subspaces stored as a list of spanning rows.
int span_dim(const Mat& rows, int p);
bool in_span(const Mat& rows, const Vec& v, int p);
Mat intersect(const Mat& a, const Mat& b, int dim, int p);

// Grows a linearly independent set one vector at a time.
class IndependentSet {
public:
    IndependentSet(int dim, int p) : dim_(dim), p_(p) {}
    // Adds v when it is outside the current span; returns whether it did.
    bool add(const Vec& v);
    bool contains(const Vec& v) const;
    int size() const { return static_cast<int>(echelon_.size()); }

private:
    Vec reduce(Vec v) const;
    int dim_;
    int p_;
    Mat echelon_;
    std::vector<int> pivots_;
};

}  // namespace qgenus::fp
