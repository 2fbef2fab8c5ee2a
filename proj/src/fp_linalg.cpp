#include "qgenus/fp_linalg.hpp"

#include "qgenus/errors.hpp"

#include <utility>

namespace qgenus::fp {

int normalize(long v, int p)
{
    long r = v % p;
    return static_cast<int>(r < 0 ? r + p : r);
}

int inverse(int a, int p)
{
    a = normalize(a, p);
    if (a == 0) throw invalid_input("inverse of zero in F_p");
    int r = 1;
    for (int e = p - 2, b = a; e > 0; e >>= 1, b = b * b % p)
        if (e & 1) r = r * b % p;
    return r;
}

Echelon rref(Mat m, int p)
{
    Echelon out;
    if (m.empty()) return out;
    const int ncols = static_cast<int>(m[0].size());
    int row = 0;
    for (auto& r : m)
        for (auto& x : r) x = normalize(x, p);
    for (int col = 0; col < ncols && row < static_cast<int>(m.size()); ++col) {
        int piv = -1;
        for (int i = row; i < static_cast<int>(m.size()); ++i)
            if (m[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[row], m[piv]);
        int inv = inverse(m[row][col], p);
        for (auto& x : m[row]) x = x * inv % p;
        for (int i = 0; i < static_cast<int>(m.size()); ++i) {
            if (i == row || m[i][col] == 0) continue;
            int f = m[i][col];
            for (int j = col; j < ncols; ++j) m[i][j] = normalize(m[i][j] - f * m[row][j], p);
        }
        out.pivots.push_back(col);
        ++row;
    }
    m.resize(row);
    out.rows = std::move(m);
    return out;
}

int rank(const Mat& m, int p)
{
    return static_cast<int>(rref(m, p).rows.size());
}

Mat kernel(const Mat& m, int ncols, int p)
{
    Echelon e = rref(m, p);
    std::vector<int> is_pivot(ncols, -1);
    for (size_t i = 0; i < e.pivots.size(); ++i) is_pivot[e.pivots[i]] = static_cast<int>(i);
    Mat basis;
    for (int free = 0; free < ncols; ++free) {
        if (is_pivot[free] >= 0) continue;
        Vec v(ncols, 0);
        v[free] = 1;
        for (size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = normalize(-e.rows[i][free], p);
        basis.push_back(std::move(v));
    }
    return basis;
}

Mat transpose(const Mat& m, int ncols)
{
    Mat t(ncols, Vec(m.size(), 0));
    for (size_t i = 0; i < m.size(); ++i)
        for (int j = 0; j < ncols; ++j) t[j][i] = m[i][j];
    return t;
}

Mat multiply(const Mat& a, const Mat& b, int p)
{
    if (a.empty()) return {};
    const size_t inner = b.size();
    const size_t cols = b.empty() ? 0 : b[0].size();
    Mat out(a.size(), Vec(cols, 0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t k = 0; k < inner; ++k) {
            if (!a[i][k]) continue;
            for (size_t j = 0; j < cols; ++j) out[i][j] = (out[i][j] + a[i][k] * b[k][j]) % p;
        }
    return out;
}

Mat identity(int n)
{
    Mat m(n, Vec(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

Mat invert(const Mat& m, int p)
{
    const int n = static_cast<int>(m.size());
    Mat aug(n);
    for (int i = 0; i < n; ++i) {
        aug[i] = m[i];
        aug[i].resize(2 * n, 0);
        aug[i][n + i] = 1;
    }
    Echelon e = rref(aug, p);
    if (static_cast<int>(e.rows.size()) < n || e.pivots[n - 1] != n - 1) throw invalid_input("invert: singular matrix");
    Mat inv(n);
    for (int i = 0; i < n; ++i) inv[i] = Vec(e.rows[i].begin() + n, e.rows[i].end());
    return inv;
}

Mat left_kernel(const Mat& m, int p)
{
    if (m.empty()) return {};
    return kernel(transpose(m, static_cast<int>(m[0].size())), static_cast<int>(m.size()), p);
}

Vec mul(const Mat& m, const Vec& v, int p)
{
    Vec out(m.size(), 0);
    for (size_t i = 0; i < m.size(); ++i) {
        long s = 0;
        for (size_t j = 0; j < v.size(); ++j) s += static_cast<long>(m[i][j]) * v[j];
        out[i] = normalize(s, p);
    }
    return out;
}

int span_dim(const Mat& rows, int p)
{
    return rank(rows, p);
}

bool in_span(const Mat& rows, const Vec& v, int p)
{
    Mat ext = rows;
    ext.push_back(v);
    return rank(ext, p) == rank(rows, p);
}

Mat intersect(const Mat& a, const Mat& b, int dim, int p)
{
    if (a.empty() || b.empty()) return {};
    // Solve sum x_i a_i = sum y_j b_j; the a-part of each solution spans the
    // intersection.
    Mat stacked = a;
    for (const auto& r : b) {
        Vec neg(dim);
        for (int k = 0; k < dim; ++k) neg[k] = normalize(-r[k], p);
        stacked.push_back(std::move(neg));
    }
    Mat sols = left_kernel(stacked, p);
    Mat out;
    for (const auto& s : sols) {
        Vec v(dim, 0);
        for (size_t i = 0; i < a.size(); ++i)
            for (int k = 0; k < dim; ++k) v[k] = normalize(v[k] + s[i] * a[i][k], p);
        out.push_back(std::move(v));
    }
    return rref(out, p).rows;
}

Vec IndependentSet::reduce(Vec v) const
{
    for (auto& x : v) x = normalize(x, p_);
    for (size_t i = 0; i < echelon_.size(); ++i) {
        int c = v[pivots_[i]];
        if (c == 0) continue;
        for (int j = 0; j < dim_; ++j) v[j] = normalize(v[j] - c * echelon_[i][j], p_);
    }
    return v;
}

bool IndependentSet::contains(const Vec& v) const
{
    Vec r = reduce(v);
    for (int x : r)
        if (x) return false;
    return true;
}

bool IndependentSet::add(const Vec& v)
{
    if (static_cast<int>(v.size()) != dim_) throw invalid_input("vector length mismatch");
    Vec r = reduce(v);
    int piv = -1;
    for (int j = 0; j < dim_; ++j)
        if (r[j]) {
            piv = j;
            break;
        }
    if (piv < 0) return false;
    int inv = inverse(r[piv], p_);
    for (auto& x : r) x = x * inv % p_;
    // keep rows fully reduced against the new pivot
    for (auto& row : echelon_) {
        int c = row[piv];
        if (c == 0) continue;
        for (int j = 0; j < dim_; ++j) row[j] = normalize(row[j] - c * r[j], p_);
    }
    echelon_.push_back(std::move(r));
    pivots_.push_back(piv);
    return true;
}

}  // namespace qgenus::fp
