#include "weylarr/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace weylarr {

namespace {

long long checked_mul(long long a, long long b) {
    __int128 r = (__int128)a * b;
    if (r > INT64_MAX || r < INT64_MIN) throw std::overflow_error("linalg: product overflow");
    return (long long)r;
}

void make_primitive(IntVec& row) {
    long long g = 0;
    for (long long x : row) g = std::gcd(g, x < 0 ? -x : x);
    if (g > 1)
        for (long long& x : row) x /= g;
    for (long long x : row) {
        if (x != 0) {
            if (x < 0)
                for (long long& y : row) y = -y;
            break;
        }
    }
}

// Eliminate v against row (pivot at column c): v <- v*row[c] - row*v[c], kept primitive.
void reduce_against(IntVec& v, const IntVec& row, size_t c) {
    if (v[c] == 0) return;
    long long p = row[c], q = v[c];
    for (size_t j = 0; j < v.size(); ++j) v[j] = checked_mul(v[j], p) - checked_mul(row[j], q);
    make_primitive(v);
}

} // namespace

IntMat int_row_echelon(IntMat m) {
    IntMat basis;
    for (IntVec& row : m) {
        make_primitive(row);
        for (const IntVec& b : basis) {
            size_t c = 0;
            while (b[c] == 0) ++c;
            reduce_against(row, b, c);
        }
        bool nonzero = std::any_of(row.begin(), row.end(), [](long long x) { return x != 0; });
        if (nonzero) basis.push_back(row);
    }
    // Back-substitute so each pivot column is zero in the other rows.
    std::sort(basis.begin(), basis.end(), [](const IntVec& a, const IntVec& b) {
        size_t ca = 0, cb = 0;
        while (a[ca] == 0) ++ca;
        while (b[cb] == 0) ++cb;
        return ca < cb;
    });
    for (size_t i = basis.size(); i-- > 0;) {
        size_t c = 0;
        while (basis[i][c] == 0) ++c;
        for (size_t k = 0; k < i; ++k) reduce_against(basis[k], basis[i], c);
    }
    return basis;
}

IntVec echelon_residual(const IntMat& echelon, IntVec v) {
    make_primitive(v);
    for (const IntVec& b : echelon) {
        size_t c = 0;
        while (b[c] == 0) ++c;
        reduce_against(v, b, c);
    }
    return v;
}

int int_rank(IntMat m) { return (int)int_row_echelon(std::move(m)).size(); }

bool in_row_span(const IntMat& m, const IntVec& v) {
    IntMat e = int_row_echelon(m);
    IntVec r = echelon_residual(e, v);
    return std::all_of(r.begin(), r.end(), [](long long x) { return x == 0; });
}

IntMat int_nullspace(const IntMat& m) {
    if (m.empty()) return {};
    size_t ncols = m[0].size();
    IntMat e = int_row_echelon(m);
    std::vector<int> pivot_col;
    std::vector<bool> is_pivot(ncols, false);
    for (const IntVec& b : e) {
        size_t c = 0;
        while (b[c] == 0) ++c;
        pivot_col.push_back((int)c);
        is_pivot[c] = true;
    }
    IntMat kernel;
    for (size_t free_c = 0; free_c < ncols; ++free_c) {
        if (is_pivot[free_c]) continue;
        // Solve with x[free_c] = 1, other free vars 0, over Q; clear denominators.
        RatVec x(ncols, Rational(0));
        x[free_c] = Rational(1);
        for (size_t i = e.size(); i-- > 0;) {
            size_t c = pivot_col[i];
            Rational s(0);
            for (size_t j = c + 1; j < ncols; ++j)
                if (!x[j].is_zero()) s += Rational(e[i][j]) * x[j];
            x[c] = -s / Rational(e[i][c]);
        }
        kernel.push_back(primitive_covector(x));
    }
    return int_row_echelon(std::move(kernel));
}

bool solve_rational(const RatMat& a, const RatVec& b, RatVec& x) {
    size_t nrows = a.size();
    if (nrows == 0) return false;
    size_t ncols = a[0].size();
    RatMat aug(nrows, RatVec(ncols + 1));
    for (size_t i = 0; i < nrows; ++i) {
        for (size_t j = 0; j < ncols; ++j) aug[i][j] = a[i][j];
        aug[i][ncols] = b[i];
    }
    std::vector<int> pivot_of_col(ncols, -1);
    size_t row = 0;
    for (size_t col = 0; col < ncols && row < nrows; ++col) {
        size_t p = row;
        while (p < nrows && aug[p][col].is_zero()) ++p;
        if (p == nrows) continue;
        std::swap(aug[p], aug[row]);
        Rational inv = Rational(1) / aug[row][col];
        for (size_t j = col; j <= ncols; ++j) aug[row][j] *= inv;
        for (size_t i = 0; i < nrows; ++i) {
            if (i == row || aug[i][col].is_zero()) continue;
            Rational f = aug[i][col];
            for (size_t j = col; j <= ncols; ++j) aug[i][j] -= f * aug[row][j];
        }
        pivot_of_col[col] = (int)row;
        ++row;
    }
    for (size_t i = row; i < nrows; ++i)
        if (!aug[i][ncols].is_zero()) return false;
    x.assign(ncols, Rational(0));
    for (size_t col = 0; col < ncols; ++col)
        if (pivot_of_col[col] >= 0) x[col] = aug[pivot_of_col[col]][ncols];
    return true;
}

IntVec primitive_covector(const RatVec& v) {
    long long l = 1;
    for (const Rational& r : v) l = std::lcm(l, r.den());
    IntVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = checked_mul(v[i].num(), l / v[i].den());
    make_primitive(out);
    bool nonzero = std::any_of(out.begin(), out.end(), [](long long x) { return x != 0; });
    if (!nonzero) throw std::invalid_argument("primitive_covector: zero vector");
    return out;
}

IntVec primitive_covector(IntVec v) {
    make_primitive(v);
    bool nonzero = std::any_of(v.begin(), v.end(), [](long long x) { return x != 0; });
    if (!nonzero) throw std::invalid_argument("primitive_covector: zero vector");
    return v;
}

std::vector<double> symmetric_eigenvalues(std::vector<std::vector<double>> a) {
    size_t n = a.size();
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
        if (off < 1e-26) break;
        for (size_t p = 0; p < n; ++p) {
            for (size_t q = p + 1; q < n; ++q) {
                if (std::fabs(a[p][q]) < 1e-300) continue;
                double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1), s = t * c;
                for (size_t k = 0; k < n; ++k) {
                    double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (size_t k = 0; k < n; ++k) {
                    double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> eig(n);
    for (size_t i = 0; i < n; ++i) eig[i] = a[i][i];
    std::sort(eig.begin(), eig.end());
    return eig;
}

} // namespace weylarr
