#include "jetline/linalg.hpp"

namespace jetline {

PolyMat to_poly_mat(const Mat& m) {
    PolyMat p(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) p.at(i, j) = Poly(m.at(i, j));
    return p;
}

Mat eval(const PolyMat& m, const GQ& z) {
    Mat r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(i, j).eval(z);
    return r;
}

Mat eval(const RatMat& m, const GQ& z) {
    Mat r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(i, j).eval(z);
    return r;
}

namespace {

// Multiplies each row by the lcm of the denominators of its entries (re and
// im parts), so every entry becomes a Gaussian integer.  Row scaling does not
// change the nullspace.
void clear_denominators(Mat& a) {
    for (int i = 0; i < a.rows(); ++i) {
        mpz_class l(1);
        for (int j = 0; j < a.cols(); ++j) {
            mpz_class dr = a.at(i, j).re().get_den();
            mpz_class di = a.at(i, j).im().get_den();
            mpz_class g;
            mpz_lcm(g.get_mpz_t(), l.get_mpz_t(), dr.get_mpz_t());
            mpz_lcm(l.get_mpz_t(), g.get_mpz_t(), di.get_mpz_t());
        }
        if (l == 1) continue;
        GQ s{mpq_class(l)};
        for (int j = 0; j < a.cols(); ++j) a.at(i, j) = s * a.at(i, j);
    }
}

struct Echelon {
    Mat a;                    // row echelon form (fraction-free rows)
    std::vector<int> pivots;  // pivot column of each pivot row
};

// Bareiss fraction-free forward elimination with column pivoting.
Echelon eliminate(Mat a) {
    clear_denominators(a);
    const int rows = a.rows(), cols = a.cols();
    std::vector<int> pivots;
    GQ prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (!a.at(i, c).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < cols; ++j) std::swap(a.at(r, j), a.at(piv, j));
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j)
                a.at(i, j) = (a.at(r, c) * a.at(i, j) - a.at(i, c) * a.at(r, j)) / prev;
            a.at(i, c) = GQ(0);
        }
        prev = a.at(r, c);
        pivots.push_back(c);
        ++r;
    }
    return {std::move(a), std::move(pivots)};
}

}  // namespace

std::vector<Vec> exact_nullspace(const Mat& m) {
    Echelon e = eliminate(m);
    const int cols = m.cols();
    const int nr = static_cast<int>(e.pivots.size());
    std::vector<bool> is_pivot(cols, false);
    for (int c : e.pivots) is_pivot[c] = true;

    std::vector<Vec> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vec v(cols, GQ(0));
        v[f] = GQ(1);
        for (int r = nr - 1; r >= 0; --r) {
            const int p = e.pivots[r];
            GQ s = 0;
            for (int j = p + 1; j < cols; ++j)
                if (!v[j].is_zero()) s += e.a.at(r, j) * v[j];
            v[p] = -s / e.a.at(r, p);
        }
        // Scale so the first nonzero entry is 1 (deterministic representative).
        for (int j = 0; j < cols; ++j)
            if (!v[j].is_zero()) {
                GQ inv = v[j].inverse();
                for (int t = j; t < cols; ++t) v[t] = inv * v[t];
                break;
            }
        basis.push_back(std::move(v));
    }
    return basis;
}

int rank(const Mat& m) { return static_cast<int>(eliminate(m).pivots.size()); }

Mat inverse(const Mat& m) {
    if (m.rows() != m.cols()) throw UsageError("inverse of non-square matrix");
    const int n = m.rows();
    Mat a = m;
    Mat inv = Mat::identity(n);
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (!a.at(i, c).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) throw SingularityError("singular matrix");
        if (piv != c)
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(c, j), a.at(piv, j));
                std::swap(inv.at(c, j), inv.at(piv, j));
            }
        GQ d = a.at(c, c).inverse();
        for (int j = 0; j < n; ++j) {
            a.at(c, j) = d * a.at(c, j);
            inv.at(c, j) = d * inv.at(c, j);
        }
        for (int i = 0; i < n; ++i) {
            if (i == c || a.at(i, c).is_zero()) continue;
            GQ f = a.at(i, c);
            for (int j = 0; j < n; ++j) {
                a.at(i, j) -= f * a.at(c, j);
                inv.at(i, j) -= f * inv.at(c, j);
            }
        }
    }
    return inv;
}

GQ determinant(const Mat& m) {
    if (m.rows() != m.cols()) throw UsageError("determinant of non-square matrix");
    const int n = m.rows();
    Mat a = m;
    GQ det = 1;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (!a.at(i, c).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) return GQ(0);
        if (piv != c) {
            for (int j = 0; j < n; ++j) std::swap(a.at(c, j), a.at(piv, j));
            det = -det;
        }
        det *= a.at(c, c);
        GQ d = a.at(c, c).inverse();
        for (int i = c + 1; i < n; ++i) {
            if (a.at(i, c).is_zero()) continue;
            GQ f = a.at(i, c) * d;
            for (int j = c; j < n; ++j) a.at(i, j) -= f * a.at(c, j);
        }
    }
    return det;
}

bool solve_linear(const Mat& m, const Vec& rhs, Vec& solution) {
    if (int(rhs.size()) != m.rows()) throw UsageError("solve_linear shape mismatch");
    // Append -rhs as an extra column; a nullspace vector with nonzero last
    // coordinate yields a solution after rescaling.
    Mat aug(m.rows(), m.cols() + 1);
    aug.set_block(0, 0, m);
    for (int i = 0; i < m.rows(); ++i) aug.at(i, m.cols()) = -rhs[i];
    for (const Vec& v : exact_nullspace(aug)) {
        if (v.back().is_zero()) continue;
        GQ inv = v.back().inverse();
        solution.assign(v.begin(), v.end() - 1);
        for (GQ& x : solution) x = inv * x;
        return true;
    }
    return false;
}

}  // namespace jetline
