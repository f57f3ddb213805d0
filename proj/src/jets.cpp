#include "jetline/jets.hpp"

namespace jetline {

JetVector jet_of_series(const TruncSeries& s, int k) {
    return jet_of_series_vec({s}, k);
}

JetVector jet_of_series_vec(const std::vector<TruncSeries>& s, int k) {
    if (s.empty()) throw UsageError("jet of empty section");
    const int r = static_cast<int>(s.size());
    for (const TruncSeries& comp : s) {
        if (comp.order() < k) throw UsageError("series order too small for jet");
        if (comp.base_point() != s[0].base_point() || comp.order() != s[0].order())
            throw UsageError("jet components must share base point and order");
    }
    JetVector jet(k, r, s[0].base_point());
    for (int j = 0; j <= k; ++j) {
        GQ fact = factorial(j);
        for (int c = 0; c < r; ++c) jet.at(j, c) = fact * s[c].coeff(j);
    }
    return jet;
}

Mat jet_cocycle(int k, int n, const MoebiusMap& g, const GQ& z0) {
    if (k < 0) throw UsageError("jet order must be >= 0");
    const TruncSeries w = g.act_series(z0, k);        // g.z as series at z0
    const TruncSeries mu = g.automorphy_series(n, z0, k);
    const GQ w0 = w.coeff(0);
    Mat t(k + 1, k + 1);
    for (int j = 0; j <= k; ++j) {
        // s~ = (w - w0)^j / j!, the jet basis vector with raw derivative j.
        TruncSeries basis(w0, k);
        basis.coeff(j) = factorial(j).inverse();
        TruncSeries s = series_mul(mu, series_compose(basis, w));
        for (int i = 0; i <= k; ++i) t.at(i, j) = factorial(i) * s.coeff(i);
    }
    return t;
}

JetVector forgetful(const JetVector& jet) {
    if (jet.order < 1) throw UsageError("forgetful needs order >= 1");
    JetVector out(jet.order - 1, jet.rank, jet.base_point);
    for (int j = 0; j < jet.order; ++j)
        for (int c = 0; c < jet.rank; ++c) out.at(j, c) = jet.at(j, c);
    return out;
}

Mat forgetful_matrix(int k, int rank) {
    if (k < 1) throw UsageError("forgetful needs order >= 1");
    Mat m(k * rank, (k + 1) * rank);
    for (int i = 0; i < k * rank; ++i) m.at(i, i) = GQ(1);
    return m;
}

JetVector iota(int k, const Vec& value, const GQ& z0) {
    if (value.empty()) throw UsageError("iota needs a value block");
    JetVector jet(k, static_cast<int>(value.size()), z0);
    GQ fact = factorial(k);
    for (int c = 0; c < jet.rank; ++c) jet.at(k, c) = fact * value[c];
    return jet;
}

MatSeries parallel_transport_jet(const FlatConnectionSpec& spec, const GQ& z0, int k) {
    const int r = spec.rank;
    if (spec.has_pole_at(z0)) throw SingularityError("connection has a pole at the base point");
    // A(z0 + t) coefficients up to order k-1 suffice for P up to order k.
    std::vector<Mat> a(std::max(k, 1), Mat(r, r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            TruncSeries e = TruncSeries::of_ratfun(spec.connection.at(i, j), z0,
                                                   std::max(k - 1, 0));
            for (int d = 0; d < std::max(k, 1); ++d)
                if (d <= e.order()) a[d].at(i, j) = e.coeff(d);
        }
    MatSeries p = MatSeries::identity(z0, k, r);
    // (m+1) P_{m+1} = - sum_{j<=m} A_j P_{m-j}
    for (int m = 0; m < k; ++m) {
        Mat s(r, r);
        for (int j = 0; j <= m; ++j) s += a[j] * p.coeff(m - j);
        p.coeff(m + 1) = GQ(-1, m + 1) * s;
    }
    return p;
}

Mat jet_mult_operator(const MatSeries& p, int k) {
    if (p.order() < k) throw UsageError("matrix series order too small");
    const int r = p.dim();
    Mat m((k + 1) * r, (k + 1) * r);
    // (P w)^(j) = sum_i C(j, i) P^(i) w^(j-i);  P^(i) = i! * coeff_i.
    for (int j = 0; j <= k; ++j)
        for (int i = 0; i <= j; ++i) {
            Mat blockval = (binomial(j, i) * factorial(i)) * p.coeff(i);
            m.set_block(j * r, (j - i) * r, blockval);
        }
    return m;
}

Mat twisted_jet_cocycle(const FlatConnectionSpec& spec, int k, int n, const MoebiusMap& g,
                        const GQ& z0) {
    const int r = spec.rank;
    if (!g.in_chart(z0)) throw ChartEscapeError("twisted cocycle at a chart-escape point");
    const GQ w0 = g.act(z0);

    const TruncSeries w = g.act_series(z0, k);
    const TruncSeries mu = g.automorphy_series(n, z0, k);
    // Gauge G(g, z) = P_{z0}(z) * P_{g z0}(g z)^{-1}, truncated at order k.
    const MatSeries p_z0 = parallel_transport_jet(spec, z0, k);
    const MatSeries p_w0 = parallel_transport_jet(spec, w0, k);
    const MatSeries gauge = p_z0 * p_w0.inv().compose(w);

    Mat t((k + 1) * r, (k + 1) * r);
    for (int j = 0; j <= k; ++j)
        for (int c = 0; c < r; ++c) {
            // Basis section u~ with raw derivative j in component c.
            std::vector<TruncSeries> ucomp;
            GQ invfact = factorial(j).inverse();
            for (int cc = 0; cc < r; ++cc) {
                TruncSeries basis(w0, k);
                if (cc == c) basis.coeff(j) = invfact;
                ucomp.push_back(series_compose(basis, w));
            }
            // u(z) = mu_n(g,z) * G(g,z) * u~(g z), componentwise.
            for (int p = 0; p < r; ++p) {
                TruncSeries entry(z0, k);
                for (int q = 0; q < r; ++q)
                    entry += series_mul(gauge.entry(p, q), ucomp[q]);
                entry = series_mul(mu, entry);
                for (int i = 0; i <= k; ++i)
                    t.at(i * r + p, j * r + c) = factorial(i) * entry.coeff(i);
            }
        }
    return t;
}

Poly global_section_poly(int n, const SymVector& p) {
    if (p.degree() != n) throw UsageError("global section degree mismatch");
    std::vector<GQ> c(n + 1, GQ(0));
    for (int j = 0; j <= n; ++j) c[n - j] = p.coeff(j);  // e1^(n-j) e2^j -> z^(n-j)
    return Poly(std::move(c));
}

JetVector poly_global_jet(int n, const SymVector& p, const GQ& z0, int k) {
    if (n < 0) throw UsageError("poly_global_jet needs n >= 0");
    return jet_of_series(TruncSeries::of_poly(global_section_poly(n, p), z0, std::max(k, 0)), k);
}

PolyMat poly_global_jet_matrix(int n, int k) {
    PolyMat m(k + 1, n + 1);
    for (int j = 0; j <= n; ++j) {
        // Chart polynomial z^(n-j): derivative d at z is (n-j)_d z^(n-j-d).
        for (int d = 0; d <= k; ++d) {
            int e = n - j - d;
            if (e < 0) break;
            GQ fall = 1;
            for (int t = 0; t < d; ++t) fall *= GQ(long(n - j - t));
            std::vector<GQ> mono(e + 1, GQ(0));
            mono[e] = fall;
            m.at(d, j) = Poly(std::move(mono));
        }
    }
    return m;
}

}  // namespace jetline
