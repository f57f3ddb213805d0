#pragma once

#include "jetline/rep.hpp"

namespace jetline {

/// k-jet of a rank-r section at a chart point: (k+1) blocks of r values,
/// block j holding the raw j-th derivative.
struct JetVector {
    int order;
    int rank;
    GQ base_point;
    Vec values;  // length (order+1)*rank

    JetVector(int order_, int rank_, GQ base)
        : order(order_), rank(rank_), base_point(std::move(base)),
          values(std::size_t(order_ + 1) * rank_, GQ(0)) {
        if (order_ < 0 || rank_ < 1) throw UsageError("bad jet shape");
    }

    GQ& at(int deriv, int component = 0) { return values[std::size_t(deriv) * rank + component]; }
    const GQ& at(int deriv, int component = 0) const {
        return values[std::size_t(deriv) * rank + component];
    }

    friend bool operator==(const JetVector& a, const JetVector& b) {
        return a.order == b.order && a.rank == b.rank && a.base_point == b.base_point &&
               a.values == b.values;
    }
};

/// Raw derivatives j! * (Taylor coefficient j) of a scalar series.
JetVector jet_of_series(const TruncSeries& s, int k);

/// Rank-r version; all series share base point and order.
JetVector jet_of_series_vec(const std::vector<TruncSeries>& s, int k);

/// The (k+1)-square transition matrix of J^k(L^n): takes the jet of s~ at
/// g.z0 to the jet of s at z0 under s(z) = mu_n(g, z) s~(g z).  Lower
/// triangular in the derivative basis with diagonal mu_n(g, z0) g'(z0)^j.
Mat jet_cocycle(int k, int n, const MoebiusMap& g, const GQ& z0);

/// Drop the top derivative block (phi_k of the jet exact sequence).
JetVector forgetful(const JetVector& jet);
Mat forgetful_matrix(int k, int rank = 1);

/// iota: W (x) K^k -> J^k(W); places value in the top slot scaled by k!,
/// i.e. the jet of (z - z0)^k * value.
JetVector iota(int k, const Vec& value, const GQ& z0);

/// Trivial bundle of rank r with the holomorphic connection d + A dz.
/// On a one-dimensional base every such connection is flat.
struct FlatConnectionSpec {
    int rank;
    RatMat connection;  // r x r matrix A(z); polynomial entries in practice

    static FlatConnectionSpec trivial(int r) {
        FlatConnectionSpec s;
        s.rank = r;
        s.connection = RatMat(r, r);
        return s;
    }
    bool has_pole_at(const GQ& z) const {
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j)
                if (connection.at(i, j).has_pole_at(z)) return true;
        return false;
    }
};

/// Order-k truncation of the fundamental solution P' = -A P, P(z0) = Id,
/// by exact coefficient recursion.
MatSeries parallel_transport_jet(const FlatConnectionSpec& spec, const GQ& z0, int k);

/// Jet-level operator of multiplication by a matrix series: takes the jet of
/// w to the jet of P w (block-lower-triangular Leibniz matrix).
Mat jet_mult_operator(const MatSeries& p, int k);

/// Transition matrix of J^k(E (x) L^n) for the flat bundle E, computed from
/// the series transformation of sections with the parallel-transport gauge
/// G(g, z) = P_{z0}(z) P_{g z0}(g z)^{-1}.  For A = 0 this is
/// jet_cocycle (x) Id_r on the block structure.
Mat twisted_jet_cocycle(const FlatConnectionSpec& spec, int k, int n, const MoebiusMap& g,
                        const GQ& z0);

/// Chart polynomial of P in Sym^n(V) under e1^(n-j) e2^j -> z^(n-j).
Poly global_section_poly(int n, const SymVector& p);

/// k-jet at z0 of the chart polynomial of P.
JetVector poly_global_jet(int n, const SymVector& p, const GQ& z0, int k);

/// The (k+1) x (n+1) matrix whose column j is poly_global_jet of the
/// monomial basis element, with entries polynomial in the base point.
PolyMat poly_global_jet_matrix(int n, int k);

}  // namespace jetline
