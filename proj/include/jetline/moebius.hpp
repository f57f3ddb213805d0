#pragma once

#include "jetline/rng.hpp"
#include "jetline/series.hpp"

namespace jetline {

/// Element of SL(2,C) with exact entries, acting on the affine chart of the
/// projective line by z -> (az + b)/(cz + d).  The determinant condition
/// ad - bc = 1 is checked at construction.
class MoebiusMap {
public:
    MoebiusMap(GQ a, GQ b, GQ c, GQ d);

    static MoebiusMap identity() { return {GQ(1), GQ(0), GQ(0), GQ(1)}; }
    static MoebiusMap translation(const GQ& t) { return {GQ(1), t, GQ(0), GQ(1)}; }
    /// diag(u, 1/u)
    static MoebiusMap scaling(const GQ& u) { return {u, GQ(0), GQ(0), u.inverse()}; }
    /// [[0, 1], [-1, 0]]: z -> -1/z
    static MoebiusMap inversion() { return {GQ(0), GQ(1), GQ(-1), GQ(0)}; }

    const GQ& a() const { return a_; }
    const GQ& b() const { return b_; }
    const GQ& c() const { return c_; }
    const GQ& d() const { return d_; }

    bool is_identity() const;

    /// cz + d; zero means the image of z leaves the chart.
    GQ denom_at(const GQ& z) const { return c_ * z + d_; }
    bool in_chart(const GQ& z) const { return !denom_at(z).is_zero(); }

    /// (az + b)/(cz + d); throws ChartEscapeError when cz + d = 0.
    GQ act(const GQ& z) const;

    /// The automorphy factor mu_n(g, z) = (cz + d)^n.  Weight-n sections obey
    /// s(z) = mu_n(g, z) * s~(g z).
    GQ automorphy(int n, const GQ& z) const;

    /// Taylor series of g.z at z0 (constant term g.z0).
    TruncSeries act_series(const GQ& z0, int order) const;
    /// Taylor series of mu_n(g, .) at z0.
    TruncSeries automorphy_series(int n, const GQ& z0, int order) const;

    MoebiusMap inverse() const { return {d_, -b_, -c_, a_}; }
    MoebiusMap transpose() const { return {a_, c_, b_, d_}; }

    friend MoebiusMap compose(const MoebiusMap& g2, const MoebiusMap& g1);
    friend bool operator==(const MoebiusMap& x, const MoebiusMap& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
    }
    friend bool operator!=(const MoebiusMap& x, const MoebiusMap& y) { return !(x == y); }

    std::string str() const;

private:
    GQ a_, b_, c_, d_;
};

/// Random element with entries of bounded height: draws a, b, c, a != 0, and
/// sets d = (1 + bc)/a so the determinant is 1 by construction.  Retries
/// until the standard base points {0, 1, 2} stay in-chart.
MoebiusMap random_element(Rng& rng, long height);

}  // namespace jetline
