#pragma once

#include "jetline/equiv.hpp"

namespace jetline {

/// Order-k holomorphic differential operator in a chart:
/// (D s)(z) = sum_j c_j(z) s^(j)(z), with r' x r matrices of rational
/// functions as coefficients.  Order is tight (c_k not identically zero)
/// unless the operator is zero.
struct DiffOperator {
    int order;
    int source_rank, target_rank;
    int source_weight, target_weight;
    std::vector<RatMat> coeffs;  // coeffs[j] = c_j, j = 0..order

    bool has_pole_at(const GQ& z) const;
    /// Tight order: drops identically-zero top coefficients.
    void demote();
};

/// Section of Hom(E, F) (x) (TX)^k in the chart, TX trivialized by d/dz.
struct SymbolSection {
    int tx_power;
    RatMat value;
};

/// sum_j c_j s^(j) as a series of order m; every component of s must have
/// order >= k + m.  Throws SingularityError at a pole of any c_j.
std::vector<TruncSeries> apply(const DiffOperator& d, const std::vector<TruncSeries>& s, int m);
TruncSeries apply(const DiffOperator& d, const TruncSeries& s, int m);

/// The pointwise functional (a_0, ..., a_k) -> sum_j c_j(z0) a_j as an
/// r' x (k+1)r matrix on raw-derivative jets.
Mat as_jet_functional(const DiffOperator& d, const GQ& z0);

/// Top coefficient c_k as the symbol section.
SymbolSection symbol(const DiffOperator& d);

/// D1 o D2 through action on series, coefficients recovered by exact
/// interpolation.
DiffOperator compose(const DiffOperator& d1, const DiffOperator& d2);

/// Prescribed-symbol lift: the canonical order-k operator from E (x) L^n to
/// E (x) L^(l+n-2k) whose symbol is theta0, built from the k-jet of theta0,
/// the invariant pairing p0 and the canonical jet isomorphisms.  Requires
/// n < 0 or n, l >= k (and the theta side l < 0 or l >= k).
DiffOperator lift_symbol(const RatMat& theta0, int k, int n, int l,
                         const FlatConnectionSpec& spec);

/// Checks that the symbol map computed from operators matches the model
/// homomorphisms of Cors 3/5/6 (branch chosen by (k, n)) under the canonical
/// identifications, on an operator basis plus random operators.
Report verify_symbol_model(int k, int n, std::uint64_t seed);

/// Searches over both charts of the projective line for a global first-order
/// operator L^n -> L^n (x) K with symbol 1; the exterior derivative is the
/// witness at n = 0 and the search is infeasible otherwise.
Report nonlift_probe(int n);

/// Operator transformation rule under g: functional relation
/// F_T(z0) = mu_{n + l - 2k}(g, z0) * F_T~(g z0) * T_jet(g, z0)^{-1}
/// with both operators built from corresponding data (used by the
/// chart-naturality acceptance check).
bool check_chart_naturality(const DiffOperator& op, const RatMat& theta0, int k, int n, int l,
                            const FlatConnectionSpec& spec, const MoebiusMap& g,
                            const std::vector<GQ>& sample_points);

/// Pull (theta0, A) through the Moebius map g: theta0~(w) =
/// mu_l(g, z(w))^{-1} theta0(z(w)) and A~(w) = A(z(w)) z'(w), the same
/// geometric data presented in the w coordinate.
void transform_data(const RatMat& theta0, const FlatConnectionSpec& spec, int l,
                    const MoebiusMap& g, RatMat& theta0_out, FlatConnectionSpec& spec_out);

}  // namespace jetline
