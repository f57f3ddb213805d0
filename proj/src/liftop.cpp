#include "jetline/liftop.hpp"

#include <algorithm>
#include <functional>

namespace jetline {

bool DiffOperator::has_pole_at(const GQ& z) const {
    for (const RatMat& c : coeffs)
        for (int i = 0; i < c.rows(); ++i)
            for (int j = 0; j < c.cols(); ++j)
                if (c.at(i, j).has_pole_at(z)) return true;
    return false;
}

void DiffOperator::demote() {
    auto is_zero_mat = [](const RatMat& m) {
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j)
                if (!m.at(i, j).is_zero()) return false;
        return true;
    };
    while (order > 0 && is_zero_mat(coeffs.back())) {
        coeffs.pop_back();
        --order;
    }
}

std::vector<TruncSeries> apply(const DiffOperator& d, const std::vector<TruncSeries>& s, int m) {
    if (int(s.size()) != d.source_rank) throw UsageError("apply: section rank mismatch");
    for (const TruncSeries& comp : s)
        if (comp.order() < d.order + m) throw UsageError("apply: series too short");
    const GQ z0 = s[0].base_point();
    if (d.has_pole_at(z0)) throw SingularityError("operator coefficient pole at base point");

    // Raw derivatives of each component, truncated at order m.
    std::vector<std::vector<TruncSeries>> deriv(d.order + 1);
    for (int j = 0; j <= d.order; ++j)
        for (int c = 0; c < d.source_rank; ++c) {
            TruncSeries ds = s[c];
            for (int t = 0; t < j; ++t) ds = series_derivative(ds);
            TruncSeries cut(z0, m);
            for (int t = 0; t <= m; ++t) cut.coeff(t) = ds.coeff(t);
            deriv[j].push_back(cut);
        }
    std::vector<TruncSeries> out(d.target_rank, TruncSeries(z0, m));
    for (int j = 0; j <= d.order; ++j)
        for (int p = 0; p < d.target_rank; ++p)
            for (int q = 0; q < d.source_rank; ++q) {
                const RatFun& c = d.coeffs[j].at(p, q);
                if (c.is_zero()) continue;
                out[p] += series_mul(TruncSeries::of_ratfun(c, z0, m), deriv[j][q]);
            }
    return out;
}

TruncSeries apply(const DiffOperator& d, const TruncSeries& s, int m) {
    if (d.source_rank != 1 || d.target_rank != 1)
        throw UsageError("scalar apply needs a rank-1 operator");
    return apply(d, std::vector<TruncSeries>{s}, m)[0];
}

Mat as_jet_functional(const DiffOperator& d, const GQ& z0) {
    if (d.has_pole_at(z0)) throw SingularityError("operator coefficient pole at base point");
    Mat f(d.target_rank, (d.order + 1) * d.source_rank);
    for (int j = 0; j <= d.order; ++j)
        for (int p = 0; p < d.target_rank; ++p)
            for (int q = 0; q < d.source_rank; ++q)
                f.at(p, j * d.source_rank + q) = d.coeffs[j].at(p, q).eval(z0);
    return f;
}

SymbolSection symbol(const DiffOperator& d) {
    return {2 * d.order, d.coeffs.back()};
}

namespace {

// Exact rational-function recovery from point samples (Cauchy interpolation):
// solve num(z_i) - v_i den(z_i) = 0 with bounded degrees, then verify on the
// fitting nodes.  Returns nullopt when the bounds are too small.
std::optional<RatFun> fit_ratfun(const std::vector<std::pair<GQ, GQ>>& samples, int dnum,
                                 int dden) {
    const int un = dnum + 1, ud = dden + 1;
    Mat system(static_cast<int>(samples.size()), un + ud);
    for (std::size_t r = 0; r < samples.size(); ++r) {
        const GQ& z = samples[r].first;
        const GQ& v = samples[r].second;
        GQ zp = 1;
        for (int d = 0; d < un; ++d) {
            system.at(static_cast<int>(r), d) = zp;
            zp *= z;
        }
        zp = 1;
        for (int d = 0; d < ud; ++d) {
            system.at(static_cast<int>(r), un + d) = -(v * zp);
            zp *= z;
        }
    }
    for (const Vec& x : exact_nullspace(system)) {
        std::vector<GQ> nc(x.begin(), x.begin() + un);
        std::vector<GQ> dc(x.begin() + un, x.end());
        Poly den{std::vector<GQ>(dc)};
        if (den.is_zero()) continue;
        RatFun f(Poly(std::move(nc)), std::move(den));
        bool ok = true;
        for (const auto& [z, v] : samples) {
            if (f.has_pole_at(z) || f.eval(z) != v) {
                ok = false;
                break;
            }
        }
        if (ok) return f;
    }
    return std::nullopt;
}

// Pointwise functional of an operator construction, interpolated into exact
// rational coefficient matrices and verified at fresh nodes.
DiffOperator interpolate_operator(int order, int source_rank, int target_rank, int source_weight,
                                  int target_weight,
                                  const std::function<bool(const GQ&)>& node_ok,
                                  const std::function<Mat(const GQ&)>& functional_at,
                                  int degree_hint) {
    DiffOperator op;
    op.order = order;
    op.source_rank = source_rank;
    op.target_rank = target_rank;
    op.source_weight = source_weight;
    op.target_weight = target_weight;

    for (int attempt = 0, bound = degree_hint; attempt < 5; ++attempt, bound *= 2) {
        const std::size_t need = 2 * static_cast<std::size_t>(bound) + 8;
        std::vector<GQ> nodes, fresh;
        for (const GQ& z : sample_base_points(3 * need)) {
            if (!node_ok(z)) continue;
            if (nodes.size() < need)
                nodes.push_back(z);
            else if (fresh.size() < 4)
                fresh.push_back(z);
        }
        if (nodes.size() < need || fresh.size() < 4)
            throw SingularityError("not enough pole-free interpolation nodes");

        std::vector<Mat> values;
        values.reserve(nodes.size());
        for (const GQ& z : nodes) values.push_back(functional_at(z));

        op.coeffs.assign(order + 1, RatMat(target_rank, source_rank));
        bool fitted = true;
        for (int j = 0; j <= order && fitted; ++j)
            for (int p = 0; p < target_rank && fitted; ++p)
                for (int q = 0; q < source_rank && fitted; ++q) {
                    std::vector<std::pair<GQ, GQ>> samples;
                    samples.reserve(nodes.size());
                    for (std::size_t t = 0; t < nodes.size(); ++t)
                        samples.push_back({nodes[t], values[t].at(p, j * source_rank + q)});
                    auto f = fit_ratfun(samples, bound, bound);
                    if (!f) {
                        fitted = false;
                        break;
                    }
                    op.coeffs[j].at(p, q) = *f;
                }
        if (!fitted) continue;

        bool verified = true;
        for (const GQ& z : fresh) {
            Mat expect = functional_at(z);
            if (as_jet_functional(op, z) != expect) {
                verified = false;
                break;
            }
        }
        if (verified) return op;
    }
    throw SingularityError("operator interpolation did not stabilize");
}

Mat blockify(const Mat& m, int r) { return kron(m, Mat::identity(r)); }

}  // namespace

DiffOperator compose(const DiffOperator& d1, const DiffOperator& d2) {
    if (d1.source_rank != d2.target_rank || d1.source_weight != d2.target_weight)
        throw UsageError("compose: operator interface mismatch");
    const int k = d1.order + d2.order;
    const int r = d2.source_rank;

    auto node_ok = [&](const GQ& z) { return !d1.has_pole_at(z) && !d2.has_pole_at(z); };
    auto functional_at = [&](const GQ& z0) {
        Mat f(d1.target_rank, (k + 1) * r);
        for (int j = 0; j <= k; ++j)
            for (int c = 0; c < r; ++c) {
                std::vector<TruncSeries> basis;
                GQ invfact = factorial(j).inverse();
                for (int cc = 0; cc < r; ++cc) {
                    TruncSeries s(z0, k);
                    if (cc == c) s.coeff(j) = invfact;
                    basis.push_back(std::move(s));
                }
                auto mid = apply(d2, basis, d1.order);
                auto outv = apply(d1, mid, 0);
                for (int p = 0; p < d1.target_rank; ++p) f.at(p, j * r + c) = outv[p].coeff(0);
            }
        return f;
    };
    int hint = 2;
    for (const DiffOperator* d : {&d1, &d2})
        for (const RatMat& c : d->coeffs)
            for (int i = 0; i < c.rows(); ++i)
                for (int j = 0; j < c.cols(); ++j)
                    hint += c.at(i, j).num().degree() + c.at(i, j).den().degree() + 1;
    DiffOperator out = interpolate_operator(k, r, d1.target_rank, d2.source_weight,
                                            d1.target_weight, node_ok, functional_at, hint);
    out.demote();
    return out;
}

DiffOperator lift_symbol(const RatMat& theta0, int k, int n, int l,
                         const FlatConnectionSpec& spec) {
    const int r = spec.rank;
    if (theta0.rows() != r || theta0.cols() != r)
        throw UsageError("lift_symbol: theta0 must be r x r");
    if (k < 0) throw UsageError("lift_symbol: order must be >= 0");
    if (!(n < 0 || (n >= k && l >= k)))
        throw UsageError("lift_symbol: need n < 0 or n, l >= k");
    if (!(l < 0 || l >= k))
        throw UsageError("lift_symbol: theta side needs l < 0 or l >= k");

    const PolyMat& skn = thm1_iso(k, n).sigma;
    const PolyMat& skl = thm1_iso(k, l).sigma;
    const Mat pairing = p0_pairing_matrix(k);
    const GQ correction = factorial(k) * binomial(n, k);

    auto node_ok = [&](const GQ& z) {
        if (spec.has_pole_at(z)) return false;
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                if (theta0.at(i, j).has_pole_at(z)) return false;
        return true;
    };

    auto functional_at = [&](const GQ& z0) {
        const MatSeries transport = parallel_transport_jet(spec, z0, k);
        const MatSeries transport_inv = transport.inv();

        // Flat-frame jet of theta0 as a section of End(E) (x) L^l.
        MatSeries theta_series(z0, k, r);
        for (int d = 0; d <= k; ++d) {
            Mat coeff(r, r);
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j) {
                    TruncSeries e = TruncSeries::of_ratfun(theta0.at(i, j), z0, k);
                    coeff.at(i, j) = e.coeff(d);
                }
            theta_series.coeff(d) = coeff;
        }
        const MatSeries flat_theta = transport_inv * theta_series * transport;

        const Mat skl_inv = inverse(eval(skl, z0));
        std::vector<Mat> theta_hat(k + 1, Mat(r, r));
        for (int j = 0; j <= k; ++j)
            for (int d = 0; d <= k; ++d) {
                const GQ& c = skl_inv.at(j, d);
                if (c.is_zero()) continue;
                theta_hat[j] += (c * factorial(d)) * flat_theta.coeff(d);
            }

        // Source jets to Sym^k coordinates through the flat frame.
        const Mat m_source =
            blockify(inverse(eval(skn, z0)), r) * jet_mult_operator(transport_inv, k);

        Mat f(r, (k + 1) * r);
        for (int j = 0; j <= k; ++j)
            for (int jp = 0; jp <= k; ++jp) {
                const GQ& w = pairing.at(j, jp);
                if (w.is_zero()) continue;
                f += w * (theta_hat[jp] * m_source.block(j * r, 0, r, (k + 1) * r));
            }
        return correction * f;
    };

    int hint = k * (thm1_iso(k, n).max_entry_degree + thm1_iso(k, l).max_entry_degree) + 4;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            hint += theta0.at(i, j).num().degree() + theta0.at(i, j).den().degree() + 1;
            hint += (k + 1) * (spec.connection.at(i, j).num().degree() +
                               spec.connection.at(i, j).den().degree() + 1);
        }
    DiffOperator op = interpolate_operator(k, r, r, n, l + n - 2 * k, node_ok, functional_at,
                                           hint);
    return op;
}

namespace {

// theta-side generator and its pin value per Theorem-1 branch.
void symbol_generator(int k, int n, std::vector<Poly>& gen, GQ& pinval) {
    gen.assign(k + 1, Poly());
    if (!thm1_split(k, n)) {
        gen = taut_line_power(k);
        pinval = binomial(n, k) * factorial(k);
    } else {
        auto mhat = taut_line_power(k - n - 1);
        for (int j = 0; j < k - n; ++j) gen[n + 1 + j] = mhat[j];
        pinval = factorial(k);
    }
}

}  // namespace

Report verify_symbol_model(int k, int n, std::uint64_t seed) {
    Report rep;
    rep.claim = "symbol_model";
    std::string branch = !thm1_split(k, n) ? "cor3" : (k - 1 > n ? "cor5" : "cor6");
    rep.params = {{"k", std::to_string(k)}, {"n", std::to_string(n)}, {"branch", branch}};

    const Intertwiner& iso = thm1_iso(k, n);
    rep.intertwiner_degrees = {iso.max_entry_degree};
    std::vector<Poly> gen;
    GQ pinval;
    symbol_generator(k, n, gen, pinval);

    auto fail = [&rep](const std::string& what, const GQ& z0) {
        rep.status = "fail";
        rep.witness = {{"check", what}, {"z0", z0.str()}};
        return rep;
    };

    // Operator basis d^j plus random polynomial-coefficient operators.
    std::vector<DiffOperator> ops;
    for (int j = 0; j <= k; ++j) {
        DiffOperator d;
        d.order = k;
        d.source_rank = d.target_rank = 1;
        d.source_weight = n;
        d.target_weight = n - 2 * k;
        d.coeffs.assign(k + 1, RatMat(1, 1));
        d.coeffs[j].at(0, 0) = RatFun(GQ(1));
        ops.push_back(std::move(d));
    }
    Rng rng(seed);
    for (int t = 0; t < 3; ++t) {
        DiffOperator d;
        d.order = k;
        d.source_rank = d.target_rank = 1;
        d.source_weight = n;
        d.target_weight = n - 2 * k;
        d.coeffs.assign(k + 1, RatMat(1, 1));
        for (int j = 0; j <= k; ++j) {
            std::vector<GQ> cs;
            for (int deg = 0; deg <= 2; ++deg) cs.push_back(rng.next_gaussian_rational(3));
            d.coeffs[j].at(0, 0) = RatFun(Poly(std::move(cs)));
        }
        ops.push_back(std::move(d));
    }

    for (const GQ& z0 : sample_base_points(static_cast<std::size_t>(2 * k + std::abs(n) + 8))) {
        const Mat sig = eval(iso.sigma, z0);
        // Kernel correspondence (Cor 2 and its split-branch analogues): the
        // tautological generator maps to the iota line with the pinned scale.
        Vec gen_val(k + 1);
        for (int j = 0; j <= k; ++j) gen_val[j] = gen[j].eval(z0);
        Vec image = sig * gen_val;
        for (int i = 0; i <= k; ++i) {
            GQ expect = (i == k) ? pinval : GQ(0);
            if (image[i] != expect) return fail("kernel_line", z0);
        }
        // Symbol model (Cors 3/5/6): the ideal-theoretic symbol computed by
        // restricting the conjugated functional to the generator equals the
        // top coefficient.
        for (const DiffOperator& op : ops) {
            Mat func = as_jet_functional(op, z0);
            Vec through = func * (sig * gen_val);
            GQ model_symbol = through[0] / pinval;
            GQ direct = op.coeffs[k].at(0, 0).eval(z0);
            if (model_symbol != direct) return fail("symbol_route", z0);
        }
        // Prop 5 on a flat rank-2 twist: the twisted forgetful map equals
        // Id_E tensor the untwisted model map under the flat-frame and
        // canonical identifications.
        if (k >= 1) {
            FlatConnectionSpec spec = FlatConnectionSpec::trivial(2);
            spec.connection.at(0, 1) = RatFun(Poly::var());
            const Intertwiner& iso1 = thm1_iso(k - 1, n);
            auto ident = [&](int kk, const PolyMat& sg) {
                MatSeries t = parallel_transport_jet(spec, z0, kk);
                return blockify(inverse(eval(sg, z0)), 2) * jet_mult_operator(t.inv(), kk);
            };
            Mat psi_k = ident(k, iso.sigma);
            Mat psi_k1 = ident(k - 1, iso1.sigma);
            Mat lhs = psi_k1 * forgetful_matrix(k, 2);
            Mat rhs = blockify(eval(forgetful_model_map(k, n), z0), 2) * psi_k;
            if (lhs != rhs) return fail("prop5_twisted", z0);
        }
    }
    rep.status = "pass";
    return rep;
}

Report nonlift_probe(int n) {
    Report rep;
    rep.claim = "nonlift_probe";
    rep.params = {{"n", std::to_string(n)}};

    // First-order operator L^n -> L^n (x) K with symbol 1, written in the two
    // standard charts glued by w = -1/z: D = d/dz + c0(z), D~ = d/dw + c0~(w).
    // Holomorphy on the sphere forces c0~(-1/z) = n z + z^2 c0(z); comparing
    // coefficients of both polynomial sides gives an exact linear system.
    const int dc = 2 * std::abs(n) + 4;
    // Unknowns: c0 coefficients a_0..a_dc, c0~ coefficients b_0..b_dc.
    // Identity in z after clearing z^dc:
    //   sum_j b_j (-1)^j z^(dc-j) - n z^(dc+1) - sum_j a_j z^(dc+2+j) = 0.
    const int max_pow = 2 * dc + 2;
    Mat system(max_pow + 1, 2 * (dc + 1));
    Vec rhs(max_pow + 1, GQ(0));
    for (int j = 0; j <= dc; ++j) {
        system.at(dc + 2 + j, j) = GQ(1);                                  // a_j
        system.at(dc - j, dc + 1 + j) = (j % 2 == 0) ? GQ(-1) : GQ(1);     // b_j
    }
    rhs[dc + 1] = GQ(n);

    Vec solution;
    if (solve_linear(system, rhs, solution)) {
        std::vector<GQ> ac(solution.begin(), solution.begin() + dc + 1);
        Poly c0{std::move(ac)};
        rep.status = "feasible";
        rep.witness = {{"c0", c0.str()},
                       {"operator", c0.is_zero() ? "d/dz (exterior derivative)"
                                                 : "d/dz + c0"}};
    } else {
        rep.status = "infeasible";
        rep.witness = {{"reason", "no polynomial zeroth-order term matches on both charts"}};
    }
    return rep;
}

void transform_data(const RatMat& theta0, const FlatConnectionSpec& spec, int l,
                    const MoebiusMap& g, RatMat& theta0_out, FlatConnectionSpec& spec_out) {
    const int r = spec.rank;
    // z(w) = g^{-1} w = (d w - b)/(-c w + a); then mu_l(g, z(w)) = (-c w + a)^{-l}
    // and z'(w) = (-c w + a)^{-2}.
    const Poly znum(std::vector<GQ>{-g.b(), g.d()});
    const Poly zden(std::vector<GQ>{g.a(), -g.c()});

    auto subst = [&](const RatFun& f) {
        // p(z) of degree dp: p(znum/zden) = (sum_j p_j znum^j zden^(dp-j)) / zden^dp.
        auto lift_poly = [&](const Poly& p, int dp) {
            Poly acc;
            Poly znum_pow = Poly::one();
            std::vector<Poly> zden_pow(dp + 1);
            zden_pow[0] = Poly::one();
            for (int j = 1; j <= dp; ++j) zden_pow[j] = zden_pow[j - 1] * zden;
            for (int j = 0; j <= dp; ++j) {
                if (!(p.coeff(j) == GQ(0))) acc += p.coeff(j) * (znum_pow * zden_pow[dp - j]);
                znum_pow = znum_pow * znum;
            }
            return acc;
        };
        const int dp = std::max(f.num().degree(), 0);
        const int dq = std::max(f.den().degree(), 0);
        Poly num = lift_poly(f.num(), dp);
        Poly den = lift_poly(f.den(), dq);
        // Common clearing: f(z(w)) = num/zden^dp / (den/zden^dq) = num zden^dq / (den zden^dp).
        Poly zden_dp = Poly::one(), zden_dq = Poly::one();
        for (int t = 0; t < dp; ++t) zden_dp = zden_dp * zden;
        for (int t = 0; t < dq; ++t) zden_dq = zden_dq * zden;
        return RatFun(num * zden_dq, den * zden_dp);
    };

    const RatFun zden_rf{zden};
    RatFun mu_inv(Poly::one());  // (-c w + a)^l = mu_l(g, z(w))^{-1}
    for (int t = 0; t < std::abs(l); ++t)
        mu_inv = (l >= 0) ? mu_inv * zden_rf : mu_inv / zden_rf;

    theta0_out = RatMat(r, r);
    spec_out = FlatConnectionSpec::trivial(r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            theta0_out.at(i, j) = mu_inv * subst(theta0.at(i, j));
            spec_out.connection.at(i, j) =
                subst(spec.connection.at(i, j)) / (zden_rf * zden_rf);
        }
}

bool check_chart_naturality(const DiffOperator& op, const RatMat& theta0, int k, int n, int l,
                            const FlatConnectionSpec& spec, const MoebiusMap& g,
                            const std::vector<GQ>& sample_points) {
    RatMat theta_t;
    FlatConnectionSpec spec_t;
    transform_data(theta0, spec, l, g, theta_t, spec_t);
    DiffOperator op_t = lift_symbol(theta_t, k, n, l, spec_t);

    const int r = spec.rank;
    for (const GQ& z0 : sample_points) {
        if (!g.in_chart(z0)) continue;
        const GQ w0 = g.act(z0);
        if (op.has_pole_at(z0) || op_t.has_pole_at(w0)) continue;
        Mat tk = blockify(jet_cocycle(k, n, g, z0), r);
        Mat lhs = as_jet_functional(op, z0);
        Mat rhs = g.automorphy(n + l - 2 * k, z0) * (as_jet_functional(op_t, w0) * inverse(tk));
        if (lhs != rhs) return false;
    }
    return true;
}

}  // namespace jetline
