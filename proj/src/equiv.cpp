#include "jetline/equiv.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <tuple>

namespace jetline {

ModelCocycle::ModelCocycle(std::vector<ModelSummand> summands)
    : summands_(std::move(summands)), size_(0) {
    if (summands_.empty()) throw UsageError("model cocycle needs at least one summand");
    for (const ModelSummand& s : summands_) {
        if (s.degree < 0) throw UsageError("model summand degree must be >= 0");
        size_ += s.degree + 1;
    }
}

Mat ModelCocycle::at(const MoebiusMap& g, const GQ& z0) const {
    Mat m(size_, size_);
    int off = 0;
    const MoebiusMap gt = g.transpose();
    for (const ModelSummand& s : summands_) {
        Mat block = g.automorphy(s.twist, z0) * sym_rep(s.degree, gt);
        m.set_block(off, off, block);
        off += s.degree + 1;
    }
    return m;
}

std::string ModelCocycle::describe() const {
    std::string out = "model(";
    for (std::size_t i = 0; i < summands_.size(); ++i) {
        if (i) out += " + ";
        out += "L^" + std::to_string(summands_[i].twist) + "*V_" +
               std::to_string(summands_[i].degree);
    }
    return out + ")";
}

// Deterministic base-point supply: small exact rationals, no repeats.
std::vector<GQ> sample_base_points(std::size_t count) {
    static const std::vector<GQ> fixed = [] {
        std::vector<GQ> pts;
        auto add = [&pts](long p, long q) { pts.push_back(GQ(p, q)); };
        add(0, 1); add(1, 1); add(-1, 1); add(2, 1); add(-2, 1);
        add(1, 2); add(-1, 2); add(3, 1); add(-3, 1); add(1, 3);
        add(-1, 3); add(3, 2); add(-3, 2); add(2, 3); add(-2, 3);
        add(4, 1); add(-4, 1); add(1, 4); add(-1, 4); add(4, 3);
        add(-4, 3); add(3, 4); add(-3, 4); add(5, 1); add(-5, 1);
        add(5, 2); add(-5, 2); add(2, 5); add(5, 3); add(5, 4);
        add(6, 1); add(7, 1); add(1, 5); add(-1, 5); add(6, 5);
        add(7, 2); add(7, 3); add(8, 1); add(9, 1); add(10, 1);
        return pts;
    }();
    std::vector<GQ> pts(fixed.begin(), fixed.begin() + std::min(count, fixed.size()));
    Rng rng(0x9d2c5680u);
    while (pts.size() < count) {
        GQ z = {rng.next_rational(12)};
        bool dup = false;
        for (const GQ& p : pts) dup = dup || p == z;
        if (!dup) pts.push_back(z);
    }
    return pts;
}

namespace {

std::vector<MoebiusMap> sample_group_elements(std::uint64_t seed) {
    std::vector<MoebiusMap> gs;
    gs.push_back(MoebiusMap::translation(GQ(1)));
    gs.push_back(MoebiusMap::inversion());
    gs.push_back(MoebiusMap::scaling(GQ(2)));
    Rng rng(seed);
    while (gs.size() < 8) gs.push_back(random_element(rng, 2));
    return gs;
}

// Exponent e with ratio = base^e for a positive rational ratio, if any.
std::optional<long> exact_log(const mpq_class& ratio, unsigned long base) {
    if (ratio <= 0) return std::nullopt;
    mpz_class num = ratio.get_num(), den = ratio.get_den();
    auto log_of = [base](mpz_class v) -> std::optional<long> {
        long e = 0;
        while (v > 1 && mpz_divisible_ui_p(v.get_mpz_t(), base)) {
            mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), base);
            ++e;
        }
        if (v != 1) return std::nullopt;
        return e;
    };
    auto en = log_of(num);
    auto ed = log_of(den);
    if (!en || !ed) return std::nullopt;
    return *en - *ed;
}

// Diagonal z-independent scaling matrices of a cocycle, when that structure
// holds; tested exactly at two base points.
std::optional<Vec> scaling_diagonal(const Cocycle& c, const GQ& u) {
    const MoebiusMap g = MoebiusMap::scaling(u);
    const Mat m1 = c.at(g, GQ(5));
    const Mat m2 = c.at(g, GQ(7, 1));
    if (m1 != m2) return std::nullopt;
    Vec diag;
    for (int i = 0; i < m1.rows(); ++i)
        for (int j = 0; j < m1.cols(); ++j) {
            if (i == j) {
                diag.push_back(m1.at(i, j));
            } else if (!m1.at(i, j).is_zero()) {
                return std::nullopt;
            }
        }
    return diag;
}

// Forced monomial degree per entry from the torus-weight grading:
// entry (i, j) of Sigma satisfies Sigma_ij(u^2 z) = (beta_j / alpha_i) Sigma_ij(z),
// so it is the single monomial of degree e/2 when the exponent e is even and
// nonnegative, and zero otherwise.  Empty result means no grading available.
std::vector<std::vector<int>> graded_degrees(const Cocycle& a, const Cocycle& b,
                                             int degree_bound) {
    auto da2 = scaling_diagonal(a, GQ(2));
    auto db2 = scaling_diagonal(b, GQ(2));
    auto da3 = scaling_diagonal(a, GQ(3));
    auto db3 = scaling_diagonal(b, GQ(3));
    if (!da2 || !db2 || !da3 || !db3) return {};
    std::vector<std::vector<int>> deg(a.size(), std::vector<int>(b.size(), -1));
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < b.size(); ++j) {
            const GQ r2 = (*db2)[j] / (*da2)[i];
            const GQ r3 = (*db3)[j] / (*da3)[i];
            if (!r2.is_real() || !r3.is_real()) continue;
            auto e2 = exact_log(r2.re(), 2);
            auto e3 = exact_log(r3.re(), 3);
            if (!e2 || !e3 || *e2 != *e3) continue;
            if (*e2 < 0 || *e2 % 2 != 0) continue;
            int d = static_cast<int>(*e2 / 2);
            if (d <= degree_bound) deg[i][j] = d;
        }
    return deg;
}

struct SamplePair {
    MoebiusMap g;
    GQ z0;
};

std::vector<SamplePair> make_samples(std::uint64_t seed, std::size_t points) {
    std::vector<SamplePair> out;
    const auto gs = sample_group_elements(seed);
    const auto zs = sample_base_points(points);
    for (const GQ& z : zs)
        for (const MoebiusMap& g : gs) {
            if (!g.in_chart(z)) continue;
            out.push_back({g, z});
        }
    return out;
}

}  // namespace

bool check_intertwiner(const Cocycle& a, const Cocycle& b, const PolyMat& sigma, int trials,
                       std::uint64_t seed) {
    Rng rng(seed);
    int done = 0;
    while (done < trials) {
        MoebiusMap g = random_element(rng, 5);
        GQ z0 = {rng.next_rational(6)};
        if (!g.in_chart(z0)) continue;
        GQ w = g.act(z0);
        Mat lhs = a.at(g, z0) * eval(sigma, w);
        Mat rhs = eval(sigma, z0) * b.at(g, z0);
        if (lhs != rhs) return false;
        ++done;
    }
    return true;
}

std::vector<PolyMat> solve_intertwiner(const Cocycle& a, const Cocycle& b, int degree_bound,
                                       int sample_count, std::uint64_t seed) {
    if (degree_bound < 0) throw UsageError("degree bound must be >= 0");
    const int ra = a.size(), rb = b.size();

    const auto grading = graded_degrees(a, b, degree_bound);
    const bool graded = !grading.empty();

    // Unknown layout.  Graded: one coefficient per admissible entry.  Dense:
    // degree_bound+1 coefficients per entry.
    std::vector<std::vector<int>> first_idx(ra, std::vector<int>(rb, -1));
    int unknowns = 0;
    for (int i = 0; i < ra; ++i)
        for (int j = 0; j < rb; ++j) {
            if (graded && grading[i][j] < 0) continue;
            first_idx[i][j] = unknowns;
            unknowns += graded ? 1 : degree_bound + 1;
        }
    if (unknowns == 0) return {};

    const auto samples = make_samples(seed, std::max<std::size_t>(sample_count, 8));

    auto rows_for = [&](const SamplePair& s, std::vector<Vec>& rows) {
        const GQ w = s.g.act(s.z0);
        const Mat ta = a.at(s.g, s.z0);
        const Mat tb = b.at(s.g, s.z0);
        std::vector<GQ> zpow(degree_bound + 1), wpow(degree_bound + 1);
        zpow[0] = wpow[0] = GQ(1);
        for (int d = 1; d <= degree_bound; ++d) {
            zpow[d] = zpow[d - 1] * s.z0;
            wpow[d] = wpow[d - 1] * w;
        }
        for (int i = 0; i < ra; ++i)
            for (int q = 0; q < rb; ++q) {
                Vec row(unknowns, GQ(0));
                bool nonzero = false;
                auto put = [&](int p, int j, const GQ& coeff, const std::vector<GQ>& pws) {
                    if (first_idx[p][j] < 0 || coeff.is_zero()) return;
                    if (graded) {
                        row[first_idx[p][j]] += coeff * pws[grading[p][j]];
                    } else {
                        for (int d = 0; d <= degree_bound; ++d)
                            row[first_idx[p][j] + d] += coeff * pws[d];
                    }
                    nonzero = true;
                };
                for (int j = 0; j < ra; ++j) put(j, q, ta.at(i, j), wpow);
                for (int j = 0; j < rb; ++j) put(i, j, -(tb.at(j, q)), zpow);
                if (nonzero) rows.push_back(std::move(row));
            }
    };

    auto to_sigma = [&](const Vec& x) {
        PolyMat sigma(ra, rb);
        for (int i = 0; i < ra; ++i)
            for (int j = 0; j < rb; ++j) {
                if (first_idx[i][j] < 0) continue;
                if (graded) {
                    const int d = grading[i][j];
                    if (x[first_idx[i][j]].is_zero()) continue;
                    std::vector<GQ> mono(d + 1, GQ(0));
                    mono[d] = x[first_idx[i][j]];
                    sigma.at(i, j) = Poly(std::move(mono));
                } else {
                    std::vector<GQ> cs(degree_bound + 1);
                    for (int d = 0; d <= degree_bound; ++d) cs[d] = x[first_idx[i][j] + d];
                    sigma.at(i, j) = Poly(std::move(cs));
                }
            }
        return sigma;
    };

    std::size_t budget = static_cast<std::size_t>(3 * unknowns + 12);
    for (;;) {
        std::vector<Vec> rows;
        for (const SamplePair& s : samples) {
            if (rows.size() >= budget) break;
            rows_for(s, rows);
        }
        Mat system(static_cast<int>(rows.size()), unknowns);
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (int c = 0; c < unknowns; ++c) system.at(static_cast<int>(r), c) = rows[r][c];
        std::vector<PolyMat> basis;
        bool all_ok = true;
        for (const Vec& v : exact_nullspace(system)) {
            PolyMat sigma = to_sigma(v);
            if (!check_intertwiner(a, b, sigma, 12, seed ^ 0xfeedULL)) {
                all_ok = false;
                break;
            }
            basis.push_back(std::move(sigma));
        }
        if (all_ok) return basis;
        if (budget >= samples.size() * std::size_t(ra) * rb)
            throw SingularityError("intertwiner fit did not stabilize");
        budget *= 2;
    }
}

std::vector<ModelSummand> thm1_model(int k, int n) {
    if (k < 0) throw UsageError("jet order must be >= 0");
    if (thm1_split(k, n)) return {{0, n}, {-(k + 1), k - n - 1}};
    return {{n - k, k}};
}

std::vector<Poly> taut_line_power(int k) {
    // (e1 - z e2)^k: coefficient of e1^(k-j) e2^j is C(k,j) (-z)^j.
    std::vector<Poly> v;
    for (int j = 0; j <= k; ++j) {
        std::vector<GQ> mono(j + 1, GQ(0));
        GQ sign = (j % 2 == 0) ? GQ(1) : GQ(-1);
        mono[j] = sign * binomial(k, j);
        v.emplace_back(std::move(mono));
    }
    return v;
}

namespace {

std::vector<Poly> apply_poly_mat(const PolyMat& m, const std::vector<Poly>& v) {
    if (int(v.size()) != m.cols()) throw UsageError("poly matrix-vector mismatch");
    std::vector<Poly> out(m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out[i] += m.at(i, j) * v[j];
    return out;
}

int max_entry_degree(const PolyMat& m) {
    int d = 0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) d = std::max(d, m.at(i, j).degree());
    return d;
}

constexpr std::uint64_t kSolverSeed = 0x5eed0001ULL;

Intertwiner compute_thm1_iso(int k, int n) {
    const JetBundleCocycle a(k, n);
    const ModelCocycle b(thm1_model(k, n));
    const int cap = 2 * k + std::abs(n) + 2;
    auto basis = solve_intertwiner(a, b, cap, (k + 3) * (k + 3), kSolverSeed);

    Intertwiner iso;
    iso.source = b.describe();
    iso.target = a.describe();

    if (!thm1_split(k, n)) {
        if (basis.size() != 1)
            throw SingularityError("Theorem 1 (non-split): expected a 1-dimensional space, got " +
                                   std::to_string(basis.size()));
        PolyMat sigma = std::move(basis[0]);
        // Pin: Sigma(z) (e1 - z e2)^k = C(n,k) k! e_top.
        auto image = apply_poly_mat(sigma, taut_line_power(k));
        for (int i = 0; i < k; ++i)
            if (!image[i].is_zero())
                throw SingularityError("tautological line does not map to the iota line");
        if (image[k].degree() != 0)
            throw SingularityError("tautological pin is not a constant");
        GQ scale = binomial(n, k) * factorial(k) / image[k].coeff(0);
        iso.sigma = scale * sigma;
        iso.normalization = "Sigma*m_k = C(n,k)*k!*e_top";
    } else {
        if (basis.size() != 2)
            throw SingularityError("Theorem 1 (split): expected a 2-dimensional space, got " +
                                   std::to_string(basis.size()));
        // Pin the combination alpha*S1 + beta*S2: the V_n block must equal the
        // global-section jet matrix, and the second block must send the
        // tautological generator to k! e_top.
        const PolyMat gamma = poly_global_jet_matrix(n, k);
        std::vector<Poly> gen2(k + 1);
        {
            auto mhat = taut_line_power(k - n - 1);
            for (int j = 0; j < k - n; ++j) gen2[n + 1 + j] = mhat[j];
        }
        std::vector<Poly> im1 = apply_poly_mat(basis[0], gen2);
        std::vector<Poly> im2 = apply_poly_mat(basis[1], gen2);

        std::vector<GQ> lhs1, lhs2, rhs;
        auto push_poly_eq = [&](const Poly& p1, const Poly& p2, const Poly& target) {
            int dmax = std::max({p1.degree(), p2.degree(), target.degree()});
            for (int d = 0; d <= dmax; ++d) {
                lhs1.push_back(p1.coeff(d));
                lhs2.push_back(p2.coeff(d));
                rhs.push_back(target.coeff(d));
            }
        };
        for (int i = 0; i <= k; ++i)
            for (int j = 0; j <= n; ++j)
                push_poly_eq(basis[0].at(i, j), basis[1].at(i, j), gamma.at(i, j));
        const GQ topval = factorial(k);
        for (int i = 0; i <= k; ++i) {
            Poly target = (i == k) ? Poly(topval) : Poly();
            push_poly_eq(im1[i], im2[i], target);
        }
        Mat system(static_cast<int>(rhs.size()), 2);
        Vec rvec(rhs.size());
        for (std::size_t r = 0; r < rhs.size(); ++r) {
            system.at(static_cast<int>(r), 0) = lhs1[r];
            system.at(static_cast<int>(r), 1) = lhs2[r];
            rvec[r] = rhs[r];
        }
        Vec coeffs;
        if (!solve_linear(system, rvec, coeffs))
            throw SingularityError("split-branch pin system is inconsistent");
        // solve_linear ignores redundant rows only when consistent; re-check.
        Vec residual = system * coeffs;
        for (std::size_t r = 0; r < rhs.size(); ++r)
            if (residual[r] != rvec[r])
                throw SingularityError("split-branch pin residual is nonzero");
        PolyMat sigma = coeffs[0] * basis[0];
        sigma += coeffs[1] * basis[1];
        iso.sigma = std::move(sigma);
        iso.normalization = "V_n block = global jets; Sigma*(0+m) = k!*e_top";
    }

    // The canonical intertwiner has constant nonzero determinant.
    GQ d1 = determinant(eval(iso.sigma, GQ(0)));
    GQ d2 = determinant(eval(iso.sigma, GQ(3)));
    if (d1.is_zero() || d1 != d2)
        throw SingularityError("canonical intertwiner determinant is not a nonzero constant");
    iso.max_entry_degree = max_entry_degree(iso.sigma);
    if (!check_intertwiner(a, b, iso.sigma, 10, kSolverSeed ^ 0xabcdULL))
        throw SingularityError("pinned intertwiner failed fresh verification");
    return iso;
}

}  // namespace

const Intertwiner& thm1_iso(int k, int n) {
    static std::map<std::pair<int, int>, Intertwiner> cache;
    auto key = std::make_pair(k, n);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, compute_thm1_iso(k, n)).first;
    return it->second;
}

Mat splitting_beta(int k, int n, const GQ& z0) {
    if (!(k > n && n >= 0)) throw UsageError("splitting_beta needs k > n >= 0");
    Mat gamma_n = eval(poly_global_jet_matrix(n, n), z0);
    Mat trunc(n + 1, k + 1);
    for (int i = 0; i <= n; ++i) trunc.at(i, i) = GQ(1);
    return inverse(gamma_n) * trunc;
}

PolyMat forgetful_model_map(int k, int n) {
    if (k < 1) throw UsageError("forgetful model needs k >= 1");
    const Poly z = Poly::var();
    // The quotient-by-L map in chart coordinates: form F -> (z d/de1 + d/de2) F / deg.
    auto contraction = [&z](int deg) {
        PolyMat c(deg, deg + 1);
        for (int j = 0; j <= deg; ++j) {
            if (j < deg) c.at(j, j) = GQ(deg - j, deg) * z;
            if (j > 0) c.at(j - 1, j) = Poly(GQ(j, deg));
        }
        return c;
    };
    if (!thm1_split(k, n)) return contraction(k);  // Props 2 and 3
    if (k - 1 > n) {
        // Prop 4: identity on V_n, minus-contraction on the second summand.
        PolyMat m(k, k + 1);
        for (int i = 0; i <= n; ++i) m.at(i, i) = Poly(GQ(1));
        PolyMat c = contraction(k - n - 1);
        for (int i = 0; i < c.rows(); ++i)
            for (int j = 0; j < c.cols(); ++j) m.at(n + 1 + i, n + 1 + j) = -c.at(i, j);
        return m;
    }
    // Prop 4 with k - 1 = n: identity + the zero map on L^{-(k+1)}.
    PolyMat m(n + 1, k + 1);
    for (int i = 0; i <= n; ++i) m.at(i, i) = Poly(GQ(1));
    return m;
}

Report verify_forgetful_model(int k, int n) {
    Report rep;
    rep.claim = "forgetful_model";
    rep.params = {{"k", std::to_string(k)}, {"n", std::to_string(n)}};
    if (k < 1) throw UsageError("verify_forgetful_model needs k >= 1");

    const Intertwiner& sk = thm1_iso(k, n);
    const Intertwiner& sk1 = thm1_iso(k - 1, n);
    rep.intertwiner_degrees = {sk.max_entry_degree, sk1.max_entry_degree};
    const PolyMat model = forgetful_model_map(k, n);
    const Mat fwd = forgetful_matrix(k);

    for (const GQ& z0 : sample_base_points(static_cast<std::size_t>(2 * k + std::abs(n) + 8))) {
        Mat lhs = inverse(eval(sk1.sigma, z0)) * (fwd * eval(sk.sigma, z0));
        Mat rhs = eval(model, z0);
        if (lhs != rhs) {
            rep.status = "fail";
            rep.witness = {{"z0", z0.str()}};
            return rep;
        }
    }
    rep.status = "pass";
    return rep;
}

std::vector<ModelSummand> decompose_jet_tensor(int k, int a, int l, int b) {
    if (k < 0 || l < 0) throw UsageError("jet orders must be >= 0");
    const auto fa = thm1_model(k, a);
    const auto fb = thm1_model(l, b);
    std::vector<ModelSummand> out;
    for (const ModelSummand& x : fa)
        for (const ModelSummand& y : fb)
            for (int i = 0; i <= std::min(x.degree, y.degree); ++i)
                out.push_back({x.twist + y.twist, x.degree + y.degree - 2 * i});
    std::sort(out.begin(), out.end(), [](const ModelSummand& p, const ModelSummand& q) {
        return std::tie(p.twist, p.degree) < std::tie(q.twist, q.degree);
    });
    return out;
}

}  // namespace jetline
