#pragma once

#include "jetline/jets.hpp"

#include <memory>
#include <optional>
#include <string>

namespace jetline {

/// Transition-matrix family T(g, z0) satisfying the pull-back cocycle
/// identity T(g2 g1, z0) = T(g1, z0) T(g2, g1 z0).
class Cocycle {
public:
    virtual ~Cocycle() = default;
    virtual int size() const = 0;
    virtual Mat at(const MoebiusMap& g, const GQ& z0) const = 0;
    virtual std::string describe() const = 0;
};

/// J^k(L^n) with the jet transition matrices.
class JetBundleCocycle : public Cocycle {
public:
    JetBundleCocycle(int k, int n) : k_(k), n_(n) {}
    int size() const override { return k_ + 1; }
    Mat at(const MoebiusMap& g, const GQ& z0) const override {
        return jet_cocycle(k_, n_, g, z0);
    }
    std::string describe() const override {
        return "jet(" + std::to_string(k_) + "," + std::to_string(n_) + ")";
    }

private:
    int k_, n_;
};

/// One irreducible block L^twist (x) V_degree.
struct ModelSummand {
    int twist;
    int degree;
};

/// Block-diagonal model cocycle: mu_twist(g, z0) * sym_rep(degree, g^T) per
/// summand.  The transpose matches the pull-back orientation, so the family
/// satisfies the same cocycle identity as the jet cocycles.
class ModelCocycle : public Cocycle {
public:
    explicit ModelCocycle(std::vector<ModelSummand> summands);
    int size() const override { return size_; }
    Mat at(const MoebiusMap& g, const GQ& z0) const override;
    std::string describe() const override;
    const std::vector<ModelSummand>& summands() const { return summands_; }

private:
    std::vector<ModelSummand> summands_;
    int size_;
};

/// Polynomial matrix intertwining two cocycles:
/// T_A(g, z0) Sigma(g z0) = Sigma(z0) T_B(g, z0) for all samples.
struct Intertwiner {
    PolyMat sigma;
    std::string source;    // B, the model side
    std::string target;    // A, the jet side
    int max_entry_degree;
    std::string normalization;
};

/// Exact basis of polynomial matrices Sigma with entry degrees <= degree_bound
/// satisfying the intertwining identity on sampled (g, z0) pairs, re-verified
/// on fresh samples.  Uses the scaling-weight grading of both cocycles to
/// reduce each entry to a single forced monomial when available.
std::vector<PolyMat> solve_intertwiner(const Cocycle& a, const Cocycle& b, int degree_bound,
                                       int sample_count, std::uint64_t seed);

/// Exact check of the intertwining identity on fresh random samples.
bool check_intertwiner(const Cocycle& a, const Cocycle& b, const PolyMat& sigma, int trials,
                       std::uint64_t seed);

/// Deterministic supply of distinct small rational base points.
std::vector<GQ> sample_base_points(std::size_t count);

/// Theorem-1 branch: true when J^k(L^n) splits as V_n + L^{-(k+1)} V_{k-n-1}.
inline bool thm1_split(int k, int n) { return k > n && n >= 0; }

/// Model summands of J^k(L^n) per Theorem 1.
std::vector<ModelSummand> thm1_model(int k, int n);

/// The canonical normalized intertwiner from the Theorem-1 model to
/// J^k(L^n).  Normalization: in the split branch the V_n column block is the
/// matrix of jets of global polynomial sections; in every branch the
/// tautological-line generator m(z) is pinned by
///   Sigma(z) m(z) = C(n,k) k! e_top   (non-split branch)
///   Sigma(z) (0 + m(z))  =      k! e_top   (split branch, second block)
/// which makes the forgetful-map and symbol models exact with the constants
/// frozen in this module.
const Intertwiner& thm1_iso(int k, int n);

/// Coordinates of (e1 - z e2)^k with polynomial entries; spans the
/// tautological line 𝓛^k inside the V_k model.
std::vector<Poly> taut_line_power(int k);

/// Truncate a jet to order n and invert the global-section jet matrix at the
/// base point: the (n+1) x (k+1) matrix of the Lemma-1 splitting beta.
Mat splitting_beta(int k, int n, const GQ& z0);

/// Pointwise verification report.
struct Report {
    std::string claim;
    std::vector<std::pair<std::string, std::string>> params;
    std::string status;  // "pass" | "fail" | "feasible" | "infeasible"
    std::vector<std::pair<std::string, std::string>> witness;
    std::vector<int> intertwiner_degrees;
    bool passed() const { return status == "pass" || status == "feasible"; }
};

/// Conjugates the forgetful map by the canonical isomorphisms and compares
/// with the model maps of Props 2, 3 and 4 at exact sample points.
Report verify_forgetful_model(int k, int n);

/// Model map the forgetful conjugate must equal (exposed for tests).
PolyMat forgetful_model_map(int k, int n);

/// Irreducible summands (twist, degree) of J^k(L^a) (x) J^l(L^b) with
/// multiplicity, by Theorem 1 and the Clebsch-Gordan rule.
std::vector<ModelSummand> decompose_jet_tensor(int k, int a, int l, int b);

}  // namespace jetline
