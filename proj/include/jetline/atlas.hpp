#pragma once

#include "jetline/equiv.hpp"

namespace jetline {

/// Projective atlas presented as chart/transition data in SL(2,C).  For an
/// ordered overlap (i, j) the map tau_{ij} carries chart-j coordinates to
/// chart-i coordinates: z_i = tau_{ij} . z_j.  Samples are exact points of
/// the "from" chart.
struct AtlasTransition {
    std::string from, to;
    MoebiusMap map;
    std::vector<GQ> samples;  // points in the "from" chart along the overlap
};

struct ProjectiveAtlas {
    struct Chart {
        std::string id;
        std::vector<GQ> samples;
    };
    std::vector<Chart> charts;
    std::vector<AtlasTransition> transitions;
    std::vector<std::array<std::string, 3>> triples;

    const AtlasTransition* find_transition(const std::string& to,
                                           const std::string& from) const;
};

/// Bundle descriptor for induced cocycles: a tensor product of factors
/// L^n, V_j and jet(k, n).
struct BundleDescriptor {
    struct Factor {
        enum class Kind { Line, Sym, Jet } kind;
        int n = 0;  // twist (Line, Jet)
        int j = 0;  // degree (Sym) / order (Jet)
    };
    std::vector<Factor> factors;

    static BundleDescriptor parse(const std::string& text);
    int rank() const;
    std::string str() const;
};

/// Per-overlap transition matrices of the induced bundle, evaluated at the
/// overlap samples: one matrix list per transition.
struct BundleCocycle {
    BundleDescriptor descriptor;
    int rank;
    // transition index -> per-sample matrices, aligned with transitions[i].samples
    std::vector<std::vector<Mat>> matrices;
};

/// Verifies tau_ii = Id, the triple products tau_ik tau_kj tau_ji = Id, and
/// in-chart consistency of the overlap samples.  A triple product of -Id is
/// reported as a sign inconsistency while the projective conditions pass.
Report check_atlas(const ProjectiveAtlas& atlas);

/// Four translation charts modeling C/(Z + Zi); all transition maps are
/// unipotent, so every induced automorphy factor is 1.
ProjectiveAtlas torus_example();

/// Two charts glued by the inversion z -> -1/z.
ProjectiveAtlas sphere_example();

BundleCocycle induced_cocycle(const ProjectiveAtlas& atlas, const BundleDescriptor& descriptor);

/// Conjugates the induced jet(k, n) cocycle by the chartwise canonical
/// intertwiner and checks exact equality with the induced model cocycle on
/// every overlap sample (Corollary 1 as a cocycle-equivalence certificate).
Report verify_corollary1(const ProjectiveAtlas& atlas, int k, int n);

/// Checks that the induced L^2 cocycle equals the tangent cocycle computed
/// from the derivative of the transition maps.
Report verify_L2_TM(const ProjectiveAtlas& atlas);

/// Prop 1 at atlas level: the constant Clebsch-Gordan change of basis
/// block-diagonalizes the induced V_m (x) V_n cocycle into the V_{m+n-2i}
/// cocycles on every chart.
Report verify_prop1_atlas(const ProjectiveAtlas& atlas, int m, int n);

}  // namespace jetline
