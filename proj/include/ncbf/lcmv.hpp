#pragma once

#include <vector>

#include "ncbf/array_channel.hpp"
#include "ncbf/linalg.hpp"

namespace ncbf {

// One desired user plus K-1 interferers.
struct NcbfScenario {
    UserLocation desired;
    std::vector<UserLocation> interferers;

    int total_users() const { return 1 + static_cast<int>(interferers.size()); }

    std::vector<UserLocation> ordered_locations() const {
        std::vector<UserLocation> out;
        out.reserve(interferers.size() + 1);
        out.push_back(desired);
        out.insert(out.end(), interferers.begin(), interferers.end());
        return out;
    }
};

// Constraint system for the closed-form solve: response matrix C (N x K,
// desired user in column 0), gain vector d (1 at the desired index, 0
// elsewhere), covariance R (Hermitian positive definite; identity unless a
// caller supplies one).
struct LcmvInputs {
    CMatrix constraints;
    std::vector<double> desired_gain;
    CMatrix covariance;
};

// N unit-power weights, phase of element 1 referenced to zero.
struct BeamWeights {
    std::vector<cplx> w;

    std::size_t size() const { return w.size(); }
    std::vector<double> phases() const;         // radians in [-pi, pi), first 0
    std::vector<double> magnitudes() const;     // linear
    std::vector<double> magnitudes_db() const;  // 20 log10, floored at -300 dB
};

// Correlation above which a desired/interferer pair is considered coincident
// for labeling purposes. Interferer pairs get a far looser bound: two nulls
// at nearby (even collinear) points remain a well-posed constraint set.
inline constexpr double kCoincidentCorrelation = 0.95;
inline constexpr double kDuplicateCorrelation = 0.999;
inline constexpr double kSingularConditionLimit = 1e12;
inline constexpr double kMagnitudeDbFloor = -300.0;

LcmvInputs build_constraints(const ArrayConfig& config, const NcbfScenario& scenario);

// condition number of C^H R^-1 C
double constraint_condition(const LcmvInputs& inputs);

// closed form R^-1 C (C^H R^-1 C)^-1 d, before normalization; the response at
// the desired user is exactly 1 by construction.
std::vector<cplx> solve_lcmv_raw(const LcmvInputs& inputs);

// raw solve followed by normalize_and_reference
BeamWeights solve_lcmv(const LcmvInputs& inputs);

// Rotate so the first element's phase is zero, then scale to unit power.
BeamWeights normalize_and_reference(const BeamWeights& weights);

}  // namespace ncbf
