#include "ncbf/lcmv.hpp"

#include <cmath>

#include "ncbf/kernels.hpp"

namespace ncbf {

namespace {

double wrap_phase(double phi) {
    phi = std::fmod(phi + kPi, 2.0 * kPi);
    if (phi < 0.0) phi += 2.0 * kPi;
    return phi - kPi;
}

}  // namespace

std::vector<double> BeamWeights::phases() const {
    std::vector<double> out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) out[i] = wrap_phase(std::arg(w[i]));
    return out;
}

std::vector<double> BeamWeights::magnitudes() const {
    std::vector<double> out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) out[i] = std::abs(w[i]);
    return out;
}

std::vector<double> BeamWeights::magnitudes_db() const {
    std::vector<double> out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        const double mag = std::abs(w[i]);
        out[i] = mag > 0.0 ? std::max(20.0 * std::log10(mag), kMagnitudeDbFloor)
                           : kMagnitudeDbFloor;
    }
    return out;
}

LcmvInputs build_constraints(const ArrayConfig& config, const NcbfScenario& scenario) {
    const auto locs = scenario.ordered_locations();
    const std::size_t k = locs.size();
    std::vector<ChannelVector> h;
    h.reserve(k);
    for (const auto& loc : locs) {
        loc.validate();
        h.push_back(channel_vector(config, loc));
    }
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            const double c = channel_correlation(h[i], h[j]);
            const double limit = i == 0 ? kCoincidentCorrelation : kDuplicateCorrelation;
            if (c > limit)
                throw CoincidentUsers("build_constraints: users " + std::to_string(i) +
                                      " and " + std::to_string(j) +
                                      " are nearly coincident (correlation " +
                                      std::to_string(c) + ")");
        }
    }
    LcmvInputs inputs;
    inputs.constraints = CMatrix(static_cast<std::size_t>(config.num_elements), k);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t n = 0; n < h[j].size(); ++n)
            inputs.constraints(n, j) = h[j][n];
    inputs.desired_gain.assign(k, 0.0);
    inputs.desired_gain[0] = 1.0;
    inputs.covariance = CMatrix::identity(static_cast<std::size_t>(config.num_elements));
    return inputs;
}

namespace {

// C^H R^-1 C with the R = I fast path, Hermitian-symmetrized
CMatrix constraint_gram(const LcmvInputs& inputs, CMatrix* r_inv_c) {
    const CMatrix& c = inputs.constraints;
    CMatrix y;
    if (inputs.covariance.is_identity()) {
        y = c;
    } else {
        CholeskyFactor chol(inputs.covariance);
        y = chol.solve(c);
    }
    CMatrix g = c.adjoint_times(y);
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = i + 1; j < g.cols(); ++j) {
            const cplx avg = 0.5 * (g(i, j) + std::conj(g(j, i)));
            g(i, j) = avg;
            g(j, i) = std::conj(avg);
        }
    if (r_inv_c) *r_inv_c = std::move(y);
    return g;
}

}  // namespace

double constraint_condition(const LcmvInputs& inputs) {
    return hermitian_condition(constraint_gram(inputs, nullptr));
}

std::vector<cplx> solve_lcmv_raw(const LcmvInputs& inputs) {
    CMatrix y;
    const CMatrix g = constraint_gram(inputs, &y);
    const double cond = hermitian_condition(g);
    if (!(cond < kSingularConditionLimit))
        throw SingularConstraints("solve_lcmv: constraint Gram condition " +
                                  std::to_string(cond) + " exceeds limit");
    const std::size_t k = g.rows();
    std::vector<cplx> d(k);
    for (std::size_t i = 0; i < k; ++i) d[i] = inputs.desired_gain[i];

    CholeskyFactor chol(g);
    std::vector<cplx> z = chol.solve(d);
    // one step of iterative refinement keeps the nulls at machine precision
    std::vector<cplx> residual(d);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) residual[i] -= g(i, j) * z[j];
    const std::vector<cplx> corr = chol.solve(residual);
    for (std::size_t i = 0; i < k; ++i) z[i] += corr[i];

    return y.times(z);
}

BeamWeights solve_lcmv(const LcmvInputs& inputs) {
    return normalize_and_reference(BeamWeights{solve_lcmv_raw(inputs)});
}

BeamWeights normalize_and_reference(const BeamWeights& weights) {
    const auto& k = kernels::active();
    const double power = k.sum_abs_sq(weights.w.data(), weights.w.size());
    if (!(power > 0.0)) throw ZeroVector("normalize_and_reference: zero weight vector");
    BeamWeights out = weights;
    const cplx first = out.w.empty() ? cplx(0.0) : out.w[0];
    const cplx rotation =
        std::abs(first) > 0.0 ? std::conj(first) / std::abs(first) : cplx(1.0);
    const double scale = 1.0 / std::sqrt(power);
    for (auto& v : out.w) v *= rotation * scale;
    if (!out.w.empty() && std::abs(out.w[0]) > 0.0)
        out.w[0] = cplx(std::abs(out.w[0]), 0.0);  // pin the reference exactly
    return out;
}

}  // namespace ncbf
