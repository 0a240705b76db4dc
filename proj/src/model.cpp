#include "ruinlab/model.hpp"

#include <cmath>

namespace ruinlab {

ClaimDist ClaimDist::exponential(double mu) {
    ClaimDist dist;
    dist.kind = Kind::Exponential;
    dist.mu = mu;
    dist.validate();
    return dist;
}

ClaimDist ClaimDist::empirical(std::function<double(double)> inverse_cdf) {
    ClaimDist dist;
    dist.kind = Kind::Empirical;
    dist.inverse_cdf = std::move(inverse_cdf);
    dist.validate();
    return dist;
}

void ClaimDist::validate() const {
    if (kind == Kind::Exponential) {
        if (!(mu > 0.0)) throw Error(ErrorKind::BadInput, "claim mean mu must be positive");
    } else {
        if (!inverse_cdf) throw Error(ErrorKind::BadInput, "empirical claim law needs an inverse CDF");
    }
}

void ModelParams::validate() const {
    if (!(sigma >= 0.0)) throw Error(ErrorKind::BadInput, "sigma must be >= 0");
    if (!(c >= 0.0)) throw Error(ErrorKind::BadInput, "c must be >= 0");
    if (!(alpha >= 0.0)) throw Error(ErrorKind::BadInput, "alpha must be >= 0");
    if (!std::isfinite(a)) throw Error(ErrorKind::BadInput, "a must be finite");
    claims.validate();
}

Derived derived_params(const ModelParams& params) {
    params.validate();
    const double kappa = params.a - 0.5 * params.sigma * params.sigma;
    if (params.sigma > 0.0)
        return Derived(kappa, 2.0 * kappa / (params.sigma * params.sigma));
    return Derived(kappa, std::nullopt);
}

double max_risky_share(double a, double sigma) {
    if (!(sigma > 0.0)) throw Error(ErrorKind::DegenerateVolatility, "sigma must be positive");
    if (!(a >= 0.0)) throw Error(ErrorKind::BadInput, "a must be >= 0");
    return std::min(1.0, 2.0 * a / (sigma * sigma));
}

double claim_sample(const ClaimDist& dist, double uniform) {
    if (!(uniform > 0.0) || !(uniform < 1.0))
        throw Error(ErrorKind::BadUniform, "uniform must lie strictly inside (0,1)");
    if (dist.kind == ClaimDist::Kind::Exponential)
        return -dist.mu * std::log1p(-uniform);
    return dist.inverse_cdf(uniform);
}

}  // namespace ruinlab
