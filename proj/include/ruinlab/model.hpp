#ifndef RUINLAB_MODEL_HPP
#define RUINLAB_MODEL_HPP

#include <functional>
#include <optional>

#include "ruinlab/error.hpp"

namespace ruinlab {

// Benefit-size distribution, supported on (0, inf). Exponential unlocks the
// closed-form bounds and the ODE pipeline; anything else enters through its
// inverse CDF.
struct ClaimDist {
    enum class Kind { Exponential, Empirical };

    Kind kind = Kind::Exponential;
    double mu = 1.0;                               // mean benefit (Exponential)
    std::function<double(double)> inverse_cdf;     // Empirical only

    static ClaimDist exponential(double mu);
    static ClaimDist empirical(std::function<double(double)> inverse_cdf);

    void validate() const;
};

// The five-parameter model: reserve drift a, volatility sigma, payout
// intensity c, premium-arrival intensity alpha, and the benefit law.
struct ModelParams {
    double a = 0.0;
    double sigma = 0.0;
    double c = 0.0;
    double alpha = 0.0;
    ClaimDist claims;

    void validate() const;
};

class Derived {
  public:
    Derived(double kappa, std::optional<double> beta) : kappa_(kappa), beta_(beta) {}

    double kappa() const { return kappa_; }
    bool has_beta() const { return beta_.has_value(); }
    double beta() const {
        if (!beta_) throw Error(ErrorKind::DegenerateVolatility, "beta undefined for sigma = 0");
        return *beta_;
    }

  private:
    double kappa_;
    std::optional<double> beta_;
};

// kappa = a - sigma^2/2; beta = 2*kappa/sigma^2 (only when sigma > 0).
Derived derived_params(const ModelParams& params);

// Largest fixed investment share that keeps the effective regime index
// positive: min(1, 2a/sigma^2). Any share strictly below it gives
// beta(share) > 0.
double max_risky_share(double a, double sigma);

// Inverse-CDF draw of one benefit; uniform must lie strictly inside (0,1).
double claim_sample(const ClaimDist& dist, double uniform);

}  // namespace ruinlab

#endif
