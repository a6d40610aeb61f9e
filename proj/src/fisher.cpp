// fisher.cpp — Fisher information by central differences and by the closed-form chain rule

#include "dar/fisher.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dar/errors.hpp"
#include "dar/optimize.hpp"

namespace dar::fisher {

std::string_view to_string(Method m) {
    return m == Method::central_fd ? "central_fd" : "analytic_chain";
}

std::string_view to_string(PeakKind k) {
    switch (k) {
    case PeakKind::interior: return "interior";
    case PeakKind::saturating: return "saturating";
    case PeakKind::boundary: return "boundary";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Evolution

Evolution::Evolution(const ModelParams& params, std::vector<double> p0)
    : model_(model_of(params)), p0_(std::move(p0)) {
    validate_distribution(p0_, state_count(model_));
    if (const auto* j = std::get_if<JunctionParams>(&params)) {
        tls_rates_ = tls::tls_rates(*j);
        gamma_hyb_ = j->gamma_hyb;
    } else {
        generator_ = multilevel::multilevel_generator(
            multilevel::multilevel_rates(std::get<MultilevelParams>(params)));
    }
}

std::vector<double> Evolution::populations(double t) const {
    if (model_ == ModelId::tls) {
        const auto p = tls::tls_propagate({p0_[0], p0_[1]}, t, tls_rates_, gamma_hyb_);
        return {p.p1, p.p2};
    }
    const multilevel::PopulationVector5 rho0 = Eigen::Map<const multilevel::PopulationVector5>(p0_.data());
    const auto rho = multilevel::propagate_multilevel(rho0, t, generator_);
    return {rho.data(), rho.data() + rho.size()};
}

std::vector<double> Evolution::steady_state() const {
    if (model_ == ModelId::tls) {
        const auto p = tls::tls_steady_state(tls_rates_);
        return {p.p1, p.p2};
    }
    const auto rho = multilevel::multilevel_steady_state(generator_);
    return {rho.data(), rho.data() + rho.size()};
}

double Evolution::relaxation_rate() const {
    if (model_ == ModelId::tls)
        return tls::decay_rate(tls_rates_, gamma_hyb_);
    const Eigen::VectorXcd values = generator_.eigenvalues();
    std::vector<double> rates;
    for (Eigen::Index i = 0; i < values.size(); ++i)
        rates.push_back(-values(i).real());
    std::sort(rates.begin(), rates.end());
    // rates[0] is the stationary (zero) mode.
    return rates.size() > 1 ? rates[1] : 0.0;
}

// ---------------------------------------------------------------------------
// Central differences

double fd_step(ParamId theta, double value, const FisherOptions& opts) {
    double h = opts.fd_step.value_or(std::cbrt(std::numeric_limits<double>::epsilon()) *
                                     std::max(std::abs(value), 1.0));
    if (is_positive_param(theta))
        h = std::min(h, 0.5 * value);
    if (!(h > 0.0) || !std::isfinite(h))
        throw DomainError("finite-difference step must be > 0 for " + std::string(to_string(theta)));
    return h;
}

double information(std::span<const double> p, std::span<const double> dp, double p_floor) {
    double sum = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < p_floor) {
            if (dp[i] == 0.0)
                continue;
            throw SmallProbabilityError(i, p[i],
                                        "population of state " + std::to_string(i) + " is " +
                                            show(p[i]) + ", below the floor " +
                                            show(p_floor));
        }
        sum += dp[i] * dp[i] / p[i];
    }
    return sum;
}

namespace {

struct Perturbed {
    ModelParams plus;
    ModelParams minus;
    double h;
};

Perturbed perturb(const ModelParams& params, ParamId theta, const FisherOptions& opts) {
    require_param(model_of(params), theta);
    validate(params);
    const double value = get_param(params, theta);
    const double h = fd_step(theta, value, opts);
    Perturbed out{params, params, h};
    set_param(out.plus, theta, value + h);
    set_param(out.minus, theta, value - h);
    return out;
}

std::vector<double> central_difference(const std::vector<double>& plus, const std::vector<double>& minus,
                                       double h) {
    std::vector<double> d(plus.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        d[i] = (plus[i] - minus[i]) / (2.0 * h);
    return d;
}

const JunctionParams& require_tls(const ModelParams& params) {
    if (const auto* j = std::get_if<JunctionParams>(&params))
        return *j;
    throw DomainError("analytic_chain differentiation is only available for the tls model");
}

// ---------------------------------------------------------------------------
// Chain rule for the two-level closed forms

struct Seeds {
    double eps_d{0}, eps_a{0}, omega0{0}, mu_l{0}, mu_r{0}, t_l{0}, t_r{0}, gamma{0};
};

Seeds seed_for(ParamId theta) {
    Seeds s;
    switch (theta) {
    case ParamId::eps_d: s.eps_d = 1; break;
    case ParamId::eps_a: s.eps_a = 1; break;
    case ParamId::omega0: s.omega0 = 1; break;
    case ParamId::mu_L: s.mu_l = 1; break;
    case ParamId::mu_R: s.mu_r = 1; break;
    case ParamId::T_L: s.t_l = 1; break;
    case ParamId::T_R: s.t_r = 1; break;
    case ParamId::gamma_hyb: s.gamma = 1; break;
    default: require_param(ModelId::tls, theta);
    }
    return s;
}

// d/dtheta fermi(energy, res) given the derivatives of energy, mu and T.
double fermi_dtheta(double energy, const Reservoir& res, double d_energy, double d_mu, double d_temp) {
    return fermi_denergy(energy, res) *
           (d_energy - d_mu - (energy - res.mu) / res.temperature * d_temp);
}

struct SteadyDerivative {
    tls::RateSet2 rates;
    double d_p1_ss; // d p1_ss / d theta
    double d_sigma; // d (sum of factors) / d theta
};

SteadyDerivative steady_derivative(const JunctionParams& j, const Seeds& s) {
    const auto& l = j.left;
    const auto& r = j.right;
    const double w = j.omega0;

    const double f_l = fermi(j.eps_d, l);
    const double f_r = fermi(j.eps_a, r);
    const double c1 = fermi_complement(j.eps_a + w, r);
    const double c2 = fermi_complement(j.eps_d + w, l);
    const double c3 = fermi_complement(j.eps_a - w, r);
    const double c4 = fermi_complement(j.eps_d - w, l);

    const double df_l = fermi_dtheta(j.eps_d, l, s.eps_d, s.mu_l, s.t_l);
    const double df_r = fermi_dtheta(j.eps_a, r, s.eps_a, s.mu_r, s.t_r);
    const double dc1 = -fermi_dtheta(j.eps_a + w, r, s.eps_a + s.omega0, s.mu_r, s.t_r);
    const double dc2 = -fermi_dtheta(j.eps_d + w, l, s.eps_d + s.omega0, s.mu_l, s.t_l);
    const double dc3 = -fermi_dtheta(j.eps_a - w, r, s.eps_a - s.omega0, s.mu_r, s.t_r);
    const double dc4 = -fermi_dtheta(j.eps_d - w, l, s.eps_d - s.omega0, s.mu_l, s.t_l);

    tls::RateSet2 rates{f_l * c1, f_r * c2, f_l * c3, f_r * c4};
    const double fwd = rates.forward();
    const double bwd = rates.backward();
    const double sigma = fwd + bwd;
    if (!(sigma > 0.0))
        throw DegenerateGeneratorError("two-level generator has zero total rate; steady state undefined");

    const double d_fwd = df_l * c1 + f_l * dc1 + df_r * c2 + f_r * dc2;
    const double d_bwd = df_l * c3 + f_l * dc3 + df_r * c4 + f_r * dc4;
    return {rates, (d_bwd * fwd - bwd * d_fwd) / (sigma * sigma), d_fwd + d_bwd};
}

} // namespace

double fisher_at_time_analytic(const JunctionParams& params, ParamId theta, double t,
                               const tls::PopulationVector2& p0, double p_floor) {
    params.validate();
    if (!(t >= 0.0) || !std::isfinite(t))
        throw DomainError("time must be >= 0, got " + show(t));
    const Seeds s = seed_for(theta);
    const auto sd = steady_derivative(params, s);
    const auto ss = tls::tls_steady_state(sd.rates);
    const double sigma = sd.rates.total();
    const double gamma = params.gamma_hyb * sigma;
    const double d_gamma = s.gamma * sigma + params.gamma_hyb * sd.d_sigma;
    const double decay = t == 0.0 ? 1.0 : std::exp(-gamma * t);

    const double p[2] = {ss.p1 + (p0.p1 - ss.p1) * decay, ss.p2 + (p0.p2 - ss.p2) * decay};
    const double dp[2] = {sd.d_p1_ss * (1.0 - decay) - (p0.p1 - ss.p1) * t * d_gamma * decay,
                          -sd.d_p1_ss * (1.0 - decay) - (p0.p2 - ss.p2) * t * d_gamma * decay};
    return information(p, dp, p_floor);
}

double fisher_steady_state_analytic(const JunctionParams& params, ParamId theta, double p_floor) {
    params.validate();
    const auto sd = steady_derivative(params, seed_for(theta));
    const auto ss = tls::tls_steady_state(sd.rates);
    const double p[2] = {ss.p1, ss.p2};
    const double dp[2] = {sd.d_p1_ss, -sd.d_p1_ss};
    return information(p, dp, p_floor);
}

double fisher_at_time(const ModelParams& params, ParamId theta, double t, std::span<const double> p0,
                      const FisherOptions& opts) {
    if (opts.method == Method::analytic_chain) {
        validate_distribution(p0, 2);
        return fisher_at_time_analytic(require_tls(params), theta, t, {p0[0], p0[1]}, opts.p_floor);
    }
    const auto pert = perturb(params, theta, opts);
    const std::vector<double> start(p0.begin(), p0.end());
    const Evolution base(params, start), plus(pert.plus, start), minus(pert.minus, start);
    const auto dp = central_difference(plus.populations(t), minus.populations(t), pert.h);
    return information(base.populations(t), dp, opts.p_floor);
}

double fisher_steady_state(const ModelParams& params, ParamId theta, const FisherOptions& opts) {
    if (opts.method == Method::analytic_chain)
        return fisher_steady_state_analytic(require_tls(params), theta, opts.p_floor);
    const auto pert = perturb(params, theta, opts);
    const auto start = default_initial(model_of(params));
    const Evolution base(params, start), plus(pert.plus, start), minus(pert.minus, start);
    const auto dp = central_difference(plus.steady_state(), minus.steady_state(), pert.h);
    return information(base.steady_state(), dp, opts.p_floor);
}

std::string information_unit(ParamId) {
    // Every selectable parameter is an energy (rates and temperatures included).
    return "eV^-2";
}

void validate_time_grid(std::span<const double> times) {
    if (times.empty())
        throw DomainError("time grid is empty");
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (!(times[i] >= 0.0) || !std::isfinite(times[i]))
            throw DomainError("time grid entry " + std::to_string(i) + " must be finite and >= 0");
        if (i > 0 && !(times[i] > times[i - 1]))
            throw DomainError("time grid must be strictly increasing (index " + std::to_string(i) + ")");
    }
}

FisherSeries fisher_series(const ModelParams& params, ParamId theta, std::span<const double> times,
                           std::span<const double> p0, const FisherOptions& opts) {
    validate_time_grid(times);
    FisherSeries series;
    series.model = model_of(params);
    series.theta = theta;
    series.times.assign(times.begin(), times.end());
    series.method = opts.method;
    series.unit = information_unit(theta);
    series.values.reserve(times.size());

    auto annotate = [&](std::size_t k, const SmallProbabilityError& e) {
        return SmallProbabilityError(e.state(), e.value(),
                                     std::string(e.what()) + " at grid index " + std::to_string(k) +
                                         " (t = " + show(times[k]) + ")");
    };

    if (opts.method == Method::analytic_chain) {
        validate_distribution(p0, 2);
        const auto& j = require_tls(params);
        for (std::size_t k = 0; k < times.size(); ++k) {
            try {
                series.values.push_back(fisher_at_time_analytic(j, theta, times[k], {p0[0], p0[1]}, opts.p_floor));
            } catch (const SmallProbabilityError& e) {
                throw annotate(k, e);
            }
        }
        return series;
    }

    const auto pert = perturb(params, theta, opts);
    series.diff_step = pert.h;
    const std::vector<double> start(p0.begin(), p0.end());
    const Evolution base(params, start), plus(pert.plus, start), minus(pert.minus, start);
    for (std::size_t k = 0; k < times.size(); ++k) {
        const double t = times[k];
        const auto dp = central_difference(plus.populations(t), minus.populations(t), pert.h);
        try {
            series.values.push_back(information(base.populations(t), dp, opts.p_floor));
        } catch (const SmallProbabilityError& e) {
            throw annotate(k, e);
        }
    }
    return series;
}

// ---------------------------------------------------------------------------
// Optimal measurement time

OptimalTime find_optimal_time(const FisherSeries& series, const std::function<double(double)>& evaluate,
                              const OptimalTimeOptions& opts) {
    const auto& t = series.times;
    const auto& v = series.values;
    if (t.empty() || t.size() != v.size())
        throw DomainError("find_optimal_time: series is empty or malformed");

    const std::size_t n = v.size();
    const double vmax = *std::max_element(v.begin(), v.end());
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (v[i] >= vmax * (1.0 - opts.plateau_tol))
            k = i;

    OptimalTime out{PeakKind::boundary, t[k], v[k], k};
    if (k == n - 1) {
        const double t_ref = t.back() - 0.1 * (t.back() - t.front());
        std::size_t r = 0;
        while (r + 1 < n && t[r] < t_ref)
            ++r;
        const double slope = v.back() > 0.0 ? std::abs(v.back() - v[r]) / v.back() : 0.0;
        if (n > 1 && slope < opts.saturation_slope)
            out.kind = PeakKind::saturating;
        return out;
    }
    if (k == 0)
        return out;

    out.kind = PeakKind::interior;
    if (evaluate) {
        const auto refined = golden_section_maximize(evaluate, t[k - 1], t[k + 1], opts.time_tol);
        if (refined.value >= out.value) {
            out.time = refined.x;
            out.value = refined.value;
        }
    }
    return out;
}

OptimalTime find_optimal_time(const FisherSeries& series, const OptimalTimeOptions& opts) {
    return find_optimal_time(series, std::function<double(double)>{}, opts);
}

OptimalTime optimal_time(const ModelParams& params, ParamId theta, std::span<const double> times,
                         std::span<const double> p0, const FisherOptions& fopts,
                         const OptimalTimeOptions& opts) {
    const auto series = fisher_series(params, theta, times, p0, fopts);
    const std::vector<double> start(p0.begin(), p0.end());
    auto evaluate = [&](double t) { return fisher_at_time(params, theta, t, start, fopts); };
    return find_optimal_time(series, evaluate, opts);
}

} // namespace dar::fisher
