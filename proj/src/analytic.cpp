#include "aoi/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace aoi {

double Pmf::mean() const {
    double m = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i)
        m += (support_offset + static_cast<double>(i)) * probs[i];
    return m;
}

double Pmf::second_moment() const {
    double m = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        double v = support_offset + static_cast<double>(i);
        m += v * v * probs[i];
    }
    return m;
}

double Pmf::at(int value) const {
    int idx = value - support_offset;
    if (idx < 0 || idx >= static_cast<int>(probs.size())) return 0.0;
    return probs[idx];
}

void Pmf::validate() const {
    double total = 0.0;
    for (double p : probs) {
        if (!(p >= 0.0 && p <= 1.0 + 1e-12))
            throw DomainError("pmf entry outside [0,1]");
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-9)
        throw DomainError("pmf does not sum to 1");
}

std::pair<double, double> geometric_moments(double p) {
    if (!(p > 0.0 && p <= 1.0))
        throw DomainError("geometric_moments requires 0 < p <= 1");
    return {1.0 / p, (2.0 - p) / (p * p)};
}

std::vector<double> binomial_pmf(int n, double p) {
    if (n < 0) throw DomainError("binomial_pmf requires n >= 0");
    if (!(p >= 0.0 && p <= 1.0))
        throw DomainError("binomial_pmf requires p in [0,1]");
    std::vector<double> w(static_cast<std::size_t>(n) + 1, 0.0);
    if (p == 0.0) {
        w[0] = 1.0;
        return w;
    }
    if (p == 1.0) {
        w[n] = 1.0;
        return w;
    }
    if (n > 64) {
        // log-space evaluation avoids overflow/underflow for large n
        double lp = std::log(p), lq = std::log1p(-p);
        double lg = std::lgamma(n + 1.0);
        for (int a = 0; a <= n; ++a)
            w[a] = std::exp(lg - std::lgamma(a + 1.0) - std::lgamma(n - a + 1.0) +
                            a * lp + (n - a) * lq);
        return w;
    }
    // multiplicative recurrence from the numerically safe end
    if (p <= 0.5) {
        w[0] = std::pow(1.0 - p, n);
        double r = p / (1.0 - p);
        for (int a = 1; a <= n; ++a) w[a] = w[a - 1] * r * (n - a + 1) / a;
    } else {
        w[n] = std::pow(p, n);
        double r = (1.0 - p) / p;
        for (int a = n - 1; a >= 0; --a) w[a] = w[a + 1] * r * (a + 1) / (n - a);
    }
    return w;
}

double fsa_success_prob(double w, int n, int k) {
    if (n < 1) throw DomainError("fsa_success_prob requires n >= 1");
    if (k < 1) throw DomainError("fsa_success_prob requires k >= 1");
    if (!(w >= 0.0 && w <= 1.0))
        throw DomainError("fsa_success_prob requires w in [0,1]");
    return w * std::pow(1.0 - w / k, n - 1);
}

ProtocolReport sa_report(double q, int n, double t_pk, double p_tx) {
    if (n < 1) throw DomainError("sa_report requires n >= 1");
    if (!(t_pk > 0.0)) throw ConfigError("t_pk must be positive");
    if (!(q >= 0.0 && q <= 1.0)) throw DomainError("sa_report requires q in [0,1]");
    double big_q = fsa_success_prob(q, n, 1);
    if (big_q == 0.0)
        throw InfiniteAoiError("SA success probability is 0 (q = " +
                               std::to_string(q) + ", N = " + std::to_string(n) +
                               "): AoI diverges");
    ProtocolReport r;
    r.avg_aoi = (0.5 + 1.0 / big_q) * t_pk;
    r.avg_power = q * p_tx;
    r.load = q * n / t_pk;
    return r;
}

ProtocolReport fsa_report(double w, int n, int k, double t_pk, double p_tx) {
    if (n < 1) throw DomainError("fsa_report requires n >= 1");
    if (k < 1) throw DomainError("fsa_report requires k >= 1");
    if (!(t_pk > 0.0)) throw ConfigError("t_pk must be positive");
    if (!(w >= 0.0 && w <= 1.0)) throw DomainError("fsa_report requires w in [0,1]");
    double p = fsa_success_prob(w, n, k);
    if (p == 0.0)
        throw InfiniteAoiError("FSA success probability is 0 (w = " +
                               std::to_string(w) + ", N = " + std::to_string(n) +
                               ", k = " + std::to_string(k) + "): AoI diverges");
    ProtocolReport r;
    // E[D] = (k+1)/2 and E[D^2] = (k+1)(2k+1)/6 fold into the closed form's
    // p(k^2-1)/(12k) term.
    r.avg_aoi = t_pk + k * t_pk * (2.0 - p) / (2.0 * p) +
                t_pk * p * (static_cast<double>(k) * k - 1.0) / (12.0 * k);
    r.avg_power = w * p_tx / k;
    r.load = w * n / (k * t_pk);
    return r;
}

namespace {

BigInt big_pow(BigInt base, int exp) {
    BigInt out = 1;
    while (exp-- > 0) out *= base;
    return out;
}

BigInt big_falling(int n, int r) {  // n (n-1) ... (n-r+1)
    BigInt out = 1;
    for (int i = 0; i < r; ++i) out *= (n - i);
    return out;
}

BigInt big_binomial(int n, int r) {
    if (r < 0 || r > n) return 0;
    r = std::min(r, n - r);
    BigInt num = 1, den = 1;
    for (int i = 0; i < r; ++i) {
        num *= (n - i);
        den *= (i + 1);
    }
    return num / den;  // exact: C(n,r) is an integer
}

}  // namespace

BigRational occupancy_exactly_one_exact(int m, int alpha, int k) {
    if (m < 0 || alpha < 0 || k < 0)
        throw DomainError("occupancy_exactly_one requires non-negative arguments");
    if (k == 0) return (m == 0 && alpha == 0) ? BigRational(1) : BigRational(0);
    if (m > std::min(k, alpha)) return BigRational(0);
    // Pi(m, alpha, k) = [ sum_{i=m}^{min(k,alpha)} (-1)^(i+m) C(k,i) C(i,m)
    //                     alpha!/(alpha-i)! (k-i)^(alpha-i) ] / k^alpha
    BigInt num = 0;
    int hi = std::min(k, alpha);
    for (int i = m; i <= hi; ++i) {
        BigInt term = big_binomial(k, i) * big_binomial(i, m) *
                      big_falling(alpha, i) * big_pow(k - i, alpha - i);
        if ((i + m) % 2 == 0)
            num += term;
        else
            num -= term;
    }
    return BigRational(num, big_pow(k, alpha));
}

double occupancy_exactly_one(int m, int alpha, int k) {
    return occupancy_exactly_one_exact(m, alpha, k).convert_to<double>();
}

RtaEvaluator::RtaEvaluator(int n, int k) : n_(n), k_(k) {
    if (n < 1) throw DomainError("RtaEvaluator requires n >= 1");
    if (k < 1) throw DomainError("RtaEvaluator requires k >= 1");
    occ_k_.resize(n);
    occ_km1_.resize(n);
    bin_phi_.resize(n);
    for (int alpha = 0; alpha < n; ++alpha) {
        occ_k_[alpha].resize(std::min(k, alpha) + 1);
        for (int m = 0; m <= std::min(k, alpha); ++m)
            occ_k_[alpha][m] = occupancy_exactly_one(m, alpha, k);
        occ_km1_[alpha].resize(std::min(k - 1, alpha) + 1);
        for (int m = 0; m <= std::min(k - 1, alpha); ++m)
            occ_km1_[alpha][m] = occupancy_exactly_one(m, alpha, k - 1);
        bin_phi_[alpha] = binomial_pmf(alpha, 1.0 - 1.0 / k);
    }
}

Pmf RtaEvaluator::mf_pmf(double pi) const {
    if (!(pi >= 0.0 && pi <= 1.0)) throw DomainError("mf_pmf requires pi in [0,1]");
    std::vector<double> bin_a = binomial_pmf(n_ - 1, pi);
    Pmf out;
    out.support_offset = 0;
    out.probs.assign(std::min(k_, n_ - 1) + 1, 0.0);
    // branch weights: tracked sensor silent (1-pi) vs requesting (pi)
    for (int alpha = 0; alpha <= n_ - 1; ++alpha) {
        if (bin_a[alpha] == 0.0) continue;
        // silent: the other alpha requests land in all k slots
        for (int m = 0; m <= std::min(k_, alpha); ++m)
            out.probs[m] += (1.0 - pi) * bin_a[alpha] * occ_k_[alpha][m];
        // requesting: survivors among the others live in the k-1 other slots
        const std::vector<double>& bin_phi = bin_phi_[alpha];
        for (int phi = 0; phi <= alpha; ++phi) {
            if (bin_phi[phi] == 0.0) continue;
            for (int m = 0; m <= std::min(k_ - 1, phi); ++m)
                out.probs[m] += pi * bin_a[alpha] * bin_phi[phi] * occ_km1_[phi][m];
        }
    }
    return out;
}

Pmf RtaEvaluator::ms_pmf(double pi) const {
    if (!(pi >= 0.0 && pi <= 1.0)) throw DomainError("ms_pmf requires pi in [0,1]");
    if (pi == 0.0)
        throw NullConditioningError("ms_pmf conditions on a delivery, impossible at pi = 0");
    std::vector<double> bin_a = binomial_pmf(n_ - 1, pi);
    double s = std::pow(1.0 - pi / k_, n_ - 1);
    if (s == 0.0)
        throw NullConditioningError("ms_pmf conditions on a delivery, impossible at pi = " +
                                    std::to_string(pi) + ", k = " + std::to_string(k_));
    Pmf out;
    out.support_offset = 1;
    out.probs.assign(std::min(k_ - 1, n_ - 1) + 1, 0.0);
    // Pr(A = alpha | success) = (1-1/k)^alpha Bin(N-1,pi)(alpha) / (1-pi/k)^(N-1)
    double eta = 1.0;  // (1-1/k)^alpha
    for (int alpha = 0; alpha <= n_ - 1; ++alpha) {
        double w = eta * bin_a[alpha] / s;
        if (w != 0.0)
            for (int m = 0; m <= std::min(k_ - 1, alpha); ++m)
                out.probs[m] += w * occ_km1_[alpha][m];
        eta *= 1.0 - 1.0 / k_;
    }
    return out;
}

Pmf RtaEvaluator::d_pmf(double pi) const {
    Pmf ms = ms_pmf(pi);
    Pmf out;
    out.support_offset = 1;
    out.probs.assign(ms.probs.size(), 0.0);
    // D uniform over 1..M_S given M_S: Pr(D=d) = sum_{m>=d} Pr(M_S=m)/m
    for (std::size_t i = 0; i < ms.probs.size(); ++i) {
        double share = ms.probs[i] / (1.0 + static_cast<double>(i));
        for (std::size_t d = 0; d <= i; ++d) out.probs[d] += share;
    }
    return out;
}

RtaMoments RtaEvaluator::moments(double pi, double t_pk, double t_r) const {
    TimingModel{t_pk, t_r}.validate();
    Pmf mf = mf_pmf(pi);
    Pmf ms = ms_pmf(pi);
    Pmf d = d_pmf(pi);
    RtaMoments mo;
    double kt_r = static_cast<double>(k_) * t_r;
    double e_mf = mf.mean(), e_mf2 = mf.second_moment();
    double e_ms = ms.mean(), e_ms2 = ms.second_moment();
    mo.e_theta_f = kt_r + e_mf * t_pk;
    mo.e_theta_f2 = kt_r * kt_r + t_pk * t_pk * e_mf2 + 2.0 * kt_r * t_pk * e_mf;
    mo.e_theta_s = kt_r + e_ms * t_pk;
    mo.e_theta_s2 = kt_r * kt_r + t_pk * t_pk * e_ms2 + 2.0 * kt_r * t_pk * e_ms;
    mo.p_success = pi * std::pow(1.0 - pi / k_, n_ - 1);
    auto [ex, ex2] = geometric_moments(mo.p_success);
    mo.e_x = ex;
    mo.e_x2 = ex2;
    mo.e_d = d.mean();
    mo.e_d2 = d.second_moment();
    return mo;
}

ProtocolReport RtaEvaluator::report(double pi, double t_pk, double t_r,
                                    double p_tx) const {
    if (!(pi >= 0.0 && pi <= 1.0)) throw DomainError("rta_report requires pi in [0,1]");
    if (pi == 0.0)
        throw InfiniteAoiError("RTA access probability 0: AoI diverges");
    double s = std::pow(1.0 - pi / k_, n_ - 1);
    if (pi * s == 0.0)
        throw InfiniteAoiError("RTA success probability is 0 (pi = " +
                               std::to_string(pi) + ", N = " + std::to_string(n_) +
                               ", k = " + std::to_string(k_) + "): AoI diverges");
    RtaMoments mo = moments(pi, t_pk, t_r);
    double ez = (mo.e_x - 1.0) * mo.e_theta_f + mo.e_theta_s;
    double ez2 = (mo.e_x - 1.0) * mo.e_theta_f2 +
                 (mo.e_x2 - 3.0 * mo.e_x + 2.0) * mo.e_theta_f * mo.e_theta_f +
                 mo.e_theta_s2 + 2.0 * (mo.e_x - 1.0) * mo.e_theta_f * mo.e_theta_s +
                 2.0 * (mo.e_d2 - mo.e_d * mo.e_d) * t_pk * t_pk;
    // request sent in a failed round with probability (pi - pi s)/(1 - pi s);
    // when every round succeeds (pi s = 1) there are no failed rounds and the
    // term drops out entirely
    double pr_req_given_fail =
        (pi * s < 1.0) ? (pi - pi * s) / (1.0 - pi * s) : 0.0;
    ProtocolReport r;
    r.avg_aoi = t_pk + ez2 / (2.0 * ez);
    r.avg_power = (pr_req_given_fail * (mo.e_x - 1.0) * t_r + (t_r + t_pk)) / ez * p_tx;
    r.load = n_ * pi /
             (mo.e_theta_s * mo.p_success + mo.e_theta_f * (1.0 - mo.p_success));
    return r;
}

Pmf rta_mf_pmf(double pi, int n, int k) { return RtaEvaluator(n, k).mf_pmf(pi); }

Pmf rta_ms_pmf(double pi, int n, int k) { return RtaEvaluator(n, k).ms_pmf(pi); }

Pmf rta_d_pmf(double pi, int n, int k) { return RtaEvaluator(n, k).d_pmf(pi); }

RtaMoments rta_moments(double pi, int n, int k, double t_pk, double t_r) {
    return RtaEvaluator(n, k).moments(pi, t_pk, t_r);
}

ProtocolReport rta_report(double pi, int n, int k, double t_pk, double t_r,
                          double p_tx) {
    return RtaEvaluator(n, k).report(pi, t_pk, t_r, p_tx);
}

ProtocolReport analytic_report(const ProtocolParams& params, const TimingModel& timing) {
    params.validate();
    timing.validate();
    switch (params.protocol) {
        case Protocol::SA:
            return sa_report(params.access_prob, params.n_sensors, timing.t_pk,
                             params.tx_power);
        case Protocol::FSA:
            return fsa_report(params.access_prob, params.n_sensors, params.k,
                              timing.t_pk, params.tx_power);
        case Protocol::RTA:
            return rta_report(params.access_prob, params.n_sensors, params.k,
                              timing.t_pk, timing.t_r, params.tx_power);
    }
    throw DomainError("unknown protocol");
}

}  // namespace aoi
