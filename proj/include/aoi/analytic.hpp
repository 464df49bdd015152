#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "aoi/errors.hpp"
#include "aoi/model.hpp"

namespace aoi {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Finite discrete distribution over consecutive non-negative integers
// support_offset, support_offset+1, ..., support_offset+probs.size()-1.
struct Pmf {
    int support_offset = 0;
    std::vector<double> probs;

    double mean() const;
    double second_moment() const;
    double at(int value) const;  // 0 outside the support
    int max_value() const { return support_offset + static_cast<int>(probs.size()) - 1; }
    void validate() const;  // entries in [0,1], total within 1e-9 of 1
};

// Closed-form per-operating-point summary.
struct ProtocolReport {
    double avg_aoi = 0.0;    // microseconds
    double avg_power = 0.0;  // units of P
    double load = 0.0;       // update requests per microsecond (all sensors)
};

// Moments feeding the RTA renewal computation.
struct RtaMoments {
    double e_theta_f = 0.0;   // E[round duration | tracked sensor fails]
    double e_theta_f2 = 0.0;  // second moment of the above
    double e_theta_s = 0.0;   // E[round duration | tracked sensor delivers]
    double e_theta_s2 = 0.0;
    double e_x = 0.0;         // E[rounds until next delivery], geometric
    double e_x2 = 0.0;
    double e_d = 0.0;         // E[TDMA slot index of the delivered packet]
    double e_d2 = 0.0;
    double p_success = 0.0;   // per-round delivery probability pi(1-pi/k)^(N-1)
};

// Mean and second moment of a geometric(p) variable on {1,2,...}:
// (1/p, (2-p)/p^2). Throws DomainError unless 0 < p <= 1.
std::pair<double, double> geometric_moments(double p);

// Binomial(n, p) PMF over {0..n}; stable for n up to ~10^3.
std::vector<double> binomial_pmf(int n, double p);

// Slotted Aloha: avg_aoi = (1/2 + 1/Q) t_pk with Q = q(1-q)^(N-1),
// avg_power = qP, load = qN/t_pk. Throws InfiniteAoiError when q = 0.
ProtocolReport sa_report(double q, int n, double t_pk, double p_tx = 1.0);

// Per-round delivery probability of frame slotted Aloha: w(1-w/k)^(N-1).
double fsa_success_prob(double w, int n, int k);

// Frame slotted Aloha report; k = 1 coincides with sa_report exactly.
ProtocolReport fsa_report(double w, int n, int k, double t_pk, double p_tx = 1.0);

// Probability that exactly m of k equally likely boxes receive exactly one
// of alpha balls. Exact integer arithmetic internally; k = 0 is accepted
// with the convention Pi(0,0,0) = 1 and Pi(m,alpha,0) = 0 otherwise.
// Out-of-range m (m > min(k, alpha)) yields 0; negative inputs throw.
double occupancy_exactly_one(int m, int alpha, int k);
BigRational occupancy_exactly_one_exact(int m, int alpha, int k);

// Number of sensors other than the tracked one admitted by the request
// phase, as a marginal law over all request outcomes (the failed-round
// duration model treats this count as independent of the tracked sensor's
// own outcome). Support 0..min(k, N-1).
Pmf rta_mf_pmf(double pi, int n, int k);

// Number of admitted sensors given the tracked sensor delivers (itself
// included). Support 1..1+min(k-1, N-1). Throws NullConditioningError at pi=0.
Pmf rta_ms_pmf(double pi, int n, int k);

// TDMA slot index of the tracked sensor's delivered packet:
// Pr(D=d) = sum_{m>=d} Pr(M_S=m)/m.
Pmf rta_d_pmf(double pi, int n, int k);

RtaMoments rta_moments(double pi, int n, int k, double t_pk, double t_r);

ProtocolReport rta_report(double pi, int n, int k, double t_pk, double t_r,
                          double p_tx = 1.0);

// Caches the pi-independent occupancy tables for fixed (n, k) so that
// dense grids over pi stay cheap. report(pi, ...) equals rta_report(...).
class RtaEvaluator {
  public:
    RtaEvaluator(int n, int k);
    Pmf mf_pmf(double pi) const;
    Pmf ms_pmf(double pi) const;
    Pmf d_pmf(double pi) const;
    RtaMoments moments(double pi, double t_pk, double t_r) const;
    ProtocolReport report(double pi, double t_pk, double t_r, double p_tx = 1.0) const;

  private:
    int n_;
    int k_;
    // occ_k_[alpha][m] = Pi(m, alpha, k); occ_km1_[alpha][m] = Pi(m, alpha, k-1)
    std::vector<std::vector<double>> occ_k_;
    std::vector<std::vector<double>> occ_km1_;
    // bin_phi_[alpha] = Binomial(alpha, 1-1/k) PMF (pi-independent)
    std::vector<std::vector<double>> bin_phi_;
};

// Dispatch on params.protocol (RTA uses timing.t_r).
ProtocolReport analytic_report(const ProtocolParams& params, const TimingModel& timing);

}  // namespace aoi
