#pragma once

#include <cstdint>
#include <vector>

#include "aoi/analytic.hpp"
#include "aoi/model.hpp"
#include "aoi/rng.hpp"

namespace aoi {

struct SimConfig {
    ProtocolParams params;
    TimingModel timing;
    std::int64_t horizon_rounds = 0;
    std::int64_t warmup_rounds = 0;
    std::uint64_t seed = 0;
    int tracked_sensor = 0;

    void validate() const;
};

// Outcome of one simulation run for the tracked sensor. AoI accounting
// starts at the first delivery after warmup; each renewal interval Z
// contributes area t_pk*Z + Z^2/2 and the transmit energy accrued since the
// previous delivery. Confidence half-widths come from 30 non-overlapping
// batch means (NaN when fewer than 30 renewals were observed).
struct AoIStats {
    double mean_aoi = 0.0;             // microseconds
    double mean_power = 0.0;           // units of P
    std::int64_t n_updates = 0;        // deliveries observed after warmup
    double aoi_ci_halfwidth = 0.0;     // microseconds
    double power_ci_halfwidth = 0.0;   // units of P
    double mean_renewal = 0.0;         // observed E[Z], microseconds
    double renewal_ci_halfwidth = 0.0; // microseconds
    double mean_round_duration = 0.0;  // post-warmup average, microseconds
    double elapsed_sim_time = 0.0;     // full horizon, microseconds
};

// No delivery was observed over the horizon; mean/CI fields that need at
// least two deliveries are NaN in `partial`, the counters remain valid.
struct NoUpdateError : std::runtime_error {
    NoUpdateError(const std::string& what, AoIStats stats)
        : std::runtime_error(what), partial(stats) {}
    AoIStats partial;
};

// Deterministic in config: identical SimConfig gives bit-identical AoIStats.
AoIStats simulate(const SimConfig& config);

// One RTA round for white-box tests: request phase into k slots, singleton
// senders admitted, tracked sensor's TDMA position uniform over admissions.
struct RtaRoundOutcome {
    int m_admitted = 0;        // M: sensors entering the access phase
    bool u_sent_request = false;
    bool u_admitted = false;
    int u_position = -1;       // 0-based TDMA slot of the tracked sensor
    double duration = 0.0;     // k*t_r + M*t_pk
};

struct RtaRoundState {
    ProtocolParams params;
    TimingModel timing;
    std::vector<Xoshiro256pp> streams;  // n_sensors + 1 (last: TDMA position)
    std::vector<int> slot_count;        // scratch, size k

    RtaRoundState(const ProtocolParams& p, const TimingModel& t, std::uint64_t seed);
};

RtaRoundOutcome simulate_rta_round(RtaRoundState& state, int tracked_sensor = 0);

// Exact distribution of the admitted-sensor count by full enumeration of
// request-phase outcomes with exact probability weights.
//   unconditional — total admitted count M, all sensors participating;
//   u_succeeds    — total admitted count given the tracked sensor is
//                   admitted (matches rta_ms_pmf);
//   u_fails       — count of admitted sensors OTHER than the tracked one,
//                   as a marginal over all outcomes (matches rta_mf_pmf;
//                   see that function for why the tracked sensor's own
//                   outcome is integrated out rather than conditioned on).
enum class RequestCondition { u_fails, u_succeeds, unconditional };

Pmf enumerate_request_phase(int n, int k, double pi, RequestCondition condition);

// Same enumeration in exact rational arithmetic, pi = pi_num/pi_den.
// Index i of the result is Pr(count = offset + i); offset is 1 for
// u_succeeds and 0 otherwise.
std::vector<BigRational> enumerate_request_phase_exact(int n, int k,
                                                       std::int64_t pi_num,
                                                       std::int64_t pi_den,
                                                       RequestCondition condition);

}  // namespace aoi
