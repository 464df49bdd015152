#include "aoi/sim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <type_traits>

namespace aoi {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
// two-sided 95% Student t quantile at 29 degrees of freedom (30 batches)
constexpr double kTQuantile30 = 2.045;
constexpr int kBatches = 30;

struct RenewalLog {
    std::vector<double> z;       // renewal intervals, microseconds
    std::vector<double> airtime; // tracked sensor's transmit airtime per interval
};

double batch_halfwidth(const std::vector<double>& batch_means) {
    double n = static_cast<double>(batch_means.size());
    double mean = std::accumulate(batch_means.begin(), batch_means.end(), 0.0) / n;
    double ss = 0.0;
    for (double b : batch_means) ss += (b - mean) * (b - mean);
    double sd = std::sqrt(ss / (n - 1.0));
    return kTQuantile30 * sd / std::sqrt(n);
}

AoIStats finalize(const RenewalLog& log, const SimConfig& config,
                  std::int64_t updates, double elapsed, double post_warmup_elapsed) {
    const double t_pk = config.timing.t_pk;
    const double p_tx = config.params.tx_power;
    AoIStats st;
    st.n_updates = updates;
    st.elapsed_sim_time = elapsed;
    st.mean_round_duration =
        post_warmup_elapsed / static_cast<double>(config.horizon_rounds - config.warmup_rounds);
    if (log.z.empty()) {
        st.mean_aoi = st.mean_power = st.mean_renewal = kNaN;
        st.aoi_ci_halfwidth = st.power_ci_halfwidth = st.renewal_ci_halfwidth = kNaN;
        throw NoUpdateError(
            updates == 0 ? "no successful update over the simulated horizon"
                         : "only one successful update over the simulated horizon",
            st);
    }
    const std::size_t w = log.z.size();
    double sum_z = 0.0, sum_area = 0.0, sum_air = 0.0;
    for (std::size_t i = 0; i < w; ++i) {
        sum_z += log.z[i];
        sum_area += t_pk * log.z[i] + 0.5 * log.z[i] * log.z[i];
        sum_air += log.airtime[i];
    }
    st.mean_aoi = sum_area / sum_z;
    st.mean_power = p_tx * sum_air / sum_z;
    st.mean_renewal = sum_z / static_cast<double>(w);
    if (w >= kBatches) {
        const std::size_t m = w / kBatches;
        std::vector<double> aoi_b(kBatches), pow_b(kBatches), z_b(kBatches);
        for (int b = 0; b < kBatches; ++b) {
            double bz = 0.0, barea = 0.0, bair = 0.0;
            for (std::size_t i = b * m; i < (b + 1) * m; ++i) {
                bz += log.z[i];
                barea += t_pk * log.z[i] + 0.5 * log.z[i] * log.z[i];
                bair += log.airtime[i];
            }
            aoi_b[b] = barea / bz;
            pow_b[b] = p_tx * bair / bz;
            z_b[b] = bz / static_cast<double>(m);
        }
        st.aoi_ci_halfwidth = batch_halfwidth(aoi_b);
        st.power_ci_halfwidth = batch_halfwidth(pow_b);
        st.renewal_ci_halfwidth = batch_halfwidth(z_b);
    } else {
        st.aoi_ci_halfwidth = st.power_ci_halfwidth = st.renewal_ci_halfwidth = kNaN;
    }
    return st;
}

// SA is the k = 1 case of the frame loop; slots are drawn only when k > 1,
// so SA and FSA(k=1) consume identical random streams.
AoIStats simulate_frames(const SimConfig& config) {
    const ProtocolParams& p = config.params;
    const int n = p.n_sensors;
    const int k = p.k;
    const int u = config.tracked_sensor;
    const double t_pk = config.timing.t_pk;
    const double q = p.access_prob;
    std::vector<Xoshiro256pp> gen;
    gen.reserve(n);
    for (int i = 0; i < n; ++i) gen.push_back(Xoshiro256pp::stream(config.seed, i));
    std::vector<int> count(k);

    RenewalLog log;
    double t = 0.0, last = 0.0, acc_air = 0.0, warmup_end = 0.0;
    bool have_last = false;
    std::int64_t updates = 0;
    const double duration = static_cast<double>(k) * t_pk;
    for (std::int64_t r = 0; r < config.horizon_rounds; ++r) {
        std::fill(count.begin(), count.end(), 0);
        bool u_sent = false;
        int u_slot = 0;
        for (int i = 0; i < n; ++i) {
            bool send = gen[i].u01() < q;
            if (!send) continue;
            int slot = (k > 1) ? static_cast<int>(gen[i].below(k)) : 0;
            ++count[slot];
            if (i == u) {
                u_sent = true;
                u_slot = slot;
            }
        }
        if (r >= config.warmup_rounds) {
            if (u_sent) acc_air += t_pk;
            if (u_sent && count[u_slot] == 1) {
                double delivery = t + (u_slot + 1) * t_pk;
                ++updates;
                if (have_last) {
                    log.z.push_back(delivery - last);
                    log.airtime.push_back(acc_air);
                }
                last = delivery;
                have_last = true;
                acc_air = 0.0;
            }
        }
        t += duration;
        if (r + 1 == config.warmup_rounds) warmup_end = t;
    }
    return finalize(log, config, updates, t, t - warmup_end);
}

AoIStats simulate_rta(const SimConfig& config) {
    RtaRoundState state(config.params, config.timing, config.seed);
    const double t_pk = config.timing.t_pk;
    const double t_r = config.timing.t_r;
    const int k = config.params.k;
    RenewalLog log;
    double t = 0.0, last = 0.0, acc_air = 0.0, warmup_end = 0.0;
    bool have_last = false;
    std::int64_t updates = 0;
    for (std::int64_t r = 0; r < config.horizon_rounds; ++r) {
        RtaRoundOutcome out = simulate_rta_round(state, config.tracked_sensor);
        if (r >= config.warmup_rounds) {
            if (out.u_sent_request) acc_air += t_r;
            if (out.u_admitted) {
                acc_air += t_pk;
                double delivery = t + k * t_r + (out.u_position + 1) * t_pk;
                ++updates;
                if (have_last) {
                    log.z.push_back(delivery - last);
                    log.airtime.push_back(acc_air);
                }
                last = delivery;
                have_last = true;
                acc_air = 0.0;
            }
        }
        t += out.duration;
        if (r + 1 == config.warmup_rounds) warmup_end = t;
    }
    return finalize(log, config, updates, t, t - warmup_end);
}

}  // namespace

void SimConfig::validate() const {
    params.validate();
    timing.validate();
    if (warmup_rounds < 0) throw ConfigError("warmup_rounds must be >= 0");
    if (horizon_rounds <= warmup_rounds)
        throw ConfigError("horizon_rounds must exceed warmup_rounds");
    if (tracked_sensor < 0 || tracked_sensor >= params.n_sensors)
        throw ConfigError("tracked_sensor out of range");
}

AoIStats simulate(const SimConfig& config) {
    config.validate();
    if (!(config.params.access_prob > 0.0))
        throw DomainError("simulate requires access_prob > 0");
    if (config.params.protocol == Protocol::RTA) return simulate_rta(config);
    return simulate_frames(config);
}

RtaRoundState::RtaRoundState(const ProtocolParams& p, const TimingModel& t,
                             std::uint64_t seed)
    : params(p), timing(t), slot_count(p.k, 0) {
    params.validate();
    timing.validate();
    streams.reserve(p.n_sensors + 1);
    for (int i = 0; i <= p.n_sensors; ++i)
        streams.push_back(Xoshiro256pp::stream(seed, i));
}

RtaRoundOutcome simulate_rta_round(RtaRoundState& state, int tracked_sensor) {
    const int n = state.params.n_sensors;
    const int k = state.params.k;
    const double pi = state.params.access_prob;
    std::fill(state.slot_count.begin(), state.slot_count.end(), 0);
    RtaRoundOutcome out;
    int u_slot = 0;
    for (int i = 0; i < n; ++i) {
        bool send = state.streams[i].u01() < pi;
        if (!send) continue;
        int slot = (k > 1) ? static_cast<int>(state.streams[i].below(k)) : 0;
        ++state.slot_count[slot];
        if (i == tracked_sensor) {
            out.u_sent_request = true;
            u_slot = slot;
        }
    }
    for (int s = 0; s < k; ++s)
        if (state.slot_count[s] == 1) ++out.m_admitted;
    out.u_admitted = out.u_sent_request && state.slot_count[u_slot] == 1;
    if (out.u_admitted)
        out.u_position =
            static_cast<int>(state.streams[n].below(out.m_admitted));
    out.duration = k * state.timing.t_r + out.m_admitted * state.timing.t_pk;
    return out;
}

namespace {

// Shared enumeration core: walks all occupancy profiles of the N-1
// non-tracked sensors over {silent, slot 0..k-1} with exact multinomial
// weights, then folds in the tracked sensor per the conditioning. Weight
// arithmetic is templated: double for the fast oracle, BigRational for
// exact-equality checks.
template <class Weight>
std::vector<Weight> enumerate_core(int n, int k, Weight pi, RequestCondition cond) {
    const int others = n - 1;
    const Weight one(1);
    const Weight silent_w = one - pi;       // per-sensor: stays silent
    const Weight slot_w = pi / Weight(k);   // per-sensor: requests in a given slot

    int max_count;
    switch (cond) {
        case RequestCondition::u_succeeds: max_count = 1 + std::min(k - 1, others); break;
        case RequestCondition::u_fails: max_count = std::min(k, others); break;
        default: max_count = std::min(k, n); break;
    }
    std::vector<Weight> acc(max_count + 1, Weight(0));
    Weight total(0);  // conditioning mass (u_succeeds)

    // factorials up to N-1 for multinomial coefficients
    std::vector<BigInt> fact(others + 1);
    fact[0] = 1;
    for (int i = 1; i <= others; ++i) fact[i] = fact[i - 1] * i;

    std::vector<int> c(k, 0);
    // recursion over slots; at each leaf the remaining sensors are silent
    auto rec = [&](auto&& self, int slot, int remaining, BigInt denom,
                   Weight send_w) -> void {
        if (slot == k) {
            BigInt coeff = fact[others] / (denom * fact[remaining]);
            Weight wcoeff;
            if constexpr (std::is_same_v<Weight, double>)
                wcoeff = coeff.convert_to<double>();
            else
                wcoeff = Weight(coeff);
            Weight w = wcoeff * send_w;
            for (int i = 0; i < remaining; ++i) w = w * silent_w;
            int m_others = 0, empty = 0, singles = 0;
            for (int j = 0; j < k; ++j) {
                if (c[j] == 1) ++m_others;
                else if (c[j] == 0) ++empty;
            }
            singles = m_others;
            switch (cond) {
                case RequestCondition::u_fails:
                    // marginal law of the others-admitted count: the tracked
                    // sensor stays silent, lands on a non-singleton slot
                    // (leaving the others' singletons intact), or lands on a
                    // singleton slot and knocks that sensor out
                    acc[m_others] += w * (silent_w + slot_w * Weight(k - singles));
                    if (singles > 0)
                        acc[m_others - 1] += w * slot_w * Weight(singles);
                    break;
                case RequestCondition::u_succeeds:
                    // u requests an empty slot and survives
                    if (empty > 0) {
                        Weight mass = w * slot_w * Weight(empty);
                        acc[m_others + 1] += mass;
                        total += mass;
                    }
                    break;
                case RequestCondition::unconditional:
                    acc[m_others] += w * silent_w;  // u silent
                    if (empty > 0) acc[m_others + 1] += w * slot_w * Weight(empty);
                    if (singles > 0) acc[m_others - 1] += w * slot_w * Weight(singles);
                    if (k - empty - singles > 0)
                        acc[m_others] += w * slot_w * Weight(k - empty - singles);
                    break;
            }
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            c[slot] = v;
            Weight sw = send_w;
            for (int i = 0; i < v; ++i) sw = sw * slot_w;
            self(self, slot + 1, remaining - v, denom * fact[v], sw);
        }
        c[slot] = 0;
    };
    rec(rec, 0, others, BigInt(1), one);

    if (cond == RequestCondition::u_succeeds) {
        if (total == Weight(0))
            throw NullConditioningError(
                "u_succeeds conditioning has probability 0");
        for (Weight& a : acc) a = a / total;
    }
    return acc;
}

void check_enumeration_size(int n, int k) {
    if (n < 1 || k < 1) throw DomainError("enumeration requires n >= 1, k >= 1");
    if (n > 12 || k > 6) {
        double states = std::pow(static_cast<double>(k) + 1.0, n);
        throw EnumerationTooLargeError(
            "request-phase enumeration limited to N <= 12, k <= 6 (state space ~" +
                std::to_string(states) + " outcomes)",
            states);
    }
}

}  // namespace

Pmf enumerate_request_phase(int n, int k, double pi, RequestCondition condition) {
    check_enumeration_size(n, k);
    if (!(pi >= 0.0 && pi <= 1.0)) throw DomainError("pi must lie in [0,1]");
    if (condition == RequestCondition::u_succeeds && pi == 0.0)
        throw NullConditioningError("u_succeeds conditioning requires pi > 0");
    Pmf out;
    out.support_offset = (condition == RequestCondition::u_succeeds) ? 1 : 0;
    std::vector<double> acc = enumerate_core<double>(n, k, pi, condition);
    if (condition == RequestCondition::u_succeeds)
        acc.erase(acc.begin());  // mass at 0 is structurally empty
    out.probs = std::move(acc);
    return out;
}

std::vector<BigRational> enumerate_request_phase_exact(int n, int k,
                                                       std::int64_t pi_num,
                                                       std::int64_t pi_den,
                                                       RequestCondition condition) {
    check_enumeration_size(n, k);
    if (pi_den <= 0 || pi_num < 0 || pi_num > pi_den)
        throw DomainError("pi must lie in [0,1]");
    BigRational pi(pi_num, pi_den);
    if (condition == RequestCondition::u_succeeds && pi == 0)
        throw NullConditioningError("u_succeeds conditioning requires pi > 0");
    std::vector<BigRational> acc = enumerate_core<BigRational>(n, k, pi, condition);
    if (condition == RequestCondition::u_succeeds) acc.erase(acc.begin());
    return acc;
}

}  // namespace aoi
