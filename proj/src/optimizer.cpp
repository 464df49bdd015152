#include "aoi/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <memory>

namespace aoi {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kGoldenTol = 1e-8;   // refinement tolerance in probability
constexpr double kInvPhi = 0.6180339887498949;  // 1/golden ratio

// Closed-form objective/constraint evaluator for one (protocol, N, k);
// caches the RTA occupancy tables so dense grids stay cheap.
class Objective {
  public:
    Objective(Protocol protocol, int n, int k, const TimingModel& timing, double p_tx)
        : protocol_(protocol), n_(n), k_(protocol == Protocol::SA ? 1 : k),
          timing_(timing), p_tx_(p_tx) {
        timing_.validate();
        if (protocol_ == Protocol::RTA)
            rta_ = std::make_unique<RtaEvaluator>(n_, k_);
    }

    // +inf encodes a diverging AoI (success probability 0 at this prob).
    ProtocolReport report(double prob) const {
        try {
            switch (protocol_) {
                case Protocol::SA:
                    return sa_report(prob, n_, timing_.t_pk, p_tx_);
                case Protocol::FSA:
                    return fsa_report(prob, n_, k_, timing_.t_pk, p_tx_);
                case Protocol::RTA:
                    return rta_->report(prob, timing_.t_pk, timing_.t_r, p_tx_);
            }
        } catch (const InfiniteAoiError&) {
        }
        return ProtocolReport{kInf, prob * p_tx_ / k_, 0.0};
    }

    double aoi(double prob) const { return report(prob).avg_aoi; }
    double power(double prob) const { return report(prob).avg_power; }
    int k() const { return k_; }

  private:
    Protocol protocol_;
    int n_;
    int k_;
    TimingModel timing_;
    double p_tx_;
    std::unique_ptr<RtaEvaluator> rta_;
};

// Golden-section minimization of f over [lo, hi] to kGoldenTol; assumes f
// is unimodal on the bracket (true near a dense-grid minimizer).
double golden_min(const std::function<double(double)>& f, double lo, double hi) {
    double a = lo, b = hi;
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > kGoldenTol) {
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kInvPhi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kInvPhi * (b - a);
            fd = f(d);
        }
    }
    // tie-break toward the smaller probability
    double mid = 0.5 * (a + b);
    double best = mid, fbest = f(mid);
    for (double cand : {a, c, d, b}) {
        double fc2 = f(cand);
        if (fc2 < fbest - 0.0 || (fc2 == fbest && cand < best)) {
            best = cand;
            fbest = fc2;
        }
    }
    return best;
}

OptResult minimize_on(const Objective& obj, double lo, double hi, int grid_points) {
    // dense grid over (lo, hi]
    int best_i = -1;
    double best_aoi = kInf, best_prob = hi;
    for (int i = 1; i <= grid_points; ++i) {
        double prob = lo + (hi - lo) * static_cast<double>(i) / grid_points;
        double a = obj.aoi(prob);
        if (a < best_aoi || (a == best_aoi && prob < best_prob)) {
            best_aoi = a;
            best_prob = prob;
            best_i = i;
        }
    }
    if (best_i < 0 || !std::isfinite(best_aoi))
        throw InfeasibleError("objective diverges over the whole grid");
    double bracket_lo = lo + (hi - lo) * static_cast<double>(std::max(1, best_i - 1)) / grid_points;
    double bracket_hi = lo + (hi - lo) * static_cast<double>(std::min(grid_points, best_i + 1)) / grid_points;
    if (best_i == 1) bracket_lo = std::max(lo + 1e-12, bracket_lo - (hi - lo) / grid_points);
    double refined = golden_min([&](double x) { return obj.aoi(x); }, bracket_lo, bracket_hi);
    double refined_aoi = obj.aoi(refined);
    if (refined_aoi < best_aoi || (refined_aoi == best_aoi && refined < best_prob))
        return {refined, refined_aoi};
    return {best_prob, best_aoi};
}

}  // namespace

OptResult min_aoi_unconstrained(Protocol protocol, int n, int k,
                                const TimingModel& timing, double p_tx,
                                int grid_points) {
    Objective obj(protocol, n, k, timing, p_tx);
    return minimize_on(obj, 0.0, 1.0, grid_points);
}

FrontierPoint min_aoi_given_power(Protocol protocol, int n, int k,
                                  const TimingModel& timing, double p_tx,
                                  double budget, int grid_points) {
    if (!(budget > 0.0))
        throw InfeasibleError("power budget must be positive (empty feasible set)");
    Objective obj(protocol, n, k, timing, p_tx);
    OptResult unconstrained = minimize_on(obj, 0.0, 1.0, grid_points);
    if (obj.power(unconstrained.best_prob) <= budget * (1.0 + 1e-12))
        return {budget, unconstrained.best_prob, unconstrained.min_aoi, false};

    if (protocol != Protocol::RTA) {
        // power = prob * P / k is linear: feasible set is prob <= k*budget/P
        double cap = std::min(1.0, obj.k() * budget / p_tx);
        OptResult r = minimize_on(obj, 0.0, cap, grid_points);
        return {budget, r.best_prob, r.min_aoi, true};
    }

    // RTA: avg_power(pi) is not assumed monotone; scan the dense grid for
    // all feasible points, then refine around the best and bisect the
    // feasibility boundary next to it.
    int best_i = -1;
    double best_aoi = kInf, best_prob = 0.0;
    std::vector<bool> feasible(grid_points + 1, false);
    for (int i = 1; i <= grid_points; ++i) {
        double prob = static_cast<double>(i) / grid_points;
        ProtocolReport rep = obj.report(prob);
        feasible[i] = std::isfinite(rep.avg_aoi) && rep.avg_power <= budget * (1.0 + 1e-12);
        if (feasible[i] && rep.avg_aoi < best_aoi) {
            best_aoi = rep.avg_aoi;
            best_prob = prob;
            best_i = i;
        }
    }
    if (best_i < 0) {
        // the grid can miss the feasible sliver at tiny pi: log-spaced scan
        for (double prob = 1.0 / grid_points; prob > 1e-12; prob *= 0.5) {
            ProtocolReport rep = obj.report(prob);
            if (std::isfinite(rep.avg_aoi) && rep.avg_power <= budget * (1.0 + 1e-12) &&
                rep.avg_aoi < best_aoi) {
                best_aoi = rep.avg_aoi;
                best_prob = prob;
                best_i = 0;
            }
        }
        if (best_i < 0)
            throw InfeasibleError("no feasible access probability under the power budget");
    }

    auto aoi_or_inf = [&](double x) {
        ProtocolReport rep = obj.report(x);
        return rep.avg_power <= budget * (1.0 + 1e-12) ? rep.avg_aoi : kInf;
    };
    double step = best_i > 0 ? 1.0 / grid_points : best_prob * 0.5;
    double lo = std::max(1e-12, best_prob - step);
    double hi = best_prob + step;
    if (hi > 1.0) hi = 1.0;
    // bisect infeasible bracket edges onto the feasibility boundary
    for (double* edge : {&lo, &hi}) {
        if (std::isfinite(aoi_or_inf(*edge))) continue;
        double in = best_prob, out = *edge;
        for (int it = 0; it < 60; ++it) {
            double mid = 0.5 * (in + out);
            if (std::isfinite(aoi_or_inf(mid)))
                in = mid;
            else
                out = mid;
        }
        *edge = in;
    }
    double refined = golden_min(aoi_or_inf, lo, hi);
    double refined_aoi = aoi_or_inf(refined);
    if (refined_aoi <= best_aoi) {
        best_prob = refined;
        best_aoi = refined_aoi;
    }
    // active iff the optimum sits on the budget boundary (the feasible set
    // can be disconnected in pi, leaving the constrained best interior)
    bool binding = obj.power(best_prob) >= budget * (1.0 - 1e-6);
    return {budget, best_prob, best_aoi, binding};
}

std::vector<SweepRow> sweep(Protocol protocol, int n, int k,
                            const TimingModel& timing, double p_tx,
                            const std::vector<double>& prob_grid) {
    Objective obj(protocol, n, k, timing, p_tx);
    std::vector<SweepRow> rows;
    rows.reserve(prob_grid.size());
    for (double prob : prob_grid) {
        if (!(prob > 0.0 && prob <= 1.0))
            throw DomainError("sweep grid values must lie in (0,1]");
        ProtocolReport rep = obj.report(prob);
        rows.push_back({prob, rep.load, rep.avg_aoi, rep.avg_power});
    }
    return rows;
}

std::vector<FrontierPoint> frontier(Protocol protocol, int n, int k,
                                    const TimingModel& timing, double p_tx,
                                    const std::vector<double>& budgets,
                                    int grid_points) {
    for (std::size_t i = 0; i < budgets.size(); ++i) {
        if (!(budgets[i] > 0.0)) throw DomainError("budgets must be positive");
        if (i > 0 && budgets[i] <= budgets[i - 1])
            throw DomainError("budgets must be strictly ascending");
    }
    std::vector<FrontierPoint> points;
    points.reserve(budgets.size());
    for (double b : budgets) {
        FrontierPoint fp = min_aoi_given_power(protocol, n, k, timing, p_tx, b, grid_points);
        if (!points.empty()) {
            // feasible sets nest, so min_aoi cannot rise beyond refinement noise
            double prev = points.back().min_aoi;
            if (fp.min_aoi > prev * (1.0 + 1e-9))
                throw DomainError("frontier is not monotone non-increasing");
            fp.min_aoi = std::min(fp.min_aoi, prev);
        }
        points.push_back(fp);
    }
    return points;
}

}  // namespace aoi
