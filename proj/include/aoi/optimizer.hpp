#pragma once

#include <vector>

#include "aoi/analytic.hpp"
#include "aoi/model.hpp"

namespace aoi {

// One point of a power-budget frontier.
struct FrontierPoint {
    double power_budget = 0.0;  // units of P
    double best_prob = 0.0;
    double min_aoi = 0.0;       // microseconds
    bool binding = false;       // power constraint active at the optimum
};

struct SweepRow {
    double access_prob = 0.0;
    double load = 0.0;      // update requests per microsecond
    double avg_aoi = 0.0;   // microseconds
    double avg_power = 0.0; // units of P
};

struct OptResult {
    double best_prob = 0.0;
    double min_aoi = 0.0;
};

// Minimize analytic avg_aoi over access_prob in (0,1]: dense grid
// (default 10^4 points) + golden-section refinement to 1e-8 in probability.
// Ties break toward the smaller probability (lower power).
OptResult min_aoi_unconstrained(Protocol protocol, int n, int k,
                                const TimingModel& timing, double p_tx = 1.0,
                                int grid_points = 10000);

// Minimize avg_aoi subject to avg_power <= budget. SA/FSA restrict the
// grid to prob <= k*budget/P (power linear in probability); RTA scans the
// dense grid for feasible points and bisects the feasible boundary before
// refining. Throws InfeasibleError when budget <= 0.
FrontierPoint min_aoi_given_power(Protocol protocol, int n, int k,
                                  const TimingModel& timing, double p_tx,
                                  double budget, int grid_points = 10000);

// Analytic report at each grid probability.
std::vector<SweepRow> sweep(Protocol protocol, int n, int k,
                            const TimingModel& timing, double p_tx,
                            const std::vector<double>& prob_grid);

// min_aoi_given_power per budget (budgets positive, ascending). min_aoi is
// asserted monotone non-increasing and clamped to the running minimum to
// keep the emitted curve exactly monotone under refinement noise.
std::vector<FrontierPoint> frontier(Protocol protocol, int n, int k,
                                    const TimingModel& timing, double p_tx,
                                    const std::vector<double>& budgets,
                                    int grid_points = 10000);

}  // namespace aoi
