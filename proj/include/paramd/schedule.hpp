#pragma once
#include <cstddef>
#include <string>
#include <vector>

#include "paramd/errors.hpp"

namespace paramd {

enum class PlanKind { Plan1 = 1, Plan2 = 2 };

/**
 * Parameters of one scheduler simulation. Durations are integer multiples of
 * the quantum r_g: a coarse task costs r_g, a fine task q_ratio * r_g.
 * Subtractions, state copies and corrections are zero-cost but still logged.
 */
struct ScheduleParams {
    PlanKind plan = PlanKind::Plan2;
    double q_ratio = 453.0;  // R_F / R_G
    long long t_total = 8;   // time points in the whole run
    long long t_w = 0;       // window width; 0 -> plan default (plan 1: q_ratio, plan 2: t_total)
    long long k_iters = 1;   // K
    double r_g = 1.0;

    long long window_width() const;
    long long windows() const { return t_total / window_width(); }
    void validate() const;
};

struct SimTask {
    std::string name;
    std::string unit;
    double start = 0.0;
    double end = 0.0;
    std::vector<int> deps;  // indices of earlier tasks
};

struct ScheduleResult {
    double makespan = 0.0;
    double closed_form_makespan = 0.0;
    double simulated_speedup = 0.0;
    double closed_form_speedup = 0.0;
    double r_g = 1.0;
    double r_f = 1.0;
    int g_units = 0;  // high-water marks
    int f_units = 0;
    std::size_t g_task_count = 0;
    std::size_t f_task_count = 0;
    std::vector<SimTask> events;
};

/**
 * Discrete-event simulation of the two calculation-distribution plans.
 *
 * Plan 1 alternates a full-window coarse phase on one unit with a parallel
 * fine phase on q_ratio units; windows are strictly serial and the window
 * width must equal q_ratio.
 *
 * Plan 2 runs the coarse chain through all t_total points without stalling
 * and dispatches each fine task to an available (or new) unit as soon as the
 * coarse result it corrects against exists; every iteration 0..K-1 keeps its
 * own correction sweep.
 */
ScheduleResult simulate_schedule(const ScheduleParams& params);

/// Re-checks the event log: every task starts after its dependencies finish
/// and no unit overlaps itself. Throws Error on violation.
void validate_event_log(const ScheduleResult& result);

}  // namespace paramd
