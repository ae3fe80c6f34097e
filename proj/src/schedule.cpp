#include "paramd/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "paramd/cost_model.hpp"

namespace paramd {

long long ScheduleParams::window_width() const {
    if (t_w > 0) return t_w;
    if (plan == PlanKind::Plan1) return static_cast<long long>(std::llround(q_ratio));
    return t_total;
}

void ScheduleParams::validate() const {
    if (!(q_ratio > 0.0)) throw ConfigError("schedule: q_ratio must be > 0");
    if (t_total < 1) throw ConfigError("schedule: t_total must be >= 1");
    if (k_iters < 1) throw ConfigError("schedule: k_iters must be >= 1");
    if (!(r_g > 0.0)) throw ConfigError("schedule: r_g must be > 0");
    const long long w = window_width();
    if (w < 1) throw ConfigError("schedule: window width must be >= 1");
    if (t_total % w != 0)
        throw ConfigError("schedule: t_total must be a multiple of the window width");
    if (plan == PlanKind::Plan1) {
        if (std::llround(q_ratio) != q_ratio)
            throw ConfigError("schedule: plan 1 requires an integer q_ratio");
        if (w != static_cast<long long>(std::llround(q_ratio)))
            throw ConfigError("schedule: plan 1 requires window width == q_ratio");
    }
}

namespace {

struct Builder {
    std::vector<SimTask> tasks;

    int add(std::string name, double dur, std::vector<int> deps) {
        SimTask t;
        t.name = std::move(name);
        t.deps = std::move(deps);
        t.start = 0.0;
        for (int d : t.deps) t.start = std::max(t.start, tasks[d].end);
        t.end = t.start + dur;
        tasks.push_back(std::move(t));
        return static_cast<int>(tasks.size()) - 1;
    }
};

// Units are elastic: a dispatched task grabs the lowest-index free unit of
// its pool or a new one. Zero-cost bookkeeping tasks share pool B.
void assign_units(std::vector<SimTask>& tasks, int& g_units, int& f_units) {
    std::vector<int> order(tasks.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (tasks[a].start != tasks[b].start) return tasks[a].start < tasks[b].start;
        return a < b;
    });
    std::map<char, std::vector<double>> pools;
    for (int id : order) {
        SimTask& t = tasks[id];
        const char pool = t.name[0] == 'F' ? 'F' : (t.end > t.start ? 'G' : 'B');
        auto& free_at = pools[pool];
        int unit = -1;
        for (std::size_t u = 0; u < free_at.size(); ++u) {
            if (free_at[u] <= t.start) {
                unit = static_cast<int>(u);
                break;
            }
        }
        if (unit < 0) {
            unit = static_cast<int>(free_at.size());
            free_at.push_back(0.0);
        }
        free_at[unit] = t.end;
        t.unit = std::string(1, pool) + std::to_string(unit);
    }
    g_units = static_cast<int>(pools['G'].size());
    f_units = static_cast<int>(pools['F'].size());
}

std::string tag(const char* kind, long long w, long long k, long long n) {
    return std::string(kind) + "(w" + std::to_string(w) + ",k" + std::to_string(k) + ",n" +
           std::to_string(n) + ")";
}

ScheduleResult finish(const ScheduleParams& params, Builder& b, double closed_makespan) {
    ScheduleResult res;
    res.r_g = params.r_g;
    res.r_f = params.q_ratio * params.r_g;
    res.events = std::move(b.tasks);
    for (const SimTask& t : res.events) {
        res.makespan = std::max(res.makespan, t.end);
        if (t.name[0] == 'F')
            res.f_task_count++;
        else if (t.end > t.start)
            res.g_task_count++;
    }
    assign_units(res.events, res.g_units, res.f_units);
    res.closed_form_makespan = closed_makespan;
    const double serial_fine = static_cast<double>(params.t_total) * res.r_f;
    res.simulated_speedup = serial_fine / res.makespan;
    res.closed_form_speedup =
        params.plan == PlanKind::Plan1
            ? speedup_plan1(params.q_ratio)
            : speedup_plan2(params.q_ratio, static_cast<double>(params.t_total),
                            static_cast<double>(params.k_iters));
    return res;
}

// Plan 1: one unit sweeps the window's coarse chain, then q_ratio units run
// the fine tasks in parallel, then the next window begins. One coarse and one
// fine phase per window regardless of k_iters.
ScheduleResult simulate_plan1(const ScheduleParams& params) {
    const long long tw = params.window_width();
    const long long windows = params.windows();
    const double rg = params.r_g;
    const double rf = params.q_ratio * params.r_g;

    Builder b;
    std::vector<int> prev_f;
    for (long long w = 1; w <= windows; ++w) {
        int prev = -1;
        int last_g = -1;
        for (long long n = 1; n <= tw; ++n) {
            std::vector<int> deps;
            if (prev >= 0) deps.push_back(prev);
            if (n == 1) deps = prev_f;  // window barrier
            prev = b.add(tag("G", w, -1, n), rg, std::move(deps));
            last_g = prev;
        }
        prev_f.clear();
        for (long long n = 1; n <= tw; ++n) {
            const int f = b.add(tag("F", w, -1, n), rf, {last_g});
            b.add(tag("D", w, -1, n), 0.0, {f, last_g});
            prev_f.push_back(f);
        }
    }
    const double closed = 2.0 * static_cast<double>(windows) * rf;
    return finish(params, b, closed);
}

/**
 * Plan 2. The coarse chain runs through all t_total points without stalling;
 * a fine task dispatches to an available (or new) unit as soon as the coarse
 * result it corrects against exists; every iteration keeps its own correction
 * sweep whose first entry is inherited from the initialization.
 *
 * Task rows per window: the initialization fine wave (k = -1) plus corrected
 * rows k = 0..K-1. D = delta subtraction, A = corrected-state assembly; both
 * cost nothing but appear in the log.
 */
ScheduleResult simulate_plan2(const ScheduleParams& params) {
    const long long tw = params.window_width();
    const long long windows = params.windows();
    const long long kk = params.k_iters;
    const double rg = params.r_g;
    const double rf = params.q_ratio * params.r_g;

    Builder b;
    std::vector<int> line;  // global coarse chain, 1-based point index
    line.push_back(-1);
    for (long long t = 1; t <= params.t_total; ++t) {
        std::vector<int> deps;
        if (t > 1) deps.push_back(line[t - 1]);
        line.push_back(b.add("G(init,n" + std::to_string(t) + ")", rg, std::move(deps)));
    }

    for (long long w = 1; w <= windows; ++w) {
        const long long w0 = (w - 1) * tw;
        // init fine wave, bundled with the line's coarse results
        std::vector<int> f_prev(tw + 1, -1), d_prev(tw + 1, -1);
        for (long long n = 1; n <= tw; ++n) {
            f_prev[n] = b.add(tag("F", w, -1, n), rf, {line[w0 + n]});
            d_prev[n] = b.add(tag("D", w, -1, n), 0.0, {f_prev[n], line[w0 + n]});
        }
        for (long long k = 0; k < kk; ++k) {
            std::vector<int> gres(tw + 1, -1), assembled(tw + 1, -1);
            std::vector<int> f_cur(tw + 1, -1), d_cur(tw + 1, -1);
            for (long long n = 1; n <= tw; ++n) {
                if (k == 0 && n == 1) {
                    gres[n] = b.add(tag("C", w, k, n), 0.0, {line[w0 + 1]});
                } else {
                    std::vector<int> deps;
                    if (n > 1)
                        deps.push_back(assembled[n - 1]);
                    else if (w0 >= 1)
                        deps.push_back(line[w0]);
                    gres[n] = b.add(tag("G", w, k, n), rg, std::move(deps));
                }
                assembled[n] = b.add(tag("A", w, k, n), 0.0, {gres[n], d_prev[n]});
                if (k < kk - 1) {
                    f_cur[n] = b.add(tag("F", w, k, n), rf, {gres[n]});
                    d_cur[n] = b.add(tag("D", w, k, n), 0.0, {f_cur[n], gres[n]});
                }
            }
            f_prev = std::move(f_cur);
            d_prev = std::move(d_cur);
        }
    }
    const double closed =
        static_cast<double>(params.t_total) * rg + static_cast<double>(kk) * rf;
    return finish(params, b, closed);
}

}  // namespace

ScheduleResult simulate_schedule(const ScheduleParams& params) {
    params.validate();
    ScheduleResult res =
        params.plan == PlanKind::Plan1 ? simulate_plan1(params) : simulate_plan2(params);
    validate_event_log(res);
    return res;
}

void validate_event_log(const ScheduleResult& result) {
    const auto& ev = result.events;
    std::map<std::string, std::vector<const SimTask*>> by_unit;
    for (const SimTask& t : ev) {
        if (t.end < t.start) throw Error("event log: task '" + t.name + "' ends before it starts");
        for (int d : t.deps) {
            if (d < 0 || d >= static_cast<int>(ev.size()))
                throw Error("event log: task '" + t.name + "' has a dangling dependency");
            if (ev[d].end > t.start)
                throw Error("event log: task '" + t.name + "' starts before '" + ev[d].name +
                            "' finishes");
        }
        by_unit[t.unit].push_back(&t);
    }
    for (auto& [unit, tasks] : by_unit) {
        std::sort(tasks.begin(), tasks.end(), [](const SimTask* a, const SimTask* b) {
            if (a->start != b->start) return a->start < b->start;
            return a->end < b->end;
        });
        for (std::size_t i = 1; i < tasks.size(); ++i) {
            if (tasks[i]->start < tasks[i - 1]->end)
                throw Error("event log: unit " + unit + " overlaps tasks '" +
                            tasks[i - 1]->name + "' and '" + tasks[i]->name + "'");
        }
    }
}

}  // namespace paramd
