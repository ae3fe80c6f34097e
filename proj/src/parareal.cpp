#include "paramd/parareal.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <future>
#include <thread>

namespace paramd {

void SequentialExecutor::parallel_for(std::size_t count,
                                      const std::function<void(std::size_t)>& fn) const {
    for (std::size_t i = 0; i < count; ++i) fn(i);
}

void AsyncExecutor::parallel_for(std::size_t count,
                                 const std::function<void(std::size_t)>& fn) const {
    const int workers = std::max(1, threads_);
    if (workers == 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::future<void>> futs;
    futs.reserve(workers);
    std::atomic<std::size_t> next{0};
    for (int w = 0; w < workers; ++w) {
        futs.push_back(std::async(std::launch::async, [&]() {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                fn(i);
            }
        }));
    }
    for (auto& f : futs) f.get();
}

const Executor& sequential_executor() {
    static const SequentialExecutor exec;
    return exec;
}

void PararealConfig::validate() const {
    if (window_points < 1) throw ConfigError("window_points must be >= 1");
    if (max_iter < 1) throw ConfigError("max_iter must be >= 1");
    if (!(tol > 0.0)) throw ConfigError("tol must be > 0");
    fine.validate();
    coarse.validate();
    units.validate();
    const double sf = fine.slice_span();
    const double sg = coarse.slice_span();
    if (std::fabs(sf - sg) > 1e-12 * std::max(std::fabs(sf), std::fabs(sg)))
        throw ConfigError("fine and coarse propagators span different slice lengths");
    if (skip_threshold && !(*skip_threshold >= 0.0))
        throw ConfigError("skip threshold must be >= 0");
}

StateDelta state_sub(const ParticleSystem& a, const ParticleSystem& b) {
    StateDelta d;
    const std::size_t n = a.size();
    d.dpos.resize(n);
    d.dvel.resize(n);
    double sum2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        d.dpos[i] = a.positions[i] - b.positions[i];
        d.dvel[i] = a.velocities[i] - b.velocities[i];
        const double p2 = norm2(d.dpos[i]);
        sum2 += p2;
        d.max_pos = std::max(d.max_pos, std::sqrt(p2));
    }
    d.rms_pos = std::sqrt(sum2 / (3.0 * static_cast<double>(n)));
    return d;
}

ParticleSystem state_add(const ParticleSystem& base, const StateDelta& d) {
    ParticleSystem out = base;
    for (std::size_t i = 0; i < out.size(); ++i) {
        out.positions[i] += d.dpos[i];
        out.velocities[i] += d.dvel[i];
    }
    return out;
}

namespace {

double rms_pos_change(const ParticleSystem& a, const ParticleSystem& b) {
    double sum2 = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) sum2 += norm2(a.positions[i] - b.positions[i]);
    return std::sqrt(sum2 / (3.0 * static_cast<double>(a.size())));
}

}  // namespace

PararealWindow parareal_init(const ParticleSystem& v, const PararealConfig& config,
                             int points_override) {
    config.validate();
    const int t = points_override > 0 ? points_override : config.window_points;
    PararealWindow w;
    w.points = t;
    w.lambda.emplace_back();
    w.g_rows.emplace_back();
    w.delta_rows.emplace_back();
    auto& row = w.lambda[0];
    auto& grow = w.g_rows[0];
    row.reserve(t + 1);
    row.push_back(v);
    grow.resize(1);  // slot 0 unused, slices are 1-based
    for (int n = 1; n <= t; ++n) {
        row.push_back(propagate(config.coarse, row[n - 1], config.units));
        w.counts.g_evals++;
        grow.push_back(row[n]);  // the initialization is its own g-row
    }
    w.delta_rows[0].resize(t + 1);
    return w;
}

std::vector<int> metastable_skip_indices(const PararealWindow& w, const PararealConfig& config) {
    std::vector<int> skips;
    if (!config.skip_threshold || w.rows() < 2) return skips;
    const double thr = *config.skip_threshold;
    const auto& cur = w.lambda.back();
    const auto& prev = w.lambda[w.rows() - 2];
    for (int n = 1; n <= w.points; ++n) {
        if (rms_pos_change(cur[n - 1], prev[n - 1]) < thr) skips.push_back(n);
    }
    return skips;
}

void parareal_iterate(PararealWindow& w, const PararealConfig& config, const Executor& exec) {
    const int t = w.points;
    const int prev = w.rows() - 1;  // row holding iteration k-1 (0 = init)
    const auto& prev_lambda = w.lambda[prev];
    const auto& prev_g = w.g_rows[prev];

    std::vector<bool> skip(t + 1, false);
    for (int n : metastable_skip_indices(w, config)) skip[n] = true;

    // Fine corrections: independent across slices.
    std::vector<StateDelta> deltas(t + 1);
    std::vector<int> skipped;
    for (int n = 1; n <= t; ++n) {
        if (skip[n]) {
            deltas[n] = w.delta_rows[prev][n];
            skipped.push_back(n);
        }
    }
    w.counts.f_skipped += skipped.size();
    std::vector<int> work;
    for (int n = 1; n <= t; ++n)
        if (!skip[n]) work.push_back(n);
    exec.parallel_for(work.size(), [&](std::size_t idx) {
        const int n = work[idx];
        const ParticleSystem f = propagate(config.fine, prev_lambda[n - 1], config.units);
        deltas[n] = state_sub(f, prev_g[n]);
    });
    w.counts.f_evals += work.size();

    // Sequential coarse sweep with correction. The first corrected row reuses
    // the initialization value at n = 1; the initial condition never changes.
    std::vector<ParticleSystem> row;
    std::vector<ParticleSystem> grow;
    row.reserve(t + 1);
    row.push_back(w.lambda[0][0]);
    grow.resize(1);
    for (int n = 1; n <= t; ++n) {
        ParticleSystem g;
        if (prev == 0 && n == 1) {
            g = prev_g[1];
        } else {
            g = propagate(config.coarse, row[n - 1], config.units);
            w.counts.g_evals++;
        }
        row.push_back(state_add(g, deltas[n]));
        grow.push_back(std::move(g));
    }
    w.lambda.push_back(std::move(row));
    w.g_rows.push_back(std::move(grow));
    w.delta_rows.push_back(std::move(deltas));
    w.skipped_last = std::move(skipped);
}

PararealResult parareal_run(const ParticleSystem& v, int total_points,
                            const PararealConfig& config, const Executor& exec) {
    config.validate();
    if (total_points < 1) throw ConfigError("total_points must be >= 1");

    PararealResult out;
    ConvergenceReport& rep = out.report;
    ParticleSystem current = v;
    int remaining = total_points;
    int window_idx = 0;

    while (remaining > 0) {
        ++window_idx;
        const int t = std::min(config.window_points, remaining);
        PararealWindow w = parareal_init(current, config, t);

        int prefix = 0;
        for (int k = 0; k < config.max_iter; ++k) {
            parareal_iterate(w, config, exec);
            const auto& cur = w.lambda.back();
            const auto& before = w.lambda[w.rows() - 2];
            prefix = 0;
            bool unbroken = true;
            for (int n = 1; n <= t; ++n) {
                const double change = rms_pos_change(cur[n], before[n]);
                const bool ok = change <= config.tol;
                rep.rows.push_back({window_idx, n, k, w.delta_rows.back()[n].rms_pos, ok});
                if (unbroken && ok)
                    prefix = n;
                else
                    unbroken = false;
            }
            if (config.short_circuit && prefix == t) break;
        }

        rep.counts.g_evals += w.counts.g_evals;
        rep.counts.f_evals += w.counts.f_evals;
        rep.counts.f_skipped += w.counts.f_skipped;

        if (prefix == 0) {
            rep.windows = window_idx;
            throw NonConvergenceError("window " + std::to_string(window_idx) +
                                          " did not converge within max_iter=" +
                                          std::to_string(config.max_iter),
                                      rep);
        }
        const auto& last = w.lambda.back();
        for (int n = 1; n <= prefix; ++n) {
            out.trajectory.push_back(last[n]);
            rep.point_iterations.push_back(w.iterations_done());
        }
        current = last[prefix];
        remaining -= prefix;
    }
    rep.windows = window_idx;
    rep.converged = true;
    return out;
}

}  // namespace paramd
