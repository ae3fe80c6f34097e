#pragma once
#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "paramd/errors.hpp"
#include "paramd/integrate.hpp"
#include "paramd/system.hpp"

namespace paramd {

/// Runs independent work items; the fine propagations of one iteration go
/// through this. The sequential executor is the reference for bitwise tests.
class Executor {
  public:
    virtual ~Executor() = default;
    virtual void parallel_for(std::size_t count,
                              const std::function<void(std::size_t)>& fn) const = 0;
};

class SequentialExecutor final : public Executor {
  public:
    void parallel_for(std::size_t count,
                      const std::function<void(std::size_t)>& fn) const override;
};

class AsyncExecutor final : public Executor {
  public:
    explicit AsyncExecutor(int threads) : threads_(threads) {}
    void parallel_for(std::size_t count,
                      const std::function<void(std::size_t)>& fn) const override;

  private:
    int threads_;
};

const Executor& sequential_executor();

struct PararealConfig {
    int window_points = 8;  // T_W
    int max_iter = 5;       // K
    double tol = 1e-6;      // RMS position tolerance, A
    PropagatorSpec fine;    // F
    PropagatorSpec coarse;  // G
    UnitsConfig units{};
    std::optional<double> skip_threshold{};  // metastable-skip heuristic, A
    bool short_circuit = true;               // stop iterating once the window converged

    void validate() const;  // spans must agree to 1e-12 relative
};

/// Difference of two states, componentwise over positions and velocities.
struct StateDelta {
    std::vector<Vec3> dpos;
    std::vector<Vec3> dvel;
    double rms_pos = 0.0;
    double max_pos = 0.0;
};

StateDelta state_sub(const ParticleSystem& a, const ParticleSystem& b);
ParticleSystem state_add(const ParticleSystem& base, const StateDelta& d);

struct EvalCounts {
    std::size_t g_evals = 0;
    std::size_t f_evals = 0;
    std::size_t f_skipped = 0;
};

/**
 * The lambda lattice of one computational window. Row 0 is the
 * initialization (coarse chain), row r >= 1 holds iteration k = r-1.
 * lambda[r][0] is always the window's initial condition. g_rows[r][n]
 * stores G applied to lambda[r][n-1]; delta_rows[r][n] stores
 * f - g of row r, which feeds the next row's correction.
 */
struct PararealWindow {
    int points = 0;  // T_W for this window (may be clipped at the end of a run)
    std::vector<std::vector<ParticleSystem>> lambda;
    std::vector<std::vector<ParticleSystem>> g_rows;
    std::vector<std::vector<StateDelta>> delta_rows;
    std::vector<int> skipped_last;  // slice indices skipped by the heuristic, last iteration
    EvalCounts counts;

    int rows() const { return static_cast<int>(lambda.size()); }
    int iterations_done() const { return rows() - 1; }
};

/// Sequential coarse sweep lambda'_n = G(lambda'_{n-1}).
PararealWindow parareal_init(const ParticleSystem& v, const PararealConfig& config,
                             int points_override = 0);

/**
 * One parareal iteration: fine corrections for every slice (independent,
 * run through the executor), then the sequential coarse sweep with the
 * correction lambda_n = g_n + delta_n. The first corrected sweep reuses
 * the initialization value at n = 1 (the initial condition never changes
 * inside a window); later sweeps refresh the full row.
 */
void parareal_iterate(PararealWindow& window, const PararealConfig& config,
                      const Executor& exec = sequential_executor());

/// Slice indices whose input state moved less than the skip threshold since
/// the previous iteration; parareal_iterate reuses their previous delta.
std::vector<int> metastable_skip_indices(const PararealWindow& window,
                                         const PararealConfig& config);

struct ConvergenceRow {
    int window = 0;
    int point = 0;      // slice index within the window, 1-based
    int iteration = 0;  // k, 0-based
    double delta_rms = 0.0;
    bool converged = false;
};

struct ConvergenceReport {
    std::vector<ConvergenceRow> rows;
    std::vector<int> point_iterations;  // per converged global point
    EvalCounts counts;
    int windows = 0;
    bool converged = false;
};

struct NonConvergenceError : Error {
    ConvergenceReport report;
    NonConvergenceError(const std::string& w, ConvergenceReport r)
        : Error(w), report(std::move(r)) {}
};

struct PararealResult {
    std::vector<ParticleSystem> trajectory;  // states at T_1..T_total
    ConvergenceReport report;
};

/**
 * Iterates windows over total_points slices. A point counts as converged
 * when its RMS position change between successive iterations is <= tol;
 * the window then slides past its converged prefix. A window that exhausts
 * max_iter with an empty converged prefix raises NonConvergenceError with
 * the report attached.
 */
PararealResult parareal_run(const ParticleSystem& v, int total_points,
                            const PararealConfig& config,
                            const Executor& exec = sequential_executor());

}  // namespace paramd
