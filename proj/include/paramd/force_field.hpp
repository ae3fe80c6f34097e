#pragma once
#include <memory>
#include <string>

#include "paramd/msm_grid.hpp"
#include "paramd/potential.hpp"
#include "paramd/system.hpp"
#include "paramd/units.hpp"

namespace paramd {

/// A force field evaluates potentials and forces from positions and charges
/// only; evaluation is pure and safe to call concurrently.
class ForceField {
  public:
    virtual ~ForceField() = default;
    virtual PotentialResult evaluate(const ParticleSystem& s) const = 0;
    /// Model value used by the cost/schedule module, flops per MD step.
    virtual double cost_flops_per_step(std::size_t n) const = 0;
    virtual std::string name() const = 0;
};

class DirectCoulombField final : public ForceField {
  public:
    explicit DirectCoulombField(UnitsConfig units) : units_(units) {}
    PotentialResult evaluate(const ParticleSystem& s) const override;
    double cost_flops_per_step(std::size_t n) const override;
    std::string name() const override { return "direct"; }

  private:
    UnitsConfig units_;
};

class SimpleCutoffField final : public ForceField {
  public:
    SimpleCutoffField(CutoffParams params, UnitsConfig units, double flops_per_particle = 301.0)
        : params_(params), units_(units), flops_per_particle_(flops_per_particle) {}
    PotentialResult evaluate(const ParticleSystem& s) const override;
    double cost_flops_per_step(std::size_t n) const override;
    std::string name() const override { return "cutoff"; }

  private:
    CutoffParams params_;
    UnitsConfig units_;
    double flops_per_particle_;
};

class WolfField final : public ForceField {
  public:
    WolfField(CutoffParams params, UnitsConfig units, double flops_per_particle = 350.0)
        : params_(params), units_(units), flops_per_particle_(flops_per_particle) {}
    PotentialResult evaluate(const ParticleSystem& s) const override;
    double cost_flops_per_step(std::size_t n) const override;
    std::string name() const override { return "wolf"; }

  private:
    CutoffParams params_;
    UnitsConfig units_;
    double flops_per_particle_;
};

class MsmField final : public ForceField {
  public:
    MsmField(MsmConfig config, UnitsConfig units) : config_(config), units_(units) {}
    PotentialResult evaluate(const ParticleSystem& s) const override;
    double cost_flops_per_step(std::size_t n) const override;
    std::string name() const override { return "msm"; }
    const MsmConfig& config() const { return config_; }

  private:
    MsmConfig config_;
    UnitsConfig units_;
};

/**
 * Adds the stabilizing pair repulsion U = sum eps (sigma/r)^12 on top of an
 * electrostatic field. Off unless explicitly constructed; applied identically
 * to whichever base field it wraps, so a fine/coarse propagator pair still
 * differs only in electrostatics. total_energy and forces include the term,
 * per_particle_potential stays electrostatic.
 */
class PairRepulsionOverlay final : public ForceField {
  public:
    PairRepulsionOverlay(std::shared_ptr<const ForceField> base, double epsilon = 0.1,
                         double sigma = 1.0)
        : base_(std::move(base)), epsilon_(epsilon), sigma_(sigma) {}
    PotentialResult evaluate(const ParticleSystem& s) const override;
    double cost_flops_per_step(std::size_t n) const override;
    std::string name() const override { return base_->name() + "+rep"; }

  private:
    std::shared_ptr<const ForceField> base_;
    double epsilon_;
    double sigma_;
};

}  // namespace paramd
