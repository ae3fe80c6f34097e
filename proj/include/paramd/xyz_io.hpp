#pragma once
#include <fstream>
#include <string>

#include "paramd/system.hpp"

namespace paramd {

/**
 * Extended-XYZ particle file.
 *   line 1: N
 *   line 2: "box <bx> <by> <bz>" followed by free-form tokens
 *   lines 3..N+2: element x y z q vx vy vz mass
 * Reals are written with 17 significant digits so save/load round-trips
 * bitwise. The loader reports malformed input with its line number.
 */
ParticleSystem load_system(const std::string& path);
void save_system(const ParticleSystem& s, const std::string& path);

std::string format_real(double v);  // %.17g

/// Appends extended-XYZ frames to one file; comment carries box, step and time.
class TrajectoryWriter {
  public:
    explicit TrajectoryWriter(const std::string& path);
    void write_frame(const ParticleSystem& s, long long step, double time_fs);

  private:
    std::ofstream out_;
};

}  // namespace paramd
