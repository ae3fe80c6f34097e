#include "paramd/generate.hpp"

#include <random>

#include "paramd/errors.hpp"

namespace paramd {

namespace {

// Uniform in [0,1) built from the raw 64-bit stream, so the layout does not
// depend on the standard library's distribution implementation.
double next_u01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::size_t next_below(std::mt19937_64& rng, std::size_t bound) {
    auto v = static_cast<std::size_t>(next_u01(rng) * static_cast<double>(bound));
    return v >= bound ? bound - 1 : v;
}

}  // namespace

ChargeScheme charge_scheme_from_string(const std::string& name) {
    if (name == "all_plus_one") return ChargeScheme::AllPlusOne;
    if (name == "alternating") return ChargeScheme::Alternating;
    if (name == "random_neutral") return ChargeScheme::RandomNeutral;
    throw ConfigError("unknown charge scheme '" + name + "'");
}

std::string to_string(ChargeScheme scheme) {
    switch (scheme) {
        case ChargeScheme::AllPlusOne: return "all_plus_one";
        case ChargeScheme::Alternating: return "alternating";
        case ChargeScheme::RandomNeutral: return "random_neutral";
    }
    return "?";
}

ParticleSystem generate_random_system(std::size_t n, const Vec3& box, ChargeScheme scheme,
                                      double min_separation, std::uint64_t seed) {
    if (n < 1) throw ConfigError("generate_random_system: n must be >= 1");
    if (min_separation < 0.0) throw ConfigError("generate_random_system: min_separation < 0");
    if (!(box.x > 0.0 && box.y > 0.0 && box.z > 0.0))
        throw ConfigError("generate_random_system: box extents must be positive");

    std::mt19937_64 rng(seed);
    ParticleSystem s;
    s.box = box;
    s.positions.reserve(n);

    const unsigned long long budget = 10000ull * n;
    unsigned long long attempts = 0;
    const double sep2 = min_separation * min_separation;
    while (s.positions.size() < n) {
        if (attempts >= budget)
            throw PlacementError("placement failed after " + std::to_string(attempts) +
                                 " attempts (" + std::to_string(s.positions.size()) + "/" +
                                 std::to_string(n) + " placed)");
        ++attempts;
        const Vec3 p{next_u01(rng) * box.x, next_u01(rng) * box.y, next_u01(rng) * box.z};
        bool ok = true;
        for (const Vec3& q : s.positions) {
            if (norm2(p - q) < sep2) {
                ok = false;
                break;
            }
        }
        if (ok) s.positions.push_back(p);
    }

    s.velocities.assign(n, Vec3{});
    s.masses.assign(n, 1.0);
    s.charges.assign(n, 1.0);
    switch (scheme) {
        case ChargeScheme::AllPlusOne:
            break;
        case ChargeScheme::Alternating:
            for (std::size_t i = 0; i < n; ++i) s.charges[i] = (i % 2 == 0) ? 1.0 : -1.0;
            break;
        case ChargeScheme::RandomNeutral: {
            const std::size_t plus = (n + 1) / 2;
            for (std::size_t i = 0; i < n; ++i) s.charges[i] = i < plus ? 1.0 : -1.0;
            for (std::size_t i = n - 1; i > 0; --i) {
                const std::size_t j = next_below(rng, i + 1);
                std::swap(s.charges[i], s.charges[j]);
            }
            break;
        }
    }
    validate_system(s, true);
    return s;
}

}  // namespace paramd
