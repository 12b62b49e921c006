#ifndef FANO_CONFIG_HPP
#define FANO_CONFIG_HPP

#include <cstddef>
#include <cstdint>

namespace fano {

// Tunables with the pinned defaults. Thread-local so parallel scenario runs can
// carry independent overrides.
struct Config {
    std::size_t degree_bound = 200;          // abort if any polynomial exceeds this total degree
    std::size_t ratexpr_gcd_threshold = 5000; // term count that triggers the heuristic reduction pass
    std::size_t group_order_bound = 10000;   // closure abort threshold
    double newton_tol = 1e-12;
    int newton_max_restarts = 100;
    int newton_max_iter = 80;
    double drift_tol = 1e-8;
    double fd_residual_tol = 1e-6;
    double integrate_rtol = 1e-10;
    double integrate_atol = 1e-12;
    std::uint64_t rng_seed = 0x5eed5eedULL;
};

Config& config();

// RAII override used by scenarios and tests.
struct ConfigOverride {
    ConfigOverride() : saved(config()) {}
    ~ConfigOverride() { config() = saved; }
    Config saved;
};

} // namespace fano

#endif
