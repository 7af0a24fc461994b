#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace vel {

enum class InterpOrder { linear, cubic };

/// Discretization of the (k, eta) frequency plane together with the time
/// marching parameters shared by all solvers. Spatial modes run over
/// k in {-k_max..k_max} (torus of period 2*pi); the velocity frequency eta
/// is sampled uniformly and symmetrically on [-eta_max, eta_max].
///
/// The constraint eta_max >= k_max * t_final keeps the sampling line
/// eta = k*t on the grid for every active mode up to the final time.
struct SpectralGrid {
    int k_max = 0;
    double eta_max = 0.0;
    int n_eta = 0;
    double dt = 0.0;
    double t_final = 0.0;
    InterpOrder interp = InterpOrder::cubic;

    double delta_eta() const { return 2.0 * eta_max / (n_eta - 1); }

    // Node values are always produced by this exact expression so they are
    // reproducible bit-for-bit from the stored fields.
    double eta(int i) const { return -eta_max + i * delta_eta(); }

    int n_modes() const { return 2 * k_max + 1; }

    bool contains_eta(double e) const { return std::abs(e) <= eta_max; }
};

inline SpectralGrid make_grid(int k_max, double eta_max, int n_eta, double dt,
                              double t_final,
                              InterpOrder interp = InterpOrder::cubic) {
    if (k_max <= 0) throw std::domain_error("make_grid: k_max must be positive");
    if (eta_max <= 0) throw std::domain_error("make_grid: eta_max must be positive");
    if (dt <= 0) throw std::domain_error("make_grid: dt must be positive");
    if (t_final <= 0) throw std::domain_error("make_grid: t_final must be positive");
    if (n_eta < 3) throw std::domain_error("make_grid: n_eta must be at least 3");
    if (n_eta % 2 == 0)
        throw std::domain_error("make_grid: n_eta must be odd so eta = 0 is a node");
    if (eta_max < static_cast<double>(k_max) * t_final)
        throw std::domain_error(
            "make_grid: eta_max < k_max*t_final (sampling line eta = k*t leaves "
            "the grid; need eta_max >= " +
            std::to_string(static_cast<double>(k_max) * t_final) + ")");
    SpectralGrid g;
    g.k_max = k_max;
    g.eta_max = eta_max;
    g.n_eta = n_eta;
    g.dt = dt;
    g.t_final = t_final;
    g.interp = interp;
    return g;
}

} // namespace vel
