#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

#include "vel/grid.hpp"

namespace vel {

using cplx = std::complex<double>;

/// Fourier coefficients g_hat(k, eta) of a real-valued phase-space function,
/// stored row-major with k running from -k_max. Real-valuedness of g shows up
/// as the Hermitian symmetry g_hat(-k,-eta) = conj(g_hat(k,eta)).
class DistributionSpectrum {
public:
    DistributionSpectrum() = default;

    explicit DistributionSpectrum(SpectralGrid grid, double time = 0.0)
        : grid_(grid), time_(time),
          values_(static_cast<size_t>(grid.n_modes()) * grid.n_eta, cplx{0.0, 0.0}) {}

    const SpectralGrid& grid() const { return grid_; }
    double time() const { return time_; }
    void set_time(double t) { time_ = t; }

    size_t size() const { return values_.size(); }
    cplx* data() { return values_.data(); }
    const cplx* data() const { return values_.data(); }

    int row_index(int k) const { return k + grid_.k_max; }

    cplx& at(int k, int i) {
        return values_[static_cast<size_t>(row_index(k)) * grid_.n_eta + i];
    }
    const cplx& at(int k, int i) const {
        return values_[static_cast<size_t>(row_index(k)) * grid_.n_eta + i];
    }

    const cplx* row(int k) const {
        return values_.data() + static_cast<size_t>(row_index(k)) * grid_.n_eta;
    }
    cplx* row(int k) {
        return values_.data() + static_cast<size_t>(row_index(k)) * grid_.n_eta;
    }

    /// Fill mode k from a function of eta; the mirror row is NOT touched.
    void fill_mode(int k, const std::function<cplx(double)>& f) {
        cplx* r = row(k);
        for (int i = 0; i < grid_.n_eta; ++i) r[i] = f(grid_.eta(i));
    }

    /// Fill every mode from a function of (k, eta).
    void fill(const std::function<cplx(int, double)>& f) {
        for (int k = -grid_.k_max; k <= grid_.k_max; ++k) {
            cplx* r = row(k);
            for (int i = 0; i < grid_.n_eta; ++i) r[i] = f(k, grid_.eta(i));
        }
    }

    /// Overwrite rows k < 0 with the conjugate mirror of rows k > 0 and make
    /// the k = 0 row self-symmetric. eta -> -eta is the index flip i -> n-1-i.
    void enforce_hermitian() {
        const int n = grid_.n_eta;
        for (int k = 1; k <= grid_.k_max; ++k) {
            const cplx* src = row(k);
            cplx* dst = row(-k);
            for (int i = 0; i < n; ++i) dst[i] = std::conj(src[n - 1 - i]);
        }
        cplx* z = row(0);
        for (int i = 0; i < n / 2; ++i) {
            cplx avg = 0.5 * (z[i] + std::conj(z[n - 1 - i]));
            z[i] = avg;
            z[n - 1 - i] = std::conj(avg);
        }
        z[n / 2] = cplx{z[n / 2].real(), 0.0};
    }

    /// max |value(-k,-eta) - conj(value(k,eta))| over the grid.
    double hermitian_defect() const {
        const int n = grid_.n_eta;
        double worst = 0.0;
        for (int k = 0; k <= grid_.k_max; ++k) {
            const cplx* pos = row(k);
            const cplx* neg = row(-k);
            for (int i = 0; i < n; ++i)
                worst = std::max(worst, std::abs(neg[n - 1 - i] - std::conj(pos[i])));
        }
        return worst;
    }

    bool is_hermitian(double tol = 1e-12) const { return hermitian_defect() <= tol; }

    /// Imaginary part of the mass mode value(0, eta=0).
    double mass_mode_imag() const { return std::abs(at(0, grid_.n_eta / 2).imag()); }

    /// Plain l2 quadrature norm sqrt(sum |v|^2 * delta_eta), trapezoid in eta.
    double l2_quadrature_norm() const {
        const int n = grid_.n_eta;
        const double de = grid_.delta_eta();
        double acc = 0.0;
        for (int k = -grid_.k_max; k <= grid_.k_max; ++k) {
            const cplx* r = row(k);
            double s = 0.5 * (std::norm(r[0]) + std::norm(r[n - 1]));
            for (int i = 1; i < n - 1; ++i) s += std::norm(r[i]);
            acc += s * de;
        }
        return std::sqrt(acc);
    }

private:
    SpectralGrid grid_;
    double time_ = 0.0;
    std::vector<cplx> values_;
};

} // namespace vel
