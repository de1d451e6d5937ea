#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "diracfac/fft.hpp"
#include "diracfac/matrix.hpp"

namespace diracfac {

/// Periodic 1-D field stored as Fourier coefficients F(p_m), p_m = 2 pi m/L,
/// m = -N/2 .. N/2-1.  Storage uses FFT wrap order (m = 0, 1, ..., N/2-1,
/// -N/2, ..., -1); signed-index accessors hide that.
///
/// Conventions: f(x_j) = sum_m F(p_m) exp(i p_m x_j), x_j = j L / N, so a
/// spatial derivative multiplies mode m by i p_m.
class SpectralField {
public:
    SpectralField(double length, std::size_t n) : length_(length), modes_(n, Cx{0, 0}) {
        if (length <= 0.0) throw std::invalid_argument("SpectralField: period must be positive");
        if (!is_power_of_two(n)) throw std::invalid_argument("SpectralField: grid size must be a power of two");
    }

    static SpectralField from_real_space(double length, const std::vector<Cx>& samples) {
        SpectralField f(length, samples.size());
        f.modes_ = samples;
        fft_radix2(f.modes_, -1);
        const double inv = 1.0 / static_cast<double>(samples.size());
        for (Cx& z : f.modes_) z *= inv;
        return f;
    }

    /// Gaussian exp(-(x - L/2)^2 / (2 sigma^2)) sampled on the grid.
    static SpectralField gaussian(double length, std::size_t n, double sigma) {
        if (sigma <= 0.0) throw std::invalid_argument("SpectralField: sigma must be positive");
        std::vector<Cx> samples(n);
        for (std::size_t j = 0; j < n; ++j) {
            const double x = length * static_cast<double>(j) / static_cast<double>(n);
            const double d = x - 0.5 * length;
            samples[j] = Cx{std::exp(-d * d / (2.0 * sigma * sigma)), 0.0};
        }
        return from_real_space(length, samples);
    }

    double length() const { return length_; }
    std::size_t size() const { return modes_.size(); }
    long min_mode() const { return -static_cast<long>(size() / 2); }
    long max_mode() const { return static_cast<long>(size() / 2) - 1; }

    /// 2 pi m / L
    double frequency(long m) const { return 2.0 * kPi * static_cast<double>(m) / length_; }

    Cx mode(long m) const { return modes_[wrap(m)]; }
    void set_mode(long m, Cx v) { modes_[wrap(m)] = v; }

    std::vector<Cx> to_real_space() const {
        std::vector<Cx> out = modes_;
        fft_radix2(out, +1);
        return out;
    }

    /// sum_m |F(p_m)|^2
    double spectral_mass() const {
        double s = 0.0;
        for (Cx z : modes_) s += std::norm(z);
        return s;
    }

    /// Fraction of spectral mass carried by |m| >= N/4 (the resolution
    /// heuristic: band-limited data keeps this tiny).
    double top_quarter_mass_fraction() const {
        const double total = spectral_mass();
        if (total == 0.0) return 0.0;
        double top = 0.0;
        const long quarter = static_cast<long>(size() / 4);
        for (long m = min_mode(); m <= max_mode(); ++m)
            if (m >= quarter || m <= -quarter) top += std::norm(mode(m));
        return top / total;
    }

    /// Max |F(-m) - conj(F(m))|; zero for fields that are real in space.
    double hermitian_residual() const {
        double r = 0.0;
        for (long m = 1; m < static_cast<long>(size() / 2); ++m)
            r = std::max(r, std::abs(mode(-m) - std::conj(mode(m))));
        return r;
    }

private:
    std::size_t wrap(long m) const {
        const long n = static_cast<long>(size());
        if (m < min_mode() || m > max_mode())
            throw std::out_of_range("SpectralField: mode index out of range");
        return static_cast<std::size_t>((m % n + n) % n);
    }

    double length_;
    std::vector<Cx> modes_;
};

/// n spectral components on a shared grid; the state of the linearized
/// evolution system.
struct VectorSpectralField {
    std::vector<SpectralField> components;

    VectorSpectralField() = default;

    explicit VectorSpectralField(std::vector<SpectralField> comps) : components(std::move(comps)) {
        if (components.empty())
            throw std::invalid_argument("VectorSpectralField: needs at least one component");
        for (const SpectralField& c : components)
            if (c.size() != components[0].size() || c.length() != components[0].length())
                throw std::invalid_argument("VectorSpectralField: components must share the grid");
    }

    /// All n components set equal to the same scalar field.
    static VectorSpectralField uniform(const SpectralField& f, std::size_t n) {
        return VectorSpectralField(std::vector<SpectralField>(n, f));
    }

    std::size_t order() const { return components.size(); }
    std::size_t grid_size() const { return components[0].size(); }
    double length() const { return components[0].length(); }

    double top_quarter_mass_fraction() const {
        double total = 0.0, top = 0.0;
        for (const SpectralField& c : components) {
            const double mass = c.spectral_mass();
            total += mass;
            top += c.top_quarter_mass_fraction() * mass;
        }
        return total == 0.0 ? 0.0 : top / total;
    }
};

} // namespace diracfac
