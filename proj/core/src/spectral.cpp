#include "stagflow/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

namespace stagflow::spectral {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// FFTW plan creation is not thread-safe; plan execution on private buffers is.
// Each thread keeps its own workspace per grid size, and planning is guarded
// by a single global mutex.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

class Workspace {
  public:
    explicit Workspace(int m) : m_(m) {
        real_ = fftw_alloc_real(static_cast<size_t>(m));
        cplx_ = fftw_alloc_complex(static_cast<size_t>(m / 2 + 1));
        std::lock_guard<std::mutex> lock(planner_mutex());
        r2c_ = fftw_plan_dft_r2c_1d(m, real_, cplx_, FFTW_ESTIMATE);
        c2r_ = fftw_plan_dft_c2r_1d(m, cplx_, real_, FFTW_ESTIMATE);
    }

    ~Workspace() {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_destroy_plan(r2c_);
        fftw_destroy_plan(c2r_);
        fftw_free(real_);
        fftw_free(cplx_);
    }

    Workspace(const Workspace&) = delete;
    Workspace& operator=(const Workspace&) = delete;

    Spectrum forward(const std::vector<double>& in) {
        for (int j = 0; j < m_; ++j) real_[j] = in[static_cast<size_t>(j)];
        fftw_execute(r2c_);
        Spectrum out(static_cast<size_t>(m_ / 2 + 1));
        const double scale = 1.0 / m_;
        for (int k = 0; k <= m_ / 2; ++k)
            out[static_cast<size_t>(k)] =
                std::complex<double>(cplx_[k][0] * scale, cplx_[k][1] * scale);
        return out;
    }

    std::vector<double> inverse(const Spectrum& in) {
        for (int k = 0; k <= m_ / 2; ++k) {
            cplx_[k][0] = in[static_cast<size_t>(k)].real();
            cplx_[k][1] = in[static_cast<size_t>(k)].imag();
        }
        fftw_execute(c2r_);
        return std::vector<double>(real_, real_ + m_);
    }

  private:
    int m_;
    double* real_;
    fftw_complex* cplx_;
    fftw_plan r2c_;
    fftw_plan c2r_;
};

Workspace& workspace_for(int m) {
    thread_local std::map<int, std::unique_ptr<Workspace>> cache;
    auto& slot = cache[m];
    if (!slot) slot = std::make_unique<Workspace>(m);
    return *slot;
}

}  // namespace

Spectrum analyze(const Field& f) {
    return workspace_for(f.size()).forward(f.values());
}

Field synthesize(const PeriodicGrid& grid, const Spectrum& coeffs) {
    if (static_cast<int>(coeffs.size()) != grid.size() / 2 + 1)
        throw ConfigError("spectrum length does not match grid size");
    return Field(grid, workspace_for(grid.size()).inverse(coeffs));
}

void apply_derivative_symbol(Spectrum& coeffs, int order) {
    const int half = static_cast<int>(coeffs.size()) - 1;
    for (int k = 0; k <= half; ++k) {
        std::complex<double> symbol(0.0, kTwoPi * k);
        std::complex<double> factor = 1.0;
        for (int p = 0; p < order; ++p) factor *= symbol;
        coeffs[static_cast<size_t>(k)] *= factor;
    }
    if (order % 2 == 1) coeffs[static_cast<size_t>(half)] = 0.0;
}

void apply_inverse_derivative_symbol(Spectrum& coeffs) {
    const int half = static_cast<int>(coeffs.size()) - 1;
    coeffs[0] = 0.0;
    for (int k = 1; k < half; ++k)
        coeffs[static_cast<size_t>(k)] /= std::complex<double>(0.0, kTwoPi * k);
    coeffs[static_cast<size_t>(half)] = 0.0;
}

void truncate(Spectrum& coeffs, int cutoff) {
    const int half = static_cast<int>(coeffs.size()) - 1;
    for (int k = cutoff + 1; k <= half; ++k) coeffs[static_cast<size_t>(k)] = 0.0;
}

int dealias_cutoff(int grid_size) { return (grid_size - 1) / 3; }

double eval(const Spectrum& coeffs, double x) {
    const int half = static_cast<int>(coeffs.size()) - 1;
    const std::complex<double> z(std::cos(kTwoPi * x), std::sin(kTwoPi * x));
    std::complex<double> zk = z;
    double acc = coeffs[0].real();
    for (int k = 1; k < half; ++k) {
        const auto& c = coeffs[static_cast<size_t>(k)];
        acc += 2.0 * (c.real() * zk.real() - c.imag() * zk.imag());
        zk *= z;
    }
    // Nyquist carries its cosine representative with unit weight.
    acc += coeffs[static_cast<size_t>(half)].real() * zk.real() -
           coeffs[static_cast<size_t>(half)].imag() * zk.imag();
    return acc;
}

std::vector<double> eval_many(const Spectrum& coeffs, std::span<const double> xs) {
    std::vector<double> out(xs.size());
    for (size_t i = 0; i < xs.size(); ++i) out[i] = eval(coeffs, xs[i]);
    return out;
}

}  // namespace stagflow::spectral
