#include "nanonmr/dipolar.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nanonmr {

DipolarParams DipolarParams::from_distance(double d_angstrom, const PhysicalConstants& pc) {
    DipolarParams p;
    p.d_angstrom = d_angstrom;
    p.delta_khz = coupling_parameter(d_angstrom, pc.gamma_h_khz_per_g, pc.gamma_h_khz_per_g, pc);
    return p;
}

double coupling_parameter(double d_angstrom, double gamma_a_khz_per_g,
                          double gamma_b_khz_per_g, const PhysicalConstants& pc) {
    if (d_angstrom <= 0.0)
        throw std::domain_error("coupling_parameter: distance must be positive");
    const double d3 = d_angstrom * d_angstrom * d_angstrom;
    return pc.coupling_prefactor * gamma_a_khz_per_g * gamma_b_khz_per_g / d3;
}

double splitting(double delta_khz, double theta_deg) {
    const double c = std::cos(deg_to_rad(theta_deg));
    return 0.75 * delta_khz * (1.0 - 3.0 * c * c);
}

double hetero_splitting(double delta_hd_khz, double theta_deg) {
    const double c = std::cos(deg_to_rad(theta_deg));
    return kHeteroPrefactor * delta_hd_khz * (1.0 - 3.0 * c * c);
}

double SpectrumModel::evaluate_raw(double f_khz) const {
    double s = 0.0;
    for (const auto& line : lines) {
        const double u = (f_khz - line.center_khz) / line.width_khz;
        s += line.amplitude * std::exp(-u * u);
    }
    if (apply_envelope) {
        const double v = f_khz - envelope_shift_khz;
        s *= std::exp(-2.0 * v * v / (envelope_sigma_khz * envelope_sigma_khz));
    }
    return s;
}

SampledCurve SpectrumModel::sample(const std::vector<double>& grid_khz) const {
    SampledCurve out;
    out.frequency_khz = grid_khz;
    out.intensity.resize(grid_khz.size());
    double peak = 0.0;
    for (size_t i = 0; i < grid_khz.size(); ++i) {
        out.intensity[i] = evaluate_raw(grid_khz[i]);
        peak = std::max(peak, out.intensity[i]);
    }
    if (normalize && peak > 0.0) {
        for (auto& y : out.intensity) y /= peak;
    }
    return out;
}

namespace {

void check_spectrum_params(const SpectrumParams& sp) {
    if (sp.hdo_fraction < 0.0 || sp.hdo_fraction >= 1.0)
        throw std::domain_error("SpectrumParams: HDO fraction p must lie in [0,1)");
    if (sp.line_width_khz <= 0.0)
        throw std::domain_error("SpectrumParams: line width must be positive");
    if (sp.envelope_sigma_khz <= 0.0)
        throw std::domain_error("SpectrumParams: envelope sigma must be positive");
}

}  // namespace

SpectrumModel build_spectrum_model_from_angles(const std::vector<double>& theta_deg,
                                               const DipolarParams& dp, const SpectrumParams& sp,
                                               const PhysicalConstants& pc) {
    check_spectrum_params(sp);
    if (dp.d_angstrom <= 0.0)
        throw std::domain_error("DipolarParams: distance must be positive");

    const double delta_hd =
        coupling_parameter(dp.d_angstrom, pc.gamma_h_khz_per_g, pc.gamma_d_khz_per_g, pc);
    const double p = sp.hdo_fraction;
    const double hdo_weight = 2.0 * p / (1.0 - p);

    SpectrumModel model;
    model.envelope_shift_khz = sp.envelope_shift_khz;
    model.envelope_sigma_khz = sp.envelope_sigma_khz;

    for (double theta : theta_deg) {
        const double df = splitting(dp.delta_khz, theta);
        model.lines.push_back({+df, sp.line_width_khz, 1.0, LineKind::H2O});
        model.lines.push_back({-df, sp.line_width_khz, 1.0, LineKind::H2O});
        if (hdo_weight > 0.0) {
            // The H-D vector in HDO shares the H-H geometry, so the same
            // theta applies.
            const double dfd = hetero_splitting(delta_hd, theta);
            const double w = hdo_weight / 3.0;
            model.lines.push_back({+dfd, sp.line_width_khz, w, LineKind::HDOSatellite});
            model.lines.push_back({0.0, sp.line_width_khz, w, LineKind::HDOCenter});
            model.lines.push_back({-dfd, sp.line_width_khz, w, LineKind::HDOSatellite});
        }
    }
    return model;
}

SpectrumModel build_spectrum_model(const CrystalOrientation& o, const DipolarParams& dp,
                                   const SpectrumParams& sp, const PhysicalConstants& pc) {
    const DimerSet lab = orient(dimer_orientations(), o);
    const auto thetas = angles_to_field(lab, Vec3{0.0, 0.0, 1.0});
    return build_spectrum_model_from_angles(thetas, dp, sp, pc);
}

SampledCurve synthesize_spectrum(const CrystalOrientation& o, const DipolarParams& dp,
                                 const SpectrumParams& sp, const std::vector<double>& grid_khz,
                                 const PhysicalConstants& pc) {
    if (!std::is_sorted(grid_khz.begin(), grid_khz.end()))
        throw std::invalid_argument("synthesize_spectrum: grid must be monotone increasing");
    return build_spectrum_model(o, dp, sp, pc).sample(grid_khz);
}

std::vector<double> uniform_grid(double min_khz, double max_khz, double step_khz) {
    if (step_khz <= 0.0 || max_khz < min_khz)
        throw std::invalid_argument("uniform_grid: bad range or step");
    std::vector<double> g;
    const int n = static_cast<int>(std::floor((max_khz - min_khz) / step_khz + 0.5)) + 1;
    g.reserve(n);
    for (int i = 0; i < n; ++i) g.push_back(min_khz + i * step_khz);
    return g;
}

}  // namespace nanonmr
