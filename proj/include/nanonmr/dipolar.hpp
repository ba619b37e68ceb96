#pragma once

#include <vector>

#include "nanonmr/constants.hpp"
#include "nanonmr/geometry.hpp"

namespace nanonmr {

/// Intramolecular H-H coupling: bond length and the coupling parameter it
/// implies. The two fields are kept consistent; use `from_distance`.
struct DipolarParams {
    double d_angstrom = 1.58;
    double delta_khz = 0.0;

    static DipolarParams from_distance(double d_angstrom, const PhysicalConstants& pc = {});
};

/// Lineshape and filter-envelope parameters of the model spectrum.
struct SpectrumParams {
    double hdo_fraction = 0.0;        ///< p, fraction of HDO molecules, [0,1)
    double line_width_khz = 4.0;      ///< Gaussian peak broadening Delta
    double envelope_sigma_khz = 30.58; ///< filter envelope width sigma
    double envelope_shift_khz = 0.0;  ///< filter envelope center f_shift
};

enum class LineKind { H2O, HDOSatellite, HDOCenter };

struct SpectralLine {
    double center_khz = 0.0;
    double width_khz = 1.0;   ///< Gaussian scale Delta: exp(-(f-c)^2/Delta^2)
    double amplitude = 0.0;
    LineKind kind = LineKind::H2O;
};

struct SampledCurve {
    std::vector<double> frequency_khz;
    std::vector<double> intensity;
};

/// Gaussian line list plus filter envelope; sample() evaluates the curve.
struct SpectrumModel {
    std::vector<SpectralLine> lines;
    double envelope_shift_khz = 0.0;
    double envelope_sigma_khz = 0.0;
    bool apply_envelope = true;
    bool normalize = true;

    double evaluate_raw(double f_khz) const;  ///< before normalization
    SampledCurve sample(const std::vector<double>& grid_khz) const;
};

/// Dipolar coupling parameter delta in kHz for two nuclei with gyromagnetic
/// ratios in kHz/G at distance d in Angstrom.
double coupling_parameter(double d_angstrom, double gamma_a_khz_per_g,
                          double gamma_b_khz_per_g,
                          const PhysicalConstants& pc = {});

/// Homonuclear doublet offset from the Larmor line, (3/4)*delta*(1-3cos^2).
/// Negative values mirror below the Larmor frequency; line pairs sit at +/-
/// the magnitude.
double splitting(double delta_khz, double theta_deg);

/// Proton line shift per deuterium m_z under the secular heteronuclear
/// coupling; the spin-1 neighbor splits the line into an equal-weight
/// triplet at {-Df, 0, +Df}. The prefactor kappa = 1 is fixed by the exact
/// two-spin oracle (see the oracle suite).
double hetero_splitting(double delta_hd_khz, double theta_deg);

inline constexpr double kHeteroPrefactor = 1.0;

/// Line list of the model spectrum for the 12-dimer set at orientation `o`:
/// one H2O doublet per dimer plus, for p > 0, an HDO triplet per dimer
/// weighted 2p/(1-p) with equal 1/3 components.
SpectrumModel build_spectrum_model(const CrystalOrientation& o, const DipolarParams& dp,
                                   const SpectrumParams& sp, const PhysicalConstants& pc = {});

/// Model built from explicit dimer-field angles instead of an orientation
/// (used for single-dimer synthetic spectra).
SpectrumModel build_spectrum_model_from_angles(const std::vector<double>& theta_deg,
                                               const DipolarParams& dp, const SpectrumParams& sp,
                                               const PhysicalConstants& pc = {});

/// Sampled model spectrum, normalized to unit maximum.
SampledCurve synthesize_spectrum(const CrystalOrientation& o, const DipolarParams& dp,
                                 const SpectrumParams& sp, const std::vector<double>& grid_khz,
                                 const PhysicalConstants& pc = {});

std::vector<double> uniform_grid(double min_khz, double max_khz, double step_khz);

}  // namespace nanonmr
