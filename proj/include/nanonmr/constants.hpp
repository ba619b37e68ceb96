#pragma once

namespace nanonmr {

/// Gyromagnetic ratios are in kHz/G (frequency convention, gamma/2pi).
/// `coupling_prefactor` collapses mu0/4pi * hbar and the unit conversions so
/// that the dipolar coupling parameter in kHz is
///     delta = coupling_prefactor * gamma_a * gamma_b / d^3
/// with the gammas in kHz/G and the internuclear distance d in Angstrom.
/// Numerically the prefactor equals the Planck constant scaled by 1e34.
struct PhysicalConstants {
    double gamma_h_khz_per_g = 4.2577;
    double gamma_d_khz_per_g = 0.6536;
    double gamma_e_khz_per_g = 2800.0;
    double nv_zero_field_splitting_khz = 2.87e6;
    double coupling_prefactor = 6.62607015;
};

}  // namespace nanonmr
