#include "nanonmr/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace nanonmr {

namespace {

constexpr double kMergeTol = 1e-9;

bool equal_up_to_sign(const Vec3& a, const Vec3& b) {
    const double d = a.dot(b);
    return std::abs(std::abs(d) - 1.0) < kMergeTol;
}

double wrap_deg(double x, double period) {
    double r = std::fmod(x, period);
    if (r < 0.0) r += period;
    return r;
}

}  // namespace

int DimerSet::total_count() const {
    return std::accumulate(multiplicities.begin(), multiplicities.end(), 0);
}

std::vector<Vec3> tetrahedral_directions(Sublattice s) {
    // One bond along +c, three at the tetrahedral angle below the basal
    // plane, azimuths 0/120/240.
    const double rho = 2.0 * std::sqrt(2.0) / 3.0;
    const double h = -1.0 / 3.0;
    std::vector<Vec3> dirs = {
        {0.0, 0.0, 1.0},
        {rho, 0.0, h},
        {rho * std::cos(deg_to_rad(120.0)), rho * std::sin(deg_to_rad(120.0)), h},
        {rho * std::cos(deg_to_rad(240.0)), rho * std::sin(deg_to_rad(240.0)), h},
    };
    if (s == Sublattice::B) {
        for (auto& d : dirs) d.z = -d.z;  // basal-plane mirror
    }
    for (auto& d : dirs) d = d.normalized();
    return dirs;
}

DimerSet dimer_orientations() {
    DimerSet set;
    set.frame = Frame::Crystal;
    for (Sublattice s : {Sublattice::A, Sublattice::B}) {
        const auto bonds = tetrahedral_directions(s);
        for (size_t i = 0; i < bonds.size(); ++i) {
            for (size_t j = i + 1; j < bonds.size(); ++j) {
                const Vec3 dir = (bonds[i] - bonds[j]).normalized();
                bool merged = false;
                for (size_t k = 0; k < set.directions.size(); ++k) {
                    if (equal_up_to_sign(set.directions[k], dir)) {
                        set.multiplicities[k] += 1;
                        merged = true;
                        break;
                    }
                }
                if (!merged) {
                    set.directions.push_back(dir);
                    set.multiplicities.push_back(1);
                }
            }
        }
    }
    return set;
}

Mat3 orientation_rotation(const CrystalOrientation& o) {
    return Mat3::rotation_y(deg_to_rad(o.alpha_deg)) * Mat3::rotation_z(deg_to_rad(o.beta_deg));
}

DimerSet orient(const DimerSet& dimers, const CrystalOrientation& o) {
    if (dimers.frame == Frame::Lab)
        throw std::invalid_argument("orient: dimer set is already in the lab frame");
    const Mat3 rot = orientation_rotation(o);
    DimerSet out = dimers;
    out.frame = Frame::Lab;
    for (auto& d : out.directions) d = rot * d;
    return out;
}

std::vector<double> angles_to_field(const DimerSet& dimers, const Vec3& b0) {
    if (b0.norm() < 1e-12)
        throw std::domain_error("angles_to_field: zero-norm field direction");
    const Vec3 b = b0.normalized();
    std::vector<double> angles;
    angles.reserve(static_cast<size_t>(dimers.total_count()));
    for (size_t i = 0; i < dimers.directions.size(); ++i) {
        const double c = std::clamp(std::abs(dimers.directions[i].dot(b)), 0.0, 1.0);
        const double theta = rad_to_deg(std::acos(c));
        for (int m = 0; m < dimers.multiplicities[i]; ++m) angles.push_back(theta);
    }
    return angles;
}

Vec3 field_in_crystal_frame(const CrystalOrientation& o) {
    // R^T * z_lab with R = R_y(alpha) R_z(beta).
    return orientation_rotation(o).transpose() * Vec3{0.0, 0.0, 1.0};
}

CrystalOrientation orientation_from_field_direction(double polar_deg, double azimuth_deg) {
    // field_in_crystal_frame gives azimuth 180 - beta and polar alpha.
    return CrystalOrientation{wrap_deg(polar_deg, 180.0), wrap_deg(180.0 - azimuth_deg, 360.0)};
}

std::vector<CrystalOrientation> symmetry_equivalents(const CrystalOrientation& o) {
    const Vec3 b = field_in_crystal_frame(o);
    const double polar = rad_to_deg(std::acos(std::clamp(b.z, -1.0, 1.0)));
    const double azim = rad_to_deg(std::atan2(b.y, b.x));
    std::vector<CrystalOrientation> out;
    for (int polar_flip = 0; polar_flip < 2; ++polar_flip) {
        const double p = polar_flip ? 180.0 - polar : polar;
        for (int mirror = 0; mirror < 2; ++mirror) {
            const double a0 = mirror ? -azim : azim;
            for (int k = 0; k < 6; ++k) {
                out.push_back(orientation_from_field_direction(p, a0 + 60.0 * k));
            }
        }
    }
    return out;
}

double orientation_distance_deg(const CrystalOrientation& a, const CrystalOrientation& b) {
    const Vec3 va = field_in_crystal_frame(a);
    double best = 180.0;
    for (const auto& eq : symmetry_equivalents(b)) {
        const Vec3 vb = field_in_crystal_frame(eq);
        const double c = std::clamp(std::abs(va.dot(vb)), 0.0, 1.0);
        best = std::min(best, rad_to_deg(std::acos(c)));
    }
    return best;
}

}  // namespace nanonmr
