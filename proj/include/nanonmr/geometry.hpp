#pragma once

#include <vector>

#include "nanonmr/vec3.hpp"

namespace nanonmr {

enum class Sublattice { A, B };
enum class Frame { Crystal, Lab };

/// Orientation of the hexagonal crystal relative to the lab frame.
///
/// Convention: the lab z axis points along the static field B0. The crystal
/// is first spun by beta about its own c axis, then the c axis is tilted by
/// alpha away from B0 (rotation about lab y), i.e. a crystal-frame vector v
/// appears in the lab as R_y(alpha) * R_z(beta) * v. With B0 on the lab z
/// axis these are the only two angles that affect the dimer angle set.
struct CrystalOrientation {
    double alpha_deg = 0.0;  ///< tilt of the c axis from B0, [0,180)
    double beta_deg = 0.0;   ///< spin of the crystal about its c axis, [0,360)
};

/// Set of H-H bond directions, unique up to sign. Antipodal (and exactly
/// coincident) directions are merged, with the repeat count kept in
/// `multiplicities`; the ice I_h enumeration yields 9 unique directions with
/// total multiplicity 12.
struct DimerSet {
    std::vector<Vec3> directions;
    std::vector<int> multiplicities;
    Frame frame = Frame::Crystal;

    int total_count() const;
};

/// The four O-H bond directions of one molecule site, unit vectors with
/// pairwise dot product -1/3. Sublattice A has a bond along +c; sublattice B
/// is the reflection of A through the basal plane (bond along -c).
std::vector<Vec3> tetrahedral_directions(Sublattice s);

/// All C(4,2)=6 normalized bond-pair differences per sublattice, both
/// sublattices. Total multiplicity is 12; the three basal-plane directions
/// are shared between sublattices and carry multiplicity 2.
DimerSet dimer_orientations();

Mat3 orientation_rotation(const CrystalOrientation& o);

/// Rotate a crystal-frame dimer set into the lab frame. Rejects sets that
/// are already in the lab frame.
DimerSet orient(const DimerSet& dimers, const CrystalOrientation& o);

/// Angles between each dimer direction and b0, folded to [0,90] degrees
/// (the splitting depends only on cos^2). One entry per enumerated dimer,
/// i.e. multiplicity-expanded to 12 values for the ice I_h set.
std::vector<double> angles_to_field(const DimerSet& dimers, const Vec3& b0);

/// Direction of B0 (lab z) expressed in the crystal frame.
Vec3 field_in_crystal_frame(const CrystalOrientation& o);

/// Orientation whose field-in-crystal direction has the given polar angle
/// (from the c axis) and azimuth (from the crystal x axis), in degrees.
CrystalOrientation orientation_from_field_direction(double polar_deg, double azimuth_deg);

/// All orientations equivalent to `o` under the point symmetry of the dimer
/// set: 60-degree rotations about c, the azimuthal mirrors, and the basal
/// mirror. Angles are wrapped to alpha in [0,180), beta in [0,360).
std::vector<CrystalOrientation> symmetry_equivalents(const CrystalOrientation& o);

/// Symmetry-reduced distance between two orientations: the smallest angle
/// (degrees) between their field-in-crystal directions over the equivalence
/// orbit, treating +/-b0 as identical.
double orientation_distance_deg(const CrystalOrientation& a, const CrystalOrientation& b);

}  // namespace nanonmr
