#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cohom/catalog/catalog.hpp"

namespace cohom::homogeneous {

using catalog::CompactGroupSpec;
using catalog::NamedRep;

/// G/H together with the isotropy representation of H on the tangent
/// space at the base point.
struct HomogeneousSpace {
  std::string name;
  CompactGroupSpec group;
  CompactGroupSpec stabilizer;
  std::string embedding;
  NamedRep isotropy;
  /// Cohomogeneity of H on G/H when the catalog records it.
  std::optional<int> cohomogeneity;

  int dim() const { return group.dimension() - stabilizer.dimension(); }
};

enum class CrossKind { Sphere, RealProj, ComplexProj, QuatProj, CayleyPlane };

const char* to_string(CrossKind k);

struct CrossSpace {
  CrossKind kind = CrossKind::Sphere;
  int n = 0;
  HomogeneousSpace presentation;
  /// Element of the identity component of H acting as -1 on the tangent
  /// space, if there is one.
  std::optional<catalog::CentralElement> symmetry;

  /// "S^4", "CP^2", "CaP^2", ...
  std::string label() const;
};

/// Rank equality of stabilizer and group (positive Euler characteristic).
bool euler_positive(const HomogeneousSpace& x);

/// Cohomogeneity of H acting on G/H: the recorded value, 0 when H = G, the
/// codimension of generic orbits when H is a torus; nullopt otherwise.
std::optional<int> cohomogeneity_on_self(const HomogeneousSpace& x);

/// Standard presentation of one compact rank-one symmetric space.
/// n is the real dimension for spheres and real projective spaces and the
/// projective dimension otherwise (cayley_plane ignores n). Throws on an
/// out-of-range n.
CrossSpace make_cross(CrossKind kind, int n);

/// Spheres and RP^n for 2 <= n <= 16, CP^n and HP^n for 1 <= n <= 4, and
/// the Cayley plane.
std::vector<CrossSpace> cross_catalog();

/// G/H with a central torus T^r added to both groups; the torus acts
/// trivially on the tangent space.
HomogeneousSpace times_torus(const HomogeneousSpace& x, int r);

/// The full flag manifold SU(3)/T^2 with its isotropy representation.
HomogeneousSpace flag_su3();

/// Torus point at which every weight of `c` pairs to 1/2 mod 1, searched
/// over half-integral coroot coordinates and over 1/(2q) steps on torus
/// coordinates (q the largest charge). nullopt when no such element of
/// the identity component exists.
std::optional<std::vector<Rational>> minus_identity_element(const lie::Character& c);

/// exp(2 pi i <w, e>) as an exponent mod 1, for e from minus_identity_element.
Rational pairing(const lie::Weight& w, const std::vector<Rational>& e);

}  // namespace cohom::homogeneous
