#pragma once

#include <stdexcept>
#include <string>

#include "curvelift/word.hpp"

namespace curvelift {

struct EllipticError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CuspedCuffError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NoRealSolutionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Real 2x2 matrix of determinant 1 acting on the upper half plane. The
// determinant-1 form of the inverse is used throughout.
struct Isometry {
  double a = 1, b = 0, c = 0, d = 1;

  double trace() const { return a + d; }
  double det() const { return a * d - b * c; }
  Isometry inverse() const { return Isometry{d, -b, -c, a}; }

  friend Isometry operator*(const Isometry& x, const Isometry& y) {
    return Isometry{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                    x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
};

enum class IsometryClass { Hyperbolic, Parabolic, Elliptic };

// Classified by |tr| against 2 with tolerance 1e-9.
IsometryClass classify(const Isometry& m);

// Cuff lengths of a pair of pants; 0 means a cusp.
struct PantsMetric {
  double l1 = 0, l2 = 0, l3 = 0;
};

// Holonomy of the pants group: matrices for the generators a and b. The
// cuff traces satisfy |tr A| = 2cosh(l1/2), |tr B| = 2cosh(l2/2),
// |tr(A B^-1)| = 2cosh(l3/2).
struct HolonomyRep {
  Isometry A;
  Isometry B;
};

// Translation length 2*arccosh(|t|/2), computed in log form to survive large
// traces; 0 for parabolic within tolerance. Throws EllipticError for |t| < 2.
double trace_to_length(double t);

// The complete hyperbolic structure on the three-punctured sphere:
// A = [[1,2],[0,1]], B = [[1,0],[2,1]]; A, B and A*B^-1 are parabolic and
// tr(A*B^n) = 2 + 4n.
HolonomyRep thrice_punctured_holonomy();

// Fricke normal form for the cuff triple: A upper triangular, B lower
// triangular with the subdiagonal entry solved (positive root) so the third
// cuff trace comes out right.
HolonomyRep pants_holonomy(const PantsMetric& m);

// Image of a cyclic word under the representation (any rotation; the trace is
// conjugation invariant).
Isometry word_image(const HolonomyRep& rep, const CyclicWord& w);

// Length of the geodesic representative; throws EllipticError if the image is
// elliptic.
double geodesic_length(const HolonomyRep& rep, const CyclicWord& w);

// l_alpha + n*l_beta + 2D: length of the concatenated representative
// alpha . delta . beta^n . delta^-1 bounding the gamma_n geodesic.
double gamma_n_length_bound(double l_alpha, double l_beta, double D, long long n);

// Length of the orthogeodesic arc between the first two cuffs, by
// right-angled hexagon trigonometry. Both cuffs must be nondegenerate.
double ortho_distance(const PantsMetric& m);

// 2*log(y/s) + n/y: length of the horocyclic detour representative of b^n in
// the cusp normalization where the puncture holonomy is z -> z+1 and the lift
// of a is the circle |z| = s.
double cusp_detour_length(double y, double s, long long n);

}  // namespace curvelift
