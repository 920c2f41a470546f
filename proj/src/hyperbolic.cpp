#include "curvelift/hyperbolic.hpp"

#include <cmath>

namespace curvelift {

namespace {
constexpr double kTraceTol = 1e-9;
}

IsometryClass classify(const Isometry& m) {
  const double t = std::fabs(m.trace());
  if (t > 2 + kTraceTol) return IsometryClass::Hyperbolic;
  if (t < 2 - kTraceTol) return IsometryClass::Elliptic;
  return IsometryClass::Parabolic;
}

double trace_to_length(double t) {
  const double x = std::fabs(t);
  if (x < 2 - kTraceTol) {
    throw EllipticError("|trace| < 2: elliptic element has no translation length");
  }
  if (x <= 2 + kTraceTol) return 0.0;
  if (x > 1e150) return 2 * std::log(x);  // sqrt(x*x) would overflow
  return 2 * std::log((x + std::sqrt(x * x - 4)) / 2);
}

HolonomyRep thrice_punctured_holonomy() {
  return HolonomyRep{Isometry{1, 2, 0, 1}, Isometry{1, 0, 2, 1}};
}

HolonomyRep pants_holonomy(const PantsMetric& m) {
  if (m.l1 < 0 || m.l2 < 0 || m.l3 < 0) {
    throw std::invalid_argument("cuff lengths must be >= 0");
  }
  const double lam = std::exp(m.l1 / 2);
  const double mu = std::exp(m.l2 / 2);
  const double alpha = m.l1 == 0 ? 2.0 : 1.0;  // parabolic normal form uses 2
  Isometry A{lam, alpha, 0, 1 / lam};
  const double c = (lam / mu + mu / lam + 2 * std::cosh(m.l3 / 2)) / alpha;
  if (!(c > 0)) throw NoRealSolutionError("no positive root for the cuff triple");
  Isometry B{mu, 0, c, 1 / mu};
  return HolonomyRep{A, B};
}

Isometry word_image(const HolonomyRep& rep, const CyclicWord& w) {
  Isometry m;  // identity
  for (const Letter& l : w.letters()) {
    const Isometry& gen = l.gen == 0 ? rep.A : rep.B;
    m = m * (l.inverse ? gen.inverse() : gen);
  }
  return m;
}

double geodesic_length(const HolonomyRep& rep, const CyclicWord& w) {
  if (w.rank() != 2) throw RankMismatchError("holonomy is defined for rank-2 words");
  return trace_to_length(word_image(rep, w).trace());
}

double gamma_n_length_bound(double l_alpha, double l_beta, double D, long long n) {
  if (l_alpha < 0 || l_beta < 0 || D < 0 || n < 0) {
    throw std::invalid_argument("gamma_n_length_bound needs nonnegative inputs");
  }
  return l_alpha + double(n) * l_beta + 2 * D;
}

double ortho_distance(const PantsMetric& m) {
  if (m.l1 <= 0 || m.l2 <= 0) {
    throw CuspedCuffError("orthogeodesic needs both cuffs nondegenerate");
  }
  const double num = std::cosh(m.l3 / 2) + std::cosh(m.l1 / 2) * std::cosh(m.l2 / 2);
  const double den = std::sinh(m.l1 / 2) * std::sinh(m.l2 / 2);
  return std::acosh(num / den);
}

double cusp_detour_length(double y, double s, long long n) {
  if (!(s > 0) || y < s || n < 0) {
    throw std::invalid_argument("cusp_detour_length needs y >= s > 0, n >= 0");
  }
  return 2 * std::log(y / s) + double(n) / y;
}

}  // namespace curvelift
