#include "curvelift/growth.hpp"

#include <cmath>
#include <limits>

#include "curvelift/intersection.hpp"
#include "curvelift/ribbon.hpp"

namespace curvelift {

namespace {

constexpr long long kWordCap = 10'000'000;
constexpr long long kScanCap = 1'000'000;

long long checked_gamma_index(double n_real) {
  if (n_real > 4.6e18) throw CapExceededError("n exceeds the 2^62 cap");
  return (long long)(std::floor(n_real));
}

CyclicWord materialize_gamma(long long n) {
  if (n > kWordCap) {
    throw CapExceededError("witness word too large to materialize");
  }
  return gamma_n(n);
}

// Minimal L for which floor-indexed witnesses validate, by scanning the
// intervals where n(L) is constant. interval_start(n) <= L < interval_start(n+1)
// on each scan step; cert(n) must fit below the interval's end.
template <typename StartFn, typename CertFn>
std::optional<double> min_valid_L_scan(StartFn interval_start, CertFn cert,
                                       long long n_begin, long long n_cap) {
  for (long long n = n_begin; n <= n_cap; ++n) {
    const double lo = interval_start(n);
    const double hi = interval_start(n + 1);
    const double candidate = std::max(lo, cert(n));
    if (candidate < hi) return candidate;
  }
  return std::nullopt;
}

}  // namespace

bool verify_witness(const GrowthWitness& w) {
  if (!(w.length_certificate <= w.L)) return false;
  if (!(w.f_lower <= double(w.degree_bound))) return false;
  if (w.degree_bound != w.n + 1) return false;
  if (w.n <= kWordCap && w.word != gamma_n(w.n)) return false;
  return true;
}

FSLowerBound f_s_lower(long long n) {
  if (n < 0) throw std::invalid_argument("f_s_lower needs n >= 0");
  return FSLowerBound{n + 1, materialize_gamma(n)};
}

WitnessResult compact_witness(double L, double B, double eps, double l_alpha,
                              double l_beta, double D) {
  if (!(B > 0) || !(eps > 0) || l_alpha < 0 || l_beta < 0 || D < 0) {
    throw std::invalid_argument("compact_witness needs B, eps > 0 and nonnegative lengths");
  }
  if (l_alpha > B || l_beta > B) {
    throw std::invalid_argument("cuff lengths must be at most the Bers constant");
  }
  const double q = L / (B + eps);
  const long long n = q < 0 ? -1 : checked_gamma_index(q);
  if (n >= 0) {
    const double cert = gamma_n_length_bound(l_alpha, l_beta, D, n);
    if (cert <= L) {
      return GrowthWitness{L, n, materialize_gamma(n), cert, n + 1, q};
    }
  }
  auto min_L = min_valid_L_scan(
      [&](long long k) { return double(k) * (B + eps); },
      [&](long long k) { return gamma_n_length_bound(l_alpha, l_beta, D, k); }, 0,
      kScanCap);
  return TooSmallL{min_L.value_or(std::nan(""))};
}

static WitnessResult cusped_witness_impl(double L, double eps, double s, double B,
                                         bool exact) {
  if (!(eps > 0) || !(s > 0) || B < 0) {
    throw std::invalid_argument("cusped_witness needs eps, s > 0 and B >= 0");
  }
  const double expo = L / (2 + eps);
  if (expo > 62 * std::log(2.0)) throw CapExceededError("n exceeds the 2^62 cap");
  const long long n = (long long)(std::floor(std::exp(expo)));
  auto cert_of = [&](long long k) {
    if (exact) return thrice_punctured_gamma_length(k);
    return k < 1 ? std::numeric_limits<double>::infinity()
                 : B - 2 * std::log(s) + 1 + 2 * std::log(double(k));
  };
  if (n >= 1) {
    const double cert = cert_of(n);
    if (cert <= L) {
      return GrowthWitness{L, n, materialize_gamma(n), cert, n + 1, std::exp(expo)};
    }
  }
  auto min_L = min_valid_L_scan(
      [&](long long k) { return (2 + eps) * std::log(double(k)); }, cert_of, 1,
      kScanCap);
  if (!min_L && !exact) {
    // the interval start catches up with the certificate at log n = (B - 2 log s + 1)/eps
    min_L = (2 + eps) * std::max(0.0, (B - 2 * std::log(s) + 1) / eps);
  }
  return TooSmallL{min_L.value_or(std::nan(""))};
}

WitnessResult cusped_witness(double L, double eps, double s, double B) {
  return cusped_witness_impl(L, eps, s, B, false);
}

WitnessResult cusped_witness_exact(double L, double eps) {
  return cusped_witness_impl(L, eps, 1.0, 0.0, true);
}

double thrice_punctured_gamma_length(long long n) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  if (n == 0) return 0.0;  // gamma_0 = a is parabolic
  return 2 * std::acosh(1 + 2 * double(n));
}

std::optional<long long> find_threshold_n0(double eps) {
  if (!(eps > 0)) throw std::invalid_argument("eps must be positive");
  for (long long n = 1; n <= kScanCap; ++n) {
    if (thrice_punctured_gamma_length(n) <= (2 + eps) * std::log(double(n))) {
      return n;
    }
  }
  return std::nullopt;
}

std::vector<GrowthRow> growth_table(long long n_max, long long exhaustive_cap,
                                    TableMetric metric, const PantsMetric& pants,
                                    int jobs, const CoverCatalog* catalog) {
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
  if (n_max > kWordCap) throw CapExceededError("n_max too large");
  const RibbonGraph base = pants_base();
  const HolonomyRep rep = metric == TableMetric::ThricePunctured
                              ? thrice_punctured_holonomy()
                              : pants_holonomy(pants);
  std::vector<GrowthRow> rows;
  rows.reserve(std::size_t(n_max) + 1);
  Isometry image = rep.A;  // image of gamma_n, advanced by one B per row
  for (long long n = 0; n <= n_max; ++n) {
    GrowthRow row;
    row.n = n;
    const CyclicWord g = gamma_n(n);
    row.intersection = self_intersection(g, base);
    row.deg_lower = n + 1;
    if (n <= exhaustive_cap) {
      auto witness = min_simple_lift_degree(g, int(n) + 1, jobs, catalog);
      if (witness) row.deg_exhaustive = witness->degree;
    }
    if (classify(image) == IsometryClass::Parabolic) {
      row.length = std::nullopt;
    } else {
      row.length = trace_to_length(image.trace());
    }
    rows.push_back(std::move(row));
    image = image * rep.B;
  }
  return rows;
}

}  // namespace curvelift
