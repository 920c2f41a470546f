#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "curvelift/cover.hpp"
#include "curvelift/hyperbolic.hpp"
#include "curvelift/word.hpp"

namespace curvelift {

struct CapExceededError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Certified record behind one point of the f_rho lower bound: gamma_n has
// length at most length_certificate <= L and needs a cover of degree at least
// degree_bound = n+1 to lift simply, so f_rho(L) >= f_lower.
struct GrowthWitness {
  double L = 0;
  long long n = 0;
  CyclicWord word;
  double length_certificate = 0;
  long long degree_bound = 1;
  double f_lower = 0;
};

// The requested L is below the concrete threshold for these inputs.
struct TooSmallL {
  double min_valid_L = 0;
};

using WitnessResult = std::variant<GrowthWitness, TooSmallL>;

// Re-checks a witness from its own fields.
bool verify_witness(const GrowthWitness& w);

struct FSLowerBound {
  long long bound = 1;  // n + 1
  CyclicWord witness;   // gamma_n
};

// f_S(n) >= n+1, witnessed by gamma_n.
FSLowerBound f_s_lower(long long n);

// n = floor(L/(B+eps)); the certificate is the concatenated-representative
// bound l_alpha + n*l_beta + 2D and must come out <= L. f_lower = L/(B+eps).
WitnessResult compact_witness(double L, double B, double eps, double l_alpha,
                              double l_beta, double D);

// n = floor(exp(L/(2+eps))); certificate B - 2*log(s) + 1 + 2*log(n);
// f_lower = exp(L/(2+eps)). n is capped at 2^62 (CapExceededError beyond) and
// the witness word at 10^7 letters.
WitnessResult cusped_witness(double L, double eps, double s, double B);

// Same scaling with the exact three-punctured-sphere length 2*arccosh(1+2n)
// as the certificate.
WitnessResult cusped_witness_exact(double L, double eps);

// 2*arccosh(1+2n): exact gamma_n length on the three-punctured sphere.
double thrice_punctured_gamma_length(long long n);

// Least n0 <= 10^6 with 2*arccosh(1+2n) <= (2+eps)*log(n) for all n in
// [n0, 10^6] (the defect 2*arccosh(1+2n) - 2*log(n) decreases to 2*log(4), so
// the first qualifying n works). nullopt = not reached within 10^6.
std::optional<long long> find_threshold_n0(double eps);

enum class TableMetric { ThricePunctured, Pants };

struct GrowthRow {
  long long n = 0;
  int intersection = 0;
  long long deg_lower = 1;
  std::optional<int> deg_exhaustive;
  std::optional<double> length;  // empty = no geodesic representative
};

// Rows n = 0..n_max; deg_exhaustive is filled by exhaustive cover search for
// n <= exhaustive_cap (pass a negative cap to skip the search entirely).
std::vector<GrowthRow> growth_table(long long n_max, long long exhaustive_cap,
                                    TableMetric metric,
                                    const PantsMetric& pants = PantsMetric{},
                                    int jobs = 1,
                                    const CoverCatalog* catalog = nullptr);

}  // namespace curvelift
