#ifndef DHSEARCH_MODEL_HPP
#define DHSEARCH_MODEL_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dhsearch/numeric.hpp"

namespace dhsearch {

// Problem parameters: list size N, oracle-step duration t, query count K.
// The target index w is labeling only; all dynamics lives in the
// two-dimensional subspace spanned by the target |w> and the uniform
// superposition |xi> of the other N-1 items, so w never enters computation.
struct ModelParams {
  long long n_items = 2;   // N >= 2
  double step_time = 0.0;  // t >= 0, dimensionless units
  int queries = 1;         // K >= 1
  long long target = 1;    // w in [1, N]

  // Throws InvalidParameterError if any bound is violated.
  void validate() const;

  static ModelParams from_t(long long n, double t, int k, long long w = 1);
  // All derived quantities depend on t only through x*t, so the dimensionless
  // product can be given directly: t = xt * sqrt(N).
  static ModelParams from_xt(long long n, double xt, int k, long long w = 1);
};

// Spectral quantities of the single oracle step (basis convention:
// component 0 = |w>, component 1 = |xi>, initial state |s> = (x, sqrt(1-x^2))):
//   x = 1/sqrt(N)
//   f = cos(xt) - i x sin(xt) = |f| e^{i phi}
//   b = -i sqrt((N-1)/N) sin(xt)      (purely imaginary)
//   sin(theta) = |b|, cos(theta) = |f|
struct DerivedQuantities {
  double x = 0.0;
  double xt = 0.0;
  Complex f{1.0, 0.0};
  Complex b{0.0, 0.0};
  double abs_f = 1.0;
  double abs_b = 0.0;
  double phi = 0.0;
  double theta = 0.0;
  double tan2_theta = 0.0;
  double sqrt_1mx2 = 0.0;  // sqrt((N-1)/N), the |xi> weight of |s>
};

DerivedQuantities derive_quantities(const ModelParams& params);

// A history is a length-K bit string: bit k is the answer recorded after the
// k-th query, alpha_1 earliest. Packed with alpha_1 as the least significant
// bit, which is also the enumeration order used everywhere (K <= 64).
class History {
 public:
  History(int k, std::uint64_t packed_bits);
  static History from_bits(std::span<const int> bits);

  int size() const { return k_; }
  int bit(int k) const { return static_cast<int>((bits_ >> (k - 1)) & 1u); }  // k in [1, K]
  int last_bit() const { return bit(k_); }
  std::uint64_t packed() const { return bits_; }
  std::string to_string() const;  // "0110...", alpha_1 first

 private:
  int k_;
  std::uint64_t bits_;
};

struct Streak {
  int bit;
  int length;
};

// Run-length structure of a history in time order; n is the streak count.
struct StreakDecomposition {
  int n = 0;
  std::vector<Streak> streaks;  // first entry = earliest streak
  int last_bit = 0;
};

StreakDecomposition decompose_streaks(const History& h);
History reconstruct_history(const StreakDecomposition& d);

// Streak count alone, without building the run-length vector.
int streak_count(const History& h);

// Number of length-K histories with n streaks and the given final bit:
// C(K-1, n-1) (compositions of K into n ordered parts; the bit pattern is
// then fixed by the final bit). Exact; throws InvalidParameterError when n is
// out of [1, K] and ResourceLimitError when the value cannot fit in 64 bits
// (use log_count_histories instead).
std::uint64_t count_histories(int k, int n, int last_bit);

// Natural log of the same count, valid for any K.
double log_count_histories(long long k, long long n, int last_bit);

}  // namespace dhsearch

#endif  // DHSEARCH_MODEL_HPP
