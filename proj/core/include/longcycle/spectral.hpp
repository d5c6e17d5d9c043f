#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "longcycle/graph.hpp"

namespace longcycle {

/// Largest adjacency eigenvalue with its Perron vector (l1-normalised,
/// nonnegative, supported on one maximising component).
struct SpectralResult {
  double mu = 0.0;
  std::vector<double> perron;
  int iterations = 0;
  /// max_i |(A x)_i - mu x_i| for the returned x
  double residual = 0.0;
};

struct PowerIterationOptions {
  /// Rayleigh-quotient change counted as "stable".
  double rayleigh_tolerance = 1e-13;
  /// Consecutive stable iterations required.
  int stable_iterations = 3;
  /// Residual the returned vector must also meet.
  double residual_tolerance = 1e-11;
  int max_iterations = 200000;
};

/// Power iteration on A + I, run per connected component. Throws
/// ConvergenceError if the cap is reached.
SpectralResult spectral_radius(const Graph& g, const PowerIterationOptions& options = {});

/// Larger root of x^2 - (k-1)x - k(n-k), which is the spectral radius of S_{n,k}.
double mu_snk_closed_form(int n, int k);

/// Larger real root of x^2 - p x - q; nullopt when the roots are complex.
std::optional<double> larger_quadratic_root(double p, double q);

/// Column u of A^2 - (k-1)A - k(n-k)I summed, from neighbourhood counts:
/// e(N(u), Y_u) + 2e(N(u)) - (k-2)d(u) - k(n-k).
std::int64_t column_sum_combinatorial(const Graph& g, Vertex u, int k);

/// Column v of A^2 - kA - (k-1/2)(n-k)I summed:
/// 2e(N(v)) + e(N(v), Y_v) - (k-1)d(v) - (k-1/2)(n-k). Always half-integral.
double column_sum_combinatorial_g(const Graph& g, Vertex v, int k);

enum class CertificateVerdict { BoundHolds, EqualityCandidate, Inapplicable };

const char* to_string(CertificateVerdict v);

/// Column-sum certificate for B = A^2 - aA - bI - c(A - mu_ref I).
///
/// If every column sum of B is nonpositive then mu(G) <= mu_bound, the larger
/// root of x^2 - ax - b - c(x - mu_ref); if all are zero, mu(G) = mu_bound.
struct Certificate {
  double a = 0, b = 0, c = 0, mu_ref = 0;
  /// True when sums were computed in integer arithmetic (c = 0, a and b integral).
  bool exact = false;
  /// Integer-valued whenever `exact`.
  std::vector<double> column_sums;
  std::optional<double> mu_bound;
  CertificateVerdict verdict = CertificateVerdict::Inapplicable;
};

inline constexpr double kCertificateTolerance = 1e-9;

/// Throws DomainError on a disconnected graph (the bound needs an irreducible
/// matrix) and, when c = 0, unless a > 0 and b > 0.
Certificate quotient_certificate(const Graph& g, double a, double b, double c = 0.0,
                                 double mu_ref = 0.0);

enum class Comparison { Strict, Indeterminate, NotStrict };

const char* to_string(Comparison c);

struct JoinComparison {
  double mu_merged = 0;
  double mu_split = 0;
  Comparison outcome = Comparison::Indeterminate;
  bool strict() const { return outcome == Comparison::Strict; }
};

inline constexpr double kStrictGap = 1e-9;

/// Compares (H + S+_{t,1}) v K_1 against (H + S+_{t1,1} + S+_{t2,1}) v K_1.
/// H may be absent. Needs t = t1 + t2, t1, t2 >= 3 and total order <= 64.
JoinComparison lemma8_compare(const std::optional<Graph>& h, int t, int t1, int t2);

}  // namespace longcycle
