#include "longcycle/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "longcycle/error.hpp"

namespace longcycle {

namespace {

// y = (A + shift I) x
void multiply(const Graph& g, const std::vector<double>& x, double shift, std::vector<double>& y) {
  for (Vertex i = 0; i < g.order(); ++i) {
    double sum = shift * x[i];
    for (Vertex j : g.neighbors(i)) sum += x[j];
    y[i] = sum;
  }
}

double dot(const std::vector<double>& x, const std::vector<double>& y) {
  double s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

double residual_of(const Graph& g, const std::vector<double>& x, double mu) {
  std::vector<double> ax(x.size());
  multiply(g, x, 0.0, ax);
  double worst = 0;
  for (std::size_t i = 0; i < x.size(); ++i) worst = std::max(worst, std::abs(ax[i] - mu * x[i]));
  return worst;
}

void normalize_l1(std::vector<double>& x) {
  double s = 0;
  for (double v : x) s += std::abs(v);
  for (double& v : x) v /= s;
}

// Connected input only.
SpectralResult power_iterate(const Graph& g, const PowerIterationOptions& options) {
  const int n = g.order();
  SpectralResult out;
  if (n == 1) {
    out.perron = {1.0};
    return out;
  }
  std::vector<double> x(n, 1.0 / n);
  std::vector<double> y(n);
  double previous = 0;
  int stable = 0;
  for (int it = 1; it <= options.max_iterations; ++it) {
    multiply(g, x, 1.0, y);
    const double rho = dot(x, y) / dot(x, x);
    stable = std::abs(rho - previous) <= options.rayleigh_tolerance ? stable + 1 : 0;
    previous = rho;
    x.swap(y);
    normalize_l1(x);
    if (stable >= options.stable_iterations) {
      std::vector<double> ax(n);
      multiply(g, x, 0.0, ax);
      const double mu = dot(x, ax) / dot(x, x);
      const double res = residual_of(g, x, mu);
      if (res <= options.residual_tolerance) {
        out.mu = mu;
        out.perron = std::move(x);
        out.iterations = it;
        out.residual = res;
        return out;
      }
    }
  }
  std::ostringstream msg;
  msg << "power iteration did not converge within " << options.max_iterations
      << " iterations (order " << n << ", " << g.edge_count() << " edges)";
  throw ConvergenceError(msg.str());
}

}  // namespace

SpectralResult spectral_radius(const Graph& g, const PowerIterationOptions& options) {
  const auto parts = components(g);
  if (parts.size() == 1) return power_iterate(g, options);

  SpectralResult best;
  VertexSet best_part;
  bool have = false;
  for (VertexSet part : parts) {
    SpectralResult r = power_iterate(induced(g, part), options);
    if (!have || r.mu > best.mu) {
      best = std::move(r);
      best_part = part;
      have = true;
    }
  }
  SpectralResult out;
  out.mu = best.mu;
  out.iterations = best.iterations;
  out.perron.assign(g.order(), 0.0);
  int i = 0;
  for (Vertex v : best_part) out.perron[v] = best.perron[i++];
  out.residual = residual_of(g, out.perron, out.mu);
  return out;
}

double mu_snk_closed_form(int n, int k) {
  if (k < 1 || k >= n) throw DomainError("closed form needs 1 <= k < n");
  const double km1 = k - 1;
  return km1 / 2.0 + std::sqrt(double(k) * (n - k) + km1 * km1 / 4.0);
}

std::optional<double> larger_quadratic_root(double p, double q) {
  const double disc = p * p + 4 * q;
  if (disc < 0) return std::nullopt;
  return (p + std::sqrt(disc)) / 2.0;
}

namespace {

// Sum over w in N(u) of d(w) = d(u) + 2e(N(u)) + e(N(u), Y_u).
struct NeighbourhoodCounts {
  std::int64_t degree;
  std::int64_t inside;  // e(N(u))
  std::int64_t across;  // e(N(u), Y_u)
};

NeighbourhoodCounts counts_at(const Graph& g, Vertex u) {
  if (u < 0 || u >= g.order()) throw DomainError("vertex out of range");
  const VertexSet nu = g.neighbors(u);
  const VertexSet yu = g.vertices() - g.closed_neighbors(u);
  return {nu.size(), induced_edge_count(g, nu), cross_edges(g, nu, yu)};
}

}  // namespace

std::int64_t column_sum_combinatorial(const Graph& g, Vertex u, int k) {
  const auto c = counts_at(g, u);
  const std::int64_t n = g.order();
  return c.across + 2 * c.inside - (k - 2) * c.degree - std::int64_t{k} * (n - k);
}

double column_sum_combinatorial_g(const Graph& g, Vertex v, int k) {
  const auto c = counts_at(g, v);
  const std::int64_t n = g.order();
  // Twice the value is an integer; halve once at the end.
  const std::int64_t twice =
      2 * (2 * c.inside + c.across - (k - 1) * c.degree) - (2 * std::int64_t{k} - 1) * (n - k);
  return static_cast<double>(twice) / 2.0;
}

const char* to_string(CertificateVerdict v) {
  switch (v) {
    case CertificateVerdict::BoundHolds: return "BoundHolds";
    case CertificateVerdict::EqualityCandidate: return "EqualityCandidate";
    case CertificateVerdict::Inapplicable: return "Inapplicable";
  }
  return "?";
}

Certificate quotient_certificate(const Graph& g, double a, double b, double c, double mu_ref) {
  if (!is_connected(g)) {
    throw DomainError("column-sum certificate needs a connected graph");
  }
  if (c == 0.0 && !(a > 0 && b > 0)) {
    throw DomainError("column-sum certificate with c = 0 needs a > 0 and b > 0");
  }
  Certificate cert;
  cert.a = a;
  cert.b = b;
  cert.c = c;
  cert.mu_ref = mu_ref;
  cert.exact = c == 0.0 && std::trunc(a) == a && std::trunc(b) == b;

  const int n = g.order();
  cert.column_sums.resize(n);
  for (Vertex j = 0; j < n; ++j) {
    std::int64_t walk2 = 0;  // column j of A^2
    for (Vertex w : g.neighbors(j)) walk2 += g.degree(w);
    const std::int64_t dj = g.degree(j);
    if (cert.exact) {
      const auto ai = static_cast<std::int64_t>(a);
      const auto bi = static_cast<std::int64_t>(b);
      cert.column_sums[j] = static_cast<double>(walk2 - ai * dj - bi);
    } else {
      cert.column_sums[j] = double(walk2) - a * double(dj) - b - c * (double(dj) - mu_ref);
    }
  }

  const double tol = cert.exact ? 0.0 : kCertificateTolerance;
  const bool all_nonpositive =
      std::all_of(cert.column_sums.begin(), cert.column_sums.end(), [&](double s) { return s <= tol; });
  const bool all_zero = std::all_of(cert.column_sums.begin(), cert.column_sums.end(),
                                    [&](double s) { return std::abs(s) <= tol; });
  if (!all_nonpositive) {
    cert.verdict = CertificateVerdict::Inapplicable;
  } else if (all_zero) {
    cert.verdict = CertificateVerdict::EqualityCandidate;
  } else {
    cert.verdict = CertificateVerdict::BoundHolds;
  }
  // x^2 - ax - b - c(x - mu_ref) = x^2 - (a + c)x - (b - c mu_ref)
  cert.mu_bound = larger_quadratic_root(a + c, b - c * mu_ref);
  return cert;
}

const char* to_string(Comparison c) {
  switch (c) {
    case Comparison::Strict: return "Strict";
    case Comparison::Indeterminate: return "Indeterminate";
    case Comparison::NotStrict: return "NotStrict";
  }
  return "?";
}

JoinComparison lemma8_compare(const std::optional<Graph>& h, int t, int t1, int t2) {
  if (t1 < 3 || t2 < 3 || t != t1 + t2) {
    throw DomainError("join comparison needs t = t1 + t2 with t1, t2 >= 3");
  }
  const int h_order = h ? h->order() : 0;
  if (h_order + t + 1 > kMaxOrder) throw DomainError("join comparison exceeds 64 vertices");

  const Graph merged_part = construct_snk_plus(t, 1);
  const Graph split_part = disjoint_union(construct_snk_plus(t1, 1), construct_snk_plus(t2, 1));
  const Graph apex = complete_graph(1);
  const Graph merged = join(h ? disjoint_union(*h, merged_part) : merged_part, apex);
  const Graph split = join(h ? disjoint_union(*h, split_part) : split_part, apex);

  JoinComparison out;
  out.mu_merged = spectral_radius(merged).mu;
  out.mu_split = spectral_radius(split).mu;
  const double diff = out.mu_merged - out.mu_split;
  if (diff > kStrictGap) {
    out.outcome = Comparison::Strict;
  } else if (diff < -kStrictGap) {
    out.outcome = Comparison::NotStrict;
  } else {
    out.outcome = Comparison::Indeterminate;
  }
  return out;
}

}  // namespace longcycle
