#include "locascope/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "locascope/error.hpp"
#include "locascope/rng.hpp"

namespace locascope {
namespace {

// Householder reduction of a symmetric matrix to tridiagonal form. On return
// diag holds the diagonal and off[i] the entry coupling i-1 and i (off[0] = 0).
void tridiagonalize(std::vector<double>& a, std::size_t n, std::vector<double>& diag, std::vector<double>& off) {
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };
  diag.assign(n, 0.0);
  off.assign(n, 0.0);
  for (std::size_t i = n - 1; i > 0; --i) {
    const std::size_t l = i - 1;
    double h = 0.0;
    if (l > 0) {
      double scale = 0.0;
      for (std::size_t k = 0; k <= l; ++k) scale += std::abs(at(i, k));
      if (scale == 0.0) {
        off[i] = at(i, l);
      } else {
        for (std::size_t k = 0; k <= l; ++k) {
          at(i, k) /= scale;
          h += at(i, k) * at(i, k);
        }
        double f = at(i, l);
        double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
        off[i] = scale * g;
        h -= f * g;
        at(i, l) = f - g;
        f = 0.0;
        for (std::size_t j = 0; j <= l; ++j) {
          g = 0.0;
          for (std::size_t k = 0; k <= j; ++k) g += at(j, k) * at(i, k);
          for (std::size_t k = j + 1; k <= l; ++k) g += at(k, j) * at(i, k);
          off[j] = g / h;
          f += off[j] * at(i, j);
        }
        const double hh = f / (h + h);
        for (std::size_t j = 0; j <= l; ++j) {
          f = at(i, j);
          g = off[j] - hh * f;
          off[j] = g;
          for (std::size_t k = 0; k <= j; ++k) at(j, k) -= f * off[k] + g * at(i, k);
        }
      }
    } else {
      off[i] = at(i, l);
    }
    diag[i] = h;
  }
  off[0] = 0.0;
  for (std::size_t i = 0; i < n; ++i) diag[i] = at(i, i);
}

// Implicit-shift QL on a symmetric tridiagonal matrix; eigenvalues end up in diag.
void tridiagonal_ql(std::vector<double>& diag, std::vector<double>& off) {
  const auto n = static_cast<long>(diag.size());
  for (long i = 1; i < n; ++i) off[i - 1] = off[i];
  if (n > 0) off[n - 1] = 0.0;
  constexpr double eps = 2.220446049250313e-16;
  for (long l = 0; l < n; ++l) {
    int iterations = 0;
    long m = l;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(diag[m]) + std::abs(diag[m + 1]);
        if (std::abs(off[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (++iterations > 200) throw Error(ErrorCode::InvalidArgument, "QL iteration did not converge");
        double g = (diag[l + 1] - diag[l]) / (2.0 * off[l]);
        double r = std::hypot(g, 1.0);
        g = diag[m] - diag[l] + off[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        long i = m - 1;
        for (; i >= l; --i) {
          double f = s * off[i];
          const double b = c * off[i];
          r = std::hypot(f, g);
          off[i + 1] = r;
          if (r == 0.0) {
            diag[i + 1] -= p;
            off[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = diag[i + 1] - p;
          r = (diag[i] - g) * s + 2.0 * c * b;
          p = s * r;
          diag[i + 1] = g + p;
          g = c * r - b;
        }
        if (r == 0.0 && i >= l) continue;
        diag[l] -= p;
        off[l] = g;
        off[m] = 0.0;
      }
    } while (m != l);
  }
}

}  // namespace

double StepFunction::operator()(double x) const {
  const auto it = std::upper_bound(points.begin(), points.end(), x);
  return it == points.begin() ? 0.0 : values[static_cast<std::size_t>(it - points.begin()) - 1];
}

double StepFunction::left_limit(double x) const {
  const auto it = std::lower_bound(points.begin(), points.end(), x);
  return it == points.begin() ? 0.0 : values[static_cast<std::size_t>(it - points.begin()) - 1];
}

std::vector<double> symmetric_eigenvalues(std::vector<double> matrix, std::size_t n) {
  if (matrix.size() != n * n) throw Error(ErrorCode::InvalidArgument, "matrix size does not match n*n");
  if (n == 0) return {};
  if (n == 1) return {matrix[0]};
  std::vector<double> diag, off;
  tridiagonalize(matrix, n, diag, off);
  tridiagonal_ql(diag, off);
  std::sort(diag.begin(), diag.end());
  return diag;
}

std::vector<double> laplacian_spectrum(const Graph& h, std::span<const double> potential, const SolverLimits& limits) {
  const std::size_t n = h.num_vertices();
  if (n > limits.spectral_cap) {
    throw Error(ErrorCode::ComponentTooLarge, "laplacian_spectrum: component has " + std::to_string(n) +
                                                  " vertices, cap is " + std::to_string(limits.spectral_cap) +
                                                  "; lower delta or raise the cap");
  }
  if (!potential.empty() && potential.size() != n) {
    throw Error(ErrorCode::InvalidArgument, "potential length " + std::to_string(potential.size()) +
                                                " does not match " + std::to_string(n) + " vertices");
  }
  std::vector<double> matrix(n * n, 0.0);
  for (std::size_t v = 0; v < n; ++v) {
    matrix[v * n + v] = static_cast<double>(h.degree(static_cast<Vertex>(v))) + (potential.empty() ? 0.0 : potential[v]);
    for (Vertex w : h.neighbors(static_cast<Vertex>(v))) matrix[v * n + w] = -1.0;
  }
  double norm = 0.0;
  for (std::size_t v = 0; v < n; ++v) {
    double row = 0.0;
    for (std::size_t w = 0; w < n; ++w) row += std::abs(matrix[v * n + w]);
    norm = std::max(norm, row);
  }
  std::vector<double> eigs = symmetric_eigenvalues(std::move(matrix), n);
  // Eigenvalues closer than the solver accuracy are the same eigenvalue
  // (multiplicity), so give each such cluster a single value.
  const double tol = 1e-11 * (1.0 + norm);
  for (std::size_t i = 0; i < eigs.size();) {
    std::size_t j = i + 1;
    double sum = eigs[i];
    while (j < eigs.size() && eigs[j] - eigs[j - 1] <= tol) sum += eigs[j++];
    double value = sum / static_cast<double>(j - i);
    if (std::abs(value) <= tol) value = 0.0;
    std::fill(eigs.begin() + i, eigs.begin() + j, value);
    i = j;
  }
  return eigs;
}

StepFunction spectral_cdf(std::span<const double> eigenvalues, std::size_t n) {
  if (eigenvalues.size() != n) {
    throw Error(ErrorCode::InvalidArgument, "spectral_cdf expects exactly n eigenvalues");
  }
  std::vector<double> sorted(eigenvalues.begin(), eigenvalues.end());
  std::sort(sorted.begin(), sorted.end());
  StepFunction f;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i + 1 < sorted.size() && sorted[i + 1] == sorted[i]) continue;
    f.points.push_back(sorted[i]);
    f.values.push_back(static_cast<double>(i + 1) / static_cast<double>(n));
  }
  return f;
}

StepFunction mix(std::span<const std::pair<double, StepFunction>> parts) {
  std::vector<std::pair<double, double>> jumps;
  for (const auto& [weight, f] : parts) {
    for (std::size_t i = 0; i < f.points.size(); ++i) {
      const double jump = f.values[i] - (i == 0 ? 0.0 : f.values[i - 1]);
      jumps.emplace_back(f.points[i], weight * jump);
    }
  }
  std::sort(jumps.begin(), jumps.end());
  StepFunction out;
  double total = 0.0;
  for (std::size_t i = 0; i < jumps.size(); ++i) {
    total += jumps[i].second;
    if (i + 1 < jumps.size() && jumps[i + 1].first == jumps[i].first) continue;
    out.points.push_back(jumps[i].first);
    out.values.push_back(total);
  }
  return out;
}

double sup_distance(const StepFunction& a, const StepFunction& b) {
  double worst = 0.0;
  auto check = [&](const std::vector<double>& points) {
    for (double x : points) {
      worst = std::max(worst, std::abs(a(x) - b(x)));
      worst = std::max(worst, std::abs(a.left_limit(x) - b.left_limit(x)));
    }
  };
  check(a.points);
  check(b.points);
  return worst;
}

double sup_distance_with_slack(const StepFunction& a, const StepFunction& b, double slack) {
  double worst = 0.0;
  auto one_side = [&](const StepFunction& hi, const StepFunction& lo) {
    // sup_x hi(x - slack) - lo(x + slack); breakpoints at p + slack and q - slack.
    for (double p : hi.points) worst = std::max(worst, hi(p) - lo(p + 2 * slack));
    for (double q : lo.points) worst = std::max(worst, hi(q - 2 * slack) - lo(q));
  };
  one_side(a, b);
  one_side(b, a);
  return worst;
}

void PotentialSpec::validate() const {
  if (values.empty() || values.size() != probabilities.size()) {
    throw Error(ErrorCode::InvalidArgument, "potential needs matching, nonempty value and probability lists");
  }
  double total = 0.0;
  for (double p : probabilities) {
    if (!(p >= 0.0)) throw Error(ErrorCode::InvalidArgument, "potential probabilities must be nonnegative");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-12) throw Error(ErrorCode::InvalidArgument, "potential probabilities must sum to 1");
}

PotentialSpec PotentialSpec::parse(const std::string& text) {
  PotentialSpec spec;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw Error(ErrorCode::ParseError, "potential entry '" + item + "' lacks ':'");
    try {
      spec.values.push_back(std::stod(item.substr(0, colon)));
      spec.probabilities.push_back(std::stod(item.substr(colon + 1)));
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "potential entry '" + item + "' is not numeric");
    }
  }
  spec.validate();
  return spec;
}

std::string PotentialSpec::to_string() const {
  std::ostringstream out;
  out.precision(17);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out << ',';
    out << values[i] << ':' << probabilities[i];
  }
  return out.str();
}

std::vector<double> sample_potential(const PotentialSpec& spec, std::size_t n, std::uint64_t seed) {
  spec.validate();
  std::vector<double> cumulative(spec.probabilities.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < cumulative.size(); ++i) cumulative[i] = (acc += spec.probabilities[i]);
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = unit_interval(stream_value(seed, i)) * acc;
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    if (it == cumulative.end()) --it;
    out[i] = spec.values[static_cast<std::size_t>(it - cumulative.begin())];
  }
  return out;
}

}  // namespace locascope
