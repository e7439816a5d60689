#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "contextlab/distributions.hpp"
#include "contextlab/graph.hpp"

namespace contextlab {

using Complex = std::complex<double>;

inline constexpr double kUnitNormTolerance = 1e-12;
inline constexpr double kOrthogonalityTolerance = 1e-12;

namespace detail {

inline Complex inner(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

inline double norm(const std::vector<Complex>& a) { return std::sqrt(std::abs(inner(a, a))); }

}  // namespace detail

/// Unit vector in C^d.
class StateVector {
 public:
  explicit StateVector(std::vector<Complex> amplitudes) : amp_(std::move(amplitudes)) {
    if (amp_.empty()) throw std::invalid_argument("state vector needs dimension >= 1");
    if (std::abs(detail::norm(amp_) - 1.0) > kUnitNormTolerance)
      throw std::invalid_argument("state vector is not unit norm");
  }

  int dimension() const { return static_cast<int>(amp_.size()); }
  const std::vector<Complex>& amplitudes() const { return amp_; }

 private:
  std::vector<Complex> amp_;
};

/// Rank-1 projective model: one unit vector per observable, A_i = 2|v_i><v_i| - 1.
/// Compatibility of a pair means orthogonality of their vectors.
class ProjectiveModel {
 public:
  ProjectiveModel(int dimension, std::vector<std::vector<Complex>> vectors)
      : dim_(dimension), vectors_(std::move(vectors)) {
    if (dim_ <= 0) throw std::invalid_argument("model dimension must be positive");
    for (const auto& v : vectors_) {
      if (static_cast<int>(v.size()) != dim_)
        throw std::invalid_argument("model vector dimension mismatch");
      if (std::abs(detail::norm(v) - 1.0) > kUnitNormTolerance)
        throw std::invalid_argument("model vector is not unit norm");
    }
  }

  int dimension() const { return dim_; }
  int observable_count() const { return static_cast<int>(vectors_.size()); }
  const std::vector<std::vector<Complex>>& vectors() const { return vectors_; }

 private:
  int dim_;
  std::vector<std::vector<Complex>> vectors_;
};

/// p_i = |<v_i|phi>|^2.
inline MarginalVector model_marginals(const ProjectiveModel& model, const StateVector& phi) {
  if (model.dimension() != phi.dimension())
    throw std::invalid_argument("state dimension does not match model dimension");
  std::vector<double> p;
  p.reserve(model.observable_count());
  for (const auto& v : model.vectors()) p.push_back(std::norm(detail::inner(v, phi.amplitudes())));
  return MarginalVector(std::move(p));
}

/// Checks the commutation relations: every edge's |<v_i|v_j>| within tolerance.
struct ModelValidation {
  bool valid = true;
  double worst_residual = 0.0;
  std::pair<int, int> worst_edge{-1, -1};
};

inline ModelValidation validate_model(const ProjectiveModel& model, const CommutationGraph& g) {
  if (model.observable_count() != g.vertex_count())
    throw std::invalid_argument("model observable count does not match vertex count");
  ModelValidation report;
  for (auto [a, b] : g.edges()) {
    const double r = std::abs(detail::inner(model.vectors()[a], model.vectors()[b]));
    if (r > report.worst_residual) {
      report.worst_residual = r;
      report.worst_edge = {a, b};
    }
  }
  report.valid = report.worst_residual <= kOrthogonalityTolerance;
  return report;
}

/// The Lovász umbrella for an odd cycle C_n: rank-3 real vectors
///   v_j = (sin t cos(2 pi k j / n), sin t sin(2 pi k j / n), cos t),
/// k = (n-1)/2 and cos^2 t = cos(pi/n)/(1+cos(pi/n)), with the handle state
/// phi = (0,0,1). Adjacent vectors are orthogonal and the marginal sum equals
/// theta(C_n) up to rounding.
struct UmbrellaModel {
  ProjectiveModel model;
  StateVector handle;
};

inline UmbrellaModel umbrella_model(int n) {
  if (n < 5 || n % 2 == 0)
    throw std::invalid_argument("umbrella needs odd n >= 5, got " + std::to_string(n));
  const double cos_pi_n = std::cos(std::numbers::pi / n);
  const double cos_t = std::sqrt(cos_pi_n / (1.0 + cos_pi_n));
  const double sin_t = std::sqrt(1.0 - cos_pi_n / (1.0 + cos_pi_n));
  const double winding = 2.0 * std::numbers::pi * ((n - 1) / 2) / n;
  std::vector<std::vector<Complex>> vectors;
  vectors.reserve(n);
  for (int j = 0; j < n; ++j)
    vectors.push_back({sin_t * std::cos(winding * j), sin_t * std::sin(winding * j), cos_t});
  return {ProjectiveModel(3, std::move(vectors)),
          StateVector({Complex(0.0), Complex(0.0), Complex(1.0)})};
}

/// Largest rotation angle that still guarantees the rotated pentagon's
/// marginal sum beats alpha(C_5) = 2: arccos(sqrt(2 / base_sum)).
inline double kappa_upper_bound(double base_sum) {
  if (base_sum <= 2.0)
    throw std::invalid_argument("base marginal sum must exceed alpha(C_5) = 2");
  return std::acos(std::sqrt(2.0 / base_sum));
}

/// Two pentagon models over one state violating both cyclic marginal-sum
/// bounds at once. The base pentagon is the umbrella embedded in coordinates
/// 0..2 of C^6; the rotated pentagon shares A'_1 = A_1 and A'_3 = A_4 and tilts
/// the remaining three vectors by kappa, each toward its own ancilla
/// direction e_4/e_5/e_6 so the rotated pentagon keeps exact C_5 commutation
/// relations. Index maps are 0-based: rotated vector j' corresponds to
/// observable A'_{j'+1}.
struct CounterexamplePair {
  StateVector state;
  ProjectiveModel base;
  ProjectiveModel rotated;
  double kappa = 0.0;
  /// rotated index -> base index for the shared observables: {0,0} and {2,3}
  std::vector<std::pair<int, int>> identifications{{0, 0}, {2, 3}};
};

inline CounterexamplePair build_counterexample(double kappa) {
  const UmbrellaModel umbrella = umbrella_model(5);
  std::vector<double> base_marginals =
      model_marginals(umbrella.model, umbrella.handle).values();
  double base_sum = 0.0;
  for (double x : base_marginals) base_sum += x;
  const double bound = kappa_upper_bound(base_sum);
  if (!(kappa > 0.0) || !(kappa < bound))
    throw std::invalid_argument("kappa must lie strictly inside (0, " + std::to_string(bound) +
                                ")");

  auto embed = [](const std::vector<Complex>& v) {
    std::vector<Complex> w(6, Complex(0.0));
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[i];
    return w;
  };
  std::vector<std::vector<Complex>> base_vectors;
  for (const auto& v : umbrella.model.vectors()) base_vectors.push_back(embed(v));

  const double c = std::cos(kappa), s = std::sin(kappa);
  std::vector<std::vector<Complex>> rotated_vectors(5);
  rotated_vectors[0] = base_vectors[0];  // A'_1 = A_1
  rotated_vectors[2] = base_vectors[3];  // A'_3 = A_4
  // v'_{7-i} = cos k v_i + sin k e_i for i in {2,3,5}; ancillas occupy
  // coordinates 3,4,5 and are orthogonal to the handle and to every v_i.
  const std::pair<int, int> tilts[] = {{4, 1}, {3, 2}, {1, 4}};  // {rotated idx, base idx}
  int ancilla = 3;
  for (auto [rotated_index, base_index] : tilts) {
    std::vector<Complex> v(6, Complex(0.0));
    for (int t = 0; t < 6; ++t) v[t] = c * base_vectors[base_index][t];
    v[ancilla] += s;
    rotated_vectors[rotated_index] = std::move(v);
    ++ancilla;
  }

  std::vector<Complex> state(6, Complex(0.0));
  state[2] = 1.0;
  return {StateVector(std::move(state)), ProjectiveModel(6, std::move(base_vectors)),
          ProjectiveModel(6, std::move(rotated_vectors)), kappa};
}

}  // namespace contextlab
