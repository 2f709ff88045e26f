#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gems {

using Point = std::vector<double>;
using EnergyFn = std::function<double(const Point&)>;
using RegionFn = std::function<double(const Point&)>;  // indicator, returns 0 or 1

// Axis-aligned box; the reference measure is uniform on it.
struct Box {
  std::vector<double> lo, hi;

  std::size_t dimension() const { return lo.size(); }
  bool contains(const Point& x) const {
    for (std::size_t d = 0; d < lo.size(); ++d)
      if (x[d] < lo[d] || x[d] > hi[d]) return false;
    return true;
  }
  bool bounded() const;
};

// Target distribution pi(x) ~ exp(-h(x)) with respect to the uniform measure
// on its support. Support is either a bounded box (continuous models) or a
// finite set of states addressed by 1-d index points {0}, {1}, ..., {S-1}.
//
// energy() returns +inf to signal "outside support"; any other non-finite
// value is an evaluation error.
class TargetModel {
 public:
  static TargetModel continuous(std::size_t dimension, EnergyFn h, Box support);
  static TargetModel finite(std::vector<double> state_energies);

  std::size_t dimension() const { return dimension_; }
  double energy(const Point& x) const;

  bool is_finite_support() const { return !state_energies_.empty(); }
  std::size_t n_states() const { return state_energies_.size(); }
  const std::vector<double>& state_energies() const { return state_energies_; }
  const Box& support() const { return support_; }

  // Optional exact moments for test targets (set by model factories).
  void set_moment(const std::string& name, double value) { moments_[name] = value; }
  std::optional<double> moment(const std::string& name) const;

  // Optional named indicator functionals (e.g. a union-of-discs region).
  void set_region(const std::string& name, RegionFn fn) { regions_[name] = std::move(fn); }
  const RegionFn* region(const std::string& name) const;

 private:
  TargetModel() = default;
  std::size_t dimension_ = 0;
  EnergyFn energy_;
  Box support_;
  std::vector<double> state_energies_;
  std::map<std::string, double> moments_;
  std::map<std::string, RegionFn> regions_;
};

// Energy levels H_0 < ... < H_Ke (implicit H_{Ke+1} = +inf) and temperatures
// 1 = T_0 < ... < T_Kt. Immutable after construction; safe to share.
struct LadderConfig {
  std::vector<double> energy_levels;
  std::vector<double> temperatures;

  // Throws std::invalid_argument listing every violated constraint.
  static LadderConfig create(std::vector<double> levels, std::vector<double> temps);

  std::size_t n_rings() const { return energy_levels.size(); }
  std::size_t n_temps() const { return temperatures.size(); }
  double h0() const { return energy_levels.front(); }
  double temperature(std::size_t i) const { return temperatures.at(i); }
};

enum class RingPolicy {
  clamp,   // energies below H_0 map to ring 0 (callers may count these)
  strict,  // energies below H_0 throw; for finite test models
};

// Ring index I(x) = j with h in [H_j, H_{j+1}); energies at or above H_Ke map
// to the top ring. NaN energies throw.
std::size_t ring_index(const LadderConfig& ladder, double e,
                       RingPolicy policy = RingPolicy::clamp);

// log k^(i)(x) = -h(x)/T_i. Never exponentiates; returns -inf outside support.
double log_tempered_density(const TargetModel& model, const LadderConfig& ladder,
                            std::size_t i, const Point& x);

// Quadrature/exact-sum oracle for the ring masses of pi^(i). Test oracle
// only; the samplers never call it. grid_points is the per-dimension
// resolution for continuous supports (finite supports are summed exactly).
std::vector<double> true_ring_masses(const TargetModel& model,
                                     const LadderConfig& ladder, std::size_t i,
                                     std::size_t grid_points);

// --- model factories -------------------------------------------------------

// h(x) = (x^2 - 1)^2 on [lo, hi].
TargetModel make_double_well(double lo = -3.0, double hi = 3.0);

// Equal-weight Gaussian mixture with common isotropic sigma, h = -log density.
// Sets exact moments mean_x1/mean_x2/mean_x1_sq/mean_x2_sq (ignoring the
// negligible box truncation) and the "in_discs" region (radius sigma/2).
TargetModel make_gaussian_mixture(std::vector<Point> means, double sigma, Box support);

}  // namespace gems
