#pragma once

#include <vector>

#include "gems/rng.hpp"
#include "gems/target_model.hpp"

namespace gems {

// Per-temperature proposal kernels Q_i with evaluable densities q_i(x, y).
//
// Two families cover the supported models:
//  - gaussian_walk: spherical random walk, scale s_i = s0 * sqrt(T_i) so
//    hotter levels make larger moves.
//  - finite: row-stochastic proposal matrix over finite-support state
//    indices, shared by all temperature levels.
class ProposalFamily {
 public:
  static ProposalFamily gaussian_walk(double s0, const LadderConfig& ladder);
  static ProposalFamily finite(std::vector<std::vector<double>> rows);

  // Uniform proposal over S states (each entry 1/S), the finite default.
  static ProposalFamily finite_uniform(std::size_t n_states);

  // Draws y ~ Q_i(x, .) into y. Consumes 2*dim engine calls (gaussian) or 1
  // (finite).
  void sample(std::size_t i, const Point& x, Point& y, Rng& rng) const;

  // log q_i(x, y); -inf where the proposal cannot move x -> y.
  double log_density(std::size_t i, const Point& x, const Point& y) const;

  bool is_finite() const { return !rows_.empty(); }
  double scale(std::size_t i) const;
  std::size_t n_levels() const { return scales_.size(); }

 private:
  ProposalFamily() = default;
  // gaussian walk
  std::vector<double> scales_;  // one per temperature level
  // finite matrix
  std::vector<std::vector<double>> rows_;
};

}  // namespace gems
