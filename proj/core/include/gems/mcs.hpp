#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <vector>

#include "gems/proposal.hpp"
#include "gems/rng.hpp"
#include "gems/sample.hpp"
#include "gems/target_model.hpp"

namespace gems {

// --- Wang-Landau weight machinery -------------------------------------------

// Step size of stage k: gamma_k = (1 + gamma0)^(1/(k+1)) - 1. Strictly
// decreasing in k, -> 0. gamma0 = 0 freezes the weights (verification mode).
double gamma_at(double gamma0, std::size_t k);

// Flat-histogram criterion: min cell count >= c * mean cell count.
bool flat_check(const std::vector<std::uint64_t>& stage_occupation, double c);

// Log-domain weight table log phi^(i)(j) over (temperature, ring) cells with
// per-stage occupation counts. Exactly one cell changes per sampler step.
class WeightTable {
 public:
  WeightTable(std::size_t n_temps, std::size_t n_rings, double gamma0);

  // Start from given log weights (e.g. the exact log Z_{i,j} when verifying
  // the frozen-weight chain). Row-major [temp][ring].
  static WeightTable with_initial(std::vector<double> log_phi, std::size_t n_temps,
                                  std::size_t n_rings, double gamma0);

  std::size_t n_temps() const { return nt_; }
  std::size_t n_rings() const { return nr_; }
  std::size_t stage() const { return stage_; }
  double gamma0() const { return gamma0_; }
  double gamma() const { return gamma_at(gamma0_, stage_); }
  std::uint64_t steps_in_stage() const { return steps_in_stage_; }

  double log_phi(std::size_t t, std::size_t r) const { return log_phi_[t * nr_ + r]; }
  const std::vector<double>& log_phi_raw() const { return log_phi_; }
  const std::vector<std::uint64_t>& stage_occupation() const { return occ_; }

  // log phi[t][r] += log(1 + gamma_stage); occupation[t][r] += 1.
  void update(std::size_t t, std::size_t r);

  // Runs flat_check once at least min_stage_steps have accumulated; on
  // success advances the stage and zeroes the occupation counts.
  bool maybe_advance_stage(double c, std::uint64_t min_stage_steps);

  // Softmax of row i over rings; positive, sums to 1 within 1e-12.
  std::vector<double> normalized_row(std::size_t i) const;

 private:
  std::size_t nt_, nr_;
  double gamma0_;
  std::size_t stage_ = 0;
  std::uint64_t steps_in_stage_ = 0;
  std::vector<double> log_phi_;
  std::vector<std::uint64_t> occ_;
};

// Free-function view of WeightTable::normalized_row.
std::vector<double> normalized_weights(const WeightTable& table, std::size_t i);

// --- acceptance ratios -------------------------------------------------------

// Spatial-move acceptance: min[1, exp(log_k_y + log_phi_ix + log_q_yx
//                                     - log_k_x - log_phi_iy - log_q_xy)].
// The current ring's weight sits in the numerator. Throws if the current
// state has zero density.
double within_temp_accept(double log_k_x, double log_k_y, double log_phi_ix,
                          double log_phi_iy, double log_q_yx, double log_q_xy);

// Temperature-move acceptance: min[1, exp(log_k_j_x + log_phi_i_ix
//                                  - log_k_i_x - log_phi_j_ix) * d_ji/d_ij].
double temp_swap_accept(double log_k_j_x, double log_k_i_x, double log_phi_i_ix,
                        double log_phi_j_ix, double delta_ji, double delta_ij);

// --- temperature proposal kernel ---------------------------------------------

// Proposal kernel on {0, ..., K_t}. The default is the reflected random walk
// with Delta(0,1) = Delta(Kt, Kt-1) = 1 and 1/2 steps in the interior.
class DeltaKernel {
 public:
  static DeltaKernel reflected_walk(std::size_t n_temps);
  explicit DeltaKernel(std::vector<std::vector<double>> rows);

  std::size_t size() const { return rows_.size(); }
  double prob(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  std::size_t sample(std::size_t i, Rng& rng) const;

 private:
  std::vector<std::vector<double>> rows_;
};

// --- the joint chain ----------------------------------------------------------

struct MCSState {
  Point x;
  std::size_t temp = 0;
  std::uint64_t step_count = 0;
};

struct McsParams {
  double theta = 0.5;
  double c = 0.2;
  // 0 means "use (K_t+1)(K_e+1)*50", the guard against trivially flat tiny
  // stage samples.
  std::uint64_t min_stage_steps = 0;
  RingPolicy ring_policy = RingPolicy::clamp;
};

struct McsStepOutcome {
  bool head = false;      // temperature branch taken
  bool accepted = false;
  bool stage_advanced = false;
  std::size_t ring = 0;   // ring of the post-move state (the updated cell)
};

struct McsStats {
  std::uint64_t below_range = 0;  // energies clamped below H_0
  std::uint64_t head_steps = 0, head_accepts = 0;
  std::uint64_t tail_steps = 0, tail_accepts = 0;
};

// One recursion of the sampler: theta-coin, branch move, weight update at the
// new (temperature, ring) cell, then the flat-histogram check.
McsStepOutcome mcs_step(MCSState& state, WeightTable& table, const TargetModel& model,
                        const LadderConfig& ladder, const ProposalFamily& proposals,
                        const DeltaKernel& delta, const McsParams& params, Rng& rng,
                        McsStats* stats = nullptr);

// Sequential driver: seeds the chain, runs steps, records samples once the
// first stage advance has happened (stage-0 weights are still grossly wrong).
class McsRunner {
 public:
  McsRunner(const TargetModel& model, const LadderConfig& ladder,
            const ProposalFamily& proposals, const DeltaKernel& delta,
            const McsParams& params, std::uint64_t seed);

  using StageHook = std::function<void(const WeightTable&, std::uint64_t step)>;
  using TraceHook = std::function<void(std::uint64_t step, const MCSState&,
                                       const McsStepOutcome&, const WeightTable&)>;

  void run(std::uint64_t total_steps, SampleSet* samples = nullptr);

  const MCSState& state() const { return state_; }
  const WeightTable& table() const { return table_; }
  const McsStats& stats() const { return stats_; }
  std::uint64_t first_stage_advance_step() const { return first_advance_; }

  StageHook on_stage_advance;
  TraceHook on_step;

 private:
  const TargetModel& model_;
  const LadderConfig& ladder_;
  const ProposalFamily& proposals_;
  const DeltaKernel& delta_;
  McsParams params_;
  MCSState state_;
  WeightTable table_;
  McsStats stats_;
  Rng rng_;
  std::uint64_t first_advance_ = 0;  // 0 = not yet
};

}  // namespace gems
