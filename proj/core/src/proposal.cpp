#include "gems/proposal.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace gems {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kLogSqrt2Pi = 0.91893853320467274178032973640562;
}

ProposalFamily ProposalFamily::gaussian_walk(double s0, const LadderConfig& ladder) {
  if (!(s0 > 0.0))
    throw std::invalid_argument("proposal: walk scale must be positive");
  ProposalFamily p;
  p.scales_.reserve(ladder.n_temps());
  for (double T : ladder.temperatures) p.scales_.push_back(s0 * std::sqrt(T));
  return p;
}

ProposalFamily ProposalFamily::finite(std::vector<std::vector<double>> rows) {
  if (rows.empty())
    throw std::invalid_argument("proposal: empty finite proposal matrix");
  for (const auto& r : rows) {
    if (r.size() != rows.size())
      throw std::invalid_argument("proposal: finite proposal matrix must be square");
    double s = 0.0;
    for (double v : r) {
      if (v < 0.0) throw std::invalid_argument("proposal: negative proposal probability");
      s += v;
    }
    if (std::abs(s - 1.0) > 1e-12)
      throw std::invalid_argument("proposal: finite proposal rows must sum to 1");
  }
  ProposalFamily p;
  p.rows_ = std::move(rows);
  return p;
}

ProposalFamily ProposalFamily::finite_uniform(std::size_t n_states) {
  std::vector<std::vector<double>> rows(
      n_states, std::vector<double>(n_states, 1.0 / static_cast<double>(n_states)));
  return finite(std::move(rows));
}

void ProposalFamily::sample(std::size_t i, const Point& x, Point& y, Rng& rng) const {
  if (is_finite()) {
    auto s = static_cast<std::size_t>(std::llround(x[0]));
    if (s >= rows_.size())
      throw std::invalid_argument("proposal: state index out of range");
    const auto& row = rows_[s];
    double u = rng.uniform();
    double acc = 0.0;
    std::size_t pick = row.size() - 1;
    for (std::size_t k = 0; k < row.size(); ++k) {
      acc += row[k];
      if (u < acc) { pick = k; break; }
    }
    y.assign(1, static_cast<double>(pick));
    return;
  }
  double s = scales_.at(i);
  y.resize(x.size());
  for (std::size_t d = 0; d < x.size(); ++d) y[d] = x[d] + s * rng.normal();
}

double ProposalFamily::log_density(std::size_t i, const Point& x, const Point& y) const {
  if (is_finite()) {
    auto a = static_cast<std::size_t>(std::llround(x[0]));
    auto b = static_cast<std::size_t>(std::llround(y[0]));
    if (a >= rows_.size() || b >= rows_.size())
      throw std::invalid_argument("proposal: state index out of range");
    double q = rows_[a][b];
    return q > 0.0 ? std::log(q) : -kInf;
  }
  double s = scales_.at(i);
  double acc = 0.0;
  for (std::size_t d = 0; d < x.size(); ++d) {
    double t = (y[d] - x[d]) / s;
    acc -= 0.5 * t * t;
  }
  return acc - static_cast<double>(x.size()) * (std::log(s) + kLogSqrt2Pi);
}

double ProposalFamily::scale(std::size_t i) const {
  if (is_finite())
    throw std::logic_error("proposal: finite family has no walk scale");
  return scales_.at(i);
}

}  // namespace gems
