#include "gems/target_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace gems {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

bool Box::bounded() const {
  for (std::size_t d = 0; d < lo.size(); ++d)
    if (!std::isfinite(lo[d]) || !std::isfinite(hi[d])) return false;
  return !lo.empty();
}

TargetModel TargetModel::continuous(std::size_t dimension, EnergyFn h, Box support) {
  if (support.lo.size() != dimension || support.hi.size() != dimension)
    throw std::invalid_argument("target-model: support box dimension mismatch");
  for (std::size_t d = 0; d < dimension; ++d)
    if (!(support.lo[d] < support.hi[d]))
      throw std::invalid_argument("target-model: support box has empty extent");
  TargetModel m;
  m.dimension_ = dimension;
  m.energy_ = std::move(h);
  m.support_ = std::move(support);
  return m;
}

TargetModel TargetModel::finite(std::vector<double> state_energies) {
  if (state_energies.empty())
    throw std::invalid_argument("target-model: finite support needs at least one state");
  for (double e : state_energies)
    if (std::isnan(e) || e == -kInf)
      throw std::invalid_argument("target-model: finite state energy must be finite or +inf");
  TargetModel m;
  m.dimension_ = 1;
  m.state_energies_ = std::move(state_energies);
  m.support_.lo = {0.0};
  m.support_.hi = {static_cast<double>(m.state_energies_.size() - 1)};
  return m;
}

double TargetModel::energy(const Point& x) const {
  if (x.size() != dimension_)
    throw std::invalid_argument("target-model: point dimension mismatch");
  if (is_finite_support()) {
    long long s = std::llround(x[0]);
    if (s < 0 || static_cast<std::size_t>(s) >= state_energies_.size())
      throw std::invalid_argument("target-model: finite state index out of range");
    return state_energies_[static_cast<std::size_t>(s)];
  }
  double e = energy_(x);
  if (std::isnan(e) || e == -kInf)
    throw std::runtime_error("target-model: energy evaluated to a non-finite value other than +inf");
  return e;
}

std::optional<double> TargetModel::moment(const std::string& name) const {
  auto it = moments_.find(name);
  if (it == moments_.end()) return std::nullopt;
  return it->second;
}

const RegionFn* TargetModel::region(const std::string& name) const {
  auto it = regions_.find(name);
  return it == regions_.end() ? nullptr : &it->second;
}

LadderConfig LadderConfig::create(std::vector<double> levels, std::vector<double> temps) {
  std::ostringstream bad;
  if (levels.empty()) bad << "energy_levels empty; ";
  for (std::size_t j = 0; j + 1 < levels.size(); ++j)
    if (!(levels[j] < levels[j + 1])) { bad << "energy_levels not strictly increasing; "; break; }
  for (double v : levels)
    if (!std::isfinite(v)) { bad << "energy_levels must be finite; "; break; }
  if (temps.empty()) bad << "temperatures empty; ";
  if (!temps.empty() && temps[0] != 1.0) bad << "T_0 must equal 1 exactly; ";
  for (std::size_t i = 0; i + 1 < temps.size(); ++i)
    if (!(temps[i] < temps[i + 1])) { bad << "temperatures not strictly increasing; "; break; }
  for (double t : temps)
    if (!(t > 0.0) || !std::isfinite(t)) { bad << "temperatures must be positive and finite; "; break; }
  if (!bad.str().empty())
    throw std::invalid_argument("target-model: invalid ladder: " + bad.str());
  LadderConfig l;
  l.energy_levels = std::move(levels);
  l.temperatures = std::move(temps);
  return l;
}

std::size_t ring_index(const LadderConfig& ladder, double e, RingPolicy policy) {
  if (std::isnan(e))
    throw std::invalid_argument("target-model: ring_index of NaN energy");
  const auto& H = ladder.energy_levels;
  if (e < H.front()) {
    if (policy == RingPolicy::strict)
      throw std::domain_error("target-model: energy below H_0 in strict ring mode");
    return 0;
  }
  // Largest j with H_j <= e; the top ring is [H_Ke, +inf).
  auto it = std::upper_bound(H.begin(), H.end(), e);
  return static_cast<std::size_t>(it - H.begin()) - 1;
}

double log_tempered_density(const TargetModel& model, const LadderConfig& ladder,
                            std::size_t i, const Point& x) {
  if (i >= ladder.n_temps())
    throw std::invalid_argument("target-model: temperature index out of range");
  double h = model.energy(x);
  if (h == kInf) return -kInf;
  return -h / ladder.temperatures[i];
}

namespace {

// Exact ring masses for a finite support, in log domain.
std::vector<double> finite_ring_masses(const TargetModel& model,
                                       const LadderConfig& ladder, std::size_t i) {
  const double T = ladder.temperatures[i];
  std::vector<double> logk;
  std::vector<std::size_t> ring;
  for (double h : model.state_energies()) {
    if (h == kInf) continue;  // zero-mass state
    logk.push_back(-h / T);
    ring.push_back(ring_index(ladder, h, RingPolicy::strict));
  }
  if (logk.empty())
    throw std::runtime_error("target-model: finite model has no support mass");
  double mx = *std::max_element(logk.begin(), logk.end());
  std::vector<double> mass(ladder.n_rings(), 0.0);
  double total = 0.0;
  for (std::size_t s = 0; s < logk.size(); ++s) {
    double w = std::exp(logk[s] - mx);
    mass[ring[s]] += w;
    total += w;
  }
  for (double& m : mass) m /= total;
  return mass;
}

// Locate points in (a, b) where g crosses zero, assuming g is continuous.
// Scan on a fine grid, then bisect each sign change.
void find_crossings(const std::function<double(double)>& g, double a, double b,
                    std::size_t scan_cells, std::vector<double>& out) {
  double prev_x = a, prev_v = g(a);
  for (std::size_t k = 1; k <= scan_cells; ++k) {
    double x = a + (b - a) * static_cast<double>(k) / static_cast<double>(scan_cells);
    double v = g(x);
    if ((prev_v < 0.0 && v >= 0.0) || (prev_v >= 0.0 && v < 0.0)) {
      double lo = prev_x, hi = x;
      for (int it = 0; it < 80; ++it) {
        double mid = 0.5 * (lo + hi);
        double vm = g(mid);
        if ((vm >= 0.0) == (v >= 0.0)) hi = mid; else lo = mid;
      }
      out.push_back(0.5 * (lo + hi));
    }
    prev_x = x;
    prev_v = v;
  }
}

// Composite Simpson of f on [a, b] with n panels (n made even).
double simpson(const std::function<double(double)>& f, double a, double b, std::size_t n) {
  if (n < 2) n = 2;
  if (n % 2) ++n;
  double h = (b - a) / static_cast<double>(n);
  double s = f(a) + f(b);
  for (std::size_t k = 1; k < n; ++k)
    s += f(a + h * static_cast<double>(k)) * (k % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

// 1-d masses: split the box at every level crossing so each piece lies in one
// ring, then integrate exp(-(h - shift)/T) piecewise with Simpson.
std::vector<double> masses_1d(const TargetModel& model, const LadderConfig& ladder,
                              std::size_t i, std::size_t grid_points) {
  const double T = ladder.temperatures[i];
  const double a = model.support().lo[0], b = model.support().hi[0];
  auto h = [&](double x) { return model.energy(Point{x}); };

  std::vector<double> cuts{a, b};
  std::size_t scan = std::max<std::size_t>(grid_points, 1024);
  for (std::size_t j = 0; j < ladder.n_rings(); ++j) {
    double H = ladder.energy_levels[j];
    find_crossings([&](double x) { return h(x) - H; }, a, b, scan, cuts);
  }
  std::sort(cuts.begin(), cuts.end());

  // Shift for numeric range: integrate exp(-(h - hmin)/T).
  double hmin = kInf;
  for (std::size_t k = 0; k <= scan; ++k) {
    double x = a + (b - a) * static_cast<double>(k) / static_cast<double>(scan);
    hmin = std::min(hmin, h(x));
  }
  auto weight = [&](double x) {
    double e = h(x);
    return e == kInf ? 0.0 : std::exp(-(e - hmin) / T);
  };

  std::vector<double> mass(ladder.n_rings(), 0.0);
  double total = 0.0;
  for (std::size_t p = 0; p + 1 < cuts.size(); ++p) {
    double lo = cuts[p], hi = cuts[p + 1];
    if (!(hi > lo)) continue;
    double mid = 0.5 * (lo + hi);
    double hm = h(mid);
    if (hm == kInf) continue;
    std::size_t ring = ring_index(ladder, hm, RingPolicy::clamp);
    std::size_t panels = std::max<std::size_t>(
        16, static_cast<std::size_t>(static_cast<double>(grid_points) * (hi - lo) / (b - a)));
    double piece = simpson(weight, lo, hi, panels);
    mass[ring] += piece;
    total += piece;
  }
  if (!(total > 0.0))
    throw std::runtime_error("target-model: quadrature found no mass on the support");
  for (double& m : mass) m /= total;
  return mass;
}

// 2-d masses: midpoint rule on a tensor grid.
std::vector<double> masses_2d(const TargetModel& model, const LadderConfig& ladder,
                              std::size_t i, std::size_t grid_points) {
  const double T = ladder.temperatures[i];
  const auto& box = model.support();
  const std::size_t n = std::max<std::size_t>(grid_points, 16);
  const double dx = (box.hi[0] - box.lo[0]) / static_cast<double>(n);
  const double dy = (box.hi[1] - box.lo[1]) / static_cast<double>(n);

  double hmin = kInf;
  Point x(2);
  for (std::size_t a = 0; a < n; ++a) {
    x[0] = box.lo[0] + dx * (static_cast<double>(a) + 0.5);
    for (std::size_t b = 0; b < n; ++b) {
      x[1] = box.lo[1] + dy * (static_cast<double>(b) + 0.5);
      hmin = std::min(hmin, model.energy(x));
    }
  }
  std::vector<double> mass(ladder.n_rings(), 0.0);
  double total = 0.0;
  for (std::size_t a = 0; a < n; ++a) {
    x[0] = box.lo[0] + dx * (static_cast<double>(a) + 0.5);
    for (std::size_t b = 0; b < n; ++b) {
      x[1] = box.lo[1] + dy * (static_cast<double>(b) + 0.5);
      double h = model.energy(x);
      if (h == kInf) continue;
      double w = std::exp(-(h - hmin) / T);
      mass[ring_index(ladder, h, RingPolicy::clamp)] += w;
      total += w;
    }
  }
  if (!(total > 0.0))
    throw std::runtime_error("target-model: quadrature found no mass on the support");
  for (double& m : mass) m /= total;
  return mass;
}

}  // namespace

std::vector<double> true_ring_masses(const TargetModel& model,
                                     const LadderConfig& ladder, std::size_t i,
                                     std::size_t grid_points) {
  if (i >= ladder.n_temps())
    throw std::invalid_argument("target-model: temperature index out of range");
  if (model.is_finite_support()) return finite_ring_masses(model, ladder, i);
  if (!model.support().bounded())
    throw std::invalid_argument("target-model: quadrature needs a bounded truncation box");
  if (model.dimension() == 1) return masses_1d(model, ladder, i, grid_points);
  if (model.dimension() == 2) return masses_2d(model, ladder, i, grid_points);
  throw std::invalid_argument("target-model: quadrature oracle supports dimension <= 2 only");
}

TargetModel make_double_well(double lo, double hi) {
  Box box{{lo}, {hi}};
  auto h = [box](const Point& x) {
    if (!box.contains(x)) return kInf;
    double u = x[0] * x[0] - 1.0;
    return u * u;
  };
  TargetModel m = TargetModel::continuous(1, h, box);
  m.set_moment("mean_x1", 0.0);  // symmetric target
  return m;
}

TargetModel make_gaussian_mixture(std::vector<Point> means, double sigma, Box support) {
  if (means.empty())
    throw std::invalid_argument("target-model: mixture needs at least one component");
  const std::size_t dim = means[0].size();
  for (const auto& mu : means)
    if (mu.size() != dim)
      throw std::invalid_argument("target-model: mixture means have mixed dimensions");
  if (!(sigma > 0.0))
    throw std::invalid_argument("target-model: mixture sigma must be positive");

  const double inv2s2 = 1.0 / (2.0 * sigma * sigma);
  const double log_norm =
      -std::log(static_cast<double>(means.size())) -
      static_cast<double>(dim) * std::log(sigma * std::sqrt(6.283185307179586476925286766559));
  auto h = [means, inv2s2, log_norm, support](const Point& x) {
    if (!support.contains(x)) return kInf;
    double best = -kInf;
    std::vector<double> logs;
    logs.reserve(means.size());
    for (const auto& mu : means) {
      double q = 0.0;
      for (std::size_t d = 0; d < mu.size(); ++d) {
        double t = x[d] - mu[d];
        q += t * t;
      }
      double l = -q * inv2s2;
      logs.push_back(l);
      best = std::max(best, l);
    }
    double acc = 0.0;
    for (double l : logs) acc += std::exp(l - best);
    // h = -log density
    return -(log_norm + best + std::log(acc));
  };

  TargetModel m = TargetModel::continuous(dim, h, support);

  // Exact moments of the untruncated mixture; the shipped configs keep all
  // components several sigma inside the box, so truncation is negligible.
  double m1 = 0.0, m2 = 0.0, m1sq = 0.0, m2sq = 0.0;
  for (const auto& mu : means) {
    m1 += mu[0];
    m1sq += mu[0] * mu[0];
    if (dim > 1) {
      m2 += mu[1];
      m2sq += mu[1] * mu[1];
    }
  }
  const double n = static_cast<double>(means.size());
  m.set_moment("mean_x1", m1 / n);
  m.set_moment("mean_x1_sq", sigma * sigma + m1sq / n);
  if (dim > 1) {
    m.set_moment("mean_x2", m2 / n);
    m.set_moment("mean_x2_sq", sigma * sigma + m2sq / n);
  }

  const double r2 = (sigma / 2.0) * (sigma / 2.0);
  auto region_means = std::move(means);
  m.set_region("in_discs", [region_means, r2](const Point& x) {
    for (const auto& mu : region_means) {
      double q = 0.0;
      for (std::size_t d = 0; d < mu.size(); ++d) {
        double t = x[d] - mu[d];
        q += t * t;
      }
      if (q <= r2) return 1.0;
    }
    return 0.0;
  });
  return m;
}

}  // namespace gems
