#include "noisedim/tradeoff.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>

#include "noisedim/parallel.hpp"
#include "noisedim/text.hpp"

namespace noisedim {

namespace {

constexpr double kLn2 = std::numbers::ln2;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Slack below which a CCP iterate counts as feasible.
constexpr double kSlackTolerance = 1e-9;

long double extended_sum(std::span<const double> values) {
  long double total = 0;
  for (double v : values) total += v;
  return total;
}

// q = floor + (1 - n*floor) * v for a distribution v: on the floored simplex
// by construction.
std::vector<double> floor_onto_simplex(std::span<const double> v, double floor) {
  const double scale = 1.0 - static_cast<double>(v.size()) * floor;
  std::vector<double> q(v.size());
  for (std::size_t x = 0; x < v.size(); ++x) q[x] = floor + scale * v[x];
  return q;
}

double plogp_bits(double x) { return x > 0 ? -x * std::log2(x) : 0.0; }

}  // namespace

// ---------------------------------------------------------------------------
// DiscreteDistribution
// ---------------------------------------------------------------------------

DiscreteDistribution::DiscreteDistribution(std::vector<double> masses) : masses_(std::move(masses)) {
  if (masses_.empty()) throw std::domain_error("distribution: empty alphabet");
  for (double m : masses_)
    if (!(m >= 0.0 && m <= 1.0)) throw std::domain_error("distribution: mass outside [0, 1]");
  const long double total = extended_sum(masses_);
  if (std::fabs(total - 1.0L) > 1e-12L)
    throw std::domain_error("distribution: masses sum to " + format_real(static_cast<double>(total)));
}

DiscreteDistribution DiscreteDistribution::normalized(std::vector<double> weights) {
  if (weights.empty()) throw std::domain_error("distribution: empty alphabet");
  for (double w : weights)
    if (!(w >= 0.0) || !std::isfinite(w)) throw std::domain_error("distribution: negative or non-finite weight");
  const long double total = extended_sum(weights);
  if (!(total > 0)) throw std::domain_error("distribution: weights sum to zero");
  for (double& w : weights) w = static_cast<double>(w / total);
  return DiscreteDistribution(std::move(weights));
}

DiscreteDistribution DiscreteDistribution::uniform(std::size_t size) {
  if (size == 0) throw std::domain_error("distribution: empty alphabet");
  return DiscreteDistribution(std::vector<double>(size, 1.0 / static_cast<double>(size)));
}

DiscreteDistribution DiscreteDistribution::point_mass(std::size_t size, std::size_t symbol) {
  if (symbol >= size) throw std::domain_error("distribution: symbol outside alphabet");
  std::vector<double> masses(size, 0.0);
  masses[symbol] = 1.0;
  return DiscreteDistribution(std::move(masses));
}

std::size_t DiscreteDistribution::argmax() const noexcept {
  // max_element returns the first of equal maxima.
  return static_cast<std::size_t>(std::max_element(masses_.begin(), masses_.end()) - masses_.begin());
}

std::string to_string(DivergenceKind kind) { return kind == DivergenceKind::kl ? "kl" : "js"; }

DivergenceKind parse_divergence(const std::string& text) {
  const std::string lower = to_lower(text);
  if (lower == "kl") return DivergenceKind::kl;
  if (lower == "js") return DivergenceKind::js;
  throw std::invalid_argument("unknown divergence '" + text + "' (expected kl or js)");
}

double entropy(const DiscreteDistribution& p) {
  double h = 0;
  for (double m : p.masses()) h += plogp_bits(m);
  return std::max(0.0, h);
}

namespace {

double kl_bits(std::span<const double> p, std::span<const double> q) {
  double d = 0;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (p[x] == 0) continue;
    if (q[x] == 0) return kInf;
    d += p[x] * std::log2(p[x] / q[x]);
  }
  return std::max(0.0, d);
}

double js_bits(std::span<const double> p, std::span<const double> q) {
  double d = 0;
  for (std::size_t x = 0; x < p.size(); ++x) {
    const double m = p[x] + q[x];
    if (p[x] > 0) d += p[x] * std::log2(2 * p[x] / m);
    if (q[x] > 0) d += q[x] * std::log2(2 * q[x] / m);
  }
  return std::clamp(d / 2, 0.0, 1.0);
}

double divergence_of(std::span<const double> p, std::span<const double> q, DivergenceKind kind) {
  return kind == DivergenceKind::kl ? kl_bits(p, q) : js_bits(p, q);
}

}  // namespace

double divergence(const DiscreteDistribution& p, const DiscreteDistribution& q, DivergenceKind kind) {
  if (p.size() != q.size()) throw std::invalid_argument("divergence: alphabet sizes differ");
  return divergence_of(p.masses(), q.masses(), kind);
}

void SolverConfig::validate(std::size_t alphabet_size) const {
  if (!(floor > 0) || !(floor * static_cast<double>(alphabet_size) < 1))
    throw std::invalid_argument("solver: floor must be positive with floor * alphabet_size < 1");
  if (!(initial_penalty > 0)) throw std::invalid_argument("solver: initial penalty must be positive");
  if (!(penalty_growth > 1)) throw std::invalid_argument("solver: penalty growth must exceed 1");
  if (!(penalty_cap >= initial_penalty)) throw std::invalid_argument("solver: penalty cap below initial penalty");
  if (max_iterations < 1) throw std::invalid_argument("solver: max iterations must be positive");
  if (!(subproblem_tolerance > 0) || !(stop_tolerance > 0))
    throw std::invalid_argument("solver: tolerances must be positive");
}

// ---------------------------------------------------------------------------
// Convex subproblem
// ---------------------------------------------------------------------------

namespace {

// Stationarity solved for q_x as a function of theta = nu + lambda * a_x.
// KL: -p/(q ln2) + theta = 0.  JS: (1/2) log2(2q/(p+q)) + theta = 0.
// Both are decreasing in theta on (theta_min, inf).
struct Response {
  DivergenceKind kind;

  double theta_min() const { return kind == DivergenceKind::kl ? 0.0 : -0.5; }

  double operator()(double p, double theta) const {
    if (kind == DivergenceKind::kl) return p / (kLn2 * theta);
    const double r = std::exp2(-2 * theta);
    return p * r / (2 - r);
  }

  double gradient(double p, double q) const {
    if (kind == DivergenceKind::kl) return -p / (q * kLn2);
    return 0.5 * std::log2(2 * q / (p + q));
  }
};

class KktSystem {
 public:
  KktSystem(std::span<const double> p, const LinearConstraint& constraint, double floor,
            DivergenceKind kind)
      : p_(p), a_(constraint.weights), bound_(constraint.bound), floor_(floor), response_{kind} {
    double a_min = kInf;
    for (std::size_t x = 0; x < p_.size(); ++x)
      if (p_[x] > 0) a_min = std::min(a_min, a_[x]);
    a_min_ = a_min;
    // Shifted weights keep theta = t + lambda * shifted well conditioned
    // when lambda * a is large.
    shifted_.resize(a_.size());
    for (std::size_t x = 0; x < a_.size(); ++x) shifted_[x] = a_[x] - a_min_;
  }

  // q at shifted normaliser t for a given lambda (no renormalisation).
  void fill(double t, double lambda, std::vector<double>& q) const {
    q.resize(p_.size());
    for (std::size_t x = 0; x < p_.size(); ++x)
      q[x] = p_[x] > 0 ? std::max(floor_, response_(p_[x], t + lambda * shifted_[x])) : floor_;
  }

  double excess(double t, double lambda) const {
    long double total = 0;
    for (std::size_t x = 0; x < p_.size(); ++x)
      total += p_[x] > 0 ? std::max(floor_, response_(p_[x], t + lambda * shifted_[x])) : floor_;
    return static_cast<double>(total - 1.0L);
  }

  struct Normalised {
    std::vector<double> q;
    double t = 0;
  };

  // Solves sum q = 1 for t, then moves the last rounding residue onto the
  // largest coordinate so the total is 1 to working precision.
  Normalised normalise(double lambda) const {
    const double t_min = response_.theta_min();
    double up = 1;
    while (excess(t_min + up, lambda) > 0) up *= 2;
    double down = 1;
    while (excess(t_min + down, lambda) < 0) down /= 2;

    double lo = t_min + down;
    double hi = t_min + up;
    double t = lo;
    const double f_lo = excess(lo, lambda);
    const double f_hi = excess(hi, lambda);
    if (f_lo == 0) {
      t = lo;
    } else if (f_hi == 0) {
      t = hi;
    } else {
      boost::uintmax_t max_iter = 300;
      const auto bracket = boost::math::tools::toms748_solve(
          [&](double s) { return excess(s, lambda); }, lo, hi, f_lo, f_hi,
          boost::math::tools::eps_tolerance<double>(std::numeric_limits<double>::digits - 1), max_iter);
      t = (bracket.first + bracket.second) / 2;
    }

    Normalised out;
    out.t = t;
    fill(t, lambda, out.q);
    const long double residue = 1.0L - extended_sum(out.q);
    const auto largest = std::max_element(out.q.begin(), out.q.end());
    *largest = static_cast<double>(*largest + residue);
    return out;
  }

  double constraint_value(std::span<const double> q) const {
    long double total = 0;
    for (std::size_t x = 0; x < q.size(); ++x) total += static_cast<long double>(a_[x]) * q[x];
    return static_cast<double>(total - bound_);
  }

  // Relative stationarity error over coordinates strictly above the floor.
  double stationarity(std::span<const double> q, double t, double lambda) const {
    double worst = 0;
    for (std::size_t x = 0; x < q.size(); ++x) {
      if (p_[x] == 0 || q[x] <= floor_) continue;
      const double theta = t + lambda * shifted_[x];
      const double g = response_.gradient(p_[x], q[x]);
      worst = std::max(worst, std::fabs(g + theta) / std::max(1.0, std::fabs(theta)));
    }
    return worst;
  }

 private:
  std::span<const double> p_;
  std::span<const double> a_;
  double bound_;
  double floor_;
  Response response_;
  double a_min_ = 0;
  std::vector<double> shifted_;
};

}  // namespace

SubproblemSolution convex_subproblem(const DiscreteDistribution& p, const LinearConstraint& constraint,
                                     double penalty, double floor, double tolerance, DivergenceKind kind) {
  if (constraint.weights.size() != p.size())
    throw std::invalid_argument("convex_subproblem: constraint weights do not match the alphabet");
  if (!(penalty > 0)) throw std::invalid_argument("convex_subproblem: penalty must be positive");
  if (!(floor > 0) || !(floor * static_cast<double>(p.size()) < 1))
    throw std::invalid_argument("convex_subproblem: floor must be positive with floor * size < 1");
  for (double a : constraint.weights)
    if (!std::isfinite(a)) throw std::invalid_argument("convex_subproblem: non-finite constraint weight");

  const KktSystem system(p.masses(), constraint, floor, kind);

  SubproblemSolution out;
  auto finish = [&](KktSystem::Normalised&& n, double lambda, double slack) {
    out.q = std::move(n.q);
    out.multiplier = lambda;
    out.slack = slack;
    const double g = system.constraint_value(out.q);
    const double normalisation = std::fabs(static_cast<double>(extended_sum(out.q) - 1.0L));
    const double primal = std::max(0.0, g - slack);
    const double complementary = lambda > 0 ? lambda * std::fabs(g - slack) / (1 + lambda) : 0.0;
    out.kkt_residual = std::max({normalisation, primal, complementary, system.stationarity(out.q, n.t, lambda)});
    out.within_tolerance = out.kkt_residual <= tolerance;
    return out;
  };

  auto unconstrained = system.normalise(0.0);
  if (system.constraint_value(unconstrained.q) <= 0) return finish(std::move(unconstrained), 0.0, 0.0);

  auto saturated = system.normalise(penalty);
  const double g_sat = system.constraint_value(saturated.q);
  if (g_sat >= 0) return finish(std::move(saturated), penalty, g_sat);

  // lambda in (0, penalty) with the constraint active and no slack.
  auto g = [&](double lambda) { return system.constraint_value(system.normalise(lambda).q); };
  boost::uintmax_t max_iter = 300;
  const auto bracket = boost::math::tools::toms748_solve(
      g, 0.0, penalty, system.constraint_value(unconstrained.q), g_sat,
      boost::math::tools::eps_tolerance<double>(std::numeric_limits<double>::digits - 1), max_iter);
  // The upper end of the bracket is on the feasible side.
  double lambda = bracket.second;
  auto active = system.normalise(lambda);
  if (system.constraint_value(active.q) > 0) {
    // Rounding in the renormalisation can leave a residue of a few ulps.
    return finish(std::move(active), lambda, std::max(0.0, system.constraint_value(active.q)));
  }
  return finish(std::move(active), lambda, 0.0);
}

// ---------------------------------------------------------------------------
// Penalty convex-concave procedure
// ---------------------------------------------------------------------------

bool TradeoffPoint::divergence_infinite() const noexcept { return std::isinf(divergence_value); }

namespace {

TradeoffPoint make_point(const DiscreteDistribution& p, double epsilon, std::vector<double> q,
                         DivergenceKind kind) {
  TradeoffPoint point;
  point.epsilon = epsilon;
  point.q_star = DiscreteDistribution(std::move(q));
  point.divergence_value = divergence(p, point.q_star, kind);
  point.entropy_q = entropy(point.q_star);
  point.feasibility_gap = std::max(0.0, point.entropy_q - epsilon);
  return point;
}

TradeoffPoint solve_from(const DiscreteDistribution& p, double epsilon, const SolverConfig& cfg,
                         std::vector<double> q) {
  cfg.validate(p.size());
  if (!(epsilon >= 0) || !std::isfinite(epsilon))
    throw std::invalid_argument("solve_tradeoff: epsilon must be finite and nonnegative");

  if (epsilon == 0) {
    // Only a point mass has zero entropy. KL to it is unbounded unless p is
    // itself a point mass.
    const bool degenerate = entropy(p) == 0;
    const std::size_t symbol = p.argmax();
    const auto mass = DiscreteDistribution::point_mass(p.size(), symbol);
    TradeoffPoint point = make_point(p, epsilon, floor_onto_simplex(mass.masses(), cfg.floor), cfg.divergence);
    if (cfg.divergence == DivergenceKind::kl && !degenerate) point.divergence_value = kInf;
    point.converged = true;
    return point;
  }

  double penalty = cfg.initial_penalty;
  double previous = kInf;
  std::vector<double> trace;
  SubproblemSolution sub;
  bool converged = false;
  int iteration = 0;
  while (iteration < cfg.max_iterations) {
    ++iteration;
    LinearConstraint linearised;
    linearised.bound = epsilon;
    linearised.weights.resize(q.size());
    // Tangent of H at q restricted to the simplex: the cross-entropy weights.
    for (std::size_t x = 0; x < q.size(); ++x) linearised.weights[x] = -std::log2(q[x]);

    sub = convex_subproblem(p, linearised, penalty, cfg.floor, cfg.subproblem_tolerance, cfg.divergence);
    const double objective = divergence_of(p.masses(), sub.q, cfg.divergence) + penalty * sub.slack;
    trace.push_back(objective);
    q = sub.q;

    if (std::fabs(objective - previous) < cfg.stop_tolerance && sub.slack < kSlackTolerance && sub.within_tolerance) {
      converged = true;
      break;
    }
    previous = objective;
    penalty = std::min(cfg.penalty_growth * penalty, cfg.penalty_cap);
  }

  TradeoffPoint point = make_point(p, epsilon, std::move(q), cfg.divergence);
  point.iterations = iteration;
  point.converged = converged;
  point.final_penalty = penalty;
  point.objective_trace = std::move(trace);
  return point;
}

}  // namespace

TradeoffPoint solve_tradeoff(const DiscreteDistribution& p, double epsilon, const SolverConfig& cfg) {
  return solve_from(p, epsilon, cfg, floor_onto_simplex(p.masses(), cfg.floor));
}

TradeoffPoint solve_tradeoff(const DiscreteDistribution& p, double epsilon, const SolverConfig& cfg,
                             const DiscreteDistribution& initial) {
  if (initial.size() != p.size()) throw std::invalid_argument("solve_tradeoff: initial point has wrong size");
  return solve_from(p, epsilon, cfg, floor_onto_simplex(initial.masses(), cfg.floor));
}

bool TradeoffCurve::all_converged() const noexcept {
  return std::all_of(points.begin(), points.end(), [](const TradeoffPoint& pt) { return pt.converged; });
}

namespace {

// Converged beats unconverged; then the smaller divergence wins, the first
// argument on ties.
const TradeoffPoint& better_of(const TradeoffPoint& a, const TradeoffPoint& b) {
  if (a.converged != b.converged) return a.converged ? a : b;
  return b.divergence_value < a.divergence_value ? b : a;
}

}  // namespace

TradeoffCurve sweep_curve(const DiscreteDistribution& p, std::span<const double> epsilon_grid,
                          const SolverConfig& cfg, unsigned threads) {
  for (std::size_t i = 1; i < epsilon_grid.size(); ++i)
    if (!(epsilon_grid[i] > epsilon_grid[i - 1]))
      throw std::invalid_argument("sweep_curve: epsilon grid must be strictly increasing");
  cfg.validate(p.size());

  std::vector<TradeoffPoint> cold(epsilon_grid.size());
  parallel_for(epsilon_grid.size(), threads,
               [&](std::size_t i) { cold[i] = solve_tradeoff(p, epsilon_grid[i], cfg); });

  TradeoffCurve curve;
  curve.points.reserve(cold.size());
  for (std::size_t i = 0; i < cold.size(); ++i) {
    if (i == 0) {
      curve.points.push_back(std::move(cold[0]));
      continue;
    }
    const TradeoffPoint warm = solve_tradeoff(p, epsilon_grid[i], cfg, curve.points.back().q_star);
    curve.points.push_back(better_of(cold[i], warm));
  }

  curve.isotonic.resize(curve.points.size());
  for (std::size_t i = 0; i < curve.points.size(); ++i) {
    const double raw = curve.points[i].divergence_value;
    curve.isotonic[i] = i == 0 ? raw : std::min(curve.isotonic[i - 1], raw);
    if (i > 0 && raw > curve.points[i - 1].divergence_value + kMonotonicitySlack)
      curve.monotonicity_violations.push_back(i);
  }
  return curve;
}

std::vector<double> epsilon_grid(double start, double end, double step) {
  if (!(step > 0) || !std::isfinite(step)) throw std::invalid_argument("epsilon grid: step must be positive");
  if (!(start >= 0) || !(end >= start) || !std::isfinite(end))
    throw std::invalid_argument("epsilon grid: need 0 <= start <= end");
  const auto count = static_cast<std::size_t>(std::floor((end - start) / step + 1e-9)) + 1;
  std::vector<double> grid(count);
  for (std::size_t i = 0; i < count; ++i) {
    // Snap to 12 decimals so that 0.05 + 39 * 0.05 prints as 2.
    grid[i] = std::round((start + static_cast<double>(i) * step) * 1e12) / 1e12;
  }
  return grid;
}

// ---------------------------------------------------------------------------
// Brute-force oracle
// ---------------------------------------------------------------------------

namespace {

class OracleSlice {
 public:
  OracleSlice(std::span<const double> p, double epsilon, DivergenceKind kind, std::size_t i, std::size_t j)
      : p_(p), epsilon_(epsilon), kind_(kind), i_(i), j_(j), q_(p.size(), 0.0) {}

  // Best feasible divergence with the gridded coordinates fixed to `fixed`
  // (indexed like p, entries i and j ignored).
  double evaluate(std::span<const double> fixed) {
    double used = 0;
    double fixed_entropy = 0;
    for (std::size_t x = 0; x < p_.size(); ++x) {
      if (x == i_ || x == j_) continue;
      q_[x] = fixed[x];
      used += fixed[x];
      fixed_entropy += plogp_bits(fixed[x]);
    }
    const double rest = 1.0 - used;
    if (rest < -1e-12) return kInf;
    rest_ = std::max(0.0, rest);
    fixed_entropy_ = fixed_entropy;

    if (rest_ == 0) return at(0.0);

    const double centre = unconstrained_split();
    if (slice_entropy(centre) <= epsilon_) return value(centre);
    if (slice_entropy(0.0) > epsilon_) return kInf;

    // Entropy is symmetric and concave in the split, increasing on
    // [0, rest/2]; the level set is reached at u and rest - u.
    double lo = 0.0;
    double hi = rest_ / 2;
    for (int k = 0; k < 200 && hi - lo > 0; ++k) {
      const double mid = lo + (hi - lo) / 2;
      if (mid <= lo || mid >= hi) break;
      (slice_entropy(mid) <= epsilon_ ? lo : hi) = mid;
    }
    return std::min(value(lo), value(rest_ - lo));
  }

 private:
  double slice_entropy(double u) const {
    const double v = rest_ - u;
    return fixed_entropy_ + plogp_bits(std::min(u, v)) + plogp_bits(std::max(u, v));
  }

  double at(double u) {
    return slice_entropy(u) <= epsilon_ ? value(u) : kInf;
  }

  double value(double u) {
    q_[i_] = u;
    q_[j_] = rest_ - u;
    return divergence_of(p_, q_, kind_);
  }

  double unconstrained_split() {
    if (kind_ == DivergenceKind::kl) {
      const double pair = p_[i_] + p_[j_];
      return pair > 0 ? rest_ * p_[i_] / pair : 0.0;
    }
    const auto best = boost::math::tools::brent_find_minima([&](double u) { return value(u); }, 0.0, rest_,
                                                            std::numeric_limits<double>::digits / 2);
    return best.first;
  }

  std::span<const double> p_;
  double epsilon_;
  DivergenceKind kind_;
  std::size_t i_;
  std::size_t j_;
  std::vector<double> q_;
  double rest_ = 0;
  double fixed_entropy_ = 0;
};

}  // namespace

double oracle_tradeoff(const DiscreteDistribution& p, double epsilon, double grid_step, DivergenceKind kind) {
  const std::size_t n = p.size();
  if (n > kOracleMaxAlphabet)
    throw std::invalid_argument("oracle_tradeoff: alphabet of " + std::to_string(n) +
                                " symbols exceeds the brute-force limit of " +
                                std::to_string(kOracleMaxAlphabet));
  if (!(grid_step > 0) || !(grid_step <= 0.5)) throw std::invalid_argument("oracle_tradeoff: grid step must be in (0, 0.5]");
  if (!(epsilon >= 0)) throw std::invalid_argument("oracle_tradeoff: epsilon must be nonnegative");
  if (n == 1) return 0.0;

  const auto ticks = static_cast<long>(std::floor(1.0 / grid_step + 1e-9));
  double best = kInf;

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<std::size_t> gridded;
      for (std::size_t x = 0; x < n; ++x)
        if (x != i && x != j) gridded.push_back(x);

      OracleSlice slice(p.masses(), epsilon, kind, i, j);
      std::vector<double> fixed(n, 0.0);
      std::vector<double> best_fixed = fixed;
      double slice_best = kInf;

      // Odometer over the gridded coordinates with total at most 1.
      std::vector<long> index(gridded.size(), 0);
      while (true) {
        long used = 0;
        for (std::size_t k = 0; k < gridded.size(); ++k) {
          fixed[gridded[k]] = static_cast<double>(index[k]) * grid_step;
          used += index[k];
        }
        if (used <= ticks) {
          const double v = slice.evaluate(fixed);
          if (v < slice_best) {
            slice_best = v;
            best_fixed = fixed;
          }
        }
        std::size_t k = 0;
        for (; k < index.size(); ++k) {
          if (++index[k] <= ticks) break;
          index[k] = 0;
        }
        if (k == index.size()) break;
      }

      // Polish the best cell with a shrinking compass search.
      fixed = best_fixed;
      for (double h = grid_step / 2; h > 1e-13 && !gridded.empty(); h /= 2) {
        bool improved = true;
        while (improved) {
          improved = false;
          for (std::size_t x : gridded) {
            for (double dir : {-1.0, 1.0}) {
              std::vector<double> trial = fixed;
              trial[x] += dir * h;
              if (trial[x] < 0) continue;
              double total = 0;
              for (std::size_t y : gridded) total += trial[y];
              if (total > 1) continue;
              const double v = slice.evaluate(trial);
              if (v < slice_best) {
                slice_best = v;
                fixed = trial;
                improved = true;
              }
            }
          }
        }
      }
      best = std::min(best, slice_best);
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Text formats
// ---------------------------------------------------------------------------

DiscreteDistribution parse_distribution(const std::string& text) {
  std::vector<double> masses;
  for (std::string_view token : split_tokens(text, " \t\r\n,;")) {
    double value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
      throw std::invalid_argument("distribution: cannot parse mass '" + std::string(token) + "'");
    if (!(value >= 0) || !std::isfinite(value))
      throw std::invalid_argument("distribution: mass '" + std::string(token) + "' is negative or not finite");
    masses.push_back(value);
  }
  if (masses.empty()) throw std::invalid_argument("distribution: no masses given");
  const long double total = extended_sum(masses);
  if (std::fabs(total - 1.0L) > 1e-6L)
    throw std::invalid_argument("distribution: masses sum to " + format_real(static_cast<double>(total)) +
                                ", expected 1");
  return DiscreteDistribution::normalized(std::move(masses));
}

std::string curve_to_csv(const TradeoffCurve& curve) {
  std::ostringstream out;
  out << "epsilon,divergence_raw,divergence_isotonic,entropy_q,converged,iterations\n";
  for (std::size_t i = 0; i < curve.points.size(); ++i) {
    const TradeoffPoint& pt = curve.points[i];
    out << format_real(pt.epsilon) << ',' << format_real(pt.divergence_value) << ','
        << format_real(curve.isotonic[i]) << ',' << format_real(pt.entropy_q) << ','
        << (pt.converged ? "true" : "false") << ',' << pt.iterations << '\n';
  }
  return out.str();
}

}  // namespace noisedim
