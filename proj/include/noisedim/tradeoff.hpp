#ifndef NOISEDIM_TRADEOFF_HPP
#define NOISEDIM_TRADEOFF_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace noisedim {

/// Probability mass function over the alphabet {0, ..., size()-1}.
class DiscreteDistribution {
 public:
  /// Takes the masses as given. Throws std::domain_error unless every mass is
  /// in [0, 1] and the total is 1 within 1e-12.
  explicit DiscreteDistribution(std::vector<double> masses);

  /// Rescales nonnegative weights to unit total.
  static DiscreteDistribution normalized(std::vector<double> weights);
  static DiscreteDistribution uniform(std::size_t size);
  /// All mass on `symbol`.
  static DiscreteDistribution point_mass(std::size_t size, std::size_t symbol);

  std::size_t size() const noexcept { return masses_.size(); }
  double operator[](std::size_t symbol) const noexcept { return masses_[symbol]; }
  std::span<const double> masses() const noexcept { return masses_; }
  /// Most probable symbol; ties go to the lowest index.
  std::size_t argmax() const noexcept;

 private:
  std::vector<double> masses_;
};

enum class DivergenceKind { kl, js };

std::string to_string(DivergenceKind kind);
/// Accepts "kl" or "js" (any case).
DivergenceKind parse_divergence(const std::string& text);

/// Shannon entropy in bits, with 0 log 0 = 0.
double entropy(const DiscreteDistribution& p);

/// KL(p || q) or JS(p, q) in bits. KL is +infinity when q misses part of
/// p's support. Throws std::invalid_argument on alphabet mismatch.
double divergence(const DiscreteDistribution& p, const DiscreteDistribution& q, DivergenceKind kind);

struct SolverConfig {
  double floor = 1e-12;            ///< lower bound on every q_x
  double initial_penalty = 1.0;    ///< tau_0
  double penalty_growth = 5.0;     ///< mu
  double penalty_cap = 1e6;        ///< tau_max
  int max_iterations = 200;
  double subproblem_tolerance = 1e-9;  ///< KKT residual
  double stop_tolerance = 1e-7;        ///< objective change between iterations
  DivergenceKind divergence = DivergenceKind::kl;

  /// Throws std::invalid_argument if a field is out of range for `alphabet_size`.
  void validate(std::size_t alphabet_size) const;
};

/// weights . q <= bound + slack
struct LinearConstraint {
  std::vector<double> weights;
  double bound = 0;
};

struct SubproblemSolution {
  std::vector<double> q;
  double slack = 0;
  double multiplier = 0;  ///< lambda on the linear constraint, in [0, penalty]
  double kkt_residual = 0;
  bool within_tolerance = false;  ///< kkt_residual <= the requested tolerance
};

/// Solves  min_q divergence(p, q) + penalty * s
///         s.t. sum q = 1, q >= floor, weights . q <= bound + s, s >= 0.
///
/// Stationarity makes each q_x a decreasing function of nu + lambda * a_x,
/// so the problem reduces to a root-find for nu (normalisation) nested in a
/// root-find for lambda (complementary slackness, lambda = penalty when
/// the slack is positive).
SubproblemSolution convex_subproblem(const DiscreteDistribution& p, const LinearConstraint& constraint,
                                     double penalty, double floor, double tolerance,
                                     DivergenceKind kind = DivergenceKind::kl);

struct TradeoffPoint {
  double epsilon = 0;
  double divergence_value = 0;  ///< +infinity flags an unbounded divergence
  DiscreteDistribution q_star = DiscreteDistribution::uniform(1);
  double entropy_q = 0;
  double feasibility_gap = 0;   ///< max(0, H(q*) - epsilon)
  int iterations = 0;
  bool converged = false;
  double final_penalty = 0;
  std::vector<double> objective_trace;  ///< penalised objective after each iteration

  bool divergence_infinite() const noexcept;
};

/// d(epsilon) by the penalty convex-concave procedure, starting from q = p.
TradeoffPoint solve_tradeoff(const DiscreteDistribution& p, double epsilon, const SolverConfig& cfg = {});
/// Same, starting from `initial` (projected onto the floored simplex).
TradeoffPoint solve_tradeoff(const DiscreteDistribution& p, double epsilon, const SolverConfig& cfg,
                             const DiscreteDistribution& initial);

/// Raw violations of non-increase larger than this are reported.
inline constexpr double kMonotonicitySlack = 1e-4;

struct TradeoffCurve {
  std::vector<TradeoffPoint> points;
  std::vector<double> isotonic;  ///< running minimum of the raw divergences
  std::vector<std::size_t> monotonicity_violations;  ///< indices i with raw[i] > raw[i-1] + slack

  bool all_converged() const noexcept;
};

/// Solves every epsilon from q = p and again warm-started from the previous
/// point's solution, keeping the better of the two. Cold starts run on up
/// to `threads` workers; the result does not depend on the worker count.
/// Throws std::invalid_argument if the grid is not strictly increasing.
TradeoffCurve sweep_curve(const DiscreteDistribution& p, std::span<const double> epsilon_grid,
                          const SolverConfig& cfg = {}, unsigned threads = 0);

/// start, start + step, ... up to end inclusive (within 1e-9 * step).
std::vector<double> epsilon_grid(double start, double end, double step);

/// Largest alphabet the brute-force oracle accepts.
inline constexpr std::size_t kOracleMaxAlphabet = 4;

/// Brute-force d(epsilon) for alphabets of at most four symbols.
///
/// All but two coordinates are scanned on a grid of spacing `grid_step`;
/// the remaining pair is resolved exactly, either at the unconstrained
/// optimum of the slice or on the entropy level set by bisection. Every
/// grid choice of the free pair is tried and the best cell is polished by
/// a shrinking pattern search. Every candidate is feasible, so the result
/// is an upper bound on d(epsilon).
double oracle_tradeoff(const DiscreteDistribution& p, double epsilon, double grid_step,
                       DivergenceKind kind = DivergenceKind::kl);

/// Parses whitespace- and/or comma-separated masses. Totals within 1e-6 of
/// one are renormalised; anything else throws std::invalid_argument.
DiscreteDistribution parse_distribution(const std::string& text);

/// CSV with header
/// "epsilon,divergence_raw,divergence_isotonic,entropy_q,converged,iterations".
std::string curve_to_csv(const TradeoffCurve& curve);

}  // namespace noisedim

#endif  // NOISEDIM_TRADEOFF_HPP
