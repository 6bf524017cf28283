#pragma once

// The uncertainty preorder on finite probability simplices.
//
//   p <=_U q  iff  u_i(p) <= u_i(q) for i = 1..N-1,  u_i(p) = -sum_{n<=i} p_n(down)
//
// where p(down) is the decreasing rearrangement. Classical majorization
// (p <=_M q iff every partial sum of p(down) is at most that of q(down)) is
// the reverse relation and is exposed separately because catalytic
// (trumping) checks are stated in that convention.
//
// Comparisons are exact. Entropy is evaluated in floating point.

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "ordermono/core_order.hpp"
#include "ordermono/rational.hpp"

namespace ordermono {

/// Probability vector with exact entries in [0, 1] summing to exactly 1.
class Dist {
 public:
  /// Throws PreconditionError unless `probs` is a probability vector.
  explicit Dist(std::vector<Rational> probs);

  static Dist uniform(std::size_t n);
  static Dist dirac(std::size_t n, std::size_t at = 0);

  std::size_t size() const { return probs_.size(); }
  const Rational& operator[](std::size_t i) const { return probs_[i]; }
  const std::vector<Rational>& probs() const { return probs_; }

  friend bool operator==(const Dist&, const Dist&) = default;

 private:
  std::vector<Rational> probs_;
};

/// Random variable on the outcomes; its expectation is <E>_p.
struct EnergyFunction {
  std::vector<Rational> values;
};

Rational expectation(const EnergyFunction& E, const Dist& p);

Dist decreasing_rearrangement(const Dist& p);

/// (u_1(p), ..., u_{N-1}(p)); non-increasing in i.
std::vector<Rational> lorenz_utilities(const Dist& p);

/// Relation of p to q under <=_U. Throws DimensionMismatch on length mismatch.
OrderRelation uncertainty_compare(const Dist& p, const Dist& q);

/// Relation of p to q under classical majorization, zero-padding the shorter
/// vector. Always reversed(uncertainty_compare(p, q)) for equal lengths.
OrderRelation majorization_compare(const Dist& p, const Dist& q);

enum class LogBase { Nats, Bits };

/// -sum p_i log p_i with 0 log 0 = 0.
double shannon_entropy(const Dist& p, LogBase base = LogBase::Nats);

/// Moves `amount` of probability from outcome `from` to outcome `to`.
/// Requires p[from] > p[to] and 0 < amount < p[from] - p[to], so the result
/// is strictly above p under <=_U.
Dist transfer(const Dist& p, std::size_t from, std::size_t to, const Rational& amount);

/// Random p and q with p <_U q, q obtained from p by `transfers` random
/// transfers from a more likely to a less likely outcome. Deterministic in
/// `seed`.
std::pair<Dist, Dist> random_comparable_pair(std::uint64_t seed, std::size_t n,
                                             std::size_t transfers);

// ---------------------------------------------------------------------------
// Maximum entropy audit on a linear constraint line of the 2-simplex.

struct GridPoint {
  /// Line parameter: the coordinate of p chosen to parametrize the segment.
  Rational t;
  Dist p;
};

/// Points of {p : <E>_p = c} for |Omega| = 3, stepping the parameter by
/// `step` from one endpoint and always including the other. The parameter is
/// p[i] for the first outcome i whose two complementary energies differ.
/// Throws InfeasibleConstraint when c lies outside [min E, max E].
std::vector<GridPoint> constraint_grid(const EnergyFunction& E, const Rational& c,
                                       const Rational& step);

inline Rational default_grid_step() { return Rational(1, 1000); }
inline constexpr double kEntropyArgmaxTolerance = 1e-12;

struct MaxentReport {
  Rational constraint_level;
  Rational grid_step;
  std::size_t grid_size = 0;

  std::vector<GridPoint> grid;
  std::vector<double> entropy;  ///< nats, one per grid point
  std::vector<bool> is_maximal;
  std::vector<bool> is_entropy_argmax;

  /// Maximal under <=_U within the grid.
  std::vector<Dist> maximal_set;
  /// Entropy within kEntropyArgmaxTolerance of the grid maximum.
  std::vector<Dist> entropy_argmax;
  /// Maximal points not equivalent to any entropy maximizer.
  std::vector<Dist> missed;
};

MaxentReport maxent_audit(const EnergyFunction& E, const Rational& c,
                          const Rational& step = default_grid_step());

// ---------------------------------------------------------------------------
// Witness constructions. Each verifies its result exactly before returning
// and throws VerificationError if the check fails.

/// For incomparable x, y: rational z with x incomparable to z and z <_U y.
/// z is a slight concentration of y(down) on its support.
Dist upper_dense_witness(const Dist& x, const Dist& y);

/// For |Omega| = 2 and p <_U q: r = (s, 1-s) with s the midpoint of
/// q(down)_1 and p(down)_1, so p <_U r <_U q.
Dist order_dense_witness_dim2(const Dist& p, const Dist& q);

inline constexpr std::size_t kBisectionMaxIterations = 200;
inline constexpr double kDefaultEntropyTolerance = 1e-9;

/// Two incomparable distributions on n >= 3 outcomes whose entropies are
/// within `tol` of c (nats, 0 < c < log n). Points are searched on segments
/// from points r_t (between a Dirac and a point of entropy c' < c) towards
/// the uniform distribution, then rounded to denominator 10^12.
std::pair<Dist, Dist> equal_entropy_incomparable_pair(double c, std::size_t n,
                                                      double tol = kDefaultEntropyTolerance);

/// (p_1 r_1, ..., p_1 r_M, ..., p_N r_M).
Dist tensor(const Dist& p, const Dist& r);

struct TrumpingResult {
  /// p (x) r <=_M q (x) r.
  bool catalyzed = false;
  /// majorization_compare(p, q).
  OrderRelation base_relation = OrderRelation::Incomparable;
};

TrumpingResult trumping_check(const Dist& p, const Dist& q, const Dist& r);

}  // namespace ordermono
