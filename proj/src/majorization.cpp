#include "ordermono/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>

#include "ordermono/error.hpp"

namespace ordermono {

namespace {

void check_same_length(const Dist& p, const Dist& q) {
  if (p.size() != q.size()) {
    throw DimensionMismatch("distributions have " + std::to_string(p.size()) + " and " +
                            std::to_string(q.size()) + " outcomes");
  }
}

// Partial sums of the decreasing rearrangement, padded with 1 up to `length`.
std::vector<Rational> cumulative_mass(const Dist& p, std::size_t length) {
  std::vector<Rational> sorted = p.probs();
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  std::vector<Rational> out(length, Rational(1));
  Rational acc = 0;
  for (std::size_t i = 0; i < sorted.size() && i < length; ++i) {
    acc += sorted[i];
    out[i] = acc;
  }
  return out;
}

// Relation of a to b where a <= b iff a[i] <= b[i] for all i.
OrderRelation componentwise(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  bool le = true, ge = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) le = false;
    if (a[i] < b[i]) ge = false;
  }
  if (le && ge) return OrderRelation::Equivalent;
  if (le) return OrderRelation::StrictlyLess;
  if (ge) return OrderRelation::StrictlyGreater;
  return OrderRelation::Incomparable;
}

double entropy_of(const std::vector<double>& p) {
  double h = 0.0;
  for (double v : p)
    if (v > 0.0) h -= v * std::log(v);
  return h;
}

// Smallest-width bracket search for a continuous non-decreasing g on [0, 1]
// with g(0) <= target <= g(1).
double bisect(const std::function<double(double)>& g, double target, double tol) {
  double lo = 0.0, hi = 1.0;
  for (std::size_t it = 0; it < kBisectionMaxIterations; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double v = g(mid);
    if (std::abs(v - target) <= tol * 0.125) return mid;
    if (v < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double mid = 0.5 * (lo + hi);
  if (std::abs(g(mid) - target) <= tol) return mid;
  throw ConvergenceError("entropy bisection did not reach tolerance; tolerance too small");
}

const mpz_class& rounding_denominator() {
  static const mpz_class den("1000000000000");
  return den;
}

// Rounds a probability vector to denominator 10^12, keeping the exact sum 1
// by absorbing the residue in the largest entry.
Dist round_distribution(const std::vector<double>& p) {
  std::vector<Rational> out(p.size());
  std::size_t largest = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] > p[largest]) largest = i;
  }
  Rational rest = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i == largest) continue;
    out[i] = round_to_denominator(std::max(p[i], 0.0), rounding_denominator());
    rest -= out[i];
  }
  out[largest] = rest;
  return Dist(std::move(out));
}

}  // namespace

// Dist -----------------------------------------------------------------------

Dist::Dist(std::vector<Rational> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) throw PreconditionError("distribution needs at least one outcome");
  Rational total = 0;
  for (auto& v : probs_) {
    v.canonicalize();
    if (v < 0 || v > 1) throw PreconditionError("probability " + to_string(v) + " outside [0,1]");
    total += v;
  }
  if (total != 1) throw PreconditionError("probabilities sum to " + to_string(total) + ", not 1");
}

Dist Dist::uniform(std::size_t n) {
  return Dist(std::vector<Rational>(n, Rational(1, static_cast<unsigned long>(n))));
}

Dist Dist::dirac(std::size_t n, std::size_t at) {
  if (at >= n) throw IndexOutOfRange("Dirac position out of range");
  std::vector<Rational> v(n, Rational(0));
  v[at] = 1;
  return Dist(std::move(v));
}

Rational expectation(const EnergyFunction& E, const Dist& p) {
  if (E.values.size() != p.size()) throw DimensionMismatch("energy and distribution sizes differ");
  Rational acc = 0;
  for (std::size_t i = 0; i < p.size(); ++i) acc += E.values[i] * p[i];
  return acc;
}

Dist decreasing_rearrangement(const Dist& p) {
  std::vector<Rational> v = p.probs();
  std::sort(v.begin(), v.end(), std::greater<>());
  return Dist(std::move(v));
}

std::vector<Rational> lorenz_utilities(const Dist& p) {
  std::vector<Rational> out = cumulative_mass(p, p.size() - 1);
  for (auto& v : out) v = -v;
  return out;
}

OrderRelation uncertainty_compare(const Dist& p, const Dist& q) {
  check_same_length(p, q);
  return componentwise(lorenz_utilities(p), lorenz_utilities(q));
}

OrderRelation majorization_compare(const Dist& p, const Dist& q) {
  const std::size_t length = std::max(p.size(), q.size());
  return componentwise(cumulative_mass(p, length), cumulative_mass(q, length));
}

double shannon_entropy(const Dist& p, LogBase base) {
  std::vector<double> v;
  v.reserve(p.size());
  for (const auto& x : p.probs()) v.push_back(x.get_d());
  const double h = entropy_of(v);
  return base == LogBase::Bits ? h / std::log(2.0) : h;
}

Dist transfer(const Dist& p, std::size_t from, std::size_t to, const Rational& amount) {
  if (from >= p.size() || to >= p.size()) throw IndexOutOfRange("transfer outcome out of range");
  if (!(p[from] > p[to])) {
    throw PreconditionError("transfers must go from a more likely to a less likely outcome");
  }
  if (!(amount > 0 && amount < p[from] - p[to])) {
    throw PreconditionError("transfer amount " + to_string(amount) + " must lie in (0, " +
                            to_string(p[from] - p[to]) + ")");
  }
  std::vector<Rational> v = p.probs();
  v[from] -= amount;
  v[to] += amount;
  return Dist(std::move(v));
}

std::pair<Dist, Dist> random_comparable_pair(std::uint64_t seed, std::size_t n,
                                             std::size_t transfers) {
  if (n < 2) throw PreconditionError("need at least two outcomes");
  if (transfers < 1) throw PreconditionError("need at least one transfer");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> weight(0, 12);
  std::uniform_int_distribution<long> fraction(1, 7);

  constexpr int kMaxAttempts = 64;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<long> w(n);
    for (auto& x : w) x = weight(rng);
    const long total = std::accumulate(w.begin(), w.end(), 0L);
    if (total == 0) continue;
    std::vector<Rational> probs(n);
    for (std::size_t i = 0; i < n; ++i) {
      probs[i] = Rational(w[i], total);
      probs[i].canonicalize();
    }
    const Dist p(probs);

    Dist q = p;
    bool degenerate = false;
    for (std::size_t k = 0; k < transfers && !degenerate; ++k) {
      std::vector<std::pair<std::size_t, std::size_t>> moves;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (q[i] > q[j]) moves.emplace_back(i, j);
      if (moves.empty()) {
        degenerate = true;
        break;
      }
      std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
      const auto [from, to] = moves[pick(rng)];
      const Rational amount = (q[from] - q[to]) * fraction(rng) / 8;
      q = transfer(q, from, to, amount);
    }
    if (degenerate) continue;
    if (uncertainty_compare(p, q) == OrderRelation::StrictlyLess) return {p, q};
  }
  throw ConvergenceError("could not draw a strictly comparable pair; seed exhausted");
}

// Constraint line ------------------------------------------------------------

std::vector<GridPoint> constraint_grid(const EnergyFunction& E, const Rational& c,
                                       const Rational& step) {
  const auto& e = E.values;
  if (e.size() != 3) throw PreconditionError("line mode requires exactly three outcomes");
  if (!(step > 0)) throw PreconditionError("grid step must be positive");
  const auto [min_it, max_it] = std::minmax_element(e.begin(), e.end());
  if (c < *min_it || c > *max_it) {
    throw InfeasibleConstraint("level " + to_string(c) + " outside [" + to_string(*min_it) +
                               ", " + to_string(*max_it) + "]");
  }
  if (*min_it == *max_it) throw PreconditionError("constant energy does not cut out a line");

  std::size_t i = 0, j = 1, k = 2;
  for (std::size_t cand = 0; cand < 3; ++cand) {
    const std::size_t a = (cand + 1) % 3, b = (cand + 2) % 3;
    if (e[a] != e[b]) {
      i = cand;
      j = std::min(a, b);
      k = std::max(a, b);
      break;
    }
  }
  // p_j = alpha_j + beta_j t, p_k = 1 - t - p_j, with t = p_i.
  const Rational alpha_j = (c - e[k]) / (e[j] - e[k]);
  const Rational beta_j = (e[k] - e[i]) / (e[j] - e[k]);
  const Rational alpha_k = 1 - alpha_j;
  const Rational beta_k = -1 - beta_j;

  Rational lo = 0, hi = 1;
  auto require_nonnegative = [&](const Rational& alpha, const Rational& beta) {
    if (beta > 0) {
      lo = std::max(lo, Rational(-alpha / beta));
    } else if (beta < 0) {
      hi = std::min(hi, Rational(-alpha / beta));
    } else if (alpha < 0) {
      throw InfeasibleConstraint("constraint line misses the simplex");
    }
  };
  require_nonnegative(alpha_j, beta_j);
  require_nonnegative(alpha_k, beta_k);
  if (lo > hi) throw InfeasibleConstraint("constraint line misses the simplex");

  auto point_at = [&](const Rational& t) {
    std::vector<Rational> v(3);
    v[i] = t;
    v[j] = alpha_j + beta_j * t;
    v[k] = alpha_k + beta_k * t;
    return GridPoint{t, Dist(std::move(v))};
  };
  std::vector<GridPoint> grid;
  for (Rational t = lo; t < hi; t += step) grid.push_back(point_at(t));
  grid.push_back(point_at(hi));
  return grid;
}

MaxentReport maxent_audit(const EnergyFunction& E, const Rational& c, const Rational& step) {
  MaxentReport report;
  report.constraint_level = c;
  report.grid_step = step;
  report.grid = constraint_grid(E, c, step);
  const std::size_t n = report.grid.size();
  report.grid_size = n;

  std::vector<std::vector<Rational>> lorenz(n);
  report.entropy.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    lorenz[a] = lorenz_utilities(report.grid[a].p);
    report.entropy[a] = shannon_entropy(report.grid[a].p);
  }

  report.is_maximal.assign(n, true);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (componentwise(lorenz[a], lorenz[b]) == OrderRelation::StrictlyLess) {
        report.is_maximal[a] = false;
        break;
      }
    }
  }

  const double best = *std::max_element(report.entropy.begin(), report.entropy.end());
  report.is_entropy_argmax.assign(n, false);
  std::vector<std::size_t> argmax;
  for (std::size_t a = 0; a < n; ++a) {
    if (report.entropy[a] >= best - kEntropyArgmaxTolerance) {
      report.is_entropy_argmax[a] = true;
      argmax.push_back(a);
    }
  }

  for (std::size_t a = 0; a < n; ++a) {
    if (report.is_maximal[a]) report.maximal_set.push_back(report.grid[a].p);
    if (report.is_entropy_argmax[a]) report.entropy_argmax.push_back(report.grid[a].p);
    if (!report.is_maximal[a]) continue;
    const bool matched = std::any_of(argmax.begin(), argmax.end(), [&](std::size_t b) {
      return componentwise(lorenz[a], lorenz[b]) == OrderRelation::Equivalent;
    });
    if (!matched) report.missed.push_back(report.grid[a].p);
  }
  return report;
}

// Witnesses -------------------------------------------------------------------

Dist upper_dense_witness(const Dist& x, const Dist& y) {
  check_same_length(x, y);
  if (uncertainty_compare(x, y) != OrderRelation::Incomparable) {
    throw PreconditionError("upper-dense witness needs incomparable distributions");
  }
  const std::size_t n = y.size();
  const std::vector<Rational> ys = decreasing_rearrangement(y).probs();
  const std::vector<Rational> sx = cumulative_mass(x, n);
  const std::vector<Rational> sy = cumulative_mass(y, n);

  // First crossing where x carries more leading mass than y (1-based m).
  std::size_t m = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (sx[i] > sy[i]) {
      m = i + 1;
      break;
    }
  }
  // Last positive entry of y(down) (1-based k); k > m since sy[k-1] = 1.
  std::size_t k = n;
  while (k > 0 && ys[k - 1] == 0) --k;
  if (m == 0 || k <= m) throw VerificationError("incomparable pair without a crossing");

  const Rational& tail = ys[k - 1];
  const Rational gap = sx[m - 1] - sy[m - 1];
  std::vector<Rational> eps(k - 1);
  Rational used = 0;
  for (std::size_t i = 1; i < k; ++i) {
    Rational bound = tail - used;
    if (i <= m) bound = std::min(bound, Rational(gap - used));
    eps[i - 1] = bound / 2;
    used += eps[i - 1];
  }

  // q_i in (y_i, y_i + eps_i), non-increasing, q_k absorbs the remainder.
  std::vector<Rational> z(n, Rational(0));
  Rational delta = eps[0];
  Rational head = 0;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    delta = std::min(delta, eps[i]) / 2;
    z[i] = ys[i] + delta;
    head += z[i];
  }
  z[k - 1] = 1 - head;
  Dist witness(std::move(z));

  if (uncertainty_compare(x, witness) != OrderRelation::Incomparable ||
      uncertainty_compare(witness, y) != OrderRelation::StrictlyLess) {
    throw VerificationError("upper-dense witness failed its exact check");
  }
  return witness;
}

Dist order_dense_witness_dim2(const Dist& p, const Dist& q) {
  if (p.size() != 2 || q.size() != 2) {
    throw PreconditionError("order-dense witness is defined for two outcomes");
  }
  if (uncertainty_compare(p, q) != OrderRelation::StrictlyLess) {
    throw PreconditionError("order-dense witness needs p strictly below q");
  }
  const Rational p1 = std::max(p[0], p[1]);
  const Rational q1 = std::max(q[0], q[1]);
  const Rational s = (p1 + q1) / 2;
  Dist r({s, 1 - s});
  if (uncertainty_compare(p, r) != OrderRelation::StrictlyLess ||
      uncertainty_compare(r, q) != OrderRelation::StrictlyLess) {
    throw VerificationError("order-dense witness failed its exact check");
  }
  return r;
}

std::pair<Dist, Dist> equal_entropy_incomparable_pair(double c, std::size_t n, double tol) {
  if (n < 3) throw PreconditionError("equal-entropy pairs need at least three outcomes");
  if (!(tol > 0.0)) throw PreconditionError("tolerance must be positive");
  const double top = std::log(static_cast<double>(n));
  if (!(c > 0.0 && c < top)) {
    throw PreconditionError("entropy level must lie strictly between 0 and log n");
  }

  auto mix = [](const std::vector<double>& a, const std::vector<double>& b, double t) {
    std::vector<double> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = (1.0 - t) * a[i] + t * b[i];
    return out;
  };
  std::vector<double> dirac(n, 0.0), middle(n, 0.0), flat(n, 1.0 / static_cast<double>(n));
  dirac[0] = 1.0;
  middle[0] = middle[1] = 0.5;

  // Stage one: r on [Dirac, middle] with H(r) = c' < min(c, H(middle)).
  const double lower_level = 0.5 * std::min(c, std::log(2.0));
  const double s = bisect([&](double t) { return entropy_of(mix(dirac, middle, t)); },
                          lower_level, 1e-6 * lower_level);
  const std::vector<double> r = mix(dirac, middle, s);

  // Stage two: on the segment from r_t = mix(dirac, r, t) to uniform, the
  // entropy rises from at most c' to log n.
  auto point_for = [&](double t) {
    const std::vector<double> rt = mix(dirac, r, t);
    const double lambda = bisect([&](double l) { return entropy_of(mix(rt, flat, l)); }, c, tol);
    return round_distribution(mix(rt, flat, lambda));
  };

  static constexpr std::pair<double, double> kParameterPairs[] = {
      {0.0, 1.0}, {0.0, 0.5}, {0.5, 1.0}, {0.25, 0.75}, {0.0, 0.25}, {0.75, 1.0}};
  for (auto [t1, t2] : kParameterPairs) {
    Dist p = point_for(t1);
    Dist q = point_for(t2);
    if (std::abs(shannon_entropy(p) - c) > tol || std::abs(shannon_entropy(q) - c) > tol) {
      throw ConvergenceError("rounded points miss the entropy tolerance; tolerance too small");
    }
    if (uncertainty_compare(p, q) == OrderRelation::Incomparable) return {p, q};
  }
  throw ConvergenceError("no incomparable equal-entropy pair among the tried parameters");
}

Dist tensor(const Dist& p, const Dist& r) {
  std::vector<Rational> v;
  v.reserve(p.size() * r.size());
  for (const auto& a : p.probs())
    for (const auto& b : r.probs()) v.push_back(a * b);
  return Dist(std::move(v));
}

TrumpingResult trumping_check(const Dist& p, const Dist& q, const Dist& r) {
  check_same_length(p, q);
  TrumpingResult out;
  out.base_relation = majorization_compare(p, q);
  const auto rel = majorization_compare(tensor(p, r), tensor(q, r));
  out.catalyzed = rel == OrderRelation::StrictlyLess || rel == OrderRelation::Equivalent;
  return out;
}

}  // namespace ordermono
