#include "cpvdw/quad.hpp"
#include "cpvdw/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>
#include <vector>

namespace cpvdw::quad {

namespace {

// QUADPACK qk21: Kronrod abscissae (descending, xgk[1], xgk[3], ... are the
// 10-point Gauss nodes) and weights.
constexpr std::array<double, 11> xgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};

constexpr std::array<double, 11> wgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208289107263, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};

constexpr std::array<double, 5> wg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

constexpr double epmach = std::numeric_limits<double>::epsilon();
constexpr double uflow = std::numeric_limits<double>::min();

struct Panel {
  double a, b;
  double value;
  double error;
};

// Larger error first; equal errors resolved by left endpoint.
struct WorstFirst {
  bool operator()(const Panel &lhs, const Panel &rhs) const {
    if (lhs.error != rhs.error)
      return lhs.error < rhs.error;
    return lhs.a > rhs.a;
  }
};

class Evaluator {
public:
  explicit Evaluator(const std::function<double(double)> &f) : f_(f) {}

  double operator()(double x) {
    const double y = f_(x);
    ++count_;
    if (!std::isfinite(y)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "integrand returned " << y << " at x = " << x;
      throw IntegrandError(msg.str(), x);
    }
    return y;
  }

  long count() const { return count_; }

private:
  const std::function<double(double)> &f_;
  long count_ = 0;
};

// Returns the Kronrod estimate; fills the QUADPACK-style error estimate.
template <class Fn>
double gk21(Fn &f, double a, double b, double &abserr, double *gauss) {
  const double centr = 0.5 * (a + b);
  const double hlgth = 0.5 * (b - a);
  const double dhlgth = std::abs(hlgth);

  std::array<double, 10> fv1{}, fv2{};
  const double fc = f(centr);
  double resg = 0.0;
  double resk = wgk[10] * fc;
  double resabs = std::abs(resk);
  for (int j = 0; j < 5; ++j) {
    const int jtw = 2 * j + 1;
    const double absc = hlgth * xgk[jtw];
    const double f1 = f(centr - absc);
    const double f2 = f(centr + absc);
    fv1[jtw] = f1;
    fv2[jtw] = f2;
    resg += wg[j] * (f1 + f2);
    resk += wgk[jtw] * (f1 + f2);
    resabs += wgk[jtw] * (std::abs(f1) + std::abs(f2));
  }
  for (int j = 0; j < 5; ++j) {
    const int jtwm1 = 2 * j;
    const double absc = hlgth * xgk[jtwm1];
    const double f1 = f(centr - absc);
    const double f2 = f(centr + absc);
    fv1[jtwm1] = f1;
    fv2[jtwm1] = f2;
    resk += wgk[jtwm1] * (f1 + f2);
    resabs += wgk[jtwm1] * (std::abs(f1) + std::abs(f2));
  }
  const double reskh = resk * 0.5;
  double resasc = wgk[10] * std::abs(fc - reskh);
  for (int j = 0; j < 10; ++j)
    resasc += wgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));

  const double result = resk * hlgth;
  resabs *= dhlgth;
  resasc *= dhlgth;
  abserr = std::abs((resk - resg) * hlgth);
  if (resasc != 0.0 && abserr != 0.0)
    abserr = resasc * std::min(1.0, std::pow(200.0 * abserr / resasc, 1.5));
  if (resabs > uflow / (50.0 * epmach))
    abserr = std::max(epmach * 50.0 * resabs, abserr);
  if (gauss)
    *gauss = resg * hlgth;
  return result;
}

struct Adaptive {
  double value;
  double error;
  bool tail_dominates = false;
};

// Refines the seeded panels until the summed error meets the target
// max(rel_tol |value|, abs_tol) minus `extra_error` (the tail bound).
template <class Fn>
Adaptive refine(Fn &f, const std::vector<double> &edges,
                const QuadratureSpec &spec, double extra_error) {
  std::priority_queue<Panel, std::vector<Panel>, WorstFirst> queue;
  double total = 0.0;
  double error = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    Panel p{edges[i], edges[i + 1], 0.0, 0.0};
    p.value = gk21(f, p.a, p.b, p.error, nullptr);
    total += p.value;
    error += p.error;
    queue.push(p);
  }

  auto converged = [&] {
    return error + extra_error <=
           std::max(spec.rel_tol * std::abs(total), spec.abs_tol);
  };

  int subdivisions = 0;
  while (!converged()) {
    if (extra_error > 0.5 * std::max(spec.rel_tol * std::abs(total),
                                     spec.abs_tol))
      return {total, error, true};
    if (subdivisions >= spec.max_subdivisions) {
      std::ostringstream msg;
      msg.precision(6);
      msg << "quadrature did not converge after " << subdivisions
          << " subdivisions (estimate " << total << ", error "
          << error + extra_error << ")";
      throw NumericalError(msg.str(), total, error + extra_error);
    }
    const Panel worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    Panel left{worst.a, mid, 0.0, 0.0};
    Panel right{mid, worst.b, 0.0, 0.0};
    left.value = gk21(f, left.a, left.b, left.error, nullptr);
    right.value = gk21(f, right.a, right.b, right.error, nullptr);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    ++subdivisions;
  }

  // Re-sum in position order; the running sums above accumulate drift.
  std::vector<Panel> panels;
  panels.reserve(queue.size());
  while (!queue.empty()) {
    panels.push_back(queue.top());
    queue.pop();
  }
  std::sort(panels.begin(), panels.end(),
            [](const Panel &l, const Panel &r) { return l.a < r.a; });
  Adaptive out{0.0, 0.0};
  for (const auto &p : panels) {
    out.value += p.value;
    out.error += p.error;
  }
  return out;
}

} // namespace

void validate(const QuadratureSpec &spec) {
  if (!(spec.rel_tol > 0.0 && spec.rel_tol <= 1e-2))
    throw DomainError("rel_tol must lie in (0, 1e-2]");
  if (!(spec.abs_tol >= 0.0))
    throw DomainError("abs_tol must be >= 0");
  if (!(spec.decay_scale > 0.0) || !std::isfinite(spec.decay_scale))
    throw DomainError("decay_scale must be finite and > 0");
  if (spec.max_subdivisions < 1)
    throw DomainError("max_subdivisions must be >= 1");
}

double kronrod21(const std::function<double(double)> &f, double a, double b,
                 double *gauss) {
  Evaluator eval(f);
  double err = 0.0;
  return gk21(eval, a, b, err, gauss);
}

QuadratureResult integrate_interval(const std::function<double(double)> &f,
                                    double a, double b,
                                    const QuadratureSpec &spec) {
  validate(spec);
  Evaluator eval(f);
  const auto res = refine(eval, {a, b}, spec, 0.0);
  return {res.value, res.error, eval.count()};
}

QuadratureResult integrate_semiinf(const std::function<double(double)> &f,
                                   const QuadratureSpec &spec) {
  validate(spec);
  Evaluator eval(f);
  const double s = spec.decay_scale;

  constexpr int geometric_levels = 12;
  constexpr int max_extensions = 8;
  double cutoff = 40.0 * s;
  for (int extension = 0;; ++extension) {
    // Beyond the cutoff the integrand behaves like f(X) exp(-(x - X)/s);
    // the factor 2 absorbs polynomial prefactors of moderate degree.
    const double tail = 2.0 * s * std::abs(eval(cutoff));

    std::vector<double> edges;
    edges.reserve(geometric_levels + 2);
    edges.push_back(0.0);
    for (int k = geometric_levels; k >= 0; --k)
      edges.push_back(std::ldexp(cutoff, -k));

    const auto res = refine(eval, edges, spec, tail);
    if (!res.tail_dominates)
      return {res.value, res.error + tail, eval.count()};
    if (extension == max_extensions) {
      std::ostringstream msg;
      msg.precision(6);
      msg << "integrand does not decay on the scale " << s
          << " (tail bound " << tail << " at x = " << cutoff << ")";
      throw NumericalError(msg.str(), res.value, res.error + tail);
    }
    cutoff *= 2.0;
  }
}

} // namespace cpvdw::quad
