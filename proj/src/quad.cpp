#include "fqho/quad.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <queue>
#include <string>

namespace fqho {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (positive abscissae).
constexpr double kXgk[8] = {
    0.9914553711208126392068547, 0.9491079123427585245261897,
    0.8648644233597690727897128, 0.7415311855993944398638648,
    0.5860872354676911302941448, 0.4058451513773971669066064,
    0.2077849550078984676006894, 0.0};
constexpr double kWgk[8] = {
    0.0229353220105292249637320, 0.0630920926299785532907007,
    0.1047900103222501838398763, 0.1406532597155259187451896,
    0.1690047266392679028265834, 0.1903505780647854099132564,
    0.2044329400752988924141620, 0.2094821410847278280129992};
constexpr double kWg[4] = {
    0.1294849661688696932706114, 0.2797053914892766679014678,
    0.3818300505051189449503698, 0.4179591836734693877551020};

constexpr double kEps = 2.220446049250313e-16;
constexpr int kMaxPanels = 1 << 15;

struct PanelEval {
  double value = 0.0;
  double error = 0.0;
};

PanelEval gk15(const std::function<double(double)>& f, double a, double b,
               long& evaluations) {
  double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double fc = f(c);
  evaluations += 15;
  double resg = fc * kWg[3];
  double resk = fc * kWgk[7];
  double resabs = std::abs(resk);
  double fv1[7], fv2[7];
  for (int j = 0; j < 7; ++j) {
    double dx = h * kXgk[j];
    fv1[j] = f(c - dx);
    fv2[j] = f(c + dx);
    double fsum = fv1[j] + fv2[j];
    resk += kWgk[j] * fsum;
    if (j % 2 == 1) resg += kWg[(j - 1) / 2] * fsum;
    resabs += kWgk[j] * (std::abs(fv1[j]) + std::abs(fv2[j]));
  }
  double reskh = 0.5 * resk;
  double resasc = kWgk[7] * std::abs(fc - reskh);
  for (int j = 0; j < 7; ++j)
    resasc += kWgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));
  double ah = std::abs(h);
  resabs *= ah;
  resasc *= ah;
  PanelEval out;
  out.value = resk * h;
  double err = std::abs((resk - resg) * h);
  if (resasc != 0.0 && err != 0.0)
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  if (resabs > 0.0) err = std::max(err, 50.0 * kEps * resabs);
  out.error = err;
  return out;
}

double pairwise_sum(const double* v, size_t n) {
  if (n == 0) return 0.0;
  if (n <= 8) {
    double s = 0.0;
    for (size_t i = 0; i < n; ++i) s += v[i];
    return s;
  }
  size_t half = n / 2;
  return pairwise_sum(v, half) + pairwise_sum(v + half, n - half);
}

struct Piece {
  std::shared_ptr<std::function<double(double)>> g;  // transformed integrand
  double u0 = 0.0, u1 = 0.0;                         // local coordinates
};

// Power substitution for a singular left endpoint: t = L + u^q, q = 1/(1+e).
Piece left_hinted_piece(const std::function<double(double)>& f, double L,
                        double R, double e) {
  double q = 1.0 / (1.0 + e);
  double umax = std::pow(R - L, 1.0 + e);
  auto g = std::make_shared<std::function<double(double)>>(
      [&f, L, q](double u) {
        return f(L + std::pow(u, q)) * q * std::pow(u, q - 1.0);
      });
  return {std::move(g), 0.0, umax};
}

Piece right_hinted_piece(const std::function<double(double)>& f, double L,
                         double R, double e) {
  double q = 1.0 / (1.0 + e);
  double umax = std::pow(R - L, 1.0 + e);
  auto g = std::make_shared<std::function<double(double)>>(
      [&f, R, q](double u) {
        return f(R - std::pow(u, q)) * q * std::pow(u, q - 1.0);
      });
  return {std::move(g), 0.0, umax};
}

Piece plain_piece(const std::function<double(double)>& f, double L, double R) {
  auto g = std::make_shared<std::function<double(double)>>(
      [&f](double t) { return f(t); });
  return {std::move(g), L, R};
}

// Far piece [S, inf) via t = S + u/(1-u), u in [0, 1).
Piece mapped_tail_piece(const std::function<double(double)>& f, double S) {
  auto g = std::make_shared<std::function<double(double)>>([&f, S](double u) {
    double om = 1.0 - u;
    double t = S + u / om;
    double val = f(t);
    if (val == 0.0) return 0.0;
    return val / (om * om);
  });
  return {std::move(g), 0.0, 1.0};
}

struct Segment {
  std::shared_ptr<std::function<double(double)>> g;
  int piece = 0;
  double a = 0.0, b = 0.0;
  double value = 0.0, error = 0.0;
};

}  // namespace

NonIntegrableError::NonIntegrableError(double location, double exponent)
    : std::domain_error("integrand exponent " + std::to_string(exponent) +
                        " at t = " + std::to_string(location) +
                        " is not integrable"),
      location_(location),
      exponent_(exponent) {}

QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, Tolerance tol,
                           std::vector<SingularityHint> hints) {
  if (std::isnan(a) || std::isnan(b) || a > b || std::isinf(a))
    throw std::invalid_argument("bad integration interval");
  if (!(tol.abs_tol > 0.0) || !(tol.rel_tol >= 0.0))
    throw std::invalid_argument("tolerances must be positive");
  for (const SingularityHint& h : hints) {
    if (std::isnan(h.location) || std::isinf(h.location) || h.location < a ||
        h.location > b)
      throw std::invalid_argument("singularity hint outside the interval");
    if (h.exponent <= -1.0) throw NonIntegrableError(h.location, h.exponent);
  }
  if (a == b) return {0.0, 0.0, 0, true};

  std::sort(hints.begin(), hints.end(),
            [](const SingularityHint& x, const SingularityHint& y) {
              if (x.location != y.location) return x.location < y.location;
              return x.exponent < y.exponent;
            });
  hints.erase(std::unique(hints.begin(), hints.end(),
                          [](const SingularityHint& x, const SingularityHint& y) {
                            return x.location == y.location;
                          }),
              hints.end());

  bool infinite = std::isinf(b);
  double finite_end = b;
  if (infinite)
    finite_end = (hints.empty() ? a : hints.back().location) + 1.0;

  // Breakpoints partition [a, finite_end]; each resulting piece carries at
  // most one hinted endpoint after midpoint splitting.
  std::vector<double> cuts = {a};
  for (const SingularityHint& h : hints)
    if (h.location > a && h.location < finite_end) cuts.push_back(h.location);
  cuts.push_back(finite_end);

  auto hint_at = [&hints](double loc) -> double {
    for (const SingularityHint& h : hints)
      if (h.location == loc) return h.exponent;
    return 0.0;
  };

  std::vector<Piece> pieces;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    double L = cuts[i], R = cuts[i + 1];
    double eL = hint_at(L), eR = hint_at(R);
    if (eL != 0.0 && eR != 0.0) {
      double M = 0.5 * (L + R);
      pieces.push_back(left_hinted_piece(f, L, M, eL));
      pieces.push_back(right_hinted_piece(f, M, R, eR));
    } else if (eL != 0.0) {
      pieces.push_back(left_hinted_piece(f, L, R, eL));
    } else if (eR != 0.0) {
      pieces.push_back(right_hinted_piece(f, L, R, eR));
    } else {
      pieces.push_back(plain_piece(f, L, R));
    }
  }
  if (infinite) pieces.push_back(mapped_tail_piece(f, finite_end));

  long evaluations = 0;
  std::vector<Segment> segs;
  for (size_t i = 0; i < pieces.size(); ++i) {
    Segment s;
    s.g = pieces[i].g;
    s.piece = static_cast<int>(i);
    s.a = pieces[i].u0;
    s.b = pieces[i].u1;
    PanelEval pe = gk15(*s.g, s.a, s.b, evaluations);
    s.value = pe.value;
    s.error = pe.error;
    segs.push_back(std::move(s));
  }

  // Worst-error-first refinement; ties broken by insertion order so the
  // subdivision sequence is deterministic.
  using HeapItem = std::pair<double, size_t>;
  auto cmp = [](const HeapItem& x, const HeapItem& y) {
    if (x.first != y.first) return x.first < y.first;
    return x.second > y.second;
  };
  std::priority_queue<HeapItem, std::vector<HeapItem>, decltype(cmp)> heap(cmp);
  double total_value = 0.0, total_error = 0.0;
  for (size_t i = 0; i < segs.size(); ++i) {
    heap.push({segs[i].error, i});
    total_value += segs[i].value;
    total_error += segs[i].error;
  }
  // LIVE segments sit in the heap; SPLIT ones were replaced by children;
  // FROZEN ones are too narrow to split but still count toward the result.
  enum : char { LIVE = 0, SPLIT = 1, FROZEN = 2 };
  std::vector<char> status(segs.size(), LIVE);
  int since_refresh = 0;

  auto tol_met = [&] {
    return total_error <= std::max(tol.abs_tol,
                                   tol.rel_tol * std::abs(total_value));
  };

  while (!tol_met() && !heap.empty() &&
         static_cast<int>(segs.size()) < kMaxPanels) {
    auto [err, idx] = heap.top();
    heap.pop();
    if (status[idx] != LIVE) continue;
    double mid = 0.5 * (segs[idx].a + segs[idx].b);
    if (!(mid > segs[idx].a && mid < segs[idx].b)) {
      status[idx] = FROZEN;  // cannot split further at this precision
      continue;
    }
    Segment left{segs[idx].g, segs[idx].piece, segs[idx].a, mid, 0.0, 0.0};
    Segment right{segs[idx].g, segs[idx].piece, mid, segs[idx].b, 0.0, 0.0};
    PanelEval pl = gk15(*left.g, left.a, left.b, evaluations);
    PanelEval pr = gk15(*right.g, right.a, right.b, evaluations);
    left.value = pl.value;
    left.error = pl.error;
    right.value = pr.value;
    right.error = pr.error;
    total_value += left.value + right.value - segs[idx].value;
    total_error += left.error + right.error - segs[idx].error;
    status[idx] = SPLIT;
    segs.push_back(std::move(left));
    status.push_back(LIVE);
    heap.push({segs.back().error, segs.size() - 1});
    segs.push_back(std::move(right));
    status.push_back(LIVE);
    heap.push({segs.back().error, segs.size() - 1});

    // Periodically resum to shed the drift of incremental updates.
    if (++since_refresh >= 256) {
      since_refresh = 0;
      total_value = total_error = 0.0;
      for (size_t i = 0; i < segs.size(); ++i) {
        if (status[i] == SPLIT) continue;
        total_value += segs[i].value;
        total_error += segs[i].error;
      }
    }
  }

  std::vector<Segment> live;
  live.reserve(segs.size());
  for (size_t i = 0; i < segs.size(); ++i)
    if (status[i] != SPLIT) live.push_back(segs[i]);
  std::sort(live.begin(), live.end(), [](const Segment& x, const Segment& y) {
    if (x.piece != y.piece) return x.piece < y.piece;
    return x.a < y.a;
  });
  std::vector<double> vals, errs;
  vals.reserve(live.size());
  errs.reserve(live.size());
  for (const Segment& s : live) {
    vals.push_back(s.value);
    errs.push_back(s.error);
  }
  QuadratureResult out;
  out.value = pairwise_sum(vals.data(), vals.size());
  out.error_estimate = pairwise_sum(errs.data(), errs.size());
  out.evaluations = evaluations;
  if (!std::isfinite(out.value) || !std::isfinite(out.error_estimate)) {
    out.error_estimate = std::numeric_limits<double>::infinity();
    out.converged = false;
    return out;
  }
  out.converged = out.error_estimate <=
                  std::max(tol.abs_tol, tol.rel_tol * std::abs(out.value));
  return out;
}

double envelope_cutoff(const TailEnvelope& envelope) {
  if (!(envelope.rate > 0.0) || !(envelope.power > 0.0))
    throw std::invalid_argument("envelope rate and power must be positive");
  constexpr double kLogTiny = 41.5;  // -ln(1e-18)
  double t = std::pow(kLogTiny / envelope.rate, 1.0 / envelope.power);
  for (int i = 0; i < 8; ++i) {
    double target =
        kLogTiny + envelope.poly_degree * std::log(std::max(t, 2.0));
    t = std::pow(std::max(target, kLogTiny) / envelope.rate,
                 1.0 / envelope.power);
  }
  return std::max(t, 1.0);
}

QuadratureResult integrate_semiinfinite(
    const std::function<double(double)>& f, Symmetry symmetry, Tolerance tol,
    std::vector<SingularityHint> hints, std::optional<TailEnvelope> envelope) {
  if (symmetry == Symmetry::odd) return {0.0, 0.0, 0, true};
  for (const SingularityHint& h : hints)
    if (h.location < 0.0)
      throw std::invalid_argument("half-line hint location must be >= 0");
  double upper = envelope ? envelope_cutoff(*envelope) : kInfinity;
  Tolerance half_tol{0.5 * tol.abs_tol, tol.rel_tol};
  QuadratureResult r = integrate(f, 0.0, upper, half_tol, std::move(hints));
  r.value *= 2.0;
  r.error_estimate *= 2.0;
  return r;
}

}  // namespace fqho
