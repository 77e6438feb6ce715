#include "swipt/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace swipt {
namespace {

// 15-point Kronrod nodes/weights on [-1, 1]; the embedded 7-point Gauss rule
// sits on the odd-indexed nodes.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a, b, value, error;
};

template <class F>
Segment gk15(const F& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double kron = kWgk[7] * fc;
  double gauss = kWg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = h * kXgk[i];
    const double fsum = f(c - dx) + f(c + dx);
    kron += kWgk[i] * fsum;
    if (i % 2 == 1) gauss += kWg[i / 2] * fsum;
  }
  return {a, b, kron * h, std::abs((kron - gauss) * h)};
}

}  // namespace

QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f, double tol,
                                         double scale) {
  if (!(tol > 0.0)) throw std::invalid_argument("integrate_semi_infinite: require tol > 0");
  if (!(scale > 0.0)) throw std::invalid_argument("integrate_semi_infinite: require scale > 0");

  const auto g = [&](double t) {
    const double om = 1.0 - t;
    const double x = scale * t / om;
    return f(x) * scale / (om * om);
  };

  constexpr int kInitial = 16;
  constexpr std::size_t kMaxSegments = 4096;
  std::vector<Segment> segs;
  segs.reserve(kMaxSegments + 1);
  std::size_t evals = 0;
  for (int i = 0; i < kInitial; ++i) {
    segs.push_back(gk15(g, i / static_cast<double>(kInitial), (i + 1) / static_cast<double>(kInitial)));
    evals += 15;
  }

  const auto by_error = [](const Segment& s1, const Segment& s2) { return s1.error < s2.error; };
  std::make_heap(segs.begin(), segs.end(), by_error);

  double value = 0.0, err = 0.0;
  for (const auto& s : segs) {
    value += s.value;
    err += s.error;
  }
  if (std::isnan(value) || std::isnan(err))
    throw QuadratureError("integrate_semi_infinite: integrand produced NaN", value, err);

  while (err > std::max(tol, tol * std::abs(value))) {
    if (segs.size() >= kMaxSegments)
      throw QuadratureError(
          "integrate_semi_infinite: no convergence within the subdivision budget "
          "(error estimate " + std::to_string(err) + ")",
          value, err);
    std::pop_heap(segs.begin(), segs.end(), by_error);
    const Segment worst = segs.back();
    segs.pop_back();
    const double mid = 0.5 * (worst.a + worst.b);
    const Segment left = gk15(g, worst.a, mid);
    const Segment right = gk15(g, mid, worst.b);
    evals += 30;
    value += left.value + right.value - worst.value;
    err += left.error + right.error - worst.error;
    if (std::isnan(value) || std::isnan(err))
      throw QuadratureError("integrate_semi_infinite: integrand produced NaN", value, err);
    segs.push_back(left);
    std::push_heap(segs.begin(), segs.end(), by_error);
    segs.push_back(right);
    std::push_heap(segs.begin(), segs.end(), by_error);
  }

  // Re-sum left to right with compensation so the result does not depend on
  // the heap's refinement history.
  std::sort(segs.begin(), segs.end(), [](const Segment& s1, const Segment& s2) { return s1.a < s2.a; });
  double sum = 0.0, comp = 0.0, esum = 0.0;
  for (const auto& s : segs) {
    const double t = sum + s.value;
    if (std::abs(sum) >= std::abs(s.value))
      comp += (sum - t) + s.value;
    else
      comp += (s.value - t) + sum;
    sum = t;
    esum += s.error;
  }
  return {sum + comp, esum, evals};
}

}  // namespace swipt
