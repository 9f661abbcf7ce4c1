#include "hgmono/mb_numeric.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <queue>

#include "hgmono/errors.hpp"
#include "hgmono/unipotent.hpp"

namespace hgm {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI(0.0, 1.0);
const cplx kTwoPiI(0.0, 2.0 * std::numbers::pi);

// Lanczos, g = 7, nine terms.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

void check_pole(cplx z) {
  if (z.real() <= 0.5 && std::abs(z.imag()) < 1e-12) {
    double r = std::round(z.real());
    if (r <= 0 && std::abs(z.real() - r) < 1e-12) throw PoleAtNonpositiveInteger("Gamma has a pole at " + std::to_string(r));
  }
}

cplx lanczos_log(cplx z) {
  z -= 1.0;
  cplx x = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) x += kLanczos[i] / (z + static_cast<double>(i));
  cplx t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

double pow_int(double x, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

}  // namespace

cplx log_sin_pi(cplx z) {
  const double y = z.imag();
  if (y > 5.0) return -kI * kPi * z + std::log(0.5 * kI) + std::log(1.0 - std::exp(2.0 * kPi * kI * z));
  if (y < -5.0) return kI * kPi * z + std::log(-0.5 * kI) + std::log(1.0 - std::exp(-2.0 * kPi * kI * z));
  return std::log(std::sin(kPi * z));
}

cplx log_gamma_complex(cplx z) {
  check_pole(z);
  if (z.real() < 0.5) return std::log(kPi) - log_sin_pi(z) - lanczos_log(1.0 - z);
  return lanczos_log(z);
}

cplx gamma_complex(cplx z) {
  check_pole(z);
  if (z.real() < 0.5) return kPi / (std::sin(kPi * z) * std::exp(lanczos_log(1.0 - z)));
  return std::exp(lanczos_log(z));
}

double polygamma(int m, double x) {
  if (m < 0) throw std::invalid_argument("polygamma order must be >= 0");
  if (!(x > 0.0)) throw std::invalid_argument("polygamma: x must be positive");
  const double sgn = (m % 2 == 0) ? -1.0 : 1.0;  // (-1)^{m+1}
  double mfact = 1.0;
  for (int i = 2; i <= m; ++i) mfact *= i;
  double acc = 0.0;
  // psi^{(m)}(x) = psi^{(m)}(x + 1) + (-1)^{m+1} m! / x^{m+1}
  while (x < 20.0) {
    acc += sgn * mfact / pow_int(x, m + 1);
    x += 1.0;
  }
  double asym;
  if (m == 0) {
    asym = std::log(x) - 0.5 / x;
    for (int k = 1; k <= 10; ++k) asym -= bernoulli(2 * k).to_double() / (2.0 * k * pow_int(x, 2 * k));
  } else {
    double mm1 = mfact / m;  // (m-1)!
    asym = mm1 / pow_int(x, m) + mfact / (2.0 * pow_int(x, m + 1));
    double f = mm1;  // (2k + m - 1)! / (2k)!, built incrementally
    for (int k = 1; k <= 10; ++k) {
      f *= static_cast<double>((2 * k + m - 2) * (2 * k + m - 1)) / static_cast<double>((2 * k - 1) * (2 * k));
      asym += bernoulli(2 * k).to_double() * f / pow_int(x, 2 * k + m);
    }
    asym *= sgn;
  }
  return acc + asym;
}

double zeta_numeric(int k) {
  if (k < 2) throw std::invalid_argument("zeta_numeric: k must be >= 2");
  constexpr int N = 100000;
  double sum = 0.0;
  for (int i = N; i >= 1; --i) sum += std::pow(static_cast<double>(i), -k);
  const double n = N;
  // sum_{i > N} i^{-k} by Euler-Maclaurin
  double tail = std::pow(n, 1.0 - k) / (k - 1) - 0.5 * std::pow(n, -k) + k / 12.0 * std::pow(n, -k - 1.0);
  return sum + tail;
}

cplx log_branch(cplx z) {
  if (z.imag() == 0.0 && z.real() >= 0.0) throw InvalidInput("z must not lie on the nonnegative real axis");
  double arg = std::arg(z);
  if (arg <= 0.0) arg += 2.0 * kPi;
  return {std::log(std::abs(z)), arg};
}

ContourSpec default_contour(std::span<const double> alphas, std::span<const double> betas) {
  if (alphas.empty() || alphas.size() != betas.size()) throw InvalidInput("need n alphas and n betas");
  double lo = -*std::min_element(alphas.begin(), alphas.end());
  double hi = 1.0 - *std::max_element(betas.begin(), betas.end());
  if (!(lo < hi)) throw ContourInvalid("no vertical line separates the pole families");
  ContourSpec c;
  c.sigma = 0.5 * (lo + hi);
  return c;
}

cplx mb_integrand(int j, cplx s, cplx log_z, std::span<const double> alphas, std::span<const double> betas) {
  const int n = static_cast<int>(alphas.size());
  cplx lg = 0.0;
  for (double a : alphas) lg += log_gamma_complex(a + s);
  for (double b : betas) lg += log_gamma_complex(1.0 - b - s);
  lg += static_cast<double>(2 * j - n) * kPi * kI * s + s * log_z;
  cplx pref = std::pow(-1.0, n) / std::pow(kTwoPiI, n);
  return pref * std::exp(lg);
}

namespace {

// 15-point Gauss-Kronrod with embedded 7-point Gauss rule.
constexpr std::array<double, 8> kXgk = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                                        0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                                        0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                                        0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                                        0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                                        0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                                        0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                       0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class F>
void gk15(const F& f, double a, double b, cplx& result, double& error) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  cplx fc = f(c);
  cplx rk = fc * kWgk[7], rg = fc * kWg[3];
  for (int i = 0; i < 7; ++i) {
    cplx f1 = f(c - h * kXgk[static_cast<std::size_t>(i)]), f2 = f(c + h * kXgk[static_cast<std::size_t>(i)]);
    rk += kWgk[static_cast<std::size_t>(i)] * (f1 + f2);
    if (i % 2 == 1) rg += kWg[static_cast<std::size_t>(i / 2)] * (f1 + f2);
  }
  result = rk * h;
  error = std::abs((rk - rg) * h);
}

// Globally adaptive: repeatedly bisect the interval with the largest error
// estimate until the total estimate meets the tolerance.
template <class F>
cplx adaptive(const F& f, double a, double b, double abs_tol) {
  struct Piece {
    double a, b;
    cplx value;
    double error;
    bool operator<(const Piece& o) const { return error < o.error; }
  };
  std::priority_queue<Piece> heap;
  Piece p{a, b, 0.0, 0.0};
  gk15(f, a, b, p.value, p.error);
  heap.push(p);
  cplx total = p.value;
  double error = p.error;
  for (int iter = 0; error > abs_tol && iter < 2000; ++iter) {
    Piece worst = heap.top();
    heap.pop();
    const double m = 0.5 * (worst.a + worst.b);
    Piece left{worst.a, m, 0.0, 0.0}, right{m, worst.b, 0.0, 0.0};
    gk15(f, left.a, left.b, left.value, left.error);
    gk15(f, right.a, right.b, right.value, right.error);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }
  if (error > abs_tol) throw NotConverged("quadrature did not reach the requested tolerance");
  return total;
}

}  // namespace

cplx mb_integral_quadrature(int j, cplx z, std::span<const double> alphas, std::span<const double> betas,
                            const ContourSpec& contour) {
  const int n = static_cast<int>(alphas.size());
  if (n == 0 || betas.size() != alphas.size()) throw InvalidInput("need n alphas and n betas");
  if (j < 0 || j >= n) throw InvalidInput("index j out of range");
  const double sigma = contour.sigma;
  for (double a : alphas)
    if (!(-a < sigma)) throw ContourInvalid("pole -alpha lies right of the contour");
  for (double b : betas)
    if (!(sigma < 1.0 - b)) throw ContourInvalid("pole 1 - beta lies left of the contour");
  const cplx log_z = log_branch(z);
  auto g = [&](double t) { return mb_integrand(j, cplx(sigma, t), log_z, alphas, betas); };

  // Scale from the central part of the integrand.
  double peak = 0.0;
  for (int i = -20; i <= 20; ++i) peak = std::max(peak, std::abs(g(0.25 * i)));
  const double theta = log_z.imag();
  const double rate_up = 2.0 * kPi * j + theta, rate_down = 2.0 * kPi * (n - j) - theta;
  // Tail cut and error target are relative to `scale`.
  auto integrate = [&](double scale) {
    auto height = [&](double sign, double rate) {
      if (contour.t_max > 0.0) return contour.t_max;
      double t = 1.0;
      while (std::abs(g(sign * t)) / rate > contour.tol * 1e-2 * scale ||
             std::abs(g(sign * (t + 0.5))) / rate > contour.tol * 1e-2 * scale) {
        t += 1.0;
        if (t > 1e3) throw TailNotConverged("integrand does not decay below tolerance by |t| = 1000");
      }
      return t;
    };
    const double t_up = height(1.0, rate_up), t_down = height(-1.0, rate_down);
    const double abs_tol = contour.tol * scale;
    cplx total = 0.0;
    for (double a = -t_down; a < t_up; a += 1.0) {
      double b = std::min(a + 1.0, t_up);
      total += adaptive(g, a, b, abs_tol / (t_up + t_down));
    }
    return total;
  };
  // A first pass against the peak, then a second one against the integral
  // itself when the integrand is much larger (contour close to a pole).
  cplx total = integrate(peak);
  const double scale = std::max(std::abs(total), 1e-5 * peak);
  if (scale < 0.1 * peak) total = integrate(scale);
  // ds = i dt, traversed from +i infinity to -i infinity
  return -kI * total;
}

namespace {

bool all_betas_one(std::span<const double> betas) {
  return std::all_of(betas.begin(), betas.end(), [](double b) { return std::abs(b - 1.0) < 1e-15; });
}

double max_abs(const Jet<cplx>& j) {
  double m = 0.0;
  for (const auto& c : j.coeffs()) m = std::max(m, std::abs(c));
  return m;
}

// S(eps) = z^eps sum_m A_m(eps) (scale z)^m with
// A_m = A_{m-1} prod (eps + m - 1 + alpha_k) / (eps + m)^n.
Jet<cplx> frobenius_generating_jet(std::span<const double> alphas, double scale, cplx z, int order, int terms) {
  const std::size_t len = static_cast<std::size_t>(order);
  const cplx log_z = log_branch(z);
  Jet<cplx> a = Jet<cplx>::one(len), sum = Jet<cplx>::one(len);
  cplx zm = 1.0;
  int small = 0;
  for (int m = 1; m < terms; ++m) {
    Jet<cplx> num = Jet<cplx>::one(len), den = Jet<cplx>::one(len);
    for (double al : alphas) {
      Jet<cplx> f(len);
      f[0] = m - 1 + al;
      if (len > 1) f[1] = 1.0;
      num = num * f;
    }
    Jet<cplx> e(len);
    e[0] = static_cast<double>(m);
    if (len > 1) e[1] = 1.0;
    for (std::size_t k = 0; k < alphas.size(); ++k) den = den * e;
    a = a * num * jet_inverse(den);
    zm *= scale * z;
    Jet<cplx> term = zm * a;
    sum = sum + term;
    if (max_abs(term) < 1e-18 * max_abs(sum)) {
      if (++small >= 3) return sum * Jet<cplx>::exponential(len, log_z);
    } else {
      small = 0;
    }
  }
  throw NotConverged("Frobenius series did not converge within the term limit");
}

// Taylor jet in eps of prod Gamma(alpha_k + eps) Gamma(1 - eps)^n.
Jet<cplx> gamma_product_jet(std::span<const double> alphas, int order) {
  const std::size_t len = static_cast<std::size_t>(order);
  const int n = static_cast<int>(alphas.size());
  Jet<cplx> lg(len);
  double fact = 1.0;
  for (int p = 1; p < order; ++p) {
    fact *= p;
    double c = 0.0;
    for (double a : alphas) c += polygamma(p - 1, a);
    c += n * polygamma(p - 1, 1.0) * ((p % 2 == 0) ? 1.0 : -1.0);
    lg[static_cast<std::size_t>(p)] = c / fact;
  }
  cplx base = 1.0;
  for (double a : alphas) base *= gamma_complex(a);
  return base * jet_exp(lg);
}

cplx residues_unipotent(int j, cplx z, std::span<const double> alphas, int terms) {
  const int n = static_cast<int>(alphas.size());
  Jet<cplx> s = frobenius_generating_jet(alphas, 1.0, z, n, terms);
  Jet<cplx> phi = gamma_product_jet(alphas, n);
  Jet<cplx> e = Jet<cplx>::exponential(static_cast<std::size_t>(n), static_cast<double>(2 * j - n) * kPi * kI);
  Jet<cplx> prod = phi * e * s;
  return prod[static_cast<std::size_t>(n - 1)] / std::pow(kTwoPiI, n - 1);
}

cplx residues_nonresonant(int j, cplx z, std::span<const double> alphas, std::span<const double> betas, int terms) {
  const int n = static_cast<int>(alphas.size());
  const cplx log_z = log_branch(z);
  const cplx pref = kTwoPiI * std::pow(-1.0, n) / std::pow(kTwoPiI, n);
  cplx total = 0.0;
  for (int l = 0; l < n; ++l) {
    cplx sum = 0.0;
    int small = 0;
    bool done = false;
    for (int m = 0; m < terms; ++m) {
      const double s0 = 1.0 - betas[static_cast<std::size_t>(l)] + m;
      cplx lg = -log_gamma_complex(m + 1.0);
      for (double a : alphas) lg += log_gamma_complex(a + s0);
      for (int p = 0; p < n; ++p)
        if (p != l) lg += log_gamma_complex(1.0 - betas[static_cast<std::size_t>(p)] - s0);
      lg += static_cast<double>(2 * j - n) * kPi * kI * s0 + s0 * log_z;
      // residue of Gamma(1 - beta_l - s) at s0 is -(-1)^m / m!
      cplx term = -((m % 2 == 0) ? 1.0 : -1.0) * std::exp(lg);
      sum += term;
      if (std::abs(term) < 1e-18 * std::abs(sum)) {
        if (++small >= 3) {
          done = true;
          break;
        }
      } else {
        small = 0;
      }
    }
    if (!done) throw NotConverged("residue series did not converge within the term limit");
    total += sum;
  }
  return pref * total;
}

}  // namespace

cplx mb_integral_residues(int j, cplx z, std::span<const double> alphas, std::span<const double> betas, int terms) {
  const int n = static_cast<int>(alphas.size());
  if (n == 0 || betas.size() != alphas.size()) throw InvalidInput("need n alphas and n betas");
  if (j < 0 || j >= n) throw InvalidInput("index j out of range");
  if (!(std::abs(z) < 1.0)) throw InvalidInput("residue route requires |z| < 1");
  if (all_betas_one(betas)) return residues_unipotent(j, z, alphas, terms);
  for (int l = 0; l < n; ++l)
    for (int p = 0; p < l; ++p) {
      double d = betas[static_cast<std::size_t>(l)] - betas[static_cast<std::size_t>(p)];
      if (std::abs(d - std::round(d)) < 1e-9) throw ResonantInput("betas must be distinct modulo 1");
    }
  return residues_nonresonant(j, z, alphas, betas, terms);
}

std::vector<cplx> frobenius_eval_unipotent(std::span<const double> alphas, bool c_normalized, double C, cplx z,
                                           int terms) {
  const int n = static_cast<int>(alphas.size());
  const double radius = c_normalized ? 1.0 / C : 1.0;
  if (!(std::abs(z) < radius)) throw InvalidInput("z lies outside the series disc");
  Jet<cplx> s = frobenius_generating_jet(alphas, c_normalized ? C : 1.0, z, n, terms);
  std::vector<cplx> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int j = n - 1 - i;
    out[static_cast<std::size_t>(i)] = s[static_cast<std::size_t>(j)] / std::pow(kTwoPiI, j);
  }
  return out;
}

std::vector<cplx> frobenius_eval_nonresonant(std::span<const double> alphas, std::span<const double> betas, cplx z,
                                             int terms) {
  const int n = static_cast<int>(alphas.size());
  if (!(std::abs(z) < 1.0)) throw InvalidInput("z lies outside the series disc");
  const cplx log_z = log_branch(z);
  std::vector<cplx> out;
  for (int l = 0; l < n; ++l) {
    const double bl = betas[static_cast<std::size_t>(l)];
    cplx term = 1.0, sum = 1.0;
    int small = 0;
    bool done = false;
    for (int m = 1; m < terms; ++m) {
      cplx ratio = z;
      for (double a : alphas) ratio *= a - bl + m;
      for (double b : betas) ratio /= b - bl + m;
      term *= ratio;
      sum += term;
      if (std::abs(term) < 1e-18 * std::abs(sum)) {
        if (++small >= 3) {
          done = true;
          break;
        }
      } else {
        small = 0;
      }
    }
    if (!done) throw NotConverged("Frobenius series did not converge within the term limit");
    out.push_back(std::exp((1.0 - bl) * log_z) * sum);
  }
  return out;
}

GeneratorValues numeric_generators(double C, int max_odd) {
  GeneratorValues gv;
  gv.values.push_back(std::log(C) / kTwoPiI);
  for (int k = 3; k <= max_odd; k += 2) gv.values.push_back(zeta_numeric(k) / std::pow(kTwoPiI, k));
  return gv;
}

VerifyReport verify_T(std::span<const BigRational> alphas, cplx z, double tol, bool normalized, int terms) {
  auto p = UnipotentProblem::from_alphas(alphas);
  const int n = p.n;
  std::vector<double> a, b(static_cast<std::size_t>(n), 1.0);
  for (const auto& al : p.alphas) a.push_back(al.to_double());
  const double C = p.C.get_d();

  FieldMatrix t = t_matrix(p.q, n, normalized ? Normalization::CNormalized : Normalization::Raw);
  GeneratorValues gv = numeric_generators(C, std::max(3, n));
  std::vector<cplx> f = frobenius_eval_unipotent(a, normalized, C, normalized ? z / C : z, terms);

  ContourSpec contour = default_contour(a, b);
  contour.tol = tol;
  cplx gamma_norm = 1.0;
  for (double al : a) gamma_norm *= gamma_complex(al);

  VerifyReport r;
  double scale = 0.0, worst = 0.0;
  for (int k = 0; k < n; ++k) {
    cplx lhs = mb_integral_quadrature(k, z, a, b, contour) / gamma_norm;
    cplx rhs = 0.0;
    for (int l = 0; l < n; ++l) rhs += t(k, l).evaluate(gv) * f[static_cast<std::size_t>(l)];
    r.lhs.push_back(lhs);
    r.rhs.push_back(rhs);
    scale = std::max(scale, std::abs(lhs));
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  r.residual = worst / scale;
  return r;
}

}  // namespace hgm
