#include "logfreeze/ensembles.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <numeric>

#include <fftw3.h>
#include <lapacke.h>

#include "logfreeze/error.hpp"

extern "C" void openblas_set_num_threads(int);

namespace logfreeze::ensembles {

namespace {

using cplx = std::complex<double>;

void single_threaded_blas() {
  // parallelism lives in the task pool
  static std::once_flag once;
  std::call_once(once, [] { openblas_set_num_threads(1); });
}

double wrap_phase(double p) {
  p = std::fmod(p, kTwoPi);
  if (p < 0.0) p += kTwoPi;
  if (p >= kTwoPi) p = 0.0;
  return p;
}

// Cayley transform H = i (I + A)^{-1} (I - A) of A = e^{i alpha} U is Hermitian with
// eigenvalues tan((phi + alpha)/2).
bool cayley_eigenvalues(const Eigen::MatrixXcd& U, double alpha, std::vector<double>& lam) {
  const Eigen::Index n = U.rows();
  const Eigen::MatrixXcd A = U * std::polar(1.0, alpha);
  const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(n, n);
  const Eigen::MatrixXcd X = (I + A).partialPivLu().solve(I - A);
  Eigen::MatrixXcd H = cplx(0.0, 0.5) * (X - X.adjoint());
  lam.assign(static_cast<std::size_t>(n), 0.0);
  const lapack_int info = LAPACKE_zheevd(LAPACK_COL_MAJOR, 'N', 'U', static_cast<lapack_int>(n),
                                         reinterpret_cast<lapack_complex_double*>(H.data()),
                                         static_cast<lapack_int>(n), lam.data());
  if (info != 0) return false;
  for (double l : lam) {
    if (!std::isfinite(l)) return false;
  }
  return true;
}

bool schur_eigenphases(const Eigen::MatrixXcd& U, std::vector<double>& phases) {
  const Eigen::Index n = U.rows();
  Eigen::MatrixXcd A = U;
  std::vector<cplx> w(static_cast<std::size_t>(n));
  lapack_int sdim = 0;
  const lapack_int info = LAPACKE_zgees(LAPACK_COL_MAJOR, 'N', 'N', nullptr, static_cast<lapack_int>(n),
                                        reinterpret_cast<lapack_complex_double*>(A.data()),
                                        static_cast<lapack_int>(n), &sdim,
                                        reinterpret_cast<lapack_complex_double*>(w.data()), nullptr,
                                        static_cast<lapack_int>(n));
  if (info != 0) return false;
  phases.clear();
  for (const auto& z : w) phases.push_back(wrap_phase(std::arg(z)));
  std::sort(phases.begin(), phases.end());
  return true;
}

}  // namespace

Eigen::MatrixXcd sample_haar_unitary(int N, Engine& eng) {
  if (N < 1 || N > 4096) throw DomainError("sample_haar_unitary: N must lie in [1, 4096]");
  single_threaded_blas();
  std::normal_distribution<double> nd(0.0, std::sqrt(0.5));
  Eigen::MatrixXcd Z(N, N);
  for (int j = 0; j < N; ++j) {
    for (int i = 0; i < N; ++i) {
      const double re = nd(eng);
      const double im = nd(eng);
      Z(i, j) = cplx(re, im);
    }
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(Z);
  Eigen::MatrixXcd Q = qr.householderQ();
  for (int j = 0; j < N; ++j) {
    const cplx d = qr.matrixQR()(j, j);
    const double a = std::abs(d);
    if (!(a > 0.0)) throw NumericalError("sample_haar_unitary: singular Ginibre draw");
    Q.col(j) *= d / a;
  }
  return Q;
}

std::vector<double> unitary_eigenphases(const Eigen::MatrixXcd& U) {
  single_threaded_blas();
  const std::size_t n = static_cast<std::size_t>(U.rows());
  std::vector<double> lam;
  std::vector<double> phases;
  // eigenvalues near -1 make I + U ill-conditioned; |tan(phi/2)| > 8N means
  // within ~1/(4N) of it. Then rotate -1 into the middle of the widest gap.
  const double lam_max = 8.0 * static_cast<double>(std::max<std::size_t>(n, 1));
  if (cayley_eigenvalues(U, 0.0, lam)) {
    phases.resize(n);
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      phases[i] = wrap_phase(2.0 * std::atan(lam[i]));
      worst = std::max(worst, std::fabs(lam[i]));
    }
    std::sort(phases.begin(), phases.end());
    if (worst <= lam_max) return phases;

    double best_gap = -1.0, mid = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double a = phases[i];
      const double b = (i + 1 < n) ? phases[i + 1] : phases[0] + kTwoPi;
      if (b - a > best_gap) {
        best_gap = b - a;
        mid = 0.5 * (a + b);
      }
    }
    const double alpha = M_PI - mid;
    if (cayley_eigenvalues(U, alpha, lam)) {
      double worst2 = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        phases[i] = wrap_phase(2.0 * std::atan(lam[i]) - alpha);
        worst2 = std::max(worst2, std::fabs(lam[i]));
      }
      std::sort(phases.begin(), phases.end());
      if (worst2 <= lam_max) return phases;
    }
  }
  if (schur_eigenphases(U, phases)) return phases;
  throw NumericalError("unitary_eigenphases: eigensolver failed");
}

std::vector<double> sample_cue_phases(int N, Engine& eng) {
  if (N < 2 || N > 4096) throw DomainError("sample_cue_phases: N must lie in [2, 4096]");
  for (int attempt = 0; attempt < 2; ++attempt) {
    try {
      return unitary_eigenphases(sample_haar_unitary(N, eng));
    } catch (const NumericalError&) {
      if (attempt == 1) throw;
    }
  }
  throw NumericalError("sample_cue_phases: unreachable");
}

std::vector<double> sample_cue_phases(int N, const Seed& seed) {
  Engine eng = make_engine(seed);
  return sample_cue_phases(N, eng);
}

std::size_t default_grid_size(int N) { return 16 * static_cast<std::size_t>(std::max(N, 1)); }

FieldGrid log_charpoly_grid(const std::vector<double>& phases, double L, std::size_t n_grid, double offset) {
  const std::size_t N = phases.size();
  if (N == 0) throw DomainError("log_charpoly_grid: empty phase vector");
  if (!(L > 0.0 && L <= kTwoPi + 1e-12)) throw DomainError("log_charpoly_grid: L must lie in (0, 2 pi]");
  if (n_grid == 0) n_grid = default_grid_size(static_cast<int>(N));
  if (n_grid < 4 * N) throw DomainError("log_charpoly_grid: n_grid must be at least 4N");

  FieldGrid g;
  g.L = L;
  g.n_grid = n_grid;
  g.offset = std::isnan(offset) ? 0.5 * L / static_cast<double>(n_grid) : offset;

  // |1 - e^{i(phi - theta)}|^2 accumulated as a mantissa/exponent pair
  std::vector<double> gr(n_grid), gi(n_grid), prod(n_grid, 1.0);
  std::vector<long> expo(n_grid, 0);
  std::vector<char> hit(n_grid, 0);
  for (std::size_t j = 0; j < n_grid; ++j) {
    const double t = g.theta(static_cast<double>(j));
    gr[j] = std::cos(t);
    gi[j] = -std::sin(t);
  }
  constexpr double kTiny = 1e-300;
  constexpr std::size_t kBlock = 8;
  for (std::size_t n0 = 0; n0 < N; n0 += kBlock) {
    const std::size_t n1 = std::min(N, n0 + kBlock);
    for (std::size_t n = n0; n < n1; ++n) {
      const double er = std::cos(phases[n]);
      const double ei = std::sin(phases[n]);
      for (std::size_t j = 0; j < n_grid; ++j) {
        const double zr = er * gr[j] - ei * gi[j];
        const double zi = er * gi[j] + ei * gr[j];
        const double a = 1.0 - zr;
        const double f = a * a + zi * zi;
        if (f < kTiny) hit[j] = 1;
        prod[j] *= std::max(f, kTiny);
      }
    }
    for (std::size_t j = 0; j < n_grid; ++j) {
      int e = 0;
      prod[j] = std::frexp(prod[j], &e);
      expo[j] += e;
    }
  }
  g.values.resize(n_grid);
  for (std::size_t j = 0; j < n_grid; ++j) {
    const double v = -(std::log(prod[j]) + static_cast<double>(expo[j]) * M_LN2);
    g.values[j] = hit[j] ? kVClamp : std::min(v, kVClamp);
  }
  return g;
}

std::vector<std::complex<double>> sample_verblunsky(int N, Engine& eng) {
  if (N < 2 || N > 4096) throw DomainError("sample_verblunsky: need 2 <= N <= 4096");
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<cplx> a(N);
  for (int k = 0; k < N; ++k) {
    const double ph = kTwoPi * u(eng);
    // |a_k|^2 ~ Beta(1, N - k - 1); the last one sits on the circle
    const double r = (k + 1 < N) ? std::sqrt(-std::expm1(std::log1p(-u(eng)) / (N - k - 1))) : 1.0;
    a[k] = std::polar(r, ph);
  }
  return a;
}

FieldGrid verblunsky_grid(const std::vector<std::complex<double>>& alpha, double L, std::size_t n_grid,
                          double offset) {
  const std::size_t N = alpha.size();
  if (N == 0) throw DomainError("verblunsky_grid: empty coefficient list");
  if (!(L > 0.0 && L <= kTwoPi + 1e-12)) throw DomainError("verblunsky_grid: L must lie in (0, 2 pi]");
  if (n_grid == 0) n_grid = default_grid_size(static_cast<int>(N));
  if (n_grid < 4 * N) throw DomainError("verblunsky_grid: n_grid must be at least 4 N");
  FieldGrid g;
  g.L = L;
  g.n_grid = n_grid;
  g.offset = std::isnan(offset) ? 0.5 * L / static_cast<double>(n_grid) : offset;

  // Szego recursion on the circle: phi <- z phi - conj(a) phis, phis <- phis - a z phi
  std::vector<double> zr(n_grid), zi(n_grid), pr(n_grid, 1.0), pi(n_grid, 0.0), qr(n_grid, 1.0), qi(n_grid, 0.0);
  std::vector<long> expo(n_grid, 0);
  for (std::size_t j = 0; j < n_grid; ++j) {
    const double t = g.theta(static_cast<double>(j));
    zr[j] = std::cos(t);
    zi[j] = std::sin(t);
  }
  constexpr std::size_t kBlock = 16;
  for (std::size_t k0 = 0; k0 < N; k0 += kBlock) {
    const std::size_t k1 = std::min(N, k0 + kBlock);
    for (std::size_t k = k0; k < k1; ++k) {
      const double ar = alpha[k].real(), ai = alpha[k].imag();
      for (std::size_t j = 0; j < n_grid; ++j) {
        const double wr = zr[j] * pr[j] - zi[j] * pi[j];
        const double wi = zr[j] * pi[j] + zi[j] * pr[j];
        const double nr = wr - (ar * qr[j] + ai * qi[j]);
        const double ni = wi - (ar * qi[j] - ai * qr[j]);
        qr[j] -= ar * wr - ai * wi;
        qi[j] -= ar * wi + ai * wr;
        pr[j] = nr;
        pi[j] = ni;
      }
    }
    for (std::size_t j = 0; j < n_grid; ++j) {
      // |phis| = |phi| on the circle, so one scale serves both
      const double m = std::max(std::fabs(qr[j]), std::fabs(qi[j]));
      if (!(m > 0.0)) continue;
      int e = 0;
      std::frexp(m, &e);
      pr[j] = std::ldexp(pr[j], -e);
      pi[j] = std::ldexp(pi[j], -e);
      qr[j] = std::ldexp(qr[j], -e);
      qi[j] = std::ldexp(qi[j], -e);
      expo[j] += e;
    }
  }
  g.values.resize(n_grid);
  for (std::size_t j = 0; j < n_grid; ++j) {
    const double m2 = pr[j] * pr[j] + pi[j] * pi[j];
    g.values[j] = (m2 < 1e-300) ? kVClamp
                                : std::min(kVClamp, -(std::log(m2) + 2.0 * static_cast<double>(expo[j]) * M_LN2));
  }
  return g;
}

FieldGrid sample_cue_field(int N, Engine& eng, double L, std::size_t n_grid, double offset) {
  return verblunsky_grid(sample_verblunsky(N, eng), L, n_grid, offset);
}

double RemSampler::covariance(int M, double W, int k, int m) {
  if (k == m) return 2.0 * std::log(static_cast<double>(M)) + W;
  return -2.0 * std::log(std::fabs(2.0 * std::sin(M_PI * static_cast<double>(k - m) / M)));
}

double RemSampler::minimal_w(int M) {
  // circulant: eigenvalues are cosine sums of the first row
  double lo = std::numeric_limits<double>::infinity();
  for (int k = 0; k < M; ++k) {
    double s = 0.0;
    for (int m = 0; m < M; ++m) s += covariance(M, 0.0, 0, m) * std::cos(kTwoPi * k * m / M);
    lo = std::min(lo, s);
  }
  return std::max(0.0, -lo);
}

RemSampler::RemSampler(int M, double W) : M_(M), W_(W) {
  if (M < 2 || M > 4096) throw DomainError("sample_circular_rem: M must lie in [2, 4096]");
  if (!(W >= 0.0)) throw DomainError("sample_circular_rem: W must be nonnegative");
  Eigen::MatrixXd C(M, M);
  for (int k = 0; k < M; ++k) {
    for (int m = 0; m < M; ++m) C(k, m) = covariance(M, W, k, m);
  }
  Eigen::LLT<Eigen::MatrixXd> llt(C);
  if (llt.info() != Eigen::Success) {
    throw NumericalError("sample_circular_rem: covariance not positive definite; W must exceed " +
                         std::to_string(minimal_w(M)));
  }
  chol_ = llt.matrixL();
}

Eigen::MatrixXd RemSampler::sample_batch(std::size_t count, Engine& eng) const {
  std::normal_distribution<double> nd;
  Eigen::MatrixXd Z(M_, static_cast<Eigen::Index>(count));
  for (Eigen::Index c = 0; c < Z.cols(); ++c) {
    for (int r = 0; r < M_; ++r) Z(r, c) = nd(eng);
  }
  return chol_.triangularView<Eigen::Lower>() * Z;
}

std::vector<double> RemSampler::sample(Engine& eng) const {
  const Eigen::MatrixXd v = sample_batch(1, eng);
  return std::vector<double>(v.data(), v.data() + M_);
}

std::vector<double> sample_circular_rem(int M, double W, const Seed& seed) {
  Engine eng = make_engine(seed);
  return RemSampler(M, W).sample(eng);
}

struct FourierSampler::Plan {
  fftw_plan plan = nullptr;
};

namespace {
std::mutex& fftw_planner_mutex() {
  static std::mutex mu;
  return mu;
}
}  // namespace

FourierSampler::FourierSampler(int K, std::size_t n_grid) : K_(K), n_grid_(n_grid), plan_(std::make_unique<Plan>()) {
  if (K < 1) throw DomainError("sample_fourier_field: K must be positive");
  if (n_grid < 2 * static_cast<std::size_t>(K)) throw DomainError("sample_fourier_field: n_grid must be at least 2K");
  std::lock_guard<std::mutex> lock(fftw_planner_mutex());
  fftw_complex* in = fftw_alloc_complex(n_grid / 2 + 1);
  double* out = fftw_alloc_real(n_grid);
  plan_->plan = fftw_plan_dft_c2r_1d(static_cast<int>(n_grid), in, out, FFTW_ESTIMATE);
  fftw_free(in);
  fftw_free(out);
  if (!plan_->plan) throw NumericalError("sample_fourier_field: FFTW planning failed");
}

FourierSampler::~FourierSampler() {
  if (plan_ && plan_->plan) {
    std::lock_guard<std::mutex> lock(fftw_planner_mutex());
    fftw_destroy_plan(plan_->plan);
  }
}

FieldGrid FourierSampler::sample(Engine& eng) const { return sample(eng, nullptr); }

FieldGrid FourierSampler::sample(Engine& eng, double* r) const {
  const std::size_t n = n_grid_;
  const std::size_t half = n / 2;
  std::normal_distribution<double> nd(0.0, std::sqrt(0.5));
  fftw_complex* in = fftw_alloc_complex(half + 1);
  double* out = fftw_alloc_real(n);
  for (std::size_t k = 0; k <= half; ++k) in[k][0] = in[k][1] = 0.0;
  double rough = 0.0;
  for (int k = 1; k <= K_; ++k) {
    const double re = nd(eng);
    const double im = nd(eng);
    const double s = 1.0 / std::sqrt(static_cast<double>(k));
    rough += 2.0 * (re * re + im * im) / k;
    if (2 * static_cast<std::size_t>(k) == n) {
      // Nyquist node: only Re v_K survives on this grid
      in[k][0] = 2.0 * re * s;
    } else {
      in[k][0] = re * s;
      in[k][1] = im * s;
    }
  }
  // c2r computes Y_0 + 2 Re sum_k Y_k e^{2 pi i jk/n} (+ Nyquist term)
  fftw_execute_dft_c2r(plan_->plan, in, out);
  FieldGrid g;
  g.L = kTwoPi;
  g.n_grid = n;
  g.offset = 0.0;
  g.values.assign(out, out + n);
  fftw_free(in);
  fftw_free(out);
  if (r) *r = rough;
  return g;
}

FieldGrid sample_fourier_field(int K, std::size_t n_grid, const Seed& seed) {
  Engine eng = make_engine(seed);
  return FourierSampler(K, n_grid).sample(eng);
}

double partition_function(const FieldGrid& field, double beta, double N_scale) {
  if (!(beta > 0.0)) throw DomainError("partition_function: beta must be positive");
  if (field.values.empty()) throw DomainError("partition_function: empty grid");
  double lo = *std::min_element(field.values.begin(), field.values.end());
  double s = 0.0;
  for (double v : field.values) s += std::exp(-beta * (v - lo));
  return std::log(N_scale / kTwoPi * field.step()) + std::log(s) - beta * lo;
}

Extremes field_extremes(const FieldGrid& field) {
  const auto& v = field.values;
  const std::size_t n = v.size();
  if (n == 0) throw DomainError("field_extremes: empty grid");
  const std::size_t j = static_cast<std::size_t>(std::min_element(v.begin(), v.end()) - v.begin());
  const double vmax = *std::max_element(v.begin(), v.end());
  Extremes e{v[j], field.theta(static_cast<double>(j)), vmax};
  const bool wrap = field.full_circle();
  if (n < 3 || (!wrap && (j == 0 || j + 1 == n))) return e;
  const double a = v[(j + n - 1) % n];
  const double c = v[(j + 1) % n];
  const double curv = a - 2.0 * v[j] + c;
  if (!(curv > 0.0)) return e;
  const double d = 0.5 * (a - c) / curv;  // in (-1/2, 1/2] since v[j] is the minimum
  e.min_v = std::min(v[j], v[j] - 0.125 * (a - c) * (a - c) / curv);
  double t = field.theta(static_cast<double>(j) + d);
  if (wrap) {
    t = std::fmod(t, kTwoPi);
    if (t < 0.0) t += kTwoPi;
  }
  e.argmin = t;
  return e;
}

double sojourn_measure(const FieldGrid& field, double x, double N_scale) {
  if (!(x > 0.0)) throw DomainError("sojourn_measure: x must be positive");
  const double nl = N_scale * field.L / kTwoPi;
  if (!(nl > 1.0)) throw DomainError("sojourn_measure: N L / 2 pi must exceed 1");
  const double level = -2.0 * x * std::log(nl);  // -V/2 > x log N_L  <=>  V < level
  std::size_t count = 0;
  for (double v : field.values) count += (v < level) ? 1 : 0;
  return static_cast<double>(count) / static_cast<double>(field.values.size());
}

std::vector<double> box_means(const FieldGrid& field, std::size_t n_boxes) {
  const std::size_t n = field.values.size();
  if (n_boxes == 0 || n % n_boxes != 0) throw ConfigError("box_coarsen: n_boxes must divide n_grid");
  const std::size_t w = n / n_boxes;
  std::vector<double> h(n_boxes, 0.0);
  for (std::size_t b = 0; b < n_boxes; ++b) {
    double s = 0.0;
    for (std::size_t j = b * w; j < (b + 1) * w; ++j) s += std::exp(-0.5 * field.values[j]);
    h[b] = s / static_cast<double>(w);
  }
  return h;
}

double box_coarsen(const FieldGrid& field, std::size_t n_boxes, double q) {
  const auto h = box_means(field, n_boxes);
  double s = 0.0;
  for (double x : h) s += std::pow(x, q);
  return s / static_cast<double>(n_boxes);
}

}  // namespace logfreeze::ensembles
