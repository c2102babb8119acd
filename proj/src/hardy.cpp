#include "lfh/hardy.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>

#include "lfh/error.hpp"

namespace lfh {

OperatorMatrix::OperatorMatrix(Matrix entries, int trusted_block, std::string tag)
    : entries_(std::move(entries)), trusted_block_(trusted_block), tag_(std::move(tag)) {
  if (entries_.rows() != entries_.cols()) {
    throw Error(ErrorCode::OrderMismatch, "operator matrix must be square");
  }
  if (!entries_.allFinite()) throw Error(ErrorCode::NonFiniteValue, "operator matrix entry");
  if (trusted_block_ < 0 || trusted_block_ > entries_.rows()) {
    throw Error(ErrorCode::InvalidArgument, "trusted block exceeds the order");
  }
}

Matrix OperatorMatrix::block(int b) const {
  if (b < 0) b = trusted_block_;
  return entries_.topLeftCorner(b, b);
}

OperatorMatrix OperatorMatrix::capped(int cap) const {
  return OperatorMatrix(entries_, std::min(trusted_block_, cap), tag_);
}

double block_norm(const Matrix& m, int b) { return m.topLeftCorner(b, b).norm(); }

Complex inner_product(const TruncatedSeries& f, const TruncatedSeries& g) {
  if (f.order() != g.order()) throw Error(ErrorCode::OrderMismatch, "inner product orders");
  Complex acc{};
  for (std::size_t k = 0; k < f.size(); ++k) acc += f[k] * std::conj(g[k]);
  return acc;
}

Complex inner_product(const Vector& f, const Vector& g) {
  if (f.size() != g.size()) throw Error(ErrorCode::OrderMismatch, "inner product lengths");
  return g.dot(f);
}

Vector to_vector(const TruncatedSeries& s) {
  Vector v(static_cast<Eigen::Index>(s.size()));
  for (std::size_t k = 0; k < s.size(); ++k) v(static_cast<Eigen::Index>(k)) = s[k];
  return v;
}

TruncatedSeries to_series(const Vector& v) {
  return TruncatedSeries(static_cast<int>(v.size()) - 1, std::vector<Complex>(v.begin(), v.end()));
}

KernelVectorU kernel_K(Complex alpha, int n) {
  if (std::abs(alpha) >= 1.0) throw Error(ErrorCode::AlphaOutsideDisc, "|alpha| >= 1");
  std::vector<Complex> c(static_cast<std::size_t>(n));
  Complex p = 1.0;
  for (auto& x : c) {
    x = p;
    p *= std::conj(alpha);
  }
  return {alpha, TruncatedSeries(n - 1, std::move(c))};
}

int estimate_trusted_block(const Matrix& m, double tail_tol) {
  const Eigen::Index n = m.rows();
  const Eigen::Index tail = (3 * n) / 4;
  const double thresh = tail_tol * std::max(1.0, m.cwiseAbs().maxCoeff());
  int b = 0;
  for (Eigen::Index j = 0; j < n / 2; ++j) {
    const double col = m.col(j).tail(n - tail).norm();
    const double row = m.row(j).tail(n - tail).norm();
    if (col > thresh || row > thresh) break;
    ++b;
  }
  return std::max(b, 1);
}

namespace {

Matrix power_columns(const TruncatedSeries& phi, int n) {
  const TruncatedSeries base = phi.resized(n - 1);
  Matrix out = Matrix::Zero(n, n);
  TruncatedSeries p = TruncatedSeries::constant(n - 1, 1.0);
  for (int k = 0; k < n; ++k) {
    out.col(k) = to_vector(p);
    if (k + 1 < n) p = p * base;
  }
  return out;
}

}  // namespace

OperatorMatrix composition_matrix(const MobiusMap& phi, int n) {
  const auto cert = mobius_is_disc_selfmap(phi);
  if (cert.verdict == SelfMapVerdict::no) {
    throw Error(ErrorCode::NotDiscSelfMap, "composition symbol is not a disc self-map");
  }
  Matrix m = power_columns(mobius_taylor(phi, n - 1), n);
  const int b = estimate_trusted_block(m);
  return OperatorMatrix(std::move(m), b, "composition");
}

OperatorMatrix composition_matrix(const TruncatedSeries& phi, int n) {
  if (phi.order() < n - 1) throw Error(ErrorCode::OrderMismatch, "symbol series too short");
  if (std::abs(phi[0]) >= 1.0) throw Error(ErrorCode::NotDiscSelfMap, "|phi(0)| >= 1");
  Matrix m = power_columns(phi, n);
  const int b = estimate_trusted_block(m);
  return OperatorMatrix(std::move(m), b, "composition");
}

OperatorMatrix multiplication_matrix(const TruncatedSeries& psi, int n) {
  const TruncatedSeries w = psi.resized(n - 1);
  Matrix m = Matrix::Zero(n, n);
  for (int col = 0; col < n; ++col) {
    for (int row = col; row < n; ++row) m(row, col) = w[static_cast<std::size_t>(row - col)];
  }
  const int b = estimate_trusted_block(m);
  return OperatorMatrix(std::move(m), b, "multiplication");
}

OperatorMatrix weighted_composition_matrix(const TruncatedSeries& psi, const MobiusMap& phi,
                                           int n) {
  const OperatorMatrix mp = multiplication_matrix(psi, n);
  const OperatorMatrix cp = composition_matrix(phi, n);
  Matrix w = mp.entries() * cp.entries();
  const int b = std::min({mp.trusted_block(), cp.trusted_block(), estimate_trusted_block(w)});
  return OperatorMatrix(std::move(w), b, "weighted composition");
}

OperatorMatrix weighted_composition_matrix(const TruncatedSeries& psi, const TruncatedSeries& phi,
                                           int n) {
  const OperatorMatrix mp = multiplication_matrix(psi, n);
  const OperatorMatrix cp = composition_matrix(phi, n);
  Matrix w = mp.entries() * cp.entries();
  const int b = std::min({mp.trusted_block(), cp.trusted_block(), estimate_trusted_block(w)});
  return OperatorMatrix(std::move(w), b, "weighted composition");
}

OperatorMatrix matrix_adjoint(const OperatorMatrix& m) {
  return OperatorMatrix(m.entries().adjoint(), m.trusted_block(), m.tag() + "*");
}

OperatorMatrix matrix_product(const OperatorMatrix& x, const OperatorMatrix& y) {
  if (x.order() != y.order()) throw Error(ErrorCode::OrderMismatch, "matrix product orders");
  return OperatorMatrix(x.entries() * y.entries(), std::min(x.trusted_block(), y.trusted_block()),
                        x.tag() + " . " + y.tag());
}

ProbeReport probe_operator(const OperatorMatrix& m, OperatorProperty property) {
  const int b = m.trusted_block();
  const Matrix& t = m.entries();
  const Matrix eye = Matrix::Identity(t.rows(), t.cols());
  double r = 0.0;
  switch (property) {
    case OperatorProperty::hermitian:
      r = (t - t.adjoint()).topLeftCorner(b, b).cwiseAbs().maxCoeff();
      break;
    case OperatorProperty::unitary:
      r = std::max(block_norm(t.adjoint() * t - eye, b), block_norm(t * t.adjoint() - eye, b));
      break;
    case OperatorProperty::normal:
      r = block_norm(t * t.adjoint() - t.adjoint() * t, b);
      break;
    case OperatorProperty::rank_one: {
      const Eigen::JacobiSVD<Matrix> svd(m.block());
      const auto& s = svd.singularValues();
      r = s.size() > 1 ? s(1) : 0.0;
      break;
    }
  }
  return {property, r, b};
}

namespace {

struct FftwPlan {
  fftw_complex* buf;
  fftw_plan plan;
  explicit FftwPlan(int samples) {
    buf = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * samples));
    plan = fftw_plan_dft_1d(samples, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
  }
  ~FftwPlan() {
    fftw_destroy_plan(plan);
    fftw_free(buf);
  }
  FftwPlan(const FftwPlan&) = delete;
  FftwPlan& operator=(const FftwPlan&) = delete;
};

std::vector<Complex> circle_points(int samples, double radius) {
  std::vector<Complex> z(static_cast<std::size_t>(samples));
  for (int j = 0; j < samples; ++j) {
    z[static_cast<std::size_t>(j)] =
        std::polar(radius, 2.0 * std::numbers::pi * j / static_cast<double>(samples));
  }
  return z;
}

void check_sampling(int n, int samples, double radius) {
  if (samples < 8 * n) throw Error(ErrorCode::SamplingTooCoarse, "need at least 8N samples");
  if (!(radius > 0.0 && radius <= 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "quadrature radius must lie in (0, 1]");
  }
}

// Scales DFT output into Maclaurin coefficients 0..n-1.
void extract(const fftw_complex* buf, int n, int samples, double radius, Vector& out) {
  double scale = 1.0 / samples;
  for (int m = 0; m < n; ++m) {
    out(m) = Complex(buf[m][0], buf[m][1]) * scale;
    scale /= radius;
  }
}

}  // namespace

Vector fourier_coefficients(const ComplexFn& g, int n, int samples, double radius) {
  check_sampling(n, samples, radius);
  const auto z = circle_points(samples, radius);
  FftwPlan plan(samples);
  for (int j = 0; j < samples; ++j) {
    const Complex v = g(z[static_cast<std::size_t>(j)]);
    plan.buf[j][0] = v.real();
    plan.buf[j][1] = v.imag();
  }
  fftw_execute(plan.plan);
  Vector out(n);
  extract(plan.buf, n, samples, radius, out);
  return out;
}

OperatorMatrix quadrature_matrix_oracle(const ComplexFn& psi, const ComplexFn& phi, int n,
                                        int samples, double radius) {
  check_sampling(n, samples, radius);
  const auto z = circle_points(samples, radius);
  std::vector<Complex> psi_v(z.size()), phi_v(z.size()), acc(z.size());
  for (std::size_t j = 0; j < z.size(); ++j) {
    psi_v[j] = psi(z[j]);
    phi_v[j] = phi(z[j]);
    if (std::abs(phi_v[j]) >= 1.0) {
      throw Error(ErrorCode::NotDiscSelfMap, "symbol leaves the disc on the sampling circle");
    }
    acc[j] = psi_v[j];
  }
  FftwPlan plan(samples);
  Matrix m(n, n);
  Vector col(n);
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < samples; ++j) {
      plan.buf[j][0] = acc[static_cast<std::size_t>(j)].real();
      plan.buf[j][1] = acc[static_cast<std::size_t>(j)].imag();
    }
    fftw_execute(plan.plan);
    extract(plan.buf, n, samples, radius, col);
    m.col(k) = col;
    for (std::size_t j = 0; j < acc.size(); ++j) acc[j] *= phi_v[j];
  }
  return OperatorMatrix(std::move(m), n / 2, "quadrature oracle");
}

}  // namespace lfh
