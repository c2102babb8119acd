#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>

#include "lfh/mobius.hpp"
#include "lfh/series.hpp"

namespace lfh {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using ComplexFn = std::function<Complex(Complex)>;

/// N x N compression of an operator on H^2 of the disc to span{1, ..., z^{N-1}};
/// entry (m, n) is <T z^n, z^m>. Identities are only asserted on the leading
/// trusted_block x trusted_block corner.
class OperatorMatrix {
 public:
  OperatorMatrix(Matrix entries, int trusted_block, std::string tag = {});

  const Matrix& entries() const noexcept { return entries_; }
  int order() const noexcept { return static_cast<int>(entries_.rows()); }
  int trusted_block() const noexcept { return trusted_block_; }
  const std::string& tag() const noexcept { return tag_; }
  Complex operator()(int m, int n) const { return entries_(m, n); }

  /// Leading B x B corner, B defaulting to the trusted block.
  Matrix block(int b = -1) const;

  /// Same entries with the trusted block lowered to at most cap.
  OperatorMatrix capped(int cap) const;

 private:
  Matrix entries_;
  int trusted_block_;
  std::string tag_;
};

/// Products of truncations are formed at this multiple of the workspace order
/// so that their leading corner sees the decayed tails.
inline constexpr int kPadding = 4;

/// Frobenius norm of the leading b x b corner.
double block_norm(const Matrix& m, int b);

/// Sum f_n conj(g_n).
Complex inner_product(const TruncatedSeries& f, const TruncatedSeries& g);
Complex inner_product(const Vector& f, const Vector& g);

Vector to_vector(const TruncatedSeries& s);
/// n coefficients become a series of degree n - 1.
TruncatedSeries to_series(const Vector& v);

struct KernelVectorU {
  Complex alpha;
  TruncatedSeries coeffs;
};

/// K_alpha(z) = 1/(1 - conj(alpha) z) with n coefficients.
KernelVectorU kernel_K(Complex alpha, int n);

/// Largest B <= N/2 such that every one of the first B rows and columns has
/// its last quarter below tail_tol times the largest entry (at least 1).
int estimate_trusted_block(const Matrix& m, double tail_tol = 1e-6);

/// Columns are the powers of phi's Maclaurin series.
OperatorMatrix composition_matrix(const MobiusMap& phi, int n);
/// Same for a symbol given by its series (degree >= n - 1); a constant series
/// gives the rank-one matrix with columns phi(0)^k e_0.
OperatorMatrix composition_matrix(const TruncatedSeries& phi, int n);

/// Lower-triangular Toeplitz matrix of psi.
OperatorMatrix multiplication_matrix(const TruncatedSeries& psi, int n);

/// M_psi C_phi.
OperatorMatrix weighted_composition_matrix(const TruncatedSeries& psi, const MobiusMap& phi, int n);
OperatorMatrix weighted_composition_matrix(const TruncatedSeries& psi, const TruncatedSeries& phi,
                                           int n);

OperatorMatrix matrix_adjoint(const OperatorMatrix& m);
OperatorMatrix matrix_product(const OperatorMatrix& x, const OperatorMatrix& y);

enum class OperatorProperty { hermitian, unitary, normal, rank_one };

struct ProbeReport {
  OperatorProperty property;
  double residual;
  int block;
};

ProbeReport probe_operator(const OperatorMatrix& m, OperatorProperty property);

/// Coefficients 0..n-1 of g from samples on the circle |z| = radius, via one
/// discrete Fourier transform. Throws SamplingTooCoarse when samples < 8n.
Vector fourier_coefficients(const ComplexFn& g, int n, int samples, double radius);

/// Contour-integral extraction of <psi phi^n, z^m>, independent of the series
/// pipeline. The trusted block is N/2.
OperatorMatrix quadrature_matrix_oracle(const ComplexFn& psi, const ComplexFn& phi, int n,
                                        int samples, double radius = 0.75);

}  // namespace lfh
