#pragma once

#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

namespace lfh {

using Complex = std::complex<double>;

/// Maclaurin coefficients c_0..c_N of an analytic function, truncated at
/// degree N. Values are immutable once built; every operation returns a new
/// series of the same order and mixed orders are rejected.
class TruncatedSeries {
 public:
  /// The zero series of the given order.
  explicit TruncatedSeries(int order);

  /// Takes ownership of exactly order+1 coefficients.
  TruncatedSeries(int order, std::vector<Complex> coeffs);

  /// Pads with zeros (or truncates) the given leading coefficients.
  static TruncatedSeries from_coefficients(int order, std::span<const Complex> leading);
  static TruncatedSeries from_coefficients(int order, std::initializer_list<Complex> leading);
  static TruncatedSeries constant(int order, Complex value);
  static TruncatedSeries monomial(int order, int degree, Complex coefficient = 1.0);

  int order() const noexcept { return order_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }
  Complex operator[](std::size_t k) const { return coeffs_[k]; }

  /// Same coefficients reinterpreted at another order (zero padded or cut).
  TruncatedSeries resized(int order) const;

  double max_abs() const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  int order_;
  std::vector<Complex> coeffs_;
};

enum class ArithKind { add, sub, mul, div };

TruncatedSeries series_arith(const TruncatedSeries& s, const TruncatedSeries& t, ArithKind kind);

TruncatedSeries operator+(const TruncatedSeries& s, const TruncatedSeries& t);
TruncatedSeries operator-(const TruncatedSeries& s, const TruncatedSeries& t);
TruncatedSeries operator*(const TruncatedSeries& s, const TruncatedSeries& t);
TruncatedSeries operator/(const TruncatedSeries& s, const TruncatedSeries& t);
TruncatedSeries operator*(Complex k, const TruncatedSeries& s);
TruncatedSeries operator+(const TruncatedSeries& s, Complex k);

/// Principal square root at the constant term; a negative real constant term
/// takes the root with positive imaginary part. Higher coefficients follow
/// from the recurrence 2 r_0 r_k = s_k - sum_{j=1}^{k-1} r_j r_{k-j}.
TruncatedSeries series_sqrt(const TruncatedSeries& s);

/// Horner evaluation of sum c_k z^k.
Complex series_eval(const TruncatedSeries& s, Complex z);

/// Coefficient k of the result is (k+1) c_{k+1}; the top coefficient is zero.
TruncatedSeries series_derivative(const TruncatedSeries& s);

/// The branch rule used by series_sqrt for a single complex number.
Complex principal_sqrt(Complex z);

}  // namespace lfh
