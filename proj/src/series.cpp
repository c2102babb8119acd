#include "lfh/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "lfh/error.hpp"

namespace lfh {

namespace {

void require_finite(std::span<const Complex> coeffs) {
  for (const Complex& c : coeffs) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw Error(ErrorCode::NonFiniteValue, "series coefficient is not finite");
    }
  }
}

void require_same_order(const TruncatedSeries& s, const TruncatedSeries& t) {
  if (s.order() != t.order()) {
    throw Error(ErrorCode::OrderMismatch,
                "orders " + std::to_string(s.order()) + " and " + std::to_string(t.order()));
  }
}

// Relative cutoff below which a constant term is treated as zero.
double constant_term_threshold(const TruncatedSeries& t) {
  return 64.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, t.max_abs());
}

}  // namespace

TruncatedSeries::TruncatedSeries(int order) : order_(order) {
  if (order < 0) throw Error(ErrorCode::InvalidArgument, "negative series order");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, Complex{});
}

TruncatedSeries::TruncatedSeries(int order, std::vector<Complex> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  if (order < 0) throw Error(ErrorCode::InvalidArgument, "negative series order");
  if (coeffs_.size() != static_cast<std::size_t>(order) + 1) {
    throw Error(ErrorCode::OrderMismatch, "coefficient count does not match order");
  }
  require_finite(coeffs_);
}

TruncatedSeries TruncatedSeries::from_coefficients(int order, std::span<const Complex> leading) {
  std::vector<Complex> c(static_cast<std::size_t>(order) + 1, Complex{});
  std::copy_n(leading.begin(), std::min(leading.size(), c.size()), c.begin());
  return TruncatedSeries(order, std::move(c));
}

TruncatedSeries TruncatedSeries::from_coefficients(int order,
                                                   std::initializer_list<Complex> leading) {
  return from_coefficients(order, std::span<const Complex>(leading.begin(), leading.size()));
}

TruncatedSeries TruncatedSeries::constant(int order, Complex value) {
  return from_coefficients(order, {value});
}

TruncatedSeries TruncatedSeries::monomial(int order, int degree, Complex coefficient) {
  TruncatedSeries s(order);
  if (degree >= 0 && degree <= order) s.coeffs_[static_cast<std::size_t>(degree)] = coefficient;
  return s;
}

TruncatedSeries TruncatedSeries::resized(int order) const {
  return from_coefficients(order, coeffs_);
}

double TruncatedSeries::max_abs() const {
  double m = 0.0;
  for (const Complex& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

TruncatedSeries series_arith(const TruncatedSeries& s, const TruncatedSeries& t, ArithKind kind) {
  require_same_order(s, t);
  const std::size_t n = s.size();
  std::vector<Complex> out(n);
  switch (kind) {
    case ArithKind::add:
      for (std::size_t k = 0; k < n; ++k) out[k] = s[k] + t[k];
      break;
    case ArithKind::sub:
      for (std::size_t k = 0; k < n; ++k) out[k] = s[k] - t[k];
      break;
    case ArithKind::mul:
      for (std::size_t k = 0; k < n; ++k) {
        Complex acc{};
        for (std::size_t j = 0; j <= k; ++j) acc += s[j] * t[k - j];
        out[k] = acc;
      }
      break;
    case ArithKind::div: {
      if (std::abs(t[0]) <= constant_term_threshold(t)) {
        throw Error(ErrorCode::DivisionByZeroConstantTerm, "divisor has vanishing constant term");
      }
      const Complex inv = 1.0 / t[0];
      for (std::size_t k = 0; k < n; ++k) {
        Complex acc = s[k];
        for (std::size_t j = 1; j <= k; ++j) acc -= t[j] * out[k - j];
        out[k] = acc * inv;
      }
      break;
    }
  }
  return TruncatedSeries(s.order(), std::move(out));
}

TruncatedSeries operator+(const TruncatedSeries& s, const TruncatedSeries& t) {
  return series_arith(s, t, ArithKind::add);
}
TruncatedSeries operator-(const TruncatedSeries& s, const TruncatedSeries& t) {
  return series_arith(s, t, ArithKind::sub);
}
TruncatedSeries operator*(const TruncatedSeries& s, const TruncatedSeries& t) {
  return series_arith(s, t, ArithKind::mul);
}
TruncatedSeries operator/(const TruncatedSeries& s, const TruncatedSeries& t) {
  return series_arith(s, t, ArithKind::div);
}

TruncatedSeries operator*(Complex k, const TruncatedSeries& s) {
  std::vector<Complex> out(s.coeffs().begin(), s.coeffs().end());
  for (Complex& c : out) c *= k;
  return TruncatedSeries(s.order(), std::move(out));
}

TruncatedSeries operator+(const TruncatedSeries& s, Complex k) {
  std::vector<Complex> out(s.coeffs().begin(), s.coeffs().end());
  out[0] += k;
  return TruncatedSeries(s.order(), std::move(out));
}

Complex principal_sqrt(Complex z) {
  // std::sqrt follows the sign of a signed-zero imaginary part; the negative
  // real axis is pinned to the upper half instead.
  if (z.imag() == 0.0 && z.real() < 0.0) return {0.0, std::sqrt(-z.real())};
  return std::sqrt(z);
}

TruncatedSeries series_sqrt(const TruncatedSeries& s) {
  if (std::abs(s[0]) <= constant_term_threshold(s)) {
    throw Error(ErrorCode::ZeroConstantTerm, "square root needs a nonzero constant term");
  }
  const std::size_t n = s.size();
  std::vector<Complex> r(n);
  r[0] = principal_sqrt(s[0]);
  const Complex inv = 1.0 / (2.0 * r[0]);
  for (std::size_t k = 1; k < n; ++k) {
    Complex acc = s[k];
    for (std::size_t j = 1; j < k; ++j) acc -= r[j] * r[k - j];
    r[k] = acc * inv;
  }
  return TruncatedSeries(s.order(), std::move(r));
}

Complex series_eval(const TruncatedSeries& s, Complex z) {
  Complex acc{};
  for (std::size_t k = s.size(); k-- > 0;) acc = acc * z + s[k];
  return acc;
}

TruncatedSeries series_derivative(const TruncatedSeries& s) {
  std::vector<Complex> out(s.size(), Complex{});
  for (std::size_t k = 0; k + 1 < s.size(); ++k) out[k] = static_cast<double>(k + 1) * s[k + 1];
  return TruncatedSeries(s.order(), std::move(out));
}

}  // namespace lfh
