#include "gosset/rational.hpp"

#include <stdexcept>

namespace gosset {

double to_double(const Rational& x) { return x.convert_to<double>(); }

bool is_integer(const Rational& x) { return denominator(x) == 1; }

long long to_int(const Rational& x) {
  if (!is_integer(x)) {
    throw std::logic_error("expected integral rational, got " + fraction_string(x));
  }
  return numerator(x).convert_to<long long>();
}

std::string fraction_string(const Rational& x) {
  if (is_integer(x)) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& rhs) const {
  RatMatrix out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& lik = (*this)(i, k);
      if (lik == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) out(i, j) += lik * rhs(k, j);
    }
  return out;
}

RatMatrix RatMatrix::operator+(const RatMatrix& rhs) const {
  RatMatrix out = *this;
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] += rhs.a_[i];
  return out;
}

RatMatrix RatMatrix::operator-(const RatMatrix& rhs) const {
  RatMatrix out = *this;
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] -= rhs.a_[i];
  return out;
}

RatMatrix RatMatrix::scaled(const Rational& c) const {
  RatMatrix out = *this;
  for (auto& v : out.a_) v *= c;
  return out;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

RatMatrix& RatMatrix::add_to_diagonal(const Rational& c) {
  for (int i = 0; i < rows_ && i < cols_; ++i) (*this)(i, i) += c;
  return *this;
}

Rational RatMatrix::trace() const {
  Rational t = 0;
  for (int i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
  return t;
}

bool RatMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool RatMatrix::operator==(const RatMatrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && a_ == rhs.a_;
}

}  // namespace gosset
