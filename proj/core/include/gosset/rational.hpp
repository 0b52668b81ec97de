#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace gosset {

using Rational = boost::multiprecision::cpp_rational;

double to_double(const Rational& x);
bool is_integer(const Rational& x);
long long to_int(const Rational& x);
std::string fraction_string(const Rational& x);

// Small dense matrix over the rationals.  Everything upstream of the floating
// eigensolvers runs through this type so that algebraic identities can be
// checked exactly.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static RatMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& operator()(int i, int j) { return a_[i * cols_ + j]; }
  const Rational& operator()(int i, int j) const { return a_[i * cols_ + j]; }

  RatMatrix operator*(const RatMatrix& rhs) const;
  RatMatrix operator+(const RatMatrix& rhs) const;
  RatMatrix operator-(const RatMatrix& rhs) const;
  RatMatrix scaled(const Rational& c) const;
  RatMatrix transpose() const;
  RatMatrix& add_to_diagonal(const Rational& c);

  Rational trace() const;
  bool is_symmetric() const;
  bool operator==(const RatMatrix& rhs) const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

}  // namespace gosset
