#ifndef EMKV_RATIONAL_HPP
#define EMKV_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace emkv {

/// Exact rational scalar. Always stored in canonical form: gcd(num, den) = 1,
/// den > 0, zero is 0/1.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const std::string& s) : v_(s) {
    if (v_.get_den() == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
  }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

  /// "p" when den = 1, otherwise "p/q".
  std::string str() const { return v_.get_str(); }

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

/// Dense row-major matrix over the rationals.
struct QMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Rational> entries;  // rows * cols, row-major

  QMatrix() = default;
  QMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<size_t>(r) * c) {}

  Rational& at(int r, int c) { return entries[static_cast<size_t>(r) * cols + c]; }
  const Rational& at(int r, int c) const { return entries[static_cast<size_t>(r) * cols + c]; }

  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows == b.rows && a.cols == b.cols && a.entries == b.entries;
  }
};

struct RrefResult {
  QMatrix matrix;
  std::vector<int> pivots;  // pivot column indices, increasing
};

/// Reduced row-echelon form over Q. Pivot choice: first nonzero entry in
/// column order, so the output is unique and deterministic.
RrefResult rref(const QMatrix& m);

int rank(const QMatrix& m);

/// Basis of the right null space { v : m v = 0 }. One vector per free column,
/// in increasing column order; the free coordinate of each vector is 1.
std::vector<std::vector<Rational>> kernel_basis(const QMatrix& m);

}  // namespace emkv

#endif
