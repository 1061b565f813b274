#pragma once

#include "discop/rational.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace discop {

// Univariate polynomial in the deformation parameter h over the rationals.
// Coefficients are stored by ascending degree with trailing zeros stripped,
// so degree() is always the index of the last entry.
class HPoly {
 public:
  HPoly() = default;
  HPoly(const Rational& c) {  // NOLINT: implicit scalar embedding intended
    if (c != 0) coeffs_.push_back(c);
  }
  HPoly(int c) : HPoly(Rational(c)) {}
  explicit HPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    strip();
  }

  static HPoly hbar(int power = 1, const Rational& c = 1) {
    if (power < 0) throw std::invalid_argument("negative h power");
    if (c == 0) return HPoly();
    std::vector<Rational> v(power + 1, Rational(0));
    v[power] = c;
    return HPoly(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial is -1 by convention.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_unit() const { return degree() == 0; }
  bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(coeffs_.size())) ? coeffs_[k]
                                                            : Rational(0);
  }
  Rational leading() const {
    return coeffs_.empty() ? Rational(0) : coeffs_.back();
  }
  Rational at_zero() const { return coeff(0); }

  Rational eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      acc = acc * x + *it;
    return acc;
  }

  friend HPoly operator+(const HPoly& a, const HPoly& b) {
    std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()),
                            Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
    return HPoly(std::move(v));
  }
  friend HPoly operator-(const HPoly& a, const HPoly& b) {
    std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()),
                            Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) v[i] -= b.coeffs_[i];
    return HPoly(std::move(v));
  }
  friend HPoly operator-(const HPoly& a) { return HPoly(0) - a; }
  friend HPoly operator*(const HPoly& a, const HPoly& b) {
    if (a.is_zero() || b.is_zero()) return HPoly();
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1,
                            Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
      for (size_t j = 0; j < b.coeffs_.size(); ++j)
        v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return HPoly(std::move(v));
  }
  HPoly& operator+=(const HPoly& o) { return *this = *this + o; }
  HPoly& operator-=(const HPoly& o) { return *this = *this - o; }
  HPoly& operator*=(const HPoly& o) { return *this = *this * o; }

  friend bool operator==(const HPoly& a, const HPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const HPoly& a, const HPoly& b) { return !(a == b); }

  // Euclidean division: a = q*b + r with r == 0 or deg r < deg b.
  static std::pair<HPoly, HPoly> divmod(const HPoly& a, const HPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
    std::vector<Rational> rem = a.coeffs_;
    std::vector<Rational> quo;
    int db = b.degree();
    if (a.degree() >= db) quo.assign(a.degree() - db + 1, Rational(0));
    for (int k = a.degree(); k >= db; --k) {
      Rational c = rem[k] / b.coeffs_.back();
      if (c == 0) continue;
      quo[k - db] = c;
      for (int j = 0; j <= db; ++j) rem[k - db + j] -= c * b.coeffs_[j];
    }
    return {HPoly(std::move(quo)), HPoly(std::move(rem))};
  }

  static bool divides(const HPoly& b, const HPoly& a) {
    if (b.is_zero()) return a.is_zero();
    return divmod(a, b).second.is_zero();
  }

  static HPoly exact_div(const HPoly& a, const HPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::logic_error("exact_div with nonzero remainder");
    return q;
  }

  HPoly monic() const {
    if (is_zero()) return *this;
    std::vector<Rational> v = coeffs_;
    Rational lc = v.back();
    for (auto& c : v) c /= lc;
    return HPoly(std::move(v));
  }

  static HPoly gcd(HPoly a, HPoly b) {
    while (!b.is_zero()) {
      HPoly r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      if (coeffs_[k] == 0) continue;
      if (!out.empty()) out += " + ";
      if (k == 0 || coeffs_[k] != 1) out += format_rational(coeffs_[k]);
      if (k > 0) {
        if (coeffs_[k] != 1) out += "*";
        out += (k == 1) ? "h" : "h^" + std::to_string(k);
      }
    }
    return out;
  }

 private:
  void strip() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<Rational> coeffs_;
};

}  // namespace discop
