#pragma once

/**
 * @file polynomial.hpp
 * @brief Dense univariate polynomials over the cyclotomic scalars.
 *
 * Coefficients are stored low degree first. The zero polynomial is the empty
 * vector, so degree() of zero is -1.
 */

#include <string>
#include <utility>
#include <vector>

#include "contra/cyclotomic.hpp"

namespace contra {

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Cyclotomic> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial monomial(std::size_t degree, Cyclotomic coeff = Cyclotomic(1)) {
    std::vector<Cyclotomic> c(degree + 1);
    c[degree] = std::move(coeff);
    return Polynomial(std::move(c));
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Cyclotomic>& coefficients() const { return coeffs_; }
  const Cyclotomic& leading() const { return coeffs_.back(); }

  Cyclotomic operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Cyclotomic(0); }

  Polynomial derivative() const {
    std::vector<Cyclotomic> d;
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(coeffs_[k] * Cyclotomic(static_cast<long>(k)));
    return Polynomial(std::move(d));
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    const Cyclotomic inv = leading().inverse();
    std::vector<Cyclotomic> c = coeffs_;
    for (auto& v : c) v *= inv;
    return Polynomial(std::move(c));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Cyclotomic> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a[k] + b[k];
    return Polynomial(std::move(c));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Cyclotomic> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a[k] - b[k];
    return Polynomial(std::move(c));
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Cyclotomic> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(c));
  }

  /// Euclidean division; throws DomainError on a zero divisor.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<Cyclotomic> rem = num.coeffs_;
    if (num.degree() < den.degree()) return {Polynomial(), num};
    std::vector<Cyclotomic> quot(rem.size() - den.coeffs_.size() + 1);
    const Cyclotomic lead_inv = den.leading().inverse();
    for (std::size_t k = rem.size(); k-- >= den.coeffs_.size();) {
      const Cyclotomic c = rem[k] * lead_inv;
      if (c.is_zero()) continue;
      const std::size_t shift = k + 1 - den.coeffs_.size();
      quot[shift] = c;
      for (std::size_t i = 0; i < den.coeffs_.size(); ++i) rem[shift + i] -= c * den.coeffs_[i];
    }
    rem.resize(den.coeffs_.size() - 1);
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
  }

  /// Monic gcd (zero when both inputs are zero).
  static Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
      Polynomial r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  Cyclotomic evaluate(const Cyclotomic& x) const {
    Cyclotomic acc;
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
    return acc;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      if (coeffs_[k].is_zero()) continue;
      std::string term;
      const std::string c = coeffs_[k].to_string();
      const std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
      if (k == 0) {
        term = c;
      } else if (coeffs_[k] == Cyclotomic(1)) {
        term = mono;
      } else if (coeffs_[k] == Cyclotomic(-1)) {
        term = "-" + mono;
      } else {
        term = "(" + c + ")*" + mono;
      }
      if (!out.empty()) out += " + ";
      out += term;
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<Cyclotomic> coeffs_;
};

inline bool is_squarefree(const Polynomial& p) {
  if (p.degree() <= 0) return true;
  return Polynomial::gcd(p, p.derivative()).degree() == 0;
}

}  // namespace contra
