#pragma once

/**
 * @file cyclotomic.hpp
 * @brief Exact arithmetic in the cyclotomic fields Q(zeta_N).
 *
 * An element of Q(zeta_N) is stored as a polynomial in zeta_N of degree
 * below phi(N), reduced modulo the N-th cyclotomic polynomial. That
 * representation is unique, so equality is a coefficient comparison.
 *
 * Elements of different orders may be mixed freely: binary operations embed
 * both operands into Q(zeta_lcm) first. Rationals live in order 1.
 */

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace contra {

using Rational = mpq_class;
using json = nlohmann::json;

namespace detail {

/// Per-order data: Phi_N and the reduced powers zeta_N^e for 0 <= e < N.
struct FieldData {
  int order = 1;
  std::size_t phi = 1;
  std::vector<Rational> modulus;  // monic, low to high, length phi + 1
  std::vector<std::vector<Rational>> powers;
};

inline std::vector<mpz_class> integer_poly_divide(std::vector<mpz_class> num,
                                                  const std::vector<mpz_class>& den) {
  // den is monic
  const std::size_t dn = den.size() - 1;
  if (num.size() <= dn) return {mpz_class(0)};
  std::vector<mpz_class> quot(num.size() - dn, 0);
  for (std::size_t k = num.size(); k-- > dn;) {
    const mpz_class c = num[k];
    if (c == 0) continue;
    quot[k - dn] = c;
    for (std::size_t i = 0; i <= dn; ++i) num[k - dn + i] -= c * den[i];
  }
  return quot;
}

inline std::vector<mpz_class> cyclotomic_polynomial(int n,
                                                    std::map<int, std::vector<mpz_class>>& memo) {
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  std::vector<mpz_class> poly(static_cast<std::size_t>(n) + 1, 0);
  poly[0] = -1;
  poly[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    poly = integer_poly_divide(poly, cyclotomic_polynomial(d, memo));
  }
  memo.emplace(n, poly);
  return poly;
}

inline std::unique_ptr<FieldData> make_field_data(int n) {
  static std::map<int, std::vector<mpz_class>> memo;  // guarded by field_data's lock
  auto data = std::make_unique<FieldData>();
  data->order = n;
  const auto phi_poly = cyclotomic_polynomial(n, memo);
  data->phi = phi_poly.size() - 1;
  for (const auto& c : phi_poly) data->modulus.emplace_back(c);

  const std::size_t phi = data->phi;
  std::vector<Rational> current(phi, 0);
  current[0] = 1;
  for (int e = 0; e < n; ++e) {
    data->powers.push_back(current);
    // multiply by zeta: shift up, fold the top coefficient back through Phi_N
    std::vector<Rational> next(phi, 0);
    const Rational top = current[phi - 1];
    for (std::size_t i = phi - 1; i > 0; --i) next[i] = current[i - 1];
    if (phi == 1) next[0] = 0;
    if (top != 0) {
      for (std::size_t i = 0; i < phi; ++i) next[i] -= top * data->modulus[i];
    }
    current = std::move(next);
  }
  return data;
}

inline const FieldData& field_data(int n) {
  thread_local int last_order = 0;
  thread_local const FieldData* last = nullptr;
  if (n == last_order && last != nullptr) return *last;

  static std::mutex lock;
  static std::map<int, std::unique_ptr<FieldData>> cache;
  std::lock_guard guard(lock);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, make_field_data(n)).first;
  last_order = n;
  last = it->second.get();
  return *last;
}

inline long floor_mod(long a, long m) {
  const long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace detail

/// Thrown for mathematically undefined operations (inverting zero and the like).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class Cyclotomic {
 public:
  Cyclotomic() : order_(1), coeffs_(1, Rational(0)) {}
  Cyclotomic(long value) : order_(1), coeffs_(1, Rational(value)) {}  // NOLINT: implicit on purpose
  explicit Cyclotomic(Rational value) : order_(1), coeffs_(1, std::move(value)) {
    coeffs_[0].canonicalize();
  }

  /// Builds sum coeffs[k] zeta_N^k for arbitrary length input, reducing to canonical form.
  static Cyclotomic from_power_coefficients(int order, const std::vector<Rational>& coeffs) {
    if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
    const auto& field = detail::field_data(order);
    Cyclotomic out;
    out.order_ = order;
    out.coeffs_.assign(field.phi, Rational(0));
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (coeffs[k] == 0) continue;
      const auto& pw = field.powers[k % static_cast<std::size_t>(order)];
      for (std::size_t i = 0; i < field.phi; ++i) {
        if (pw[i] != 0) out.coeffs_[i] += coeffs[k] * pw[i];
      }
    }
    return out;
  }

  /// Takes already reduced coefficients (length phi(N)).
  static Cyclotomic from_reduced(int order, std::vector<Rational> coeffs) {
    const auto& field = detail::field_data(order);
    if (coeffs.size() != field.phi) {
      throw std::invalid_argument("coefficient vector length must equal phi(order)");
    }
    Cyclotomic out;
    out.order_ = order;
    out.coeffs_ = std::move(coeffs);
    for (auto& c : out.coeffs_) c.canonicalize();
    return out;
  }

  static Cyclotomic root_of_unity(int order, long exponent) {
    if (order < 1) throw std::invalid_argument("root of unity order must be positive");
    const auto& field = detail::field_data(order);
    Cyclotomic out;
    out.order_ = order;
    out.coeffs_ = field.powers[static_cast<std::size_t>(detail::floor_mod(exponent, order))];
    return out;
  }

  int order() const { return order_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_) {
      if (c != 0) return false;
    }
    return true;
  }

  bool is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
      if (coeffs_[i] != 0) return false;
    }
    return true;
  }

  /// The value re-expressed in Q(zeta_target); target must be a multiple of order().
  Cyclotomic embed(int target) const {
    if (target == order_) return *this;
    if (target < 1 || target % order_ != 0) {
      throw std::invalid_argument("cannot embed Q(zeta_" + std::to_string(order_) + ") into Q(zeta_" +
                                  std::to_string(target) + ")");
    }
    const auto& field = detail::field_data(target);
    Cyclotomic out;
    out.order_ = target;
    out.coeffs_.assign(field.phi, Rational(0));
    if (is_rational()) {
      out.coeffs_[0] = coeffs_[0];
      return out;
    }
    const std::size_t step = static_cast<std::size_t>(target / order_);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (coeffs_[k] == 0) continue;
      const auto& pw = field.powers[(k * step) % static_cast<std::size_t>(target)];
      for (std::size_t i = 0; i < field.phi; ++i) {
        if (pw[i] != 0) out.coeffs_[i] += coeffs_[k] * pw[i];
      }
    }
    return out;
  }

  Cyclotomic operator-() const {
    Cyclotomic out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }

  Cyclotomic& operator+=(const Cyclotomic& rhs) {
    if (rhs.order_ == order_) {
      for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
      return *this;
    }
    if (rhs.order_ == 1) {
      coeffs_[0] += rhs.coeffs_[0];
      return *this;
    }
    const int target = std::lcm(order_, rhs.order_);
    *this = embed(target);
    return *this += rhs.embed(target);
  }

  Cyclotomic& operator-=(const Cyclotomic& rhs) { return *this += -rhs; }

  Cyclotomic& operator*=(const Cyclotomic& rhs) {
    *this = *this * rhs;
    return *this;
  }

  Cyclotomic& operator/=(const Cyclotomic& rhs) {
    *this = *this * rhs.inverse();
    return *this;
  }

  friend Cyclotomic operator+(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs += rhs; }
  friend Cyclotomic operator-(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs -= rhs; }
  friend Cyclotomic operator/(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs /= rhs; }

  friend Cyclotomic operator*(const Cyclotomic& lhs, const Cyclotomic& rhs) {
    if (rhs.coeffs_.size() == 1 && rhs.order_ <= 2) return lhs.scaled(rhs.coeffs_[0]);
    if (lhs.coeffs_.size() == 1 && lhs.order_ <= 2) return rhs.scaled(lhs.coeffs_[0]);
    if (lhs.order_ != rhs.order_) {
      const int target = std::lcm(lhs.order_, rhs.order_);
      return lhs.embed(target) * rhs.embed(target);
    }
    const auto& field = detail::field_data(lhs.order_);
    const std::size_t phi = field.phi;
    std::vector<Rational> prod(2 * phi - 1, Rational(0));
    for (std::size_t i = 0; i < phi; ++i) {
      if (lhs.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < phi; ++j) {
        if (rhs.coeffs_[j] == 0) continue;
        prod[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
      }
    }
    for (std::size_t k = prod.size(); k-- > phi;) {
      const Rational top = prod[k];
      if (top == 0) continue;
      for (std::size_t i = 0; i < phi; ++i) {
        if (field.modulus[i] != 0) prod[k - phi + i] -= top * field.modulus[i];
      }
      prod[k] = 0;
    }
    prod.resize(phi);
    Cyclotomic out;
    out.order_ = lhs.order_;
    out.coeffs_ = std::move(prod);
    return out;
  }

  Cyclotomic scaled(const Rational& factor) const {
    Cyclotomic out = *this;
    for (auto& c : out.coeffs_) {
      if (c != 0) c *= factor;
    }
    return out;
  }

  /// Multiplicative inverse by the extended Euclidean algorithm against Phi_N.
  Cyclotomic inverse() const {
    if (is_zero()) throw DomainError("inverse of zero in Q(zeta_" + std::to_string(order_) + ")");
    if (is_rational()) {
      Cyclotomic out;
      out.order_ = order_;
      out.coeffs_.assign(coeffs_.size(), Rational(0));
      out.coeffs_[0] = 1 / coeffs_[0];
      return out;
    }
    using Poly = std::vector<Rational>;
    const auto& field = detail::field_data(order_);
    auto trim = [](Poly& p) {
      while (p.size() > 1 && p.back() == 0) p.pop_back();
    };
    auto sub_scaled_shift = [](Poly& a, const Poly& b, const Rational& c, std::size_t shift) {
      if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
      for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    };
    // invariant: r0 = s0 * self (mod Phi), r1 = s1 * self (mod Phi)
    Poly r0 = field.modulus, r1 = coeffs_;
    Poly s0{0}, s1{1};
    trim(r0);
    trim(r1);
    while (!(r1.size() == 1 && r1[0] == 0)) {
      Poly q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 1, 0);
      while (r0.size() >= r1.size() && !(r0.size() == 1 && r0[0] == 0)) {
        const std::size_t shift = r0.size() - r1.size();
        const Rational c = r0.back() / r1.back();
        q[shift] += c;
        sub_scaled_shift(r0, r1, c, shift);
        r0.back() = 0;
        trim(r0);
        if (shift == 0) break;
      }
      // r0 is now the remainder; s_new = s0 - q*s1
      Poly s_new = s0;
      for (std::size_t k = 0; k < q.size(); ++k) {
        if (q[k] != 0) sub_scaled_shift(s_new, s1, q[k], k);
      }
      trim(s_new);
      std::swap(r0, r1);
      s0 = std::move(s1);
      s1 = std::move(s_new);
    }
    // r0 is a nonzero constant since Phi_N is irreducible
    const Rational c = r0[0];
    for (auto& v : s0) v /= c;
    return from_power_coefficients(order_, s0);
  }

  Cyclotomic pow(long exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    Cyclotomic result = Cyclotomic(1).embed(order_);
    Cyclotomic base = *this;
    while (exponent > 0) {
      if (exponent & 1) result *= base;
      exponent >>= 1;
      if (exponent > 0) base *= base;
    }
    return result;
  }

  friend bool operator==(const Cyclotomic& lhs, const Cyclotomic& rhs) {
    if (lhs.order_ == rhs.order_) return lhs.coeffs_ == rhs.coeffs_;
    if (lhs.is_rational() && rhs.is_rational()) return lhs.coeffs_[0] == rhs.coeffs_[0];
    const int target = std::lcm(lhs.order_, rhs.order_);
    return lhs.embed(target).coeffs_ == rhs.embed(target).coeffs_;
  }
  friend bool operator!=(const Cyclotomic& lhs, const Cyclotomic& rhs) { return !(lhs == rhs); }

  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      const Rational& c = coeffs_[k];
      if (c == 0) continue;
      const bool negative = c < 0;
      const Rational mag = negative ? Rational(-c) : c;
      if (first) {
        if (negative) os << "-";
      } else {
        os << (negative ? " - " : " + ");
      }
      first = false;
      if (k == 0) {
        os << mag.get_str();
        continue;
      }
      if (mag != 1) os << mag.get_str() << "*";
      os << "z" << order_;
      if (k > 1) os << "^" << k;
    }
    if (first) os << "0";
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Cyclotomic& value) {
    return os << value.to_string();
  }

 private:
  int order_;
  std::vector<Rational> coeffs_;
};

inline Cyclotomic make_root_of_unity(int order, long exponent) {
  return Cyclotomic::root_of_unity(order, exponent);
}

/// The multiplicative order of a root of unity, or 0 when the value is not one.
inline int root_order(const Cyclotomic& value) {
  if (value.is_zero()) return 0;
  const int bound = 2 * value.order();  // Q(zeta_N) holds at most lcm(2, N)-th roots
  Cyclotomic acc = value;
  for (int k = 1; k <= bound; ++k) {
    if (acc == Cyclotomic(1)) return k;
    acc *= value;
  }
  return 0;
}

/// (n)_w = 1 + w + ... + w^(n-1)
inline Cyclotomic q_integer(unsigned n, const Cyclotomic& w) {
  Cyclotomic sum = Cyclotomic(0).embed(w.order());
  Cyclotomic term = Cyclotomic(1).embed(w.order());
  for (unsigned k = 0; k < n; ++k) {
    sum += term;
    term *= w;
  }
  return sum;
}

/// (n)_w! = (n)_w (n-1)_w ... (1)_w, with (0)_w! = 1
inline Cyclotomic q_factorial(unsigned n, const Cyclotomic& w) {
  Cyclotomic prod = Cyclotomic(1).embed(w.order());
  for (unsigned k = 1; k <= n; ++k) prod *= q_integer(k, w);
  return prod;
}

inline json to_json(const Cyclotomic& value) {
  json coeffs = json::array();
  for (const auto& c : value.coefficients()) {
    coeffs.push_back(json::array({c.get_num().get_str(), c.get_den().get_str()}));
  }
  return json{{"order", value.order()}, {"coeffs", coeffs}};
}

inline Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    Rational r;
    if (r.set_str(j.get<std::string>(), 10) != 0) throw std::invalid_argument("rational string must be \"num\" or \"num/den\"");
    if (r.get_den() == 0) throw std::invalid_argument("rational with zero denominator");
    r.canonicalize();
    return r;
  }
  if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string()) {
    throw std::invalid_argument("rational must be [\"num\", \"den\"]");
  }
  mpz_class num, den;
  if (num.set_str(j[0].get<std::string>(), 10) != 0 || den.set_str(j[1].get<std::string>(), 10) != 0) {
    throw std::invalid_argument("rational components must be decimal integers");
  }
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Accepts {"order", "coeffs"} or, for rationals, a bare integer or "num/den" string.
inline Cyclotomic cyclotomic_from_json(const json& j) {
  if (j.is_number_integer() || j.is_string()) return Cyclotomic(rational_from_json(j));
  if (!j.is_object() || !j.contains("order") || !j.contains("coeffs")) {
    throw std::invalid_argument("scalar must be an object with \"order\" and \"coeffs\"");
  }
  const int order = j.at("order").get<int>();
  if (order < 1) throw std::invalid_argument("scalar order must be positive");
  std::vector<Rational> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(rational_from_json(c));
  return Cyclotomic::from_reduced(order, std::move(coeffs));
}

}  // namespace contra
