#pragma once

/**
 * @file hopf.hpp
 * @brief Finite-dimensional Hopf algebras: axioms, duals, Taft and group algebras.
 *
 * Tensor convention: e_i (x) e_j of H (x) H has flat index i * n + j, and
 * e_i (x) e_j (x) e_k of H^{(x)3} has index (i * n + j) * n + k. The
 * comultiplication is an n^2 x n matrix whose column v holds Delta(e_v); the
 * Sweedler legs h^1 (x) h^2 (x) h^3 are the columns of (Delta (x) id) Delta.
 */

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "contra/algebra.hpp"
#include "contra/report.hpp"

namespace contra {

struct HopfData {
  StructureAlgebra algebra;
  Matrix comult;   // n^2 x n
  Vector counit;   // length n
  Matrix antipode; // n x n

  std::size_t dim() const { return algebra.dim(); }

  Vector coproduct(const Vector& v) const { return comult.apply(v); }
  Cyclotomic epsilon(const Vector& v) const {
    Cyclotomic s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_zero() && !counit[i].is_zero()) s += counit[i] * v[i];
    }
    return s;
  }
  Vector apply_antipode(const Vector& v) const { return antipode.apply(v); }
};

/// (Delta (x) id) Delta as an n^3 x n matrix.
inline Matrix iterated_comult(const HopfData& h) {
  const std::size_t n = h.dim();
  Matrix out(n * n * n, n);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const Cyclotomic& c = h.comult(a * n + b, v);
        if (c.is_zero()) continue;
        for (std::size_t a12 = 0; a12 < n * n; ++a12) {
          const Cyclotomic& d = h.comult(a12, a);
          if (!d.is_zero()) out(a12 * n + b, v) += c * d;
        }
      }
  return out;
}

/// (id (x) Delta) Delta as an n^3 x n matrix.
inline Matrix iterated_comult_right(const HopfData& h) {
  const std::size_t n = h.dim();
  Matrix out(n * n * n, n);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const Cyclotomic& c = h.comult(a * n + b, v);
        if (c.is_zero()) continue;
        for (std::size_t b12 = 0; b12 < n * n; ++b12) {
          const Cyclotomic& d = h.comult(b12, b);
          if (!d.is_zero()) out(a * n * n + b12, v) += c * d;
        }
      }
  return out;
}

/// Exhaustive check of coassociativity, counit, bialgebra and antipode axioms on the basis.
inline CheckReport check_hopf_axioms(const HopfData& h, std::string id = "hopf-axioms") {
  return timed_check(std::move(id), [&](CheckReport& report) {
    const std::size_t n = h.dim();
    if (h.comult.rows() != n * n || h.comult.cols() != n || h.counit.size() != n || h.antipode.rows() != n ||
        h.antipode.cols() != n) {
      report.precondition_failed("Hopf data has inconsistent shapes");
      return;
    }
    const Matrix left = iterated_comult(h);
    const Matrix right = iterated_comult_right(h);
    for (std::size_t v = 0; v < n; ++v) {
      if (!report.expect(left.column(v) == right.column(v), "coassociativity", json{{"basis", v}})) break;
    }

    for (std::size_t v = 0; v < n; ++v) {
      Vector eps_id(n), id_eps(n);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          const Cyclotomic& c = h.comult(a * n + b, v);
          if (c.is_zero()) continue;
          eps_id[b] += h.counit[a] * c;
          id_eps[a] += h.counit[b] * c;
        }
      const Vector e = unit_vector(n, v);
      if (!report.expect(eps_id == e && id_eps == e, "counit", json{{"basis", v}})) break;
    }

    const StructureAlgebra square = tensor_product(h.algebra, h.algebra);
    report.expect(h.coproduct(h.algebra.unit()) == square.unit(), "comultiplication preserves the unit");
    report.expect(h.epsilon(h.algebra.unit()) == Cyclotomic(1), "counit preserves the unit");
    bool multiplicative = true;
    for (std::size_t i = 0; i < n && multiplicative; ++i)
      for (std::size_t j = 0; j < n && multiplicative; ++j) {
        const Vector prod = to_dense(h.algebra.product(i, j), n);
        const Vector lhs = h.coproduct(prod);
        const Vector rhs = square.multiply(h.comult.column(i), h.comult.column(j));
        multiplicative = report.expect(lhs == rhs, "comultiplication is multiplicative", json{{"i", i}, {"j", j}}) &&
                         report.expect(h.epsilon(prod) == h.counit[i] * h.counit[j], "counit is multiplicative",
                                       json{{"i", i}, {"j", j}});
      }

    for (std::size_t v = 0; v < n; ++v) {
      Vector s_id(n), id_s(n);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          const Cyclotomic& c = h.comult(a * n + b, v);
          if (c.is_zero()) continue;
          const Vector ea = unit_vector(n, a), eb = unit_vector(n, b);
          axpy(s_id, c, h.algebra.multiply(h.apply_antipode(ea), eb));
          axpy(id_s, c, h.algebra.multiply(ea, h.apply_antipode(eb)));
        }
      const Vector expected = h.counit[v] * h.algebra.unit();
      if (!report.expect(s_id == expected && id_s == expected, "antipode",
                         json{{"basis", v}, {"m(S(x)id)Delta", to_json(s_id)}, {"m(id(x)S)Delta", to_json(id_s)}})) {
        break;
      }
    }
  });
}

/// Throws AxiomError naming the first failed Hopf axiom.
inline void require_hopf_axioms(const HopfData& h) {
  const CheckReport r = check_hopf_axioms(h);
  if (r.passed()) return;
  if (r.status == Status::precondition_failed) throw AxiomError("shape", r.witnesses["precondition"]["what"]);
  const json& first = r.witnesses["failures"][0];
  throw AxiomError(first["what"].get<std::string>(), "Hopf axiom fails", first["witness"]);
}

inline bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

/// Index of g^i x^j in the Taft basis.
inline std::size_t taft_index(int p, int i, int j) {
  return static_cast<std::size_t>(detail::floor_mod(i, p) * p + j);
}

/**
 * The Taft algebra T_p(xi): g^p = 1, x^p = 0, g x = xi x g, with g group-like
 * and x (1, g)-skew primitive. Basis g^i x^j in lexicographic order. The
 * coproduct of a monomial is obtained by multiplying generator coproducts in
 * H (x) H, and the antipode by reversing generator words.
 */
inline HopfData taft(int p, const Cyclotomic& xi) {
  if (!is_prime(p)) throw std::invalid_argument("taft: p must be prime");
  if (root_order(xi) != p) throw std::invalid_argument("taft: xi must be a primitive p-th root of unity");
  const std::size_t n = static_cast<std::size_t>(p * p);
  std::vector<Cyclotomic> xi_pow(static_cast<std::size_t>(p));
  for (int k = 0; k < p; ++k) xi_pow[static_cast<std::size_t>(k)] = xi.pow(k);

  // x^j g^k = xi^{-jk} g^k x^j
  std::vector<SparseVector> table(n * n);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j)
      for (int k = 0; k < p; ++k)
        for (int l = 0; l < p; ++l) {
          if (j + l >= p) continue;
          const Cyclotomic c = xi_pow[static_cast<std::size_t>(detail::floor_mod(-j * k, p))];
          table[taft_index(p, i, j) * n + taft_index(p, k, l)].push_back({taft_index(p, i + k, j + l), c});
        }
  StructureAlgebra algebra(n, std::move(table), unit_vector(n, 0));

  const Vector one = algebra.unit();
  const Vector g = algebra.basis(taft_index(p, 1, 0));
  const Vector x = algebra.basis(taft_index(p, 0, 1));
  const Vector g_inv = algebra.power(g, static_cast<unsigned>(p - 1));

  const StructureAlgebra square = tensor_product(algebra, algebra);
  const Vector delta_g = kron(g, g);
  const Vector delta_x = kron(x, one) + kron(g, x);
  const Vector s_g = g_inv;
  const Vector s_x = Cyclotomic(-1) * algebra.multiply(g_inv, x);

  Matrix comult(n * n, n);
  Matrix antipode(n, n);
  Vector counit(n);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) {
      const std::size_t idx = taft_index(p, i, j);
      const Vector d = square.multiply(square.power(delta_g, static_cast<unsigned>(i)),
                                       square.power(delta_x, static_cast<unsigned>(j)));
      comult.set_column(idx, d);
      antipode.set_column(idx, algebra.multiply(algebra.power(s_x, static_cast<unsigned>(j)),
                                                algebra.power(s_g, static_cast<unsigned>(i))));
      counit[idx] = j == 0 ? Cyclotomic(1) : Cyclotomic(0);
    }
  return {std::move(algebra), std::move(comult), std::move(counit), std::move(antipode)};
}

/// The group algebra k[Z/n] on the basis g^0, ..., g^{n-1}.
inline HopfData group_algebra(int order) {
  if (order < 1) throw std::invalid_argument("group_algebra: order must be positive");
  const std::size_t n = static_cast<std::size_t>(order);
  std::vector<SparseVector> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i * n + j].push_back({(i + j) % n, Cyclotomic(1)});
  StructureAlgebra algebra(n, std::move(table), unit_vector(n, 0));
  Matrix comult(n * n, n), antipode(n, n);
  Vector counit(n, Cyclotomic(1));
  for (std::size_t i = 0; i < n; ++i) {
    comult(i * n + i, i) = Cyclotomic(1);
    antipode((n - i) % n, i) = Cyclotomic(1);
  }
  return {std::move(algebra), std::move(comult), std::move(counit), std::move(antipode)};
}

/**
 * The dual Hopf algebra on the dual basis e^i. Convolution is
 * (chi psi)(h) = chi(h^1) psi(h^2), so the product is the transpose of the
 * comultiplication and vice versa.
 */
inline HopfData dual_hopf(const HopfData& h) {
  const std::size_t n = h.dim();
  std::vector<SparseVector> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t v = 0; v < n; ++v) {
        const Cyclotomic& c = h.comult(a * n + b, v);
        if (!c.is_zero()) table[a * n + b].push_back({v, c});
      }
  StructureAlgebra algebra(n, std::move(table), h.counit);
  Matrix comult(n * n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (const auto& t : h.algebra.product(a, b)) comult(a * n + b, t.index) += t.value;
  return {std::move(algebra), std::move(comult), h.algebra.unit(), h.antipode.transpose()};
}

inline bool is_group_like(const HopfData& h, const Vector& u) {
  return h.coproduct(u) == kron(u, u) && h.epsilon(u) == Cyclotomic(1);
}

/// Passes iff u is invertible, group-like and S^2(e_i) = u e_i u^{-1} on every basis vector.
inline CheckReport check_pivotal(const HopfData& h, const Vector& u, std::string id = "pivotal") {
  return timed_check(std::move(id), [&](CheckReport& report) {
    const auto u_inv = h.algebra.inverse(u);
    if (!u_inv) {
      report.precondition_failed("u is not invertible", to_json(u));
      return;
    }
    report.expect(is_group_like(h, u), "u is group-like", to_json(u));
    const Matrix s2 = h.antipode * h.antipode;
    for (std::size_t i = 0; i < h.dim(); ++i) {
      const Vector e = h.algebra.basis(i);
      const Vector conj = h.algebra.multiply(h.algebra.multiply(u, e), *u_inv);
      if (!report.expect(s2.column(i) == conj, "S^2(h) = u h u^-1",
                         json{{"basis", i}, {"S^2", to_json(s2.column(i))}, {"u h u^-1", to_json(conj)}})) {
        break;
      }
    }
    report.record("basis_checked", h.dim());
  });
}

/// Smallest k >= 1 with S^k = id, or 0 if none up to `bound`.
inline unsigned antipode_order(const HopfData& h, unsigned bound = 64) {
  const Matrix id = Matrix::identity(h.dim());
  Matrix acc = h.antipode;
  for (unsigned k = 1; k <= bound; ++k) {
    if (acc == id) return k;
    acc = acc * h.antipode;
  }
  return 0;
}

struct SelfDuality {
  HopfData taft;
  HopfData dual;
  Matrix forward;  // T_p(xi) -> T_p(xi)^*
  Matrix inverse;  // T_p(xi)^* -> T_p(xi)
  CheckReport report;
};

/**
 * The explicit isomorphism T_p(xi) -> T_p(xi)^*
 *   g^i x^j   -> (j)_{xi^-1}! sum_l xi^{i(j+l)} (g^l x^j)^*
 * and its inverse
 *   (g^i x^j)^* -> 1 / (p (j)_{xi^-1}!) sum_l xi^{-l(i+j)} g^l x^j,
 * with a report covering inverse pair, algebra map, coalgebra map and antipodes.
 */
inline SelfDuality taft_self_duality(int p, const Cyclotomic& xi) {
  HopfData t = taft(p, xi);
  HopfData d = dual_hopf(t);
  const std::size_t n = t.dim();
  const Cyclotomic xi_inv = xi.inverse();
  Matrix forward(n, n), inv(n, n);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) {
      const Cyclotomic fact = q_factorial(static_cast<unsigned>(j), xi_inv);
      const Cyclotomic inv_scale = (Cyclotomic(p) * fact).inverse();
      for (int l = 0; l < p; ++l) {
        forward(taft_index(p, l, j), taft_index(p, i, j)) = fact * xi.pow(static_cast<long>(i) * (j + l));
        inv(taft_index(p, l, j), taft_index(p, i, j)) = inv_scale * xi.pow(-static_cast<long>(l) * (i + j));
      }
    }

  CheckReport report = timed_check("self-duality", [&](CheckReport& r) {
    const Matrix id = Matrix::identity(n);
    r.expect(forward * inv == id && inv * forward == id, "maps are mutually inverse");

    r.expect(forward.apply(t.algebra.unit()) == d.algebra.unit(), "unit preserved");
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = 0; b < n && ok; ++b) {
        const Vector lhs = forward.apply(to_dense(t.algebra.product(a, b), n));
        const Vector rhs = d.algebra.multiply(forward.column(a), forward.column(b));
        ok = r.expect(lhs == rhs, "algebra map", json{{"a", a}, {"b", b}});
      }

    // The dual carries two Hopf structures sharing its algebra: the coproduct
    // chi -> chi(h k) with antipode S^T, and the co-opposite chi -> chi(k h)
    // with antipode (S^-1)^T. Both are tried.
    auto coalgebra_holds = [&](bool opposite) {
      for (std::size_t a = 0; a < n; ++a) {
        Vector lhs(n * n);
        for (std::size_t u = 0; u < n; ++u)
          for (std::size_t v = 0; v < n; ++v) {
            const Cyclotomic& c = t.comult(u * n + v, a);
            if (c.is_zero()) continue;
            axpy(lhs, c, opposite ? kron(forward.column(v), forward.column(u))
                                  : kron(forward.column(u), forward.column(v)));
          }
        if (lhs != d.coproduct(forward.column(a))) return false;
      }
      return true;
    };
    bool counit_ok = true;
    for (std::size_t a = 0; a < n && counit_ok; ++a)
      counit_ok = r.expect(d.epsilon(forward.column(a)) == t.counit[a], "counit preserved", json{{"a", a}});
    const Matrix dual_antipode_inv = *contra::inverse(d.antipode);
    const bool standard = coalgebra_holds(false);
    const bool opposite = coalgebra_holds(true);
    const bool standard_s = d.antipode * forward == forward * t.antipode;
    const bool opposite_s = dual_antipode_inv * forward == forward * t.antipode;
    r.record("coalgebra_map", json{{"standard", standard}, {"co_opposite", opposite}});
    r.record("antipode_map", json{{"standard", standard_s}, {"co_opposite", opposite_s}});
    const char* convention = standard && standard_s ? "standard" : opposite && opposite_s ? "co-opposite" : "none";
    r.record("dual_coproduct_convention", convention);
    r.expect(standard || opposite, "coalgebra map", json{{"standard", standard}, {"co_opposite", opposite}});
    r.expect((standard && standard_s) || (opposite && opposite_s), "commutes with antipodes",
             json{{"standard", standard_s}, {"co_opposite", opposite_s}});
    r.expect(is_group_like(d, forward.column(taft_index(p, 1, 0))), "image of g is group-like");
  });
  report.id = "self-duality[p=" + std::to_string(p) + "]";
  return {std::move(t), std::move(d), std::move(forward), std::move(inv), std::move(report)};
}

inline json to_json(const HopfData& h) {
  json j = to_json(h.algebra);
  j["comult"] = to_json(h.comult)["entries"];
  j["counit"] = to_json(h.counit);
  j["antipode"] = to_json(h.antipode)["entries"];
  return j;
}

inline bool has_hopf_fields(const json& j) {
  return j.is_object() && j.contains("comult") && j.contains("counit") && j.contains("antipode");
}

/// Parses the Hopf schema; throws AxiomError naming the failed axiom.
inline HopfData hopf_from_json(const json& j, const AssociativityPolicy& policy = {}) {
  StructureAlgebra algebra = algebra_from_json(j, policy);
  const std::size_t n = algebra.dim();
  if (!has_hopf_fields(j)) throw std::invalid_argument("Hopf algebra needs \"comult\", \"counit\", \"antipode\"");
  HopfData h{std::move(algebra), matrix_from_json(j.at("comult"), n * n, n), vector_from_json(j.at("counit")),
             matrix_from_json(j.at("antipode"), n, n)};
  if (h.counit.size() != n) throw std::invalid_argument("counit must have dim entries");
  require_hopf_axioms(h);
  return h;
}

}  // namespace contra
