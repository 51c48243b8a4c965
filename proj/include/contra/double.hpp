#pragma once

/**
 * @file double.hpp
 * @brief The twisted double on End(H), the classical doubles D(H) and D_a(H),
 *        and the Taft-specific generator and presentation checks.
 *
 * The twisted double lives on the elementary maps E_ab : e_b -> e_a of End(H),
 * flat index a * n + b. Its product is evaluated straight from
 *
 *   (f * g)(h) = f(h^1)^2 g( S(f(h^1)^3) h^2 f(h^1)^1 ),
 *
 * expanding Delta(h) and (Delta (x) id) Delta(f(h^1)) on the basis. The
 * element chi(-) h of End(H) is chi (x) h under End(H) = H^* (x) H.
 */

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "contra/expression.hpp"
#include "contra/hopf.hpp"

namespace contra {

struct TwistedDouble {
  HopfData base;
  StructureAlgebra algebra;  // dim n^2 on E_ab
  Vector sigma;              // the identity map
  Vector one;                // eps(-) 1
  Vector sigma_inverse;      // the matrix of S^{-1}

  std::size_t base_dim() const { return base.dim(); }
};

/// End(H) element with matrix m (column b is the image of e_b).
inline Vector endomorphism_element(const Matrix& m) {
  const std::size_t n = m.rows();
  Vector v(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) v[a * n + b] = m(a, b);
  return v;
}

inline Matrix endomorphism_matrix(const Vector& v, std::size_t n) {
  Matrix m(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) m(a, b) = v[a * n + b];
  return m;
}

/// The map h -> chi(h) y, i.e. chi (x) y under End(H) = H^* (x) H.
inline Vector functional_times(const Vector& chi, const Vector& y) {
  const std::size_t n = chi.size();
  Vector v(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (y[a].is_zero()) continue;
    for (std::size_t b = 0; b < n; ++b) {
      if (!chi[b].is_zero()) v[a * n + b] = y[a] * chi[b];
    }
  }
  return v;
}

namespace detail {

struct Leg3 {
  std::size_t first, second, third;
  Cyclotomic coeff;
};

/// Nonzero terms of (Delta (x) id) Delta(e_v), per v.
inline std::vector<std::vector<Leg3>> triple_legs(const HopfData& h) {
  const std::size_t n = h.dim();
  const Matrix t = iterated_comult(h);
  std::vector<std::vector<Leg3>> legs(n);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t idx = 0; idx < n * n * n; ++idx) {
      const Cyclotomic& c = t(idx, v);
      if (!c.is_zero()) legs[v].push_back({idx / (n * n), (idx / n) % n, idx % n, c});
    }
  return legs;
}

}  // namespace detail

inline TwistedDouble build_twisted_double(const HopfData& h, const AssociativityPolicy& policy = {}) {
  const std::size_t n = h.dim(), nn = n * n;
  const auto s_inv = inverse(h.antipode);
  if (!s_inv) throw std::invalid_argument("build_twisted_double: antipode is not invertible");
  const auto legs = detail::triple_legs(h);
  const StructureAlgebra& alg = h.algebra;

  // sandwich[(r * n + v) * n + p] = S(e_r) e_v e_p
  std::vector<Vector> sandwich(n * n * n);
  for (std::size_t r = 0; r < n; ++r) {
    const Vector sr = h.antipode.column(r);
    for (std::size_t v = 0; v < n; ++v) {
      const Vector srv = alg.multiply(sr, alg.basis(v));
      for (std::size_t p = 0; p < n; ++p) sandwich[(r * n + v) * n + p] = alg.multiply(srv, alg.basis(p));
    }
  }

  std::vector<SparseVector> table(nn * nn);
  std::vector<Vector> y(n, Vector(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t d = 0; d < n; ++d) {
        // y[v] = sum over legs of e_a: coeff * [S(e_r) e_v e_p]_d * e_q e_c
        for (std::size_t v = 0; v < n; ++v) {
          y[v].assign(n, Cyclotomic());
          for (const auto& leg : legs[a]) {
            const Cyclotomic& w = sandwich[(leg.third * n + v) * n + leg.first][d];
            if (w.is_zero()) continue;
            const Cyclotomic cw = leg.coeff * w;
            for (const auto& t : alg.product(leg.second, c)) y[v][t.index] += cw * t.value;
          }
        }
        for (std::size_t b = 0; b < n; ++b) {
          Vector out(nn);
          for (std::size_t w = 0; w < n; ++w)
            for (std::size_t v = 0; v < n; ++v) {
              const Cyclotomic& dc = h.comult(b * n + v, w);
              if (dc.is_zero()) continue;
              for (std::size_t x = 0; x < n; ++x) {
                if (!y[v][x].is_zero()) out[x * n + w] += dc * y[v][x];
              }
            }
          table[(a * n + b) * nn + (c * n + d)] = to_sparse(out);
        }
      }

  Vector one = functional_times(h.counit, alg.unit());
  StructureAlgebra algebra(nn, std::move(table), one, Validation::full, policy);
  return {h, std::move(algebra), endomorphism_element(Matrix::identity(n)), std::move(one),
          endomorphism_element(*s_inv)};
}

enum class DoubleFlavor { drinfeld, anti };

inline const char* to_string(DoubleFlavor f) { return f == DoubleFlavor::drinfeld ? "drinfeld" : "anti"; }

struct ClassicalDouble {
  HopfData base;
  DoubleFlavor flavor;
  StructureAlgebra algebra;    // dim n^2 on e_i (x) e^j, index i * n + j
  std::optional<Vector> sigma; // sum_i e_i (x) e^i, anti flavor only
};

namespace detail {

/// twisted[(r * n + m) * n + p] = e_r e_m S'(e_p)
inline std::vector<Vector> twisted_sandwich(const HopfData& h, const Matrix& s_twist) {
  const std::size_t n = h.dim();
  std::vector<Vector> out(n * n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t m = 0; m < n; ++m) {
      const Vector rm = to_dense(h.algebra.product(r, m), n);
      for (std::size_t p = 0; p < n; ++p) out[(r * n + m) * n + p] = h.algebra.multiply(rm, s_twist.column(p));
    }
  return out;
}

/**
 * chi(h^3 (-) S'(h^1)) paired with h^2 for chi = e^j, h = e_k, grouped by the
 * basis index of h^2. S' is S^{-1} for the Drinfeld double and S for the anti double.
 */
inline std::vector<std::pair<std::size_t, Vector>> straighten(std::size_t n, std::size_t j, std::size_t k,
                                                             const std::vector<std::vector<Leg3>>& legs,
                                                             const std::vector<Vector>& sandwich) {
  std::map<std::size_t, Vector> by_middle;
  for (const auto& leg : legs[k]) {
    Vector& f = by_middle.try_emplace(leg.second, Vector(n)).first->second;
    for (std::size_t m = 0; m < n; ++m) {
      const Cyclotomic& c = sandwich[(leg.third * n + m) * n + leg.first][j];
      if (!c.is_zero()) f[m] += leg.coeff * c;
    }
  }
  return {by_middle.begin(), by_middle.end()};
}

}  // namespace detail

inline ClassicalDouble build_classical_double(const HopfData& h, DoubleFlavor flavor,
                                              const AssociativityPolicy& policy = {}) {
  const std::size_t n = h.dim(), nn = n * n;
  const auto s_inv = inverse(h.antipode);
  if (!s_inv) throw std::invalid_argument("build_classical_double: antipode is not invertible");
  const Matrix& s_twist = flavor == DoubleFlavor::drinfeld ? *s_inv : h.antipode;
  const auto legs = detail::triple_legs(h);
  const auto sandwich = detail::twisted_sandwich(h, s_twist);
  const HopfData dual = dual_hopf(h);

  std::vector<SparseVector> table(nn * nn);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      const auto terms = detail::straighten(n, j, k, legs, sandwich);
      for (std::size_t l = 0; l < n; ++l) {
        std::vector<std::pair<std::size_t, Vector>> conv;  // (q, functional * e^l)
        for (const auto& [q, f] : terms) conv.emplace_back(q, dual.algebra.multiply(f, dual.algebra.basis(l)));
        for (std::size_t i = 0; i < n; ++i) {
          Vector out(nn);
          for (const auto& [q, psi] : conv)
            for (const auto& t : h.algebra.product(i, q))
              for (std::size_t v = 0; v < n; ++v) {
                if (!psi[v].is_zero()) out[t.index * n + v] += t.value * psi[v];
              }
          table[(i * n + j) * nn + (k * n + l)] = to_sparse(out);
        }
      }
    }
  StructureAlgebra algebra(nn, std::move(table), kron(h.algebra.unit(), h.counit), Validation::full, policy);
  std::optional<Vector> sigma;
  if (flavor == DoubleFlavor::anti) {
    Vector s(nn);
    for (std::size_t i = 0; i < n; ++i) s[i * n + i] = Cyclotomic(1);
    sigma = std::move(s);
  }
  return {h, flavor, std::move(algebra), std::move(sigma)};
}

/**
 * Checks that the double's product reproduces the straightening
 * relation chi h = h^2 chi(h^3 (-) S'(h^1)) for all basis h, chi, and that
 * H (x) eps and 1 (x) H^* are copies of H and H^*.
 */
inline CheckReport check_straightening(const ClassicalDouble& d, std::string id = "straightening") {
  return timed_check(std::move(id), [&](CheckReport& report) {
    const HopfData& h = d.base;
    const std::size_t n = h.dim();
    const auto s_inv = inverse(h.antipode);
    const Matrix& s_twist = d.flavor == DoubleFlavor::drinfeld ? *s_inv : h.antipode;
    const auto legs = detail::triple_legs(h);
    const auto sandwich = detail::twisted_sandwich(h, s_twist);
    const HopfData dual = dual_hopf(h);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vector lhs = d.algebra.multiply(kron(h.algebra.unit(), unit_vector(n, j)),
                                              kron(unit_vector(n, k), h.counit));
        Vector rhs(n * n);
        for (const auto& leg : legs[k]) {
          Vector f(n);
          for (std::size_t m = 0; m < n; ++m) f[m] = sandwich[(leg.third * n + m) * n + leg.first][j];
          axpy(rhs, leg.coeff, kron(h.algebra.basis(leg.second), f));
        }
        if (!report.expect(lhs == rhs, "straightening relation", json{{"chi", j}, {"h", k}})) return;
      }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const Vector hh = d.algebra.multiply(kron(unit_vector(n, a), h.counit), kron(unit_vector(n, b), h.counit));
        const Vector hh_expected = kron(to_dense(h.algebra.product(a, b), n), h.counit);
        const Vector cc = d.algebra.multiply(kron(h.algebra.unit(), unit_vector(n, a)),
                                             kron(h.algebra.unit(), unit_vector(n, b)));
        const Vector cc_expected = kron(h.algebra.unit(), to_dense(dual.algebra.product(a, b), n));
        if (!report.expect(hh == hh_expected, "H embeds", json{{"a", a}, {"b", b}})) return;
        if (!report.expect(cc == cc_expected, "H^* embeds", json{{"a", a}, {"b", b}})) return;
      }
    report.record("basis_pairs_checked", n * n);
  });
}

struct UhuMap {
  Matrix map;  // D(H) -> D_a(H)
  CheckReport report;
};

/// h (x) chi -> h (x) chi((-) u), checked to be a bijective algebra map D(H) -> D_a(H).
inline UhuMap uhu_map(const HopfData& h, const Vector& u, const ClassicalDouble& drinfeld,
                      const ClassicalDouble& anti, std::string id = "uhu-map") {
  const std::size_t n = h.dim(), nn = n * n;
  Matrix map(nn, nn);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t m = 0; m < n; ++m) {
        const Vector mu = h.algebra.multiply(h.algebra.basis(m), u);
        if (!mu[j].is_zero()) map(i * n + m, i * n + j) = mu[j];
      }
  CheckReport report = timed_check(std::move(id), [&](CheckReport& r) {
    const CheckReport pivotal = check_pivotal(h, u);
    r.absorb("pivotal", pivotal);
    if (!pivotal.passed()) return;
    r.expect(inverse(map).has_value(), "bijective");
    r.expect(map.apply(drinfeld.algebra.unit()) == anti.algebra.unit(), "unit preserved");
    for (std::size_t x = 0; x < nn; ++x)
      for (std::size_t y = 0; y < nn; ++y) {
        const Vector lhs = map.apply(to_dense(drinfeld.algebra.product(x, y), nn));
        const Vector rhs = anti.algebra.multiply(map.column(x), map.column(y));
        if (!r.expect(lhs == rhs, "multiplicative", json{{"x", x}, {"y", y}})) return;
      }
    r.record("basis_pairs_checked", nn * nn);
  });
  return {std::move(map), std::move(report)};
}

inline UhuMap uhu_map(const HopfData& h, const Vector& u, const AssociativityPolicy& policy = {}) {
  return uhu_map(h, u, build_classical_double(h, DoubleFlavor::drinfeld, policy),
                 build_classical_double(h, DoubleFlavor::anti, policy));
}

/// D-hat(T_p(xi)) with the named generators x, x', g, g'.
struct TaftDouble {
  int p = 2;
  Cyclotomic xi;
  SelfDuality duality;
  TwistedDouble twisted;
  std::map<std::string, Vector> generators;

  const StructureAlgebra& algebra() const { return twisted.algebra; }
  const Vector& gen(const std::string& name) const { return generators.at(name); }
};

/**
 * Realizes x = 1 (x) x, g = 1 (x) g, x' = x (x) 1, g' = g (x) 1 inside End(T_p(xi))
 * through End(H) = H^* (x) H and the self-duality map on the first leg.
 */
inline TaftDouble taft_double_generators(int p, const Cyclotomic& xi, const AssociativityPolicy& policy = {}) {
  SelfDuality duality = taft_self_duality(p, xi);
  TwistedDouble twisted = build_twisted_double(duality.taft, policy);
  const StructureAlgebra& h = duality.taft.algebra;
  const Vector& eps = duality.taft.counit;
  const Vector g = h.basis(taft_index(p, 1, 0));
  const Vector x = h.basis(taft_index(p, 0, 1));
  std::map<std::string, Vector> gens;
  gens["x"] = functional_times(eps, x);
  gens["g"] = functional_times(eps, g);
  gens["x'"] = functional_times(duality.forward.apply(x), h.unit());
  gens["g'"] = functional_times(duality.forward.apply(g), h.unit());
  return {p, xi, std::move(duality), std::move(twisted), std::move(gens)};
}

/// Defining relations of the Taft twisted double in x, x', g, g'.
inline std::vector<Relation> taft_double_relations(int p, const Cyclotomic& xi) {
  const Expr x = Expr::generator("x"), xp = Expr::generator("x'");
  const Expr g = Expr::generator("g"), gp = Expr::generator("g'");
  const Cyclotomic xi_inv = xi.inverse();
  const auto up = static_cast<unsigned>(p);
  return {
      {"x^p = 0", pow(x, up), 0},
      {"x'^p = 0", pow(xp, up), 0},
      {"g^p = 1", pow(g, up), 1},
      {"g'^p = 1", pow(gp, up), 1},
      {"g g' = g' g", g * gp, gp * g},
      {"g x = xi x g", g * x, xi * (x * g)},
      {"g' x' = xi x' g'", gp * xp, xi * (xp * gp)},
      {"g x' = xi^-1 x' g", g * xp, xi_inv * (xp * g)},
      {"g' x = xi^-1 x g'", gp * x, xi_inv * (x * gp)},
      {"x x' - xi^-1 x' x = 1 - xi^-1 g'^-1 g", x * xp - xi_inv * (xp * x),
       Expr(1) - xi_inv * (Expr::inverse_of("g'") * g)},
  };
}

/// Joint eigenspaces V_ij of left multiplication by g' (eigenvalue xi^i) and g (xi^j).
inline std::map<std::pair<int, int>, Subspace> taft_grading(const TaftDouble& d) {
  const StructureAlgebra& a = d.algebra();
  const std::size_t n = a.dim();
  const Matrix lgp = a.left_multiplication(d.gen("g'"));
  const Matrix lg = a.left_multiplication(d.gen("g"));
  std::map<std::pair<int, int>, Subspace> out;
  for (int i = 0; i < d.p; ++i)
    for (int j = 0; j < d.p; ++j) {
      const Matrix a1 = lgp - d.xi.pow(i) * Matrix::identity(n);
      const Matrix a2 = lg - d.xi.pow(j) * Matrix::identity(n);
      RowEchelon rows(n);
      for (std::size_t r = 0; r < n; ++r) {
        rows.insert(a1.row(r));
        rows.insert(a2.row(r));
      }
      out.emplace(std::make_pair(i, j), kernel_from_rows(rows));
    }
  return out;
}

/// sum_{l<p} xi^{(i-l)(j+l)} / (l)_{xi^-1}! x'^l x^l
inline Vector sigma_formula(const TaftDouble& d, int i, int j) {
  const StructureAlgebra& a = d.algebra();
  const Cyclotomic xi_inv = d.xi.inverse();
  Vector out = a.zero();
  for (int l = 0; l < d.p; ++l) {
    const Cyclotomic coeff =
        d.xi.pow(static_cast<long>(i - l) * (j + l)) * q_factorial(static_cast<unsigned>(l), xi_inv).inverse();
    const Vector term = a.multiply(a.power(d.gen("x'"), static_cast<unsigned>(l)),
                                   a.power(d.gen("x"), static_cast<unsigned>(l)));
    axpy(out, coeff, term);
  }
  return out;
}

/// sigma agrees with sigma_formula(i, j) on every V_ij of the regular representation.
inline CheckReport verify_sigma_graded_action(const TaftDouble& d, std::string id = "sigma-graded-action") {
  return timed_check(std::move(id), [&](CheckReport& report) {
    const StructureAlgebra& a = d.algebra();
    const auto grading = taft_grading(d);
    std::size_t total = 0;
    json components = json::array();
    for (const auto& [ij, space] : grading) {
      total += space.dim();
      const Vector formula = sigma_formula(d, ij.first, ij.second);
      bool holds = true;
      for (const auto& v : space.basis()) {
        if (a.multiply(d.twisted.sigma, v) != a.multiply(formula, v)) {
          holds = false;
          break;
        }
      }
      components.push_back(json{{"i", ij.first}, {"j", ij.second}, {"dim", space.dim()}, {"holds", holds}});
      report.expect(holds, "sigma formula on V_" + std::to_string(ij.first) + std::to_string(ij.second),
                    json{{"i", ij.first}, {"j", ij.second}});
    }
    report.record("components", components);
    if (total != a.dim()) {
      report.precondition_failed("joint eigenspaces do not span", json{{"total", total}, {"dim", a.dim()}});
    }
  });
}

/// The block D-hat(T_p(xi)) / (g g' - xi^s), with the generator and sigma images.
struct TaftBlock {
  int s = 0;
  QuotientAlgebra quotient;
  std::map<std::string, Vector> generators;
  Vector sigma;

  const StructureAlgebra& algebra() const { return quotient.algebra; }
  const Vector& gen(const std::string& name) const { return generators.at(name); }
};

inline TaftBlock taft_block(const TaftDouble& d, int s) {
  const StructureAlgebra& a = d.algebra();
  const Vector ggp = a.multiply(d.gen("g"), d.gen("g'"));
  QuotientAlgebra q = quotient(a, {ggp - d.xi.pow(s) * a.unit()});
  std::map<std::string, Vector> gens;
  for (const auto& [name, v] : d.generators) gens[name] = q.projection.apply(v);
  Vector sigma = q.projection.apply(d.twisted.sigma);
  return {s, std::move(q), std::move(gens), std::move(sigma)};
}

/// The p-th root of unity q with q^2 = xi^{-1} (unique for odd p).
inline Cyclotomic half_inverse_root(int p, const Cyclotomic& xi) {
  const Cyclotomic target = xi.inverse();
  for (int k = 1; k < p; ++k) {
    const Cyclotomic q = make_root_of_unity(p, k);
    if (q * q == target) return q;
  }
  throw std::invalid_argument("no p-th root of unity squares to xi^-1");
}

/**
 * Inside the block for s, E = q^{s+1}/(q - q^{-1}) x', F = x g', K = q^{s+1} g
 * satisfy the small quantum group relations and generate the block.
 */
inline CheckReport uqsl2_check(const TaftDouble& d, int s, std::string id = "uqsl2") {
  return timed_check(std::move(id), [&](CheckReport& report) {
    if (d.p <= 2) {
      report.precondition_failed("requires an odd prime", json{{"p", d.p}});
      return;
    }
    const TaftBlock block = taft_block(d, s);
    const StructureAlgebra& a = block.algebra();
    const Cyclotomic q = half_inverse_root(d.p, d.xi);
    const Cyclotomic q_inv = q.inverse();
    const Cyclotomic qs = q.pow(s + 1);
    const Cyclotomic diff_inv = (q - q_inv).inverse();
    std::map<std::string, Vector> assignment{
        {"E", (qs * diff_inv) * block.gen("x'")},
        {"F", a.multiply(block.gen("x"), block.gen("g'"))},
        {"K", qs * block.gen("g")},
    };
    const Expr e = Expr::generator("E"), f = Expr::generator("F"), k = Expr::generator("K");
    const Expr k_inv = Expr::inverse_of("K");
    const auto up = static_cast<unsigned>(d.p);
    const std::vector<Relation> relations{
        {"E^p = 0", pow(e, up), 0},
        {"F^p = 0", pow(f, up), 0},
        {"K^p = 1", pow(k, up), 1},
        {"[E,F] = (K - K^-1)/(q - q^-1)", e * f - f * e, diff_inv * (k - k_inv)},
        {"K E K^-1 = q^2 E", k * e * k_inv, (q * q) * e},
        {"K F K^-1 = q^-2 F", k * f * k_inv, (q_inv * q_inv) * f},
    };
    report.record("block_dim", a.dim());
    report.record("q", to_json(q));
    report.absorb("presentation", check_presentation(a, assignment, relations));
    report.expect(a.dim() == static_cast<std::size_t>(d.p * d.p * d.p), "block has dim p^3",
                  json{{"dim", a.dim()}});
  });
}

/// A module over an algebra: the operator of each basis element.
struct ModuleAction {
  std::vector<Matrix> basis_action;

  std::size_t space_dim() const { return basis_action.empty() ? 0 : basis_action.front().rows(); }

  Matrix act(const Vector& a) const {
    Matrix m(space_dim(), space_dim());
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a[i].is_zero()) m = m + a[i] * basis_action[i];
    }
    return m;
  }
};

inline ModuleAction regular_module(const StructureAlgebra& a) {
  ModuleAction m;
  for (std::size_t i = 0; i < a.dim(); ++i) m.basis_action.push_back(a.left_multiplication(a.basis(i)));
  return m;
}

/// Restriction of scalars along an algebra map given by its matrix (target dim x source dim).
inline ModuleAction pullback(const ModuleAction& target_module, const Matrix& algebra_map) {
  ModuleAction m;
  for (std::size_t i = 0; i < algebra_map.cols(); ++i) m.basis_action.push_back(target_module.act(algebra_map.column(i)));
  return m;
}

/// Cohomologically graded data on the module: d raises degree by 1, h lowers it by 1.
struct MixedStructure {
  std::vector<int> degrees;
  Matrix d;
  Matrix h;
};

struct ModuleCheck {
  CheckReport action;
  CheckReport stable;
  std::optional<CheckReport> mixed;
};

/**
 * Verifies that `module` is a module over `d` and reports whether it is stable
 * (sigma acts as the identity) and, when `mixed` is given, whether
 * d^2 = 0, d and h are degree +1/-1 module maps and d h + h d = sigma - 1.
 */
inline ModuleCheck check_module(const StructureAlgebra& d, const ModuleAction& module, const Vector& sigma,
                                const MixedStructure* mixed = nullptr) {
  const std::size_t m = module.space_dim();
  const Matrix id = Matrix::identity(m);
  ModuleCheck out{CheckReport("module-action"), CheckReport("stable"), std::nullopt};
  out.action = timed_check("module-action", [&](CheckReport& r) {
    if (module.basis_action.size() != d.dim()) {
      r.precondition_failed("need one operator per basis element", json{{"given", module.basis_action.size()}});
      return;
    }
    r.expect(module.act(d.unit()) == id, "unit acts as identity");
    for (std::size_t i = 0; i < d.dim(); ++i)
      for (std::size_t j = 0; j < d.dim(); ++j) {
        const Matrix lhs = module.basis_action[i] * module.basis_action[j];
        const Matrix rhs = module.act(to_dense(d.product(i, j), d.dim()));
        if (!r.expect(lhs == rhs, "action is multiplicative", json{{"i", i}, {"j", j}})) return;
      }
  });
  const Matrix rho_sigma = module.basis_action.size() == d.dim() ? module.act(sigma) : id;
  out.stable = timed_check("stable", [&](CheckReport& r) {
    r.expect(rho_sigma == id, "sigma acts as the identity");
  });
  if (mixed != nullptr) {
    out.mixed = timed_check("mixed", [&](CheckReport& r) {
      if (mixed->degrees.size() != m || mixed->d.rows() != m || mixed->h.rows() != m) {
        r.precondition_failed("mixed structure does not match the module dimension");
        return;
      }
      auto respects_degree = [&](const Matrix& op, int shift) {
        for (std::size_t row = 0; row < m; ++row)
          for (std::size_t col = 0; col < m; ++col) {
            if (!op(row, col).is_zero() && mixed->degrees[row] != mixed->degrees[col] + shift) return false;
          }
        return true;
      };
      r.expect(respects_degree(mixed->d, 1), "d has degree +1");
      r.expect(respects_degree(mixed->h, -1), "h has degree -1");
      r.expect((mixed->d * mixed->d).is_zero(), "d^2 = 0");
      for (std::size_t i = 0; i < module.basis_action.size(); ++i) {
        const Matrix& op = module.basis_action[i];
        if (!r.expect(respects_degree(op, 0), "action has degree 0", json{{"basis", i}})) break;
        if (!r.expect(op * mixed->d == mixed->d * op, "d is a module map", json{{"basis", i}})) break;
        if (!r.expect(op * mixed->h == mixed->h * op, "h is a module map", json{{"basis", i}})) break;
      }
      r.expect(mixed->d * mixed->h + mixed->h * mixed->d == rho_sigma - id, "d h + h d = sigma - 1");
    });
  }
  return out;
}

}  // namespace contra
