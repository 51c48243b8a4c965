#pragma once

/**
 * @file dg.hpp
 * @brief Two-term DG algebras R[theta] with d(theta) = z, and the invariants
 *        computed on them.
 *
 * R sits in degree 0, theta in degree -1 with theta^2 = 0 and d|_R = 0. The
 * degree -1 part R theta is identified with R through r -> r theta.
 *
 * HH^{-1} is the kernel of r theta -> (r z, [r theta, -]). Since theta is
 * central and d vanishes on R, [r theta, s] = (r s - s r) theta, so the kernel
 * is {r in Z(R) : r z = 0}.
 */

#include <string>
#include <utility>
#include <vector>

#include "contra/double.hpp"

namespace contra {

class TwoTermDga {
 public:
  /// Throws std::invalid_argument unless z is central in `ring`.
  TwoTermDga(StructureAlgebra ring, Vector z) : ring_(std::move(ring)), z_(std::move(z)) {
    if (z_.size() != ring_.dim()) throw std::invalid_argument("TwoTermDga: z has the wrong length");
    if (!ring_.is_central(z_)) throw std::invalid_argument("TwoTermDga: d(theta) must be central");
  }

  const StructureAlgebra& ring() const { return ring_; }
  const Vector& z() const { return z_; }

 private:
  StructureAlgebra ring_;
  Vector z_;
};

struct CohomologyProfile {
  std::size_t dim_h_minus1 = 0;
  std::size_t dim_h0 = 0;

  friend bool operator==(const CohomologyProfile&, const CohomologyProfile&) = default;
};

inline json to_json(const CohomologyProfile& c) {
  return json{{"dim_h_minus1", c.dim_h_minus1}, {"dim_h0", c.dim_h0}};
}

inline QuotientAlgebra stable_quotient(const StructureAlgebra& a, const Vector& sigma) {
  return quotient(a, {sigma - a.unit()});
}

inline QuotientAlgebra stable_quotient(const TwistedDouble& d) { return stable_quotient(d.algebra, d.sigma); }

/// {r : r central, r z = 0}, as a subspace of R.
inline Subspace hh_minus_one(const TwoTermDga& c) {
  const StructureAlgebra& r = c.ring();
  const Matrix right_z = r.right_multiplication(c.z());
  if (right_z != r.left_multiplication(c.z())) {
    throw std::logic_error("hh_minus_one: left and right multiplication by z differ");
  }
  const std::size_t n = r.dim();
  RowEchelon rows(n);
  for (std::size_t i = 0; i < n; ++i) rows.insert(right_z.row(i));
  for (std::size_t s = 0; s < n; ++s) {
    // r -> r e_s - e_s r
    const Matrix comm = r.right_multiplication(r.basis(s)) - r.left_multiplication(r.basis(s));
    for (std::size_t i = 0; i < n && rows.rank() < n; ++i) rows.insert(comm.row(i));
  }
  return kernel_from_rows(rows);
}

/// Cohomology of R --(. z)--> R.
inline CohomologyProfile complex_cohomology(const TwoTermDga& c) {
  const Matrix right_z = c.ring().right_multiplication(c.z());
  const std::size_t rk = rank(right_z);
  return {c.ring().dim() - rk, c.ring().dim() - rk};
}

/// zeta_order^a - 1 for every a, together with 0, 2 and -2.
inline std::vector<Cyclotomic> sigma_eigenvalue_candidates(int order) {
  std::vector<Cyclotomic> out;
  for (int a = 0; a < order; ++a) out.push_back(make_root_of_unity(order, a) - Cyclotomic(1));
  for (long c : {0L, 2L, -2L}) {
    if (std::find(out.begin(), out.end(), Cyclotomic(c)) == out.end()) out.emplace_back(c);
  }
  return out;
}

/**
 * Whether left multiplication by sigma - 1 is diagonalizable. When it is, the
 * eigenspace dimensions over `candidates` are recorded and the 0-eigenspace is
 * compared with the stable quotient; a mismatch there is the only failure.
 */
inline CheckReport diagonalizability_report(const StructureAlgebra& a, const Vector& sigma,
                                            const std::vector<Cyclotomic>& candidates,
                                            std::string id = "diagonalizability") {
  return timed_check(std::move(id), [&](CheckReport& report) {
    const Matrix op = a.left_multiplication(sigma - a.unit());
    const Polynomial minpoly = minimal_polynomial(op);
    const bool diagonalizable = is_squarefree(minpoly);
    report.record("minimal_polynomial", minpoly.to_string());
    report.record("diagonalizable", diagonalizable);
    const std::size_t stable_dim = stable_quotient(a, sigma).algebra.dim();
    report.record("stable_quotient_dim", stable_dim);
    if (!diagonalizable) return;
    const EigenSplit split = eigensplit(op, candidates);
    json dims = json::array();
    std::size_t zero_dim = 0;
    for (const auto& e : split.spaces) {
      dims.push_back(json{{"eigenvalue", e.eigenvalue.to_string()}, {"dim", e.space.dim()}});
      if (e.eigenvalue.is_zero()) zero_dim = e.space.dim();
    }
    report.record("eigenspaces", dims);
    report.record("zero_eigenspace_dim", zero_dim);
    if (!split.complete) {
      report.precondition_failed("eigenvalues outside the candidate pool", json{{"minimal_polynomial", minpoly.to_string()}});
      return;
    }
    report.expect(zero_dim == stable_dim, "0-eigenspace matches stable quotient",
                  json{{"zero_eigenspace_dim", zero_dim}, {"stable_quotient_dim", stable_dim}});
  });
}

inline CheckReport diagonalizability_report(const TwistedDouble& d, const std::vector<Cyclotomic>& candidates,
                                            std::string id = "diagonalizability") {
  return diagonalizability_report(d.algebra, d.sigma, candidates, std::move(id));
}

}  // namespace contra
