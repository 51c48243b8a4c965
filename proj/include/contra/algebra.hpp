#pragma once

/**
 * @file algebra.hpp
 * @brief Finite-dimensional associative unital algebras given by structure constants.
 *
 * The product table is stored sparsely: product(i, j) lists the nonzero
 * coordinates of e_i * e_j. Elements are plain coordinate vectors.
 */

#include <array>
#include <cstdint>
#include <deque>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "contra/linalg.hpp"

namespace contra {

struct Term {
  std::size_t index;
  Cyclotomic value;
};

using SparseVector = std::vector<Term>;

inline SparseVector to_sparse(const Vector& v) {
  SparseVector out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) out.push_back({i, v[i]});
  }
  return out;
}

inline Vector to_dense(const SparseVector& v, std::size_t n) {
  Vector out(n);
  for (const auto& t : v) out[t.index] += t.value;
  return out;
}

/// Exhaustive associativity checking up to `exhaustive_limit`, seeded sampling above.
struct AssociativityPolicy {
  std::size_t exhaustive_limit = 100;
  std::size_t samples = 10000;
  std::uint64_t seed = 0x5eedULL;
};

enum class Validation { full, trusted };

/// A structure that fails one of its defining axioms; `axiom` names which.
class AxiomError : public std::invalid_argument {
 public:
  AxiomError(std::string axiom, const std::string& detail, json witness = json(nullptr))
      : std::invalid_argument(axiom + ": " + detail), axiom_(std::move(axiom)), witness_(std::move(witness)) {}

  const std::string& axiom() const { return axiom_; }
  const json& witness() const { return witness_; }

 private:
  std::string axiom_;
  json witness_;
};

class StructureAlgebra {
 public:
  StructureAlgebra() = default;

  StructureAlgebra(std::size_t dim, std::vector<SparseVector> table, Vector unit,
                   Validation validation = Validation::full, const AssociativityPolicy& policy = {})
      : dim_(dim), table_(std::move(table)), unit_(std::move(unit)) {
    if (table_.size() != dim_ * dim_) throw std::invalid_argument("product table must have dim^2 entries");
    if (unit_.size() != dim_) throw std::invalid_argument("unit must have dim coordinates");
    for (const auto& entry : table_) {
      for (const auto& t : entry) {
        if (t.index >= dim_) throw std::invalid_argument("structure constant index out of range");
      }
    }
    if (validation == Validation::full) validate(policy);
  }

  /// From a dense tensor c[(i * dim + j) * dim + k] with e_i e_j = sum_k c e_k.
  static StructureAlgebra from_dense(std::size_t dim, const std::vector<Cyclotomic>& tensor, Vector unit,
                                     Validation validation = Validation::full,
                                     const AssociativityPolicy& policy = {}) {
    if (tensor.size() != dim * dim * dim) throw std::invalid_argument("structure tensor must have dim^3 entries");
    std::vector<SparseVector> table(dim * dim);
    for (std::size_t ij = 0; ij < dim * dim; ++ij) {
      for (std::size_t k = 0; k < dim; ++k) {
        const auto& c = tensor[ij * dim + k];
        if (!c.is_zero()) table[ij].push_back({k, c});
      }
    }
    return StructureAlgebra(dim, std::move(table), std::move(unit), validation, policy);
  }

  std::size_t dim() const { return dim_; }
  const Vector& unit() const { return unit_; }
  const SparseVector& product(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }

  Cyclotomic structure(std::size_t i, std::size_t j, std::size_t k) const {
    Cyclotomic c;
    for (const auto& t : product(i, j)) {
      if (t.index == k) c += t.value;
    }
    return c;
  }

  Vector basis(std::size_t i) const { return unit_vector(dim_, i); }
  Vector zero() const { return Vector(dim_); }

  Vector multiply(const Vector& a, const Vector& b) const {
    check(a);
    check(b);
    Vector out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (b[j].is_zero()) continue;
        const Cyclotomic ab = a[i] * b[j];
        for (const auto& t : product(i, j)) out[t.index] += ab * t.value;
      }
    }
    return out;
  }

  Vector power(const Vector& a, unsigned k) const {
    Vector out = unit_;
    for (unsigned i = 0; i < k; ++i) out = multiply(out, a);
    return out;
  }

  Vector commutator(const Vector& a, const Vector& b) const { return multiply(a, b) - multiply(b, a); }

  /// Matrix of x -> a x.
  Matrix left_multiplication(const Vector& a) const {
    check(a);
    Matrix m(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        for (const auto& t : product(i, j)) m(t.index, j) += a[i] * t.value;
      }
    }
    return m;
  }

  /// Matrix of x -> x a.
  Matrix right_multiplication(const Vector& a) const {
    check(a);
    Matrix m(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        for (const auto& t : product(j, i)) m(t.index, j) += a[i] * t.value;
      }
    }
    return m;
  }

  bool is_central(const Vector& z) const {
    for (std::size_t i = 0; i < dim_; ++i) {
      const Vector e = basis(i);
      if (multiply(z, e) != multiply(e, z)) return false;
    }
    return true;
  }

  bool is_commutative() const {
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i + 1; j < dim_; ++j) {
        if (to_dense(product(i, j), dim_) != to_dense(product(j, i), dim_)) return false;
      }
    return true;
  }

  /// Two-sided inverse, decided by solving a y = 1 and confirming y a = 1.
  std::optional<Vector> inverse(const Vector& a) const {
    auto y = solve(left_multiplication(a), unit_);
    if (!y || multiply(*y, a) != unit_) return std::nullopt;
    return y;
  }

  /// Throws AxiomError naming the first violated axiom.
  void validate(const AssociativityPolicy& policy = {}) const {
    for (std::size_t i = 0; i < dim_; ++i) {
      const Vector e = basis(i);
      if (multiply(unit_, e) != e || multiply(e, unit_) != e) {
        throw AxiomError("unit", "1 * e_i = e_i * 1 = e_i fails", json{{"i", i}});
      }
    }
    if (auto bad = find_associativity_failure(policy)) {
      throw AxiomError("associativity", "(e_i e_j) e_k != e_i (e_j e_k)",
                       json{{"i", (*bad)[0]}, {"j", (*bad)[1]}, {"k", (*bad)[2]}});
    }
  }

  /// A basis triple (i, j, k) violating associativity, if the policy's search finds one.
  std::optional<std::array<std::size_t, 3>> find_associativity_failure(const AssociativityPolicy& policy = {}) const {
    Vector acc(dim_);
    std::vector<std::size_t> touched;
    auto triple_ok = [&](std::size_t i, std::size_t j, std::size_t k) {
      touched.clear();
      for (const auto& ij : product(i, j)) {
        for (const auto& t : product(ij.index, k)) {
          acc[t.index] += ij.value * t.value;
          touched.push_back(t.index);
        }
      }
      for (const auto& jk : product(j, k)) {
        for (const auto& t : product(i, jk.index)) {
          acc[t.index] -= jk.value * t.value;
          touched.push_back(t.index);
        }
      }
      bool ok = true;
      for (auto idx : touched) {
        if (!acc[idx].is_zero()) ok = false;
        acc[idx] = Cyclotomic();
      }
      return ok;
    };
    if (dim_ <= policy.exhaustive_limit) {
      for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
          for (std::size_t k = 0; k < dim_; ++k) {
            if (!triple_ok(i, j, k)) return std::array<std::size_t, 3>{i, j, k};
          }
      return std::nullopt;
    }
    std::mt19937_64 rng(policy.seed);
    std::uniform_int_distribution<std::size_t> pick(0, dim_ - 1);
    for (std::size_t s = 0; s < policy.samples; ++s) {
      const std::size_t i = pick(rng), j = pick(rng), k = pick(rng);
      if (!triple_ok(i, j, k)) return std::array<std::size_t, 3>{i, j, k};
    }
    return std::nullopt;
  }

 private:
  void check(const Vector& a) const {
    if (a.size() != dim_) {
      throw std::invalid_argument("element has " + std::to_string(a.size()) + " coordinates, algebra has dim " +
                                  std::to_string(dim_));
    }
  }

  std::size_t dim_ = 0;
  std::vector<SparseVector> table_;
  Vector unit_;
};

/// The algebra A (x) B on the Kronecker basis e_i (x) f_j -> i * dim(B) + j.
inline StructureAlgebra tensor_product(const StructureAlgebra& a, const StructureAlgebra& b,
                                       Validation validation = Validation::trusted) {
  const std::size_t na = a.dim(), nb = b.dim(), n = na * nb;
  std::vector<SparseVector> table(n * n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t k = 0; k < na; ++k)
        for (std::size_t l = 0; l < nb; ++l) {
          SparseVector& out = table[(i * nb + j) * n + (k * nb + l)];
          for (const auto& s : a.product(i, k))
            for (const auto& t : b.product(j, l)) out.push_back({s.index * nb + t.index, s.value * t.value});
        }
  Vector unit(n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      if (!a.unit()[i].is_zero() && !b.unit()[j].is_zero()) unit[i * nb + j] = a.unit()[i] * b.unit()[j];
    }
  return StructureAlgebra(n, std::move(table), std::move(unit), validation);
}

/// Kronecker product of coordinate vectors, matching tensor_product's basis order.
inline Vector kron(const Vector& u, const Vector& v) {
  Vector out(u.size() * v.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (!v[j].is_zero()) out[i * v.size() + j] = u[i] * v[j];
    }
  }
  return out;
}

/// The center, as the common kernel of the commutator maps a -> a e_i - e_i a.
inline Subspace center(const StructureAlgebra& a) {
  const std::size_t n = a.dim();
  RowEchelon rows(n);
  for (std::size_t i = 0; i < n && rows.rank() < n; ++i) {
    const Vector e = a.basis(i);
    const Matrix commutator = a.right_multiplication(e) - a.left_multiplication(e);
    for (std::size_t r = 0; r < n && rows.rank() < n; ++r) rows.insert(commutator.row(r));
  }
  return kernel_from_rows(rows);
}

/**
 * Jacobson radical by Dickson's criterion (characteristic zero):
 * rad A = { x : tr L_{x y} = 0 for all y }.
 */
inline Subspace radical(const StructureAlgebra& a) {
  const std::size_t n = a.dim();
  Vector trace(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& t : a.product(k, j)) {
        if (t.index == j) trace[k] += t.value;
      }
    }
  }
  // gram(j, i) = tr L_{e_i e_j}; a row per y = e_j acting on x's coordinates
  Matrix gram(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Cyclotomic s;
      for (const auto& t : a.product(i, j)) s += t.value * trace[t.index];
      gram(j, i) = s;
    }
  return kernel(gram);
}

inline bool is_semisimple(const StructureAlgebra& a) { return radical(a).dim() == 0; }

/// Two-sided ideal generated by `gens`: closure under left and right multiplication by the basis.
inline Subspace ideal_closure(const StructureAlgebra& a, const std::vector<Vector>& gens) {
  const std::size_t n = a.dim();
  Subspace ideal(n);
  std::deque<Vector> queue;
  for (const auto& g : gens) {
    if (ideal.add(g)) queue.push_back(g);
  }
  while (!queue.empty() && ideal.dim() < n) {
    const Vector v = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < n && ideal.dim() < n; ++i) {
      const Vector e = a.basis(i);
      Vector left = a.multiply(e, v);
      if (ideal.add(left)) queue.push_back(std::move(left));
      Vector right = a.multiply(v, e);
      if (ideal.add(right)) queue.push_back(std::move(right));
    }
  }
  return ideal;
}

struct QuotientAlgebra {
  StructureAlgebra algebra;
  Matrix projection;                   // dim(quotient) x dim(A)
  Subspace ideal;
  std::vector<std::size_t> complement;  // original basis indices kept as the quotient basis
};

/**
 * A / (gens). The quotient basis is the lexicographically earliest set of
 * original basis vectors that stay independent modulo the ideal. When 1 lies
 * in the ideal the result is the zero algebra (dim 0).
 */
inline QuotientAlgebra quotient(const StructureAlgebra& a, const std::vector<Vector>& gens) {
  const std::size_t n = a.dim();
  Subspace ideal = ideal_closure(a, gens);
  if (ideal.contains(a.unit())) {
    return {StructureAlgebra(0, {}, {}, Validation::trusted), Matrix(0, n), std::move(ideal), {}};
  }
  RowEchelon span(n);
  for (const auto& v : ideal.basis()) span.insert(v);
  std::vector<std::size_t> complement;
  for (std::size_t k = 0; k < n; ++k) {
    if (span.insert(unit_vector(n, k))) complement.push_back(k);
  }
  const std::size_t m = complement.size();
  std::vector<Vector> columns;
  for (auto k : complement) columns.push_back(unit_vector(n, k));
  for (const auto& v : ideal.basis()) columns.push_back(v);
  const auto change = inverse(Matrix::from_columns(n, columns));
  if (!change) throw std::logic_error("quotient complement does not span");
  Matrix projection(m, n);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < n; ++c) projection(r, c) = (*change)(r, c);

  std::vector<SparseVector> table(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      table[i * m + j] = to_sparse(projection.apply(to_dense(a.product(complement[i], complement[j]), n)));
    }
  StructureAlgebra q(m, std::move(table), projection.apply(a.unit()), Validation::trusted);
  return {std::move(q), std::move(projection), std::move(ideal), std::move(complement)};
}

/// Smallest unital subalgebra containing `gens`.
inline Subspace subalgebra_generated(const StructureAlgebra& a, const std::vector<Vector>& gens) {
  const std::size_t n = a.dim();
  Subspace span(n);
  std::vector<Vector> members;
  std::deque<std::size_t> queue;
  auto add = [&](Vector v) {
    if (span.add(v)) {
      members.push_back(std::move(v));
      queue.push_back(members.size() - 1);
    }
  };
  add(a.unit());
  for (const auto& g : gens) add(g);
  while (!queue.empty() && span.dim() < n) {
    const std::size_t idx = queue.front();
    queue.pop_front();
    const Vector v = members[idx];
    for (std::size_t w = 0; w < members.size() && span.dim() < n; ++w) {
      add(a.multiply(v, members[w]));
      add(a.multiply(members[w], v));
    }
  }
  return span;
}

struct AlgebraBlock {
  Cyclotomic eigenvalue;
  StructureAlgebra algebra;
  Matrix embedding;   // dim(A) x dim(block): columns are the block basis inside A
  Matrix projection;  // dim(block) x dim(A): the component along this block
};

/**
 * Splits A along the eigenspaces of left multiplication by a central z.
 * Each eigenspace is a two-sided ideal and a unital algebra in its own right,
 * whose unit is the component of 1.
 */
inline std::vector<AlgebraBlock> central_eigensplit(const StructureAlgebra& a, const Vector& z,
                                                    const std::vector<Cyclotomic>& candidates) {
  if (!a.is_central(z)) throw std::invalid_argument("central_eigensplit: element is not central");
  const std::size_t n = a.dim();
  const EigenSplit split = eigensplit(a.left_multiplication(z), candidates);
  if (!split.complete) {
    throw std::invalid_argument("central_eigensplit: eigenspaces over the candidates do not span the algebra");
  }
  std::vector<Vector> columns;
  for (const auto& e : split.spaces) columns.insert(columns.end(), e.space.basis().begin(), e.space.basis().end());
  const auto change = inverse(Matrix::from_columns(n, columns));
  if (!change) throw std::logic_error("eigenspaces are not independent");

  std::vector<AlgebraBlock> blocks;
  std::size_t offset = 0;
  for (const auto& e : split.spaces) {
    const std::size_t m = e.space.dim();
    const auto& basis = e.space.basis();
    Matrix projection(m, n);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < n; ++c) projection(r, c) = (*change)(offset + r, c);
    std::vector<SparseVector> table(m * m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) table[i * m + j] = to_sparse(e.space.coordinates(a.multiply(basis[i], basis[j])));
    StructureAlgebra block(m, std::move(table), projection.apply(a.unit()));
    blocks.push_back({e.eigenvalue, std::move(block), e.space.basis_matrix(), std::move(projection)});
    offset += m;
  }
  return blocks;
}

/// Same dimension, unit and structure constants.
inline bool same_structure(const StructureAlgebra& a, const StructureAlgebra& b) {
  if (a.dim() != b.dim() || a.unit() != b.unit()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (to_dense(a.product(i, j), a.dim()) != to_dense(b.product(i, j), b.dim())) return false;
    }
  return true;
}

inline json to_json(const StructureAlgebra& a) {
  json structure = json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < a.dim(); ++j) row.push_back(to_json(to_dense(a.product(i, j), a.dim())));
    structure.push_back(std::move(row));
  }
  return json{{"dim", a.dim()}, {"unit", to_json(a.unit())}, {"structure", structure}};
}

/// Parses the algebra schema and runs the full axiom check (AxiomError on failure).
inline StructureAlgebra algebra_from_json(const json& j, const AssociativityPolicy& policy = {}) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("unit") || !j.contains("structure")) {
    throw std::invalid_argument("algebra must have \"dim\", \"unit\" and \"structure\"");
  }
  const auto n = j.at("dim").get<std::size_t>();
  Vector unit = vector_from_json(j.at("unit"));
  if (unit.size() != n) throw std::invalid_argument("unit must have dim entries");
  const json& s = j.at("structure");
  if (!s.is_array() || s.size() != n) throw std::invalid_argument("structure must be a dim x dim x dim array");
  std::vector<SparseVector> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!s[i].is_array() || s[i].size() != n) throw std::invalid_argument("structure must be a dim x dim x dim array");
    for (std::size_t k = 0; k < n; ++k) {
      Vector v = vector_from_json(s[i][k]);
      if (v.size() != n) throw std::invalid_argument("structure must be a dim x dim x dim array");
      table[i * n + k] = to_sparse(v);
    }
  }
  return StructureAlgebra(n, std::move(table), std::move(unit), Validation::full, policy);
}

}  // namespace contra
