#pragma once

/**
 * @file expression.hpp
 * @brief Noncommutative expressions over named generators, and presentation checks.
 *
 * Relations such as  x x' - q x' x = 1 - q g'^{-1} g  are written directly in
 * C++ with the overloaded operators below and evaluated inside a concrete
 * StructureAlgebra under an assignment of generators to elements. Formal
 * inverses are only allowed on generators.
 */

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "contra/algebra.hpp"
#include "contra/report.hpp"

namespace contra {

class Expr {
 public:
  enum class Kind { generator, inverse, constant, scale, sum, product, power };

  static Expr generator(std::string name) { return Expr(make(Kind::generator, std::move(name))); }
  static Expr inverse_of(std::string name) { return Expr(make(Kind::inverse, std::move(name))); }

  static Expr constant(Cyclotomic c) {
    auto n = make(Kind::constant, {});
    n->scalar = std::move(c);
    return Expr(n);
  }

  Expr(long c) : Expr(constant(Cyclotomic(c))) {}  // NOLINT: lets relations read `g^p - 1`
  Expr(Cyclotomic c) : Expr(constant(std::move(c))) {}  // NOLINT

  friend Expr operator+(const Expr& a, const Expr& b) { return binary(Kind::sum, a, b); }
  friend Expr operator*(const Expr& a, const Expr& b) { return binary(Kind::product, a, b); }
  friend Expr operator-(const Expr& a, const Expr& b) { return a + scaled(Cyclotomic(-1), b); }
  friend Expr operator-(const Expr& a) { return scaled(Cyclotomic(-1), a); }

  static Expr scaled(Cyclotomic c, const Expr& e) {
    auto n = make(Kind::scale, {});
    n->scalar = std::move(c);
    n->children = {e.node_};
    return Expr(n);
  }

  friend Expr pow(const Expr& e, unsigned k) {
    auto n = make(Kind::power, {});
    n->exponent = k;
    n->children = {e.node_};
    return Expr(n);
  }

  std::string to_string() const { return render(*node_); }

  /// Evaluates in `a`; throws PreconditionError if a formally inverted generator is not invertible.
  Vector evaluate(const StructureAlgebra& a, const std::map<std::string, Vector>& assignment) const {
    return eval(*node_, a, assignment);
  }

  class PreconditionError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

 private:
  struct Node {
    Kind kind;
    std::string name;
    Cyclotomic scalar;
    unsigned exponent = 0;
    std::vector<std::shared_ptr<const Node>> children;
  };

  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  static std::shared_ptr<Node> make(Kind kind, std::string name) {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->name = std::move(name);
    return n;
  }

  static Expr binary(Kind kind, const Expr& a, const Expr& b) {
    auto n = make(kind, {});
    n->children = {a.node_, b.node_};
    return Expr(n);
  }

  static const Vector& lookup(const std::map<std::string, Vector>& assignment, const std::string& name) {
    auto it = assignment.find(name);
    if (it == assignment.end()) throw std::invalid_argument("no element assigned to generator '" + name + "'");
    return it->second;
  }

  static Vector eval(const Node& n, const StructureAlgebra& a, const std::map<std::string, Vector>& assignment) {
    switch (n.kind) {
      case Kind::generator:
        return lookup(assignment, n.name);
      case Kind::inverse: {
        auto inv = a.inverse(lookup(assignment, n.name));
        if (!inv) throw PreconditionError("generator '" + n.name + "' is not invertible");
        return *inv;
      }
      case Kind::constant:
        return n.scalar * a.unit();
      case Kind::scale:
        return n.scalar * eval(*n.children[0], a, assignment);
      case Kind::sum:
        return eval(*n.children[0], a, assignment) + eval(*n.children[1], a, assignment);
      case Kind::product:
        return a.multiply(eval(*n.children[0], a, assignment), eval(*n.children[1], a, assignment));
      case Kind::power:
        return a.power(eval(*n.children[0], a, assignment), n.exponent);
    }
    throw std::logic_error("unknown expression node");
  }

  static std::string render(const Node& n) {
    switch (n.kind) {
      case Kind::generator:
        return n.name;
      case Kind::inverse:
        return n.name + "^-1";
      case Kind::constant:
        return n.scalar.to_string();
      case Kind::scale:
        return "(" + n.scalar.to_string() + ")*" + render(*n.children[0]);
      case Kind::sum:
        return "(" + render(*n.children[0]) + " + " + render(*n.children[1]) + ")";
      case Kind::product:
        return render(*n.children[0]) + "*" + render(*n.children[1]);
      case Kind::power:
        return "(" + render(*n.children[0]) + ")^" + std::to_string(n.exponent);
    }
    return "?";
  }

  std::shared_ptr<const Node> node_;
};

inline Expr operator*(const Cyclotomic& c, const Expr& e) { return Expr::scaled(c, e); }

struct Relation {
  std::string label;
  Expr lhs;
  Expr rhs;
};

/**
 * Evaluates every relation lhs - rhs in `a` and checks that the assigned
 * elements generate all of `a`. A generator that must be inverted but is not
 * invertible yields precondition-failed rather than an exception.
 */
inline CheckReport check_presentation(const StructureAlgebra& a, const std::map<std::string, Vector>& assignment,
                                      const std::vector<Relation>& relations, std::string id = "presentation") {
  return timed_check(std::move(id), [&](CheckReport& report) {
    json checked = json::array();
    for (const auto& rel : relations) {
      Vector residual;
      try {
        residual = rel.lhs.evaluate(a, assignment) - rel.rhs.evaluate(a, assignment);
      } catch (const Expr::PreconditionError& e) {
        report.precondition_failed(e.what(), json{{"relation", rel.label}});
        return;
      }
      const bool holds = is_zero(residual);
      checked.push_back(json{{"relation", rel.label}, {"holds", holds}});
      report.expect(holds, "relation " + rel.label,
                    json{{"lhs", rel.lhs.to_string()}, {"rhs", rel.rhs.to_string()}, {"residual", to_json(residual)}});
    }
    report.record("relations", checked);
    std::vector<Vector> gens;
    for (const auto& [name, v] : assignment) gens.push_back(v);
    const std::size_t generated = subalgebra_generated(a, gens).dim();
    report.record("generated_dim", generated);
    report.record("algebra_dim", a.dim());
    report.expect(generated == a.dim(), "generators span the algebra",
                  json{{"generated_dim", generated}, {"algebra_dim", a.dim()}});
  });
}

}  // namespace contra
