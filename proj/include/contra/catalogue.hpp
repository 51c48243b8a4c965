#pragma once

/**
 * @file catalogue.hpp
 * @brief Named checks over the Taft doubles, the Sweedler blocks and the
 *        group-algebra doubles, with a shared fixture cache and a worker pool.
 *
 * Check ids have the form  <name>@<params> ; selecting <name> selects every
 * parameterization of it.
 */

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "contra/dg.hpp"

namespace contra {

struct RunConfig {
  std::vector<int> primes{2, 3};
  bool allow_large = false;
  unsigned jobs = 0;  // 0: hardware concurrency
  AssociativityPolicy policy;
  std::string json_path;
};

/**
 * Reads {"primes", "allow_large", "jobs", "json", "associativity": {"exhaustive_limit",
 * "samples", "seed"}} over `base`. Unknown keys and wrong types throw std::invalid_argument.
 */
inline RunConfig config_from_json(const json& j, RunConfig base = {}) {
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "primes") {
        base.primes = value.get<std::vector<int>>();
      } else if (key == "allow_large") {
        base.allow_large = value.get<bool>();
      } else if (key == "jobs") {
        base.jobs = value.get<unsigned>();
      } else if (key == "json") {
        base.json_path = value.get<std::string>();
      } else if (key == "associativity") {
        if (!value.is_object()) throw std::invalid_argument("\"associativity\" must be an object");
        for (const auto& [k, v] : value.items()) {
          if (k == "exhaustive_limit") {
            base.policy.exhaustive_limit = v.get<std::size_t>();
          } else if (k == "samples") {
            base.policy.samples = v.get<std::size_t>();
          } else if (k == "seed") {
            base.policy.seed = v.get<std::uint64_t>();
          } else {
            throw std::invalid_argument("unknown associativity key \"" + k + "\"");
          }
        }
      } else {
        throw std::invalid_argument("unknown config key \"" + key + "\"");
      }
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad config value: ") + e.what());
  }
  return base;
}

/// Lazily built, shared objects. Safe to use from several workers.
class Fixtures {
 public:
  explicit Fixtures(AssociativityPolicy policy = {}) : policy_(policy) {}

  const AssociativityPolicy& policy() const { return policy_; }

  static Cyclotomic xi(int p) { return p == 2 ? Cyclotomic(-1) : make_root_of_unity(p, 1); }

  const TaftDouble& taft_double(int p) {
    return get<TaftDouble>("taft-double:" + std::to_string(p), [&] { return taft_double_generators(p, xi(p), policy_); });
  }

  const HopfData& hopf(const std::string& key) {
    return get<HopfData>("hopf:" + key, [&] {
      if (key.rfind("kZ", 0) == 0) return group_algebra(std::stoi(key.substr(2)));
      const int p = std::stoi(key.substr(1));
      return taft(p, xi(p));
    });
  }

  /// D-hat of "kZn" or "Tp".
  const TwistedDouble& twisted(const std::string& key) {
    if (key.front() == 'T') return taft_double(std::stoi(key.substr(1))).twisted;
    return get<TwistedDouble>("twisted:" + key, [&] { return build_twisted_double(hopf(key), policy_); });
  }

  /// D-hat(T_2(-1)) / (g g' - (-1)^s).
  const TaftBlock& sweedler_block(int s) {
    return get<TaftBlock>("sweedler-block:" + std::to_string(s), [&] { return taft_block(taft_double(2), s); });
  }

  const ClassicalDouble& classical(const std::string& key, DoubleFlavor flavor) {
    return get<ClassicalDouble>(std::string("classical:") + to_string(flavor) + ":" + key,
                                [&] { return build_classical_double(hopf(key), flavor, policy_); });
  }

 private:
  struct Slot {
    std::once_flag once;
    std::shared_ptr<const void> value;
  };

  template <typename T, typename Make>
  const T& get(const std::string& key, Make&& make) {
    std::shared_ptr<Slot> slot;
    {
      std::lock_guard lock(mutex_);
      auto& s = slots_[key];
      if (!s) s = std::make_shared<Slot>();
      slot = s;
    }
    std::call_once(slot->once, [&] { slot->value = std::make_shared<const T>(make()); });
    return *static_cast<const T*>(slot->value.get());
  }

  AssociativityPolicy policy_;
  std::mutex mutex_;
  std::unordered_map<std::string, std::shared_ptr<Slot>> slots_;
};

struct CheckEntry {
  std::string id;
  std::string anchor;
  std::vector<std::string> tags;
  std::function<void(Fixtures&, CheckReport&)> body;

  std::string name() const { return id.substr(0, id.find('@')); }
};

namespace checks {

inline void assoc_unital(Fixtures& fx, CheckReport& r, const std::string& key) {
  const TwistedDouble& d = fx.twisted(key);
  const std::size_t n = d.base_dim();
  r.record("dim", d.algebra.dim());
  r.expect(d.algebra.dim() == n * n, "dim is n^2", json{{"dim", d.algebra.dim()}, {"n", n}});
  if (auto bad = d.algebra.find_associativity_failure(fx.policy())) {
    r.expect(false, "associative", json{{"i", (*bad)[0]}, {"j", (*bad)[1]}, {"k", (*bad)[2]}});
  }
  r.expect(d.algebra.unit() == d.one, "unit is eps(-)1");
  for (std::size_t b = 0; b < d.algebra.dim(); ++b) {
    const Vector e = d.algebra.basis(b);
    if (!r.expect(d.algebra.multiply(d.one, e) == e && d.algebra.multiply(e, d.one) == e, "unital",
                  json{{"basis", b}}))
      break;
  }
}

inline void sigma_central_invertible(Fixtures& fx, CheckReport& r, const std::string& key) {
  const TwistedDouble& d = fx.twisted(key);
  const StructureAlgebra& a = d.algebra;
  for (std::size_t b = 0; b < a.dim(); ++b) {
    if (!r.expect(is_zero(a.commutator(d.sigma, a.basis(b))), "sigma central", json{{"basis", b}})) break;
  }
  r.expect(a.multiply(d.sigma, d.sigma_inverse) == d.one, "sigma * S^-1 = 1");
  r.expect(a.multiply(d.sigma_inverse, d.sigma) == d.one, "S^-1 * sigma = 1");
}

inline bool projection_is_algebra_map(const StructureAlgebra& a, const QuotientAlgebra& q) {
  const std::size_t n = a.dim();
  if (q.projection.apply(a.unit()) != q.algebra.unit()) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector lhs = q.projection.apply(to_dense(a.product(i, j), n));
      if (lhs != q.algebra.multiply(q.projection.column(i), q.projection.column(j))) return false;
    }
  return true;
}

/// R (+) R theta with d(r theta) = r (sigma - 1) and h(r) = r theta.
inline std::pair<ModuleAction, MixedStructure> free_mixed_module(const StructureAlgebra& a, const Vector& sigma) {
  const std::size_t n = a.dim();
  ModuleAction m;
  for (std::size_t b = 0; b < n; ++b) {
    const Matrix l = a.left_multiplication(a.basis(b));
    Matrix op(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        op(i, j) = l(i, j);
        op(n + i, n + j) = l(i, j);
      }
    m.basis_action.push_back(std::move(op));
  }
  MixedStructure mixed{std::vector<int>(2 * n, 0), Matrix(2 * n, 2 * n), Matrix(2 * n, 2 * n)};
  const Matrix right = a.right_multiplication(sigma - a.unit());
  for (std::size_t i = 0; i < n; ++i) {
    mixed.degrees[n + i] = -1;
    mixed.h(n + i, i) = Cyclotomic(1);
    for (std::size_t j = 0; j < n; ++j) mixed.d(i, n + j) = right(i, j);
  }
  return {std::move(m), std::move(mixed)};
}

inline void module_checks(CheckReport& r, const StructureAlgebra& a, const Vector& sigma, const QuotientAlgebra& q) {
  r.expect(projection_is_algebra_map(a, q), "projection is an algebra map");
  const ModuleCheck regular = check_module(a, regular_module(a), sigma);
  r.absorb("regular_action", regular.action);
  const bool sigma_is_one = sigma == a.unit();
  r.record("regular_is_stable", regular.stable.passed());
  r.expect(regular.stable.passed() == sigma_is_one, "regular module is stable iff sigma = 1");

  const ModuleAction pulled = pullback(regular_module(q.algebra), q.projection);
  const MixedStructure trivial{std::vector<int>(q.algebra.dim(), 0), Matrix(q.algebra.dim(), q.algebra.dim()),
                               Matrix(q.algebra.dim(), q.algebra.dim())};
  const ModuleCheck stable = check_module(a, pulled, sigma, &trivial);
  r.absorb("pulled_back_action", stable.action);
  r.absorb("pulled_back_stable", stable.stable);
  r.absorb("pulled_back_mixed_zero", *stable.mixed);

  const auto [free_module, free_mixed] = free_mixed_module(a, sigma);
  const ModuleCheck mixed = check_module(a, free_module, sigma, &free_mixed);
  r.absorb("free_mixed", *mixed.mixed);
}

}  // namespace checks

inline std::vector<std::string> group_keys() { return {"kZ1", "kZ2", "kZ3"}; }

inline std::vector<std::string> double_keys(const RunConfig& config) {
  std::vector<std::string> keys = group_keys();
  for (int p : config.primes) keys.push_back("T" + std::to_string(p));
  return keys;
}

/// Throws std::invalid_argument for an unusable configuration.
inline void validate_config(const RunConfig& config) {
  if (config.primes.empty()) throw std::invalid_argument("the prime list is empty");
  for (int p : config.primes) {
    if (!is_prime(p)) throw std::invalid_argument("not a prime: " + std::to_string(p));
    if (p > 3 && !config.allow_large) {
      throw std::invalid_argument("p = " + std::to_string(p) + " needs the large-instance switch");
    }
  }
}

inline std::vector<CheckEntry> build_catalogue(const RunConfig& config) {
  using namespace checks;
  std::vector<CheckEntry> out;
  auto add = [&](std::string id, std::string anchor, std::vector<std::string> tags,
                 std::function<void(Fixtures&, CheckReport&)> body) {
    out.push_back({std::move(id), std::move(anchor), std::move(tags), std::move(body)});
  };
  std::vector<int> primes = config.primes;
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  RunConfig normalized = config;
  normalized.primes = primes;

  for (const auto& key : double_keys(normalized)) {
    add("D2.2-assoc-unital@" + key, "the twisted double on End(H) is associative with unit eps(-)1",
        {"double"}, [key](Fixtures& fx, CheckReport& r) { assoc_unital(fx, r, key); });
    add("D2.2-sigma-central-invertible@" + key, "the identity map is central with inverse S^-1", {"double"},
        [key](Fixtures& fx, CheckReport& r) { sigma_central_invertible(fx, r, key); });
  }

  add("L2.3-stable-quotient@D0", "stable modules are modules over D/(sigma-1); s = 0 Sweedler block",
      {"double", "dg", "sweedler"}, [](Fixtures& fx, CheckReport& r) {
        const TaftBlock& b = fx.sweedler_block(0);
        const QuotientAlgebra q = stable_quotient(b.algebra(), b.sigma);
        r.record("stable_dim", q.algebra.dim());
        r.expect(q.algebra.dim() == 4, "stable quotient has dim 4", json{{"dim", q.algebra.dim()}});
        module_checks(r, b.algebra(), b.sigma, q);
      });
  add("L2.3-stable-quotient@D1", "stable modules are modules over D/(sigma-1); s = 1 Sweedler block",
      {"double", "dg", "sweedler"}, [](Fixtures& fx, CheckReport& r) {
        const TaftBlock& b = fx.sweedler_block(1);
        const StructureAlgebra& a = b.algebra();
        const QuotientAlgebra q = stable_quotient(a, b.sigma);
        const Vector xpx = a.multiply(b.gen("x'"), b.gen("x"));
        r.record("stable_dim", q.algebra.dim());
        r.expect(q.ideal == ideal_closure(a, {xpx}), "(sigma - 1) = (x'x)");
        r.expect(center(q.algebra).dim() == 1, "stable quotient has center dim 1");
        module_checks(r, a, b.sigma, q);
      });
  add("L2.3-stable-quotient@kZ1", "the trivial group gives the ground field", {"double", "dg", "group"},
      [](Fixtures& fx, CheckReport& r) {
        const TwistedDouble& d = fx.twisted("kZ1");
        const QuotientAlgebra q = stable_quotient(d);
        r.expect(d.sigma == d.one, "sigma = 1");
        r.expect(q.algebra.dim() == 1, "quotient is k", json{{"dim", q.algebra.dim()}});
        module_checks(r, d.algebra, d.sigma, q);
      });

  struct DiagCase {
    std::string key;
    bool expect_diagonalizable;
  };
  for (const DiagCase& c : std::vector<DiagCase>{{"D0", true}, {"D1", false}, {"kZ1", true}, {"kZ2", true}, {"kZ3", true}}) {
    add("L2.4-diag-report@" + c.key, "sigma - 1 diagonalizable forces R -> R to match the stable quotient",
        {"dg", c.key.front() == 'D' ? "sweedler" : "group"}, [c](Fixtures& fx, CheckReport& r) {
          const bool block = c.key.front() == 'D';
          const StructureAlgebra* a = nullptr;
          const Vector* sigma = nullptr;
          int order = 2;
          if (block) {
            const TaftBlock& b = fx.sweedler_block(c.key[1] - '0');
            a = &b.algebra();
            sigma = &b.sigma;
          } else {
            const TwistedDouble& d = fx.twisted(c.key);
            a = &d.algebra;
            sigma = &d.sigma;
            order = std::stoi(c.key.substr(2));
          }
          const CheckReport diag = diagonalizability_report(*a, *sigma, sigma_eigenvalue_candidates(order));
          r.absorb("diagonalizability", diag);
          const bool is_diag = diag.witnesses.at("diagonalizable").get<bool>();
          r.expect(is_diag == c.expect_diagonalizable, "diagonalizability",
                   json{{"expected", c.expect_diagonalizable}, {"found", is_diag}});
          const Matrix op = a->left_multiplication(*sigma - a->unit());
          const Subspace ker = kernel(op);
          Subspace sum = column_space(op);
          const std::size_t image_dim = sum.dim();
          for (const auto& v : ker.basis()) sum.add(v);
          const bool splits = sum.dim() == a->dim() && ker.dim() + image_dim == a->dim();
          r.record("kernel_dim", ker.dim());
          r.record("image_dim", image_dim);
          r.record("kernel_plus_image_is_direct_and_full", splits);
          r.expect(splits == c.expect_diagonalizable, "R = ker(sigma-1) (+) im(sigma-1) iff diagonalizable",
                   json{{"kernel_dim", ker.dim()}, {"image_dim", image_dim}, {"sum_dim", sum.dim()}});
          const CohomologyProfile mixed = complex_cohomology(TwoTermDga(*a, *sigma - a->unit()));
          const std::size_t stable_dim = stable_quotient(*a, *sigma).algebra.dim();
          const CohomologyProfile stable{stable_dim, stable_dim};
          r.record("mixed_cohomology", to_json(mixed));
          r.record("stable_cohomology", to_json(stable));
          r.expect(mixed == stable, "cohomology dims of R -> R and of the stable quotient agree",
                   json{{"mixed", to_json(mixed)}, {"stable", to_json(stable)}});
        });
  }

  for (const auto& key : group_keys()) {
    add("P2.5-instance@" + key, "S^2 = id makes sigma - 1 diagonalizable", {"group", "dg"},
        [key](Fixtures& fx, CheckReport& r) {
          const HopfData& h = fx.hopf(key);
          const TwistedDouble& d = fx.twisted(key);
          r.expect(h.antipode * h.antipode == Matrix::identity(h.dim()), "S^2 = id");
          const Matrix op = d.algebra.left_multiplication(d.sigma - d.one);
          const bool diag = is_diagonalizable(op);
          r.record("minimal_polynomial", minimal_polynomial(op).to_string());
          r.expect(diag, "sigma - 1 diagonalizable");
          const QuotientAlgebra q = stable_quotient(d);
          r.record("double_semisimple", is_semisimple(d.algebra));
          r.record("stable_quotient_dim", q.algebra.dim());
          r.expect(is_semisimple(q.algebra), "stable quotient semisimple");
        });
  }

  for (int p : primes) {
    const std::string ps = "@p=" + std::to_string(p);
    const std::string key = "T" + std::to_string(p);
    add("S3-taft-axioms" + ps, "T_p(xi) and its dual satisfy the Hopf axioms", {"taft", "hopf"},
        [key](Fixtures& fx, CheckReport& r) {
          const HopfData& h = fx.hopf(key);
          r.absorb("taft", check_hopf_axioms(h));
          r.absorb("dual", check_hopf_axioms(dual_hopf(h)));
        });
    add("S3-S-squared" + ps, "S^2(x) = xi^-1 x and S^2(g) = g", {"taft", "hopf"},
        [key, p](Fixtures& fx, CheckReport& r) {
          const HopfData& h = fx.hopf(key);
          const Cyclotomic xi = Fixtures::xi(p);
          const Matrix s2 = h.antipode * h.antipode;
          const Vector x = h.algebra.basis(taft_index(p, 0, 1)), g = h.algebra.basis(taft_index(p, 1, 0));
          r.expect(s2.apply(x) == xi.inverse() * x, "S^2(x) = xi^-1 x", json{{"S2x", to_json(s2.apply(x))}});
          r.expect(s2.apply(g) == g, "S^2(g) = g");
          const unsigned order = antipode_order(h);
          r.record("antipode_order", order);
          r.expect(order == static_cast<unsigned>(2 * p), "S has order 2p", json{{"order", order}});
        });
    add("L3.1-self-duality" + ps, "explicit isomorphism T_p(xi) -> T_p(xi)^* and its inverse", {"taft", "hopf"},
        [p](Fixtures& fx, CheckReport& r) {
          const SelfDuality& sd = fx.taft_double(p).duality;
          r.absorb("maps", sd.report);
          for (const char* k : {"coalgebra_map", "antipode_map", "dual_coproduct_convention"}) {
            r.record(k, sd.report.witnesses.at(k));
          }
        });
    add("C3.2-relations" + ps, "x, x', g, g' satisfy the ten defining relations and generate", {"taft", "double"},
        [p](Fixtures& fx, CheckReport& r) {
          const TaftDouble& d = fx.taft_double(p);
          const StructureAlgebra& a = d.algebra();
          r.absorb("presentation", check_presentation(a, d.generators, taft_double_relations(p, d.xi)));
          const Vector ggp = a.multiply(d.gen("g"), d.gen("g'"));
          r.expect(a.is_central(ggp), "g g' central");
          r.expect(a.power(ggp, static_cast<unsigned>(p)) == a.unit(), "(g g')^p = 1");
        });
    add("C3.2-grading" + ps, "joint eigenspaces of g', g and the degree shifts of x, x'", {"taft", "double"},
        [p](Fixtures& fx, CheckReport& r) {
          const TaftDouble& d = fx.taft_double(p);
          const StructureAlgebra& a = d.algebra();
          const auto grading = taft_grading(d);
          std::size_t total = 0;
          auto shifted = [&](int i, int j) { return grading.at({((i % p) + p) % p, ((j % p) + p) % p}); };
          for (const auto& [ij, space] : grading) {
            total += space.dim();
            const auto [i, j] = ij;
            r.expect(space.dim() == static_cast<std::size_t>(p * p), "component dim p^2",
                     json{{"i", i}, {"j", j}, {"dim", space.dim()}});
            for (const auto& v : space.basis()) {
              if (!r.expect(shifted(i - 1, j + 1).contains(a.multiply(d.gen("x"), v)), "x shifts (i,j) -> (i-1,j+1)",
                            json{{"i", i}, {"j", j}}))
                break;
              if (!r.expect(shifted(i + 1, j - 1).contains(a.multiply(d.gen("x'"), v)),
                            "x' shifts (i,j) -> (i+1,j-1)", json{{"i", i}, {"j", j}}))
                break;
            }
          }
          r.expect(total == a.dim(), "eigenspaces span", json{{"total", total}});
        });
    add("C3.2-sigma-action" + ps, "sigma acts on V_ij by the sum over x'^l x^l", {"taft", "double"},
        [p](Fixtures& fx, CheckReport& r) { r.absorb("action", verify_sigma_graded_action(fx.taft_double(p))); });
    add("E3.15-split" + ps, "g g' splits the double into p blocks of dim p^3", {"taft", "double"},
        [p](Fixtures& fx, CheckReport& r) {
          const TaftDouble& d = fx.taft_double(p);
          const StructureAlgebra& a = d.algebra();
          std::vector<Cyclotomic> candidates;
          for (int s = 0; s < p; ++s) candidates.push_back(d.xi.pow(s));
          const auto blocks = central_eigensplit(a, a.multiply(d.gen("g"), d.gen("g'")), candidates);
          json dims = json::array();
          for (const auto& b : blocks) dims.push_back(b.algebra.dim());
          r.record("block_dims", dims);
          r.expect(blocks.size() == static_cast<std::size_t>(p), "p blocks", json{{"blocks", blocks.size()}});
          for (const auto& b : blocks) {
            r.expect(b.algebra.dim() == static_cast<std::size_t>(p * p * p), "block dim p^3",
                     json{{"eigenvalue", b.eigenvalue.to_string()}, {"dim", b.algebra.dim()}});
          }
        });
    if (p > 2) {
      for (int s = 0; s < p; ++s) {
        add("S3.2-uqsl2" + ps + ",s=" + std::to_string(s), "E, F, K present u_q(sl2) on the block g g' = xi^s",
            {"taft", "double"}, [p, s](Fixtures& fx, CheckReport& r) { r.absorb("uqsl2", uqsl2_check(fx.taft_double(p), s)); });
      }
    }
    add("A.3-uhu-iso" + ps, "h (x) chi -> h (x) chi((-)u) is an algebra isomorphism D(H) -> D_a(H) for u = g^-1",
        {"taft", "classical"}, [key](Fixtures& fx, CheckReport& r) {
          const HopfData& h = fx.hopf(key);
          const int p = std::stoi(key.substr(1));
          const Vector u = *h.algebra.inverse(h.algebra.basis(taft_index(p, 1, 0)));
          r.absorb("map", uhu_map(h, u, fx.classical(key, DoubleFlavor::drinfeld), fx.classical(key, DoubleFlavor::anti))
                              .report);
        });
    add("A-pivotal-taft" + ps, "S^2(h) = g^-1 h g for every basis h", {"taft", "classical"},
        [key, p](Fixtures& fx, CheckReport& r) {
          const HopfData& h = fx.hopf(key);
          const Vector g = h.algebra.basis(taft_index(p, 1, 0));
          const Vector g_inv = *h.algebra.inverse(g);
          r.absorb("pivotal", check_pivotal(h, g_inv));
          const Matrix s2 = h.antipode * h.antipode;
          for (std::size_t b = 0; b < h.dim(); ++b) {
            const Vector conj = h.algebra.multiply(h.algebra.multiply(g_inv, h.algebra.basis(b)), g);
            if (!r.expect(s2.column(b) == conj, "S^2(h) = g^-1 h g", json{{"basis", b}})) break;
          }
        });
  }
  add("A.3-uhu-iso@kZ2", "with S^2 = id and u = 1 the map is the identity", {"group", "classical"},
      [](Fixtures& fx, CheckReport& r) {
        const HopfData& h = fx.hopf("kZ2");
        const UhuMap m = uhu_map(h, h.algebra.unit(), fx.classical("kZ2", DoubleFlavor::drinfeld),
                                 fx.classical("kZ2", DoubleFlavor::anti));
        r.absorb("map", m.report);
        r.expect(m.map == Matrix::identity(h.dim() * h.dim()), "identity map");
      });

  for (int s : {0, 1}) {
    const std::string ss = "@s=" + std::to_string(s);
    const long parity = s == 0 ? 2 : 0;  // 1 + (-1)^s
    add("E3.22-anticommutator" + ss, "x x' + x' x = 1 + (-1)^s in the Sweedler block", {"sweedler"},
        [s, parity](Fixtures& fx, CheckReport& r) {
          const TaftBlock& b = fx.sweedler_block(s);
          const StructureAlgebra& a = b.algebra();
          const Vector lhs = a.multiply(b.gen("x"), b.gen("x'")) + a.multiply(b.gen("x'"), b.gen("x"));
          r.expect(lhs == Cyclotomic(parity) * a.unit(), "anticommutator", json{{"value", to_json(lhs)}});
        });
    add("E3.23-minpoly" + ss, "(x'x)^2 = (1 + (-1)^s) x'x and its minimal polynomial", {"sweedler"},
        [s, parity](Fixtures& fx, CheckReport& r) {
          const TaftBlock& b = fx.sweedler_block(s);
          const StructureAlgebra& a = b.algebra();
          const Vector xpx = a.multiply(b.gen("x'"), b.gen("x"));
          r.expect(!is_zero(xpx), "x'x nonzero");
          r.expect(a.multiply(xpx, xpx) == Cyclotomic(parity) * xpx, "(x'x)^2");
          const Polynomial m = minimal_polynomial(a.left_multiplication(xpx));
          const Polynomial expected = Polynomial::monomial(2) - Polynomial::monomial(1, Cyclotomic(parity));
          r.record("minimal_polynomial", m.to_string());
          r.expect(m == expected, "minimal polynomial t^2 - (1 + (-1)^s) t", json{{"found", m.to_string()}});
        });
  }

  add("E3.24-sigma-blocks@p=2", "sigma on V_00, V_11, V_01, V_10 of the Sweedler double", {"sweedler"},
      [](Fixtures& fx, CheckReport& r) {
        const TaftDouble& d = fx.taft_double(2);
        const StructureAlgebra& a = d.algebra();
        const Vector xpx = a.multiply(d.gen("x'"), d.gen("x"));
        const auto grading = taft_grading(d);
        const std::map<std::pair<int, int>, Vector> expected{
            {{0, 0}, a.unit() - xpx}, {{1, 1}, xpx - a.unit()}, {{0, 1}, a.unit() + xpx}, {{1, 0}, a.unit() + xpx}};
        for (const auto& [ij, element] : expected) {
          const Subspace& space = grading.at(ij);
          bool holds = space.dim() > 0;
          for (const auto& v : space.basis()) holds = holds && a.multiply(d.twisted.sigma, v) == a.multiply(element, v);
          r.record("V" + std::to_string(ij.first) + std::to_string(ij.second), holds);
          r.expect(holds, "restriction of sigma", json{{"i", ij.first}, {"j", ij.second}});
        }
      });
  add("L3.4-matrix-algebra", "D_0/(sigma - 1) is a 2x2 matrix algebra", {"sweedler"},
      [](Fixtures& fx, CheckReport& r) {
        const TaftBlock& b = fx.sweedler_block(0);
        const QuotientAlgebra q = stable_quotient(b.algebra(), b.sigma);
        const std::size_t rad = radical(q.algebra).dim(), cen = center(q.algebra).dim();
        r.record("dim", q.algebra.dim());
        r.record("radical_dim", rad);
        r.record("center_dim", cen);
        r.expect(q.algebra.dim() == 4, "dim 4");
        r.expect(rad == 0, "semisimple");
        r.expect(cen == 1, "simple");
      });
  add("P3.5-centers", "Z(D_1) = <1, xx', xx'g> and Z(D_1/(x'x)) = <1>", {"sweedler", "dg"},
      [](Fixtures& fx, CheckReport& r) {
        const TaftBlock& b = fx.sweedler_block(1);
        const StructureAlgebra& a = b.algebra();
        const Vector xxp = a.multiply(b.gen("x"), b.gen("x'"));
        const Subspace z = center(a);
        r.record("mixed_center_dim", z.dim());
        r.expect(z == Subspace::span(a.dim(), {a.unit(), xxp, a.multiply(xxp, b.gen("g"))}), "center of D_1",
                 json{{"dim", z.dim()}});
        const QuotientAlgebra q = quotient(a, {a.multiply(b.gen("x'"), b.gen("x"))});
        const Subspace zq = center(q.algebra);
        r.record("stable_center_dim", zq.dim());
        r.expect(zq == Subspace::span(q.algebra.dim(), {q.algebra.unit()}), "center of D_1/(x'x)",
                 json{{"dim", zq.dim()}});
      });
  add("P3.5-hh-separation", "HH^-1 has dim 2 for D_1[theta] and dim 1 for D_1/(x'x)[theta]", {"sweedler", "dg"},
      [](Fixtures& fx, CheckReport& r) {
        const TaftBlock& b = fx.sweedler_block(1);
        const StructureAlgebra& a = b.algebra();
        const Vector xpx = a.multiply(b.gen("x'"), b.gen("x"));
        const Vector xxp = a.multiply(b.gen("x"), b.gen("x'"));
        const Subspace mixed = hh_minus_one(TwoTermDga(a, xpx));
        const QuotientAlgebra q = quotient(a, {xpx});
        const Subspace stable = hh_minus_one(TwoTermDga(q.algebra, q.algebra.zero()));
        r.record("dims", json{{"mixed", mixed.dim()}, {"stable", stable.dim()}});
        r.expect(mixed == Subspace::span(a.dim(), {xxp, a.multiply(xxp, b.gen("g"))}), "mixed HH^-1 = <xx', xx'g>",
                 json{{"dim", mixed.dim()}});
        r.expect(stable == Subspace::span(q.algebra.dim(), {q.algebra.unit()}), "stable HH^-1 = <1>",
                 json{{"dim", stable.dim()}});
      });

  std::vector<std::string> classical_keys{"kZ2", "kZ3"};
  for (int p : primes) classical_keys.push_back("T" + std::to_string(p));
  for (const auto& key : classical_keys) {
    add("A.1/A.2-straightening@" + key, "products in D(H), D_a(H) follow the straightening relations",
        {"classical"}, [key](Fixtures& fx, CheckReport& r) {
          const HopfData& h = fx.hopf(key);
          const ClassicalDouble& dd = fx.classical(key, DoubleFlavor::drinfeld);
          const ClassicalDouble& da = fx.classical(key, DoubleFlavor::anti);
          r.absorb("drinfeld", check_straightening(dd));
          r.absorb("anti", check_straightening(da));
          const bool involutive = h.antipode * h.antipode == Matrix::identity(h.dim());
          const bool equal = same_structure(dd.algebra, da.algebra);
          r.record("S_squared_is_id", involutive);
          r.record("doubles_coincide", equal);
          if (involutive) r.expect(equal, "D(H) = D_a(H) when S^2 = id");
          if (key.front() == 'T') {
            // (1 (x) chi)(g (x) eps) = g (x) chi(g (-) g^-1)
            const int p = std::stoi(key.substr(1));
            const std::size_t n = h.dim();
            const Vector g = h.algebra.basis(taft_index(p, 1, 0));
            const Vector g_inv = *h.algebra.inverse(g);
            for (const ClassicalDouble* d : {&dd, &da}) {
              for (std::size_t j = 0; j < n; ++j) {
                Vector chi_conj(n);
                for (std::size_t m = 0; m < n; ++m)
                  chi_conj[m] = h.algebra.multiply(h.algebra.multiply(g, h.algebra.basis(m)), g_inv)[j];
                const Vector lhs = d->algebra.multiply(kron(h.algebra.unit(), unit_vector(n, j)), kron(g, h.counit));
                if (!r.expect(lhs == kron(g, chi_conj), "chi g = g chi(g (-) g^-1)",
                              json{{"flavor", to_string(d->flavor)}, {"chi", j}}))
                  break;
              }
            }
          }
        });
    add("A.2-sigma-central@" + key, "sum_i e_i (x) e^i is central in D_a(H)", {"classical"},
        [key](Fixtures& fx, CheckReport& r) {
          const ClassicalDouble& da = fx.classical(key, DoubleFlavor::anti);
          for (std::size_t b = 0; b < da.algebra.dim(); ++b) {
            if (!r.expect(is_zero(da.algebra.commutator(*da.sigma, da.algebra.basis(b))), "sigma central",
                          json{{"basis", b}}))
              break;
          }
        });
  }

  std::sort(out.begin(), out.end(), [](const CheckEntry& a, const CheckEntry& b) { return a.id < b.id; });
  return out;
}

/// Entries whose id or name is listed, or that carry one of the tags. Unknown ids are returned in `unknown`.
inline std::vector<CheckEntry> select_checks(const std::vector<CheckEntry>& catalogue, const std::vector<std::string>& ids,
                                             const std::vector<std::string>& tags, std::vector<std::string>& unknown) {
  if (ids.empty() && tags.empty()) return catalogue;
  std::set<std::string> chosen;
  for (const auto& id : ids) {
    bool found = false;
    for (const auto& e : catalogue) {
      if (e.id == id || e.name() == id) {
        chosen.insert(e.id);
        found = true;
      }
    }
    if (!found) unknown.push_back(id);
  }
  for (const auto& e : catalogue)
    for (const auto& t : tags)
      if (std::find(e.tags.begin(), e.tags.end(), t) != e.tags.end()) chosen.insert(e.id);
  std::vector<CheckEntry> out;
  for (const auto& e : catalogue)
    if (chosen.count(e.id)) out.push_back(e);
  return out;
}

struct RunResult {
  std::vector<CheckReport> reports;  // sorted by id
  std::vector<std::string> internal_errors;

  bool all_passed() const {
    return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.passed(); });
  }
};

inline RunResult run_checks(const std::vector<CheckEntry>& entries, Fixtures& fixtures, unsigned jobs = 0) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(1, entries.size())));
  std::vector<CheckReport> reports(entries.size());
  std::vector<std::string> errors(entries.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++) {
      const CheckEntry& e = entries[i];
      try {
        reports[i] = timed_check(e.id, [&](CheckReport& r) { e.body(fixtures, r); });
      } catch (const std::exception& ex) {
        reports[i] = CheckReport(e.id);
        reports[i].expect(false, "internal error", json(ex.what()));
        errors[i] = e.id + ": " + ex.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  RunResult result;
  std::vector<std::size_t> order(entries.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return entries[a].id < entries[b].id; });
  for (std::size_t i : order) {
    result.reports.push_back(std::move(reports[i]));
    if (!errors[i].empty()) result.internal_errors.push_back(errors[i]);
  }
  return result;
}

inline json report_json(const RunResult& result, bool include_elapsed = true) {
  json checks = json::array();
  std::size_t counts[3] = {0, 0, 0};
  for (const auto& r : result.reports) {
    checks.push_back(r.to_json(include_elapsed));
    ++counts[static_cast<int>(r.status)];
  }
  return json{{"checks", checks},
              {"summary",
               {{"total", result.reports.size()},
                {"pass", counts[0]},
                {"fail", counts[1]},
                {"precondition_failed", counts[2]},
                {"all_passed", result.all_passed()}}}};
}

}  // namespace contra
