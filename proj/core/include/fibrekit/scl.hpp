#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "fibrekit/arith.hpp"

namespace fibrekit {

enum class BoundKind { Lower, Upper };

const char* to_string(BoundKind kind);

/// An exact bound on the stable commutator length of `subject`.
/// Lower bounds are clamped at zero.
struct RationalBound {
  Rational value;
  BoundKind kind;
  std::string subject;

  static RationalBound lower(Rational value, std::string subject);
  static RationalBound upper(Rational value, std::string subject);

  friend bool operator==(const RationalBound&, const RationalBound&) = default;
};

enum class Rule { Korkmaz, Product, Power, Chain, Cap, Model };

const char* to_string(Rule rule);

struct Derivation;
using DerivationPtr = std::shared_ptr<const Derivation>;

/// A premise is either a bound taken as given or a derived one.
using Premise = std::variant<RationalBound, DerivationPtr>;

/// One applied inequality. `raw` is the right-hand side the rule produces
/// before clamping; `result` is the bound actually asserted.
///
/// Rules and their parameters:
///   KORKMAZ [g]           raw = 1/(18g - 6)
///   PRODUCT               raw = raw(p1) + raw(p2) - 1
///   POWER   [n]           raw = |n| * result(p)
///   CHAIN   [k, n]        raw = raw(p), p being the root of k+1 products
///   CAP                   raw = result(p)
///   MODEL   [a, b, m]     raw = a*m + b, an upper bound
struct Derivation {
  Rule rule;
  std::vector<Premise> premises;
  std::vector<Rational> parameters;
  Rational raw;
  RationalBound result;
};

const RationalBound& bound_of(const Premise& premise);
const Rational& raw_of(const Premise& premise);

/// Recomputes every node from its premises and parameters and compares
/// exactly. Returns false on the first mismatch.
bool replay(const Derivation& derivation);

/// Number of PRODUCT nodes in the tree.
std::size_t count_rule(const Derivation& derivation, Rule rule);

DerivationPtr korkmaz_lower(std::int64_t genus, std::string subject = "scl(T_c)");
DerivationPtr product_rule(Premise lhs, Premise rhs, std::string subject = "scl(gh)");
DerivationPtr power_rule(Premise base, std::int64_t exponent, std::string subject = "scl(g^n)");
DerivationPtr cap_rule(Premise capped, std::string subject);

/// The product-rule chain for T_k ... T_1 phi_0 T_c^n:
///   max(sum twist_lowers + phi0 + |n| tc - (k + 1), 0).
DerivationPtr chain_lower(std::span<const Premise> twist_lowers, Premise phi0_lower,
                          Premise tc_lower, std::int64_t n);

enum class ModelFlag { Illustrative, UserSupplied };

const char* to_string(ModelFlag flag);

/// Affine stand-in C(m) = alpha m + beta for the upper bound on scl of a
/// product of m Dehn twists.
struct CBoundModel {
  Rational alpha;
  Rational beta;
  ModelFlag flag;

  CBoundModel(Rational alpha, Rational beta, ModelFlag flag = ModelFlag::UserSupplied);

  /// alpha = 1, beta = 0.
  static CBoundModel illustrative();

  Rational evaluate(const Rational& m) const;
  DerivationPtr derive(std::int64_t m) const;
};

struct HeightQuery {
  std::int64_t fibre_b1;
  std::int64_t n;
  CBoundModel model;
};

/// Auxiliary Hopf bands charged for every stabilisation.
inline constexpr std::int64_t kAuxiliaryPlumbings = 6;

/// b1 of a stabilisation after k plumbings: fibre_b1 + k + 6.
std::int64_t stabilised_b1(const HeightQuery& q, std::int64_t k);

/// Largest genus of a surface with first Betti number m and nonempty
/// boundary, floored at 3: max(floor(m/2), 3).
std::int64_t capped_genus(std::int64_t m);

/// L(k) = max(|n| / (18 g(k) - 6) - (k + 7), 0).
Rational plumbing_lower(const HeightQuery& q, std::int64_t k);

/// True when a k-plumbing stabilisation is not ruled out: L(k) <= C(m(k)).
bool plumbing_admissible(const HeightQuery& q, std::int64_t k);

/// A single plumbing count k together with the two bounds compared at it.
struct HeightStep {
  std::int64_t k;
  DerivationPtr lower;  // CAP over the product chain
  DerivationPtr upper;  // MODEL
  bool contradiction;   // lower > upper
};

struct HeightResult {
  std::int64_t h_lb;
  /// The refuted step k = h_lb - 1 (if h_lb > 0) and the first admissible
  /// step k = h_lb.
  std::vector<HeightStep> steps;
};

/// Smallest k >= 0 with L(k) <= C(m(k)), without derivations.
std::int64_t minimal_height(const HeightQuery& q);

HeightResult height_lower_bound(const HeightQuery& q);

HeightStep derive_height_step(const HeightQuery& q, std::int64_t k);

/// Replays every derivation and checks that the steps pin down h_lb.
bool verify_height(const HeightQuery& q, const HeightResult& result);

}  // namespace fibrekit
