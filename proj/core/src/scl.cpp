#include "fibrekit/scl.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "fibrekit/error.hpp"

namespace fibrekit {

const char* to_string(BoundKind kind) { return kind == BoundKind::Lower ? "lower" : "upper"; }

const char* to_string(Rule rule) {
  switch (rule) {
    case Rule::Korkmaz:
      return "KORKMAZ";
    case Rule::Product:
      return "PRODUCT";
    case Rule::Power:
      return "POWER";
    case Rule::Chain:
      return "CHAIN";
    case Rule::Cap:
      return "CAP";
    case Rule::Model:
      return "MODEL";
  }
  return "?";
}

const char* to_string(ModelFlag flag) {
  return flag == ModelFlag::Illustrative ? "illustrative" : "user_supplied";
}

RationalBound RationalBound::lower(Rational value, std::string subject) {
  if (value < 0) value = 0;
  return {std::move(value), BoundKind::Lower, std::move(subject)};
}

RationalBound RationalBound::upper(Rational value, std::string subject) {
  return {std::move(value), BoundKind::Upper, std::move(subject)};
}

const RationalBound& bound_of(const Premise& premise) {
  if (const auto* leaf = std::get_if<RationalBound>(&premise)) return *leaf;
  return std::get<DerivationPtr>(premise)->result;
}

const Rational& raw_of(const Premise& premise) {
  if (const auto* leaf = std::get_if<RationalBound>(&premise)) return leaf->value;
  return std::get<DerivationPtr>(premise)->raw;
}

namespace {

Rational abs_of(std::int64_t n) {
  Integer z(static_cast<long>(n));
  return Rational(abs(z));
}

void require_lower(const Premise& premise, Rule rule) {
  if (bound_of(premise).kind != BoundKind::Lower) {
    throw PreconditionError(std::string(to_string(rule)) + " needs lower bounds as premises");
  }
}

DerivationPtr make_lower(Rule rule, std::vector<Premise> premises, std::vector<Rational> parameters,
                         Rational raw, std::string subject) {
  RationalBound result = RationalBound::lower(raw, std::move(subject));
  return std::make_shared<const Derivation>(
      Derivation{rule, std::move(premises), std::move(parameters), std::move(raw), std::move(result)});
}

// Recomputes the raw right-hand side of one node from its premises.
std::optional<Rational> recompute_raw(const Derivation& d) {
  const auto& ps = d.premises;
  const auto& params = d.parameters;
  switch (d.rule) {
    case Rule::Korkmaz: {
      if (!ps.empty() || params.size() != 1 || params[0].get_den() != 1 || params[0] < 3) return {};
      return Rational(1) / (18 * params[0] - 6);
    }
    case Rule::Product: {
      if (ps.size() != 2 || !params.empty()) return {};
      if (bound_of(ps[0]).kind != BoundKind::Lower || bound_of(ps[1]).kind != BoundKind::Lower) return {};
      return Rational(raw_of(ps[0]) + raw_of(ps[1]) - 1);
    }
    case Rule::Power: {
      if (ps.size() != 1 || params.size() != 1 || params[0].get_den() != 1) return {};
      if (bound_of(ps[0]).kind != BoundKind::Lower) return {};
      return Rational(abs(params[0]) * bound_of(ps[0]).value);
    }
    case Rule::Chain: {
      if (ps.size() != 1 || params.size() != 2 || params[0] < 0) return {};
      if (bound_of(ps[0]).kind != BoundKind::Lower) return {};
      return raw_of(ps[0]);
    }
    case Rule::Cap: {
      if (ps.size() != 1 || !params.empty() || bound_of(ps[0]).kind != BoundKind::Lower) return {};
      return bound_of(ps[0]).value;
    }
    case Rule::Model: {
      if (!ps.empty() || params.size() != 3 || params[0] < 0) return {};
      return Rational(params[0] * params[2] + params[1]);
    }
  }
  return {};
}

}  // namespace

bool replay(const Derivation& derivation) {
  for (const auto& premise : derivation.premises) {
    if (const auto* child = std::get_if<DerivationPtr>(&premise)) {
      if (!*child || !replay(**child)) return false;
    }
  }
  const auto raw = recompute_raw(derivation);
  if (!raw || *raw != derivation.raw) return false;
  const RationalBound expected = derivation.rule == Rule::Model
                                     ? RationalBound::upper(*raw, derivation.result.subject)
                                     : RationalBound::lower(*raw, derivation.result.subject);
  return expected == derivation.result;
}

std::size_t count_rule(const Derivation& derivation, Rule rule) {
  std::size_t count = derivation.rule == rule ? 1 : 0;
  for (const auto& premise : derivation.premises) {
    if (const auto* child = std::get_if<DerivationPtr>(&premise)) count += count_rule(**child, rule);
  }
  return count;
}

DerivationPtr korkmaz_lower(std::int64_t genus, std::string subject) {
  if (genus < 3) throw PreconditionError("the twist bound 1/(18g-6) needs a closed surface of genus >= 3");
  const Rational g(static_cast<long>(genus));
  return make_lower(Rule::Korkmaz, {}, {g}, Rational(1) / (18 * g - 6), std::move(subject));
}

DerivationPtr product_rule(Premise lhs, Premise rhs, std::string subject) {
  require_lower(lhs, Rule::Product);
  require_lower(rhs, Rule::Product);
  Rational raw = raw_of(lhs) + raw_of(rhs) - 1;
  return make_lower(Rule::Product, {std::move(lhs), std::move(rhs)}, {}, std::move(raw),
                    std::move(subject));
}

DerivationPtr power_rule(Premise base, std::int64_t exponent, std::string subject) {
  require_lower(base, Rule::Power);
  Rational raw = abs_of(exponent) * bound_of(base).value;
  return make_lower(Rule::Power, {std::move(base)}, {Rational(static_cast<long>(exponent))},
                    std::move(raw), std::move(subject));
}

DerivationPtr cap_rule(Premise capped, std::string subject) {
  require_lower(capped, Rule::Cap);
  Rational raw = bound_of(capped).value;
  return make_lower(Rule::Cap, {std::move(capped)}, {}, std::move(raw), std::move(subject));
}

DerivationPtr chain_lower(std::span<const Premise> twist_lowers, Premise phi0_lower, Premise tc_lower,
                          std::int64_t n) {
  const auto k = static_cast<std::int64_t>(twist_lowers.size());
  DerivationPtr power = power_rule(std::move(tc_lower), n, "scl(T_c^n)");

  // scl(T_k...T_1 phi_0 T_c^n) >= scl(T_k...T_1 phi_0) + scl(T_c^n) - 1 >= ...
  DerivationPtr root;
  if (k == 0) {
    root = product_rule(std::move(phi0_lower), std::move(power), "scl(phi_0 T_c^n)");
  } else {
    Premise twists = twist_lowers.front();
    for (std::int64_t i = 1; i < k; ++i) {
      twists = product_rule(twist_lowers[static_cast<std::size_t>(i)], std::move(twists),
                            "scl(T_" + std::to_string(i + 1) + "...T_1)");
    }
    DerivationPtr head = product_rule(std::move(twists), std::move(phi0_lower), "scl(T_k...T_1 phi_0)");
    root = product_rule(std::move(head), std::move(power), "scl(T_k...T_1 phi_0 T_c^n)");
  }
  Rational raw = root->raw;
  return make_lower(Rule::Chain, {std::move(root)},
                    {Rational(static_cast<long>(k)), Rational(static_cast<long>(n))}, std::move(raw),
                    "scl(phi_tilde_n)");
}

CBoundModel::CBoundModel(Rational alpha_, Rational beta_, ModelFlag flag_)
    : alpha(std::move(alpha_)), beta(std::move(beta_)), flag(flag_) {
  if (alpha < 0) throw PreconditionError("C(m) = alpha m + beta must be non-decreasing (alpha >= 0)");
  if (alpha == 0 && beta < 0) {
    throw PreconditionError("C(m) = beta < 0 is below every clamped lower bound; no height exists");
  }
}

CBoundModel CBoundModel::illustrative() { return CBoundModel(1, 0, ModelFlag::Illustrative); }

Rational CBoundModel::evaluate(const Rational& m) const { return alpha * m + beta; }

DerivationPtr CBoundModel::derive(std::int64_t m) const {
  const Rational mq(static_cast<long>(m));
  Rational raw = evaluate(mq);
  RationalBound result = RationalBound::upper(raw, "scl(phi_bar_n)");
  return std::make_shared<const Derivation>(
      Derivation{Rule::Model, {}, {alpha, beta, mq}, std::move(raw), std::move(result)});
}

namespace {

void require_valid(const HeightQuery& q) {
  if (q.fibre_b1 < 0) throw PreconditionError("fibre_b1 must be non-negative");
}

}  // namespace

std::int64_t stabilised_b1(const HeightQuery& q, std::int64_t k) {
  return q.fibre_b1 + k + kAuxiliaryPlumbings;
}

std::int64_t capped_genus(std::int64_t m) { return std::max<std::int64_t>(m / 2, 3); }

Rational plumbing_lower(const HeightQuery& q, std::int64_t k) {
  const std::int64_t g = capped_genus(stabilised_b1(q, k));
  Rational raw = abs_of(q.n) / Rational(18 * g - 6) - Rational(static_cast<long>(k + kAuxiliaryPlumbings + 1));
  return max(raw, Rational(0));
}

bool plumbing_admissible(const HeightQuery& q, std::int64_t k) {
  return plumbing_lower(q, k) <= q.model.evaluate(Rational(static_cast<long>(stabilised_b1(q, k))));
}

std::int64_t minimal_height(const HeightQuery& q) {
  require_valid(q);
  if (plumbing_admissible(q, 0)) return 0;
  // Admissibility is monotone in k: L(k) never increases, C(m(k)) never decreases.
  std::int64_t refuted = 0;
  std::int64_t admitted = 1;
  while (!plumbing_admissible(q, admitted)) {
    refuted = admitted;
    admitted *= 2;
  }
  while (admitted - refuted > 1) {
    const std::int64_t mid = refuted + (admitted - refuted) / 2;
    (plumbing_admissible(q, mid) ? admitted : refuted) = mid;
  }
  return admitted;
}

HeightStep derive_height_step(const HeightQuery& q, std::int64_t k) {
  require_valid(q);
  if (k < 0) throw PreconditionError("plumbing count must be non-negative");
  const std::int64_t m = stabilised_b1(q, k);
  // Hopf core twists and phi_0 contribute their trivial bound scl >= 0.
  const std::vector<Premise> twists(static_cast<std::size_t>(k + kAuxiliaryPlumbings),
                                    RationalBound::lower(0, "scl(T_i)"));
  DerivationPtr chain = chain_lower(twists, RationalBound::lower(0, "scl(phi_0)"),
                                    korkmaz_lower(capped_genus(m)), q.n);
  HeightStep step{k, cap_rule(std::move(chain), "scl(phi_bar_n)"), q.model.derive(m), false};
  step.contradiction = step.lower->result.value > step.upper->result.value;
  return step;
}

HeightResult height_lower_bound(const HeightQuery& q) {
  HeightResult result{minimal_height(q), {}};
  if (result.h_lb > 0) result.steps.push_back(derive_height_step(q, result.h_lb - 1));
  result.steps.push_back(derive_height_step(q, result.h_lb));
  return result;
}

bool verify_height(const HeightQuery& q, const HeightResult& result) {
  if (result.h_lb < 0) return false;
  const std::size_t expected_steps = result.h_lb > 0 ? 2 : 1;
  if (result.steps.size() != expected_steps) return false;
  for (std::size_t i = 0; i < result.steps.size(); ++i) {
    const auto& step = result.steps[i];
    const bool refuting = i + 1 < result.steps.size();
    if (step.k != result.h_lb - static_cast<std::int64_t>(result.steps.size() - 1 - i)) return false;
    if (!step.lower || !step.upper || !replay(*step.lower) || !replay(*step.upper)) return false;
    if (step.lower->result.value != plumbing_lower(q, step.k)) return false;
    if (step.upper->result.value != q.model.evaluate(Rational(static_cast<long>(stabilised_b1(q, step.k))))) {
      return false;
    }
    const bool contradiction = step.lower->result.value > step.upper->result.value;
    if (contradiction != step.contradiction || contradiction != refuting) return false;
  }
  return true;
}

}  // namespace fibrekit
