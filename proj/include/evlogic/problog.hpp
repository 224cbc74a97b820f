#ifndef EVLOGIC_PROBLOG_HPP
#define EVLOGIC_PROBLOG_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "evlogic/formula.hpp"
#include "evlogic/rational.hpp"
#include "evlogic/semantics.hpp"

namespace evlogic {

/// Probability of every row of an interpretation space (the permissible
/// probabilistic interpretation vector). Nonnegative, sums to one; in strict
/// mode inconsistent rows carry zero.
class JointDistribution {
 public:
  /// Throws InvalidDistribution.
  JointDistribution(InterpretationSpace space, RationalVector probs, Mode mode = Mode::Strict);

  const InterpretationSpace& space() const { return space_; }
  const RationalVector& probs() const { return probs_; }
  const Rational& operator[](std::size_t row) const { return probs_(static_cast<Eigen::Index>(row)); }
  std::size_t size() const { return space_.size(); }
  Mode mode() const { return mode_; }

 private:
  InterpretationSpace space_;
  RationalVector probs_;
  Mode mode_;
};

struct Fix {
  std::size_t sentence;
  bool value;
};

/// Truth values required of a subset of the sentences; the rest are free.
using MarginSpec = std::vector<Fix>;

/// q(v) = p(s true | S = v) for every row v of the base space.
using ConditionalTable = RationalVector;

struct Bounds {
  Rational lo;
  Rational hi;
};

/// M * P over all 2^n columns: probability of each sentence.
RationalVector valuation(const JointDistribution& joint);

/// p(u): total probability of the rows matching every fixed component of u.
/// Throws IndexOutOfRange, or std::invalid_argument for repeated indices.
Rational marginal(const JointDistribution& joint, const MarginSpec& u);

/// p(u | w). Throws OverlappingSpecs, ZeroProbabilityCondition.
Rational conditional(const JointDistribution& joint, const MarginSpec& u, const MarginSpec& w);

/// p(w | u) through Bayes' formula, p(w) p(u | w) / p(u).
Rational bayes_posterior(const JointDistribution& joint, const MarginSpec& u, const MarginSpec& w);

/// Tight lower and upper probability of `target` over every distribution on
/// the extended frame that gives sentence i probability pi[i]. Strict mode
/// uses consistent columns only. Throws Incoherent when no distribution
/// matches pi, CapExceeded / AtomCapExceeded on oversize input.
Bounds entail_bounds(const SentenceSet& s, std::span<const Rational> pi, const Formula& target,
                     Mode mode = Mode::Strict, const Limits& limits = {});

/// Joint over S + {s}: p'(v, true) = p(v) q(v), p'(v, false) = p(v) (1 - q(v)).
/// In strict mode q is first checked against the realizable rows of the
/// extended frame; throws ImpermissibleConditional on failure.
JointDistribution extend_joint(const JointDistribution& joint, const Formula& s, const ConditionalTable& q,
                               Mode mode = Mode::Strict, const Limits& limits = {});

}  // namespace evlogic

#endif  // EVLOGIC_PROBLOG_HPP
