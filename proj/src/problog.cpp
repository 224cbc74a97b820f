#include "evlogic/problog.hpp"

#include <algorithm>
#include <stdexcept>

#include "evlogic/errors.hpp"
#include "evlogic/linsolve.hpp"

namespace evlogic {

JointDistribution::JointDistribution(InterpretationSpace space, RationalVector probs, Mode mode)
    : space_(std::move(space)), probs_(std::move(probs)), mode_(mode) {
  if (static_cast<std::size_t>(probs_.size()) != space_.size()) {
    throw InvalidDistribution("joint distribution needs " + std::to_string(space_.size()) + " entries, got " +
                              std::to_string(probs_.size()));
  }
  Rational total;
  for (std::size_t r = 0; r < space_.size(); ++r) {
    const Rational& p = (*this)[r];
    if (p.sign() < 0) throw InvalidDistribution("negative probability at row " + std::to_string(r));
    if (mode_ == Mode::Strict && !p.is_zero() && !space_.consistent(r)) {
      throw InvalidDistribution("inconsistent interpretation " + std::to_string(r) + " has nonzero probability");
    }
    total += p;
  }
  if (total != Rational(1)) throw InvalidDistribution("probabilities sum to " + total.str() + ", not 1");
}

namespace {

void check_spec(const MarginSpec& spec, std::size_t n) {
  std::vector<bool> seen(n, false);
  for (const Fix& f : spec) {
    if (f.sentence >= n) throw IndexOutOfRange("sentence index " + std::to_string(f.sentence) + " out of range");
    if (seen[f.sentence]) throw std::invalid_argument("margin specification repeats a sentence");
    seen[f.sentence] = true;
  }
}

bool disjoint(const MarginSpec& a, const MarginSpec& b) {
  return std::none_of(a.begin(), a.end(), [&](const Fix& x) {
    return std::any_of(b.begin(), b.end(), [&](const Fix& y) { return x.sentence == y.sentence; });
  });
}

MarginSpec joined(MarginSpec a, const MarginSpec& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

RationalVector valuation(const JointDistribution& joint) {
  std::vector<std::size_t> all(joint.size());
  for (std::size_t r = 0; r < all.size(); ++r) all[r] = r;
  const SentenceMatrix m = sentence_matrix(joint.space(), all);
  return m.cast<Rational>() * joint.probs();
}

Rational marginal(const JointDistribution& joint, const MarginSpec& u) {
  const InterpretationSpace& space = joint.space();
  check_spec(u, space.sentence_count());
  Rational total;
  for (std::size_t r = 0; r < space.size(); ++r) {
    const bool matches =
        std::all_of(u.begin(), u.end(), [&](const Fix& f) { return space.truth(r, f.sentence) == f.value; });
    if (matches) total += joint[r];
  }
  return total;
}

Rational conditional(const JointDistribution& joint, const MarginSpec& u, const MarginSpec& w) {
  if (!disjoint(u, w)) throw OverlappingSpecs();
  const Rational pw = marginal(joint, w);
  if (pw.is_zero()) throw ZeroProbabilityCondition();
  return marginal(joint, joined(u, w)) / pw;
}

Rational bayes_posterior(const JointDistribution& joint, const MarginSpec& u, const MarginSpec& w) {
  if (!disjoint(u, w)) throw OverlappingSpecs();
  const Rational pu = marginal(joint, u);
  const Rational pw = marginal(joint, w);
  if (pu.is_zero() || pw.is_zero()) throw ZeroProbabilityCondition();
  return pw * conditional(joint, u, w) / pu;
}

Bounds entail_bounds(const SentenceSet& s, std::span<const Rational> pi, const Formula& target, Mode mode,
                     const Limits& limits) {
  if (pi.size() != s.size()) throw std::invalid_argument("need one probability per sentence");
  for (const Rational& p : pi) {
    if (p.sign() < 0 || p > Rational(1)) throw std::invalid_argument("probability " + p.str() + " outside [0, 1]");
  }
  if (s.size() > limits.max_sentences) throw CapExceeded(s.size(), limits.max_sentences);
  Limits extended = limits;
  ++extended.max_sentences;
  const SentenceSet with_target = s.appended({s.fresh_name(), target});
  const InterpretationSpace space = interpretation_space(with_target, extended);
  const std::vector<std::size_t> columns = space.rows(mode);
  const std::size_t n = s.size();

  LinearProgram<Rational> lp;
  lp.variables = columns.size();
  Constraint<Rational> total{{}, Relation::Equal, Rational(1)};
  for (std::size_t k = 0; k < columns.size(); ++k) total.terms.push_back({k, Rational(1)});
  lp.constraints.push_back(std::move(total));
  for (std::size_t i = 0; i < n; ++i) {
    Constraint<Rational> row{{}, Relation::Equal, pi[i]};
    for (std::size_t k = 0; k < columns.size(); ++k) {
      if (space.truth(columns[k], i)) row.terms.push_back({k, Rational(1)});
    }
    lp.constraints.push_back(std::move(row));
  }
  for (std::size_t k = 0; k < columns.size(); ++k) {
    if (space.truth(columns[k], n)) lp.objective.push_back({k, Rational(1)});
  }

  try {
    Bounds b;
    b.lo = solve(lp, Direction::Minimize).optimum;
    b.hi = solve(lp, Direction::Maximize).optimum;
    return b;
  } catch (const Infeasible&) {
    throw Incoherent();
  }
}

JointDistribution extend_joint(const JointDistribution& joint, const Formula& s, const ConditionalTable& q,
                               Mode mode, const Limits& limits) {
  const InterpretationSpace& base = joint.space();
  if (static_cast<std::size_t>(q.size()) != base.size()) {
    throw std::invalid_argument("conditional table needs one entry per interpretation");
  }
  for (Eigen::Index r = 0; r < q.size(); ++r) {
    if (q(r).sign() < 0 || q(r) > Rational(1)) {
      throw std::invalid_argument("conditional probability " + q(r).str() + " outside [0, 1]");
    }
  }
  const SentenceSet& sentences = base.sentences();
  if (sentences.size() > limits.max_sentences) throw CapExceeded(sentences.size(), limits.max_sentences);
  Limits extended = limits;
  ++extended.max_sentences;
  InterpretationSpace space = interpretation_space(sentences.appended({sentences.fresh_name(), s}), extended);

  if (mode == Mode::Strict) {
    for (std::size_t v = 0; v < base.size(); ++v) {
      if (joint[v].is_zero()) continue;
      const Rational& qv = q(static_cast<Eigen::Index>(v));
      if (!space.consistent(2 * v + 1) && !qv.is_zero()) {
        throw ImpermissibleConditional(v, "the new sentence cannot be true here, so q must be 0");
      }
      if (!space.consistent(2 * v) && qv != Rational(1)) {
        throw ImpermissibleConditional(v, "the new sentence cannot be false here, so q must be 1");
      }
    }
  }

  RationalVector probs(static_cast<Eigen::Index>(space.size()));
  for (std::size_t v = 0; v < base.size(); ++v) {
    const Rational& qv = q(static_cast<Eigen::Index>(v));
    probs(static_cast<Eigen::Index>(2 * v + 1)) = joint[v] * qv;
    probs(static_cast<Eigen::Index>(2 * v)) = joint[v] * (Rational(1) - qv);
  }
  return JointDistribution(std::move(space), std::move(probs), mode);
}

}  // namespace evlogic
