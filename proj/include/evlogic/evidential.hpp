#ifndef EVLOGIC_EVIDENTIAL_HPP
#define EVLOGIC_EVIDENTIAL_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "evlogic/formula.hpp"
#include "evlogic/rational.hpp"
#include "evlogic/semantics.hpp"

namespace evlogic {

struct Combination;

/// Basic probability assignment over subsets of an interpretation frame.
class MassFunction {
 public:
  using FocalMap = std::map<SupportSet, Rational>;

  /// Entries with equal sets are summed and zero masses dropped. In strict
  /// mode every focal element must lie within the consistent rows.
  /// Throws EmptyFocalElement, MassSumNotOne, SpaceMismatch (set over a
  /// different frame size) or InvalidDistribution (negative mass,
  /// inconsistent row in strict mode).
  MassFunction(InterpretationSpace space, const std::vector<std::pair<SupportSet, Rational>>& masses,
               Mode mode = Mode::Strict);

  /// {rows(mode): 1}, total ignorance.
  static MassFunction vacuous(InterpretationSpace space, Mode mode = Mode::Strict);

  const InterpretationSpace& space() const { return space_; }
  const FocalMap& focal() const { return focal_; }
  /// Zero for sets that are not focal.
  Rational mass(const SupportSet& a) const;

  friend bool operator==(const MassFunction&, const MassFunction&) = default;

 private:
  struct Normalized {};
  MassFunction(Normalized, InterpretationSpace space, FocalMap focal)
      : space_(std::move(space)), focal_(std::move(focal)) {}
  friend Combination combine(const MassFunction& m1, const MassFunction& m2);

  InterpretationSpace space_;
  FocalMap focal_;
};

/// [spt, pls] with 0 <= spt <= pls <= 1.
class EvidentialInterval {
 public:
  /// Throws std::invalid_argument when the bounds are out of order or range.
  EvidentialInterval(Rational spt, Rational pls);

  const Rational& spt() const { return spt_; }
  const Rational& pls() const { return pls_; }
  bool is_point() const { return spt_ == pls_; }

  friend bool operator==(const EvidentialInterval&, const EvidentialInterval&) = default;

 private:
  Rational spt_;
  Rational pls_;
};

struct IntervalSystem {
  SentenceSet sentences;
  std::vector<EvidentialInterval> intervals;

  /// Throws std::invalid_argument when the counts differ.
  IntervalSystem(SentenceSet s, std::vector<EvidentialInterval> iv);
};

struct Combination {
  MassFunction mass;
  Rational conflict;
};

/// Spt(A): total mass of focal elements contained in A.
Rational support(const MassFunction& m, const SupportSet& a);
/// Pls(A) = 1 - Spt(complement of A).
Rational plausibility(const MassFunction& m, const SupportSet& a);

/// [Spt(A_i), Pls(A_i)] for every sentence, A_i restricted to consistent rows
/// in strict mode.
IntervalSystem interval_system(const SentenceSet& s, const MassFunction& m, Mode mode = Mode::Strict);

/// Dempster's rule. Throws TotalConflict when every focal pair is disjoint.
Combination combine(const MassFunction& m1, const MassFunction& m2);

enum class IntervalRelation {
  Exact,    // Spt(A_i) = spt_i and Pls(A_i) = pls_i
  Relaxed,  // Spt(A_i) >= spt_i and Pls(A_i) <= pls_i
};

struct EvidentialOptions {
  Mode mode = Mode::Strict;
  IntervalRelation relation = IntervalRelation::Exact;
  /// Focal elements as formulas over the sentence names of the extended set;
  /// the target is reachable under the name SentenceSet::fresh_name(). Empty
  /// means every nonempty subset of the admitted rows.
  std::optional<std::vector<Formula>> focal_family;
};

/// Tightest evidential interval of `target` over every mass function on the
/// extended frame whose intervals satisfy `system`. Throws
/// InfeasibleIntervals, CapExceeded, EmptyFocalElement, UnknownName.
EvidentialInterval evidential_entail(const SentenceSet& s, const IntervalSystem& system, const Formula& target,
                                     const EvidentialOptions& options = {}, const Limits& limits = {});

/// The point probabilities when every interval has collapsed.
std::optional<std::vector<Rational>> collapse_check(const IntervalSystem& system);

}  // namespace evlogic

#endif  // EVLOGIC_EVIDENTIAL_HPP
