#include "evlogic/evidential.hpp"

#include <future>
#include <set>
#include <stdexcept>

#include "evlogic/errors.hpp"
#include "evlogic/linsolve.hpp"

namespace evlogic {

MassFunction::MassFunction(InterpretationSpace space, const std::vector<std::pair<SupportSet, Rational>>& masses,
                           Mode mode)
    : space_(std::move(space)) {
  const SupportSet admitted = space_.row_set(mode);
  Rational total;
  for (const auto& [set, m] : masses) {
    if (set.universe() != space_.size()) throw SpaceMismatch();
    if (set.empty()) throw EmptyFocalElement();
    if (m.sign() < 0) throw InvalidDistribution("negative mass " + m.str());
    if (!set.is_subset_of(admitted)) throw InvalidDistribution("focal element contains an inconsistent interpretation");
    total += m;
    if (!m.is_zero()) focal_[set] += m;
  }
  if (total != Rational(1)) throw MassSumNotOne(total.str());
}

MassFunction MassFunction::vacuous(InterpretationSpace space, Mode mode) {
  SupportSet all = space.row_set(mode);
  return MassFunction(std::move(space), {{std::move(all), Rational(1)}}, mode);
}

Rational MassFunction::mass(const SupportSet& a) const {
  const auto it = focal_.find(a);
  return it == focal_.end() ? Rational(0) : it->second;
}

EvidentialInterval::EvidentialInterval(Rational spt, Rational pls) : spt_(std::move(spt)), pls_(std::move(pls)) {
  if (spt_.sign() < 0 || pls_ > Rational(1) || pls_ < spt_) {
    throw std::invalid_argument("invalid evidential interval [" + spt_.str() + ", " + pls_.str() + "]");
  }
}

IntervalSystem::IntervalSystem(SentenceSet s, std::vector<EvidentialInterval> iv)
    : sentences(std::move(s)), intervals(std::move(iv)) {
  if (intervals.size() != sentences.size()) throw std::invalid_argument("need one interval per sentence");
}

Rational support(const MassFunction& m, const SupportSet& a) {
  if (a.universe() != m.space().size()) throw SpaceMismatch();
  Rational total;
  for (const auto& [focal, mass] : m.focal()) {
    if (focal.is_subset_of(a)) total += mass;
  }
  return total;
}

Rational plausibility(const MassFunction& m, const SupportSet& a) {
  if (a.universe() != m.space().size()) throw SpaceMismatch();
  return Rational(1) - support(m, a.complement());
}

IntervalSystem interval_system(const SentenceSet& s, const MassFunction& m, Mode mode) {
  if (!(m.space().sentences() == s)) throw SpaceMismatch();
  std::vector<EvidentialInterval> out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    const SupportSet a = support_set(m.space(), i, mode == Mode::Strict);
    out.emplace_back(support(m, a), plausibility(m, a));
  }
  return IntervalSystem(s, std::move(out));
}

Combination combine(const MassFunction& m1, const MassFunction& m2) {
  if (!(m1.space() == m2.space())) throw SpaceMismatch();
  MassFunction::FocalMap joint;
  Rational conflict;
  for (const auto& [a, ma] : m1.focal()) {
    for (const auto& [b, mb] : m2.focal()) {
      SupportSet c = a & b;
      if (c.empty()) {
        conflict += ma * mb;
      } else {
        joint[std::move(c)] += ma * mb;
      }
    }
  }
  if (conflict == Rational(1)) throw TotalConflict();
  const Rational scale = Rational(1) - conflict;
  for (auto& entry : joint) entry.second /= scale;
  return Combination{MassFunction(MassFunction::Normalized{}, m1.space(), std::move(joint)), conflict};
}

namespace {

/// Builds the mass LP over `count` focal elements. `within(f, a)` is F ⊆ A
/// and `meets(f, a)` is F ∩ A ≠ ∅ for sentence index a (n = target).
template <class Within, class Meets>
EvidentialInterval solve_mass_lp(std::size_t count, const IntervalSystem& system, IntervalRelation relation,
                                 Within within, Meets meets) {
  const std::size_t n = system.intervals.size();
  LinearProgram<Rational> lp;
  lp.variables = count;
  Constraint<Rational> total{{}, Relation::Equal, Rational(1)};
  total.terms.reserve(count);
  for (std::size_t f = 0; f < count; ++f) total.terms.push_back({f, Rational(1)});
  lp.constraints.push_back(std::move(total));
  const bool exact = relation == IntervalRelation::Exact;
  for (std::size_t i = 0; i < n; ++i) {
    Constraint<Rational> spt{{}, exact ? Relation::Equal : Relation::GreaterEqual, system.intervals[i].spt()};
    Constraint<Rational> pls{{}, exact ? Relation::Equal : Relation::LessEqual, system.intervals[i].pls()};
    for (std::size_t f = 0; f < count; ++f) {
      if (within(f, i)) spt.terms.push_back({f, Rational(1)});
      if (meets(f, i)) pls.terms.push_back({f, Rational(1)});
    }
    lp.constraints.push_back(std::move(spt));
    lp.constraints.push_back(std::move(pls));
  }

  LinearProgram<Rational> lower = lp;
  for (std::size_t f = 0; f < count; ++f) {
    if (within(f, n)) lower.objective.push_back({f, Rational(1)});
  }
  LinearProgram<Rational> upper = std::move(lp);
  for (std::size_t f = 0; f < count; ++f) {
    if (meets(f, n)) upper.objective.push_back({f, Rational(1)});
  }

  try {
    auto hi = std::async(std::launch::async, [&upper] { return solve(upper, Direction::Maximize).optimum; });
    Rational lo = solve(lower, Direction::Minimize).optimum;
    return EvidentialInterval(std::move(lo), hi.get());
  } catch (const Infeasible&) {
    throw InfeasibleIntervals();
  }
}

}  // namespace

EvidentialInterval evidential_entail(const SentenceSet& s, const IntervalSystem& system, const Formula& target,
                                     const EvidentialOptions& options, const Limits& limits) {
  if (!(system.sentences == s)) throw SpaceMismatch();
  if (s.size() > limits.max_sentences) throw CapExceeded(s.size(), limits.max_sentences);
  Limits extended = limits;
  ++extended.max_sentences;
  const InterpretationSpace space = interpretation_space(s.appended({s.fresh_name(), target}), extended);
  const std::vector<std::size_t> rows = space.rows(options.mode);
  const std::size_t n = s.size();
  const bool strict = options.mode == Mode::Strict;

  std::vector<SupportSet> sets;  // A_1', ..., A_n', A_target'
  for (std::size_t i = 0; i <= n; ++i) sets.push_back(support_set(space, i, strict));

  if (!options.focal_family) {
    const std::size_t k = rows.size();
    if (k >= 63 || (std::size_t{1} << k) > limits.max_focal_variables) {
      throw CapExceeded(k >= 63 ? static_cast<std::size_t>(-1) : std::size_t{1} << k, limits.max_focal_variables,
                        "focal family size");
    }
    // focal element f + 1 is the bit mask of admitted rows it contains
    std::vector<std::uint64_t> masks(n + 1, 0);
    for (std::size_t i = 0; i <= n; ++i) {
      for (std::size_t t = 0; t < k; ++t) {
        if (sets[i].contains(rows[t])) masks[i] |= std::uint64_t{1} << t;
      }
    }
    const std::size_t count = (std::size_t{1} << k) - 1;
    return solve_mass_lp(
        count, system, options.relation,
        [&](std::size_t f, std::size_t i) { return ((f + 1) & ~masks[i]) == 0; },
        [&](std::size_t f, std::size_t i) { return ((f + 1) & masks[i]) != 0; });
  }

  std::set<SupportSet> distinct;
  for (const Formula& f : *options.focal_family) {
    SupportSet ext = extension(space, f, options.mode);
    if (ext.empty()) throw EmptyFocalElement("focal element '" + to_string(f) + "' has an empty extension");
    distinct.insert(std::move(ext));
  }
  if (distinct.size() > limits.max_focal_variables) {
    throw CapExceeded(distinct.size(), limits.max_focal_variables, "focal family size");
  }
  const std::vector<SupportSet> family(distinct.begin(), distinct.end());
  return solve_mass_lp(
      family.size(), system, options.relation,
      [&](std::size_t f, std::size_t i) { return family[f].is_subset_of(sets[i]); },
      [&](std::size_t f, std::size_t i) { return family[f].intersects(sets[i]); });
}

std::optional<std::vector<Rational>> collapse_check(const IntervalSystem& system) {
  std::vector<Rational> point;
  point.reserve(system.intervals.size());
  for (const auto& iv : system.intervals) {
    if (!iv.is_point()) return std::nullopt;
    point.push_back(iv.spt());
  }
  return point;
}

}  // namespace evlogic
