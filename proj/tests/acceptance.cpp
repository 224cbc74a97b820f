// Acceptance suite: one PASS/FAIL line per criterion, exit 1 if any fails.
// All comparisons are exact rational equalities; only wall-clock limits
// carry a tolerance.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "evlogic/errors.hpp"
#include "evlogic/evidential.hpp"
#include "evlogic/linsolve.hpp"
#include "evlogic/problog.hpp"
#include "evlogic/semantics.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "transcript.hpp"

using namespace evlogic;

namespace {

/// Thrown by `expect` to abort a criterion with a reason.
struct Failure {
  std::string reason;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

std::string str(const Rational& r) { return r.str(); }

SentenceSet sentences_of(const std::vector<Formula>& fs) {
  std::vector<Sentence> s;
  for (std::size_t i = 0; i < fs.size(); ++i) s.push_back({"s" + std::to_string(i + 1), fs[i]});
  return SentenceSet(std::move(s));
}

std::vector<Formula> parse_all(std::initializer_list<const char*> texts) {
  std::vector<Formula> out;
  for (const char* t : texts) out.push_back(parse(t));
  return out;
}

/// Index subsets of {0..n-1} of size 1..k, in lexicographic order.
std::vector<std::vector<std::size_t>> subsets_up_to(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (!cur.empty()) out.push_back(cur);
    if (cur.size() == k) return;
    for (std::size_t i = from; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<std::vector<Rational>> grid_vectors(std::size_t n, const std::vector<Rational>& values) {
  std::vector<std::vector<Rational>> out{{}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::vector<Rational>> next;
    for (const auto& v : out) {
      for (const auto& x : values) {
        auto w = v;
        w.push_back(x);
        next.push_back(std::move(w));
      }
    }
    out = std::move(next);
  }
  return out;
}

// 1. Modus ponens against vertex enumeration.
std::string modus_ponens() {
  const auto fs = parse_all({"P", "P -> Q"});
  const std::vector<Rational> pi{Rational(7, 10), Rational(9, 10)};
  const Bounds b = entail_bounds(sentences_of(fs), pi, parse("Q"), Mode::Strict);
  const auto oracle = oracle::entail_oracle(fs, pi, parse("Q"), false);
  expect(oracle.has_value(), "oracle reports incoherence");
  expect(b.lo == Rational(3, 5) && b.hi == Rational(9, 10), "got (" + str(b.lo) + ", " + str(b.hi) + ")");
  expect(oracle->min == b.lo && oracle->max == b.hi, "oracle disagrees");
  return "(3/5, 9/10)";
}

// 2. 0/1 probabilities reduce to classical entailment.
std::string reduction_to_logic() {
  const auto pool = parse_all({"P", "Q", "R", "~P", "P & Q", "P | Q", "P -> Q", "Q -> R", "P <-> R", "~Q | R",
                               "P & ~R", "(P | Q) -> R"});
  const auto assignments = oracle::all_assignments({"P", "Q", "R"});
  std::size_t checks = 0;
  std::size_t incoherent = 0;
  for (const auto& idx : subsets_up_to(pool.size(), 3)) {
    std::vector<Formula> fs;
    for (auto i : idx) fs.push_back(pool[i]);
    const SentenceSet s = sentences_of(fs);
    for (const auto& pi : grid_vectors(fs.size(), {Rational(0), Rational(1)})) {
      // models of the 0/1 assignment
      std::vector<const AtomAssignment*> models;
      for (const auto& a : assignments) {
        bool ok = true;
        for (std::size_t i = 0; i < fs.size() && ok; ++i) ok = evaluate(fs[i], a) == (pi[i] == Rational(1));
        if (ok) models.push_back(&a);
      }
      for (const auto& target : pool) {
        ++checks;
        if (models.empty()) {
          ++incoherent;
          bool threw = false;
          try {
            entail_bounds(s, pi, target, Mode::Strict);
          } catch (const Incoherent&) {
            threw = true;
          }
          expect(threw, "unsatisfiable 0/1 assignment accepted for " + to_string(target));
          continue;
        }
        bool all = true;
        bool some = false;
        for (const auto* a : models) {
          const bool v = evaluate(target, *a);
          all = all && v;
          some = some || v;
        }
        const Bounds b = entail_bounds(s, pi, target, Mode::Strict);
        expect(b.lo == Rational(all ? 1 : 0) && b.hi == Rational(some ? 1 : 0),
               "bounds (" + str(b.lo) + ", " + str(b.hi) + ") for target " + to_string(target));
      }
    }
  }
  return std::to_string(checks) + " queries, " + std::to_string(incoherent) + " incoherent";
}

// 3. Point intervals collapse evidential entailment to probabilistic bounds.
bool collapse_case(const std::vector<Formula>& fs, const std::vector<Rational>& pi, const Formula& target) {
  const SentenceSet s = sentences_of(fs);
  std::vector<EvidentialInterval> iv;
  for (const auto& p : pi) iv.emplace_back(p, p);
  const IntervalSystem system(s, std::move(iv));
  std::optional<Bounds> b;
  try {
    b = entail_bounds(s, pi, target, Mode::Strict);
  } catch (const Incoherent&) {
  }
  try {
    const EvidentialInterval e = evidential_entail(s, system, target);
    expect(b.has_value(), "evidential system feasible where probabilities are incoherent");
    expect(e.spt() == b->lo && e.pls() == b->hi, "target " + to_string(target) + ": [" + str(e.spt()) + ", " +
                                                      str(e.pls()) + "] vs (" + str(b->lo) + ", " + str(b->hi) + ")");
  } catch (const InfeasibleIntervals&) {
    expect(!b.has_value(), "evidential system infeasible where probabilities are coherent");
  }
  return b.has_value();
}

std::string collapse() {
  const auto pool = parse_all({"P", "Q", "~P", "P & Q", "P | Q", "P -> Q"});
  const auto targets = parse_all({"P", "Q", "~Q", "P & Q", "P | Q", "P -> Q", "P <-> Q", "true"});
  const std::vector<Rational> grid{Rational(0), Rational(1, 3), Rational(1, 2), Rational(1)};
  std::size_t checks = 0;
  std::size_t coherent = 0;
  for (const auto& idx : subsets_up_to(pool.size(), 2)) {
    std::vector<Formula> fs;
    for (auto i : idx) fs.push_back(pool[i]);
    for (const auto& pi : grid_vectors(fs.size(), grid)) {
      for (const auto& t : targets) {
        ++checks;
        coherent += collapse_case(fs, pi, t);
      }
    }
  }
  // n = 3
  coherent += collapse_case(parse_all({"P", "Q", "R"}), {Rational(1, 2), Rational(1, 3), Rational(1, 4)},
                            parse("P & Q | R"));
  coherent += collapse_case(parse_all({"P", "P -> Q", "Q -> R"}), {Rational(7, 10), Rational(9, 10), Rational(4, 5)},
                            parse("R"));
  checks += 2;
  return std::to_string(checks) + " cases, " + std::to_string(coherent) + " coherent";
}

// 4. Dempster combination algebra.
std::uint64_t bits_of(const SupportSet& s) {
  std::uint64_t b = 0;
  for (auto r : s.rows()) b |= std::uint64_t{1} << r;
  return b;
}

std::optional<Combination> try_combine(const MassFunction& a, const MassFunction& b) {
  try {
    return combine(a, b);
  } catch (const TotalConflict&) {
    return std::nullopt;
  }
}

std::string dempster() {
  std::mt19937 rng(4);
  std::size_t conflicts = 0;
  for (int k = 0; k < 500; ++k) {
    const auto space = gen::free_space(1 + k % 3);
    const MassFunction m1 = gen::random_mass(rng, space);
    const MassFunction m2 = gen::random_mass(rng, space);
    const MassFunction m3 = gen::random_mass(rng, space);

    // pair enumeration over bit masks
    std::map<std::uint64_t, Rational> joint;
    Rational conflict;
    for (const auto& [a, ma] : m1.focal()) {
      for (const auto& [b, mb] : m2.focal()) {
        const std::uint64_t c = bits_of(a) & bits_of(b);
        (c == 0 ? conflict : joint[c]) += ma * mb;
      }
    }
    const auto c12 = try_combine(m1, m2);
    const auto c21 = try_combine(m2, m1);
    expect(c12.has_value() == c21.has_value(), "total conflict is not symmetric");
    expect(c12.has_value() == (conflict != Rational(1)), "total conflict disagrees with pair enumeration");
    expect(combine(m1, MassFunction::vacuous(space)).mass == m1, "vacuous mass is not an identity");
    if (!c12) {
      ++conflicts;
      continue;
    }
    expect(c12->mass == c21->mass && c12->conflict == c21->conflict, "combination is not commutative");
    expect(c12->conflict == conflict, "K = " + str(c12->conflict) + ", pairs give " + str(conflict));
    expect(c12->mass.focal().size() == joint.size(), "focal count disagrees with pair enumeration");
    for (const auto& [set, mass] : c12->mass.focal()) {
      expect(mass == joint[bits_of(set)] / (Rational(1) - conflict), "combined mass disagrees with pair enumeration");
    }
    const auto left = try_combine(c12->mass, m3);
    const auto c23 = try_combine(m2, m3);
    const auto right = c23 ? try_combine(m1, c23->mass) : std::nullopt;
    expect(left.has_value() == right.has_value(), "total conflict depends on grouping");
    if (left) expect(left->mass == right->mass, "combination is not associative");
  }
  return "500 triples, " + std::to_string(conflicts) + " totally conflicting pairs";
}

// 5. Support/plausibility duality and normalization.
std::string duality() {
  std::mt19937 rng(5);
  std::size_t checks = 0;
  for (int k = 0; k < 1000; ++k) {
    const auto space = gen::free_space(1 + k % 3);
    const MassFunction m = gen::random_mass(rng, space);
    const std::size_t rows = space.size();
    expect(support(m, SupportSet::full(rows)) == Rational(1), "support of the frame is not 1");
    expect(plausibility(m, SupportSet(rows)) == Rational(0), "plausibility of the empty set is not 0");
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << rows); ++bits) {
      SupportSet a(rows);
      for (std::size_t r = 0; r < rows; ++r) {
        if ((bits >> r) & 1U) a.insert(r);
      }
      const Rational spt = support(m, a);
      expect(spt <= plausibility(m, a), "support exceeds plausibility");
      expect(spt + support(m, a.complement()) <= Rational(1), "support of A and its complement exceeds 1");
      ++checks;
    }
  }
  return std::to_string(checks) + " subsets";
}

// 6. Bayes formula and total probability.
std::string bayes() {
  std::mt19937 rng(6);
  std::size_t checks = 0;
  for (int k = 0; k < 1000; ++k) {
    const std::size_t n = 2 + static_cast<std::size_t>(k % 3);
    const auto space = gen::free_space(n);
    const JointDistribution joint = gen::random_positive_joint(rng, space);
    // random split of the sentences into u, w and the rest
    MarginSpec u;
    std::vector<std::size_t> w_idx;
    for (std::size_t i = 0; i < n; ++i) {
      const auto r = rng() % 3;
      if (r == 0) u.push_back({i, rng() % 2 == 0});
      if (r == 1) w_idx.push_back(i);
    }
    if (u.empty()) u.push_back({n - 1, true}), std::erase(w_idx, n - 1);
    if (w_idx.empty()) {
      for (std::size_t i = 0; i < n; ++i) {
        if (std::none_of(u.begin(), u.end(), [&](const Fix& f) { return f.sentence == i; })) w_idx.push_back(i);
      }
    }
    if (w_idx.empty()) continue;
    Rational total;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << w_idx.size()); ++bits) {
      MarginSpec w;
      for (std::size_t j = 0; j < w_idx.size(); ++j) w.push_back({w_idx[j], ((bits >> j) & 1U) != 0});
      expect(bayes_posterior(joint, u, w) == conditional(joint, w, u), "Bayes posterior differs from conditional");
      total += conditional(joint, u, w) * marginal(joint, w);
      ++checks;
    }
    expect(total == marginal(joint, u), "total probability expansion fails");
  }
  return std::to_string(checks) + " posterior identities";
}

// 7. Quaker knowledge base.
std::string quaker() {
  const auto fs = parse_all({"Q_", "Q_ -> P_", "R_ -> ~P_", "R_"});
  const SentenceSet s({{"q", fs[0]}, {"b", fs[1]}, {"c", fs[2]}, {"d", fs[3]}});
  const std::vector<Rational> ones(4, Rational(1));
  bool incoherent = false;
  try {
    entail_bounds(s, ones, parse("P_"), Mode::Strict);
  } catch (const Incoherent&) {
    incoherent = true;
  }
  expect(incoherent, "strict mode accepted the Quaker set");
  const Bounds g = entail_bounds(s, ones, parse("P_"), Mode::Generalized);
  expect(g.lo == Rational(0) && g.hi == Rational(1), "generalized bounds (" + str(g.lo) + ", " + str(g.hi) + ")");
  for (const char* name : {"entail_quaker_strict", "entail_quaker_generalized", "interpretations_quaker"}) {
    const golden::Check first = golden::replay(name);
    expect(first.ok, std::string(name) + " transcript differs:\n" + first.actual);
    expect(golden::replay(name).actual == first.actual, std::string(name) + " is not deterministic");
  }
  return "strict exit 2, generalized [0, 1], transcripts match";
}

// 8. Extending a joint with a conditional table.
std::string joint_extension() {
  const auto pool = parse_all({"P", "Q", "~P", "P & Q", "P | Q", "P -> Q", "Q -> R", "R", "P <-> R", "~R"});
  std::mt19937 rng(8);
  std::size_t rejections = 0;
  for (int k = 0; k < 500; ++k) {
    const std::size_t n = 1 + static_cast<std::size_t>(k % 4);
    std::vector<Formula> fs;
    for (std::size_t i = 0; i < n; ++i) fs.push_back(pool[rng() % pool.size()]);
    const Formula added = pool[rng() % pool.size()];
    const SentenceSet s = sentences_of(fs);
    const auto space = interpretation_space(s);
    std::vector<Formula> with_added = fs;
    with_added.push_back(added);
    const auto realized = oracle::realized_vectors(with_added);

    const auto consistent = space.rows(Mode::Strict);
    const auto weights = oracle::random_simplex_point(rng, consistent.size(), false);
    RationalVector probs = RationalVector::Constant(static_cast<Eigen::Index>(space.size()), Rational(0));
    for (std::size_t t = 0; t < consistent.size(); ++t) probs(static_cast<Eigen::Index>(consistent[t])) = weights[t];
    const JointDistribution joint(space, probs, Mode::Strict);

    ConditionalTable q(static_cast<Eigen::Index>(space.size()));
    std::optional<std::size_t> forced;  // a row with p > 0 whose q is pinned
    for (std::size_t v = 0; v < space.size(); ++v) {
      std::vector<bool> bits = space.interpretation(v);
      bits.push_back(true);
      const bool can_true = realized.contains(bits);
      bits.back() = false;
      const bool can_false = realized.contains(bits);
      Rational qv = oracle::random_rational(rng);
      if (can_true != can_false) {
        qv = Rational(can_true ? 1 : 0);
        if (!joint[v].is_zero()) forced = v;
      }
      q(static_cast<Eigen::Index>(v)) = qv;
    }

    const JointDistribution ext = extend_joint(joint, added, q, Mode::Strict);
    Rational total;
    Rational expected_marginal;
    for (std::size_t v = 0; v < space.size(); ++v) {
      const Rational& t = ext[2 * v + 1];
      const Rational& f = ext[2 * v];
      expect(t + f == joint[v], "row " + std::to_string(v) + " does not marginalize back");
      expect(t == joint[v] * q(static_cast<Eigen::Index>(v)), "p(v, true) is not p(v) q(v)");
      total += t + f;
      expected_marginal += joint[v] * q(static_cast<Eigen::Index>(v));
    }
    expect(total == Rational(1), "extended joint mass is " + str(total));
    expect(marginal(ext, {{n, true}}) == expected_marginal, "marginal of the new sentence is not sum p q");

    if (forced) {
      q(static_cast<Eigen::Index>(*forced)) = Rational(1, 2);
      bool threw = false;
      try {
        extend_joint(joint, added, q, Mode::Strict);
      } catch (const ImpermissibleConditional&) {
        threw = true;
      }
      expect(threw, "impermissible table accepted");
      ++rejections;
    }
  }
  expect(rejections > 0, "no impermissible case was generated");
  return "500 extensions, " + std::to_string(rejections) + " impermissible tables rejected";
}

// 9a. Eight sentences over eight atoms.
std::string desk_scale() {
  std::vector<Formula> fs{parse("x0")};
  for (int i = 0; i < 7; ++i) {
    fs.push_back(parse("x" + std::to_string(i) + " -> x" + std::to_string(i + 1)));
  }
  // coherent pi from a random distribution over atom assignments
  std::mt19937 rng(9);
  std::vector<std::string> names;
  for (int i = 0; i < 8; ++i) names.push_back("x" + std::to_string(i));
  const auto assignments = oracle::all_assignments(names);
  const auto weights = oracle::random_simplex_point(rng, assignments.size(), false);
  std::vector<Rational> pi(fs.size());
  Rational target_p;
  const Formula target = parse("x7");
  for (std::size_t a = 0; a < assignments.size(); ++a) {
    for (std::size_t i = 0; i < fs.size(); ++i) {
      if (evaluate(fs[i], assignments[a])) pi[i] += weights[a];
    }
    if (evaluate(target, assignments[a])) target_p += weights[a];
  }
  const Bounds b = entail_bounds(sentences_of(fs), pi, target, Mode::Strict);
  expect(b.lo <= target_p && target_p <= b.hi, "generating distribution falls outside the bounds");
  return "[" + b.lo.decimal() + ", " + b.hi.decimal() + "]";
}

// 9b. Simplex against vertex enumeration.
std::string random_lps() {
  std::mt19937 rng(99);
  std::size_t infeasible = 0;
  for (int k = 0; k < 200; ++k) {
    const auto lp = gen::random_lp(rng);
    const auto expected = oracle::vertex_extremes(gen::to_dense(lp));
    if (!expected) {
      ++infeasible;
      bool threw = false;
      try {
        solve(lp, Direction::Minimize);
      } catch (const Infeasible&) {
        threw = true;
      }
      expect(threw, "infeasible program solved");
      continue;
    }
    expect(solve(lp, Direction::Minimize).optimum == expected->min, "minimum disagrees with vertex enumeration");
    expect(solve(lp, Direction::Maximize).optimum == expected->max, "maximum disagrees with vertex enumeration");
  }
  return "200 programs, " + std::to_string(infeasible) + " infeasible";
}

struct Criterion {
  std::string id;
  std::string title;
  double limit_seconds;  // 0 = no limit
  std::function<std::string()> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"1", "modus ponens bounds match vertex enumeration", 1, modus_ponens},
      {"2", "0/1 probabilities reduce to truth-table entailment", 60, reduction_to_logic},
      {"3", "point intervals collapse to probabilistic bounds", 120, collapse},
      {"4", "Dempster combination algebra", 30, dempster},
      {"5", "support/plausibility duality and normalization", 10, duality},
      {"6", "Bayes formula and total probability", 30, bayes},
      {"7", "Quaker knowledge base", 0, quaker},
      {"8", "joint extension by conditional tables", 0, joint_extension},
      {"9a", "strict entailment, 8 sentences over 8 atoms", 5, desk_scale},
      {"9b", "simplex matches vertex enumeration on 200 programs", 30, random_lps},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = c.body();
    } catch (const Failure& f) {
      ok = false;
      detail = f.reason;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("unexpected exception: ") + e.what();
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && c.limit_seconds > 0 && elapsed >= c.limit_seconds) {
      ok = false;
      detail += "; over time limit";
    }
    char timing[64];
    if (c.limit_seconds > 0) {
      std::snprintf(timing, sizeof timing, "%.3f s, limit %g s", elapsed, c.limit_seconds);
    } else {
      std::snprintf(timing, sizeof timing, "%.3f s", elapsed);
    }
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << c.id << ' ' << c.title << " (" << timing << "): " << detail
              << std::endl;
    failures += !ok;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
