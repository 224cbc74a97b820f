#ifndef EVLOGIC_KB_IO_HPP
#define EVLOGIC_KB_IO_HPP

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "evlogic/evidential.hpp"
#include "evlogic/formula.hpp"
#include "evlogic/problog.hpp"
#include "evlogic/rational.hpp"
#include "evlogic/semantics.hpp"

namespace evlogic {

/// Parsed knowledge-base file:
///
///     sentence <name> : <formula>       # order fixes s_1 .. s_n
///     prob <name> = <number>
///     interval <name> = [<number>, <number>]
///     query <formula>
///
/// Numbers are `a/b` or exact decimals. A file carries point probabilities
/// or intervals, never both.
struct KnowledgeBase {
  SentenceSet sentences;
  std::map<std::string, Rational> point_probs;
  std::map<std::string, EvidentialInterval> intervals;
  std::vector<Formula> queries;

  /// pi in sentence order, from point probabilities or all-point intervals.
  /// Throws Error when a sentence has no probability.
  std::vector<Rational> probability_vector() const;
  /// Intervals in sentence order; point probabilities become [p, p].
  IntervalSystem interval_system() const;
};

/// Number in [0, 1]; throws std::invalid_argument otherwise.
Rational parse_probability(std::string_view text);

/// Throws ParseError, DuplicateName, UnknownName, MixedProbAndInterval.
KnowledgeBase parse_kb(std::string_view text);
KnowledgeBase load_kb(const std::filesystem::path& path);

/// `mass <formula over sentence names> = <number>` lines. Extensions are
/// taken over the rows admitted by `mode`; `true` is the whole frame.
/// Throws EmptyFocalElement, MassSumNotOne, ParseError.
MassFunction parse_mass(std::string_view text, const InterpretationSpace& space, Mode mode = Mode::Strict);
MassFunction load_mass(const std::filesystem::path& path, const InterpretationSpace& space, Mode mode = Mode::Strict);

/// `p <bitstring> = <number>` lines; unlisted rows are zero.
JointDistribution parse_joint(std::string_view text, const InterpretationSpace& space, Mode mode = Mode::Strict);

/// `q <bitstring> = <number>` lines, one for every row.
ConditionalTable parse_conditional_table(std::string_view text, const InterpretationSpace& space);

/// `focal <formula>` lines.
std::vector<Formula> parse_focal_family(std::string_view text);

/// Comma-separated `name=1`, `name=0`, `name` or `~name`.
MarginSpec parse_margin_spec(std::string_view text, const SentenceSet& sentences);

std::string read_file(const std::filesystem::path& path);

/// Formula over sentence names whose extension under `mode` is `set`:
/// `true` for every admitted row, otherwise a disjunction of row minterms.
std::string set_formula(const InterpretationSpace& space, const SupportSet& set, Mode mode = Mode::Strict);

/// Reloadable text forms.
std::string format_mass(const MassFunction& m, Mode mode = Mode::Strict);
std::string format_joint(const JointDistribution& joint);

std::string row_bits(std::size_t row, std::size_t n);

}  // namespace evlogic

#endif  // EVLOGIC_KB_IO_HPP
