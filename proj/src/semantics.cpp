#include "evlogic/semantics.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "evlogic/errors.hpp"

namespace evlogic {

const char* to_string(Mode mode) { return mode == Mode::Strict ? "strict" : "generalized"; }

SentenceSet::SentenceSet(std::vector<Sentence> sentences) : sentences_(std::move(sentences)) {
  if (sentences_.empty()) throw std::invalid_argument("a sentence set needs at least one sentence");
  std::set<std::string_view> seen;
  for (const auto& s : sentences_) {
    if (!is_identifier(s.name)) throw std::invalid_argument("invalid sentence name '" + s.name + "'");
    if (!seen.insert(s.name).second) throw DuplicateName(s.name);
  }
}

std::optional<std::size_t> SentenceSet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < sentences_.size(); ++i) {
    if (sentences_[i].name == name) return i;
  }
  return std::nullopt;
}

std::vector<std::string> SentenceSet::names() const {
  std::vector<std::string> out;
  out.reserve(sentences_.size());
  for (const auto& s : sentences_) out.push_back(s.name);
  return out;
}

std::vector<std::string> SentenceSet::atoms() const {
  std::set<std::string> all;
  for (const auto& s : sentences_) {
    for (auto& a : evlogic::atoms(s.formula)) all.insert(std::move(a));
  }
  return {all.begin(), all.end()};
}

std::string SentenceSet::fresh_name() const {
  for (std::size_t k = 0;; ++k) {
    std::string candidate = "_q" + std::to_string(k);
    if (!index_of(candidate)) return candidate;
  }
}

SentenceSet SentenceSet::appended(Sentence s) const {
  auto copy = sentences_;
  copy.push_back(std::move(s));
  return SentenceSet(std::move(copy));
}

Interpretation interpretation_at(std::size_t row, std::size_t n) {
  Interpretation v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = (row >> (n - 1 - i)) & 1U;
  return v;
}

std::size_t row_index(const Interpretation& v) {
  std::size_t row = 0;
  for (bool b : v) row = (row << 1) | static_cast<std::size_t>(b);
  return row;
}

// SupportSet

SupportSet::SupportSet(std::size_t universe, std::initializer_list<std::size_t> rows)
    : SupportSet(universe, std::span<const std::size_t>(rows.begin(), rows.size())) {}

SupportSet::SupportSet(std::size_t universe, std::span<const std::size_t> rows) : bits_(universe) {
  for (std::size_t r : rows) {
    if (r >= universe) throw IndexOutOfRange("row " + std::to_string(r) + " outside frame of " + std::to_string(universe));
    bits_.set(r);
  }
}

SupportSet SupportSet::full(std::size_t universe) {
  SupportSet s(universe);
  s.bits_.set();
  return s;
}

bool SupportSet::is_subset_of(const SupportSet& other) const {
  if (universe() != other.universe()) throw SpaceMismatch();
  return bits_.is_subset_of(other.bits_);
}

bool SupportSet::intersects(const SupportSet& other) const {
  if (universe() != other.universe()) throw SpaceMismatch();
  return bits_.intersects(other.bits_);
}

SupportSet SupportSet::complement() const {
  SupportSet s = *this;
  s.bits_.flip();
  return s;
}

std::vector<std::size_t> SupportSet::rows() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for (auto r = bits_.find_first(); r != decltype(bits_)::npos; r = bits_.find_next(r)) out.push_back(r);
  return out;
}

SupportSet operator&(const SupportSet& a, const SupportSet& b) {
  if (a.universe() != b.universe()) throw SpaceMismatch();
  SupportSet s = a;
  s.bits_ &= b.bits_;
  return s;
}

SupportSet operator|(const SupportSet& a, const SupportSet& b) {
  if (a.universe() != b.universe()) throw SpaceMismatch();
  SupportSet s = a;
  s.bits_ |= b.bits_;
  return s;
}

bool operator<(const SupportSet& a, const SupportSet& b) {
  if (a.universe() != b.universe()) return a.universe() < b.universe();
  return a.bits_ < b.bits_;
}

// InterpretationSpace

InterpretationSpace::InterpretationSpace(SentenceSet sentences, std::vector<bool> consistent)
    : sentences_(std::move(sentences)), consistent_(std::move(consistent)) {
  if (consistent_.size() != (std::size_t{1} << sentences_.size())) {
    throw std::invalid_argument("consistency flags must cover all 2^n interpretations");
  }
}

std::vector<std::size_t> InterpretationSpace::rows(Mode mode) const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for (std::size_t r = 0; r < size(); ++r) {
    if (mode == Mode::Generalized || consistent_[r]) out.push_back(r);
  }
  return out;
}

SupportSet InterpretationSpace::row_set(Mode mode) const {
  const auto r = rows(mode);
  return SupportSet(size(), std::span<const std::size_t>(r));
}

namespace {

struct CompiledSentences {
  std::vector<std::string> atoms;
  std::vector<CompiledFormula> formulas;

  CompiledSentences(const SentenceSet& s, const Limits& limits) : atoms(s.atoms()) {
    if (atoms.size() > limits.max_atoms) throw AtomCapExceeded(atoms.size(), limits.max_atoms);
    formulas.reserve(s.size());
    for (const auto& sentence : s) formulas.emplace_back(sentence.formula, atoms);
  }

  std::size_t row_of(std::uint64_t assignment) const {
    std::size_t row = 0;
    for (const auto& f : formulas) row = (row << 1) | static_cast<std::size_t>(f(assignment));
    return row;
  }

  std::uint64_t assignment_count() const { return std::uint64_t{1} << atoms.size(); }
};

}  // namespace

InterpretationSpace interpretation_space(const SentenceSet& s, const Limits& limits) {
  if (s.size() > limits.max_sentences) throw CapExceeded(s.size(), limits.max_sentences);
  const CompiledSentences compiled(s, limits);
  // A row is realizable iff it is the image of some atom assignment, so one
  // pass over the assignments flags every row.
  const std::size_t rows = std::size_t{1} << s.size();
  std::vector<bool> consistent(rows, false);
  std::size_t found = 0;
  for (std::uint64_t a = 0; a < compiled.assignment_count() && found < rows; ++a) {
    const std::size_t r = compiled.row_of(a);
    if (!consistent[r]) {
      consistent[r] = true;
      ++found;
    }
  }
  return InterpretationSpace(s, std::move(consistent));
}

std::optional<AtomAssignment> realizing_assignment(const SentenceSet& s, const Interpretation& v,
                                                   const Limits& limits) {
  if (v.size() != s.size()) throw std::invalid_argument("interpretation length differs from sentence count");
  const CompiledSentences compiled(s, limits);
  const std::size_t target = row_index(v);
  for (std::uint64_t a = 0; a < compiled.assignment_count(); ++a) {
    if (compiled.row_of(a) != target) continue;
    AtomAssignment witness;
    for (std::size_t k = 0; k < compiled.atoms.size(); ++k) witness[compiled.atoms[k]] = (a >> k) & 1U;
    return witness;
  }
  return std::nullopt;
}

bool is_realizable(const SentenceSet& s, const Interpretation& v, const Limits& limits) {
  return realizing_assignment(s, v, limits).has_value();
}

SupportSet support_set(const InterpretationSpace& space, std::size_t i, bool restrict_consistent) {
  if (i >= space.sentence_count()) throw IndexOutOfRange("sentence index " + std::to_string(i) + " out of range");
  SupportSet out(space.size());
  for (std::size_t r = 0; r < space.size(); ++r) {
    if (space.truth(r, i) && (!restrict_consistent || space.consistent(r))) out.insert(r);
  }
  return out;
}

SupportSet extension(const InterpretationSpace& space, const Formula& f, Mode mode) {
  const auto names = space.sentences().names();
  for (const auto& a : atoms(f)) {
    if (std::find(names.begin(), names.end(), a) == names.end()) throw UnknownName(a);
  }
  const CompiledFormula compiled(f, names);
  const std::size_t n = names.size();
  SupportSet out(space.size());
  for (std::size_t r : space.rows(mode)) {
    std::uint64_t assignment = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (space.truth(r, i)) assignment |= std::uint64_t{1} << i;
    }
    if (compiled(assignment)) out.insert(r);
  }
  return out;
}

SentenceMatrix sentence_matrix(const InterpretationSpace& space, std::span<const std::size_t> columns) {
  const auto n = static_cast<Eigen::Index>(space.sentence_count());
  SentenceMatrix m(n, static_cast<Eigen::Index>(columns.size()));
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j] >= space.size()) throw IndexOutOfRange("interpretation index " + std::to_string(columns[j]) + " out of range");
    for (Eigen::Index i = 0; i < n; ++i) {
      m(i, static_cast<Eigen::Index>(j)) = space.truth(columns[j], static_cast<std::size_t>(i)) ? 1 : 0;
    }
  }
  return m;
}

}  // namespace evlogic
