#ifndef EVLOGIC_SEMANTICS_HPP
#define EVLOGIC_SEMANTICS_HPP

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "evlogic/formula.hpp"
#include "evlogic/rational.hpp"

namespace evlogic {

/// Whether inconsistent interpretations take part in a query. Strict forces
/// them to probability / mass zero; generalized admits them.
enum class Mode { Strict, Generalized };

const char* to_string(Mode mode);

struct Limits {
  std::size_t max_sentences = 10;
  std::size_t max_atoms = 20;
  /// Upper bound on 2^|rows| for full focal families in evidential queries.
  std::size_t max_focal_variables = 65536;
};

struct Sentence {
  std::string name;
  Formula formula;

  friend bool operator==(const Sentence&, const Sentence&) = default;
};

/// Ordered, named sentences s_1..s_n. Order fixes the bit positions of the
/// interpretation frame.
class SentenceSet {
 public:
  /// Throws DuplicateName, or std::invalid_argument for an empty set or a
  /// name that is not an identifier.
  explicit SentenceSet(std::vector<Sentence> sentences);

  std::size_t size() const { return sentences_.size(); }
  const Sentence& operator[](std::size_t i) const { return sentences_[i]; }
  const std::vector<Sentence>& sentences() const { return sentences_; }
  auto begin() const { return sentences_.begin(); }
  auto end() const { return sentences_.end(); }

  std::optional<std::size_t> index_of(std::string_view name) const;
  std::vector<std::string> names() const;
  /// Union of the atoms of every sentence, sorted.
  std::vector<std::string> atoms() const;

  /// First of `_q0`, `_q1`, ... not already used as a sentence name.
  std::string fresh_name() const;
  SentenceSet appended(Sentence s) const;

  friend bool operator==(const SentenceSet&, const SentenceSet&) = default;

 private:
  std::vector<Sentence> sentences_;
};

using Interpretation = std::vector<bool>;

/// Row index j <-> truth vector, s_1 in the most significant bit.
Interpretation interpretation_at(std::size_t row, std::size_t n);
std::size_t row_index(const Interpretation& v);

/// Set of row indices of an interpretation frame.
class SupportSet {
 public:
  SupportSet() = default;
  explicit SupportSet(std::size_t universe) : bits_(universe) {}
  SupportSet(std::size_t universe, std::initializer_list<std::size_t> rows);
  SupportSet(std::size_t universe, std::span<const std::size_t> rows);
  static SupportSet full(std::size_t universe);

  std::size_t universe() const { return bits_.size(); }
  bool contains(std::size_t row) const { return bits_.test(row); }
  void insert(std::size_t row) { bits_.set(row); }
  std::size_t count() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }

  /// Throw SpaceMismatch when universes differ.
  bool is_subset_of(const SupportSet& other) const;
  bool intersects(const SupportSet& other) const;
  SupportSet complement() const;
  std::vector<std::size_t> rows() const;

  friend SupportSet operator&(const SupportSet& a, const SupportSet& b);
  friend SupportSet operator|(const SupportSet& a, const SupportSet& b);
  friend bool operator==(const SupportSet& a, const SupportSet& b) { return a.bits_ == b.bits_; }
  /// Strict weak order for use as a map key.
  friend bool operator<(const SupportSet& a, const SupportSet& b);

 private:
  boost::dynamic_bitset<std::uint64_t> bits_;
};

/// The frame of 2^n interpretations of a sentence set, with the consistency
/// flag of every row.
class InterpretationSpace {
 public:
  InterpretationSpace(SentenceSet sentences, std::vector<bool> consistent);

  const SentenceSet& sentences() const { return sentences_; }
  std::size_t sentence_count() const { return sentences_.size(); }
  /// Number of rows, 2^n.
  std::size_t size() const { return consistent_.size(); }

  Interpretation interpretation(std::size_t row) const { return interpretation_at(row, sentence_count()); }
  bool consistent(std::size_t row) const { return consistent_.at(row); }
  bool truth(std::size_t row, std::size_t sentence) const {
    return (row >> (sentence_count() - 1 - sentence)) & 1U;
  }

  /// Rows admitted under `mode`, ascending.
  std::vector<std::size_t> rows(Mode mode) const;
  SupportSet row_set(Mode mode) const;

  friend bool operator==(const InterpretationSpace&, const InterpretationSpace&) = default;

 private:
  SentenceSet sentences_;
  std::vector<bool> consistent_;
};

/// Throws CapExceeded when n > limits.max_sentences, AtomCapExceeded when the
/// sentences mention more than limits.max_atoms atoms.
InterpretationSpace interpretation_space(const SentenceSet& s, const Limits& limits = {});

/// Atom assignment realising `v`, found by enumerating every assignment.
std::optional<AtomAssignment> realizing_assignment(const SentenceSet& s, const Interpretation& v,
                                                   const Limits& limits = {});
bool is_realizable(const SentenceSet& s, const Interpretation& v, const Limits& limits = {});

/// Rows where sentence i is true, optionally intersected with the consistent
/// rows. Throws IndexOutOfRange.
SupportSet support_set(const InterpretationSpace& space, std::size_t i, bool restrict_consistent = false);

/// Rows admitted under `mode` where `f` holds, reading the sentence names of
/// the space as its atoms. Throws UnknownName for any other atom.
SupportSet extension(const InterpretationSpace& space, const Formula& f, Mode mode = Mode::Generalized);

using SentenceMatrix = Matrix<int>;

/// n x k 0/1 matrix; column j is the truth vector of row columns[j].
/// Throws IndexOutOfRange.
SentenceMatrix sentence_matrix(const InterpretationSpace& space, std::span<const std::size_t> columns);

}  // namespace evlogic

#endif  // EVLOGIC_SEMANTICS_HPP
