#ifndef EVLOGIC_FORMULA_HPP
#define EVLOGIC_FORMULA_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace evlogic {

/// Immutable propositional formula. Copies share structure.
class Formula {
 public:
  enum class Kind { Atom, Const, Not, And, Or, Imp, Iff };

  static Formula atom(std::string name);
  static Formula constant(bool value);
  static Formula negation(Formula f);
  static Formula conjunction(Formula a, Formula b);
  static Formula disjunction(Formula a, Formula b);
  static Formula implication(Formula a, Formula b);
  static Formula equivalence(Formula a, Formula b);

  Kind kind() const { return node_->kind; }
  /// Atom name; empty for other kinds.
  const std::string& name() const { return node_->name; }
  /// Constant value; meaningful only for Kind::Const.
  bool value() const { return node_->value; }
  const Formula& lhs() const { return node_->children[0]; }
  const Formula& rhs() const { return node_->children[1]; }
  /// Operand of a negation.
  const Formula& operand() const { return node_->children[0]; }

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node {
    Kind kind;
    std::string name;
    bool value = false;
    std::vector<Formula> children;
  };
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula binary(Kind kind, Formula a, Formula b);

  std::shared_ptr<const Node> node_;
};

inline Formula operator~(Formula f) { return Formula::negation(std::move(f)); }
inline Formula operator&(Formula a, Formula b) { return Formula::conjunction(std::move(a), std::move(b)); }
inline Formula operator|(Formula a, Formula b) { return Formula::disjunction(std::move(a), std::move(b)); }

using AtomAssignment = std::map<std::string, bool, std::less<>>;

bool is_identifier(std::string_view text);

/// Grammar, loosest binding first: `<->` (right assoc), `->` (right assoc),
/// `|`, `&` (both left assoc), `~`. Also accepts the Unicode forms
/// `↔ → ∨ ∧ ¬`. Throws SyntaxError.
Formula parse(std::string_view text);

/// Fully parenthesised ASCII form. parse(to_string(f)) == f.
std::string to_string(const Formula& f);

/// Throws MissingAtom when `a` has no value for an atom of `f`.
bool evaluate(const Formula& f, const AtomAssignment& a);

/// Atom names, sorted and deduplicated.
std::vector<std::string> atoms(const Formula& f);

/// Formula flattened to postfix over indexed atoms, for evaluating the same
/// formula under many assignments. Bit k of the assignment word is the value
/// of `atom_order[k]`.
class CompiledFormula {
 public:
  CompiledFormula(const Formula& f, std::span<const std::string> atom_order);
  bool operator()(std::uint64_t assignment) const;

 private:
  enum class Op : std::uint8_t { Atom, True, False, Not, And, Or, Imp, Iff };
  struct Instr {
    Op op;
    std::uint8_t atom = 0;
  };
  static constexpr std::size_t kInlineDepth = 64;
  void emit(const Formula& f, std::span<const std::string> atom_order);
  bool run(std::uint64_t assignment, bool* stack) const;

  std::vector<Instr> code_;
  std::size_t max_depth_ = 0;
};

}  // namespace evlogic

#endif  // EVLOGIC_FORMULA_HPP
