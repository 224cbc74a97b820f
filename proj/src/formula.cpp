#include "evlogic/formula.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <functional>
#include <set>
#include <stdexcept>

#include "evlogic/errors.hpp"

namespace evlogic {

Formula Formula::atom(std::string name) {
  if (!is_identifier(name)) throw std::invalid_argument("invalid atom name '" + name + "'");
  return Formula(std::make_shared<const Node>(Node{Kind::Atom, std::move(name), false, {}}));
}

Formula Formula::constant(bool value) {
  return Formula(std::make_shared<const Node>(Node{Kind::Const, {}, value, {}}));
}

Formula Formula::negation(Formula f) {
  return Formula(std::make_shared<const Node>(Node{Kind::Not, {}, false, {std::move(f)}}));
}

Formula Formula::binary(Kind kind, Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(Node{kind, {}, false, {std::move(a), std::move(b)}}));
}

Formula Formula::conjunction(Formula a, Formula b) { return binary(Kind::And, std::move(a), std::move(b)); }
Formula Formula::disjunction(Formula a, Formula b) { return binary(Kind::Or, std::move(a), std::move(b)); }
Formula Formula::implication(Formula a, Formula b) { return binary(Kind::Imp, std::move(a), std::move(b)); }
Formula Formula::equivalence(Formula a, Formula b) { return binary(Kind::Iff, std::move(a), std::move(b)); }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Formula::Kind::Atom:
      return a.name() == b.name();
    case Formula::Kind::Const:
      return a.value() == b.value();
    default:
      return a.node_->children == b.node_->children;
  }
}

bool is_identifier(std::string_view text) {
  if (text.empty() || text == "true" || text == "false") return false;
  const auto head = static_cast<unsigned char>(text.front());
  if (!(std::isalpha(head) || head == '_')) return false;
  return std::all_of(text.begin() + 1, text.end(), [](char c) {
    const auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || u == '_';
  });
}

namespace {

enum class Tok { Ident, True, False, Not, And, Or, Imp, Iff, LParen, RParen, End };

struct Token {
  Tok kind;
  std::size_t offset;
  std::string_view text;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    const std::size_t start = pos_;
    if (pos_ >= src_.size()) return {Tok::End, start, {}};
    const auto rest = src_.substr(pos_);
    struct Symbol {
      std::string_view spelling;
      Tok kind;
    };
    static constexpr Symbol symbols[] = {
        {"<->", Tok::Iff}, {"->", Tok::Imp},      {"~", Tok::Not},      {"&", Tok::And},
        {"|", Tok::Or},    {"(", Tok::LParen},    {")", Tok::RParen},   {"\xC2\xAC", Tok::Not},
        {"\xE2\x88\xA7", Tok::And},  // ∧
        {"\xE2\x88\xA8", Tok::Or},   // ∨
        {"\xE2\x86\x92", Tok::Imp},  // →
        {"\xE2\x86\x94", Tok::Iff},  // ↔
    };
    for (const auto& s : symbols) {
      if (rest.starts_with(s.spelling)) {
        pos_ += s.spelling.size();
        return {s.kind, start, s.spelling};
      }
    }
    const auto c = static_cast<unsigned char>(src_[pos_]);
    if (std::isalpha(c) || c == '_') {
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        ++pos_;
      }
      const auto word = src_.substr(start, pos_ - start);
      if (word == "true") return {Tok::True, start, word};
      if (word == "false") return {Tok::False, start, word};
      return {Tok::Ident, start, word};
    }
    throw SyntaxError(start, "formula token");
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lexer_(src) { advance(); }

  Formula parse_all() {
    Formula f = parse_iff();
    if (current_.kind != Tok::End) throw SyntaxError(current_.offset, "end of input or binary operator");
    return f;
  }

 private:
  void advance() { current_ = lexer_.next(); }

  bool accept(Tok kind) {
    if (current_.kind != kind) return false;
    advance();
    return true;
  }

  Formula parse_iff() {
    Formula lhs = parse_imp();
    if (accept(Tok::Iff)) return Formula::equivalence(std::move(lhs), parse_iff());
    return lhs;
  }

  Formula parse_imp() {
    Formula lhs = parse_or();
    if (accept(Tok::Imp)) return Formula::implication(std::move(lhs), parse_imp());
    return lhs;
  }

  Formula parse_or() {
    Formula lhs = parse_and();
    while (accept(Tok::Or)) lhs = Formula::disjunction(std::move(lhs), parse_and());
    return lhs;
  }

  Formula parse_and() {
    Formula lhs = parse_unary();
    while (accept(Tok::And)) lhs = Formula::conjunction(std::move(lhs), parse_unary());
    return lhs;
  }

  Formula parse_unary() {
    if (accept(Tok::Not)) return Formula::negation(parse_unary());
    return parse_primary();
  }

  Formula parse_primary() {
    const Token tok = current_;
    switch (tok.kind) {
      case Tok::Ident:
        advance();
        return Formula::atom(std::string(tok.text));
      case Tok::True:
        advance();
        return Formula::constant(true);
      case Tok::False:
        advance();
        return Formula::constant(false);
      case Tok::LParen: {
        advance();
        Formula inner = parse_iff();
        if (!accept(Tok::RParen)) throw SyntaxError(current_.offset, "')'");
        return inner;
      }
      default:
        throw SyntaxError(tok.offset, "atom, constant, '~' or '('");
    }
  }

  Lexer lexer_;
  Token current_{Tok::End, 0, {}};
};

const char* spelling(Formula::Kind kind) {
  switch (kind) {
    case Formula::Kind::And: return " & ";
    case Formula::Kind::Or: return " | ";
    case Formula::Kind::Imp: return " -> ";
    case Formula::Kind::Iff: return " <-> ";
    default: return "";
  }
}

void print(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      out += f.name();
      return;
    case Formula::Kind::Const:
      out += f.value() ? "true" : "false";
      return;
    case Formula::Kind::Not:
      out += '~';
      print(f.operand(), out);
      return;
    default:
      out += '(';
      print(f.lhs(), out);
      out += spelling(f.kind());
      print(f.rhs(), out);
      out += ')';
  }
}

void collect_atoms(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      out.insert(f.name());
      return;
    case Formula::Kind::Const:
      return;
    case Formula::Kind::Not:
      collect_atoms(f.operand(), out);
      return;
    default:
      collect_atoms(f.lhs(), out);
      collect_atoms(f.rhs(), out);
  }
}

}  // namespace

Formula parse(std::string_view text) { return Parser(text).parse_all(); }

std::string to_string(const Formula& f) {
  std::string out;
  print(f, out);
  return out;
}

bool evaluate(const Formula& f, const AtomAssignment& a) {
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      const auto it = a.find(f.name());
      if (it == a.end()) throw MissingAtom(f.name());
      return it->second;
    }
    case Formula::Kind::Const:
      return f.value();
    case Formula::Kind::Not:
      return !evaluate(f.operand(), a);
    default:
      break;
  }
  // evaluate both sides so a missing atom is reported regardless of short-circuiting
  const bool x = evaluate(f.lhs(), a);
  const bool y = evaluate(f.rhs(), a);
  switch (f.kind()) {
    case Formula::Kind::And: return x && y;
    case Formula::Kind::Or: return x || y;
    case Formula::Kind::Imp: return !x || y;
    default: return x == y;
  }
}

std::vector<std::string> atoms(const Formula& f) {
  std::set<std::string> names;
  collect_atoms(f, names);
  return {names.begin(), names.end()};
}

CompiledFormula::CompiledFormula(const Formula& f, std::span<const std::string> atom_order) {
  if (atom_order.size() > 64) throw std::invalid_argument("at most 64 atoms can be compiled");
  emit(f, atom_order);
  std::size_t depth = 0;
  for (const Instr& in : code_) {
    if (in.op == Op::Atom || in.op == Op::True || in.op == Op::False) {
      max_depth_ = std::max(max_depth_, ++depth);
    } else if (in.op != Op::Not) {
      --depth;
    }
  }
}

void CompiledFormula::emit(const Formula& f, std::span<const std::string> atom_order) {
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      const auto it = std::find(atom_order.begin(), atom_order.end(), f.name());
      if (it == atom_order.end()) throw MissingAtom(f.name());
      code_.push_back({Op::Atom, static_cast<std::uint8_t>(it - atom_order.begin())});
      return;
    }
    case Formula::Kind::Const:
      code_.push_back({f.value() ? Op::True : Op::False});
      return;
    case Formula::Kind::Not:
      emit(f.operand(), atom_order);
      code_.push_back({Op::Not});
      return;
    default:
      break;
  }
  emit(f.lhs(), atom_order);
  emit(f.rhs(), atom_order);
  switch (f.kind()) {
    case Formula::Kind::And: code_.push_back({Op::And}); break;
    case Formula::Kind::Or: code_.push_back({Op::Or}); break;
    case Formula::Kind::Imp: code_.push_back({Op::Imp}); break;
    default: code_.push_back({Op::Iff}); break;
  }
}

bool CompiledFormula::operator()(std::uint64_t assignment) const {
  if (max_depth_ <= kInlineDepth) {
    std::array<bool, kInlineDepth> stack;
    return run(assignment, stack.data());
  }
  const auto stack = std::make_unique<bool[]>(max_depth_);
  return run(assignment, stack.get());
}

bool CompiledFormula::run(std::uint64_t assignment, bool* stack) const {
  std::size_t top = 0;
  for (const Instr& in : code_) {
    switch (in.op) {
      case Op::Atom: stack[top++] = (assignment >> in.atom) & 1U; break;
      case Op::True: stack[top++] = true; break;
      case Op::False: stack[top++] = false; break;
      case Op::Not: stack[top - 1] = !stack[top - 1]; break;
      default: {
        const bool y = stack[--top];
        bool& x = stack[top - 1];
        switch (in.op) {
          case Op::And: x = x && y; break;
          case Op::Or: x = x || y; break;
          case Op::Imp: x = !x || y; break;
          default: x = x == y; break;
        }
      }
    }
  }
  return stack[0];
}

}  // namespace evlogic
