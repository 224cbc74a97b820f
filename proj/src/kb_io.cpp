#include "evlogic/kb_io.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "evlogic/errors.hpp"

namespace evlogic {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

/// Content lines with comments and blanks removed, paired with 1-based line
/// numbers.
std::vector<std::pair<std::size_t, std::string_view>> content_lines(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> out;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) out.emplace_back(number, line);
  }
  return out;
}

/// Splits `keyword rest` at the first blank.
std::pair<std::string_view, std::string_view> split_keyword(std::string_view line) {
  const auto space = line.find_first_of(" \t");
  if (space == std::string_view::npos) return {line, {}};
  return {line.substr(0, space), trim(line.substr(space))};
}

/// Splits `lhs <sep> rhs`, both sides trimmed.
std::optional<std::pair<std::string_view, std::string_view>> split_at(std::string_view s, char sep) {
  const auto pos = s.find(sep);
  if (pos == std::string_view::npos) return std::nullopt;
  return std::pair{trim(s.substr(0, pos)), trim(s.substr(pos + 1))};
}

std::string_view unquote(std::string_view s) {
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') return trim(s.substr(1, s.size() - 2));
  return s;
}

Formula parse_formula_at(std::size_t line, std::string_view text) {
  try {
    return parse(unquote(text));
  } catch (const SyntaxError& e) {
    throw ParseError(line, e.what());
  }
}

Rational probability_at(std::size_t line, std::string_view text) {
  try {
    return parse_probability(text);
  } catch (const std::invalid_argument& e) {
    throw ParseError(line, e.what());
  }
}

std::size_t parse_bits(std::size_t line, std::string_view bits, std::size_t n) {
  if (bits.size() != n) {
    throw ParseError(line, "expected a bit string of length " + std::to_string(n) + ", got '" + std::string(bits) + "'");
  }
  std::size_t row = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw ParseError(line, "bit strings contain only 0 and 1");
    row = (row << 1) | static_cast<std::size_t>(c == '1');
  }
  return row;
}

/// `<key> <bits> = <number>` rows shared by joint and conditional files.
std::map<std::size_t, Rational> parse_bit_rows(std::string_view text, std::string_view key, std::size_t n) {
  std::map<std::size_t, Rational> rows;
  for (const auto& [line, content] : content_lines(text)) {
    const auto [keyword, rest] = split_keyword(content);
    if (keyword != key) throw ParseError(line, "expected '" + std::string(key) + " <bits> = <number>'");
    const auto parts = split_at(rest, '=');
    if (!parts) throw ParseError(line, "missing '='");
    const std::size_t row = parse_bits(line, parts->first, n);
    if (!rows.emplace(row, probability_at(line, parts->second)).second) {
      throw ParseError(line, "row " + std::string(parts->first) + " listed twice");
    }
  }
  return rows;
}

}  // namespace

std::vector<Rational> KnowledgeBase::probability_vector() const {
  std::vector<Rational> pi;
  for (const auto& s : sentences) {
    if (const auto it = point_probs.find(s.name); it != point_probs.end()) {
      pi.push_back(it->second);
      continue;
    }
    const auto iv = intervals.find(s.name);
    if (iv == intervals.end()) throw Error("sentence '" + s.name + "' has no probability");
    if (!iv->second.is_point()) throw Error("sentence '" + s.name + "' has an interval, not a point probability");
    pi.push_back(iv->second.spt());
  }
  return pi;
}

IntervalSystem KnowledgeBase::interval_system() const {
  std::vector<EvidentialInterval> out;
  for (const auto& s : sentences) {
    if (const auto it = intervals.find(s.name); it != intervals.end()) {
      out.push_back(it->second);
      continue;
    }
    const auto p = point_probs.find(s.name);
    if (p == point_probs.end()) throw Error("sentence '" + s.name + "' has no interval");
    out.emplace_back(p->second, p->second);
  }
  return IntervalSystem(sentences, std::move(out));
}

Rational parse_probability(std::string_view text) {
  const Rational r = Rational::parse(trim(text));
  if (r.sign() < 0 || r > Rational(1)) throw std::invalid_argument("value " + r.str() + " outside [0, 1]");
  return r;
}

KnowledgeBase parse_kb(std::string_view text) {
  std::vector<Sentence> sentences;
  std::map<std::string, Rational> probs;
  std::map<std::string, EvidentialInterval> intervals;
  std::vector<Formula> queries;
  std::vector<std::pair<std::size_t, std::string>> referenced;

  for (const auto& [line, content] : content_lines(text)) {
    const auto [keyword, rest] = split_keyword(content);
    if (keyword == "sentence") {
      const auto parts = split_at(rest, ':');
      if (!parts) throw ParseError(line, "expected 'sentence <name> : <formula>'");
      const std::string name(parts->first);
      if (!is_identifier(name)) throw ParseError(line, "invalid sentence name '" + name + "'");
      for (const auto& s : sentences) {
        if (s.name == name) throw DuplicateName(name);
      }
      sentences.push_back({name, parse_formula_at(line, parts->second)});
    } else if (keyword == "prob") {
      const auto parts = split_at(rest, '=');
      if (!parts) throw ParseError(line, "expected 'prob <name> = <number>'");
      const std::string name(parts->first);
      if (intervals.contains(name)) throw MixedProbAndInterval();
      if (!probs.emplace(name, probability_at(line, parts->second)).second) throw DuplicateName(name);
      referenced.emplace_back(line, name);
    } else if (keyword == "interval") {
      const auto parts = split_at(rest, '=');
      if (!parts) throw ParseError(line, "expected 'interval <name> = [<number>, <number>]'");
      const std::string name(parts->first);
      if (probs.contains(name)) throw MixedProbAndInterval();
      std::string_view body = parts->second;
      if (body.size() < 2 || body.front() != '[' || body.back() != ']') {
        throw ParseError(line, "interval must be written [<number>, <number>]");
      }
      const auto bounds = split_at(body.substr(1, body.size() - 2), ',');
      if (!bounds) throw ParseError(line, "interval must be written [<number>, <number>]");
      std::optional<EvidentialInterval> iv;
      try {
        iv.emplace(probability_at(line, bounds->first), probability_at(line, bounds->second));
      } catch (const std::invalid_argument& e) {
        throw ParseError(line, e.what());
      }
      if (!intervals.emplace(name, *iv).second) throw DuplicateName(name);
      referenced.emplace_back(line, name);
    } else if (keyword == "query") {
      if (rest.empty()) throw ParseError(line, "query needs a formula");
      queries.push_back(parse_formula_at(line, rest));
    } else {
      throw ParseError(line, "unknown directive '" + std::string(keyword) + "'");
    }
  }

  if (!probs.empty() && !intervals.empty()) throw MixedProbAndInterval();
  if (sentences.empty()) throw ParseError(0, "knowledge base declares no sentences");
  for (const auto& [line, name] : referenced) {
    const bool known = std::any_of(sentences.begin(), sentences.end(), [&](const Sentence& s) { return s.name == name; });
    if (!known) throw UnknownName(name);
  }
  return KnowledgeBase{SentenceSet(std::move(sentences)), std::move(probs), std::move(intervals), std::move(queries)};
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

KnowledgeBase load_kb(const std::filesystem::path& path) { return parse_kb(read_file(path)); }

MassFunction parse_mass(std::string_view text, const InterpretationSpace& space, Mode mode) {
  std::vector<std::pair<SupportSet, Rational>> entries;
  for (const auto& [line, content] : content_lines(text)) {
    const auto [keyword, rest] = split_keyword(content);
    if (keyword != "mass") throw ParseError(line, "expected 'mass <formula> = <number>'");
    const auto eq = rest.rfind('=');
    if (eq == std::string_view::npos) throw ParseError(line, "missing '='");
    const Formula f = parse_formula_at(line, trim(rest.substr(0, eq)));
    SupportSet set = extension(space, f, mode);
    if (set.empty()) throw EmptyFocalElement("line " + std::to_string(line) + ": '" + to_string(f) + "' has an empty extension");
    entries.emplace_back(std::move(set), probability_at(line, rest.substr(eq + 1)));
  }
  return MassFunction(space, entries, mode);
}

MassFunction load_mass(const std::filesystem::path& path, const InterpretationSpace& space, Mode mode) {
  return parse_mass(read_file(path), space, mode);
}

JointDistribution parse_joint(std::string_view text, const InterpretationSpace& space, Mode mode) {
  RationalVector probs = RationalVector::Constant(static_cast<Eigen::Index>(space.size()), Rational(0));
  for (auto& [row, p] : parse_bit_rows(text, "p", space.sentence_count())) {
    probs(static_cast<Eigen::Index>(row)) = p;
  }
  return JointDistribution(space, std::move(probs), mode);
}

ConditionalTable parse_conditional_table(std::string_view text, const InterpretationSpace& space) {
  const auto rows = parse_bit_rows(text, "q", space.sentence_count());
  ConditionalTable q(static_cast<Eigen::Index>(space.size()));
  for (std::size_t r = 0; r < space.size(); ++r) {
    const auto it = rows.find(r);
    if (it == rows.end()) {
      throw ParseError(0, "conditional table has no entry for row " + row_bits(r, space.sentence_count()));
    }
    q(static_cast<Eigen::Index>(r)) = it->second;
  }
  return q;
}

std::vector<Formula> parse_focal_family(std::string_view text) {
  std::vector<Formula> out;
  for (const auto& [line, content] : content_lines(text)) {
    const auto [keyword, rest] = split_keyword(content);
    if (keyword != "focal" || rest.empty()) throw ParseError(line, "expected 'focal <formula>'");
    out.push_back(parse_formula_at(line, rest));
  }
  return out;
}

MarginSpec parse_margin_spec(std::string_view text, const SentenceSet& sentences) {
  MarginSpec spec;
  text = trim(text);
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string_view item = trim(text.substr(0, comma));
    text = comma == std::string_view::npos ? std::string_view{} : trim(text.substr(comma + 1));
    bool value = true;
    std::string_view name = item;
    if (const auto eq = split_at(item, '=')) {
      name = eq->first;
      if (eq->second == "1" || eq->second == "true") {
        value = true;
      } else if (eq->second == "0" || eq->second == "false") {
        value = false;
      } else {
        throw std::invalid_argument("truth value must be 0 or 1 in '" + std::string(item) + "'");
      }
    } else if (item.starts_with('~')) {
      name = trim(item.substr(1));
      value = false;
    }
    const auto index = sentences.index_of(name);
    if (!index) throw UnknownName(std::string(name));
    spec.push_back({*index, value});
  }
  return spec;
}

std::string row_bits(std::size_t row, std::size_t n) {
  std::string bits(n, '0');
  for (std::size_t i = 0; i < n; ++i) {
    if ((row >> (n - 1 - i)) & 1U) bits[i] = '1';
  }
  return bits;
}

std::string set_formula(const InterpretationSpace& space, const SupportSet& set, Mode mode) {
  if (set == space.row_set(mode)) return "true";
  const auto& sentences = space.sentences();
  const std::size_t n = sentences.size();
  std::string out;
  const auto rows = set.rows();
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (k > 0) out += " | ";
    if (n > 1 && rows.size() > 1) out += '(';
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0) out += " & ";
      if (!space.truth(rows[k], i)) out += '~';
      out += sentences[i].name;
    }
    if (n > 1 && rows.size() > 1) out += ')';
  }
  return out;
}

std::string format_mass(const MassFunction& m, Mode mode) {
  std::string out;
  for (const auto& [set, mass] : m.focal()) {
    out += "mass " + set_formula(m.space(), set, mode) + " = " + mass.str() + "  # " + mass.decimal() + "\n";
  }
  return out;
}

std::string format_joint(const JointDistribution& joint) {
  std::string out;
  const std::size_t n = joint.space().sentence_count();
  for (std::size_t r = 0; r < joint.size(); ++r) {
    out += "p " + row_bits(r, n) + " = " + joint[r].str() + "  # " + joint[r].decimal() + "\n";
  }
  return out;
}

}  // namespace evlogic
