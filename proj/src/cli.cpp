#include "evlogic/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <ostream>

#include "evlogic/errors.hpp"
#include "evlogic/evidential.hpp"
#include "evlogic/kb_io.hpp"
#include "evlogic/problog.hpp"
#include "evlogic/semantics.hpp"

namespace evlogic::cli {

namespace {

using nlohmann::ordered_json;

struct Settings {
  std::string mode = "strict";
  std::string relation = "exact";
  bool json = false;
  std::size_t max_atoms = 20;
  std::size_t max_sentences = 10;
  std::string focal;

  Mode query_mode() const { return mode == "generalized" ? Mode::Generalized : Mode::Strict; }
  Limits limits() const {
    Limits l;
    l.max_atoms = max_atoms;
    l.max_sentences = max_sentences;
    return l;
  }
};

std::string pair_text(const Rational& lo, const Rational& hi) {
  return "[" + lo.str() + ", " + hi.str() + "] (" + lo.decimal() + ", " + hi.decimal() + ")";
}

std::string value_text(const Rational& v) { return v.str() + " (" + v.decimal() + ")"; }

void write_json(std::ostream& out, const ordered_json& j) { out << j.dump() << '\n'; }

ordered_json bounds_json(const Formula& query, const Rational& lo, const Rational& hi, const Settings& s) {
  ordered_json j;
  j["query"] = to_string(query);
  j["lo"] = lo.str();
  j["hi"] = hi.str();
  j["lo_dec"] = lo.to_double();
  j["hi_dec"] = hi.to_double();
  j["mode"] = s.mode;
  return j;
}

void cmd_interpretations(const std::string& kb_path, const Settings& s, std::ostream& out) {
  const KnowledgeBase kb = load_kb(kb_path);
  const InterpretationSpace space = interpretation_space(kb.sentences, s.limits());
  const std::size_t n = space.sentence_count();
  if (s.json) {
    ordered_json j;
    j["sentences"] = kb.sentences.names();
    j["rows"] = ordered_json::array();
    for (std::size_t r = 0; r < space.size(); ++r) {
      j["rows"].push_back({{"index", r}, {"bits", row_bits(r, n)}, {"consistent", space.consistent(r)}});
    }
    j["mode"] = s.mode;
    write_json(out, j);
    return;
  }
  out << "# sentences:";
  for (const auto& name : kb.sentences.names()) out << ' ' << name;
  out << '\n';
  for (std::size_t r = 0; r < space.size(); ++r) {
    out << r << ' ' << row_bits(r, n) << ' ' << (space.consistent(r) ? "consistent" : "inconsistent") << '\n';
  }
}

void cmd_entail(const std::string& kb_path, const Settings& s, std::ostream& out) {
  const KnowledgeBase kb = load_kb(kb_path);
  const std::vector<Rational> pi = kb.probability_vector();
  for (const Formula& q : kb.queries) {
    const Bounds b = entail_bounds(kb.sentences, pi, q, s.query_mode(), s.limits());
    if (s.json) {
      write_json(out, bounds_json(q, b.lo, b.hi, s));
    } else {
      out << to_string(q) << ": " << pair_text(b.lo, b.hi) << '\n';
    }
  }
}

void cmd_ds_entail(const std::string& kb_path, const Settings& s, std::ostream& out) {
  const KnowledgeBase kb = load_kb(kb_path);
  const IntervalSystem system = kb.interval_system();
  EvidentialOptions options;
  options.mode = s.query_mode();
  options.relation = s.relation == "relaxed" ? IntervalRelation::Relaxed : IntervalRelation::Exact;
  if (!s.focal.empty()) options.focal_family = parse_focal_family(read_file(s.focal));
  for (const Formula& q : kb.queries) {
    const EvidentialInterval iv = evidential_entail(kb.sentences, system, q, options, s.limits());
    if (s.json) {
      ordered_json j = bounds_json(q, iv.spt(), iv.pls(), s);
      j["relation"] = s.relation;
      write_json(out, j);
    } else {
      out << to_string(q) << ": " << pair_text(iv.spt(), iv.pls()) << '\n';
    }
  }
}

void cmd_ds_combine(const std::string& kb_path, const std::string& first, const std::string& second,
                    const Settings& s, std::ostream& out) {
  const KnowledgeBase kb = load_kb(kb_path);
  const InterpretationSpace space = interpretation_space(kb.sentences, s.limits());
  const MassFunction m1 = load_mass(first, space, s.query_mode());
  const MassFunction m2 = load_mass(second, space, s.query_mode());
  const Combination c = combine(m1, m2);
  if (s.json) {
    ordered_json j;
    j["focal"] = ordered_json::array();
    for (const auto& [set, mass] : c.mass.focal()) {
      j["focal"].push_back({{"set", set_formula(space, set, s.query_mode())},
                            {"rows", set.rows()},
                            {"mass", mass.str()},
                            {"mass_dec", mass.to_double()}});
    }
    j["conflict"] = c.conflict.str();
    j["conflict_dec"] = c.conflict.to_double();
    j["mode"] = s.mode;
    write_json(out, j);
    return;
  }
  out << format_mass(c.mass, s.query_mode());
  out << "# conflict K = " << value_text(c.conflict) << '\n';
}

struct JointFlags {
  std::string marginal;
  std::string conditional;
  std::string bayes;
  std::string given;
  std::string extend;
  std::string table;
};

void cmd_joint(const std::string& kb_path, const std::string& joint_path, const JointFlags& f, const Settings& s,
               std::ostream& out) {
  const KnowledgeBase kb = load_kb(kb_path);
  const InterpretationSpace space = interpretation_space(kb.sentences, s.limits());
  const JointDistribution joint = parse_joint(read_file(joint_path), space, s.query_mode());
  const SentenceSet& sentences = kb.sentences;

  const auto report = [&](const std::string& what, const std::string& label, const Rational& v) {
    if (s.json) {
      ordered_json j;
      j["query"] = what;
      j["spec"] = label;
      j["value"] = v.str();
      j["value_dec"] = v.to_double();
      j["mode"] = s.mode;
      write_json(out, j);
    } else {
      out << what << ' ' << label << " = " << value_text(v) << '\n';
    }
  };

  bool any = false;
  if (!f.marginal.empty()) {
    any = true;
    report("marginal", "p(" + f.marginal + ")", marginal(joint, parse_margin_spec(f.marginal, sentences)));
  }
  if (!f.conditional.empty()) {
    any = true;
    report("conditional", "p(" + f.conditional + " | " + f.given + ")",
           conditional(joint, parse_margin_spec(f.conditional, sentences), parse_margin_spec(f.given, sentences)));
  }
  if (!f.bayes.empty()) {
    any = true;
    // p(bayes | given) = p(bayes) p(given | bayes) / p(given)
    report("bayes", "p(" + f.bayes + " | " + f.given + ")",
           bayes_posterior(joint, parse_margin_spec(f.given, sentences), parse_margin_spec(f.bayes, sentences)));
  }
  if (!f.extend.empty()) {
    any = true;
    const Formula added = parse(f.extend);
    const ConditionalTable q = parse_conditional_table(read_file(f.table), space);
    const JointDistribution extended = extend_joint(joint, added, q, s.query_mode(), s.limits());
    const Rational added_marginal = marginal(extended, {{sentences.size(), true}});
    if (s.json) {
      ordered_json j;
      j["query"] = "extend";
      j["sentence"] = to_string(added);
      j["rows"] = ordered_json::array();
      for (std::size_t r = 0; r < extended.size(); ++r) {
        j["rows"].push_back({{"bits", row_bits(r, extended.space().sentence_count())},
                             {"p", extended[r].str()},
                             {"p_dec", extended[r].to_double()}});
      }
      j["marginal"] = added_marginal.str();
      j["marginal_dec"] = added_marginal.to_double();
      j["mode"] = s.mode;
      write_json(out, j);
    } else {
      out << "# extended with " << to_string(added) << '\n';
      out << format_joint(extended);
      out << "# marginal of new sentence = " << value_text(added_marginal) << '\n';
    }
  }
  if (any) return;

  const RationalVector v = valuation(joint);
  if (s.json) {
    ordered_json j;
    j["query"] = "valuation";
    j["values"] = ordered_json::object();
    for (std::size_t i = 0; i < sentences.size(); ++i) {
      j["values"][sentences[i].name] = v(static_cast<Eigen::Index>(i)).str();
    }
    j["mode"] = s.mode;
    write_json(out, j);
    return;
  }
  out << format_joint(joint);
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    out << "# valuation " << sentences[i].name << " = " << value_text(v(static_cast<Eigen::Index>(i))) << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Probabilistic and evidential entailment over propositional knowledge bases", "evlogic"};
  app.require_subcommand(1);
  Settings settings;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--mode", settings.mode, "strict or generalized")
        ->check(CLI::IsMember({"strict", "generalized"}));
    sub->add_flag("--json", settings.json, "one JSON object per result line");
    sub->add_option("--max-atoms", settings.max_atoms, "atom cap")->check(CLI::Range(1, 62));
    sub->add_option("--max-sentences", settings.max_sentences, "sentence cap")->check(CLI::Range(1, 30));
  };

  std::string kb_path;
  std::string second_path;
  std::string third_path;
  JointFlags joint_flags;
  std::function<void()> action;

  auto* interp = app.add_subcommand("interpretations", "list the interpretation frame with consistency flags");
  interp->add_option("kb", kb_path, "knowledge base file")->required();
  add_common(interp);
  interp->callback([&] { action = [&] { cmd_interpretations(kb_path, settings, out); }; });

  auto* entail = app.add_subcommand("entail", "probability bounds for each query");
  entail->add_option("kb", kb_path, "knowledge base file")->required();
  add_common(entail);
  entail->callback([&] { action = [&] { cmd_entail(kb_path, settings, out); }; });

  auto* ds_entail = app.add_subcommand("ds-entail", "evidential interval for each query");
  ds_entail->add_option("kb", kb_path, "knowledge base file")->required();
  add_common(ds_entail);
  ds_entail->add_option("--relation", settings.relation, "exact or relaxed")
      ->check(CLI::IsMember({"exact", "relaxed"}));
  ds_entail->add_option("--focal", settings.focal, "explicit focal family file");
  ds_entail->callback([&] { action = [&] { cmd_ds_entail(kb_path, settings, out); }; });

  auto* ds_combine = app.add_subcommand("ds-combine", "Dempster combination of two mass files");
  ds_combine->add_option("kb", kb_path, "knowledge base file defining the frame")->required();
  ds_combine->add_option("mass1", second_path, "first mass file")->required();
  ds_combine->add_option("mass2", third_path, "second mass file")->required();
  add_common(ds_combine);
  ds_combine->callback([&] { action = [&] { cmd_ds_combine(kb_path, second_path, third_path, settings, out); }; });

  auto* joint = app.add_subcommand("joint", "marginals, conditionals and extension of a joint distribution");
  joint->add_option("kb", kb_path, "knowledge base file")->required();
  joint->add_option("joint", second_path, "joint distribution file")->required();
  add_common(joint);
  joint->add_option("--marginal", joint_flags.marginal, "p(SPEC), SPEC like 'a=1,b=0'");
  auto* cond = joint->add_option("--conditional", joint_flags.conditional, "p(SPEC | --given)");
  auto* bayes = joint->add_option("--bayes", joint_flags.bayes, "p(SPEC | --given) through Bayes' formula");
  auto* given = joint->add_option("--given", joint_flags.given, "conditioning SPEC");
  cond->needs(given);
  bayes->needs(given);
  auto* extend = joint->add_option("--extend", joint_flags.extend, "formula to append");
  auto* table = joint->add_option("--table", joint_flags.table, "conditional table file for --extend");
  extend->needs(table);
  table->needs(extend);
  joint->callback([&] { action = [&] { cmd_joint(kb_path, second_path, joint_flags, settings, out); }; });

  try {
    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (action) action();
    return kOk;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const Incoherence& e) {
    err << "error: " << e.what() << '\n';
    return kIncoherent;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace evlogic::cli
