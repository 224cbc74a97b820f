// Golden transcripts: a command line plus its exit code, stdout and stderr.
//
//     $ <args separated by single spaces>
//     exit <code>
//     --- stdout
//     ...
//     --- stderr
//     ...
//
// `{data}` and `{inputs}` in the command stand for the example directory and
// tests/golden/inputs; the same substitution is undone in the output.
#ifndef EVLOGIC_TESTS_TRANSCRIPT_HPP
#define EVLOGIC_TESTS_TRANSCRIPT_HPP

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "evlogic/cli.hpp"
#include "evlogic/kb_io.hpp"

namespace golden {

inline const std::filesystem::path kDataDir = EVLOGIC_DATA_DIR;
inline const std::filesystem::path kGoldenDir = EVLOGIC_GOLDEN_DIR;

inline void replace_all(std::string& s, const std::string& from, const std::string& to) {
  for (std::size_t pos = 0; (pos = s.find(from, pos)) != std::string::npos; pos += to.size()) s.replace(pos, from.size(), to);
}

inline std::string expand(std::string s) {
  replace_all(s, "{data}", kDataDir.string());
  replace_all(s, "{inputs}", (kGoldenDir / "inputs").string());
  return s;
}

inline std::string collapse(std::string s) {
  replace_all(s, (kGoldenDir / "inputs").string(), "{inputs}");
  replace_all(s, kDataDir.string(), "{data}");
  return s;
}

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

inline Result run(const std::string& command) {
  std::vector<std::string> args{"evlogic"};
  std::istringstream words(expand(command));
  for (std::string w; words >> w;) args.push_back(w);
  std::ostringstream out;
  std::ostringstream err;
  Result r;
  r.code = evlogic::cli::run(args, out, err);
  r.out = collapse(out.str());
  r.err = collapse(err.str());
  return r;
}

inline std::string render(const std::string& command, const Result& r) {
  return "$ " + command + "\nexit " + std::to_string(r.code) + "\n--- stdout\n" + r.out + "--- stderr\n" + r.err;
}

/// First line of a transcript file, without the leading `$ `.
inline std::string command_of(const std::string& transcript) {
  const auto eol = transcript.find('\n');
  return transcript.substr(2, eol - 2);
}

struct Check {
  bool ok;
  std::string expected;
  std::string actual;
};

/// Replays tests/golden/<name>.txt.
inline Check replay(const std::string& name) {
  const std::string expected = evlogic::read_file(kGoldenDir / (name + ".txt"));
  const std::string command = command_of(expected);
  const std::string actual = render(command, run(command));
  return {actual == expected, expected, actual};
}

}  // namespace golden

#endif  // EVLOGIC_TESTS_TRANSCRIPT_HPP
