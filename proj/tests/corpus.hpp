#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace compass::testing {

inline std::filesystem::path source_dir() { return COMPASS_SOURCE_DIR; }

inline std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::vector<std::filesystem::path> corpus(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() == ".compass") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

inline std::vector<std::filesystem::path> good_scripts() { return corpus(source_dir() / "scripts"); }
inline std::vector<std::filesystem::path> malformed_scripts() { return corpus(source_dir() / "tests/data/malformed"); }

// First line of a malformed script: "# expect: LINE:COL KIND".
struct Expectation {
  int line = 0;
  int column = 0;
  std::string kind;
};

inline Expectation expectation(const std::string& text) {
  Expectation e;
  std::istringstream in(text.substr(0, text.find('\n')));
  std::string hash, tag, pos;
  in >> hash >> tag >> pos >> e.kind;
  const auto colon = pos.find(':');
  if (hash == "#" && tag == "expect:" && colon != std::string::npos) {
    e.line = std::stoi(pos.substr(0, colon));
    e.column = std::stoi(pos.substr(colon + 1));
  }
  return e;
}

}  // namespace compass::testing
