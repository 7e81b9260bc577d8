#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nivat/decomposition.hpp"
#include "nivat/laurent.hpp"
#include "nivat/source.hpp"

namespace nivat {

/// Raised for malformed config-spec text; carries a line number.
class parse_error : public error {
 public:
  parse_error(const std::string& what, int line)
      : error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Parsed form of the line-oriented config-spec format. Keeps the raw
/// description so printing round-trips; build_* constructs the live
/// objects.
struct ConfigSpec {
  struct SeqDesc {
    std::string kind;  // word | substitution | eventual
    std::vector<i64> word;
    std::map<i64, std::vector<i64>> rules;
    i64 seed = 0;
    std::vector<i64> preperiod, period;
  };
  struct SourceDesc {
    std::string kind;  // constant | doubly_periodic | layer | sum
    i64 value = 0;
    Vec2 h1{0, 0}, h2{0, 0};
    std::vector<std::vector<i64>> table;
    Vec2 h{0, 0};
    SeqDesc seq;
    std::vector<std::pair<i64, std::string>> terms;  // coefficient, name
  };
  struct ComponentDesc {
    i64 coefficient = 1;
    std::string name;  // named sub-source, or "self"
    Vec2 period{0, 0};
  };
  struct DecompDesc {
    std::vector<ComponentDesc> components;
    bool minimal = false;
  };

  SourceDesc main;
  std::map<std::string, SourceDesc> named;
  std::optional<DecompDesc> decomposition;
  std::optional<std::string> annihilator_text;

  ConfigurationSource build_source() const;
  std::optional<Decomposition> build_decomposition() const;
  std::optional<LaurentPoly> build_annihilator() const;

  std::string print() const;
  static ConfigSpec parse_text(const std::string& text);
  static ConfigSpec parse_file(const std::string& path);
};

}  // namespace nivat
