#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace amspace::app {

inline constexpr const char* kTypoFlag = "paper-typo-suspected";

enum class Test {
  rel,       // |computed - reference| <= tol |reference|
  abs,       // |computed - reference| <= tol
  at_most,   // computed <= tol
  at_least,  // computed >= tol
};

struct Row {
  std::string id;
  std::string inputs;
  double computed = 0.0;
  std::optional<double> printed;    // value stated in the source, if any
  std::optional<double> reference;  // value the check measures against
  Test test = Test::rel;
  double tol = 0.0;
  std::string flag;
  std::string note;

  std::optional<double> abs_err() const;
  std::optional<double> rel_err() const;
  bool pass() const;
};

Row compare(std::string id, std::string inputs, double computed, double reference, double tol,
            Test test = Test::rel);
Row bound(std::string id, std::string inputs, double computed, double tol, Test test = Test::at_most);

struct Summary {
  int pass = 0;
  int fail = 0;
  int flagged = 0;
};
Summary summarize(const std::vector<Row>& rows);
bool all_pass(const std::vector<Row>& rows);

struct RunConfig {
  std::string command;  // tables | verify
  std::string suite;
  int grid = 128;
  std::string out = "json";
  std::uint64_t seed = 1;
  std::string dump;
};

void write_json(std::ostream& os, const RunConfig& cfg, const std::vector<Row>& rows);
void write_csv(std::ostream& os, const std::vector<Row>& rows);
// RFC 4180: quote when the field holds a comma, quote or line break.
std::string csv_field(const std::string& s);

}  // namespace amspace::app
