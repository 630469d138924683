#pragma once

#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "amspace/app/report.hpp"

namespace amspace::app {

// Bad command line or configuration; exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::vector<std::string>& table_names();
const std::vector<std::string>& verify_groups();

// Throws UsageError for an unknown suite or a grid that is not a power of two >= 32.
void validate(const RunConfig& cfg);

std::vector<Row> run_table(const RunConfig& cfg);
std::vector<Row> run_verify(const RunConfig& cfg);

// Field written by --dump for a table: the complex function of the first
// row's form a, or div J{a,b} of the first quotient row.
void dump_table_field(const RunConfig& cfg, std::ostream& os);

// Full command line: 0 pass, 1 tolerance failure, 2 usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace amspace::app
