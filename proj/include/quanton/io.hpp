// io.hpp
// State file parsing and deterministic CSV emission for the CLI.

#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "quanton/state.hpp"

namespace quanton {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// On-disk state document (JSON):
//   { "label": "optional text",
//     "amplitudes": [[re, im], [re, im], [re, im], [re, im]] }
struct StateFile {
    StateVector4 state;
    std::optional<std::string> label;
    // Set when the input deviated from unit norm by more than 1e-12 and
    // was renormalized (deviations beyond `tol` are rejected instead).
    bool renormalized = false;
};

StateFile parse_state_file(const std::string& path, double tol = 1e-9);
StateFile parse_state_json(const std::string& text, double tol = 1e-9);

// Fixed-width decimal with 12 significant digits, locale-independent.
std::string format_number(double x);

// Deterministic CSV writer: '#'-prefixed header comments (tool version,
// command line, seed), then a column-name row, then data rows.
class CsvWriter {
  public:
    CsvWriter(std::ostream& os, const std::string& command_line,
              std::optional<std::uint64_t> seed, const std::vector<std::string>& columns);

    void write_row(const std::vector<double>& values);

  private:
    std::ostream& os_;
    std::size_t width_;
};

}  // namespace quanton
