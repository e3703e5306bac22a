#include "quanton/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "quanton/version.hpp"

namespace quanton {

StateFile parse_state_file(const std::string& path, double tol) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open state file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_state_json(buf.str(), tol);
}

StateFile parse_state_json(const std::string& text, double tol) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("state file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("amplitudes"))
        throw ParseError("state file must be an object with an \"amplitudes\" field");

    const auto& amps = doc["amplitudes"];
    if (!amps.is_array() || amps.size() != 4)
        throw ParseError("\"amplitudes\" must be a list of 4 [re, im] pairs");

    StateFile out;
    for (int i = 0; i < 4; ++i) {
        const auto& pair = amps[i];
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
            throw ParseError("amplitude " + std::to_string(i) + " must be a [re, im] pair");
        out.state.amp[i] = Complex{pair[0].get<double>(), pair[1].get<double>()};
    }
    if (doc.contains("label")) {
        if (!doc["label"].is_string()) throw ParseError("\"label\" must be a string");
        out.label = doc["label"].get<std::string>();
    }

    const double nsq = out.state.norm_sq();
    if (std::abs(nsq - 1.0) > tol)
        throw ParseError("state is not normalized: squared norm " + format_number(nsq));
    if (std::abs(nsq - 1.0) > 1e-12) {
        const double n = std::sqrt(nsq);
        for (auto& a : out.state.amp) a /= n;
        out.renormalized = true;
    }
    return out;
}

std::string format_number(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

CsvWriter::CsvWriter(std::ostream& os, const std::string& command_line,
                     std::optional<std::uint64_t> seed, const std::vector<std::string>& columns)
    : os_(os), width_(columns.size()) {
    os_ << "# tool: quanton " << kVersion << "\n";
    os_ << "# command: " << command_line << "\n";
    if (seed) os_ << "# seed: " << *seed << "\n";
    for (std::size_t i = 0; i < columns.size(); ++i)
        os_ << (i ? "," : "") << columns[i];
    os_ << "\n";
}

void CsvWriter::write_row(const std::vector<double>& values) {
    if (values.size() != width_) throw std::logic_error("CsvWriter: column count mismatch");
    for (std::size_t i = 0; i < values.size(); ++i)
        os_ << (i ? "," : "") << format_number(values[i]);
    os_ << "\n";
}

}  // namespace quanton
