#include "topomirror/io.hpp"

#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace topomirror {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

CsvWriter::CsvWriter(const std::string& path, const std::vector<std::string>& header)
    : out_(path), path_(path), n_cols_(header.size()) {
    if (!out_) throw std::runtime_error("cannot open output file: " + path);
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) out_ << ',';
        out_ << header[i];
    }
    out_ << '\n';
}

void CsvWriter::sep() {
    if (col_) out_ << ',';
}

CsvWriter& CsvWriter::field(double v) {
    sep();
    out_ << format_double(v);
    ++col_;
    return *this;
}

CsvWriter& CsvWriter::field(int v) {
    sep();
    out_ << v;
    ++col_;
    return *this;
}

CsvWriter& CsvWriter::field(std::int64_t v) {
    sep();
    out_ << v;
    ++col_;
    return *this;
}

CsvWriter& CsvWriter::field(const std::string& v) {
    sep();
    out_ << v;
    ++col_;
    return *this;
}

CsvWriter& CsvWriter::field(std::complex<double> v) {
    field(v.real());
    field(v.imag());
    return *this;
}

void CsvWriter::end_row() {
    if (col_ != n_cols_)
        throw std::logic_error("csv row has " + std::to_string(col_) + " of " +
                               std::to_string(n_cols_) + " columns");
    out_ << '\n';
    col_ = 0;
}

std::string file_hash(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot hash missing file: " + path);
    std::uint64_t h = 0xCBF29CE484222325ull;
    char buf[1 << 14];
    while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
        for (std::streamsize i = 0; i < in.gcount(); ++i) {
            h ^= static_cast<unsigned char>(buf[i]);
            h *= 0x100000001B3ull;
        }
        if (!in) break;
    }
    char out[17];
    std::snprintf(out, sizeof(out), "%016llx", static_cast<unsigned long long>(h));
    return out;
}

void write_manifest(const std::string& path, const std::string& command,
                    const std::string& resolved_config_json, std::uint64_t seed,
                    double wall_seconds, const std::vector<ManifestEntry>& outputs) {
    nlohmann::json j;
    j["command"] = command;
    j["config"] = nlohmann::json::parse(resolved_config_json);
    j["seed"] = seed;
    j["wall_seconds"] = wall_seconds;
    j["outputs"] = nlohmann::json::array();
    for (const auto& e : outputs)
        j["outputs"].push_back({{"path", e.path}, {"fnv1a64", e.hash}});
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open manifest file: " + path);
    out << j.dump(2) << '\n';
}

}  // namespace topomirror
