#pragma once

#include <complex>
#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

namespace topomirror {

// CSV writer with a fixed header row and 17-significant-digit floats, so
// re-running a manifest reproduces byte-identical bodies.
class CsvWriter {
public:
    CsvWriter(const std::string& path, const std::vector<std::string>& header);

    CsvWriter& field(double v);
    CsvWriter& field(int v);
    CsvWriter& field(std::int64_t v);
    CsvWriter& field(const std::string& v);
    CsvWriter& field(std::complex<double> v);  // two columns, re then im
    void end_row();

    const std::string& path() const { return path_; }

private:
    void sep();
    std::ofstream out_;
    std::string path_;
    std::size_t n_cols_ = 0;
    std::size_t col_ = 0;
};

std::string format_double(double v);  // "%.17g"

// FNV-1a 64-bit over the file bytes, rendered as 16 hex digits.
std::string file_hash(const std::string& path);

struct ManifestEntry {
    std::string path;
    std::string hash;
};

// JSON run manifest: command, resolved config echo, seed, wall time, and
// the output files with content hashes.
void write_manifest(const std::string& path, const std::string& command,
                    const std::string& resolved_config_json, std::uint64_t seed,
                    double wall_seconds, const std::vector<ManifestEntry>& outputs);

}  // namespace topomirror
