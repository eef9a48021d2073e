#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "tollgrid/util.hpp"

namespace tollgrid {

/// CSV artifact writer.  Every file starts with a `# config_hash=` comment so
/// outputs can be traced to the run configuration; numbers are written in
/// shortest round-trippable form, which keeps reruns byte-identical.
class CsvFile {
 public:
  CsvFile(const std::filesystem::path& path, std::uint64_t config_hash) {
    out_.open(path, std::ios::binary);
    if (!out_) throw Error("cannot open output file: " + path.string());
    out_ << "# config_hash=" << detail::fmt_hex64(config_hash) << "\n";
  }

  static std::string cell(double v) { return detail::fmt_double(v); }
  static std::string cell(std::uint64_t v) { return std::to_string(v); }
  static std::string cell(int v) { return std::to_string(v); }
  static std::string cell(bool v) { return v ? "1" : "0"; }
  static std::string cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q += '"';
      q += c;
    }
    q += '"';
    return q;
  }

  void row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out_ << ',';
      out_ << cells[i];
    }
    out_ << '\n';
  }

 private:
  std::ofstream out_;
};

}  // namespace tollgrid
