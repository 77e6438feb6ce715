#include "swipt/csv.hpp"

#include <charconv>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace swipt {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string to_csv(const ResultTable& table) {
  std::string out;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out += ',';
    out += table.columns[c];
  }
  out += '\n';
  const std::size_t width = table.columns.size();
  for (std::size_t r = 0; r < table.rows(); ++r) {
    for (std::size_t c = 0; c < width; ++c) {
      if (c) out += ',';
      out += format_double(table.values[r * width + c]);
    }
    out += '\n';
  }
  return out;
}

namespace {
void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing: " + std::strerror(errno));
  f.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!f) throw std::runtime_error("write failed for " + path + ": " + std::strerror(errno));
}
}  // namespace

void emit_csv(const ResultTable& table, const std::string& path) {
  write_file(path, to_csv(table));
  write_file(path + ".spec", table.provenance);
}

}  // namespace swipt
