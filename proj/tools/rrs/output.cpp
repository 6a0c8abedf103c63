#include "rrs/output.hpp"

#include <charconv>
#include <cmath>
#include <iostream>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

namespace rrs::cli {
namespace {

std::string csv_cell(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          return format_double(v);
        } else if constexpr (std::is_same_v<T, std::string>) {
          if (v.find_first_of(",\"\n") == std::string::npos) return v;
          std::string quoted = "\"";
          for (char c : v) {
            if (c == '"') quoted += '"';
            quoted += c;
          }
          return quoted + '"';
        } else {
          return std::to_string(v);
        }
      },
      cell);
}

nlohmann::json json_cell(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> nlohmann::json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(v)) return nullptr;
        }
        return v;
      },
      cell);
}

}  // namespace

std::optional<Format> parse_format(std::string_view name) {
  if (name == "csv") return Format::kCsv;
  if (name == "json") return Format::kJson;
  return std::nullopt;
}

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

RecordWriter::RecordWriter(std::ostream& out, Format format, std::vector<std::string> columns)
    : out_(out), format_(format), columns_(std::move(columns)) {
  if (format_ == Format::kCsv) {
    for (std::size_t i = 0; i < columns_.size(); ++i) {
      out_ << (i ? "," : "") << columns_[i];
    }
    out_ << '\n';
  } else {
    out_ << '[';
  }
}

RecordWriter::~RecordWriter() {
  try {
    finish();
  } catch (...) {
  }
}

void RecordWriter::row(const std::vector<Cell>& cells) {
  if (cells.size() != columns_.size()) {
    throw std::logic_error("row width does not match the header");
  }
  if (format_ == Format::kCsv) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      out_ << (i ? "," : "") << csv_cell(cells[i]);
    }
    out_ << '\n';
  } else {
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < cells.size(); ++i) obj[columns_[i]] = json_cell(cells[i]);
    out_ << (rows_ ? ",\n " : "\n ") << obj.dump();
  }
  ++rows_;
}

void RecordWriter::finish() {
  if (finished_) return;
  finished_ = true;
  if (format_ == Format::kJson) out_ << (rows_ ? "\n]\n" : "]\n");
  out_.flush();
}

OutputStream::OutputStream(const std::string& path) : out_(&std::cout) {
  if (path.empty() || path == "-") return;
  file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
  if (!*file_) throw std::runtime_error("cannot open output file '" + path + "'");
  out_ = file_.get();
}

}  // namespace rrs::cli
