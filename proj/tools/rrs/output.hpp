#pragma once

#include <cstdint>
#include <fstream>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace rrs::cli {

enum class Format { kCsv, kJson };

std::optional<Format> parse_format(std::string_view name);

using Cell = std::variant<std::int64_t, std::uint64_t, double, std::string>;

/// Shortest round-trip text for doubles; "nan"/"inf" spelled out.
std::string format_double(double value);

/// Streams rows as CSV (header first, always) or as a JSON array of objects.
class RecordWriter {
 public:
  RecordWriter(std::ostream& out, Format format, std::vector<std::string> columns);
  RecordWriter(const RecordWriter&) = delete;
  RecordWriter& operator=(const RecordWriter&) = delete;
  ~RecordWriter();

  void row(const std::vector<Cell>& cells);
  /// Closes the JSON array. Called by the destructor if not called before.
  void finish();

 private:
  std::ostream& out_;
  Format format_;
  std::vector<std::string> columns_;
  std::size_t rows_ = 0;
  bool finished_ = false;
};

/// Either a file (when `path` is non-empty) or stdout. Throws
/// std::runtime_error when the file cannot be opened.
class OutputStream {
 public:
  explicit OutputStream(const std::string& path);
  std::ostream& get() noexcept { return *out_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* out_;
};

}  // namespace rrs::cli
