#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

// Line-oriented document format shared by problems, trajectories, reports
// and model configs. Each non-blank line is `key value...` separated by
// single spaces; `#` starts a comment line. The first record must be
// `format <tag>`.
namespace uavplan::text {

// Shortest decimal that parses back to the same double.
std::string format_number(double value);

struct Record {
  std::size_t line = 0;
  std::string key;
  std::vector<std::string> values;
};

class Document {
 public:
  // Throws ParseError when the format tag is missing or differs from `tag`.
  static Document parse(std::string_view text, std::string_view tag);

  // Next record, which must carry `key`. Throws ParseError otherwise.
  const Record& expect(std::string_view key);
  bool next_is(std::string_view key) const;
  bool done() const { return cursor_ >= records_.size(); }
  // Throws ParseError when records remain.
  void finish() const;

  std::string_view tag() const { return tag_; }

 private:
  std::string tag_;
  std::vector<Record> records_;
  std::size_t cursor_ = 0;
};

double to_number(const Record& record, std::size_t index);
std::uint64_t to_unsigned(const Record& record, std::size_t index);
bool to_bool(const Record& record, std::size_t index);
std::vector<double> to_numbers(const Record& record);
// Requires exactly `count` values on the record.
void expect_arity(const Record& record, std::size_t count);

class Writer {
 public:
  explicit Writer(std::string_view tag);

  Writer& comment(std::string_view text);
  Writer& field(std::string_view key, std::string_view value);
  Writer& field(std::string_view key, double value);
  Writer& field(std::string_view key, std::uint64_t value);
  Writer& field(std::string_view key, bool value);
  Writer& list(std::string_view key, std::span<const double> values);
  Writer& raw(std::string_view key, std::span<const std::string> values);

  const std::string& str() const { return out_; }

 private:
  std::string out_;
};

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace uavplan::text
