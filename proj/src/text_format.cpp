#include "uavplan/text_format.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "uavplan/errors.hpp"

namespace uavplan::text {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& message) {
  throw ParseError("line " + std::to_string(line) + ": " + message);
}

std::vector<std::string> split(std::string_view line) {
  std::vector<std::string> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
    if (end > pos) tokens.emplace_back(line.substr(pos, end - pos));
    pos = end;
  }
  return tokens;
}

}  // namespace

std::string format_number(double value) {
  if (value == 0.0) return "0";  // folds -0 as well
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) throw std::runtime_error("cannot format number");
  return std::string(buf, ptr);
}

Document Document::parse(std::string_view text, std::string_view tag) {
  Document doc;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    pos = end + 1;
    auto tokens = split(line);
    if (tokens.empty() || tokens.front().starts_with('#')) continue;
    Record rec;
    rec.line = line_no;
    rec.key = std::move(tokens.front());
    rec.values.assign(std::make_move_iterator(tokens.begin() + 1),
                      std::make_move_iterator(tokens.end()));
    doc.records_.push_back(std::move(rec));
  }
  if (doc.records_.empty() || doc.records_.front().key != "format") {
    fail(doc.records_.empty() ? 1 : doc.records_.front().line, "missing format tag");
  }
  const Record& head = doc.records_.front();
  if (head.values.size() != 1) fail(head.line, "format tag takes one value");
  doc.tag_ = head.values.front();
  if (doc.tag_ != tag) {
    fail(head.line, "expected format '" + std::string(tag) + "', found '" + doc.tag_ + "'");
  }
  doc.cursor_ = 1;
  return doc;
}

const Record& Document::expect(std::string_view key) {
  if (done()) {
    fail(records_.empty() ? 0 : records_.back().line,
         "unexpected end of document, expected '" + std::string(key) + "'");
  }
  const Record& rec = records_[cursor_];
  if (rec.key != key) fail(rec.line, "expected '" + std::string(key) + "', found '" + rec.key + "'");
  ++cursor_;
  return rec;
}

bool Document::next_is(std::string_view key) const {
  return !done() && records_[cursor_].key == key;
}

void Document::finish() const {
  if (!done()) fail(records_[cursor_].line, "unexpected record '" + records_[cursor_].key + "'");
}

void expect_arity(const Record& record, std::size_t count) {
  if (record.values.size() != count) {
    fail(record.line, "'" + record.key + "' takes " + std::to_string(count) + " value(s), found " +
                          std::to_string(record.values.size()));
  }
}

double to_number(const Record& record, std::size_t index) {
  if (index >= record.values.size()) fail(record.line, "'" + record.key + "' is missing a value");
  const std::string& s = record.values[index];
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(value)) {
    fail(record.line, "'" + s + "' is not a finite number");
  }
  return value;
}

std::uint64_t to_unsigned(const Record& record, std::size_t index) {
  if (index >= record.values.size()) fail(record.line, "'" + record.key + "' is missing a value");
  const std::string& s = record.values[index];
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    fail(record.line, "'" + s + "' is not an unsigned integer");
  }
  return value;
}

bool to_bool(const Record& record, std::size_t index) {
  if (index >= record.values.size()) fail(record.line, "'" + record.key + "' is missing a value");
  const std::string& s = record.values[index];
  if (s == "true") return true;
  if (s == "false") return false;
  fail(record.line, "'" + s + "' is not true/false");
}

std::vector<double> to_numbers(const Record& record) {
  std::vector<double> out;
  out.reserve(record.values.size());
  for (std::size_t i = 0; i < record.values.size(); ++i) out.push_back(to_number(record, i));
  return out;
}

Writer::Writer(std::string_view tag) { field("format", tag); }

Writer& Writer::comment(std::string_view text) {
  out_ += "# ";
  out_ += text;
  out_ += '\n';
  return *this;
}

Writer& Writer::field(std::string_view key, std::string_view value) {
  out_ += key;
  out_ += ' ';
  out_ += value;
  out_ += '\n';
  return *this;
}

Writer& Writer::field(std::string_view key, double value) {
  return field(key, std::string_view(format_number(value)));
}

Writer& Writer::field(std::string_view key, std::uint64_t value) {
  return field(key, std::string_view(std::to_string(value)));
}

Writer& Writer::field(std::string_view key, bool value) {
  return field(key, std::string_view(value ? "true" : "false"));
}

Writer& Writer::list(std::string_view key, std::span<const double> values) {
  out_ += key;
  for (double v : values) {
    out_ += ' ';
    out_ += format_number(v);
  }
  out_ += '\n';
  return *this;
}

Writer& Writer::raw(std::string_view key, std::span<const std::string> values) {
  out_ += key;
  for (const auto& v : values) {
    out_ += ' ';
    out_ += v;
  }
  out_ += '\n';
  return *this;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << contents;
  if (!out) throw InputError("failed writing '" + path + "'");
}

}  // namespace uavplan::text
