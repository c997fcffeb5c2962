#include "minorkit/report.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace minorkit {

namespace {

std::ofstream* stream_of(void* p) { return static_cast<std::ofstream*>(p); }

}  // namespace

ReportFile read_report_file(const std::string& path) {
  ReportFile out;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open report file: " + path);
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  size_t start = 0;
  bool first = true;
  while (start < content.size()) {
    size_t end = content.find('\n', start);
    if (end == std::string::npos) break;  // partial trailing line, drop
    std::string line = content.substr(start, end - start);
    start = end + 1;
    if (line.empty()) continue;
    nlohmann::json parsed = nlohmann::json::parse(line, nullptr, false);
    if (parsed.is_discarded()) throw std::runtime_error("corrupt report record in " + path);
    const std::string kind = parsed.value("record", "");
    if (first) {
      if (kind != "header") throw std::runtime_error("report file missing header: " + path);
      out.header = line;
      first = false;
    } else if (kind == "graph") {
      out.records.push_back(line);
    } else if (kind == "trailer") {
      out.trailer = line;
      break;
    } else {
      throw std::runtime_error("unknown report record kind in " + path);
    }
  }
  if (first) throw std::runtime_error("report file missing header: " + path);
  return out;
}

std::string json_field(const std::string& line, const std::string& key) {
  nlohmann::json parsed = nlohmann::json::parse(line, nullptr, false);
  if (parsed.is_discarded() || !parsed.contains(key)) return "";
  const auto& value = parsed[key];
  return value.is_string() ? value.get<std::string>() : value.dump();
}

ReportWriter::ReportWriter(std::string path, std::string header_line, bool resume)
    : path_(std::move(path)) {
  std::vector<std::string> keep;
  if (resume && std::filesystem::exists(path_)) {
    ReportFile existing = read_report_file(path_);
    if (existing.header != header_line)
      throw std::runtime_error("refusing to resume: report header mismatch in " + path_);
    if (!existing.trailer.empty()) {
      completed_ = true;
      records_ = existing.records.size();
      if (!existing.records.empty()) cursor_ = json_field(existing.records.back(), "key");
      return;
    }
    keep = std::move(existing.records);
  }
  auto* out = new std::ofstream(path_, std::ios::binary | std::ios::trunc);
  if (!*out) {
    delete out;
    throw std::runtime_error("cannot write report file: " + path_);
  }
  stream_ = out;
  open_ = true;
  *out << header_line << '\n';
  for (const std::string& line : keep) {
    *out << line << '\n';
    ++records_;
    cursor_ = json_field(line, "key");
  }
  out->flush();
}

ReportWriter::~ReportWriter() {
  if (stream_) {
    stream_of(stream_)->flush();
    delete stream_of(stream_);
  }
}

void ReportWriter::append_record(const std::string& key, const std::string& line) {
  if (!open_) throw std::logic_error("report writer is closed");
  auto* out = stream_of(stream_);
  *out << line << '\n';
  out->flush();
  cursor_ = key;
  ++records_;
}

void ReportWriter::finish(const std::string& trailer_line) {
  if (!open_) return;
  auto* out = stream_of(stream_);
  *out << trailer_line << '\n';
  out->flush();
  delete out;
  stream_ = nullptr;
  open_ = false;
}

}  // namespace minorkit
