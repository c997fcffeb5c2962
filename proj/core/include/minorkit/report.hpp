#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "minorkit/graph.hpp"

namespace minorkit {

/// Line-oriented report file: a header record, one record per examined
/// graph, and a trailer record, each a single JSON object. Files are
/// deterministic for a fixed filter, so an interrupted run resumed from its
/// cursor completes to a byte-identical file.
class ReportWriter {
public:
  /// Opens path for writing. With resume=true an existing file is loaded,
  /// its header must match header_line exactly (else std::runtime_error),
  /// complete records are kept and the cursor is restored; a trailing
  /// partial line is dropped.
  ReportWriter(std::string path, std::string header_line, bool resume);
  ~ReportWriter();

  ReportWriter(const ReportWriter&) = delete;
  ReportWriter& operator=(const ReportWriter&) = delete;

  /// Key of the last persisted record, empty if none.
  const std::string& cursor() const { return cursor_; }
  uint64_t records_written() const { return records_; }
  /// True if the existing file already carries a trailer.
  bool completed() const { return completed_; }

  /// Appends one record line (no newline); key must follow the run's
  /// deterministic order.
  void append_record(const std::string& key, const std::string& line);

  /// Writes the trailer and closes the file.
  void finish(const std::string& trailer_line);

private:
  std::string path_;
  std::string cursor_;
  uint64_t records_ = 0;
  bool completed_ = false;
  bool open_ = false;
  void* stream_ = nullptr;  // std::ofstream, kept out of the header
};

/// Parsed view of a report file, for resume validation and offline rechecks.
struct ReportFile {
  std::string header;
  std::vector<std::string> records;  // complete graph records, in order
  std::string trailer;               // empty if the run never finished
};

ReportFile read_report_file(const std::string& path);

/// Extracts the string value of a top-level key from a one-line JSON
/// record; empty if absent.
std::string json_field(const std::string& line, const std::string& key);

}  // namespace minorkit
