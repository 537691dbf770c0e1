#pragma once

#include <string>
#include <utility>
#include <vector>

namespace vexl {

/// One experiment row: a fixed-schema tuple of numbers plus a pass flag.
/// Every flag is recomputable from the stored values.
struct ProbeRow {
  std::vector<double> values;
  bool pass = true;
  std::string note;
};

struct ProbeSummary {
  int rows = 0;
  int failures = 0;
  double minMargin = 0.0;    // smallest (bound - measured) style slack seen
  double maxViolation = 0.0;  // largest overshoot among failing rows
  bool allPass = true;
};

/// Structured outcome of one experiment: parameters, column schema, rows,
/// and a derived summary.
class ProbeReport {
 public:
  explicit ProbeReport(std::string name) : name_(std::move(name)) {}

  const std::string& name() const { return name_; }

  void setParam(const std::string& key, const std::string& value);
  void setParam(const std::string& key, double value);
  const std::vector<std::pair<std::string, std::string>>& params() const { return params_; }

  void setColumns(std::vector<std::string> columns) { columns_ = std::move(columns); }
  const std::vector<std::string>& columns() const { return columns_; }

  void addRow(std::vector<double> values, bool pass, std::string note = {});
  const std::vector<ProbeRow>& rows() const { return rows_; }

  /// Margin bookkeeping feeding the summary; call once per row when the
  /// row has a bound-minus-measured slack.
  void noteMargin(double margin);

  ProbeSummary summary() const;
  bool allPass() const { return summary().allPass; }

 private:
  std::string name_;
  std::vector<std::pair<std::string, std::string>> params_;
  std::vector<std::string> columns_;
  std::vector<ProbeRow> rows_;
  bool anyMargin_ = false;
  double minMargin_ = 0.0;
};

/// Fixed-format double -> ASCII (shortest round-trip via %.17g), shared by
/// every emitter so identical inputs yield identical bytes.
std::string formatDouble(double v);

struct ReportHeader {
  std::string command;
  std::string gridDescription;
  std::string pDescription;
  std::string qDescription;
  std::string seed;  // empty when no randomness involved
  std::vector<std::pair<std::string, std::string>> tolerances;
};

/// Machine-readable JSON document: header plus full rows of each report.
std::string renderJson(const ReportHeader& header, const std::vector<ProbeReport>& reports);

/// CSV summary: '#'-prefixed header block, then one line per report.
std::string renderCsvSummary(const ReportHeader& header,
                             const std::vector<ProbeReport>& reports);

/// Writes both artifacts under outDir as <command>_report.json and
/// <command>_summary.csv. Returns the two paths.
std::pair<std::string, std::string> emitReport(const ReportHeader& header,
                                               const std::vector<ProbeReport>& reports,
                                               const std::string& outDir);

}  // namespace vexl
