#include "vexl/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "vexl/version.hpp"

namespace vexl {

void ProbeReport::setParam(const std::string& key, const std::string& value) {
  params_.emplace_back(key, value);
}

void ProbeReport::setParam(const std::string& key, double value) {
  params_.emplace_back(key, formatDouble(value));
}

void ProbeReport::addRow(std::vector<double> values, bool pass, std::string note) {
  rows_.push_back(ProbeRow{std::move(values), pass, std::move(note)});
}

void ProbeReport::noteMargin(double margin) {
  if (!anyMargin_ || margin < minMargin_) minMargin_ = margin;
  anyMargin_ = true;
}

ProbeSummary ProbeReport::summary() const {
  ProbeSummary s;
  s.rows = static_cast<int>(rows_.size());
  for (const auto& row : rows_)
    if (!row.pass) ++s.failures;
  s.allPass = s.failures == 0;
  s.minMargin = anyMargin_ ? minMargin_ : 0.0;
  s.maxViolation = (anyMargin_ && minMargin_ < 0.0) ? -minMargin_ : 0.0;
  return s;
}

std::string formatDouble(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

nlohmann::ordered_json headerJson(const ReportHeader& header) {
  nlohmann::ordered_json h;
  h["tool"] = "vexl";
  h["version"] = kVersion;
  h["command"] = header.command;
  h["grid"] = header.gridDescription;
  h["p"] = header.pDescription;
  h["q"] = header.qDescription;
  if (!header.seed.empty()) h["seed"] = header.seed;
  nlohmann::ordered_json tol;
  for (const auto& [k, v] : header.tolerances) tol[k] = v;
  h["tolerances"] = std::move(tol);
  return h;
}

}  // namespace

std::string renderJson(const ReportHeader& header, const std::vector<ProbeReport>& reports) {
  nlohmann::ordered_json doc;
  doc["header"] = headerJson(header);
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const auto& report : reports) {
    nlohmann::ordered_json r;
    r["name"] = report.name();
    nlohmann::ordered_json params;
    for (const auto& [k, v] : report.params()) params[k] = v;
    r["params"] = std::move(params);
    r["columns"] = report.columns();
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : report.rows()) {
      nlohmann::ordered_json jr;
      nlohmann::ordered_json vals = nlohmann::ordered_json::array();
      for (double v : row.values) vals.push_back(formatDouble(v));
      jr["values"] = std::move(vals);
      jr["pass"] = row.pass;
      if (!row.note.empty()) jr["note"] = row.note;
      rows.push_back(std::move(jr));
    }
    r["rows"] = std::move(rows);
    ProbeSummary s = report.summary();
    nlohmann::ordered_json js;
    js["rows"] = s.rows;
    js["failures"] = s.failures;
    js["minMargin"] = formatDouble(s.minMargin);
    js["maxViolation"] = formatDouble(s.maxViolation);
    js["allPass"] = s.allPass;
    r["summary"] = std::move(js);
    list.push_back(std::move(r));
  }
  doc["reports"] = std::move(list);
  return doc.dump(2) + "\n";
}

std::string renderCsvSummary(const ReportHeader& header,
                             const std::vector<ProbeReport>& reports) {
  std::string out;
  out += "# tool,vexl\n";
  out += "# version," + std::string(kVersion) + "\n";
  out += "# command," + header.command + "\n";
  out += "# grid," + header.gridDescription + "\n";
  out += "# p," + header.pDescription + "\n";
  out += "# q," + header.qDescription + "\n";
  if (!header.seed.empty()) out += "# seed," + header.seed + "\n";
  for (const auto& [k, v] : header.tolerances) out += "# tolerance," + k + "," + v + "\n";
  out += "report,rows,failures,minMargin,maxViolation,allPass\n";
  for (const auto& report : reports) {
    ProbeSummary s = report.summary();
    out += report.name() + "," + std::to_string(s.rows) + "," + std::to_string(s.failures) +
           "," + formatDouble(s.minMargin) + "," + formatDouble(s.maxViolation) + "," +
           (s.allPass ? "true" : "false") + "\n";
  }
  return out;
}

std::pair<std::string, std::string> emitReport(const ReportHeader& header,
                                               const std::vector<ProbeReport>& reports,
                                               const std::string& outDir) {
  std::filesystem::create_directories(outDir);
  std::string jsonPath = outDir + "/" + header.command + "_report.json";
  std::string csvPath = outDir + "/" + header.command + "_summary.csv";
  {
    std::ofstream f(jsonPath, std::ios::binary);
    if (!f) throw std::runtime_error("emitReport: cannot write " + jsonPath);
    f << renderJson(header, reports);
  }
  {
    std::ofstream f(csvPath, std::ios::binary);
    if (!f) throw std::runtime_error("emitReport: cannot write " + csvPath);
    f << renderCsvSummary(header, reports);
  }
  return {jsonPath, csvPath};
}

}  // namespace vexl
