// Copyright 2026 The xamr Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "xamr/report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "xamr/error.hpp"

namespace xamr {
namespace {

using nlohmann::json;

std::string raw3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

std::string pct1(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f", v * 100.0);
  return buf;
}

std::string csv6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

json match_json(const MatchResult &r) {
  json out;
  out["precision"] = r.precision;
  out["recall"] = r.recall;
  out["f1"] = r.f1;
  out["matched"] = r.matched;
  out["pred_triples"] = r.pred_size;
  out["gold_triples"] = r.gold_size;
  out["precision_defined"] = r.precision_defined;
  out["recall_defined"] = r.recall_defined;
  return out;
}

std::string pair_label(const std::string &a, const std::string &b) {
  return a + "-" + b;
}

}  // namespace

ReportFormat parse_report_format(const std::string &name) {
  if (name == "text") return ReportFormat::Text;
  if (name == "json") return ReportFormat::Json;
  if (name == "csv") return ReportFormat::Csv;
  throw DataError("unknown report format '" + name + "' (expected text|json|csv)");
}

std::string render_match(const MatchResult &r, const std::string &metric_name,
                         ReportFormat format) {
  switch (format) {
    case ReportFormat::Json: {
      json out = match_json(r);
      out["metric"] = metric_name;
      out["restarts"] = r.restarts_used;
      out["seed"] = r.seed;
      return out.dump() + "\n";
    }
    case ReportFormat::Csv: {
      std::ostringstream out;
      out << "metric,matched,pred_triples,gold_triples,precision,recall,f1\n"
          << metric_name << ',' << csv6(r.matched) << ',' << csv6(r.pred_size) << ','
          << csv6(r.gold_size) << ',' << csv6(r.precision) << ',' << csv6(r.recall)
          << ',' << csv6(r.f1) << '\n';
      return out.str();
    }
    case ReportFormat::Text:
    default: {
      std::ostringstream out;
      out << "metric   " << metric_name << '\n'
          << "matched  " << raw3(r.matched) << '\n'
          << "pred     " << raw3(r.pred_size) << " triples\n"
          << "gold     " << raw3(r.gold_size) << " triples\n"
          << "P        " << raw3(r.precision) << "  (" << pct1(r.precision) << ")\n"
          << "R        " << raw3(r.recall) << "  (" << pct1(r.recall) << ")\n"
          << "F1       " << raw3(r.f1) << "  (" << pct1(r.f1) << ")\n";
      return out.str();
    }
  }
}

std::string render_breakdown(const BreakdownReport &report,
                             const std::string &metric_name, ReportFormat format) {
  switch (format) {
    case ReportFormat::Json: {
      json out;
      out["smatch"] = match_json(report.overall);
      for (Aspect aspect : kAllAspects)
        out[aspect_key(aspect)] = match_json(report.at(aspect));
      return out.dump() + "\n";
    }
    case ReportFormat::Csv: {
      std::ostringstream out;
      out << "aspect,precision,recall,f1\n";
      out << "smatch," << csv6(report.overall.precision) << ','
          << csv6(report.overall.recall) << ',' << csv6(report.overall.f1) << '\n';
      for (Aspect aspect : kAllAspects) {
        const MatchResult &r = report.at(aspect);
        out << aspect_key(aspect) << ',' << csv6(r.precision) << ',' << csv6(r.recall)
            << ',' << csv6(r.f1) << '\n';
      }
      return out.str();
    }
    case ReportFormat::Text:
    default: {
      std::ostringstream out;
      char line[128];
      std::snprintf(line, sizeof(line), "%-14s %6s %6s %6s\n", "Metric", "P", "R", "F1");
      out << line;
      auto row = [&](const char *label, const MatchResult &r) {
        std::snprintf(line, sizeof(line), "%-14s %6s %6s %6s\n", label,
                      pct1(r.precision).c_str(), pct1(r.recall).c_str(),
                      pct1(r.f1).c_str());
        out << line;
      };
      row(metric_name == "s2match" ? "S2match" : "Smatch", report.overall);
      for (Aspect aspect : kAllAspects) row(aspect_label(aspect), report.at(aspect));
      return out.str();
    }
  }
}

namespace {

json matrix_pairs_json(const ConsistencyMatrix &matrix) {
  json pairs;
  for (size_t i = 0; i < matrix.languages.size(); ++i)
    for (size_t j = i + 1; j < matrix.languages.size(); ++j)
      pairs[pair_label(matrix.languages[i], matrix.languages[j])] =
          match_json(matrix.at(i, j));
  return pairs;
}

void matrix_text_row(std::ostringstream &out, const std::string &label,
                     const ConsistencyMatrix &matrix) {
  char cell[64];
  std::snprintf(cell, sizeof(cell), "%-14s", label.c_str());
  out << cell;
  for (size_t i = 0; i < matrix.languages.size(); ++i)
    for (size_t j = i + 1; j < matrix.languages.size(); ++j) {
      std::snprintf(cell, sizeof(cell), " %7s", pct1(matrix.at(i, j).f1).c_str());
      out << cell;
    }
  out << '\n';
}

void matrix_text_header(std::ostringstream &out, const ConsistencyMatrix &matrix) {
  char cell[64];
  std::snprintf(cell, sizeof(cell), "%-14s", "Metric");
  out << cell;
  for (size_t i = 0; i < matrix.languages.size(); ++i)
    for (size_t j = i + 1; j < matrix.languages.size(); ++j) {
      std::snprintf(cell, sizeof(cell), " %7s",
                    pair_label(matrix.languages[i], matrix.languages[j]).c_str());
      out << cell;
    }
  out << '\n';
}

void matrix_csv_rows(std::ostringstream &out, const std::string &label,
                     const ConsistencyMatrix &matrix) {
  for (size_t i = 0; i < matrix.languages.size(); ++i)
    for (size_t j = i + 1; j < matrix.languages.size(); ++j) {
      const MatchResult &r = matrix.at(i, j);
      out << label << ',' << matrix.languages[i] << ',' << matrix.languages[j] << ','
          << csv6(r.precision) << ',' << csv6(r.recall) << ',' << csv6(r.f1) << '\n';
    }
}

}  // namespace

std::string render_consistency(const ConsistencyMatrix &matrix,
                               const std::string &metric_name, ReportFormat format) {
  switch (format) {
    case ReportFormat::Json: {
      json out;
      out["languages"] = matrix.languages;
      out["metric"] = metric_name;
      out["pairs"] = matrix_pairs_json(matrix);
      return out.dump() + "\n";
    }
    case ReportFormat::Csv: {
      std::ostringstream out;
      out << "metric,row_language,col_language,precision,recall,f1\n";
      matrix_csv_rows(out, metric_name, matrix);
      return out.str();
    }
    case ReportFormat::Text:
    default: {
      std::ostringstream out;
      matrix_text_header(out, matrix);
      matrix_text_row(out, metric_name == "s2match" ? "S2match" : "Smatch", matrix);
      return out.str();
    }
  }
}

std::string render_consistency_breakdown(const ConsistencyBreakdown &report,
                                         const std::string &metric_name,
                                         ReportFormat format) {
  switch (format) {
    case ReportFormat::Json: {
      json out;
      out["languages"] = report.overall.languages;
      out["metric"] = metric_name;
      out["pairs"] = matrix_pairs_json(report.overall);
      json aspects;
      for (Aspect aspect : kAllAspects)
        aspects[aspect_key(aspect)] = matrix_pairs_json(report.at(aspect));
      out["aspects"] = aspects;
      return out.dump() + "\n";
    }
    case ReportFormat::Csv: {
      std::ostringstream out;
      out << "metric,row_language,col_language,precision,recall,f1\n";
      matrix_csv_rows(out, metric_name, report.overall);
      for (Aspect aspect : kAllAspects)
        matrix_csv_rows(out, aspect_key(aspect), report.at(aspect));
      return out.str();
    }
    case ReportFormat::Text:
    default: {
      std::ostringstream out;
      matrix_text_header(out, report.overall);
      matrix_text_row(out, metric_name == "s2match" ? "S2match" : "Smatch",
                      report.overall);
      for (Aspect aspect : kAllAspects)
        matrix_text_row(out, aspect_label(aspect), report.at(aspect));
      return out.str();
    }
  }
}

std::string render_bleu(double bleu, ReportFormat format) {
  switch (format) {
    case ReportFormat::Json: {
      json out;
      out["bleu"] = bleu;
      return out.dump() + "\n";
    }
    case ReportFormat::Csv:
      return "bleu\n" + csv6(bleu) + "\n";
    case ReportFormat::Text:
    default:
      return "BLEU " + raw3(bleu) + "  (" + pct1(bleu) + ")\n";
  }
}

std::string render_cosine(const CosineReport &report, ReportFormat format) {
  switch (format) {
    case ReportFormat::Json: {
      json out;
      out["mean"] = report.mean;
      out["stdev"] = report.stdev;
      out["count"] = report.count;
      return out.dump() + "\n";
    }
    case ReportFormat::Csv: {
      std::ostringstream out;
      out << "mean,stdev,count\n"
          << csv6(report.mean) << ',' << csv6(report.stdev) << ',' << report.count
          << '\n';
      return out.str();
    }
    case ReportFormat::Text:
    default: {
      std::ostringstream out;
      out << "cosine mean  " << raw3(report.mean) << "  (" << pct1(report.mean)
          << ")\n"
          << "cosine stdev " << raw3(report.stdev) << '\n'
          << "sentences    " << report.count << '\n';
      return out.str();
    }
  }
}

}  // namespace xamr
