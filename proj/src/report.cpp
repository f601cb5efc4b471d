#include "nsgate/report.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <sstream>

namespace nsgate {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), pattern, v);
  return buf;
}

std::string sig6(double v) { return fmt("%.6g", v); }
std::string dec4(double v) { return fmt("%.4f", v); }
std::string csv_num(double v) { return fmt("%.10g", v); }

double residual_norm(const GateSolution& s) {
  return std::hypot(s.residuals.first, s.residuals.second);
}

std::string csv_header() {
  return "sequence,eta1,eta2,eta3,eta4,P,residual_norm,solution_class\n";
}

std::string csv_row(const std::string& sequence,
                    const std::vector<double>& etas,
                    const GateSolution* sol, int classes) {
  std::string row = "\"" + sequence + "\"";
  for (std::size_t i = 0; i < 4; ++i) {
    row += ',';
    if (i < etas.size()) row += csv_num(etas[i]);
  }
  row += ',';
  if (sol) row += csv_num(sol->probability);
  row += ',';
  if (sol) row += csv_num(residual_norm(*sol));
  row += ',' + std::to_string(classes) + '\n';
  return row;
}

ordered_json solution_json(const GateSolution& s) {
  ordered_json j;
  j["sequence"] = s.sequence.str();
  j["amplitudes"] = s.amplitudes;
  j["etas"] = s.etas;
  j["probability"] = s.probability;
  j["residuals"] = {s.residuals.first, s.residuals.second};
  j["residual_norm"] = residual_norm(s);
  return j;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

ReportFormat parse_format(const std::string& name) {
  if (name == "text") return ReportFormat::kText;
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "json") return ReportFormat::kJson;
  throw std::invalid_argument("unknown format '" + name +
                              "' (expected text, csv, or json)");
}

std::string render_solutions(const SequenceSpec& seq,
                             const std::vector<GateSolution>& solutions,
                             ReportFormat format) {
  const int classes = static_cast<int>(solutions.size());
  switch (format) {
    case ReportFormat::kCsv: {
      std::string out = csv_header();
      if (solutions.empty()) {
        out += csv_row(seq.str(), {}, nullptr, 0);
      }
      for (const auto& s : solutions) {
        out += csv_row(seq.str(), s.etas, &s, classes);
      }
      return out;
    }
    case ReportFormat::kJson: {
      ordered_json j;
      j["command"] = "solve";
      j["sequence"] = seq.str();
      j["solution_classes"] = classes;
      j["solutions"] = ordered_json::array();
      for (const auto& s : solutions) j["solutions"].push_back(solution_json(s));
      return dump(j);
    }
    case ReportFormat::kText: {
      std::ostringstream os;
      os << "sequence " << seq.str() << "\n";
      if (solutions.empty()) {
        os << "no NS solution\n";
        return os.str();
      }
      os << classes << " solution class" << (classes == 1 ? "" : "es") << "\n";
      for (const auto& s : solutions) {
        os << "  P=" << sig6(s.probability) << "  eta=(";
        for (std::size_t i = 0; i < s.etas.size(); ++i) {
          if (i) os << ", ";
          os << sig6(s.etas[i]);
        }
        os << ")  t=(";
        for (std::size_t i = 0; i < s.amplitudes.size(); ++i) {
          if (i) os << ", ";
          os << sig6(s.amplitudes[i]);
        }
        os << ")  residual=" << fmt("%.1e", residual_norm(s)) << "\n";
      }
      return os.str();
    }
  }
  return {};
}

std::string render_scan(const std::vector<ScanEntry>& entries, int max_k,
                        int length, ReportFormat format) {
  switch (format) {
    case ReportFormat::kCsv: {
      std::string out = csv_header();
      for (const auto& e : entries) {
        const GateSolution* best = e.best();
        out += csv_row(e.sequence.str(), best ? best->etas : std::vector<double>{},
                       best, static_cast<int>(e.solutions.size()));
      }
      return out;
    }
    case ReportFormat::kJson: {
      ordered_json j;
      j["command"] = "scan";
      j["length"] = length;
      j["max_k"] = max_k;
      j["entries"] = ordered_json::array();
      for (const auto& e : entries) {
        ordered_json entry;
        entry["sequence"] = e.sequence.str();
        entry["solution_classes"] = static_cast<int>(e.solutions.size());
        entry["best"] = e.best() ? solution_json(*e.best()) : ordered_json();
        j["entries"].push_back(entry);
      }
      return dump(j);
    }
    case ReportFormat::kText: {
      std::ostringstream os;
      os << "scan length=" << length << " max_k=" << max_k << "\n";
      for (const auto& e : entries) {
        char seq_field[32];
        std::snprintf(seq_field, sizeof(seq_field), "%-24s",
                      e.sequence.str().c_str());
        os << "  " << seq_field;
        if (const GateSolution* best = e.best()) {
          os << "P=" << sig6(best->probability) << "  eta=(";
          for (std::size_t i = 0; i < best->etas.size(); ++i) {
            if (i) os << ", ";
            os << sig6(best->etas[i]);
          }
          os << ")  classes=" << e.solutions.size();
        } else {
          os << "no NS solution";
        }
        os << "\n";
      }
      return os.str();
    }
  }
  return {};
}

std::string render_table1(const std::vector<Table1Entry>& entries,
                          ReportFormat format) {
  switch (format) {
    case ReportFormat::kCsv: {
      std::string out = csv_header();
      for (const auto& e : entries) {
        out += csv_row(e.solution.sequence.str(), e.solution.etas, &e.solution,
                       e.solution_classes);
      }
      return out;
    }
    case ReportFormat::kJson: {
      ordered_json j;
      j["command"] = "table1";
      j["rows"] = ordered_json::array();
      for (const auto& e : entries) {
        ordered_json row = solution_json(e.solution);
        row["eta1"] = e.eta1;
        row["solution_classes"] = e.solution_classes;
        if (e.reference) {
          row["reference"] = {{"eta2", e.reference->eta2},
                              {"eta3", e.reference->eta3},
                              {"p", e.reference->p}};
          row["delta"] = {{"eta2", e.solution.etas[1] - e.reference->eta2},
                          {"eta3", e.solution.etas[2] - e.reference->eta3},
                          {"p", e.solution.probability - e.reference->p}};
        }
        j["rows"].push_back(row);
      }
      return dump(j);
    }
    case ReportFormat::kText: {
      std::ostringstream os;
      os << "three-splitter corrections (first element (1,0) frozen at eta1)\n";
      os << "sequence                 eta1    eta2    eta3    P       "
            "residual  classes  delta(eta2,eta3,P)\n";
      for (const auto& e : entries) {
        char seq_field[32];
        std::snprintf(seq_field, sizeof(seq_field), "%-24s",
                      e.solution.sequence.str().c_str());
        os << seq_field << " " << dec4(e.eta1) << "  "
           << dec4(e.solution.etas[1]) << "  " << dec4(e.solution.etas[2])
           << "  " << dec4(e.solution.probability) << "  "
           << fmt("%.1e", residual_norm(e.solution)) << "   "
           << e.solution_classes;
        if (e.reference) {
          os << "        (" << fmt("%+.4f", e.solution.etas[1] - e.reference->eta2)
             << ", " << fmt("%+.4f", e.solution.etas[2] - e.reference->eta3)
             << ", " << fmt("%+.4f",
                            e.solution.probability - e.reference->p)
             << ")";
        }
        os << "\n";
      }
      return os.str();
    }
  }
  return {};
}

std::string render_feedforward(const std::vector<FeedForwardReport>& reports,
                               ReportFormat format) {
  switch (format) {
    case ReportFormat::kCsv: {
      std::string out = csv_header();
      for (const auto& r : reports) {
        out += csv_row(r.main.sequence.str(), r.main.etas, &r.main,
                       r.main_classes);
        if (r.correction) {
          out += csv_row(r.correction->sequence.str(), r.correction->etas,
                         &*r.correction, r.correction_classes);
        }
      }
      return out;
    }
    case ReportFormat::kJson: {
      ordered_json j;
      j["command"] = "feedforward";
      j["reports"] = ordered_json::array();
      for (const auto& r : reports) {
        ordered_json rep;
        rep["main"] = solution_json(r.main);
        rep["main_classes"] = r.main_classes;
        rep["correction"] =
            r.correction ? solution_json(*r.correction) : ordered_json();
        rep["correction_classes"] = r.correction_classes;
        rep["total"] = r.total;
        j["reports"].push_back(rep);
      }
      return dump(j);
    }
    case ReportFormat::kText: {
      std::ostringstream os;
      for (const auto& r : reports) {
        os << "main " << r.main.sequence.str() << " eta1="
           << dec4(r.main.etas[0]) << " P=" << dec4(r.main.probability)
           << " residual=" << fmt("%.1e", residual_norm(r.main))
           << " classes=" << r.main_classes << "\n";
        if (r.correction) {
          os << "  correction " << r.correction->sequence.str() << " eta=(";
          for (std::size_t i = 0; i < r.correction->etas.size(); ++i) {
            if (i) os << ", ";
            os << dec4(r.correction->etas[i]);
          }
          os << ") P=" << dec4(r.correction->probability)
             << " residual=" << fmt("%.1e", residual_norm(*r.correction))
             << " classes=" << r.correction_classes << "\n";
        } else {
          os << "  correction none\n";
        }
        os << "  total (derived) " << dec4(r.total) << "\n";
      }
      return os.str();
    }
  }
  return {};
}

std::string render_verify(const SuiteResult& closed_forms,
                          const SuiteResult& unitarity,
                          const SuiteResult& amplitudes) {
  std::ostringstream os;
  const auto line = [&os](const char* name, const SuiteResult& r) {
    os << name << ": " << r.passed << " passed, " << r.failed << " failed\n";
    for (const auto& f : r.failures) os << "  FAIL " << f << "\n";
  };
  line("closed-form vs oracle", closed_forms);
  line("unitarity", unitarity);
  line("amplitude cross-check", amplitudes);
  os << (closed_forms.ok() && unitarity.ok() && amplitudes.ok() ? "OK"
                                                                : "FAILURES")
     << "\n";
  return os.str();
}

}  // namespace nsgate
