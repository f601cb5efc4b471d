#pragma once

#include <string>

#include "nsgate/feedforward.hpp"
#include "nsgate/verify.hpp"

namespace nsgate {

enum class ReportFormat { kText, kCsv, kJson };

ReportFormat parse_format(const std::string& name);

// Renderers return the full report as one deterministic string: fixed float
// formatting in text/csv (6 significant digits, 4-decimal table values),
// full round-trip precision in json.  CSV columns are fixed as
// sequence, eta1..eta4 (empty when unused), P, residual_norm, solution_class.
std::string render_solutions(const SequenceSpec& seq,
                             const std::vector<GateSolution>& solutions,
                             ReportFormat format);

std::string render_scan(const std::vector<ScanEntry>& entries, int max_k,
                        int length, ReportFormat format);

std::string render_table1(const std::vector<Table1Entry>& entries,
                          ReportFormat format);

std::string render_feedforward(const std::vector<FeedForwardReport>& reports,
                               ReportFormat format);

std::string render_verify(const SuiteResult& closed_forms,
                          const SuiteResult& unitarity,
                          const SuiteResult& amplitudes);

}  // namespace nsgate
