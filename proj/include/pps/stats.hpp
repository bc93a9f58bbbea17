#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pps/errors.hpp"

namespace pps {

/// Mean and sample standard deviation (n - 1 denominator). For fewer than
/// two values the deviation is reported as 0 and `degenerate` is set so the
/// caller can warn.
struct Summary {
    double mean = 0.0;
    double stddev = 0.0;
    bool degenerate = false;
};

Summary summarize(const std::vector<double>& values);

enum class Verdict { ABetter, BBetter, NoDifference };

struct RankSumResult {
    Verdict verdict = Verdict::NoDifference;
    double p_value = 1.0;
    double rank_sum_a = 0.0;
};

/// Two-sided Wilcoxon rank-sum test with midranks for ties, tie-corrected
/// variance, and a continuity-corrected normal approximation. Values are
/// compared smaller-is-better: ABetter means sample a's values are
/// significantly smaller. Requires at least 4 values per sample
/// (ContractError otherwise); two identical samples yield p = 1.
RankSumResult wilcoxon_rank_sum(const std::vector<double>& a, const std::vector<double>& b,
                                double significance = 0.05);

enum class Orientation { SmallerBetter, LargerBetter };

/// Per-(problem, algorithm) cell of a comparison table.
struct TableCell {
    Summary summary;
    enum class Mark { Baseline, Better, Worse, None, Incomplete } mark = Mark::Incomplete;
    double p_value = 1.0;
    int runs = 0;
};

/// Significance-annotated comparison of algorithms against one baseline.
/// sdi[algorithm] counts problems where the baseline was significantly
/// better / not different / significantly worse, skipping incomplete cells.
struct ComparisonTable {
    std::string baseline;
    std::string metric;
    Orientation orientation = Orientation::SmallerBetter;
    double significance = 0.05;
    std::vector<std::string> algorithms;                       ///< baseline first
    std::vector<std::string> problems;
    std::map<std::string, std::map<std::string, TableCell>> cells; ///< problem -> algorithm -> cell
    std::map<std::string, std::array<int, 3>> sdi;             ///< algorithm -> {S, D, I}
};

/// Metric samples per (problem, algorithm) pair, e.g. one value per run.
using MetricRecords = std::map<std::pair<std::string, std::string>, std::vector<double>>;

/// Builds the comparison table for one metric. Pairs with fewer than 4
/// values (or a missing baseline sample) yield incomplete cells that are
/// excluded from the S-D-I tally.
ComparisonTable build_comparison_table(const MetricRecords& records, const std::string& baseline,
                                       const std::string& metric, Orientation orientation,
                                       double significance = 0.05);

/// Machine-readable form: problem,algorithm,mean,std,marker,p_value,runs
/// rows followed by one sdi row per non-baseline algorithm.
std::string table_to_csv(const ComparisonTable& table);

/// Aligned plain-text rendering with one problem per row, one algorithm per
/// column, significance markers beside each mean, and a closing S-D-I row.
std::string table_to_text(const ComparisonTable& table);

} // namespace pps
