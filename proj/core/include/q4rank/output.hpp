#pragma once

#include <string>

#include "q4rank/quarticfield.hpp"
#include "q4rank/rank.hpp"

namespace q4rank {

/// One result row, as printed by the CLI.
struct OutputRow {
  Int n;
  std::string n_factors;  // '*'-separated, "1" for n = 1
  Int l;
  int mu = 0;
  int r_star = 0;
  int rank = 0;
  std::string case_id;
  Int conductor;

  bool operator==(const OutputRow&) const = default;
};

inline constexpr const char* kCsvHeader =
    "n,n_factors,l,mu,r_star,rank,case_id,conductor";

OutputRow make_output_row(const QuarticField& K, const RankResult& r);

std::string to_csv(const OutputRow& row);
OutputRow parse_csv_row(const std::string& line);

/// One JSON object per row (JSON-lines).  n, l and conductor are emitted as
/// decimal strings so arbitrarily large values survive any JSON parser.
std::string to_json(const OutputRow& row);
OutputRow parse_json_row(const std::string& line);

}  // namespace q4rank
