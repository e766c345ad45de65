#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "q4rank/integer.hpp"

namespace q4rank {

/// One regression case: a field (n, l) with its known 2-rank.
///
/// quoted_type records the published class group type, e.g. "(2,4,4)", or
/// "h=3" / "h=5" for the odd-class-number cases; only the rank it implies
/// (its component count, or 0) is ever asserted.  source names the matching
/// shape descriptor (see classify_shapes).
struct CorpusEntry {
  std::vector<Int> n_factors;
  Int l;
  int expected_rank = 0;
  std::string quoted_type;
  std::string source;

  Int n() const;
};

/// The built-in regression corpus.
std::vector<CorpusEntry> load_corpus();

/// Reads/writes the serialized form, one entry per line:
///   factors | l | rank | type | source
/// with '*'-separated factors ("1" for n = 1) and '#' comment lines.
std::vector<CorpusEntry> parse_corpus(std::istream& in);
void write_corpus(std::ostream& out, const std::vector<CorpusEntry>& entries);

/// The serialized built-in corpus (exactly what parse_corpus reads).
std::string corpus_text();

struct CorpusReport {
  struct Line {
    CorpusEntry entry;
    int generic_rank = -1;
    int closed_rank = -1;
    std::string case_id;
    bool ok = false;
  };
  std::vector<Line> lines;

  bool all_ok() const;
  int failures() const;
};

/// Runs both rank paths on every entry and compares with the expected rank.
/// Failures are report content, not exceptions.
CorpusReport verify_corpus(const std::vector<CorpusEntry>& entries);

}  // namespace q4rank
