#include "q4rank/corpus.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "q4rank/errors.hpp"
#include "q4rank/rank.hpp"

namespace q4rank {
namespace {

// One line per published example: factors | l | rank | type | source.
// The two odd-class-number families carry "h=<class number>" instead of a
// group type.  Kept byte-identical with core/data/corpus.txt.
const char kCorpusTable[] =
    R"(# 2-rank regression corpus
# factors of n | l | expected 2-rank | class group type or odd class number | shape descriptor
1 | 257 | 0 | h=3 | L1/r0/c1
89 | 41 | 1 | (2) | L1/r1/c1
97 | 89 | 1 | (2) | L1/r1/c1
2 | 1913 | 1 | (2) | L1/r1/c2
83 | 137 | 1 | (2) | L1/r1/c3
2*83 | 97 | 1 | (2) | L1/r1/c3
71*83 | 97 | 1 | (2) | L1/r1/c4
79*83 | 41 | 1 | (2) | L1/r1/c4
89*97 | 41 | 2 | (2,2) | L1/r2/c1
89*97 | 17 | 2 | (2,2) | L1/r2/c1
613 | 17 | 2 | (4,4) | L1/r2/c2
2*997 | 1753 | 2 | (2,2) | L1/r2/c3
2 | 1889 | 2 | (2,4) | L1/r2/c4
79 | 97 | 2 | (2,2) | L1/r2/c5
2*71 | 73 | 2 | (2,4) | L1/r2/c5
47*67 | 17 | 2 | (2,4) | L1/r2/c6
73*79 | 17 | 2 | (2,2) | L1/r2/c7
2*41*79 | 17 | 2 | (2,2) | L1/r2/c7
71*79*97 | 41 | 2 | (2,2) | L1/r2/c8
79*83*97 | 41 | 2 | (2,2) | L1/r2/c8
2*97 | 41 | 3 | (2,2,2) | L1/r3/c1
2*97 | 89 | 3 | (2,4,4) | L1/r3/c1
89*97 | 73 | 3 | (2,4,4) | L1/r3/c2
61*73 | 89 | 3 | (2,2,4) | L1/r3/c2
2*73*97 | 17 | 3 | (2,2,2) | L1/r3/c3
37*41*61 | 89 | 3 | (2,2,2) | L1/r3/c4
73*89*97 | 41 | 3 | (2,2,2) | L1/r3/c4
67*71*83 | 97 | 3 | (2,2,2) | L1/r3/c5
2*59*67*83 | 97 | 3 | (2,2,2) | L1/r3/c5
7*11*23*31 | 17 | 3 | (2,2,2) | L1/r3/c6
2*71*83 | 97 | 3 | (2,2,4) | L1/r3/c7
2*71*83 | 41 | 3 | (2,2,2) | L1/r3/c7
79*89*97 | 41 | 3 | (2,2,2) | L1/r3/c8
2*79*89*97 | 41 | 3 | (2,2,2) | L1/r3/c8
47*61 | 17 | 3 | (2,4,8) | L1/r3/c9
2*47*97 | 17 | 3 | (2,2,2) | L1/r3/c9
61*71*73*79 | 17 | 3 | (2,2,2) | L1/r3/c10
61*67*73*79 | 17 | 3 | (2,2,2) | L1/r3/c10
79*83*97 | 89 | 3 | (2,2,2) | L1/r3/c11
59 | 2 | 0 | h=5 | L2/r0/c2
631 | 2 | 0 | h=5 | L2/r0/c2
61 | 2 | 1 | (2) | L2/r1/c1
89 | 2 | 1 | (2) | L2/r1/c1
59*83 | 2 | 1 | (2) | L2/r1/c2
67*71 | 2 | 1 | (2) | L2/r1/c2
59*61 | 2 | 1 | (2) | L2/r1/c3
47*61 | 2 | 1 | (2) | L2/r1/c3
881 | 2 | 2 | (4,4) | L2/r2/c1
877*997 | 2 | 2 | (2,2) | L2/r2/c2
941*977 | 2 | 2 | (2,2) | L2/r2/c2
47*79 | 2 | 2 | (4,4) | L2/r2/c3
43*67*83 | 2 | 2 | (2,2) | L2/r2/c4
47*67*83 | 2 | 2 | (2,2) | L2/r2/c4
53*61*83 | 2 | 2 | (2,2) | L2/r2/c5
53*61*71 | 2 | 2 | (2,2) | L2/r2/c5
73*83 | 2 | 2 | (2,4) | L2/r2/c6
73*79 | 2 | 2 | (2,2) | L2/r2/c6
43*61*67 | 2 | 2 | (2,2) | L2/r2/c7
59*61*71 | 2 | 2 | (2,2) | L2/r2/c7
769*977 | 2 | 3 | (2,2,4) | L2/r3/c1
797*953 | 2 | 3 | (2,4,4) | L2/r3/c1
37*53*61 | 2 | 3 | (2,2,2) | L2/r3/c2
53*61*89 | 2 | 3 | (2,2,2) | L2/r3/c2
67*71*79 | 2 | 3 | (2,2,4) | L2/r3/c3
43*59*67*83 | 2 | 3 | (2,2,2) | L2/r3/c4
59*67*79*83 | 2 | 3 | (2,2,2) | L2/r3/c4
37*53*61*67 | 2 | 3 | (2,2,2) | L2/r3/c5
37*53*61*71 | 2 | 3 | (2,2,2) | L2/r3/c5
59*61*67*83 | 2 | 3 | (2,2,2) | L2/r3/c6
61*67*71*83 | 2 | 3 | (2,2,2) | L2/r3/c6
53*61*67*83 | 2 | 3 | (2,2,2) | L2/r3/c7
53*61*79*83 | 2 | 3 | (2,2,2) | L2/r3/c7
79*83*97 | 2 | 3 | (2,2,2) | L2/r3/c8
47*61*71 | 2 | 3 | (2,2,4) | L2/r3/c8
61*73*83 | 2 | 3 | (2,2,4) | L2/r3/c9
)";

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::istringstream in(s);
  std::string part;
  while (std::getline(in, part, sep)) parts.push_back(trim(part));
  return parts;
}

// Component count of "(2,4,4)", or 0 for "h=<odd>".
int rank_implied_by_type(const std::string& type) {
  if (type.rfind("h=", 0) == 0) return 0;
  if (type.size() < 2 || type.front() != '(' || type.back() != ')') {
    throw input_error(errc::bad_argument,
                      "corpus: malformed group type '" + type + "'");
  }
  int components = 1;
  for (char ch : type) {
    if (ch == ',') ++components;
  }
  return components;
}

}  // namespace

Int CorpusEntry::n() const {
  Int prod = 1;
  for (const Int& p : n_factors) prod *= p;
  return prod;
}

std::string corpus_text() { return kCorpusTable; }

std::vector<CorpusEntry> parse_corpus(std::istream& in) {
  std::vector<CorpusEntry> entries;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    const std::vector<std::string> cols = split(body, '|');
    if (cols.size() != 5) {
      throw input_error(errc::bad_argument,
                        "corpus line " + std::to_string(lineno) +
                            ": expected 5 '|'-separated columns");
    }
    CorpusEntry e;
    for (const std::string& f : split(cols[0], '*')) {
      Int p(f);
      if (p != 1) e.n_factors.push_back(p);
    }
    e.l = Int(cols[1]);
    e.expected_rank = std::stoi(cols[2]);
    e.quoted_type = cols[3];
    e.source = cols[4];
    if (rank_implied_by_type(e.quoted_type) != e.expected_rank) {
      throw input_error(errc::bad_argument,
                        "corpus line " + std::to_string(lineno) + ": type " +
                            e.quoted_type + " does not imply rank " +
                            cols[2]);
    }
    entries.push_back(std::move(e));
  }
  return entries;
}

void write_corpus(std::ostream& out, const std::vector<CorpusEntry>& entries) {
  for (const CorpusEntry& e : entries) {
    if (e.n_factors.empty()) {
      out << "1";
    } else {
      for (std::size_t i = 0; i < e.n_factors.size(); ++i) {
        if (i > 0) out << "*";
        out << e.n_factors[i].get_str();
      }
    }
    out << " | " << e.l.get_str() << " | " << e.expected_rank << " | "
        << e.quoted_type << " | " << e.source << "\n";
  }
}

std::vector<CorpusEntry> load_corpus() {
  std::istringstream in(kCorpusTable);
  return parse_corpus(in);
}

bool CorpusReport::all_ok() const { return failures() == 0; }

int CorpusReport::failures() const {
  int n = 0;
  for (const Line& line : lines) {
    if (!line.ok) ++n;
  }
  return n;
}

CorpusReport verify_corpus(const std::vector<CorpusEntry>& entries) {
  CorpusReport report;
  std::map<Int, BaseField> fields;
  for (const CorpusEntry& e : entries) {
    auto it = fields.find(e.l);
    if (it == fields.end()) {
      it = fields.emplace(e.l, make_basefield(e.l)).first;
    }
    CorpusReport::Line line;
    line.entry = e;
    const QuarticField K = make_quarticfield(e.n(), it->second);
    const RankResult generic = rank_generic(K);
    const RankResult closed = rank_closed_form(K);
    line.generic_rank = generic.rank;
    line.closed_rank = closed.rank;
    line.case_id = closed.case_id;
    line.ok = generic.rank == e.expected_rank &&
              closed.rank == e.expected_rank;
    report.lines.push_back(std::move(line));
  }
  return report;
}

}  // namespace q4rank
