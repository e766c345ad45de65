// Command-line front end: 2-rank queries for single fields, range
// enumeration, shape classification, and self-verification.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or domain error,
// 3 internal error.

#include <atomic>
#include <deque>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "q4rank/corpus.hpp"
#include "q4rank/output.hpp"
#include "q4rank/rank.hpp"
#include "q4rank/sweep.hpp"

namespace {

using namespace q4rank;

enum class EnginePath { Both, Generic, Closed };

EnginePath parse_path(const std::string& s) {
  if (s == "both") return EnginePath::Both;
  if (s == "generic") return EnginePath::Generic;
  if (s == "closed") return EnginePath::Closed;
  throw input_error(errc::bad_argument, "unknown --path value: " + s);
}

OutputRow compute_row(const BaseField& k, const Int& n, EnginePath path) {
  const QuarticField K = make_quarticfield(n, k);
  switch (path) {
    case EnginePath::Generic:
      return make_output_row(K, rank_generic(K));
    case EnginePath::Closed:
      return make_output_row(K, rank_closed_form(K));
    case EnginePath::Both:
      break;
  }
  const RankResult generic = rank_generic(K);
  const RankResult closed = rank_closed_form(K);
  if (generic.rank != closed.rank) {
    throw std::logic_error("rank paths disagree for n = " + n.get_str() +
                           ", l = " + k.l.get_str() + ": generic " +
                           std::to_string(generic.rank) + ", closed " +
                           std::to_string(closed.rank) + " (" +
                           closed.case_id + ")");
  }
  return make_output_row(K, generic);
}

struct CommonOpts {
  std::string format = "csv";
  bool quiet = false;
};

void emit_row(const OutputRow& row, const CommonOpts& opts) {
  if (opts.format == "json") {
    std::cout << to_json(row) << "\n";
  } else {
    std::cout << to_csv(row) << "\n";
  }
}

void emit_header(const CommonOpts& opts) {
  if (opts.format == "csv" && !opts.quiet) std::cout << kCsvHeader << "\n";
}

// ---------------------------------------------------------------- rank
int cmd_rank(const std::string& l_str, const std::string& n_str,
             const std::string& path_str, const CommonOpts& opts) {
  const BaseField k = make_basefield(Int(l_str));
  const OutputRow row = compute_row(k, Int(n_str), parse_path(path_str));
  emit_header(opts);
  emit_row(row, opts);
  return 0;
}

// ----------------------------------------------------------- enumerate
int cmd_enumerate(const std::string& l_str, long n_max, int rank_filter,
                  const std::string& path_str, unsigned jobs,
                  const CommonOpts& opts) {
  const BaseField k = make_basefield(Int(l_str));
  const EnginePath path = parse_path(path_str);
  const std::vector<long> ns = admissible_n(n_max, k.l);

  emit_header(opts);
  const std::size_t chunk = 256;
  const std::size_t nchunks = (ns.size() + chunk - 1) / chunk;
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());

  auto work = [&](std::size_t ci) {
    std::vector<OutputRow> rows;
    const std::size_t lo = ci * chunk;
    const std::size_t hi = std::min(ns.size(), lo + chunk);
    for (std::size_t i = lo; i < hi; ++i) {
      OutputRow row = compute_row(k, Int(ns[i]), path);
      if (rank_filter < 0 || row.rank == rank_filter) {
        rows.push_back(std::move(row));
      }
    }
    return rows;
  };

  // Rows are computed concurrently per chunk but emitted in ascending n.
  std::deque<std::future<std::vector<OutputRow>>> inflight;
  std::size_t next = 0;
  auto launch = [&] {
    if (next < nchunks) {
      inflight.push_back(std::async(std::launch::async, work, next));
      ++next;
    }
  };
  for (unsigned i = 0; i < jobs; ++i) launch();
  while (!inflight.empty()) {
    const std::vector<OutputRow> rows = inflight.front().get();
    inflight.pop_front();
    launch();
    for (const OutputRow& row : rows) emit_row(row, opts);
  }
  return 0;
}

// ------------------------------------------------------------ classify
int cmd_classify(const std::string& l_str, int rank, const CommonOpts& opts) {
  const BaseField k = make_basefield(Int(l_str));
  const std::vector<ShapeDescriptor> ds = classify_shapes(k, rank);
  if (opts.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const ShapeDescriptor& d : ds) {
      nlohmann::json j;
      j["id"] = d.id;
      j["rank"] = d.rank;
      j["delta"] = d.delta;  // 0 = either
      j["num_p"] = d.num_p;
      j["num_q"] = d.num_q;
      j["form"] = d.form;
      j["conditions"] = d.conditions;
      arr.push_back(std::move(j));
    }
    std::cout << arr.dump(2) << "\n";
  } else {
    if (!opts.quiet) {
      std::cout << "shapes with 2-rank " << rank << " over l = " << l_str
                << " (" << ds.size() << "):\n";
    }
    for (const ShapeDescriptor& d : ds) {
      std::cout << d.id << ": " << d.form;
      if (d.conditions != "none") std::cout << " with " << d.conditions;
      std::cout << "\n";
    }
  }
  return 0;
}

// -------------------------------------------------------------- verify
int cmd_verify(const std::string& l_str, long sweep_max,
               const std::string& only, const CommonOpts& opts) {
  bool ok = true;

  if (only != "sweep") {
    std::vector<CorpusEntry> entries = load_corpus();
    if (!l_str.empty()) {
      const Int l(l_str);
      std::erase_if(entries, [&](const CorpusEntry& e) { return e.l != l; });
    }
    const CorpusReport report = verify_corpus(entries);
    for (const CorpusReport::Line& line : report.lines) {
      if (!line.ok) {
        std::cout << "FAIL corpus " << line.entry.source << " n="
                  << line.entry.n().get_str() << " l="
                  << line.entry.l.get_str() << ": expected "
                  << line.entry.expected_rank << ", generic "
                  << line.generic_rank << ", closed " << line.closed_rank
                  << " (" << line.case_id << ")\n";
      }
    }
    if (!opts.quiet || !report.all_ok()) {
      std::cout << "corpus: " << report.lines.size() << " entries, "
                << (report.lines.size() - report.failures()) << " ok\n";
    }
    ok = ok && report.all_ok();
  }

  if (only != "corpus" && sweep_max > 0) {
    std::vector<Int> ls;
    if (!l_str.empty()) {
      ls.emplace_back(l_str);
    } else {
      for (long l : {2L, 17L, 41L, 73L, 89L, 97L, 113L, 137L}) {
        ls.emplace_back(l);
      }
    }
    for (const Int& l : ls) {
      const BaseField k = make_basefield(l);
      std::vector<std::vector<ShapeDescriptor>> byrank;
      for (int r = 0; r <= 3; ++r) byrank.push_back(classify_shapes(k, r));

      long dual_bad = 0, classify_bad = 0, count = 0;
      for (long n : admissible_n(sweep_max, l)) {
        const QuarticField K = make_quarticfield(Int(n), k);
        const RankResult generic = rank_generic(K);
        const RankResult closed = rank_closed_form(K);
        ++count;
        if (generic.rank != closed.rank) {
          ++dual_bad;
          std::cout << "FAIL dual-path l=" << l.get_str() << " n=" << n
                    << ": generic " << generic.rank << ", closed "
                    << closed.rank << " (" << closed.case_id << ")\n";
        }
        for (int r = 0; r <= 3; ++r) {
          bool matched = false;
          for (const ShapeDescriptor& d : byrank[r]) {
            if (match_shape(K, d)) {
              matched = true;
              break;
            }
          }
          if (matched != (generic.rank == r)) {
            ++classify_bad;
            std::cout << "FAIL classify l=" << l.get_str() << " n=" << n
                      << ": rank " << generic.rank << " but descriptor set "
                      << r << (matched ? " matches" : " does not match")
                      << "\n";
          }
        }
      }
      if (!opts.quiet || dual_bad || classify_bad) {
        std::cout << "sweep l=" << l.get_str() << " (n <= " << sweep_max
                  << "): " << count << " fields, dual-path "
                  << (dual_bad ? "FAIL" : "ok") << ", classification "
                  << (classify_bad ? "FAIL" : "ok") << "\n";
      }
      ok = ok && dual_bad == 0 && classify_bad == 0;
    }
  }

  std::cout << (ok ? "VERIFY: PASS" : "VERIFY: FAIL") << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2-rank of the class group of real cyclic quartic fields "
               "Q(sqrt(n*eps0*sqrt(l)))"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string l_str, n_str, path_str = "both", only = "all";
  long n_max = 0, sweep_max = 2000;
  int rank = -1;
  unsigned jobs = 0;

  auto add_common = [&](CLI::App* cmd, bool with_format = true) {
    if (with_format) {
      cmd->add_option("--format", opts.format, "Output format")
          ->check(CLI::IsMember({"csv", "json"}));
    }
    cmd->add_flag("--quiet", opts.quiet, "Suppress headers and summaries");
  };

  CLI::App* rank_cmd =
      app.add_subcommand("rank", "2-rank of a single field (n, l)");
  rank_cmd->add_option("--l", l_str, "l = 2 or a prime = 1 (mod 8)")
      ->required();
  rank_cmd->add_option("--n", n_str, "squarefree n >= 1 coprime to l")
      ->required();
  rank_cmd->add_option("--path", path_str, "Engine: generic, closed, or both")
      ->check(CLI::IsMember({"both", "generic", "closed"}));
  add_common(rank_cmd);

  CLI::App* enum_cmd = app.add_subcommand(
      "enumerate", "Rank table for all admissible n up to a bound");
  enum_cmd->add_option("--l", l_str)->required();
  enum_cmd->add_option("--n-max", n_max, "Upper bound for n")->required();
  enum_cmd->add_option("--rank", rank, "Keep only rows of this rank");
  enum_cmd->add_option("--path", path_str)
      ->check(CLI::IsMember({"both", "generic", "closed"}));
  enum_cmd->add_option("--jobs", jobs, "Worker threads (0 = all cores)");
  add_common(enum_cmd);

  CLI::App* classify_cmd = app.add_subcommand(
      "classify", "Enumerate the shapes of n with a given 2-rank");
  classify_cmd->add_option("--l", l_str)->required();
  classify_cmd->add_option("--rank", rank, "Target rank, 0..3")->required();
  add_common(classify_cmd);

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "Run the regression corpus and the self-check sweeps");
  verify_cmd->add_option("--l", l_str, "Restrict to one l");
  verify_cmd->add_option("--sweep-max", sweep_max,
                         "Sweep bound (0 = corpus only)");
  verify_cmd->add_option("--only", only, "Run only one suite")
      ->check(CLI::IsMember({"all", "corpus", "sweep"}));
  add_common(verify_cmd, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (rank_cmd->parsed()) return cmd_rank(l_str, n_str, path_str, opts);
    if (enum_cmd->parsed()) {
      return cmd_enumerate(l_str, n_max, rank, path_str, jobs, opts);
    }
    if (classify_cmd->parsed()) return cmd_classify(l_str, rank, opts);
    if (verify_cmd->parsed()) {
      return cmd_verify(l_str, sweep_max, only, opts);
    }
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
