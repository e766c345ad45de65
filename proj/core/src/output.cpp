#include "q4rank/output.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "q4rank/errors.hpp"

namespace q4rank {

OutputRow make_output_row(const QuarticField& K, const RankResult& r) {
  OutputRow row;
  row.n = K.n;
  std::ostringstream fs;
  if (K.shape.delta == 2) fs << "2";
  bool first = K.shape.delta != 2;
  auto append = [&](const std::vector<Int>& ps) {
    for (const Int& p : ps) {
      if (!first) fs << "*";
      first = false;
      fs << p.get_str();
    }
  };
  // ascending: merge the four shape lists
  std::vector<Int> odd;
  odd.insert(odd.end(), K.shape.ones_split.begin(), K.shape.ones_split.end());
  odd.insert(odd.end(), K.shape.ones_inert.begin(), K.shape.ones_inert.end());
  odd.insert(odd.end(), K.shape.threes_split.begin(),
             K.shape.threes_split.end());
  odd.insert(odd.end(), K.shape.threes_inert.begin(),
             K.shape.threes_inert.end());
  std::sort(odd.begin(), odd.end());
  append(odd);
  row.n_factors = (K.n == 1) ? "1" : fs.str();
  row.l = K.k.l;
  row.mu = r.mu;
  row.r_star = r.r_star;
  row.rank = r.rank;
  row.case_id = r.case_id;
  row.conductor = K.conductor;
  return row;
}

std::string to_csv(const OutputRow& row) {
  std::ostringstream out;
  out << row.n.get_str() << ',' << row.n_factors << ',' << row.l.get_str()
      << ',' << row.mu << ',' << row.r_star << ',' << row.rank << ','
      << row.case_id << ',' << row.conductor.get_str();
  return out.str();
}

OutputRow parse_csv_row(const std::string& line) {
  std::vector<std::string> cols;
  std::istringstream in(line);
  std::string col;
  while (std::getline(in, col, ',')) cols.push_back(col);
  if (cols.size() != 8) {
    throw input_error(errc::bad_argument,
                      "CSV row must have 8 columns: " + line);
  }
  OutputRow row;
  row.n = Int(cols[0]);
  row.n_factors = cols[1];
  row.l = Int(cols[2]);
  row.mu = std::stoi(cols[3]);
  row.r_star = std::stoi(cols[4]);
  row.rank = std::stoi(cols[5]);
  row.case_id = cols[6];
  row.conductor = Int(cols[7]);
  return row;
}

std::string to_json(const OutputRow& row) {
  nlohmann::json j;
  j["n"] = row.n.get_str();
  j["n_factors"] = row.n_factors;
  j["l"] = row.l.get_str();
  j["mu"] = row.mu;
  j["r_star"] = row.r_star;
  j["rank"] = row.rank;
  j["case_id"] = row.case_id;
  j["conductor"] = row.conductor.get_str();
  return j.dump();
}

OutputRow parse_json_row(const std::string& line) {
  const nlohmann::json j = nlohmann::json::parse(line);
  OutputRow row;
  row.n = Int(j.at("n").get<std::string>());
  row.n_factors = j.at("n_factors").get<std::string>();
  row.l = Int(j.at("l").get<std::string>());
  row.mu = j.at("mu").get<int>();
  row.r_star = j.at("r_star").get<int>();
  row.rank = j.at("rank").get<int>();
  row.case_id = j.at("case_id").get<std::string>();
  row.conductor = Int(j.at("conductor").get<std::string>());
  return row;
}

}  // namespace q4rank
