#include "edgesched/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

namespace edgesched {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void append_numbers(std::string& out, const std::vector<double>& xs) {
  out += '[';
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += fmt(xs[i]);
  }
  out += ']';
}

double want_number(const nlohmann::json& j, const char* key) {
  if (!j.is_number()) throw IoError(std::string("instance schema: '") + key + "' must be a number");
  return j.get<double>();
}

std::vector<double> want_array(const nlohmann::json& j, const char* key) {
  if (!j.is_array()) throw IoError(std::string("instance schema: '") + key + "' must be an array");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(want_number(e, key));
  return out;
}

}  // namespace

std::string instance_to_json(const Instance& inst) {
  std::string out = "{\n";
  out += "  \"m\": " + std::to_string(inst.m) + ",\n";
  out += "  \"n\": " + std::to_string(inst.n) + ",\n";
  out += "  \"accuracies\": ";
  append_numbers(out, inst.accuracies);
  out += ",\n  \"times\": [\n";
  for (size_t i = 0; i < inst.times.size(); ++i) {
    out += "    ";
    append_numbers(out, inst.times[i]);
    out += i + 1 < inst.times.size() ? ",\n" : "\n";
  }
  out += "  ]";
  if (inst.comm_times) {
    out += ",\n  \"comm_times\": ";
    append_numbers(out, *inst.comm_times);
  }
  out += ",\n  \"T\": " + fmt(inst.deadline) + "\n}\n";
  return out;
}

Instance instance_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("instance parse: ") + e.what());
  }
  if (!j.is_object()) throw IoError("instance schema: top level must be an object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "m" && key != "n" && key != "accuracies" && key != "times" &&
        key != "comm_times" && key != "T") {
      throw IoError("instance schema: unknown key '" + key + "'");
    }
  }
  for (const char* key : {"m", "n", "accuracies", "times", "T"}) {
    if (!j.contains(key)) throw IoError(std::string("instance schema: missing key '") + key + "'");
  }
  if (!j["m"].is_number_integer() || !j["n"].is_number_integer()) {
    throw IoError("instance schema: 'm' and 'n' must be integers");
  }
  Instance inst;
  inst.m = j["m"].get<int>();
  inst.n = j["n"].get<int>();
  inst.accuracies = want_array(j["accuracies"], "accuracies");
  if (!j["times"].is_array()) throw IoError("instance schema: 'times' must be an array of rows");
  for (const auto& row : j["times"]) inst.times.push_back(want_array(row, "times"));
  if (j.contains("comm_times")) inst.comm_times = want_array(j["comm_times"], "comm_times");
  inst.deadline = want_number(j["T"], "T");
  return validate(std::move(inst));
}

Instance read_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open instance file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return instance_from_json(ss.str());
}

void write_instance(const Instance& inst, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write instance file: " + path);
  out << instance_to_json(inst);
  if (!out) throw IoError("short write: " + path);
}

RunRecord make_record(const Instance& inst, const SolveReport& rep,
                      std::optional<std::uint64_t> seed) {
  RunRecord rec;
  rec.algorithm = rep.algorithm;
  rec.n = inst.n;
  rec.m = inst.m;
  rec.deadline = inst.deadline;
  rec.total_accuracy = rep.metrics.total_accuracy;
  rec.lp_objective = rep.lp_objective;
  rec.makespan = rep.metrics.makespan;
  rec.ed_load = rep.metrics.ed_load;
  rec.es_load = rep.metrics.es_load;
  rec.violation_pct = rep.metrics.violation_pct;
  rec.fractional_jobs = rep.fractional_job_count;
  rec.runtime_ms = rep.runtime_ms;
  rec.seed = seed;
  return rec;
}

std::string csv_header() {
  return "algorithm,n,m,T,total_accuracy,lp_objective,makespan,ed_load,es_load,"
         "violation_pct,fractional_jobs,runtime_ms,seed";
}

std::string to_csv_row(const RunRecord& rec) {
  std::string out = rec.algorithm;
  out += ',' + std::to_string(rec.n);
  out += ',' + std::to_string(rec.m);
  out += ',' + fmt(rec.deadline);
  out += ',' + fmt(rec.total_accuracy);
  out += ',';
  if (rec.lp_objective) out += fmt(*rec.lp_objective);
  out += ',' + fmt(rec.makespan);
  out += ',' + fmt(rec.ed_load);
  out += ',' + fmt(rec.es_load);
  out += ',' + fmt(rec.violation_pct);
  out += ',' + std::to_string(rec.fractional_jobs);
  out += ',' + fmt(rec.runtime_ms);
  out += ',';
  if (rec.seed) out += std::to_string(*rec.seed);
  return out;
}

RunRecord parse_csv_row(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  fields.push_back(cur);
  if (fields.size() != 13) throw IoError("csv row: expected 13 fields");
  auto num = [&](size_t i) -> double {
    try {
      size_t used = 0;
      const double v = std::stod(fields[i], &used);
      if (used != fields[i].size()) throw IoError("csv row: trailing characters in number");
      return v;
    } catch (const std::invalid_argument&) {
      throw IoError("csv row: bad number in field " + std::to_string(i));
    }
  };
  RunRecord rec;
  rec.algorithm = fields[0];
  rec.n = static_cast<int>(num(1));
  rec.m = static_cast<int>(num(2));
  rec.deadline = num(3);
  rec.total_accuracy = num(4);
  if (!fields[5].empty()) rec.lp_objective = num(5);
  rec.makespan = num(6);
  rec.ed_load = num(7);
  rec.es_load = num(8);
  rec.violation_pct = num(9);
  rec.fractional_jobs = static_cast<int>(num(10));
  rec.runtime_ms = num(11);
  if (!fields[12].empty()) rec.seed = std::stoull(fields[12]);
  return rec;
}

void append_csv(const std::string& path, const std::vector<RunRecord>& records) {
  namespace fs = std::filesystem;
  bool need_header = true;
  std::error_code ec;
  if (fs::exists(path, ec) && fs::file_size(path, ec) > 0 && !ec) need_header = false;
  std::ofstream out(path, std::ios::binary | std::ios::app);
  if (!out) throw IoError("cannot open csv for append: " + path);
  if (need_header) out << csv_header() << '\n';
  for (const auto& rec : records) out << to_csv_row(rec) << '\n';
  if (!out) throw IoError("short write: " + path);
}

}  // namespace edgesched
