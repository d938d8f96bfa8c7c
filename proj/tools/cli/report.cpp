#include "cli/report.hpp"

#include <sstream>

namespace mrb::cli {

using json = nlohmann::ordered_json;

json to_json(const Vec& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(s.str());
  return out;
}

json to_json(const Matrix& m) {
  json out = json::array();
  for (int r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

Report::Report(std::string command, std::vector<std::string> basis)
    : command_(std::move(command)), basis_(std::move(basis)) {}

void Report::check(const std::string& name, const Verdict& v) {
  json c = {{"name", name}, {"ok", v.ok}};
  if (!v.ok) {
    json cx;
    cx["where"] = v.where;
    json tuple = json::array(), names = json::array();
    for (int i : v.tuple) {
      tuple.push_back(i + 1);
      names.push_back(i < static_cast<int>(basis_.size()) ? basis_[i] : "e" + std::to_string(i + 1));
    }
    cx["tuple"] = tuple;
    cx["basis"] = names;
    cx["residual"] = cli::to_json(v.residual);
    c["counterexample"] = cx;
  }
  checks_.push_back(std::move(c));
}

void Report::check(const std::string& name, bool ok, const std::string& detail) {
  json c = {{"name", name}, {"ok", ok}};
  if (!detail.empty()) c["detail"] = detail;
  checks_.push_back(std::move(c));
}

bool Report::ok() const {
  for (const auto& c : checks_)
    if (!c["ok"].get<bool>()) return false;
  return true;
}

json Report::to_json() const {
  json j;
  j["schema"] = kReportSchema;
  j["command"] = command_;
  j["status"] = ok() ? "pass" : "fail";
  j["checks"] = checks_;
  j["data"] = data_;
  return j;
}

std::string Report::render(Format f) const {
  if (f == Format::json) return to_json().dump(2) + "\n";
  std::ostringstream out;
  out << command_ << ": " << (ok() ? "PASS" : "FAIL") << "\n";
  for (const auto& c : checks_) {
    out << "  " << (c["ok"].get<bool>() ? "pass " : "FAIL ") << c["name"].get<std::string>();
    if (c.contains("detail")) out << " (" << c["detail"].get<std::string>() << ")";
    if (c.contains("counterexample")) {
      const json& cx = c["counterexample"];
      out << "\n      at";
      if (!cx["where"].get<std::string>().empty()) out << " " << cx["where"].get<std::string>();
      out << " (";
      for (size_t i = 0; i < cx["basis"].size(); ++i) out << (i ? ", " : "") << cx["basis"][i].get<std::string>();
      out << ") residual [";
      for (size_t i = 0; i < cx["residual"].size(); ++i)
        out << (i ? ", " : "") << cx["residual"][i].get<std::string>();
      out << "]";
    }
    out << "\n";
  }
  for (const auto& [k, v] : data_.items()) out << "  " << k << ": " << v.dump() << "\n";
  return out.str();
}

std::string render_error(const std::string& command, const std::string& message, Format f,
                         const std::string& invariant) {
  if (f == Format::json) {
    json j;
    j["schema"] = kReportSchema;
    j["command"] = command;
    j["status"] = "error";
    j["error"] = message;
    if (!invariant.empty()) j["invariant"] = invariant;
    return j.dump(2) + "\n";
  }
  return command + ": error: " + message + "\n";
}

}  // namespace mrb::cli
