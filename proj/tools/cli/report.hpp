#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "mrb/verdict.hpp"

namespace mrb::cli {

inline constexpr const char* kReportSchema = "mrb3.report/1";

enum class Format { text, json };

//! Exit codes of every subcommand.
enum Exit : int { pass = 0, math_failure = 1, input_error = 2 };

//! Accumulates named checks and result data for one command invocation.
class Report {
 public:
  explicit Report(std::string command, std::vector<std::string> basis = {});

  void set_basis(std::vector<std::string> basis) { basis_ = std::move(basis); }
  //! Failing verdicts carry the 1-based violating tuple, its basis names and the exact residual.
  void check(const std::string& name, const Verdict& v);
  void check(const std::string& name, bool ok, const std::string& detail = "");
  nlohmann::ordered_json& data() { return data_; }

  bool ok() const;
  int exit_code() const { return ok() ? pass : math_failure; }
  nlohmann::ordered_json to_json() const;
  std::string render(Format f) const;

 private:
  std::string command_;
  std::vector<std::string> basis_;
  nlohmann::ordered_json checks_ = nlohmann::ordered_json::array();
  nlohmann::ordered_json data_ = nlohmann::ordered_json::object();
};

//! Report for a command that stopped on bad input (exit code 2).
std::string render_error(const std::string& command, const std::string& message, Format f,
                         const std::string& invariant = "");

nlohmann::ordered_json to_json(const Vec& v);
nlohmann::ordered_json to_json(const Matrix& m);

}  // namespace mrb::cli
