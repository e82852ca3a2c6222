#pragma once

// JSON, LaTeX and plain-text renderings of tables and reports.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hermlab/schemes.hpp"

namespace hermlab::emit {

using nlohmann::json;

/// {"coeffs": ["a/b", ...], "N": n, "text": "2+√-3"}.
json cyc_json(const cyclo::CycNum& x);
json matrix_json(const schemes::CMatrix& m);
json matrix_json(const schemes::IntMatrix& m);

/// a, \frac{a}{b}, a+b\sqrt{3}\,i, ...
std::string latex_number(const cyclo::CycNum& x);
std::string latex_pmatrix(const std::vector<std::vector<std::string>>& cells);
std::string latex_matrix(const schemes::CMatrix& m);
std::string latex_matrix(const schemes::IntMatrix& m);

std::string text_matrix(const std::vector<std::vector<std::string>>& cells);
std::string text_matrix(const schemes::CMatrix& m);
std::string text_matrix(const schemes::IntMatrix& m);

/// All tables of a scheme (intersection matrices always; P, Q, multiplicities
/// when `table` is given; dual matrices for commutative tables).
json scheme_json(const schemes::Scheme& s, const schemes::CharTable* table);
std::string scheme_latex(const schemes::Scheme& s, const schemes::CharTable* table);
std::string scheme_text(const schemes::Scheme& s, const schemes::CharTable* table);

enum class Status { pass, fail, inconclusive };
std::string to_string(Status s);

struct Check {
  std::string name;
  json expected;
  json actual;
  Status status = Status::pass;
};

struct Report {
  unsigned q = 0;
  std::string command;
  std::vector<Check> checks;
  std::map<std::string, double> timings;  // seconds
  json extra;                             // command payload, omitted when null

  void add(std::string name, json expected, json actual, Status status) {
    checks.push_back({std::move(name), std::move(expected), std::move(actual), status});
  }
  /// Pass when expected == actual.
  void expect_eq(std::string name, const json& expected, const json& actual) {
    add(std::move(name), expected, actual, expected == actual ? Status::pass : Status::fail);
  }
  /// 0 all pass, 1 some mismatch, 2 inconclusive without mismatch.
  int exit_code() const;
  json to_json() const;
  std::string to_text() const;
  std::string to_latex() const;
};

}  // namespace hermlab::emit
