#include "amspace/app/report.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

namespace amspace::app {

std::optional<double> Row::abs_err() const {
  if (!reference) return std::nullopt;
  return std::abs(computed - *reference);
}

std::optional<double> Row::rel_err() const {
  if (!reference || *reference == 0.0) return std::nullopt;
  return std::abs(computed - *reference) / std::abs(*reference);
}

bool Row::pass() const {
  if (!std::isfinite(computed)) return false;
  switch (test) {
    case Test::rel:
      return reference && std::abs(computed - *reference) <= tol * std::abs(*reference);
    case Test::abs:
      return reference && std::abs(computed - *reference) <= tol;
    case Test::at_most:
      return computed <= tol;
    case Test::at_least:
      return computed >= tol;
  }
  return false;
}

Row compare(std::string id, std::string inputs, double computed, double reference, double tol, Test test) {
  Row r;
  r.id = std::move(id);
  r.inputs = std::move(inputs);
  r.computed = computed;
  r.reference = reference;
  r.tol = tol;
  r.test = test;
  return r;
}

Row bound(std::string id, std::string inputs, double computed, double tol, Test test) {
  Row r;
  r.id = std::move(id);
  r.inputs = std::move(inputs);
  r.computed = computed;
  r.tol = tol;
  r.test = test;
  return r;
}

Summary summarize(const std::vector<Row>& rows) {
  Summary s;
  for (const Row& r : rows) {
    (r.pass() ? s.pass : s.fail) += 1;
    if (!r.flag.empty()) ++s.flagged;
  }
  return s;
}

bool all_pass(const std::vector<Row>& rows) { return summarize(rows).fail == 0; }

namespace {

const char* test_name(Test t) {
  switch (t) {
    case Test::rel: return "rel";
    case Test::abs: return "abs";
    case Test::at_most: return "at_most";
    case Test::at_least: return "at_least";
  }
  return "?";
}

nlohmann::ordered_json num(std::optional<double> v) {
  if (!v || !std::isfinite(*v)) return nullptr;
  return *v;
}

std::string fmt(std::optional<double> v) {
  if (!v) return "";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", *v);
  return buf;
}

}  // namespace

void write_json(std::ostream& os, const RunConfig& cfg, const std::vector<Row>& rows) {
  nlohmann::ordered_json doc;
  doc["config"] = {{"command", cfg.command}, {"suite", cfg.suite}, {"grid", cfg.grid},
                   {"out", cfg.out},         {"seed", cfg.seed},   {"dump", cfg.dump}};
  doc["rows"] = nlohmann::ordered_json::array();
  for (const Row& r : rows) {
    nlohmann::ordered_json j;
    j["case"] = r.id;
    j["inputs"] = r.inputs;
    j["computed"] = num(r.computed);
    j["printed"] = num(r.printed);
    j["reference"] = num(r.reference);
    j["abs_err"] = num(r.abs_err());
    j["rel_err"] = num(r.rel_err());
    j["test"] = test_name(r.test);
    j["tol"] = r.tol;
    j["pass"] = r.pass();
    j["flag"] = r.flag.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(r.flag);
    if (!r.note.empty()) j["note"] = r.note;
    doc["rows"].push_back(std::move(j));
  }
  const Summary s = summarize(rows);
  doc["summary"] = {{"pass", s.pass}, {"fail", s.fail}, {"flagged", s.flagged}};
  os << doc.dump(2) << "\n";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void write_csv(std::ostream& os, const std::vector<Row>& rows) {
  os << "case,inputs,computed,printed,reference,abs_err,rel_err,test,tol,pass,flag,note\r\n";
  for (const Row& r : rows) {
    os << csv_field(r.id) << ',' << csv_field(r.inputs) << ',' << fmt(r.computed) << ',' << fmt(r.printed) << ','
       << fmt(r.reference) << ',' << fmt(r.abs_err()) << ',' << fmt(r.rel_err()) << ',' << test_name(r.test) << ','
       << fmt(r.tol) << ',' << (r.pass() ? "true" : "false") << ',' << csv_field(r.flag) << ',' << csv_field(r.note)
       << "\r\n";
  }
}

}  // namespace amspace::app
