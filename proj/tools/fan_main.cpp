// fan: command-line front end for the ball-transform library. Talks to the
// shared library exclusively through the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fan/fan.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CLI::ValidationError("--in", "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& out_path, const std::string& content) {
  if (out_path.empty() || out_path == "-") {
    std::cout << content;
    if (content.empty() || content.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw CLI::ValidationError("--out", "cannot open " + out_path);
  out << content;
}

struct StringGuard {
  char* value = nullptr;
  ~StringGuard() { fan_string_free(value); }
};

int fail_with(fan_status status) {
  std::cerr << "error: " << fan_last_error() << "\n";
  return status == FAN_ERROR_INTERNAL ? kExitCheckFailure : kExitUsage;
}

// CSV rows -> array of objects keyed by the header line.
std::string csv_to_json(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  std::vector<std::string> keys;
  std::istringstream header(line);
  std::string field;
  while (std::getline(header, field, ',')) keys.push_back(field);
  nlohmann::json rows = nlohmann::json::array();
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    nlohmann::json obj;
    for (const auto& key : keys) {
      std::getline(row, field, ',');
      if (key == "alpha") {
        obj[key] = field;
      } else {
        obj[key] = std::stod(field);
      }
    }
    rows.push_back(std::move(obj));
  }
  return rows.dump(2);
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

// Suite reports -> one CSV row per check.
std::string reports_to_csv(const std::vector<std::string>& reports) {
  std::string csv = "suite,check,anchor,value,threshold,pass\n";
  for (const auto& text : reports) {
    const nlohmann::json j = nlohmann::json::parse(text);
    for (const auto& check : j.at("checks")) {
      char value[64], threshold[64];
      std::snprintf(value, sizeof(value), "%.17g", check.at("value").get<double>());
      std::snprintf(threshold, sizeof(threshold), "%.17g", check.at("threshold").get<double>());
      csv += csv_escape(j.at("suite").get<std::string>()) + "," +
             csv_escape(check.at("name").get<std::string>()) + "," +
             csv_escape(check.at("anchor").get<std::string>()) + "," + value + "," + threshold +
             "," + (check.at("pass").get<bool>() ? "true" : "false") + "\n";
    }
  }
  return csv;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fan: ball transforms, positivity cones, operator calculus"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  unsigned long long seed = 0x5EED;
  double tol = -1.0;
  int degree = 8;
  std::string out_path;
  std::string format = "json";
  app.add_option("--seed", seed, "random seed")->capture_default_str();
  app.add_option("--tol", tol, "tolerance override");
  app.add_option("--degree", degree, "degree cap")->capture_default_str();
  app.add_option("--out", out_path, "output path (default stdout)");
  auto* format_opt =
      app.add_option("--format", format, "output format (spectra defaults to csv)")
          ->check(CLI::IsMember({"json", "csv"}));

  // transform
  auto* transform = app.add_subcommand("transform", "apply a coefficient-diagonal transform");
  std::string transform_op, transform_in;
  transform->add_option("--op", transform_op, "one of F, L, E, lambda, gamma")->required();
  transform->add_option("--in", transform_in, "input series JSON file")->required();

  // cone-test
  auto* cone = app.add_subcommand("cone-test", "positivity cone tests");
  std::string cone_kind, cone_series_path, cone_measure_path;
  int cone_points = 200;
  double cone_radius = 0.8;
  cone->add_option("--test", cone_kind, "one of schur, op, kp, mp")->required();
  cone->add_option("--series", cone_series_path, "series JSON input (schur, op, mp)");
  cone->add_option("--measure", cone_measure_path, "measure JSON input (kp)");
  cone->add_option("--points", cone_points, "sample point count")->capture_default_str();
  cone->add_option("--radius", cone_radius, "sample radius")->capture_default_str();

  // funcalc
  auto* funcalc = app.add_subcommand("funcalc", "symmetrized functional calculus checks");
  std::string funcalc_check, funcalc_tuple_path, funcalc_poly_path;
  int funcalc_m = 2;
  funcalc->add_option("--check", funcalc_check, "one of bound, eqi8, positivity")->required();
  funcalc->add_option("--tuple", funcalc_tuple_path, "operator tuple JSON input");
  funcalc->add_option("--poly", funcalc_poly_path, "polynomial series JSON input");
  funcalc->add_option("--m", funcalc_m, "word half-length for eqi8")->capture_default_str();

  // numrange
  auto* numrange = app.add_subcommand("numrange", "joint numerical radius bracket");
  std::string numrange_in;
  int numrange_effort = 3;
  numrange->add_option("--in", numrange_in, "operator tuple JSON file")->required();
  numrange->add_option("--effort", numrange_effort, "search effort")->capture_default_str();

  // spectra
  auto* spectra = app.add_subcommand("spectra", "restriction-operator spectrum table");
  std::string spectra_domain;
  spectra->add_option("--domain", spectra_domain, "ball:<r> | ball3:<r> | ellipsoid:<r1>,<r2>[,<r3>]")
      ->required();

  // verify
  auto* verify = app.add_subcommand("verify", "run a named verification suite");
  std::string verify_suite;
  int verify_trials = -1;
  int verify_m_max = -1;
  verify->add_option("suite", verify_suite, "suite name, or 'all'")->required();
  verify->add_option("--trials", verify_trials, "trial count override");
  verify->add_option("--m-max", verify_m_max, "word half-length cap override");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*transform) {
      fan_series* in = nullptr;
      if (fan_status s = fan_series_from_json(read_file(transform_in).c_str(), &in); s != FAN_OK)
        return fail_with(s);
      fan_series* result = nullptr;
      if (fan_status s = fan_series_transform(in, transform_op.c_str(), &result); s != FAN_OK) {
        fan_series_free(in);
        return fail_with(s);
      }
      StringGuard json;
      fan_series_to_json(result, &json.value);
      write_output(out_path, json.value);
      fan_series_free(in);
      fan_series_free(result);
      return kExitPass;
    }

    if (*cone) {
      StringGuard report;
      fan_status status = FAN_OK;
      if (cone_kind == "kp") {
        if (cone_measure_path.empty()) {
          std::cerr << "error: --measure required for kp\n";
          return kExitUsage;
        }
        fan_measure* mu = nullptr;
        status = fan_measure_from_json(read_file(cone_measure_path).c_str(), &mu);
        if (status != FAN_OK) return fail_with(status);
        status = fan_cone_test_measure("kp", mu, degree, tol > 0 ? tol : 1e-12, &report.value);
        fan_measure_free(mu);
      } else {
        if (cone_series_path.empty()) {
          std::cerr << "error: --series required for " << cone_kind << "\n";
          return kExitUsage;
        }
        fan_series* f = nullptr;
        status = fan_series_from_json(read_file(cone_series_path).c_str(), &f);
        if (status != FAN_OK) return fail_with(status);
        status = fan_cone_test_series(cone_kind.c_str(), f, cone_points, cone_radius,
                                      tol > 0 ? tol : 1e-8, seed, &report.value);
        fan_series_free(f);
      }
      if (status != FAN_OK) return fail_with(status);
      write_output(out_path, report.value);
      return std::string(report.value).find("\"verdict\":\"pass\"") != std::string::npos
                 ? kExitPass
                 : kExitCheckFailure;
    }

    if (*funcalc) {
      fan_tuple* tuple = nullptr;
      fan_series* poly = nullptr;
      if (!funcalc_tuple_path.empty()) {
        if (fan_status s = fan_tuple_from_json(read_file(funcalc_tuple_path).c_str(), &tuple);
            s != FAN_OK)
          return fail_with(s);
      }
      if (!funcalc_poly_path.empty()) {
        if (fan_status s = fan_series_from_json(read_file(funcalc_poly_path).c_str(), &poly);
            s != FAN_OK) {
          fan_tuple_free(tuple);
          return fail_with(s);
        }
      }
      StringGuard report;
      const fan_status s =
          fan_funcalc_check(funcalc_check.c_str(), tuple, poly, funcalc_m, tol, seed, &report.value);
      fan_tuple_free(tuple);
      fan_series_free(poly);
      if (s != FAN_OK) return fail_with(s);
      write_output(out_path, report.value);
      return std::string(report.value).find("\"pass\":true") != std::string::npos
                 ? kExitPass
                 : kExitCheckFailure;
    }

    if (*numrange) {
      fan_tuple* tuple = nullptr;
      if (fan_status s = fan_tuple_from_json(read_file(numrange_in).c_str(), &tuple); s != FAN_OK)
        return fail_with(s);
      double lower = 0.0, upper = 0.0;
      const fan_status s = fan_tuple_numrange(tuple, numrange_effort, seed, &lower, &upper);
      fan_tuple_free(tuple);
      if (s != FAN_OK) return fail_with(s);
      char buf[160];
      std::snprintf(buf, sizeof(buf), "{\"lower_bound\":%.17g,\"upper_bound\":%.17g}", lower,
                    upper);
      write_output(out_path, buf);
      return kExitPass;
    }

    if (*spectra) {
      StringGuard csv;
      if (fan_status s = fan_spectra_csv(spectra_domain.c_str(), degree, &csv.value); s != FAN_OK)
        return fail_with(s);
      const bool as_json = format_opt->count() > 0 && format == "json";
      write_output(out_path, as_json ? csv_to_json(csv.value) : csv.value);
      return kExitPass;
    }

    if (*verify) {
      std::string overrides = "{";
      overrides += "\"seed\":" + std::to_string(seed);
      if (tol > 0) overrides += ",\"tol\":" + std::to_string(tol);
      if (verify_trials > 0) overrides += ",\"trials\":" + std::to_string(verify_trials);
      if (verify_m_max > 0) overrides += ",\"m_max\":" + std::to_string(verify_m_max);
      overrides += "}";

      std::vector<std::string> suites;
      if (verify_suite == "all") {
        StringGuard names;
        if (fan_status s = fan_suite_names(&names.value); s != FAN_OK) return fail_with(s);
        std::string list(names.value);
        std::size_t pos = 0;
        while ((pos = list.find('"', pos)) != std::string::npos) {
          const std::size_t end = list.find('"', pos + 1);
          suites.push_back(list.substr(pos + 1, end - pos - 1));
          pos = end + 1;
        }
      } else {
        suites.push_back(verify_suite);
      }

      bool all_pass = true;
      std::vector<std::string> reports;
      for (const auto& name : suites) {
        int pass = 0;
        StringGuard report;
        const fan_status s = fan_verify(name.c_str(), overrides.c_str(), &pass, &report.value);
        if (s != FAN_OK) return fail_with(s);
        all_pass = all_pass && pass == 1;
        reports.emplace_back(report.value);
        std::fprintf(stderr, "[%s] %s\n", pass == 1 ? "PASS" : "FAIL", name.c_str());
      }
      std::string combined;
      if (format == "csv") {
        combined = reports_to_csv(reports);
      } else {
        for (const auto& r : reports) {
          if (!combined.empty()) combined += "\n";
          combined += r;
        }
      }
      write_output(out_path, combined);
      return all_pass ? kExitPass : kExitCheckFailure;
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
