#include "fan/fan.h"

#include <cstring>
#include <string>

#include "fan/cones.hpp"
#include "fan/funcalc.hpp"
#include "fan/quadrature.hpp"
#include "fan/realization.hpp"
#include "fan/restriction.hpp"
#include "fan/serialize.hpp"
#include "fan/transforms.hpp"
#include "fan/verify.hpp"

struct fan_series {
  fan::TruncatedSeries value;
};
struct fan_measure {
  fan::DiscreteMeasure value;
};
struct fan_tuple {
  fan::OperatorTuple value;
};
struct fan_realization {
  fan::RealizationData value;
};

namespace {

thread_local std::string g_last_error;

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
fan_status guarded(Fn&& fn) {
  try {
    fn();
    return FAN_OK;
  } catch (const fan::SchemaError& e) {
    g_last_error = e.what();
    return FAN_ERROR_INVALID_ARGUMENT;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return FAN_ERROR_INVALID_ARGUMENT;
  } catch (const std::domain_error& e) {
    g_last_error = e.what();
    return FAN_ERROR_DOMAIN;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return FAN_ERROR_INTERNAL;
  }
}

std::vector<fan::Complex> point_from_doubles(const double* z, size_t len, int dim) {
  if (z == nullptr || static_cast<int>(len) != 2 * dim)
    throw std::invalid_argument("point must supply 2*dim doubles");
  std::vector<fan::Complex> point(static_cast<size_t>(dim));
  for (int i = 0; i < dim; ++i) point[static_cast<size_t>(i)] = {z[2 * i], z[2 * i + 1]};
  return point;
}

fan::Json report_json(const fan::PositivityReport& r) {
  const char* verdict = r.verdict == fan::Verdict::Pass
                            ? "pass"
                            : (r.verdict == fan::Verdict::Fail ? "fail" : "inconclusive");
  return fan::Json{
      {"verdict", verdict}, {"min_eigenvalue", r.min_eigenvalue}, {"worst", r.worst_label}};
}

}  // namespace

extern "C" {

const char* fan_last_error(void) { return g_last_error.c_str(); }

void fan_string_free(char* s) { delete[] s; }

fan_status fan_series_from_json(const char* json, fan_series** out) {
  return guarded([&] {
    if (!json || !out) throw std::invalid_argument("null argument");
    *out = new fan_series{fan::series_from_json(fan::Json::parse(json, nullptr, true))};
  });
}

fan_status fan_series_to_json(const fan_series* s, char** json_out) {
  return guarded([&] {
    if (!s || !json_out) throw std::invalid_argument("null argument");
    *json_out = copy_string(fan::series_to_json(s->value).dump());
  });
}

void fan_series_free(fan_series* s) { delete s; }

fan_status fan_series_transform(const fan_series* s, const char* op, fan_series** out) {
  return guarded([&] {
    if (!s || !op || !out) throw std::invalid_argument("null argument");
    const std::string name(op);
    fan::TruncatedSeries result = [&] {
      if (name == "F") return fan::fantappie_series(s->value);
      if (name == "L") return fan::euler_L(s->value);
      if (name == "E") return fan::hardy_euler_E(s->value);
      if (name == "lambda") return fan::lambda_apply(s->value);
      if (name == "gamma") return fan::gamma_apply(s->value);
      throw std::invalid_argument("unknown transform op: " + name);
    }();
    *out = new fan_series{std::move(result)};
  });
}

fan_status fan_series_evaluate(const fan_series* s, const double* z, size_t len, double* re_out,
                               double* im_out) {
  return guarded([&] {
    if (!s || !re_out || !im_out) throw std::invalid_argument("null argument");
    const fan::Complex v = s->value.evaluate(point_from_doubles(z, len, s->value.dim()));
    *re_out = v.real();
    *im_out = v.imag();
  });
}

fan_status fan_series_cayley(const fan_series* s, fan_series** out) {
  return guarded([&] {
    if (!s || !out) throw std::invalid_argument("null argument");
    *out = new fan_series{fan::cayley(s->value)};
  });
}

fan_status fan_measure_from_json(const char* json, fan_measure** out) {
  return guarded([&] {
    if (!json || !out) throw std::invalid_argument("null argument");
    *out = new fan_measure{fan::measure_from_json(fan::Json::parse(json, nullptr, true))};
  });
}

fan_status fan_measure_to_json(const fan_measure* mu, char** json_out) {
  return guarded([&] {
    if (!mu || !json_out) throw std::invalid_argument("null argument");
    *json_out = copy_string(fan::measure_to_json(mu->value).dump());
  });
}

void fan_measure_free(fan_measure* mu) { delete mu; }

fan_status fan_sphere_quadrature(int dim, int max_degree, fan_measure** out) {
  return guarded([&] {
    if (!out) throw std::invalid_argument("null argument");
    *out = new fan_measure{fan::sphere_quadrature(dim, max_degree)};
  });
}

fan_status fan_measure_herglotz_series(const fan_measure* mu, int max_degree, fan_series** out) {
  return guarded([&] {
    if (!mu || !out) throw std::invalid_argument("null argument");
    *out = new fan_series{fan::herglotz_measure_series(mu->value, max_degree)};
  });
}

fan_status fan_cone_test_series(const char* test, const fan_series* f, int points, double radius,
                                double tol, unsigned long long seed, char** report_out) {
  return guarded([&] {
    if (!test || !f || !report_out) throw std::invalid_argument("null argument");
    const std::string name(test);
    fan::PositivityReport report;
    if (name == "schur") {
      const auto pts = fan::quasi_ball_points(f->value.dim(), points, radius);
      report = fan::psd_check(fan::schur_kernel_gram(f->value, pts), tol);
    } else if (name == "op") {
      const auto pts = fan::quasi_ball_points(f->value.dim(), points, radius);
      report = fan::op_positivity_sample(f->value, pts, tol);
    } else if (name == "mp") {
      report = fan::mp_necessary_check(f->value, tol);
    } else {
      throw std::invalid_argument("unknown series cone test: " + name);
    }
    (void)seed;
    *report_out = copy_string(report_json(report).dump());
  });
}

fan_status fan_cone_test_measure(const char* test, const fan_measure* mu, int max_degree,
                                 double tol, char** report_out) {
  return guarded([&] {
    if (!test || !mu || !report_out) throw std::invalid_argument("null argument");
    const std::string name(test);
    fan::PositivityReport report;
    if (name == "kp") {
      report = fan::kp_annihilation_check(mu->value, max_degree, tol);
    } else {
      throw std::invalid_argument("unknown measure cone test: " + name);
    }
    *report_out = copy_string(report_json(report).dump());
  });
}

fan_status fan_tuple_from_json(const char* json, fan_tuple** out) {
  return guarded([&] {
    if (!json || !out) throw std::invalid_argument("null argument");
    *out = new fan_tuple{fan::tuple_from_json(fan::Json::parse(json, nullptr, true))};
  });
}

fan_status fan_tuple_to_json(const fan_tuple* t, char** json_out) {
  return guarded([&] {
    if (!t || !json_out) throw std::invalid_argument("null argument");
    *json_out = copy_string(fan::tuple_to_json(t->value).dump());
  });
}

void fan_tuple_free(fan_tuple* t) { delete t; }

fan_status fan_tuple_numrange(const fan_tuple* t, int effort, unsigned long long seed,
                              double* lower_out, double* upper_out) {
  return guarded([&] {
    if (!t || !lower_out || !upper_out) throw std::invalid_argument("null argument");
    const fan::NumRangeReport r = fan::joint_num_radius(t->value, effort, seed);
    *lower_out = r.lower_bound;
    *upper_out = r.upper_bound;
  });
}

fan_status fan_tuple_scale_to_ball(const fan_tuple* t, double margin, int effort,
                                   unsigned long long seed, fan_tuple** out) {
  return guarded([&] {
    if (!t || !out) throw std::invalid_argument("null argument");
    *out = new fan_tuple{fan::scale_to_ball(t->value, margin, effort, seed)};
  });
}

fan_status fan_funcalc_check(const char* check, const fan_tuple* t, const fan_series* p, int arg1,
                             double tol, unsigned long long seed, char** report_out) {
  return guarded([&] {
    if (!check || !report_out) throw std::invalid_argument("null argument");
    const std::string name(check);
    fan::Json j;
    if (name == "bound") {
      if (!t || !p) throw std::invalid_argument("bound check needs a tuple and a polynomial");
      const fan::BoundReport r =
          fan::verify_calculus_bound(t->value, p->value, tol > 0 ? tol : 1e-6, seed);
      j = {{"check", "bound"}, {"lhs", r.lhs},   {"rhs", r.rhs},
           {"slack", r.slack}, {"pass", r.pass}, {"note", r.note}};
    } else if (name == "eqi8") {
      Eigen::MatrixXcd a(2, 2);
      a << 0.0, std::sqrt(2.0), 0.0, 0.0;
      const fan::AlternatingWordReport r = fan::check_alternating_words(arg1 > 0 ? arg1 : 2, a);
      j = {{"check", "eqi8"},
           {"m", r.m},
           {"word_average_norm", r.word_average_norm},
           {"bound", r.bound},
           {"pass", r.average_bound_pass && r.binomial_inequality_pass}};
    } else if (name == "positivity") {
      if (!t || !p) throw std::invalid_argument("positivity check needs a tuple and a polynomial");
      const fan::PositiveCalcReport r = fan::check_positive_calc(t->value, p->value, 1, seed);
      j = {{"check", "positivity"},
           {"hypothesis_min", r.hypothesis_min},
           {"hypothesis_holds", r.hypothesis_holds},
           {"min_real_eigenvalue", r.min_real_eigenvalue},
           {"pass", r.pass}};
    } else {
      throw std::invalid_argument("unknown funcalc check: " + name);
    }
    *report_out = copy_string(j.dump());
  });
}

fan_status fan_realization_from_json(const char* json, fan_realization** out) {
  return guarded([&] {
    if (!json || !out) throw std::invalid_argument("null argument");
    *out = new fan_realization{fan::realization_from_json(fan::Json::parse(json, nullptr, true))};
  });
}

fan_status fan_realization_to_json(const fan_realization* r, char** json_out) {
  return guarded([&] {
    if (!r || !json_out) throw std::invalid_argument("null argument");
    *json_out = copy_string(fan::realization_to_json(r->value).dump());
  });
}

void fan_realization_free(fan_realization* r) { delete r; }

fan_status fan_realization_eval(const fan_realization* r, const double* z, size_t len,
                                double* re_out, double* im_out) {
  return guarded([&] {
    if (!r || !re_out || !im_out) throw std::invalid_argument("null argument");
    const fan::Complex v =
        fan::realization_eval(r->value, point_from_doubles(z, len, r->value.dim));
    *re_out = v.real();
    *im_out = v.imag();
  });
}

fan_status fan_build_normal_realization(const fan_measure* mu, double t, fan_realization** out) {
  return guarded([&] {
    if (!mu || !out) throw std::invalid_argument("null argument");
    *out = new fan_realization{fan::build_normal_h9(mu->value, t)};
  });
}

fan_status fan_build_f2_realization(const fan_measure* mu, double t, fan_realization** out) {
  return guarded([&] {
    if (!mu || !out) throw std::invalid_argument("null argument");
    *out = new fan_realization{fan::build_f2_realization(mu->value, t)};
  });
}

fan_status fan_spectra_csv(const char* domain, int max_degree, char** csv_out) {
  return guarded([&] {
    if (!domain || !csv_out) throw std::invalid_argument("null argument");
    const std::string spec(domain);
    fan::ReinhardtDomain dom = [&] {
      const auto colon = spec.find(':');
      if (colon == std::string::npos)
        throw std::invalid_argument("domain must be ball:<r> or ellipsoid:<r1>,<r2>[,<r3>]");
      const std::string kind = spec.substr(0, colon);
      const std::string args = spec.substr(colon + 1);
      if (kind == "ball") {
        return fan::ReinhardtDomain::scaled_ball(2, std::stod(args));
      }
      if (kind == "ball2" || kind == "ball3") {
        return fan::ReinhardtDomain::scaled_ball(kind == "ball2" ? 2 : 3, std::stod(args));
      }
      if (kind == "ellipsoid") {
        std::vector<double> radii;
        std::size_t pos = 0;
        while (pos < args.size()) {
          const auto comma = args.find(',', pos);
          radii.push_back(std::stod(args.substr(pos, comma - pos)));
          if (comma == std::string::npos) break;
          pos = comma + 1;
        }
        return fan::ReinhardtDomain::ellipsoid(radii);
      }
      throw std::invalid_argument("unknown domain kind: " + kind);
    }();
    std::string csv = "alpha,lambda_closed,lambda_quadrature,relative_error\n";
    for (const auto& alpha : fan::enumerate_upto(dom.dim(), max_degree)) {
      const fan::DiagonalizationReport r = fan::verify_fant_diag(dom, alpha, max_degree + 2);
      std::string alpha_str;
      for (int i = 0; i < alpha.dim(); ++i) {
        if (i) alpha_str += " ";
        alpha_str += std::to_string(alpha[i]);
      }
      csv += alpha_str + "," + fan::format_double(r.lambda_closed) + "," +
             fan::format_double(r.lambda_quadrature) + "," +
             fan::format_double(r.relative_error) + "\n";
    }
    *csv_out = copy_string(csv);
  });
}

fan_status fan_suite_names(char** names_json_out) {
  return guarded([&] {
    if (!names_json_out) throw std::invalid_argument("null argument");
    *names_json_out = copy_string(fan::Json(fan::suite_names()).dump());
  });
}

fan_status fan_verify(const char* suite, const char* overrides_json, int* pass_out,
                      char** report_out) {
  return guarded([&] {
    if (!suite || !pass_out || !report_out) throw std::invalid_argument("null argument");
    std::map<std::string, double> overrides;
    if (overrides_json && std::strlen(overrides_json) > 0) {
      const fan::Json j = fan::Json::parse(overrides_json, nullptr, true);
      if (!j.is_object()) throw std::invalid_argument("overrides must be a JSON object");
      for (const auto& [key, value] : j.items()) {
        if (!value.is_number()) throw std::invalid_argument("override " + key + " must be numeric");
        overrides[key] = value.get<double>();
      }
    }
    const fan::SuiteReport report = fan::run_suite(suite, overrides);
    *pass_out = report.all_pass() ? 1 : 0;
    *report_out = copy_string(fan::suite_report_to_json(report).dump(2));
  });
}

}  // extern "C"
