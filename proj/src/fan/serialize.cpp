#include "fan/serialize.hpp"

#include <cstdio>

namespace fan {

namespace {

double require_number(const Json& j, const std::string& where) {
  if (!j.is_number()) throw SchemaError(where + ": expected a number");
  return j.get<double>();
}

int require_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw SchemaError(where + ": expected an integer");
  return j.get<int>();
}

Complex complex_from(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) throw SchemaError(where + ": expected [re,im]");
  return {require_number(j[0], where + "[0]"), require_number(j[1], where + "[1]")};
}

Json complex_to(const Complex& c) { return Json::array({c.real(), c.imag()}); }

}  // namespace

Json series_to_json(const TruncatedSeries& f) {
  Json coeffs = Json::array();
  for (const auto& [alpha, c] : f.coeffs()) {
    coeffs.push_back(Json{{"alpha", alpha.exponents()}, {"re", c.real()}, {"im", c.imag()}});
  }
  return Json{{"dim", f.dim()}, {"max_degree", f.max_degree()}, {"coeffs", std::move(coeffs)}};
}

TruncatedSeries series_from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("series: expected an object");
  if (!j.contains("dim")) throw SchemaError("series.dim: missing");
  if (!j.contains("max_degree")) throw SchemaError("series.max_degree: missing");
  const int dim = require_int(j.at("dim"), "series.dim");
  const int cap = require_int(j.at("max_degree"), "series.max_degree");
  if (dim < 1) throw SchemaError("series.dim: must be >= 1");
  if (cap < 0) throw SchemaError("series.max_degree: must be >= 0");
  TruncatedSeries f(dim, cap);
  if (!j.contains("coeffs")) return f;
  if (!j.at("coeffs").is_array()) throw SchemaError("series.coeffs: expected an array");
  std::size_t k = 0;
  for (const auto& entry : j.at("coeffs")) {
    const std::string where = "series.coeffs[" + std::to_string(k++) + "]";
    if (!entry.is_object() || !entry.contains("alpha"))
      throw SchemaError(where + ".alpha: missing");
    std::vector<int> exps;
    for (const auto& e : entry.at("alpha")) exps.push_back(require_int(e, where + ".alpha"));
    if (static_cast<int>(exps.size()) != dim)
      throw SchemaError(where + ".alpha: length must equal dim");
    MultiIndex alpha(exps);
    if (alpha.degree() > cap) throw SchemaError(where + ".alpha: degree exceeds max_degree");
    const double re = entry.contains("re") ? require_number(entry.at("re"), where + ".re") : 0.0;
    const double im = entry.contains("im") ? require_number(entry.at("im"), where + ".im") : 0.0;
    f.add_coeff(alpha, Complex(re, im));
  }
  return f;
}

Json measure_to_json(const DiscreteMeasure& mu) {
  Json atoms = Json::array();
  for (const auto& a : mu.atoms()) {
    Json point = Json::array();
    for (const auto& c : a.point) point.push_back(complex_to(c));
    atoms.push_back(Json{{"point", std::move(point)}, {"weight", a.weight}});
  }
  return Json{{"dim", mu.dim()}, {"atoms", std::move(atoms)}};
}

DiscreteMeasure measure_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim")) throw SchemaError("measure.dim: missing");
  const int dim = require_int(j.at("dim"), "measure.dim");
  if (dim < 1) throw SchemaError("measure.dim: must be >= 1");
  DiscreteMeasure mu(dim);
  if (!j.contains("atoms")) return mu;
  std::size_t k = 0;
  for (const auto& entry : j.at("atoms")) {
    const std::string where = "measure.atoms[" + std::to_string(k++) + "]";
    if (!entry.is_object() || !entry.contains("point") || !entry.contains("weight"))
      throw SchemaError(where + ": needs point and weight");
    std::vector<Complex> point;
    for (const auto& c : entry.at("point")) point.push_back(complex_from(c, where + ".point"));
    if (static_cast<int>(point.size()) != dim)
      throw SchemaError(where + ".point: length must equal dim");
    const double w = require_number(entry.at("weight"), where + ".weight");
    try {
      mu.add_atom(std::move(point), w);
    } catch (const std::invalid_argument& e) {
      throw SchemaError(where + ": " + e.what());
    }
  }
  return mu;
}

Json tuple_to_json(const OperatorTuple& tuple) {
  Json mats = Json::array();
  for (const auto& m : tuple.matrices) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      Json row = Json::array();
      for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to(m(r, c)));
      rows.push_back(std::move(row));
    }
    mats.push_back(std::move(rows));
  }
  return Json{{"n", tuple.n()}, {"d", tuple.d()}, {"matrices", std::move(mats)}};
}

OperatorTuple tuple_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("d") || !j.contains("matrices"))
    throw SchemaError("tuple: needs n, d, matrices");
  const int n = require_int(j.at("n"), "tuple.n");
  const int d = require_int(j.at("d"), "tuple.d");
  if (n < 1) throw SchemaError("tuple.n: must be >= 1");
  if (d < 1) throw SchemaError("tuple.d: must be >= 1");
  if (!j.at("matrices").is_array() || static_cast<int>(j.at("matrices").size()) != n)
    throw SchemaError("tuple.matrices: expected n matrices");
  std::vector<Eigen::MatrixXcd> mats;
  for (int k = 0; k < n; ++k) {
    const std::string where = "tuple.matrices[" + std::to_string(k) + "]";
    const auto& rows = j.at("matrices")[static_cast<size_t>(k)];
    if (!rows.is_array() || static_cast<int>(rows.size()) != d)
      throw SchemaError(where + ": expected d rows");
    Eigen::MatrixXcd m(d, d);
    for (int r = 0; r < d; ++r) {
      const auto& row = rows[static_cast<size_t>(r)];
      if (!row.is_array() || static_cast<int>(row.size()) != d)
        throw SchemaError(where + "[" + std::to_string(r) + "]: expected d entries");
      for (int c = 0; c < d; ++c)
        m(r, c) = complex_from(row[static_cast<size_t>(c)],
                               where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
    }
    mats.push_back(std::move(m));
  }
  return OperatorTuple(std::move(mats));
}

namespace {

const char* form_name(RealizationForm form) {
  switch (form) {
    case RealizationForm::SchurF4: return "schur_f4";
    case RealizationForm::OpF5: return "op_f5";
    case RealizationForm::NormalH9: return "normal_h9";
  }
  return "schur_f4";
}

RealizationForm form_from_name(const std::string& s) {
  if (s == "schur_f4") return RealizationForm::SchurF4;
  if (s == "op_f5") return RealizationForm::OpF5;
  if (s == "normal_h9") return RealizationForm::NormalH9;
  throw SchemaError("realization.form: unknown form " + s);
}

}  // namespace

Json realization_to_json(const RealizationData& r) {
  Json blocks = Json::array();
  for (const auto& b : r.blocks) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < b.matrix.rows(); ++i) {
      Json row = Json::array();
      for (Eigen::Index c = 0; c < b.matrix.cols(); ++c) row.push_back(complex_to(b.matrix(i, c)));
      rows.push_back(std::move(row));
    }
    blocks.push_back(Json{{"alpha", b.alpha.exponents()}, {"matrix", std::move(rows)}});
  }
  Json state = Json::array();
  for (Eigen::Index i = 0; i < r.state.size(); ++i) state.push_back(complex_to(r.state(i)));
  Json j{{"form", form_name(r.form)}, {"dim", r.dim},          {"space_dim", r.space_dim},
         {"blocks", std::move(blocks)}, {"state", std::move(state)}, {"t", r.t}};
  if (std::isfinite(r.isometry_defect)) j["isometry_defect"] = r.isometry_defect;
  return j;
}

RealizationData realization_from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("realization: expected an object");
  RealizationData r;
  r.form = form_from_name(j.value("form", std::string("schur_f4")));
  r.dim = require_int(j.at("dim"), "realization.dim");
  r.space_dim = require_int(j.at("space_dim"), "realization.space_dim");
  r.t = j.value("t", 0.0);
  if (j.contains("isometry_defect")) r.isometry_defect = j.at("isometry_defect").get<double>();
  r.state = Eigen::VectorXcd::Zero(r.space_dim);
  const auto& state = j.at("state");
  if (static_cast<int>(state.size()) != r.space_dim)
    throw SchemaError("realization.state: length must equal space_dim");
  for (int i = 0; i < r.space_dim; ++i)
    r.state(i) = complex_from(state[static_cast<size_t>(i)], "realization.state");
  for (const auto& entry : j.at("blocks")) {
    std::vector<int> exps;
    for (const auto& e : entry.at("alpha")) exps.push_back(require_int(e, "realization.blocks.alpha"));
    Eigen::MatrixXcd m(r.space_dim, r.space_dim);
    const auto& rows = entry.at("matrix");
    if (static_cast<int>(rows.size()) != r.space_dim)
      throw SchemaError("realization.blocks.matrix: wrong row count");
    for (int a = 0; a < r.space_dim; ++a) {
      for (int b = 0; b < r.space_dim; ++b)
        m(a, b) = complex_from(rows[static_cast<size_t>(a)][static_cast<size_t>(b)],
                               "realization.blocks.matrix");
    }
    r.blocks.push_back({MultiIndex(exps), std::move(m)});
  }
  r.validate();
  return r;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace fan
