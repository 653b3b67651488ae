#include "confgeo/io.hpp"

#include <json.hpp>

#include <cstdio>
#include <stdexcept>
#include <vector>

namespace confgeo {

namespace {

void append_number(std::string& out, double value) { out += format_double(value); }

void append_vec3(std::string& out, const Vec3& v) {
  out += '[';
  append_number(out, v.x);
  out += ',';
  append_number(out, v.y);
  out += ',';
  append_number(out, v.z);
  out += ']';
}

void append_array(std::string& out, const std::vector<double>& values) {
  out += '[';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    append_number(out, values[i]);
  }
  out += ']';
}

void append_array5(std::string& out, const PerimeterVector& v) {
  out += '[';
  for (int i = 0; i < 5; ++i) {
    if (i > 0) out += ',';
    append_number(out, v[i]);
  }
  out += ']';
}

void append_normals(std::string& out, const std::vector<UnitVector>& normals) {
  out += '[';
  for (std::size_t i = 0; i < normals.size(); ++i) {
    if (i > 0) out += ',';
    append_vec3(out, normals[i].vec());
  }
  out += ']';
}

void append_bool(std::string& out, bool b) { out += b ? "true" : "false"; }

void append_classification(std::string& out, const PerimeterVector& L,
                           const FamilyClassification& c) {
  out += "{\"L\":";
  append_array5(out, L);
  out += ",\"verdict\":\"";
  out += family_type_name(c.verdict);
  out += '"';
  if (c.verdict != FamilyType::NotMember) {
    out += ",\"coefficients\":[";
    append_number(out, c.coeffs->first);
    if (c.verdict != FamilyType::TypeII) {
      out += ',';
      append_number(out, c.coeffs->second);
    }
    out += ']';
    const FamilyParams params = xy_from_perimeters(L, c.verdict);
    out += ",\"x\":";
    append_number(out, params.x);
    out += ",\"y\":";
    append_number(out, params.y);
  }
  out += ",\"residual\":";
  append_number(out, c.residual);
  out += '}';
}

void append_problem_fields(std::string& out, const MinkowskiProblem& p) {
  out += "\"normals\":";
  append_normals(out, p.normals);
  out += ",\"areas\":";
  append_array(out, p.areas);
}

}  // namespace

std::string format_double(double value) {
  if (value == 0.0) return "0";  // also folds away negative zero
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::string to_off(const Polytope& p) {
  std::string out = "OFF\n";
  out += std::to_string(p.vertices.size());
  out += ' ';
  out += std::to_string(p.faces.size());
  out += " 0\n";
  for (const Vec3& v : p.vertices) {
    out += format_double(v.x);
    out += ' ';
    out += format_double(v.y);
    out += ' ';
    out += format_double(v.z);
    out += '\n';
  }
  for (const Face& f : p.faces) {
    out += std::to_string(f.vertex_indices.size());
    for (std::size_t idx : f.vertex_indices) {
      out += ' ';
      out += std::to_string(idx);
    }
    out += '\n';
  }
  return out;
}

std::string polytope_report_json(const Polytope& p) {
  std::string out = "{\"vertices\":[";
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    if (i > 0) out += ',';
    append_vec3(out, p.vertices[i]);
  }
  out += "],\"faces\":[";
  for (std::size_t f = 0; f < p.faces.size(); ++f) {
    if (f > 0) out += ',';
    out += "{\"normal\":";
    append_vec3(out, p.faces[f].normal.vec());
    out += ",\"vertex_indices\":[";
    for (std::size_t i = 0; i < p.faces[f].vertex_indices.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(p.faces[f].vertex_indices[i]);
    }
    out += "],\"perimeter\":";
    append_number(out, p.faces[f].perimeter);
    out += ",\"area\":";
    append_number(out, p.faces[f].area);
    out += '}';
  }
  out += "],\"volume\":";
  append_number(out, volume(p));
  out += '}';
  return out;
}

std::string classification_json(const PerimeterVector& L, const FamilyClassification& c) {
  std::string out;
  append_classification(out, L, c);
  return out;
}

std::string probe_report_json(const ProbeReport& r) {
  std::string out = "{\"center\":";
  append_array5(out, r.center);
  out += ",\"direction\":";
  append_array5(out, r.direction);
  out += ",\"samples\":[";
  for (std::size_t i = 0; i < r.samples.size(); ++i) {
    if (i > 0) out += ',';
    out += "{\"t\":";
    append_number(out, r.samples[i].t);
    out += ",\"verdict\":\"";
    out += family_type_name(r.samples[i].verdict.verdict);
    out += "\",\"residual\":";
    append_number(out, r.samples[i].verdict.residual);
    out += '}';
  }
  out += "],\"half_branch_count\":";
  out += std::to_string(r.half_branch_count);
  out += '}';
  return out;
}

std::string probe_report_csv(const ProbeReport& r) {
  std::string out = "t,member,type\n";
  for (const ProbeSample& s : r.samples) {
    out += format_double(s.t);
    out += ',';
    out += s.verdict.verdict == FamilyType::NotMember ? '0' : '1';
    out += ',';
    out += family_type_name(s.verdict.verdict);
    out += '\n';
  }
  return out;
}

std::string witness_json(const ConvexityWitness& w) {
  std::string out = "{\"p1\":";
  append_classification(out, w.p1, w.verdict_p1);
  out += ",\"p2\":";
  append_classification(out, w.p2, w.verdict_p2);
  out += ",\"mid\":";
  append_classification(out, w.mid, w.verdict_mid);
  out += '}';
  return out;
}

std::string condition_report_json(const ConditionReport& r) {
  std::string out = "{\"normals_ok\":";
  append_bool(out, r.normals_ok);
  out += ",\"areas_positive\":";
  append_bool(out, r.areas_positive);
  out += ",\"closure_ok\":";
  append_bool(out, r.closure_ok);
  out += ",\"closure_residual\":";
  append_number(out, r.closure_residual);
  out += '}';
  return out;
}

std::string problem_json(const MinkowskiProblem& p) {
  std::string out = "{";
  append_problem_fields(out, p);
  out += '}';
  return out;
}

std::string solution_json(const MinkowskiProblem& p, const MinkowskiSolution& s) {
  std::string out = "{";
  append_problem_fields(out, p);
  out += ",\"support\":";
  append_array(out, s.support);
  out += ",\"area_residual\":";
  append_number(out, s.area_residual);
  out += ",\"iterations\":";
  out += std::to_string(s.iterations);
  out += ",\"polytope\":";
  out += polytope_report_json(s.polytope);
  out += '}';
  return out;
}

MinkowskiProblem parse_problem_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("problem JSON: parse error: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("normals") || !doc.contains("areas") ||
      !doc["normals"].is_array() || !doc["areas"].is_array()) {
    throw std::invalid_argument("problem JSON: expected object with \"normals\" and \"areas\" arrays");
  }
  if (doc["normals"].size() != doc["areas"].size()) {
    throw std::invalid_argument("problem JSON: normals and areas must have equal length");
  }

  MinkowskiProblem problem;
  for (const auto& entry : doc["normals"]) {
    if (!entry.is_array() || entry.size() != 3 || !entry[0].is_number() ||
        !entry[1].is_number() || !entry[2].is_number()) {
      throw std::invalid_argument("problem JSON: each normal must be a 3-vector of numbers");
    }
    const Vec3 v{entry[0].get<double>(), entry[1].get<double>(), entry[2].get<double>()};
    if (!is_finite(v) || std::abs(norm(v) - 1.0) > 1e-9) {
      throw std::invalid_argument("problem JSON: normals must have unit length within 1e-9");
    }
    problem.normals.push_back(UnitVector::normalized(v));
  }
  for (const auto& entry : doc["areas"]) {
    if (!entry.is_number()) {
      throw std::invalid_argument("problem JSON: areas must be numbers");
    }
    const double a = entry.get<double>();
    if (!std::isfinite(a)) {
      throw std::invalid_argument("problem JSON: areas must be finite");
    }
    problem.areas.push_back(a);
  }
  return problem;
}

}  // namespace confgeo
