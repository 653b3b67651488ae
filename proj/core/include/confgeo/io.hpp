#pragma once

#include <string>

#include "confgeo/analysis.hpp"
#include "confgeo/family.hpp"
#include "confgeo/geometry.hpp"
#include "confgeo/minkowski.hpp"

namespace confgeo {

// All writers emit a fixed field order and format numbers with 17 significant
// digits, so identical inputs produce byte-identical files.

// Shortest-round-trip style decimal with 17 significant digits; negative zero
// collapses to "0".
std::string format_double(double value);

// Mesh text: "OFF", then "<nv> <nf> 0", then vertex lines, then per-face
// index lines "<k> i0 i1 ...".
std::string to_off(const Polytope& p);

std::string polytope_report_json(const Polytope& p);

// Verdict plus decomposition data; members carry "coefficients" (and "x","y"
// when the verdict pins down the edge parameters).
std::string classification_json(const PerimeterVector& L, const FamilyClassification& c);

std::string probe_report_json(const ProbeReport& r);

// Plot table with header "t,member,type".
std::string probe_report_csv(const ProbeReport& r);

std::string witness_json(const ConvexityWitness& w);

std::string condition_report_json(const ConditionReport& r);

std::string problem_json(const MinkowskiProblem& p);

std::string solution_json(const MinkowskiProblem& p, const MinkowskiSolution& s);

// Parse { "normals": [[x,y,z],...], "areas": [...] }. Normals must be unit
// length within 1e-9 (then re-normalized exactly). Throws
// std::invalid_argument on malformed or inconsistent input.
MinkowskiProblem parse_problem_json(const std::string& text);

}  // namespace confgeo
