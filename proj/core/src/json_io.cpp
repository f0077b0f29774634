#include "cheeger/json_io.hpp"

#include <fstream>

#include "cheeger/errors.hpp"

namespace cheeger {

namespace {

Json pt(Point p) { return Json::array({p.x, p.y}); }

Point pt_from(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw InvalidInput("point must be [x, y]");
  return {j[0].get<double>(), j[1].get<double>()};
}

Json edges(const std::vector<ArcEdge>& es) {
  Json a = Json::array();
  for (const auto& e : es) a.push_back(to_json(e));
  return a;
}

}  // namespace

Json to_json(const ArcEdge& e) {
  return {{"start", pt(e.start)}, {"end", pt(e.end)}, {"curvature", e.curvature}};
}

Json to_json(const ArcGon& g) { return {{"edges", edges(g.edges)}}; }

Json to_json(const RegionSet& s) {
  Json a = Json::array();
  for (const auto& c : s.components) a.push_back(to_json(c));
  return {{"components", a}};
}

Json to_json(const Profile& p) { return {{"edges", edges(p.arc_chain())}, {"closed", false}}; }

Json to_json(const CantorStage& s) {
  Json iv = Json::array();
  for (const auto& [a, b] : s.intervals) iv.push_back({a, b});
  return {{"tau", s.tau}, {"n", s.n}, {"intervals", iv}};
}

Json to_json(const DimensionReport& d) {
  return {{"scales", d.scales}, {"counts", d.counts}, {"slope", d.slope}, {"r2", d.r2}};
}

Json to_json(const CheegerSolution& s) {
  Json j = {{"r", s.r},
            {"h", s.h},
            {"residual", s.residual},
            {"iterations", s.iterations},
            {"no_neck_certified", s.no_neck_certified},
            {"used_grid_fallback", s.used_grid_fallback},
            {"inner_components", s.inner_components},
            {"warnings", s.warnings}};
  j["cheeger_set"] = s.cheeger_set.edges.empty() ? Json(nullptr) : to_json(s.cheeger_set);
  return j;
}

Json to_json(const ContactSet& c) {
  Json pts = Json::array(), iv = Json::array();
  for (Point p : c.points) pts.push_back(pt(p));
  for (const auto& [a, b] : c.intervals_param) iv.push_back({a, b});
  return {{"points", pts},
          {"intervals_param", iv},
          {"boundary_length", c.boundary_length},
          {"size", c.size()},
          {"warnings", c.warnings}};
}

Json to_json(const SelfCheegerReport& r) {
  Json f = Json::array();
  for (Point p : r.failures) f.push_back(pt(p));
  return {{"r_star", r.r_star}, {"samples", r.samples}, {"pass", r.pass()}, {"failures", f}};
}

ArcEdge edge_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("start") || !j.contains("end"))
    throw InvalidInput("edge needs start and end");
  double k = 0.0;
  if (j.contains("curvature")) {
    if (!j["curvature"].is_number()) throw InvalidInput("curvature must be a number");
    k = j["curvature"].get<double>();
  }
  return {pt_from(j["start"]), pt_from(j["end"]), k};
}

ArcGon arcgon_from_json(const Json& j) {
  if (j.is_object() && !j.contains("edges") && j.contains("domain")) return arcgon_from_json(j["domain"]);
  if (!j.is_object() || !j.contains("edges") || !j["edges"].is_array())
    throw InvalidInput("expected {\"edges\": [...]}");
  if (j.contains("closed") && j["closed"] == false) throw InvalidInput("open chain is not a domain");
  ArcGon g;
  for (const auto& e : j["edges"]) g.edges.push_back(edge_from_json(e));
  return g;
}

CantorStage cantor_stage_from_json(const Json& j) {
  CantorStage s;
  try {
    s.tau = j.at("tau").get<double>();
    s.n = j.at("n").get<int>();
    for (const auto& iv : j.at("intervals")) s.intervals.push_back({iv.at(0).get<double>(), iv.at(1).get<double>()});
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("bad Cantor stage: ") + e.what());
  }
  return s;
}

ContactSet contact_from_json(const Json& j) {
  ContactSet c;
  try {
    for (const auto& p : j.at("points")) c.points.push_back(pt_from(p));
    for (const auto& iv : j.at("intervals_param"))
      c.intervals_param.push_back({iv.at(0).get<double>(), iv.at(1).get<double>()});
    c.boundary_length = j.value("boundary_length", 0.0);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("bad contact set: ") + e.what());
  }
  return c;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace cheeger
