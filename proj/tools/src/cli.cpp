#include "forge/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "cheeger/cmcprofile.hpp"
#include "cheeger/constructions.hpp"
#include "cheeger/errors.hpp"
#include "cheeger/gridoracle.hpp"
#include "cheeger/solver.hpp"

namespace forge {

using namespace cheeger;

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::NoSolution: return kExitNoSolution;
    case ErrorKind::NumericalFailure:
    case ErrorKind::FallbackRequired:
    case ErrorKind::NotConnected:
    case ErrorKind::EmptyRegion: return kExitNumeric;
    default: return kExitUsage;
  }
}

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr std::size_t kMaxWitnesses = 100;

Json report(const std::string& command, Json inputs, Json tolerances, Json outputs) {
  return {{"schema_version", kSchemaVersion},
          {"tool", kToolName},
          {"version", kToolVersion},
          {"command", command},
          {"inputs", std::move(inputs)},
          {"tolerances", std::move(tolerances)},
          {"outputs", std::move(outputs)}};
}

void emit(const Json& j, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-")
    out << j.dump(2) << '\n';
  else
    write_json_file(path, j);
}

Json points_json(const std::vector<Point>& ps) {
  Json a = Json::array();
  for (std::size_t i = 0; i < ps.size() && i < kMaxWitnesses; ++i) a.push_back({ps[i].x, ps[i].y});
  return a;
}

const Json* find_params(const Json& doc) {
  if (doc.contains("parameters") && doc["parameters"].is_object()) return &doc["parameters"];
  return nullptr;
}

bool has_pair(const Json& doc) { return doc.contains("cheeger_set") && doc["cheeger_set"].is_object(); }

StaircaseParams cantor_params(const Json& doc) {
  const Json* p = find_params(doc);
  if (!p || p->value("kind", "") != "cantor")
    throw UsageError("suite applies to cantor documents from `construct` only");
  StaircaseParams sp;
  sp.tau = (*p)["tau"].get<double>();
  sp.n = (*p)["n"].get<int>();
  sp.H = (*p)["H"].get<double>();
  sp.ell = (*p)["ell"].get<double>();
  return sp;
}

// pieces of E's boundary covering the arclength interval [s0, s1]
std::vector<ArcEdge> boundary_pieces(const ArcGon& E, double s0, double s1) {
  std::vector<ArcEdge> out;
  double s = 0;
  for (const auto& e : E.edges) {
    double len = e.length(), a = std::max(s0, s), b = std::min(s1, s + len);
    if (b > a && len > 0) {
      double f0 = (a - s) / len, f1 = (b - s) / len;
      Point p = f0 <= 0 ? e.start : e.at(f0), q = f1 >= 1 ? e.end : e.at(f1);
      if (p != q) out.push_back(make_edge(p, q, e.curvature));
    }
    s += len;
  }
  return out;
}

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
  }

 private:
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

void write_timing(const std::string& path, const std::string& command, const Timer& t) {
  if (path.empty()) return;
  write_json_file(path, {{"command", command}, {"seconds", t.seconds()}});
}

// ---- construct

struct ConstructArgs {
  std::string spec, out, domain_out, contact_out, timing;
};

int cmd_construct(const ConstructArgs& a, std::ostream& out) {
  Timer t;
  Json spec = read_json_file(a.spec);
  Json doc = construct_document(spec);
  Json full = {{"schema_version", kSchemaVersion},
               {"tool", kToolName},
               {"version", kToolVersion},
               {"command", "construct"},
               {"inputs", {{"spec", spec}}}};
  for (auto& [k, v] : doc.items()) full[k] = v;
  emit(full, a.out, out);
  if (!a.domain_out.empty()) write_json_file(a.domain_out, full["domain"]);
  if (!a.contact_out.empty()) {
    if (!full.contains("contact")) throw UsageError("this kind has no contact set");
    write_json_file(a.contact_out, full["contact"]);
  }
  write_timing(a.timing, "construct", t);
  return kExitOk;
}

// ---- cheeger

struct CheegerArgs {
  std::string domain, out, timing, grid_step = "auto";
  double tol = 1e-10;
  bool no_grid = false;
};

int cmd_cheeger(const CheegerArgs& a, std::ostream& out, std::ostream& err) {
  Timer t;
  Json doc = read_json_file(a.domain);
  ArcGon omega = arcgon_from_json(doc);
  validate(omega);
  double step = a.grid_step == "auto" ? default_grid_step(bbox(omega)) : 0.0;
  if (a.grid_step != "auto") {
    try {
      std::size_t used = 0;
      step = std::stod(a.grid_step, &used);
      if (used != a.grid_step.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw UsageError("--grid-step takes \"auto\" or a positive number");
    }
    if (!(step > 0)) throw UsageError("--grid-step must be positive");
  }

  CheegerOptions opt;
  opt.tol = a.tol;
  opt.grid_fallback = true;
  opt.grid_step = step;
  CheegerSolution sol = cheeger_constant(omega, opt);

  Json inputs = {{"domain_file", a.domain},
                 {"edges", omega.edges.size()},
                 {"area", area(omega)},
                 {"perimeter", perimeter(omega)}};
  Json tol = {{"tol", a.tol}, {"grid_step", step}, {"grid", !a.no_grid}};
  Json outputs = {{"solution", to_json(sol)}};
  int code = kExitOk;
  if (sol.used_grid_fallback) {
    for (const auto& w : sol.warnings) err << "warning: " << w << '\n';
    outputs["status"] = "grid-only";
  } else if (!a.no_grid) {
    Grid g = rasterize(omega, step);
    distance_transform(g);
    GridCheeger gc = grid_cheeger(g);
    double budget = std::max(1e-3, 4.0 * step * sol.h * sol.h);
    double diff = std::abs(gc.h - sol.h);
    bool agree = diff <= budget;
    outputs["grid"] = {{"step", step},
                       {"r", gc.r},
                       {"h", gc.h},
                       {"inner_components", grid_components(g, gc.r)},
                       {"discrepancy", diff},
                       {"budget", budget},
                       {"agree", agree}};
    outputs["status"] = agree ? "pass" : "fail";
    if (!agree) {
      err << "exact h = " << sol.h << " and grid h = " << gc.h << " differ by " << diff
          << " (budget " << budget << ")\n";
      code = kExitVerifyFailed;
    }
  } else {
    outputs["status"] = "pass";
  }
  emit(report("cheeger", inputs, tol, outputs), a.out, out);
  write_timing(a.timing, "cheeger", t);
  return code;
}

// ---- verify

struct VerifyArgs {
  std::string domain, suite, out, timing;
  int samples = 1000;
};

Json suite_self_cheeger(const Json& doc, int samples, bool& pass) {
  ArcGon E = has_pair(doc) ? arcgon_from_json(doc["cheeger_set"]) : arcgon_from_json(doc);
  SelfCheegerReport r = verify_self_cheeger(E, samples);
  pass = r.pass();
  Json j = to_json(r);
  j["target"] = has_pair(doc) ? "cheeger_set" : "domain";
  j["failure_count"] = r.failures.size();
  j["failures"] = points_json(r.failures);
  return j;
}

Json suite_steiner(const Json& doc, bool& pass) {
  RegionSet inner;
  double r;
  const Json* p = find_params(doc);
  if (has_pair(doc) && p && p->contains("H")) {
    r = 1.0 / (*p)["H"].get<double>();
    inner = inner_parallel(arcgon_from_json(doc["cheeger_set"]), r);
  } else {
    ArcGon omega = arcgon_from_json(doc);
    r = cheeger_constant(omega).r;
    inner = inner_parallel(omega, r);
  }
  if (inner.empty()) throw EmptyRegion("inner parallel set is empty");
  Json comps = Json::array();
  std::vector<Point> bad;
  pass = true;
  for (const auto& g : inner.components) {
    SteinerResiduals s = steiner_check(g, r);
    bool ok = s.area <= 1e-8 && s.perimeter <= 1e-8;
    pass = pass && ok;
    if (!ok) bad.push_back(g.edges.front().start);
    comps.push_back({{"area_residual", s.area}, {"perimeter_residual", s.perimeter}, {"pass", ok}});
  }
  return {{"r", r}, {"components", comps}, {"tolerance", 1e-8}, {"failures", points_json(bad)}};
}

Json suite_tangent_balls(const Json& doc, int samples, bool& pass) {
  StaircaseParams sp = cantor_params(doc);
  Profile prof(sp);
  std::vector<Point> bad;
  double worst = std::numeric_limits<double>::infinity();
  for (int i = 0; i < samples; ++i) {
    double t = sp.ell * (i + 0.5) / samples;
    TangentBallCertificate c = tangent_ball(prof, t);
    worst = std::min(worst, c.clearance);
    if (!c.contained) bad.push_back(c.center);
  }
  pass = bad.empty();
  return {{"samples", samples}, {"min_clearance", worst}, {"failure_count", bad.size()},
          {"failures", points_json(bad)}};
}

Json suite_angles(const Json& doc, bool& pass) {
  StaircaseParams sp = cantor_params(doc);
  if (sp.n < 1) throw UsageError("angles suite needs n >= 1");
  AngleReport r = arc_angles(sp);
  double central = std::abs(2 * std::sin(r.central_angle / 2) - sp.H * sp.ell * sp.tau);
  bool ok_nc = r.max_noncentral <= kPi / 2 + 1e-9;
  bool ok_c = central <= 1e-12;
  pass = ok_nc && ok_c;
  return {{"gaps", r.angles.size()},
          {"central_angle", r.central_angle},
          {"central_residual", central},
          {"max_noncentral", r.max_noncentral},
          {"max_crosscheck", r.max_crosscheck},
          {"noncentral_ok", ok_nc},
          {"central_ok", ok_c}};
}

Json suite_contact(const Json& doc, bool& pass) {
  if (!has_pair(doc)) throw UsageError("contact suite needs a document with a cheeger_set");
  ContactSet c = contact_set(arcgon_from_json(doc["cheeger_set"]), arcgon_from_json(doc));
  pass = c.size() >= 2;
  Json j = to_json(c);
  j["required_min"] = 2;
  return j;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  Timer t;
  Json doc = read_json_file(a.domain);
  if (a.samples < 1) throw UsageError("--samples must be positive");
  bool pass = false;
  Json res;
  if (a.suite == "self-cheeger")
    res = suite_self_cheeger(doc, a.samples, pass);
  else if (a.suite == "steiner")
    res = suite_steiner(doc, pass);
  else if (a.suite == "tangent-balls")
    res = suite_tangent_balls(doc, a.samples, pass);
  else if (a.suite == "angles")
    res = suite_angles(doc, pass);
  else if (a.suite == "contact")
    res = suite_contact(doc, pass);
  else
    throw UsageError("unknown suite " + a.suite);
  res["pass"] = pass;
  emit(report("verify", {{"domain_file", a.domain}, {"suite", a.suite}, {"samples", a.samples}}, Json::object(),
              res),
       a.out, out);
  if (!pass) err << a.suite << ": FAIL\n";
  write_timing(a.timing, "verify", t);
  return pass ? kExitOk : kExitVerifyFailed;
}

// ---- dimension

struct DimensionArgs {
  std::string points, out;
  int jmin = 4, jmax = 10;
};

int cmd_dimension(const DimensionArgs& a, std::ostream& out) {
  Json doc = read_json_file(a.points);
  const Json& c = doc.contains("contact") ? doc["contact"] : doc;
  DimensionReport r;
  std::string source;
  auto read_intervals = [](const Json& arr, double scale) {
    std::vector<Interval> iv;
    for (const auto& p : arr) {
      if (!p.is_array() || p.size() != 2) throw InvalidInput("interval must be [a, b]");
      iv.push_back({p[0].get<double>() / scale, p[1].get<double>() / scale});
    }
    return iv;
  };
  auto read_points = [](const Json& arr) {
    std::vector<Point> ps;
    for (const auto& p : arr) {
      if (!p.is_array() || p.size() != 2) throw InvalidInput("point must be [x, y]");
      ps.push_back({p[0].get<double>(), p[1].get<double>()});
    }
    return ps;
  };
  if (c.contains("intervals_param") && !c["intervals_param"].empty()) {
    double L = c.at("boundary_length").get<double>();
    if (!(L > 0)) throw InvalidInput("boundary_length must be positive");
    r = estimate_dimension(read_intervals(c["intervals_param"], L), a.jmin, a.jmax);
    source = "contact intervals / boundary length";
  } else if (c.contains("intervals_param")) {
    // finite contact: points mapped into the unit square by their bounding box
    auto ps = read_points(c.at("points"));
    if (ps.empty()) throw InvalidInput("contact set is empty");
    Box b;
    for (Point p : ps) b.add(p);
    double ext = std::max({b.x1 - b.x0, b.y1 - b.y0, 1e-300}) * (1 + 1e-9);
    for (Point& p : ps) p = {(p.x - b.x0) / ext, (p.y - b.y0) / ext};
    r = estimate_dimension(ps, a.jmin, a.jmax);
    source = "contact points / bounding box";
  } else if (c.contains("intervals")) {
    r = estimate_dimension(read_intervals(c["intervals"], 1.0), a.jmin, a.jmax);
    source = "intervals";
  } else if (c.contains("points") && c["points"].is_array()) {
    const Json& arr = c["points"];
    if (!arr.empty() && arr[0].is_number()) {
      std::vector<double> xs = arr.get<std::vector<double>>();
      r = estimate_dimension(xs, a.jmin, a.jmax);
      source = "points 1d";
    } else {
      r = estimate_dimension(read_points(arr), a.jmin, a.jmax);
      source = "points 2d";
    }
  } else {
    throw InvalidInput("expected \"points\", \"intervals\" or a contact set");
  }
  emit(report("dimension", {{"points_file", a.points}, {"source", source}},
              {{"jmin", a.jmin}, {"jmax", a.jmax}}, to_json(r)),
       a.out, out);
  return kExitOk;
}

// ---- render

struct RenderArgs {
  std::vector<std::string> files;
  std::string svg, layers = "omega,cheeger_set,contact";
  int width = 800;
};

int cmd_render(const RenderArgs& a) {
  if (a.files.empty()) throw UsageError("render needs at least one input file");
  std::map<std::string, bool> want;
  {
    std::stringstream ss(a.layers);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok != "omega" && tok != "cheeger_set" && tok != "inner" && tok != "contact")
        throw UsageError("unknown layer " + tok);
      want[tok] = true;
    }
  }
  std::map<std::string, Layer> by;
  for (const auto& f : a.files) {
    Json doc = read_json_file(f);
    ArcGon omega = arcgon_from_json(doc);
    if (want["omega"]) by["omega"].loops.push_back(omega);
    const Json* es = nullptr;
    if (has_pair(doc))
      es = &doc["cheeger_set"];
    else if (doc.contains("outputs") && doc["outputs"].contains("solution") &&
             doc["outputs"]["solution"]["cheeger_set"].is_object())
      es = &doc["outputs"]["solution"]["cheeger_set"];
    ArcGon E;
    if (es) E = arcgon_from_json(*es);
    if (es && want["cheeger_set"]) by["cheeger_set"].loops.push_back(E);
    if (want["inner"]) {
      double r = 0;
      if (const Json* p = find_params(doc); p && p->contains("H")) r = 1.0 / (*p)["H"].get<double>();
      else if (doc.contains("outputs") && doc["outputs"].contains("solution"))
        r = doc["outputs"]["solution"]["r"].get<double>();
      if (r > 0)
        for (auto& g : inner_parallel(omega, r).components) by["inner"].loops.push_back(g);
    }
    if (want["contact"] && doc.contains("contact") && es) {
      ContactSet c = contact_from_json(doc["contact"]);
      Layer& l = by["contact"];
      l.dots.insert(l.dots.end(), c.points.begin(), c.points.end());
      for (const auto& [s0, s1] : c.intervals_param)
        for (auto& e : boundary_pieces(E, s0, s1)) l.strokes.push_back(e);
    }
  }
  std::vector<Layer> layers;
  for (const char* name : {"omega", "cheeger_set", "inner", "contact"}) {
    auto it = by.find(name);
    if (it == by.end()) continue;
    it->second.name = name;
    const Layer& l = it->second;
    if (!l.loops.empty() || !l.strokes.empty() || !l.dots.empty()) layers.push_back(l);
  }
  if (layers.empty()) throw UsageError("no layers to render");
  std::string svg = render_svg(layers, a.width);
  std::ofstream os(a.svg, std::ios::binary);
  if (!os) throw InvalidInput("cannot write " + a.svg);
  os << svg;
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cheeger constants and sharp example domains", kToolName};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  ConstructArgs ca;
  auto* c = app.add_subcommand("construct", "build a domain from a JSON spec");
  c->add_option("spec", ca.spec, "spec file")->required();
  c->add_option("-o,--out", ca.out, "document output (default stdout)");
  c->add_option("--domain-out", ca.domain_out, "bare domain JSON");
  c->add_option("--contact-out", ca.contact_out, "contact set JSON");
  c->add_option("--timing", ca.timing, "timing sidecar JSON");

  CheegerArgs ch;
  auto* s = app.add_subcommand("cheeger", "Cheeger constant with a grid cross-check");
  s->add_option("domain", ch.domain, "domain or construct document")->required();
  s->add_option("--tol", ch.tol, "root residual tolerance")->capture_default_str();
  s->add_option("--grid-step", ch.grid_step, "grid step or auto (bbox diagonal / 2048)")->capture_default_str();
  s->add_flag("--no-grid", ch.no_grid, "skip the grid cross-check");
  s->add_option("-o,--out", ch.out, "report output (default stdout)");
  s->add_option("--timing", ch.timing, "timing sidecar JSON");

  VerifyArgs va;
  auto* v = app.add_subcommand("verify", "run a certificate suite");
  v->add_option("domain", va.domain, "domain or construct document")->required();
  v->add_option("--suite", va.suite, "suite")
      ->required()
      ->check(CLI::IsMember({"self-cheeger", "steiner", "tangent-balls", "angles", "contact"}));
  v->add_option("--samples", va.samples, "boundary or profile samples")->capture_default_str();
  v->add_option("-o,--out", va.out, "report output (default stdout)");
  v->add_option("--timing", va.timing, "timing sidecar JSON");

  DimensionArgs da;
  auto* d = app.add_subcommand("dimension", "box-counting dimension");
  d->add_option("points", da.points, "points, intervals or contact JSON")->required();
  d->add_option("--jmin", da.jmin, "coarsest dyadic level")->capture_default_str();
  d->add_option("--jmax", da.jmax, "finest dyadic level")->capture_default_str();
  d->add_option("-o,--out", da.out, "report output (default stdout)");

  RenderArgs ra;
  auto* r = app.add_subcommand("render", "SVG figure");
  r->add_option("files", ra.files, "domain or construct documents");
  r->add_option("--svg", ra.svg, "output SVG")->required();
  r->add_option("--layers", ra.layers, "comma list of omega,cheeger_set,inner,contact")->capture_default_str();
  r->add_option("--width", ra.width, "pixel width")->capture_default_str();

  std::vector<std::string> argv_s{kToolName};
  argv_s.insert(argv_s.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& x : argv_s) argv.push_back(x.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*c) return cmd_construct(ca, out);
    if (*s) return cmd_cheeger(ch, out, err);
    if (*v) return cmd_verify(va, out, err);
    if (*d) return cmd_dimension(da, out);
    if (*r) return cmd_render(ra);
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const Json::exception& e) {
    err << "error: InvalidInput: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumeric;
  }
  return kExitUsage;
}

}  // namespace forge
