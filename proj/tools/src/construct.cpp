#include <cmath>
#include <string>

#include "cheeger/constructions.hpp"
#include "cheeger/errors.hpp"
#include "forge/cli.hpp"

namespace forge {

using namespace cheeger;

namespace {

double num_or(const Json& s, const char* key, double dflt) {
  if (!s.contains(key) || s[key].is_null()) return dflt;
  if (!s[key].is_number()) throw InvalidInput(std::string("\"") + key + "\" must be a number");
  return s[key].get<double>();
}

bool is_free(const Json& s, const char* key) { return !s.contains(key) || s[key].is_null(); }

int int_of(const Json& s, const char* key) {
  if (!s.contains(key) || !s[key].is_number_integer())
    throw InvalidInput(std::string("\"") + key + "\" must be an integer");
  return s[key].get<int>();
}

// a null delta picks the midpoint of the admissible range
double pick_delta(const Json& s, double dmax) {
  if (is_free(s, "delta")) return 0.5 * dmax;
  return num_or(s, "delta", 0.0);
}

Json pair_document(Json params, const PerturbedDomain& pd, const ArcGon& E) {
  params["delta"] = pd.delta;
  params["delta_max"] = pd.delta_max;
  Json doc;
  doc["parameters"] = std::move(params);
  doc["domain"] = to_json(pd.omega);
  doc["cheeger_set"] = to_json(E);
  doc["contact"] = to_json(pd.contact);
  return doc;
}

}  // namespace

Json construct_document(const Json& spec) {
  if (!spec.is_object() || !spec.contains("kind") || !spec["kind"].is_string())
    throw InvalidInput("spec needs a string \"kind\"");
  std::string kind = spec["kind"];
  Json params = {{"kind", kind}};

  if (kind == "kgon") {
    KgonSpec ks;
    ks.k = int_of(spec, "k");
    ks.H = num_or(spec, "H", 1.0);
    params["k"] = ks.k;
    params["H"] = ks.H;
    if (is_free(spec, "rho")) {
      ks.rho = solve_rho0(ks.k, ks.H);
      params["solved"] = "rho";
    } else {
      ks.rho = num_or(spec, "rho", 0.0);
    }
    params["rho"] = ks.rho;
    params["beta"] = kgon_beta(ks);
    ArcGon E = build_kgon_domain(ks);
    PerturbationSpec p;
    p.delta = pick_delta(spec, delta_max(E));
    return pair_document(std::move(params), build_perturbed_domain(E, p), E);
  }
  if (kind == "cantor") {
    CantorDomainSpec cs;
    auto& sp = cs.params;
    sp.tau = num_or(spec, "tau", 1.0 / 3.0);
    sp.n = int_of(spec, "n");
    sp.H = num_or(spec, "H", 1.0);
    params["tau"] = sp.tau;
    params["n"] = sp.n;
    params["H"] = sp.H;
    if (is_free(spec, "ell")) {
      sp.ell = solve_ell0(sp.tau, sp.n, sp.H);
      params["solved"] = "ell";
    } else {
      sp.ell = num_or(spec, "ell", 0.0);
    }
    params["ell"] = sp.ell;
    params["alpha"] = alpha(sp.tau);
    PerturbationSpec p;
    p.bump_samples = spec.contains("bump_samples") ? int_of(spec, "bump_samples") : 8;
    params["bump_samples"] = p.bump_samples;
    ArcGon E = build_cantor_domain(cs);
    p.delta = pick_delta(spec, delta_max(cs));
    return pair_document(std::move(params), build_perturbed_domain(cs, p), E);
  }

  ArcGon g;
  if (kind == "disc") {
    double r = num_or(spec, "radius", 1.0);
    if (!(r > 0)) throw InvalidParameter("radius must be positive");
    g = make_disc({0, 0}, r);
    params["radius"] = r;
  } else if (kind == "rect" || kind == "square") {
    double w = num_or(spec, "width", num_or(spec, "side", 1.0));
    double h = kind == "square" ? w : num_or(spec, "height", w);
    if (!(w > 0) || !(h > 0)) throw InvalidParameter("rectangle sides must be positive");
    g = make_rect(0, 0, w, h);
    params["width"] = w;
    params["height"] = h;
  } else if (kind == "dumbbell") {
    double R = num_or(spec, "R", 1.0), gap = num_or(spec, "gap", 1.0), w = num_or(spec, "w", 0.1);
    g = make_dumbbell(R, gap, w);
    params["R"] = R;
    params["gap"] = gap;
    params["w"] = w;
  } else if (kind == "polygon") {
    if (!spec.contains("vertices") || !spec["vertices"].is_array())
      throw InvalidInput("polygon needs \"vertices\"");
    std::vector<Point> v;
    for (const auto& p : spec["vertices"]) {
      if (!p.is_array() || p.size() != 2) throw InvalidInput("vertex must be [x, y]");
      v.push_back({p[0].get<double>(), p[1].get<double>()});
    }
    g = make_polygon(v);
    validate(g, true);
  } else {
    throw InvalidInput("unknown kind \"" + kind + "\"");
  }
  if (spec.contains("scale")) g = scaled(g, num_or(spec, "scale", 1.0));
  Json doc;
  doc["parameters"] = std::move(params);
  doc["domain"] = to_json(g);
  return doc;
}

}  // namespace forge
