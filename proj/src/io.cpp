#include "gaussvd/io.hpp"

#include <fstream>
#include <sstream>

namespace gaussvd {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(Errc::parse, (where.empty() ? std::string("/") : where) + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

const Json* optional_field(const Json& j, const char* key) {
  auto it = j.find(key);
  return it == j.end() || it->is_null() ? nullptr : &*it;
}

int parse_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<int>();
}

double parse_double(const Json& j, const std::string& where) {
  if (!j.is_number()) fail(where, "expected a number");
  return j.get<double>();
}

bool parse_bool(const Json& j, const std::string& where) {
  if (!j.is_boolean()) fail(where, "expected a boolean");
  return j.get<bool>();
}

std::complex<double> parse_point(const Json& j, const std::string& where) {
  return {parse_double(field(j, "re", where), where + "/re"), parse_double(field(j, "im", where), where + "/im")};
}

Region parse_region(const Json& j, const std::string& where) {
  Region r;
  r.r_min = parse_double(field(j, "r_min", where), where + "/r_min");
  r.r_max = parse_double(field(j, "r_max", where), where + "/r_max");
  if (auto* v = optional_field(j, "radial")) r.radial = parse_int(*v, where + "/radial");
  if (auto* v = optional_field(j, "angular")) r.angular = parse_int(*v, where + "/angular");
  if (auto* v = optional_field(j, "theta_min")) r.theta_min = parse_double(*v, where + "/theta_min");
  if (auto* v = optional_field(j, "theta_max")) r.theta_max = parse_double(*v, where + "/theta_max");
  return r;
}

MetricOptions parse_metric_options(const Json& j, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  MetricOptions m;
  if (auto* v = optional_field(j, "region")) m.region = parse_region(*v, where + "/region");
  if (auto* v = optional_field(j, "hgrid")) m.hgrid = parse_double(*v, where + "/hgrid");
  if (auto* v = optional_field(j, "probes")) {
    if (!v->is_array()) fail(where + "/probes", "expected an array");
    for (std::size_t i = 0; i < v->size(); ++i) {
      const std::string at = where + "/probes/" + std::to_string(i);
      const Json& p = (*v)[i];
      ProbeRequest req;
      if (auto* t = optional_field(p, "target")) {
        if (!(t->is_string() && t->get<std::string>() == "singular")) req.target = parse_point(*t, at + "/target");
      }
      if (auto* d = optional_field(p, "direction")) req.direction = parse_point(*d, at + "/direction");
      if (auto* s = optional_field(p, "s_start")) req.options.s_start = parse_double(*s, at + "/s_start");
      if (auto* s = optional_field(p, "s_end")) req.options.s_end = parse_double(*s, at + "/s_end");
      if (auto* s = optional_field(p, "samples")) req.options.samples = parse_int(*s, at + "/samples");
      if (auto* s = optional_field(p, "substeps")) req.options.substeps = parse_int(*s, at + "/substeps");
      m.probes.push_back(req);
    }
  }
  if (auto* v = optional_field(j, "invariance_points")) {
    if (!v->is_array()) fail(where + "/invariance_points", "expected an array");
    for (std::size_t i = 0; i < v->size(); ++i) {
      m.invariance_points.push_back(parse_point((*v)[i], where + "/invariance_points/" + std::to_string(i)));
    }
  }
  if (auto* v = optional_field(j, "schwarz")) {
    m.schwarz = std::make_pair(parse_double(field(*v, "R", where + "/schwarz"), where + "/schwarz/R"),
                               parse_int(field(*v, "grid", where + "/schwarz"), where + "/schwarz/grid"));
  }
  return m;
}

}  // namespace

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::parse, path + ": " + e.what());
  }
}

Rational parse_rational_field(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) fail(where, "expected a rational string \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

GaussianRational parse_coefficient(const Json& j, const std::string& where) {
  if (j.is_string() || j.is_number_integer()) return GaussianRational(parse_rational_field(j, where));
  if (!j.is_object()) fail(where, "expected a coefficient {\"re\": \"p/q\", \"im\": \"p/q\"}");
  Rational re = 0;
  Rational im = 0;
  if (auto* v = optional_field(j, "re")) re = parse_rational_field(*v, where + "/re");
  if (auto* v = optional_field(j, "im")) im = parse_rational_field(*v, where + "/im");
  return {re, im};
}

LaurentPoly parse_laurent(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected a list of terms {\"pow\": int, \"c\": coefficient}");
  LaurentPoly out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = where + "/" + std::to_string(i);
    const int pow = parse_int(field(j[i], "pow", at), at + "/pow");
    out += LaurentPoly::monomial(parse_coefficient(field(j[i], "c", at), at + "/c"), pow);
  }
  return out;
}

HyperplaneSet parse_hyperplanes(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) fail(where, "expected a nonempty list of hyperplanes");
  std::vector<Hyperplane> planes;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = where + "/" + std::to_string(i);
    Hyperplane h;
    if (auto* l = optional_field(j[i], "label")) {
      if (!l->is_string()) fail(at + "/label", "expected a string");
      h.label = l->get<std::string>();
    }
    const Json& coeffs = field(j[i], "coeffs", at);
    if (!coeffs.is_array()) fail(at + "/coeffs", "expected a list of coefficients");
    for (std::size_t c = 0; c < coeffs.size(); ++c) {
      h.coeffs.push_back(parse_coefficient(coeffs[c], at + "/coeffs/" + std::to_string(c)));
    }
    planes.push_back(std::move(h));
  }
  try {
    return HyperplaneSet(std::move(planes));
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

AnalysisConfig parse_analysis_config(const Json& j) {
  if (!j.is_object()) fail("", "configuration must be a JSON object");
  AnalysisConfig cfg;
  const Json* surface = optional_field(j, "surface");
  const Json* curve = optional_field(j, "curve");
  if ((surface != nullptr) == (curve != nullptr)) fail("", "exactly one of 'surface' or 'curve' is required");
  if (surface) {
    if (auto* w = optional_field(*surface, "weierstrass")) {
      cfg.surface = from_weierstrass(parse_laurent(field(*w, "f", "/surface/weierstrass"), "/surface/weierstrass/f"),
                                     parse_laurent(field(*w, "g", "/surface/weierstrass"), "/surface/weierstrass/g"));
    } else {
      const Json& comps = field(*surface, "components", "/surface");
      if (!comps.is_array()) fail("/surface/components", "expected a list");
      std::vector<LaurentPoly> gs;
      for (std::size_t i = 0; i < comps.size(); ++i) {
        gs.push_back(parse_laurent(comps[i], "/surface/components/" + std::to_string(i)));
      }
      cfg.surface = SurfaceData::from_components(std::move(gs));
    }
    if (auto* m = optional_field(*surface, "m")) {
      if (parse_int(*m, "/surface/m") != cfg.surface->m) fail("/surface/m", "does not match the number of components");
    }
  } else {
    const Json& comps = field(*curve, "components", "/curve");
    if (!comps.is_array()) fail("/curve/components", "expected a list");
    std::vector<LaurentPoly> fs;
    for (std::size_t i = 0; i < comps.size(); ++i) fs.push_back(parse_laurent(comps[i], "/curve/components/" + std::to_string(i)));
    cfg.curve = CurveRep(std::move(fs));
  }

  const Json& ann = field(j, "annulus", "");
  std::optional<Rational> t;
  if (auto* tv = optional_field(ann, "t")) t = parse_rational_field(*tv, "/annulus/t");
  cfg.annulus = AnnularEnd(parse_rational_field(field(ann, "r", "/annulus"), "/annulus/r"), t);
  cfg.hyperplanes = parse_hyperplanes(field(j, "hyperplanes", ""), "/hyperplanes");
  if (auto* v = optional_field(j, "N")) cfg.N = parse_int(*v, "/N");
  if (auto* v = optional_field(j, "mode")) {
    if (!v->is_string()) fail("/mode", "expected \"min-order\" or \"liminf\"");
    cfg.mode = parse_mode(v->get<std::string>());
  }
  if (auto* v = optional_field(j, "strict")) cfg.roots.strict = parse_bool(*v, "/strict");
  if (auto* v = optional_field(j, "tolerance")) cfg.roots.tolerance = parse_double(*v, "/tolerance");
  if (auto* v = optional_field(j, "precision")) cfg.precision = static_cast<unsigned>(parse_int(*v, "/precision"));
  if (auto* v = optional_field(j, "metric")) cfg.metric = parse_metric_options(*v, "/metric");
  return cfg;
}

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const GaussianRational& c) {
  Json j;
  j["re"] = to_string(c.re());
  j["im"] = to_string(c.im());
  return j;
}

Json to_json(const LaurentPoly& p) {
  Json out = Json::array();
  for (const auto& [pow, c] : p.terms()) {
    Json t;
    t["pow"] = pow;
    t["c"] = to_json(c);
    out.push_back(t);
  }
  return out;
}

Json to_json(std::complex<double> z) {
  Json j;
  j["re"] = z.real();
  j["im"] = z.imag();
  return j;
}

Json to_json(const Multiplicity& m) { return m.to_string(); }

Json weights_to_json(const NochkaWeights& w) {
  Json j;
  j["omega"] = Json::array();
  for (const auto& o : w.omega) j["omega"].push_back(to_string(o));
  j["theta"] = to_string(w.theta);
  return j;
}

NochkaWeights parse_weights(const Json& j) {
  NochkaWeights w;
  const Json& omega = field(j, "omega", "");
  if (!omega.is_array()) fail("/omega", "expected a list");
  for (std::size_t i = 0; i < omega.size(); ++i) w.omega.push_back(parse_rational_field(omega[i], "/omega/" + std::to_string(i)));
  w.theta = parse_rational_field(field(j, "theta", ""), "/theta");
  return w;
}

Json axioms_to_json(const AxiomReport& rep) {
  Json j;
  j["ok"] = rep.ok();
  j["violations"] = Json::array();
  for (const auto& v : rep.violations) {
    Json e;
    e["axiom"] = v.axiom;
    e["message"] = v.message;
    e["witness"] = v.witness;
    j["violations"].push_back(e);
  }
  return j;
}

Json theorem_to_json(const TheoremReport& rep) {
  Json j;
  j["k"] = rep.k;
  j["N"] = rep.N;
  j["q_total"] = rep.q_total;
  j["q_kept"] = rep.q_kept;
  j["lhs"] = to_string(rep.lhs);
  j["rhs"] = to_string(rep.rhs);
  j["slack"] = to_string(rep.slack);
  j["holds"] = rep.holds;
  j["kept"] = rep.kept;
  j["dropped"] = rep.dropped;
  j["mode"] = mode_name(rep.mode);
  return j;
}

Json exponents_to_json(const ExponentPack& p) {
  Json j;
  j["k"] = p.k;
  j["q"] = p.q;
  j["sigma"] = Json::array();
  for (const auto& s : p.st.sigma) j["sigma"].push_back(to_string(s));
  j["tau_k"] = to_string(p.st.tau_k);
  j["tau_k1"] = to_string(p.st.tau_k1);
  j["gamma"] = to_string(p.gamma);
  j["A"] = to_string(p.A);
  j["window"] = {to_string(p.window.lo), to_string(p.window.hi)};
  j["epsilon"] = to_string(p.epsilon);
  j["h"] = to_string(p.h);
  j["rho"] = to_string(p.rho);
  j["rho_star"] = to_string(p.rho_star);
  j["eps_rho_star_over_q"] = to_string(p.ratio);
  return j;
}

Json analysis_to_json(const Analysis& a) {
  Json j;
  j["m"] = a.m;
  j["k"] = a.k;
  j["isotropic"] = a.isotropic;
  j["immersed"] = a.immersed;
  j["basis"] = a.basis;
  j["curve"] = Json::array();
  for (const auto& f : a.curve.components) j["curve"].push_back(to_json(f));
  j["N"] = a.N;
  j["general_position"] = a.general_position;
  Json profile = Json::array();
  for (std::size_t i = 0; i < a.profile.size(); ++i) {
    const auto& e = a.profile.entries[i];
    Json p;
    p["label"] = a.projected[i].label;
    p["coeffs"] = Json::array();
    for (const auto& c : a.projected[i].coeffs) p["coeffs"].push_back(to_json(c));
    p["m_min_order"] = to_json(e.min_order);
    p["m_liminf"] = to_json(e.liminf);
    p["finitely_many"] = e.finitely_many;
    p["zeros"] = Json::array();
    for (const auto& r : e.census) {
      Json z = to_json(r.root);
      z["multiplicity"] = r.multiplicity;
      z["certified"] = r.certified();
      p["zeros"].push_back(z);
    }
    profile.push_back(p);
  }
  j["profile"] = profile;
  j["theorem"] = theorem_to_json(a.theorem);
  Json ell;
  ell["ell"] = to_string(a.ell.ell);
  ell["bound"] = to_string(a.ell.bound);
  ell["holds"] = a.ell.inequality_holds;
  ell["monotone"] = a.ell.monotone;
  j["ell_reduction"] = ell;
  if (a.weights) {
    j["weights"] = weights_to_json(*a.weights);
    j["weights"]["axioms"] = axioms_to_json(*a.axioms);
  }
  if (a.pack) j["exponents"] = exponents_to_json(*a.pack);
  if (a.theorem_satisfied) j["theorem_satisfied"] = *a.theorem_satisfied;
  return j;
}

Json metric_to_json(const MetricRun& run) {
  Json j;
  j["exponents"] = exponents_to_json(run.spec.pack);
  Json div = Json::array();
  for (const auto& e : run.spec.divisor) {
    Json d;
    d["factor"] = e.factor.to_string();
    d["order"] = to_string(e.order);
    d["singular"] = e.singular();
    d["roots"] = Json::array();
    for (const auto& r : e.roots) d["roots"].push_back(to_json(r));
    div.push_back(d);
  }
  j["divisor"] = div;
  Json mirrored = Json::array();
  for (const auto& e : run.symmetrized.mirrored) {
    if (e.roots.empty()) continue;
    Json d;
    d["factor"] = e.factor.to_string();
    d["order"] = to_string(e.order);
    mirrored.push_back(d);
  }
  j["mirrored_divisor"] = mirrored;
  j["inversion_constant"] = to_string(run.symmetrized.c);
  Json claim;
  claim["bound"] = to_string(run.claim1.bound);
  claim["ok"] = run.claim1.ok();
  claim["orders"] = Json::array();
  for (const auto& e : run.claim1.entries) {
    Json c;
    c["factor"] = e.factor.to_string();
    c["order"] = to_string(e.order);
    c["ok"] = e.ok;
    claim["orders"].push_back(c);
  }
  j["claim1"] = claim;
  if (run.flatness) {
    Json f;
    f["max_abs_laplacian"] = run.flatness->max_abs_laplacian;
    f["worst_point"] = to_json(run.flatness->worst_point);
    f["centers"] = run.flatness->centers;
    f["h"] = run.flatness->h;
    j["flatness"] = f;
  }
  j["invariance"] = Json::array();
  for (const auto& r : run.invariance) {
    Json v;
    v["z0"] = to_json(r.z0);
    v["relative_deviation"] = r.relative_deviation;
    v["ok"] = r.ok;
    j["invariance"].push_back(v);
  }
  j["probes"] = Json::array();
  for (const auto& [target, p] : run.probes) {
    Json v;
    v["target"] = to_json(target);
    v["s"] = p.s;
    v["partial_length"] = p.partial_length;
    v["monotone"] = p.monotone;
    v["fitted_exponent"] = p.fitted_exponent;
    if (p.exact_order) v["exact_order"] = to_string(*p.exact_order);
    v["refinement_change"] = p.refinement_change;
    j["probes"].push_back(v);
  }
  if (run.schwarz) {
    Json s;
    s["sup_coarse"] = run.schwarz->sup_coarse;
    s["sup_fine"] = run.schwarz->sup_fine;
    s["refinement_ratio"] = run.schwarz->refinement_ratio;
    j["schwarz"] = s;
  }
  return j;
}

std::string analysis_summary(const Analysis& a) {
  std::ostringstream os;
  os << "m = " << a.m << ", k = " << a.k << ", N = " << a.N << (a.general_position ? " (general position)" : "")
     << "\n";
  os << "hyperplanes: " << a.theorem.q_total << " total, " << a.theorem.q_kept << " kept (m_j > k), mode "
     << mode_name(a.theorem.mode) << "\n";
  for (std::size_t i = 0; i < a.profile.size(); ++i) {
    os << "  " << a.projected[i].label << ": m = " << a.profile.m(i).to_string() << "\n";
  }
  os << "inequality: lhs = " << to_string(a.theorem.lhs) << ", rhs = " << to_string(a.theorem.rhs) << ", "
     << (a.theorem.holds ? "holds" : "VIOLATED (impossible configuration)") << "\n";
  if (a.weights) {
    os << "weights: theta = " << to_string(a.weights->theta) << ", omega =";
    for (const auto& o : a.weights->omega) os << " " << to_string(o);
    os << (a.axioms->ok() ? " (axioms verified)" : " (AXIOM FAILURE)") << "\n";
  }
  if (a.pack) {
    os << "exponents: eps = " << to_string(a.pack->epsilon) << ", h = " << to_string(a.pack->h)
       << ", rho = " << to_string(a.pack->rho) << ", rho* = " << to_string(a.pack->rho_star)
       << ", eps rho*/q = " << to_string(a.pack->ratio) << "\n";
  }
  if (a.theorem_satisfied) os << "metric construction not applicable: " << *a.theorem_satisfied << "\n";
  return os.str();
}

std::string metric_summary(const MetricRun& run) {
  std::ostringstream os;
  std::size_t singular = 0;
  for (const auto& e : run.spec.divisor) singular += e.singular() ? 1 : 0;
  os << "divisor: " << run.spec.divisor.size() << " factor classes, " << singular << " singular in the annulus\n";
  os << "claim 1: bound " << to_string(run.claim1.bound) << ", " << (run.claim1.ok() ? "ok" : "FAILED") << "\n";
  for (const auto& e : run.claim1.entries) os << "  " << e.factor.to_string() << ": order " << to_string(e.order) << "\n";
  if (run.flatness) os << "flatness: max |Laplacian log lambda| = " << run.flatness->max_abs_laplacian << "\n";
  for (const auto& r : run.invariance) os << "invariance at " << r.z0 << ": " << r.relative_deviation << "\n";
  for (const auto& [t, p] : run.probes) {
    os << "probe to " << t << ": fitted exponent " << p.fitted_exponent;
    if (p.exact_order) os << " (exact " << to_string(*p.exact_order) << ")";
    os << ", final length " << p.partial_length.back() << "\n";
  }
  if (run.schwarz) os << "schwarz monitor: sup " << run.schwarz->sup_coarse << " -> " << run.schwarz->sup_fine << "\n";
  return os.str();
}

}  // namespace gaussvd
