#include "commands.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

#include "gaussvd/io.hpp"

namespace gaussvd::cli {

namespace fs = std::filesystem;

namespace {

void write_atomic(const fs::path& path, const std::string& text) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(Errc::invalid_argument, "cannot write '" + tmp.string() + "'");
    out << text;
    if (!out.flush()) throw Error(Errc::invalid_argument, "write failed for '" + tmp.string() + "'");
  }
  fs::rename(tmp, path);
}

void emit(const Options& opts, const std::string& name, const Json& report, const std::string& summary) {
  fs::create_directories(opts.out);
  write_atomic(fs::path(opts.out) / name, report.dump(2) + "\n");
  write_atomic(fs::path(opts.out) / "summary.txt", summary);
  std::cout << summary;
}

Json header(const std::string& command) {
  Json j;
  j["schema"] = kSchema;
  j["command"] = command;
  return j;
}

AnalysisConfig load_config(const Options& opts) {
  AnalysisConfig cfg = parse_analysis_config(load_json(opts.config));
  if (opts.mode) cfg.mode = parse_mode(*opts.mode);
  if (opts.strict) cfg.roots.strict = true;
  if (opts.precision) cfg.precision = *opts.precision;
  return cfg;
}

struct PlaneConfig {
  HyperplaneSet hs;
  int k = 0;
  std::optional<int> N;
};

PlaneConfig load_planes(const Options& opts) {
  const Json j = load_json(opts.config);
  if (!j.is_object()) throw Error(Errc::parse, "/: configuration must be a JSON object");
  auto it = j.find("hyperplanes");
  if (it == j.end()) throw Error(Errc::parse, "/: missing field 'hyperplanes'");
  PlaneConfig pc{parse_hyperplanes(*it, "/hyperplanes"), 0, std::nullopt};
  pc.k = static_cast<int>(pc.hs.dim()) - 1;
  if (auto n = j.find("N"); n != j.end() && !n->is_null()) {
    if (!n->is_number_integer()) throw Error(Errc::parse, "/N: expected an integer");
    pc.N = n->get<int>();
  }
  return pc;
}

template <class F>
int guarded(F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    if (e.code() == Errc::theorem_satisfied) {
      std::cerr << "theorem already satisfied: " << e.what() << "\n";
      return kTheoremSatisfied;
    }
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
}

void check_internal(const Analysis& a) {
  if (a.axioms && !a.axioms->ok()) {
    throw Error(Errc::internal, "computed weights fail axiom " + std::to_string(a.axioms->violations.front().axiom) + ": " +
                                    a.axioms->violations.front().message);
  }
}

}  // namespace

int cmd_analyze(const Options& opts) {
  return guarded([&] {
    const AnalysisConfig cfg = load_config(opts);
    const Analysis a = analyze(cfg);
    check_internal(a);
    Json report = header("analyze");
    report["precision"] = cfg.precision;
    report["analysis"] = analysis_to_json(a);
    std::string summary = analysis_summary(a);
    if (cfg.metric && a.pack) {
      const MetricRun run = run_metric(a, cfg);
      report["metric"] = metric_to_json(run);
      summary += metric_summary(run);
    }
    emit(opts, "report.json", report, summary);
    return a.theorem.holds ? kOk : kViolated;
  });
}

int cmd_metric(const Options& opts) {
  return guarded([&] {
    const AnalysisConfig cfg = load_config(opts);
    const Analysis a = analyze(cfg);
    check_internal(a);
    const MetricRun run = run_metric(a, cfg);
    if (!run.claim1.ok()) throw Error(Errc::internal, "singular divisor order exceeds the claimed bound");
    Json report = header("metric");
    report["precision"] = cfg.precision;
    report["analysis"] = analysis_to_json(a);
    report["metric"] = metric_to_json(run);
    emit(opts, "report.json", report, analysis_summary(a) + metric_summary(run));
    return static_cast<int>(kOk);
  });
}

int cmd_nochka(const Options& opts) {
  return guarded([&] {
    const PlaneConfig pc = load_planes(opts);
    const int N = pc.N.value_or(minimal_subgeneral_n(pc.hs, pc.k));
    if (pc.N && !is_n_subgeneral(pc.hs, N, pc.k)) {
      throw Error(Errc::precondition, "hyperplanes are not in " + std::to_string(N) + "-subgeneral position");
    }
    const NochkaWeights w = compute_weights(pc.hs, N, pc.k);
    const AxiomReport axioms = verify_axioms(w, pc.hs, N, pc.k);
    Json report = header("nochka");
    report["k"] = pc.k;
    report["N"] = N;
    report["q"] = pc.hs.size();
    report["weights"] = weights_to_json(w);
    report["axioms"] = axioms_to_json(axioms);
    Json prov;
    prov["subsets_enumerated"] = w.provenance.subsets_enumerated;
    prov["subset_constraints"] = w.provenance.subset_constraints;
    prov["total_constraints"] = w.provenance.total_constraints;
    prov["lp_solves"] = w.provenance.lp_solves;
    prov["pivots"] = w.provenance.pivots;
    prov["objective"] = w.provenance.objective;
    prov["theta_minimal"] = w.provenance.theta_minimal;
    report["provenance"] = prov;

    std::string summary = "k = " + std::to_string(pc.k) + ", N = " + std::to_string(N) +
                          ", q = " + std::to_string(pc.hs.size()) + "\ntheta = " + to_string(w.theta) + "\n";
    for (std::size_t j = 0; j < w.omega.size(); ++j) {
      summary += "  " + pc.hs[j].label + ": omega = " + to_string(w.omega[j]) + "\n";
    }
    summary += "axioms (i)-(iv): " + std::string(axioms.ok() ? "verified" : "FAILED") + "\n";
    for (const auto& v : axioms.violations) summary += "  axiom " + std::to_string(v.axiom) + ": " + v.message + "\n";
    emit(opts, "weights.json", report, summary);
    return axioms.ok() ? static_cast<int>(kOk) : static_cast<int>(kError);
  });
}

int cmd_position(const Options& opts) {
  return guarded([&] {
    const PlaneConfig pc = load_planes(opts);
    IndexSet all(pc.hs.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    const int rank = span_dimension(pc.hs, all);
    Json report = header("position");
    report["k"] = pc.k;
    report["q"] = pc.hs.size();
    report["span_dimension"] = rank;
    std::string summary = "k = " + std::to_string(pc.k) + ", q = " + std::to_string(pc.hs.size()) +
                          ", span dimension " + std::to_string(rank) + "\n";
    if (rank == pc.k + 1) {
      const int N = minimal_subgeneral_n(pc.hs, pc.k);
      report["minimal_N"] = N;
      report["general_position"] = N == pc.k;
      summary += "minimal subgeneral N = " + std::to_string(N) + (N == pc.k ? " (general position)" : "") + "\n";
      if (pc.N) {
        const bool ok = is_n_subgeneral(pc.hs, *pc.N, pc.k);
        report["requested_N"] = *pc.N;
        report["requested_N_holds"] = ok;
        summary += std::to_string(*pc.N) + "-subgeneral: " + (ok ? "yes" : "no") + "\n";
      }
    } else {
      report["minimal_N"] = nullptr;
      report["general_position"] = false;
      summary += "hyperplanes do not span; no subgeneral position\n";
    }
    emit(opts, "report.json", report, summary);
    return static_cast<int>(kOk);
  });
}

}  // namespace gaussvd::cli
