#include "commands.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "network_io.hpp"
#include "report_render.hpp"
#include "topoctrl/topoctrl.hpp"

namespace topoctrl::cli {

namespace {

using nlohmann::json;

SampleMode parse_mode(const std::string& s) {
  if (s == "continuous" || s == "cont") return SampleMode::ContinuousUniform;
  if (s == "integer" || s == "int") return SampleMode::IntegerUniform;
  throw Error("unknown sample mode: " + s);
}

int effective_cap(int max_n) { return max_n > 0 ? max_n : enumeration_cap(); }

void emit(const json& report, const std::string& format, std::ostream& out) {
  if (format == "json")
    out << report.dump(2) << "\n";
  else
    out << render_text(report);
}

int exit_code_for(Status s) {
  switch (s) {
    case Status::Certified: return kExitCertified;
    case Status::NotCertified: return kExitNotCertified;
    case Status::NumericallyRefuted: return kExitRefuted;
  }
  return kExitNotCertified;
}

void write_csv(const RankReport& report, const std::string& path, std::ostream& out) {
  std::ostringstream body;
  body << "trial,rank\n";
  for (std::size_t k = 0; k < report.ranks.size(); ++k)
    body << k + 1 << "," << report.ranks[k] << "\n";
  if (path == "-") {
    out << body.str();
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error("cannot write CSV file: " + path);
  f << body.str();
}

}  // namespace

int run_check(const CheckOptions& opt, std::ostream& out) {
  const io::NetworkDocument doc = io::load_network(opt.file);
  const int cap = effective_cap(opt.max_n);

  Verdict verdict;
  PipelineResult pipeline;
  const PipelineResult* pipeline_ptr = nullptr;
  if (opt.brute_force) {
    verdict = certify_bruteforce(build_graph(doc.net), cap);
    // The brute-force route reports accessibility too, like the pipeline.
    AssumptionReport access;
    access.accessible = check_accessibility(build_graph(doc.net));
    for (const auto& [node, ok] : access.accessible) {
      (void)node;
      if (!ok) access.all_accessible = false;
    }
    verdict.assumptions = access;
  } else {
    pipeline = run_pipeline(doc.net, cap);
    verdict = pipeline.verdict;
    pipeline_ptr = &pipeline;
  }

  json refutation = nullptr;
  if (verdict.status == Status::NotCertified && opt.refute_trials > 0) {
    const SampleMode mode = parse_mode(opt.mode);
    verdict = refute_certification(doc.net, verdict, opt.refute_trials, mode, opt.seed);
    if (verdict.status == Status::NumericallyRefuted && verdict.refutation) {
      const Realization& r = *verdict.refutation;
      refutation = json_realization(r);
      refutation["trials"] = opt.refute_trials;
      refutation["mode"] = to_string(mode);
      refutation["seed"] = opt.seed;
      refutation["rank"] = controllability_rank(r);
      refutation["full_rank"] = doc.net.n;
    }
  }

  json report = check_report(opt.file, doc, verdict, pipeline_ptr, refutation);
  emit(report, opt.format, out);
  return exit_code_for(verdict.status);
}

int run_decompose(const DecomposeOptions& opt, std::ostream& out) {
  const io::NetworkDocument doc = io::load_network(opt.file);
  const std::vector<Path> paths = path_search(doc.net);
  std::set<NodeId> covered, uncovered;
  for (const Path& p : paths) covered.insert(p.nodes.begin(), p.nodes.end());
  for (NodeId i = 1; i <= doc.net.n; ++i)
    if (!covered.count(i)) uncovered.insert(i);
  emit(decompose_report(opt.file, doc, paths, uncovered), opt.format, out);
  return kExitOk;
}

int run_verify(const VerifyOptions& opt, std::ostream& out) {
  const io::NetworkDocument doc = io::load_network(opt.file);
  const SampleMode mode = parse_mode(opt.mode);
  const RankReport report = monte_carlo(doc.net, opt.trials, mode, opt.seed);
  if (!opt.csv.empty()) write_csv(report, opt.csv, out);
  emit(verify_report(opt.file, doc, report, opt.csv), opt.format, out);
  return report.deficient_trials.empty() ? kExitOk : kExitRefuted;
}

int run_assumptions(const AssumptionsOptions& opt, std::ostream& out) {
  const io::NetworkDocument doc = io::load_network(opt.file);

  AssumptionReport access;
  access.accessible = check_accessibility(build_graph(doc.net));
  for (const auto& [node, ok] : access.accessible) {
    (void)node;
    if (!ok) access.all_accessible = false;
  }

  const RowRankRefutation rr = l_matrix_refutation(doc.net, opt.trials, opt.seed);

  const bool declared = doc.net.diagonal_signs.has_value();
  bool feasible = true;
  int resamples = 0;
  if (declared) {
    try {
      const Realization probe =
          sample_realization(doc.net, SampleMode::ContinuousUniform, trial_seed(opt.seed, 0));
      resamples = probe.resamples;
    } catch (const Error&) {
      feasible = false;
    }
  }

  emit(assumptions_report(opt.file, doc, access, rr, opt.seed, declared, feasible, resamples),
       opt.format, out);
  const bool ok = access.all_accessible && !rr.refuted && feasible;
  return ok ? kExitOk : kExitAssumptionFailed;
}

}  // namespace topoctrl::cli
