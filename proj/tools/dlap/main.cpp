#include "commands.hpp"

#include <dlap/error.hpp>
#include <dlap/harness.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <functional>
#include <iostream>

using namespace dlap::cli;

namespace {

std::uint64_t default_seed() {
  if (const char* env = std::getenv("DLAP_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring non-numeric DLAP_SEED='" << env << "'\n";
    }
  }
  return 0;
}

void add_common(CLI::App* app, CommonFlags& c, bool csv) {
  app->add_flag_callback("--json", [&c] { c.format = Format::Json; }, "Emit JSON")->group("Output");
  if (csv) app->add_flag_callback("--csv", [&c] { c.format = Format::Csv; }, "Emit CSV tables")->group("Output");
  app->add_option("--tol", c.tol, "Tolerance for bound checks")->capture_default_str()->check(CLI::PositiveNumber);
}

void add_input(CLI::App* app, InputFlags& in) {
  app->add_option("--edges", in.edges, "Edge-list file ('-' reads stdin)")->group("Input");
  app->add_option("--graph6", in.graph6, "graph6 string")->group("Input");
  app->add_option("--metric", in.metric, "Metric CSV file (n rows of n numbers)")->group("Input");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Normalized distance Laplacian spectra, distance-Cheeger constants and bound checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "dlap 0.1.0");

  CommonFlags common;
  common.seed = default_seed();
  std::function<int()> run;

  SpectrumFlags spectrum;
  auto* sp = app.add_subcommand("spectrum", "Spectrum and spectral bounds of a graph or metric");
  add_input(sp, spectrum.input);
  add_common(sp, common, true);
  sp->add_option("--jacobi-tol", spectrum.jacobi_tol, "Jacobi convergence tolerance")->capture_default_str();
  sp->callback([&] { run = [&] { return cmd_spectrum(spectrum, common); }; });

  CheegerFlags cheeger;
  auto* ch = app.add_subcommand("cheeger", "Exact distance-Cheeger constant");
  add_input(ch, cheeger.input);
  add_common(ch, common, true);
  ch->add_option("--cheeger-cap", cheeger.cap, "Largest n for exhaustive enumeration")->capture_default_str();
  ch->callback([&] { run = [&] { return cmd_cheeger(cheeger, common); }; });

  CayleyFlags cayley;
  auto* ca = app.add_subcommand("cayley", "Closed-form spectrum of an abelian Cayley graph or invariant metric");
  ca->add_option("--group", cayley.group, "Group, e.g. Z4, Z2xZ2, Z3xZ5")->required();
  ca->add_option("--set", cayley.set, "Connection set, e.g. \"1,3\" or \"(1,0),(0,1)\"");
  ca->add_option("--dvector", cayley.dvector, "Distances from the identity, comma separated, in element order");
  ca->add_flag("--random", cayley.random, "Random invariant metric from --seed");
  ca->add_option("--seed", common.seed, "RNG seed (default: $DLAP_SEED or 0)");
  add_common(ca, common, true);
  ca->callback([&] { run = [&] { return cmd_cayley(cayley, common); }; });

  CertifyFlags certify;
  auto* ce = app.add_subcommand("certify", "Randomized verification of the certificate machinery");
  ce->add_option("--trials", certify.trials, "Random draws per check")->capture_default_str();
  ce->add_option("--max-n", certify.max_n, "Largest metric size")->capture_default_str();
  ce->add_option("--max-order", certify.max_order, "Largest cyclic group for the trigonometric identity")
      ->capture_default_str();
  ce->add_option("--angles", certify.phis, "Random angles per character")->capture_default_str();
  ce->add_option("--seed", common.seed, "RNG seed (default: $DLAP_SEED or 0)");
  add_common(ce, common, true);
  ce->callback([&] { run = [&] { return cmd_certify(certify, common); }; });

  ScanFlags scan;
  auto* sc = app.add_subcommand("scan", "Batch run over a graph or metric family");
  sc->add_option("--family", scan.family,
                 "path, cycle, complete, complete-bipartite-plus, barbell, random-connected, random-cayley, "
                 "random-metric")
      ->required();
  sc->add_option("--n", scan.n, "Order or range lo..hi");
  sc->add_option("--k", scan.k, "Barbell clique size or range lo..hi");
  sc->add_option("--len", scan.len, "Barbell path length in edges (default: k)");
  sc->add_option("--a", scan.a, "complete-bipartite-plus: smaller part");
  sc->add_option("--b", scan.b, "complete-bipartite-plus: larger part");
  sc->add_option("--extra", scan.extra, "complete-bipartite-plus: edges inside the larger part");
  sc->add_option("--p", scan.p, "random-connected edge probability")->capture_default_str();
  sc->add_option("--group", scan.group, "random-cayley group, e.g. Z3xZ5");
  sc->add_option("--set-size", scan.set_size, "random-cayley minimum connection-set size")->capture_default_str();
  sc->add_option("--count", scan.count, "Instances per family member")->capture_default_str();
  sc->add_option("--seed", common.seed, "RNG seed (default: $DLAP_SEED or 0)");
  sc->add_option("--out", scan.out, "Append records to this JSONL file");
  sc->add_option("--summary", scan.summary, "Summary JSON path (default: <out>.summary.json)");
  sc->add_option("--threads", scan.threads, "Worker threads (0: all cores)")->capture_default_str();
  sc->add_flag("--classical", scan.classical, "Also compute the classical normalized-Laplacian gap");
  sc->add_flag("--skip-cheeger", scan.skip_cheeger, "Skip exact Cheeger enumeration");
  sc->add_option("--cheeger-cap", scan.cap, "Largest n for exhaustive enumeration")->capture_default_str();
  add_common(sc, common, false);
  sc->callback([&] { run = [&] { return cmd_scan(scan, common); }; });

  VerifyFlags verify;
  auto* va = app.add_subcommand("verify-all", "One-page report of every bound for a graph");
  add_input(va, verify.input);
  va->add_flag("--skip-cheeger", verify.skip_cheeger, "Skip exact Cheeger enumeration");
  va->add_option("--cheeger-cap", verify.cap, "Largest n for exhaustive enumeration")->capture_default_str();
  va->add_option("--trials", verify.trials, "Random certificate spot checks")->capture_default_str();
  va->add_option("--seed", common.seed, "RNG seed (default: $DLAP_SEED or 0)");
  add_common(va, common, true);
  va->callback([&] { run = [&] { return cmd_verify_all(verify, common); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : dlap::kExitInputError;
  }
  try {
    return run();
  } catch (const dlap::MetricError& e) {
    std::cerr << "error: invalid metric\n";
    for (const auto& v : e.violations()) std::cerr << "  " << v << "\n";
    return dlap::kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return dlap::kExitInputError;
  }
}
