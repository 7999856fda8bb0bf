#include "commands.hpp"

#include <dlap/cayley.hpp>
#include <dlap/certify.hpp>
#include <dlap/cheeger.hpp>
#include <dlap/constants.hpp>
#include <dlap/error.hpp>
#include <dlap/families.hpp>
#include <dlap/harness.hpp>
#include <dlap/random.hpp>
#include <dlap/spectral.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iostream>
#include <numbers>

namespace dlap::cli {

namespace {

Table checks_table(const CheckReport& r, const std::string& title) {
  Table t{title, {"check", "status", "value", "bound", "margin"}, {}};
  for (const auto& c : r.checks()) t.add({c.name, c.passed ? "pass" : "FAIL", num(c.value), num(c.bound), num(c.margin)});
  return t;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

std::string equality_text(const EqualityClassification& c) {
  switch (c.kind) {
    case EqualityClass::EvenExtremal:
    case EqualityClass::OddExtremal:
      return "cheeger-floor equality: " + c.label;
    case EqualityClass::N5Exceptional:
      return "n=5 exceptional equality: " + c.label;
    case EqualityClass::None:
      break;
  }
  return "no equality (h strictly above the floor)";
}

nlohmann::json equality_json(const EqualityClassification& c) {
  return {{"class", to_string(c.kind)},
          {"label", c.label},
          {"part", c.part},
          {"larger_part_edges", c.larger_part_edges},
          {"edge_limit", c.edge_limit},
          {"edge_limit_alt", c.edge_limit_alt},
          {"text", equality_text(c)}};
}

int verdict(const CheckReport& proved, bool conjecture_violation) {
  if (!proved.passed()) return kExitProvedBoundViolation;
  return conjecture_violation ? kExitConjectureViolation : kExitOk;
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text, const char* flag) {
  auto parse_one = [&](std::string_view s) {
    std::size_t v = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size() || s.empty()) {
      throw ValidationError(std::string("bad value for ") + flag + ": '" + text + "'");
    }
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto v = parse_one(text);
    return {v, v};
  }
  const auto lo = parse_one(std::string_view(text).substr(0, dots));
  const auto hi = parse_one(std::string_view(text).substr(dots + 2));
  if (lo > hi) throw ValidationError(std::string("empty range for ") + flag + ": '" + text + "'");
  return {lo, hi};
}

nlohmann::json spectrum_json(const Spectrum& s) {
  auto j = to_json(s);
  j["gap"] = spectral_gap(s);
  j["lambda_max"] = s.eigenvalues.back();
  return j;
}

}  // namespace

int cmd_spectrum(const SpectrumFlags& f, const CommonFlags& c) {
  const auto in = load_input(f.input);
  const std::size_t n = in.metric.size();
  const Spectrum s = ndl_spectrum(in.metric, {.tol = f.jacobi_tol, .max_sweeps = 100});
  const CheckReport checks = check_spectrum_bounds(s, n, c.tol);
  const double gap = spectral_gap(s);
  const bool conjecture = in.graph && gap < kTwoThirds - c.tol;

  Document doc;
  doc.json = {{"source", in.source},
              {"n", n},
              {"from_graph", in.metric.from_graph},
              {"tolerance", c.tol},
              {"jacobi_tolerance", f.jacobi_tol},
              {"spectrum", spectrum_json(s)},
              {"checks", checks.to_json()},
              {"conjecture_two_thirds", in.graph ? nlohmann::json(!conjecture) : nlohmann::json(nullptr)}};
  Table summary{"normalized distance Laplacian", {"", ""}, {}};
  summary.add({"source", in.source});
  summary.add({"n", std::to_string(n)});
  summary.add({"kind", in.metric.from_graph ? "graph metric" : "finite metric"});
  summary.add({"gap", num(gap)});
  summary.add({"lambda_max", num(s.eigenvalues.back())});
  summary.add({"residual", num(s.residual)});
  summary.add({"tolerance", num(c.tol)});
  if (in.graph) summary.add({"gap >= 2/3 (conjectured)", conjecture ? "VIOLATED" : "holds"});
  Table ev{"eigenvalues", {"index", "eigenvalue"}, {}};
  for (std::size_t i = 0; i < s.size(); ++i) ev.add({std::to_string(i), num(s.eigenvalues[i])});
  doc.tables = {summary, checks_table(checks, "bounds"), ev};
  emit(std::cout, doc, c.format);
  return verdict(checks, conjecture);
}

int cmd_cheeger(const CheegerFlags& f, const CommonFlags& c) {
  const auto in = load_input(f.input);
  const std::size_t n = in.metric.size();
  const double gap = spectral_gap(ndl_spectrum(in.metric));
  Document doc;
  Table summary{"distance Cheeger constant", {"", ""}, {}};
  summary.add({"source", in.source});
  summary.add({"n", std::to_string(n)});
  CheckReport checks;
  doc.json = {{"source", in.source}, {"n", n}, {"tolerance", c.tol}, {"gap", gap}};
  if (in.metric.exact) {
    const auto& d = *in.metric.exact;
    const auto res = cheeger_exact(d, transmission(d), {.max_n = f.cap});
    const auto bounds = check_cheeger_bounds(res, gap, n, c.tol);
    checks = bounds.checks;
    doc.json["cheeger"] = to_json(res, n);
    doc.json["floor"] = {{"num", bounds.floor.num()}, {"den", bounds.floor.den()}};
    doc.json["attains_floor"] = bounds.attains_floor;
    doc.json["slack_at_cut"] = cut_slack(d, res.cut.subset).to_double();
    summary.add({"h", res.h.str() + " (" + num(res.h.to_double()) + ")"});
    summary.add({"cut", join(res.cut.vertices(n))});
    summary.add({"optimal cuts", std::to_string(res.ties)});
    summary.add({"floor", bounds.floor.str()});
    summary.add({"attains floor", bounds.attains_floor ? "yes" : "no"});
    if (in.graph) {
      const auto cls = classify_equality(*in.graph);
      doc.json["equality"] = equality_json(cls);
      summary.add({"equality", equality_text(cls)});
    }
  } else {
    const auto& d = in.metric.real;
    const auto res = cheeger_exact(d, transmission(d), {.max_n = f.cap});
    doc.json["cheeger"] = to_json(res, n);
    checks.strictly_above("h > 1/3", res.h, 1.0 / 3.0, 0.0);
    checks.at_least("h^2/2 <= gap", gap, res.h * res.h / 2, c.tol);
    checks.at_most("gap <= 2h", gap, 2 * res.h, c.tol);
    summary.add({"h", num(res.h)});
    summary.add({"cut", join(res.cut.vertices(n))});
  }
  summary.add({"gap", num(gap)});
  summary.add({"tolerance", num(c.tol)});
  doc.json["checks"] = checks.to_json();
  doc.tables = {summary, checks_table(checks, "bounds")};
  emit(std::cout, doc, c.format);
  return verdict(checks, false);
}

int cmd_cayley(const CayleyFlags& f, const CommonFlags& c) {
  const AbelianGroup g = AbelianGroup::parse(f.group);
  const int given = !f.set.empty() + !f.dvector.empty() + f.random;
  if (given != 1) throw ValidationError("give exactly one of --set, --dvector, --random");
  std::optional<SymmetricDVector> d;
  std::string source;
  if (!f.set.empty()) {
    const auto conn = parse_connection_set(g, f.set);
    d = dvector_from_graph(g, cayley_graph(g, conn));
    source = "Cay(" + g.name() + ", {" + f.set + "})";
  } else if (!f.dvector.empty()) {
    std::vector<double> vals;
    for (const auto& row : parse_metric_csv(f.dvector))
      for (double x : row) vals.push_back(x);
    d = SymmetricDVector(g, vals);
    source = "d-vector on " + g.name();
  } else {
    SplitMix64 rng(c.seed);
    d = random_dvector(g, rng);
    source = "random invariant metric on " + g.name() + " (seed " + std::to_string(c.seed) + ")";
  }
  const Spectrum s = cayley_spectrum(*d);
  const CheckReport checks = check_cayley_bounds(s, g, c.tol);
  const double c1 = verified_c1();

  Document doc;
  Table summary{"abelian Cayley spectrum", {"", ""}, {}};
  summary.add({"source", source});
  summary.add({"order", std::to_string(g.order())});
  summary.add({"gap", num(spectral_gap(s))});
  summary.add({"C1", num(c1)});
  summary.add({"1 - 1/C1", num(1 - 1 / c1)});
  summary.add({"tolerance", num(c.tol)});
  Table chars{"characters", {"character", "eigenvalue", "type", "margin"}, {}};
  nlohmann::json jchars = nlohmann::json::array();
  double min_margin = std::numeric_limits<double>::infinity();
  for (const auto& ev : character_eigenvalues(*d)) {
    const Character chi(g, ev.character);
    std::string type = "trivial";
    std::optional<double> margin;
    if (!chi.trivial()) {
      type = chi.is_real() ? "real" : "complex";
      margin = chi.is_real() ? real_character_margin(*d, chi).margin : complex_character_margin(*d, chi);
      min_margin = std::min(min_margin, *margin);
    }
    chars.add({g.element_string(ev.character), num(ev.value), type, margin ? num(*margin) : "-"});
    jchars.push_back({{"character", g.element_string(ev.character)},
                      {"eigenvalue", ev.value},
                      {"type", type},
                      {"margin", margin ? nlohmann::json(*margin) : nlohmann::json(nullptr)}});
  }
  CheckReport all = checks;
  if (g.order() > 1 && std::isfinite(min_margin)) all.at_least("character margins >= 0", min_margin, 0.0, c.tol);
  doc.json = {{"source", source},  {"group", g.name()},       {"order", g.order()},
              {"c1", c1},          {"tolerance", c.tol},      {"dvector", std::vector<double>(d->values().begin(), d->values().end())},
              {"spectrum", spectrum_json(s)}, {"characters", jchars}, {"checks", all.to_json()}};
  doc.tables = {summary, checks_table(all, "bounds"), chars};
  emit(std::cout, doc, c.format);
  return verdict(all, false);
}

int cmd_certify(const CertifyFlags& f, const CommonFlags& c) {
  if (f.max_n < 2) throw ValidationError("--max-n must be at least 2");
  if (f.max_order < 3) throw ValidationError("--max-order must be at least 3");
  const SplitMix64 root(c.seed);
  double min_form = std::numeric_limits<double>::infinity();
  double worst_symmetry = 0, worst_rows = 0, min_pair = std::numeric_limits<double>::infinity();
  std::size_t scheme_failures = 0;
  for (std::size_t i = 0; i < f.trials; ++i) {
    SplitMix64 rng = root.split(i);
    const std::size_t n = 2 + rng.below(f.max_n - 1);
    const RealDistanceMatrix d =
        i % 2 == 0 ? random_metric(n, rng).real : to_real(bfs_apsp(random_connected_graph(n, 0.4, rng)));
    const auto y = random_balanced_unit(n, rng);
    min_form = std::min(min_form, balanced_form(d, y));
    const auto rep = verify_weight_scheme(d, y, 1e-10);
    worst_symmetry = std::max(worst_symmetry, rep.symmetry_error);
    worst_rows = std::max(worst_rows, rep.row_sum_error);
    min_pair = std::min(min_pair, rep.pair_min);
    scheme_failures += !rep.passed();
  }

  const auto opt = ab_optimum();
  const TrigCertificate cert{opt.A, opt.B};
  SplitMix64 prng = root.split(0x7269);
  double worst_residual = 0;
  std::size_t characters = 0;
  for (std::size_t n = 3; n <= f.max_order; ++n) {
    const AbelianGroup g({n});
    for (std::size_t k = 1; k < n; ++k) {
      const Character chi(g, k);
      if (chi.is_real()) continue;
      ++characters;
      for (std::size_t i = 0; i < f.phis; ++i)
        worst_residual = std::max(worst_residual, trig_identity_residual(cert, g, chi, prng.uniform(0, 2 * std::numbers::pi)));
    }
  }

  const std::vector<std::string> groups{"Z5", "Z6", "Z8", "Z9", "Z2xZ4", "Z3xZ3", "Z15", "Z2xZ2xZ2", "Z4xZ3", "Z7"};
  double min_real = std::numeric_limits<double>::infinity(), min_complex = min_real;
  for (std::size_t i = 0; i < f.trials; ++i) {
    SplitMix64 rng = root.split(0x10000 + i);
    const auto g = AbelianGroup::parse(groups[i % groups.size()]);
    const auto d = random_dvector(g, rng);
    for (std::size_t k = 1; k < g.order(); ++k) {
      const Character chi(g, k);
      if (chi.is_real()) min_real = std::min(min_real, real_character_margin(d, chi).margin);
      else min_complex = std::min(min_complex, complex_character_margin(d, chi));
    }
  }
  const double c1 = c1_constant();

  CheckReport checks;
  checks.at_least("balanced form >= 0", min_form, 0.0, c.tol);
  checks.at_most("(i) weight symmetry error", worst_symmetry, 0.0, 1e-10);
  checks.at_least("(ii) paired weights >= 0", min_pair, 0.0, 1e-10);
  checks.at_most("(iii) row-sum error", worst_rows, 0.0, 1e-10);
  checks.at_most("trigonometric identity residual", worst_residual, 0.0, 1e-10);
  checks.at_least("real-character margin >= 0", min_real, 0.0, c.tol);
  checks.at_least("complex-character margin >= 0", min_complex, 0.0, c.tol);
  checks.at_most("|C1(quartic) - C1(2x2 form)|", std::abs(c1 - opt.value), 0.0, 1e-10);
  checks.strictly_above("1 - 1/C1 > 0.718", 1 - 1 / c1, kOddCayleyGapFloor, 0.0);

  Document doc;
  doc.json = {{"seed", c.seed},
              {"tolerance", c.tol},
              {"trials", {{"metric_pairs", f.trials}, {"max_n", f.max_n}, {"characters", characters},
                          {"angles_per_character", f.phis}, {"invariant_metrics", f.trials}}},
              {"balanced_form", {{"min", min_form}}},
              {"weight_scheme", {{"max_symmetry_error", worst_symmetry}, {"min_pair_sum", min_pair},
                                 {"max_row_sum_error", worst_rows}, {"failures", scheme_failures}}},
              {"trig_identity", {{"A", opt.A}, {"B", opt.B}, {"max_residual", worst_residual}}},
              {"character_margins", {{"min_real", min_real}, {"min_complex", min_complex}}},
              {"c1", {{"quartic", c1}, {"quadratic_form", opt.value}, {"odd_floor", 1 - 1 / c1}}},
              {"checks", checks.to_json()}};
  Table summary{"certificate verification", {"", ""}, {}};
  summary.add({"seed", std::to_string(c.seed)});
  summary.add({"metric/vector pairs", std::to_string(f.trials) + " (n <= " + std::to_string(f.max_n) + ")"});
  summary.add({"characters x angles", std::to_string(characters) + " x " + std::to_string(f.phis)});
  summary.add({"invariant metrics", std::to_string(f.trials)});
  summary.add({"tolerance", num(c.tol)});
  doc.tables = {summary, checks_table(checks, "worst margins")};
  emit(std::cout, doc, c.format);
  return verdict(checks, false);
}

int cmd_scan(const ScanFlags& f, const CommonFlags& c) {
  const FamilyKind kind = parse_family_kind(f.family);
  std::vector<FamilySpec> specs;
  auto base = [&] {
    FamilySpec s;
    s.kind = kind;
    s.p = f.p;
    s.group = f.group;
    s.set_size = f.set_size;
    s.a = f.a;
    s.b = f.b;
    s.extra = f.extra;
    s.seed = c.seed;
    return s;
  };
  bool classical = f.classical;
  if (kind == FamilyKind::Barbell) {
    if (f.k.empty()) throw ValidationError("--family barbell needs --k");
    const auto [lo, hi] = parse_range(f.k, "--k");
    for (std::size_t k = lo; k <= hi; ++k) {
      auto s = base();
      s.clique = k;
      s.path_len = f.len ? f.len : k;
      specs.push_back(s);
    }
    classical = true;
  } else if (kind == FamilyKind::CompleteBipartitePlus || kind == FamilyKind::RandomCayley) {
    specs.push_back(base());
  } else {
    if (f.n.empty()) throw ValidationError("--family " + f.family + " needs --n");
    const auto [lo, hi] = parse_range(f.n, "--n");
    for (std::size_t n = lo; n <= hi; ++n) {
      auto s = base();
      s.n = n;
      specs.push_back(s);
    }
  }
  for (const auto& s : specs) s.validate();
  if (f.count == 0) throw ValidationError("--count must be positive");

  std::optional<RecordSink> sink;
  if (!f.out.empty()) sink.emplace(f.out);
  const BatchLimits limits{.cheeger_max_n = f.cap, .spectrum_max_n = 4096, .tol = c.tol, .threads = f.threads};
  const CheckSelection checks{.cheeger = !f.skip_cheeger, .equality = !f.skip_cheeger, .classical = classical};
  const auto res = run_batch(specs, f.count, checks, limits, sink ? &*sink : nullptr);
  const auto summary_doc = summary_document(res.summary, specs, f.count);
  std::string summary_path = f.summary;
  if (summary_path.empty() && !f.out.empty()) summary_path = f.out + ".summary.json";
  if (!summary_path.empty()) write_json_atomic(summary_path, summary_doc);

  const auto& s = res.summary;
  Document doc;
  doc.json = summary_doc;
  doc.json["tolerance"] = c.tol;
  if (sink) doc.json["records"] = {{"path", f.out}, {"written", sink->written()}, {"skipped", sink->skipped()}};
  Table t{"scan summary", {"", ""}, {}};
  t.add({"family", to_string(kind)});
  t.add({"instances", std::to_string(s.instances)});
  t.add({"errors", std::to_string(s.failures)});
  t.add({"min gap", s.min_gap ? num(*s.min_gap) + " (" + s.argmin_gap + ")" : "-"});
  t.add({"min h", s.min_h_exact ? s.min_h_exact->str() + " (" + s.argmin_h + ")" : s.min_h ? num(*s.min_h) : "-"});
  if (s.min_classical_gap) t.add({"min classical gap", num(*s.min_classical_gap) + " (" + s.argmin_classical_gap + ")"});
  t.add({"proved-bound violations", std::to_string(s.counterexamples.size())});
  t.add({"gap < 2/3 findings", std::to_string(s.conjecture_violations.size())});
  t.add({"tolerance", num(c.tol)});
  t.add({"seed", std::to_string(c.seed)});
  if (sink) t.add({"records", f.out + " (" + std::to_string(sink->written()) + " written, " +
                                   std::to_string(sink->skipped()) + " already present)"});
  t.add({"exit code", std::to_string(s.exit_code())});
  doc.tables.push_back(t);
  if (classical) {
    Table contrast{"classical vs distance gap", {"instance", "n", "classical gap", "distance gap"}, {}};
    for (const auto& r : res.records) {
      if (r.error) continue;
      contrast.add({r.label, std::to_string(r.n), r.classical_gap ? num(*r.classical_gap) : "-", num(r.gap)});
    }
    doc.json["contrast"] = nlohmann::json::array();
    for (const auto& r : res.records) {
      if (r.error) continue;
      doc.json["contrast"].push_back({{"label", r.label}, {"n", r.n}, {"classical_gap", r.classical_gap ? nlohmann::json(*r.classical_gap) : nlohmann::json(nullptr)}, {"gap", r.gap}});
    }
    doc.tables.push_back(contrast);
  }
  auto list = [&](const std::string& title, const std::vector<std::string>& items) {
    if (items.empty()) return;
    Table l{title, {""}, {}};
    for (const auto& x : items) l.add({x});
    doc.tables.push_back(l);
  };
  list("PROVED-BOUND VIOLATIONS", s.counterexamples);
  list("findings: gap below 2/3", s.conjecture_violations);
  list("instance errors", s.errors);
  emit(std::cout, doc, c.format);
  if (!s.conjecture_violations.empty() && c.format == Format::Human) {
    std::cerr << "note: " << s.conjecture_violations.size() << " instance(s) have gap below 2/3\n";
  }
  return s.exit_code();
}

int cmd_verify_all(const VerifyFlags& f, const CommonFlags& c) {
  const auto in = load_input(f.input);
  if (!in.graph) throw ValidationError("verify-all needs a graph (--edges or --graph6)");
  const Graph& g = *in.graph;
  const std::size_t n = g.order();
  if (n < 2) throw ValidationError("verify-all needs at least 2 vertices");
  if (!f.skip_cheeger && n > std::min(f.cap, kCheegerHardCap)) {
    throw CapacityError("n = " + std::to_string(n) + " exceeds the Cheeger cap " + std::to_string(f.cap) +
                        "; rerun with --skip-cheeger or raise --cheeger-cap (max " + std::to_string(kCheegerHardCap) +
                        ")");
  }
  const auto& d = *in.metric.exact;
  const auto t = transmission(d);
  const Spectrum s = ndl_spectrum(in.metric);
  const double gap = spectral_gap(s);
  CheckReport proved = check_spectrum_bounds(s, n, c.tol);

  Document doc;
  Table summary{"verification report", {"", ""}, {}};
  summary.add({"source", in.source});
  summary.add({"n", std::to_string(n)});
  summary.add({"edges", std::to_string(g.size())});
  summary.add({"graph6", n <= 62 ? to_graph6(g) : "-"});
  summary.add({"gap", num(gap)});
  summary.add({"lambda_max", num(s.eigenvalues.back())});
  doc.json = {{"source", in.source}, {"n", n}, {"edges", g.size()}, {"tolerance", c.tol}, {"spectrum", spectrum_json(s)}};

  if (!f.skip_cheeger) {
    const auto res = cheeger_exact(d, t, {.max_n = f.cap});
    const auto bounds = check_cheeger_bounds(res, gap, n, c.tol);
    proved.merge(bounds.checks);
    const auto cls = classify_equality(g);
    summary.add({"h", res.h.str() + " (" + num(res.h.to_double()) + ")"});
    summary.add({"cut", join(res.cut.vertices(n))});
    summary.add({"floor", bounds.floor.str()});
    summary.add({"equality", equality_text(cls)});
    if (cls.kind == EqualityClass::OddExtremal) {
      summary.add({"edges in larger part", std::to_string(cls.larger_part_edges) + " (limit n-1 = " +
                                               std::to_string(cls.edge_limit) + "; looser count " +
                                               std::to_string(cls.edge_limit_alt) + ")"});
    }
    doc.json["cheeger"] = to_json(res, n);
    doc.json["floor"] = {{"num", bounds.floor.num()}, {"den", bounds.floor.den()}};
    doc.json["attains_floor"] = bounds.attains_floor;
    doc.json["equality"] = equality_json(cls);
    if ((cls.kind != EqualityClass::None) != bounds.attains_floor) {
      proved.add({"equality classifier matches exact attainment", false, 0, 0, -1, cls.label});
    }
    const Rational slack = cut_slack(d, res.cut.subset);
    proved.at_least("cut slack at optimal cut >= 0", slack.to_double(), 0.0, 0.0);
  } else {
    summary.add({"h", "skipped"});
  }

  // Certificate spot checks on this metric.
  const RealDistanceMatrix rd = in.metric.real;
  SplitMix64 rng(c.seed);
  double min_form = std::numeric_limits<double>::infinity(), min_rq = min_form;
  bool schemes_ok = true;
  const std::vector<double> tv(t.begin(), t.end());
  for (std::size_t i = 0; i < f.trials; ++i) {
    const auto y = random_balanced_unit(n, rng);
    min_form = std::min(min_form, balanced_form(rd, y));
    if (n <= 40) schemes_ok = schemes_ok && verify_weight_scheme(rd, y).passed();
    std::vector<double> r(n);
    for (auto& x : r) x = rng.normal();
    min_rq = std::min(min_rq, rayleigh_quotient(d, t, project_out(r, tv)));
  }
  CheckReport spot;
  if (f.trials > 0) {
    spot.at_least("balanced form >= 0 (random y)", min_form, 0.0, c.tol);
    spot.add({"weight scheme conditions (i)-(iii)", schemes_ok, 0, 0, 0, n <= 40 ? "" : "skipped for n > 40"});
    spot.at_least("Rayleigh quotient >= gap (random y orthogonal to T1)", min_rq, gap, 1e-8);
  }
  proved.merge(spot);
  const bool conjecture = gap < kTwoThirds - c.tol;
  summary.add({"gap >= 2/3 (conjectured)", conjecture ? "VIOLATED" : "holds"});
  summary.add({"tolerance", num(c.tol)});
  summary.add({"spot-check seed", std::to_string(c.seed)});
  doc.json["checks"] = proved.to_json();
  doc.json["conjecture_two_thirds"] = !conjecture;
  doc.json["seed"] = c.seed;
  doc.tables = {summary, checks_table(proved, "bounds and margins")};
  emit(std::cout, doc, c.format);
  return verdict(proved, conjecture);
}

}  // namespace dlap::cli
