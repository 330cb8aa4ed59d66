#include "fibercone/clirun.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <numeric>
#include <sstream>
#include <thread>

#include "fibercone/depth.hpp"
#include "fibercone/errors.hpp"
#include "fibercone/json_io.hpp"
#include "fibercone/parse.hpp"
#include "fibercone/powers.hpp"
#include "fibercone/presentation.hpp"
#include "fibercone/semigroup.hpp"
#include "fibercone/shape.hpp"
#include "fibercone/symmetric.hpp"

namespace fibercone {

namespace {

struct CommonOptions {
  bool json = false;
  bool normalize = false;
  std::string out_file;
  std::uint64_t kmax = 6;
  std::uint32_t trials = 3;
  std::uint64_t prime = 1000003;
  std::uint64_t seed = 0x5eedf1be5;
};

ProbeConfig probe_config(const CommonOptions& opts) {
  ProbeConfig config;
  config.degree_bound = opts.kmax;
  config.trials = opts.trials;
  config.prime = opts.prime;
  config.seed = opts.seed;
  return config;
}

void emit(const CommonOptions& opts, const Json& report, const std::string& text,
          std::ostream& out) {
  std::string payload = opts.json ? report.dump(2) + "\n" : text;
  if (!opts.out_file.empty()) {
    std::ofstream file(opts.out_file);
    if (!file) throw Error("cannot open output file " + opts.out_file);
    file << payload;
  } else {
    out << payload;
  }
}

Json base_report(const std::string& command) {
  return Json{{"schema_version", kJsonSchemaVersion}, {"command", command}};
}

std::pair<MonomialIdeal, Json> load_ideal(const std::string& text, const CommonOptions& opts,
                                          Json& report) {
  MonomialIdeal ideal = parse_ideal(text);
  report["input"] = ideal_to_json(ideal);
  Json normalized{{"performed", opts.normalize}};
  if (opts.normalize) {
    auto [reduced, factor] = normalize(ideal);
    normalized["common_factor"] = Json::array({factor.a, factor.b});
    normalized["ideal"] = ideal_to_json(reduced);
    ideal = reduced;
  }
  report["normalized"] = normalized;
  return {ideal, normalized};
}

std::string shape_text(const ShapeReport& shape) {
  std::ostringstream os;
  os << "shape: " << (shape.is_concave && shape.is_convex ? "concave and convex (pure power)"
                      : shape.is_concave                  ? "concave"
                      : shape.is_convex                   ? "convex"
                                                          : "neither concave nor convex");
  if (shape.is_concave || shape.is_convex) {
    os << "\ncorner indices:";
    for (auto i : shape.corner_indices) os << ' ' << i;
    os << "\nsegments:";
    for (const auto& [lo, hi] : shape.segments) os << " [" << lo << "," << hi << "]";
    os << "\ninner corner: " << (shape.has_inner_corner ? "yes" : "no");
  }
  os << '\n';
  return os.str();
}

std::string verdict_text(const DepthVerdict& verdict) {
  std::ostringstream os;
  os << "depth verdict: " << to_string(verdict.kind);
  if (verdict.kind == DepthKind::EvidenceDepthAtLeast)
    os << " " << verdict.evidence_depth << " (degree bound " << verdict.bound << ")";
  os << "\ncertificate: " << verdict.certificate << '\n';
  return os.str();
}

int run_analyze(const std::string& ideal_text, const CommonOptions& opts, std::ostream& out) {
  Json report = base_report("analyze");
  auto [ideal, normalized_json] = load_ideal(ideal_text, opts, report);
  const auto [reduced, factor] = normalize(ideal);

  std::ostringstream text;
  text << "ideal: " << format_ideal(ideal) << '\n';
  if (!(factor == ExpVec{0, 0}))
    text << "common factor " << format_monomial(factor) << " removed for analysis\n";

  Json shape_json;
  if (reduced.mu() >= 2) {
    const ShapeReport shape = classify_shape(reduced);
    shape_json = shape_to_json(shape);
    text << shape_text(shape);
  } else {
    shape_json = nullptr;
    text << "shape: principal ideal\n";
  }
  report["shape"] = shape_json;

  const DepthVerdict verdict = depth_verdict(ideal, probe_config(opts));
  Json verdict_json = verdict_to_json(verdict);
  Json transcript;
  if (verdict_json.contains("transcript")) {
    transcript = verdict_json["transcript"];
    verdict_json.erase("transcript");
  }
  report["verdict"] = verdict_json;
  report["certificates"] = Json::array({verdict.certificate});
  report["transcript"] = transcript;
  text << verdict_text(verdict);

  emit(opts, report, text.str(), out);
  return 0;
}

int run_powers(const std::string& ideal_text, const CommonOptions& opts, std::uint64_t red_bound,
               std::ostream& out) {
  Json report = base_report("powers");
  auto [ideal, normalized_json] = load_ideal(ideal_text, opts, report);

  const auto table = power_table(ideal, opts.kmax);
  Json mu = Json::array();
  std::ostringstream text;
  text << "k, mu(I^k):\n";
  for (std::uint64_t k = 0; k <= opts.kmax; ++k) {
    mu.push_back(table[k].mu());
    text << "  " << k << ", " << table[k].mu() << '\n';
  }
  report["mu"] = mu;

  const MonomialIdeal candidate = pure_power_reduction(ideal);
  const std::uint64_t bound = red_bound > 0 ? red_bound : default_reduction_bound(ideal);
  const ReductionResult result = reduction_number(ideal, candidate, bound);
  Json reduction{{"candidate", ideal_to_json(candidate)}, {"search_bound", result.search_bound}};
  text << "reduction candidate J = (" << format_ideal(candidate) << ")\n";
  if (result.reduction_number) {
    reduction["reduction_number"] = *result.reduction_number;
    text << "reduction number r_J(I) = " << *result.reduction_number << '\n';
  } else {
    reduction["reduction_number"] = nullptr;
    reduction["witness"] = Json{{"degree", result.witness->first},
                                {"monomial", format_monomial(result.witness->second)}};
    text << "no reduction up to bound " << bound << "; witness " << format_monomial(result.witness->second)
         << " lies in G(I^" << result.witness->first << ") but not in J*I^"
         << (result.witness->first - 1) << '\n';
  }
  report["reduction"] = reduction;

  emit(opts, report, text.str(), out);
  return 0;
}

int run_fiber(const std::string& ideal_text, const CommonOptions& opts, std::ostream& out) {
  Json report = base_report("fiber");
  auto [ideal, normalized_json] = load_ideal(ideal_text, opts, report);

  const PresentationIdeal presentation = build_presentation(ideal);
  const bool groebner_ok = groebner_selfcheck(presentation);
  if (!groebner_ok) throw InternalInconsistency("an S-polynomial did not reduce to zero");
  const std::vector<ZMonomial> initial = initial_ideal(presentation);
  const HilbertData hilbert = hilbert_data(ideal, opts.kmax >= 3 ? opts.kmax : 6);

  Json pres_json = presentation_to_json(presentation);
  pres_json["groebner_selfcheck"] = groebner_ok;
  Json initial_json = Json::array();
  for (const ZMonomial& m : initial) initial_json.push_back(zm_to_string(m));
  pres_json["initial_ideal"] = initial_json;
  report["presentation"] = pres_json;
  report["hilbert"] = hilbert_to_json(hilbert);
  const std::string certificate = presentation.order == TermOrder::RevLex
                                      ? "concave ideal: quadratic Groebner presentation of the fiber cone"
                                      : "convex ideal: radical quadratic presentation of the fiber cone";
  report["verdict"] = Json{{"kind", to_string(DepthKind::CohenMacaulay)}, {"certificate", certificate}};
  report["certificates"] = Json::array({certificate});

  std::ostringstream text;
  text << "ideal: " << format_ideal(ideal) << '\n'
       << "defining ideal (" << presentation.binomials.size() << " binomials, "
       << presentation.monomials.size() << " monomials): " << to_string(presentation) << '\n'
       << "term order: " << (presentation.order == TermOrder::RevLex ? "revlex" : "lex") << '\n'
       << "groebner self-check: passed\n"
       << "initial ideal (" << initial.size() << " quadrics):";
  for (const ZMonomial& m : initial) text << ' ' << zm_to_string(m);
  text << "\nmu sequence:";
  for (auto v : hilbert.mu) text << ' ' << v;
  text << '\n';
  if (hilbert.numerator) {
    text << "Hilbert series numerator over (1-t)^2: [";
    for (std::size_t i = 0; i < hilbert.numerator->size(); ++i)
      text << (i ? ", " : "") << (*hilbert.numerator)[i];
    text << "]\n";
  } else {
    text << "Hilbert series numerator: not stabilized within the window\n";
  }

  emit(opts, report, text.str(), out);
  return 0;
}

std::string symmetric_text(const Symmetric4Report& rep) {
  std::ostringstream os;
  os << "triple (a, b, c) = (" << rep.a << ", " << rep.b << ", " << rep.c << ")\n"
     << "r = " << rep.r << ", interval [" << rep.interval.first << ", " << rep.interval.second
     << "]\n"
     << "verdict: " << to_string(rep.verdict) << '\n';
  if (!rep.presentation.empty()) {
    os << "presentation: (";
    for (std::size_t i = 0; i < rep.presentation.size(); ++i)
      os << (i ? ", " : "") << zm_to_string(rep.presentation[i]);
    os << ")\n";
  }
  if (rep.verdict == SymVerdict::UnknownInterval)
    os << "terra incognita: c lies inside the open interval; no certificate applies\n";
  return os.str();
}

int run_symmetric(std::uint64_t a, std::uint64_t b, std::uint64_t c, const CommonOptions& opts,
                  std::ostream& out) {
  Json report = base_report("symmetric");
  const Symmetric4Report rep = classify_symmetric4(a, b, c);
  report["input"] = Json{{"a", a}, {"b", b}, {"c", c}};
  report["symmetric"] = symmetric4_to_json(rep);
  report["ideal"] = ideal_to_json(make_symmetric(SymmetricSpec{{c, b, a, 0}}));
  emit(opts, report, symmetric_text(rep), out);
  return 0;
}

int run_semigroup(const std::vector<std::uint64_t>& gens, std::uint64_t apery_a,
                  const CommonOptions& opts, std::ostream& out) {
  Json report = base_report("semigroup");
  NumericalSemigroup semigroup{gens};
  std::vector<std::uint64_t> sorted = gens;
  std::sort(sorted.begin(), sorted.end());
  const std::uint64_t a = apery_a > 0 ? apery_a : sorted.back();

  const AperyResult apery = apery_set(semigroup, a);
  const auto [cohen_macaulay, diag] = cn_is_cm(gens);
  report["input"] = Json{{"generators", gens}};
  report["apery"] = apery_to_json(apery);
  report["criterion"] = cn_to_json(cohen_macaulay, diag);

  std::ostringstream text;
  text << "Ap(" << a << ") = {";
  for (std::size_t i = 0; i < apery.elements.size(); ++i)
    text << (i ? ", " : "") << apery.elements[i];
  text << "}\n";
  text << "arithmetical Cohen-Macaulay test: " << (cohen_macaulay ? "passes" : "fails") << '\n';
  for (const CnPair& pair : diag.pairs) {
    text << "  nu = " << pair.nu << " -> mu = " << pair.mu
         << (pair.mu_in_b2 ? "" : "  (not in B2)") << '\n';
  }
  emit(opts, report, text.str(), out);
  return 0;
}

int run_scan(std::uint64_t amax, std::uint64_t bmax, std::uint64_t cmax, const CommonOptions& opts,
             std::ostream& out) {
  struct Row {
    std::uint64_t a, b, c;
  };
  std::vector<Row> rows;
  for (std::uint64_t a = 1; a <= amax; ++a)
    for (std::uint64_t b = a + 1; b <= bmax; ++b)
      for (std::uint64_t c = b + 1; c <= cmax; ++c)
        if (std::gcd(std::gcd(a, b), c) == 1) rows.push_back({a, b, c});

  std::vector<Symmetric4Report> reports(rows.size());
  std::vector<std::exception_ptr> failures(rows.size());
  std::atomic<std::size_t> next{0};
  const unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                           static_cast<unsigned>(rows.size())));
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < rows.size(); i = next.fetch_add(1)) {
        try {
          reports[i] = classify_symmetric4(rows[i].a, rows[i].b, rows[i].c);
        } catch (...) {
          failures[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& failure : failures)
    if (failure) std::rethrow_exception(failure);

  Json table = Json::array();
  std::ostringstream text;
  std::size_t unknown = 0;
  text << "a b c  verdict\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Symmetric4Report& rep = reports[i];
    table.push_back(symmetric4_to_json(rep));
    const bool terra = rep.verdict == SymVerdict::UnknownInterval;
    if (terra) ++unknown;
    text << rows[i].a << ' ' << rows[i].b << ' ' << rows[i].c << "  " << to_string(rep.verdict)
         << (terra ? "  <-- terra incognita" : "") << '\n';
  }
  text << rows.size() << " coprime triples, " << unknown << " in the open interval\n";

  Json report = base_report("scan");
  report["input"] = Json{{"amax", amax}, {"bmax", bmax}, {"cmax", cmax}};
  report["rows"] = table;
  report["unknown_count"] = unknown;
  emit(opts, report, text.str(), out);
  return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"fiber cones of monomial ideals in two variables"};
  app.require_subcommand(1);

  CommonOptions opts;
  std::string ideal_text;
  std::uint64_t red_bound = 0;
  std::uint64_t sym_a = 0, sym_b = 0, sym_c = 0;
  std::vector<std::uint64_t> gens;
  std::uint64_t apery_a = 0;
  std::uint64_t amax = 5, bmax = 9, cmax = 15;

  auto add_common = [&](CLI::App* cmd, bool with_ideal) {
    cmd->add_flag("--json", opts.json, "machine-readable output");
    cmd->add_option("--out", opts.out_file, "write the report to a file");
    cmd->add_option("--kmax", opts.kmax, "degree bound for power computations");
    cmd->add_option("--trials", opts.trials, "probe trials");
    cmd->add_option("--prime", opts.prime, "probe field size");
    cmd->add_option("--seed", opts.seed, "probe seed");
    if (with_ideal) {
      cmd->add_option("ideal", ideal_text, "generators, e.g. \"x^3, x*y, y^3\" or \"(3,0),(1,1),(0,3)\"")
          ->required();
      cmd->add_flag("--normalize", opts.normalize, "divide out the common factor of the generators");
    }
  };

  CLI::App* analyze = app.add_subcommand("analyze", "shape classification and depth verdict");
  add_common(analyze, true);
  CLI::App* powers_cmd = app.add_subcommand("powers", "mu table and reduction search");
  add_common(powers_cmd, true);
  powers_cmd->add_option("--red-bound", red_bound, "reduction search bound (default max(8, a_1))");
  CLI::App* fiber = app.add_subcommand("fiber", "fiber-cone presentation, Groebner self-check, Hilbert data");
  add_common(fiber, true);
  CLI::App* symmetric_cmd = app.add_subcommand("symmetric", "classify a 4-generated symmetric ideal");
  add_common(symmetric_cmd, false);
  symmetric_cmd->add_option("--a", sym_a)->required();
  symmetric_cmd->add_option("--b", sym_b)->required();
  symmetric_cmd->add_option("--c", sym_c)->required();
  CLI::App* semigroup_cmd = app.add_subcommand("semigroup", "Apery set and Cohen-Macaulay criterion");
  add_common(semigroup_cmd, false);
  semigroup_cmd->add_option("--gens", gens, "semigroup generators")->required()->delimiter(',');
  semigroup_cmd->add_option("--apery", apery_a, "Apery element (default: largest generator)");
  CLI::App* scan = app.add_subcommand("scan", "grid of symmetric classifications");
  add_common(scan, false);
  scan->add_option("--amax", amax);
  scan->add_option("--bmax", bmax);
  scan->add_option("--cmax", cmax);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (analyze->parsed()) return run_analyze(ideal_text, opts, out);
    if (powers_cmd->parsed()) return run_powers(ideal_text, opts, red_bound, out);
    if (fiber->parsed()) return run_fiber(ideal_text, opts, out);
    if (symmetric_cmd->parsed()) return run_symmetric(sym_a, sym_b, sym_c, opts, out);
    if (semigroup_cmd->parsed()) return run_semigroup(gens, apery_a, opts, out);
    if (scan->parsed()) return run_scan(amax, bmax, cmax, opts, out);
  } catch (const InternalInconsistency& e) {
    err << "self-check failure: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace fibercone
