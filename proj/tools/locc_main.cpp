// Command-line front end: parses Schmidt spectra, dispatches to the library
// and renders reports as text or JSON. Exit codes: 0 success, 1 failed
// verification or oracle mismatch, 2 parse/validation error.

#include "locc/json_io.hpp"
#include "locc/oracle.hpp"
#include "locc/stateio.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

using namespace locc;

/// Thrown when --oracle finds the optimized path disagreeing with the brute
/// reference; mapped to exit code 1.
struct OracleMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  bool float_mode = false;
  bool json = false;
  bool oracle = false;

  // one string slot per subcommand argument; only the parsed subcommand's
  // slots are read
  std::string source;
  std::string target;
  std::string catalyst;
  std::string p = "1";
  std::string gap = "0";
  int m_max = 8;
  int copies = 1;
  int m = 2;
  int cap = 20;
  int k = 2;
  int grid = 10;
};

template <ScalarNumber N> std::string value_string(const N& x) {
  if constexpr (number_traits<N>::exact)
    return rational_string(x) + " (= " + decimal_string(x) + ")";
  else
    return decimal_string(x);
}

/// Renders the m-th root of `radicand`. When the root is not itself rational
/// the stored value is only an approximation, so show it as a radical with a
/// decimal estimate instead of a meaningless machine-precision fraction.
template <ScalarNumber N>
std::string root_string(const N& root, const N& radicand, int copies) {
  if constexpr (number_traits<N>::exact) {
    if (copies > 1 && pow_int(root, static_cast<unsigned>(copies)) != radicand)
      return "(" + rational_string(radicand) + ")^(1/" + std::to_string(copies) +
             ") (~ " + decimal_string(root) + ")";
  }
  return value_string(root);
}

template <ScalarNumber N> std::string spectrum_string(const CompressedSpectrum<N>& spectrum) {
  std::string out = "[";
  for (std::size_t i = 0; i < spectrum.blocks.size(); ++i) {
    if (i) out += ", ";
    out += number_traits<N>::str(spectrum.blocks[i].value);
    if (spectrum.blocks[i].multiplicity != 1) out += " x" + spectrum.blocks[i].multiplicity.str();
  }
  const BigInt zeros = spectrum.total_dimension - spectrum.rank();
  if (zeros > 0) out += ", 0 x" + zeros.str();
  return out + "]";
}

void emit_document(const Options& opt, const std::string& command, Json report) {
  Json doc{{"schema", 1},
           {"command", command},
           {"mode", opt.float_mode ? "float" : "exact"},
           {"report", std::move(report)}};
  std::cout << doc.dump(2) << "\n";
}

template <ScalarNumber N>
void require_oracle_match(const N& main_value, const N& brute_value, const std::string& what) {
  if (!number_traits<N>::equal(main_value, brute_value))
    throw OracleMismatch("oracle mismatch on " + what + ": optimized " +
                         number_traits<N>::str(main_value) + " vs brute " +
                         number_traits<N>::str(brute_value));
}

template <ScalarNumber N>
N brute_p_max_of(const CompressedSpectrum<N>& source, const CompressedSpectrum<N>& target) {
  return oracle::brute_p_max(expand(source), expand(target));
}

// ---------------------------------------------------------------- pmax ----

template <ScalarNumber N> int run_pmax(const Options& opt) {
  const auto source = parse_state<N>(opt.source);
  const auto target = parse_state<N>(opt.target);
  const ConversionReport<N> report = p_max(source, target);
  if (opt.oracle)
    require_oracle_match(report.p_max, brute_p_max_of(source, target), "p_max");
  if (opt.json) {
    emit_document(opt, "pmax", conversion_report_json(report));
  } else {
    std::cout << "p_max = " << value_string(report.p_max) << "\n"
              << "argmin position l = " << report.argmin_position << "\n"
              << "E_l(source) = " << value_string(report.source_tail) << "\n"
              << "E_l(target) = " << value_string(report.target_tail) << "\n";
  }
  return 0;
}

// ----------------------------------------------------------- multicopy ----

template <ScalarNumber N> int run_multicopy(const Options& opt) {
  const auto source = parse_state<N>(opt.source);
  const auto target = parse_state<N>(opt.target);
  const N gap = parse_scalar<N>(opt.gap);
  const MulticopyTrace<N> trace = estimate_pm(source, target, opt.m_max, gap);
  if (opt.oracle) {
    for (const auto& entry : trace.entries) {
      const N brute = oracle::brute_p_max(oracle::brute_tensor_power(expand(source), entry.copies),
                                          oracle::brute_tensor_power(expand(target), entry.copies));
      require_oracle_match(entry.radicand, brute,
                           "m-copy p_max at m = " + std::to_string(entry.copies));
    }
  }
  if (opt.json) {
    emit_document(opt, "multicopy", trace_json(trace));
  } else {
    for (const auto& entry : trace.entries)
      std::cout << "m = " << entry.copies
                << ": p_avg = " << root_string(entry.p_avg, entry.radicand, entry.copies)
                << "  [m-copy p_max = " << value_string(entry.radicand) << ", blocks "
                << entry.blocks_source << "/" << entry.blocks_target << "]\n";
    std::cout << "best m = " << trace.best_m << ", best p_avg = "
              << root_string(trace.best_p_avg, trace.best_radicand, trace.best_m) << "\n"
              << "closed-form bound = " << value_string(trace.closed_form_bound) << "\n";
  }
  return 0;
}

// ----------------------------------------------------------- catalyzed ----

template <ScalarNumber N> int run_catalyzed(const Options& opt) {
  const auto source = parse_state<N>(opt.source);
  const auto target = parse_state<N>(opt.target);
  auto catalyst = parse_state<N>(opt.catalyst);
  if (opt.copies < 1) raise(errc::copy_count_zero, "--copies must be at least 1");
  if (opt.copies > 1) catalyst = tensor_power(catalyst, opt.copies);
  const N with_catalyst = p_catalyzed(source, target, catalyst);
  const N baseline = p_max(source, target).p_max;
  if (opt.oracle)
    require_oracle_match(with_catalyst,
                         brute_p_max_of(tensor_product(source, catalyst),
                                        tensor_product(target, catalyst)),
                         "p_catalyzed");
  if (opt.json) {
    emit_document(opt, "catalyzed",
                  Json{{"p_catalyzed", scalar_json(with_catalyst)},
                       {"baseline", scalar_json(baseline)},
                       {"copies", opt.copies}});
  } else {
    std::cout << "p_catalyzed = " << value_string(with_catalyst) << "\n"
              << "baseline p_max = " << value_string(baseline) << "\n";
  }
  return 0;
}

// ------------------------------------------------------------ pe-bound ----

template <ScalarNumber N> int run_pe_bound(const Options& opt) {
  const auto source = parse_state<N>(opt.source);
  const auto target = parse_state<N>(opt.target);
  const N bound = closed_form_pe(source, target);
  if (opt.oracle) {
    // no independent brute path for the closed form itself; check the
    // ordering it promises against the brute single-copy probability
    const N brute = brute_p_max_of(source, target);
    if (bound < brute && !number_traits<N>::equal(bound, brute))
      throw OracleMismatch("closed-form bound " + number_traits<N>::str(bound) +
                           " lies below the brute single-copy probability " +
                           number_traits<N>::str(brute));
  }
  if (opt.json)
    emit_document(opt, "pe-bound", Json{{"bound", scalar_json(bound)}});
  else
    std::cout << "closed-form supremum (catalyzed = multi-copy) = " << value_string(bound)
              << "\n";
  return 0;
}

// ------------------------------------------------------- make-catalyst ----

template <ScalarNumber N> int run_make_catalyst(const Options& opt) {
  const auto source = parse_state<N>(opt.source);
  const auto target = parse_state<N>(opt.target);
  const CatalystConstruction<N> built = construct_catalyst(source, target, opt.m);
  const N achieved = p_catalyzed(source, target, built.catalyst);

  // the construction promises p_catalyzed >= p_m; compare on m-th powers,
  // with float slack once the weights went through a floating root
  const N achieved_power = pow_int(achieved, static_cast<unsigned>(opt.m));
  const bool guarantee =
      built.weights_exact && number_traits<N>::exact
          ? achieved_power >= built.p_m_radicand
          : to_double(achieved_power) >= to_double(built.p_m_radicand) - kSumTolerance;
  if (opt.oracle)
    require_oracle_match(built.p_m_radicand,
                         oracle::brute_p_max(oracle::brute_tensor_power(expand(source), opt.m),
                                             oracle::brute_tensor_power(expand(target), opt.m)),
                         "m-copy p_max");
  if (opt.json) {
    Json report = construction_json(built);
    report["p_catalyzed"] = scalar_json(achieved);
    report["guarantee_verified"] = guarantee;
    emit_document(opt, "make-catalyst", std::move(report));
  } else {
    std::cout << "catalyst = " << spectrum_string(built.catalyst) << "\n"
              << "dimension = " << built.catalyst.total_dimension << "\n"
              << "p_m (per-copy, " << opt.m << " copies) = " << decimal_string(built.p_m)
              << (built.weights_exact ? "  [exact weights]" : "  [floating-root weights]")
              << "\n"
              << "p_catalyzed with it = " << value_string(achieved) << "\n"
              << "guarantee p_catalyzed >= p_m: " << (guarantee ? "verified" : "VIOLATED")
              << "\n";
  }
  if (!guarantee)
    throw std::logic_error("constructed catalyst fails its probability guarantee");
  return 0;
}

// --------------------------------------------------- simulate-protocol ----

template <ScalarNumber N> int run_simulate_protocol(const Options& opt) {
  const auto source = parse_state<N>(opt.source);
  const auto target = parse_state<N>(opt.target);
  const auto catalyst = parse_state<N>(opt.catalyst);
  const ProtocolReport<N> report = simulate_protocol(source, target, catalyst, opt.m);
  if (opt.oracle) {
    const N brute = oracle::brute_p_max(oracle::brute_tensor_power(expand(source), opt.m),
                                        oracle::brute_tensor_power(expand(target), opt.m));
    require_oracle_match(report.m_copy_p_max, brute, "m-copy p_max");
  }
  if (opt.json) {
    emit_document(opt, "simulate-protocol", protocol_json(report));
  } else {
    std::cout << "step 1, borrow maximally entangled (k = " << report.k
              << "): p1 = " << value_string(report.p1) << "\n"
              << "step 2, catalyzed conversion of " << opt.m
              << " copies: p2 >= " << value_string(report.p2_lower_bound) << "\n"
              << "step 3, restore the borrowed state: p3 = k*gamma_k = "
              << value_string(report.p3) << "\n"
              << "protocol bound p1*p2*p3 = " << value_string(report.product_bound) << "\n"
              << "direct m-copy p_max = " << value_string(report.m_copy_p_max)
              << "  (>= bound: verified)\n";
  }
  return 0;
}

// -------------------------------------------------------------- find-m ----

template <ScalarNumber N> int run_find_m(const Options& opt) {
  const auto source = parse_state<N>(opt.source);
  const auto target = parse_state<N>(opt.target);
  const N p = parse_scalar<N>(opt.p);
  const FindMResult<N> result = find_finite_m(source, target, p, opt.cap);
  if (opt.oracle && result.status == FindMStatus::found) {
    const N brute =
        oracle::brute_p_max(oracle::brute_tensor_power(expand(source), result.copies),
                            oracle::brute_tensor_power(expand(target), result.copies));
    require_oracle_match(result.radicand, brute, "m-copy p_max at the found m");
  }
  if (opt.json) {
    emit_document(opt, "find-m", find_m_json(result));
    return 0;
  }
  std::cout << "closed-form supremum = " << value_string(result.bound) << "\n";
  switch (result.status) {
    case FindMStatus::found:
      std::cout << "found: m = " << result.copies << " copies reach the target (m-copy p_max = "
                << value_string(result.radicand) << " >= p^m)\n";
      break;
    case FindMStatus::boundary_case:
      std::cout << "boundary case: the target equals the supremum; no m up to " << opt.cap
                << " attains it, and attainment at the boundary is open in general\n";
      break;
    case FindMStatus::not_found_within_cap:
      std::cout << "not found within cap " << opt.cap
                << ": a finite m exists (target is below the supremum) but lies beyond it\n";
      break;
    case FindMStatus::unreachable:
      std::cout << "unreachable: the target exceeds the supremum, so no copy count works\n";
      break;
  }
  return 0;
}

// ------------------------------------------------------ search-catalyst ----

template <ScalarNumber N> int run_search_catalyst(const Options& opt) {
  const auto source = parse_state<N>(opt.source);
  const auto target = parse_state<N>(opt.target);
  const CatalystSearchResult<N> result = search_catalyst(source, target, opt.k, opt.grid);
  if (opt.oracle)
    require_oracle_match(result.best_p,
                         brute_p_max_of(tensor_product(source, result.best_catalyst),
                                        tensor_product(target, result.best_catalyst)),
                         "best catalyzed probability");
  if (opt.json) {
    emit_document(opt, "search-catalyst", search_json(result));
  } else {
    std::cout << "best catalyst (k = " << opt.k << ", grid " << opt.grid
              << ") = " << spectrum_string(result.best_catalyst) << "\n"
              << "best p_catalyzed = " << value_string(result.best_p) << "\n"
              << "baseline p_max = " << value_string(result.baseline) << "\n";
  }
  return 0;
}

// -------------------------------------------------------- verify-paper ----

struct Claim {
  std::string name;
  bool pass;
};

// The published worked-example values this library reproduces. Always exact
// mode: the claims are bit-exact statements.
std::vector<Claim> paper_claims() {
  using R = Rational;
  const auto example1_source = parse_state<R>("0.4,0.4,0.1,0.1");
  const auto example1_target = parse_state<R>("0.5,0.25,0.25");
  const auto example2_source = parse_state<R>("0.40,0.40,0.10,0.10,0.01");
  const auto example2_target = parse_state<R>("0.50,0.25,0.20,0.05,0.01");
  const auto phi = parse_state<R>("0.6,0.4");

  std::vector<Claim> claims;
  const auto add = [&](std::string name, bool pass) {
    claims.push_back({std::move(name), pass});
  };

  const ConversionReport<R> single = p_max(example1_source, example1_target);
  add("example 1: single-copy conversion probability is 4/5",
      single.p_max == R(4, 5) && single.argmin_position == 3);
  add("example 1: the single-copy conversion is not deterministic",
      !is_deterministic(example1_source, example1_target));
  add("example 1: catalyst [0.6, 0.4] lifts the probability to 1",
      p_catalyzed(example1_source, example1_target, phi) == 1);
  add("example 1: three copies convert with certainty",
      p_multicopy_radicand(example1_source, example1_target, 3) == 1);
  {
    const MulticopyTrace<R> trace = estimate_pm(example1_source, example1_target, 3);
    add("example 1: the copy sweep attains the closed-form supremum 1 by m = 3",
        trace.closed_form_bound == 1 && trace.best_m == 3 && trace.best_radicand == 1);
  }
  {
    const FindMResult<R> one = find_finite_m(example1_source, example1_target, R(1), 5);
    add("example 1: certainty is first reached at exactly three copies",
        one.status == FindMStatus::found && one.copies == 3);
  }
  add("example 2: eleven catalyst copies reach certainty",
      p_catalyzed(example2_source, example2_target, tensor_power(phi, 11)) == 1);
  {
    bool all_below_one = true;
    for (int m = 1; m <= 8; ++m)
      all_below_one =
          all_below_one && p_multicopy_radicand(example2_source, example2_target, m) < 1;
    add("example 2: no copy count up to 8 converts with certainty", all_below_one);
  }
  add("example 2: the closed-form supremum is still 1",
      closed_form_pe(example2_source, example2_target) == 1);
  {
    const FindMResult<R> boundary = find_finite_m(example2_source, example2_target, R(1), 8);
    add("example 2: certainty sits exactly on the open boundary case",
        boundary.status == FindMStatus::boundary_case);
  }
  add("borrowing stage: a 2-dimensional maximally entangled state prepares [0.6, 0.4] surely",
      p_max_from_max_entangled(BigInt(2), phi) == 1);
  add("restoring stage: distilling the borrowed state back succeeds with k*gamma_k = 4/5",
      p_max_to_max_entangled(phi, BigInt(2)) == R(4, 5));
  {
    bool inert = true;
    for (int k = 2; k <= 5; ++k)
      inert = inert && p_catalyzed(example1_source, example1_target,
                                   maximally_entangled<R>(BigInt(k))) == single.p_max;
    add("maximally entangled states are inert catalysts (k = 2..5)", inert);
  }
  {
    bool protocol_ok = true;
    try {
      const ProtocolReport<R> report =
          simulate_protocol(example1_source, example1_target, phi, 3);
      protocol_ok = report.product_bound == R(4, 5) && report.m_copy_p_max == 1;
    } catch (const std::logic_error&) {
      protocol_ok = false;
    }
    add("three-step protocol on example 1 certifies its lower bound 4/5 <= 1", protocol_ok);
  }
  {
    const CatalystSearchResult<R> found =
        search_catalyst(example1_source, example1_target, 2, 10);
    add("grid search (k = 2, resolution 10) rediscovers the [0.6, 0.4] catalyst",
        found.best_p == 1 && found.best_catalyst == parse_state<R>("0.6,0.4"));
  }
  return claims;
}

int run_verify_paper(const Options& opt) {
  const std::vector<Claim> claims = paper_claims();
  bool all_pass = true;
  for (const Claim& claim : claims) all_pass = all_pass && claim.pass;
  if (opt.json) {
    Json rows = Json::array();
    for (const Claim& claim : claims)
      rows.push_back({{"name", claim.name}, {"pass", claim.pass}});
    Json doc{{"schema", 1},
             {"command", "verify-paper"},
             {"mode", "exact"},
             {"claims", std::move(rows)},
             {"all_pass", all_pass}};
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const Claim& claim : claims)
      std::cout << (claim.pass ? "PASS" : "FAIL") << "  " << claim.name << "\n";
    std::cout << (all_pass ? "all claims hold" : "SOME CLAIMS FAILED") << "\n";
  }
  return all_pass ? 0 : 1;
}

// ---------------------------------------------------------- dispatching ----

template <ScalarNumber N> int run_mode(const CLI::App& app, const Options& opt) {
  if (app.got_subcommand("pmax")) return run_pmax<N>(opt);
  if (app.got_subcommand("multicopy")) return run_multicopy<N>(opt);
  if (app.got_subcommand("catalyzed")) return run_catalyzed<N>(opt);
  if (app.got_subcommand("pe-bound")) return run_pe_bound<N>(opt);
  if (app.got_subcommand("make-catalyst")) return run_make_catalyst<N>(opt);
  if (app.got_subcommand("simulate-protocol")) return run_simulate_protocol<N>(opt);
  if (app.got_subcommand("find-m")) return run_find_m<N>(opt);
  if (app.got_subcommand("search-catalyst")) return run_search_catalyst<N>(opt);
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optimal LOCC conversion of bipartite pure entangled states: single-copy, "
               "catalyzed and multiple-copy probabilities from Schmidt spectra"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_flag("--float", opt.float_mode,
               "compute with doubles instead of exact rationals");
  app.add_flag("--json", opt.json, "emit a machine-readable JSON report");
  app.add_flag("--oracle", opt.oracle,
               "cross-check results against the brute-force reference (exit 1 on mismatch)");

  const std::string state_help = "inline coefficients (\"0.4,0.4,0.1,0.1\" or \"2/5,2/5,1/10,"
                                 "1/10\") or a path to a state file";

  const auto add_pair = [&](CLI::App* sub) {
    sub->add_option("source", opt.source, state_help)->required();
    sub->add_option("target", opt.target, state_help)->required();
  };

  add_pair(app.add_subcommand("pmax", "optimal single-copy conversion probability"));

  auto* multicopy = app.add_subcommand("multicopy", "per-copy averages for m = 1..mmax");
  add_pair(multicopy);
  multicopy->add_option("--mmax", opt.m_max, "largest copy count to sweep")
      ->check(CLI::PositiveNumber);
  multicopy->add_option("--gap", opt.gap, "stop once the average is this close to the bound");

  auto* catalyzed = app.add_subcommand("catalyzed", "conversion probability with a catalyst");
  add_pair(catalyzed);
  catalyzed->add_option("--catalyst", opt.catalyst, state_help)->required();
  catalyzed->add_option("--copies", opt.copies, "tensor copies of the catalyst to attach")
      ->check(CLI::PositiveNumber);

  add_pair(app.add_subcommand("pe-bound",
                              "closed-form supremum of catalyzed/multi-copy probabilities"));

  auto* make_catalyst =
      app.add_subcommand("make-catalyst", "build the catalyst derived from the m-copy optimum");
  add_pair(make_catalyst);
  make_catalyst->add_option("--m", opt.m, "copy count the construction is based on (>= 2)")
      ->required();

  auto* protocol = app.add_subcommand("simulate-protocol",
                                      "three-step borrow/convert/restore protocol bookkeeping");
  add_pair(protocol);
  protocol->add_option("--catalyst", opt.catalyst, state_help)->required();
  protocol->add_option("--m", opt.m, "number of copies to convert")->required();

  auto* find_m = app.add_subcommand("find-m", "smallest copy count reaching a target probability");
  add_pair(find_m);
  find_m->add_option("--p", opt.p, "target per-copy probability in (0, 1]")->required();
  find_m->add_option("--cap", opt.cap, "largest copy count to scan")->check(CLI::PositiveNumber);

  auto* search = app.add_subcommand("search-catalyst", "grid search for a small catalyst");
  add_pair(search);
  search->add_option("--k", opt.k, "catalyst dimension (2, 3 or 4)")->required();
  search->add_option("--grid", opt.grid, "grid resolution (>= 2)");

  app.add_subcommand("verify-paper",
                     "check the library against its published worked examples (always exact)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2; // bad invocations count as parse errors
  }

  try {
    if (app.got_subcommand("verify-paper")) return run_verify_paper(opt);
    return opt.float_mode ? run_mode<double>(app, opt) : run_mode<Rational>(app, opt);
  } catch (const OracleMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
