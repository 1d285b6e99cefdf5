#include "devissage/cli.hpp"

#include <chrono>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "devissage/abelian.hpp"
#include "devissage/completion.hpp"
#include "devissage/coset_table.hpp"
#include "devissage/covers.hpp"
#include "devissage/group_spec.hpp"
#include "devissage/kernel_basis.hpp"
#include "devissage/presentation.hpp"
#include "devissage/verify.hpp"
#include "devissage/word.hpp"

namespace devissage {

namespace {

using ordered_json = nlohmann::ordered_json;

// Usage problems detected after CLI11 parsing (e.g. a missing mode flag);
// they exit 2 like any other usage error.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommandOutput {
  ordered_json parameters;
  ordered_json payload;
  int exit_code = 0;
};

ordered_json presentation_to_json(const FpPresentation& p) {
  ordered_json relators = ordered_json::array();
  for (const Word& r : p.relators()) relators.push_back(to_text(r));
  ordered_json ram = ordered_json::array();
  for (const auto& [label, w] : p.ramification())
    ram.push_back(ordered_json{{"label", label}, {"word", to_text(w)}});
  return ordered_json{
      {"rank", p.rank()}, {"relators", std::move(relators)},
      {"ramification", std::move(ram)}};
}

ordered_json abelian_to_json(const AbelianInvariants& inv) {
  ordered_json torsion = ordered_json::array();
  for (const bigint& t : inv.torsion) torsion.push_back(t.str());
  return ordered_json{{"free_rank", inv.free_rank},
                      {"torsion", std::move(torsion)},
                      {"text", to_text(inv)}};
}

ordered_json basis_to_json(const SubgroupBasis& basis) {
  ordered_json transversal = ordered_json::array();
  for (const Word& t : basis.table.transversal())
    transversal.push_back(to_text(t));
  ordered_json gens = ordered_json::array();
  for (const auto& [label, w] : basis.generators)
    gens.push_back(ordered_json{{"label", label}, {"word", to_text(w)}});
  return ordered_json{{"index", basis.table.index()},
                      {"count", basis.generators.size()},
                      {"transversal", std::move(transversal)},
                      {"generators", std::move(gens)}};
}

ordered_json census_to_json(const CoverCensus& census, bool cache_hit) {
  return ordered_json{{"genus", census.genus},
                      {"punctures", census.punctures},
                      {"group", census.group},
                      {"class", census.group_class},
                      {"hom_count", census.hom_count},
                      {"epi_count", census.epi_count},
                      {"aut_count", census.aut_count},
                      {"cover_count", census.cover_count},
                      {"cache_hit", cache_hit}};
}

ordered_json suite_to_json(const VerifySuite& suite) {
  ordered_json cases = ordered_json::array();
  for (const VerifyCase& c : suite.cases)
    cases.push_back(ordered_json{
        {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return ordered_json{{"suite", suite.suite},
                      {"total", suite.cases.size()},
                      {"failed", suite.failed_count()},
                      {"passed", suite.all_passed()},
                      {"cases", std::move(cases)}};
}

FpPresentation load_presentation(const std::string& file, int genus,
                                 int punctures) {
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in)
      throw std::runtime_error("cannot read presentation file: " + file);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_presentation(buffer.str());
  }
  return punctures >= 1 ? punctured_curve_group(genus, punctures)
                        : surface_group(genus);
}

void flatten_tsv(const ordered_json& j, const std::string& prefix,
                 std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items())
      flatten_tsv(value, prefix.empty() ? key : prefix + "." + key, out);
  } else if (j.is_array()) {
    std::size_t i = 0;
    for (const auto& value : j)
      flatten_tsv(value, prefix + "[" + std::to_string(i++) + "]", out);
  } else if (j.is_string()) {
    out << prefix << '\t' << j.get<std::string>() << '\n';
  } else {
    out << prefix << '\t' << j.dump() << '\n';
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"finitely presented groups, explicit kernels and cover counts"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kCliVersion);

  std::string format = "json";
  unsigned seed = 0;
  int jobs = std::max(1u, std::thread::hardware_concurrency());
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "tsv"}))
      ->capture_default_str();
  app.add_option("--seed", seed, "seed for all randomized sweeps")
      ->capture_default_str();
  app.add_option("--jobs", jobs, "worker threads for searches")
      ->check(CLI::PositiveNumber);

  // present -----------------------------------------------------------------
  int genus = 0, punctures = 0;
  CLI::App* present = app.add_subcommand(
      "present", "print the fundamental-group presentation of a curve");
  present->fallthrough();
  present->add_option("--genus", genus, "genus of the curve")->required();
  present->add_option("--punctures", punctures, "number of punctures");

  // abelianize ----------------------------------------------------------- --
  std::string in_file;
  CLI::App* abelianize = app.add_subcommand(
      "abelianize", "abelian invariants of a presented group");
  abelianize->fallthrough();
  auto* ab_src = abelianize->add_option_group("source");
  ab_src->add_option("--genus", genus, "genus of a curve group");
  ab_src->add_option("--file", in_file, "presentation file to read");
  ab_src->require_option(1, 2);
  abelianize->add_option("--punctures", punctures, "number of punctures");

  // fill ----------------------------------------------------------------- --
  std::vector<std::string> fill_labels;
  bool fill_all = false;
  CLI::App* fill = app.add_subcommand(
      "fill", "impose ramification words as relators (fill punctures in)");
  fill->fallthrough();
  auto* fill_src = fill->add_option_group("source");
  fill_src->add_option("--genus", genus, "genus of a curve group");
  fill_src->add_option("--file", in_file, "presentation file to read");
  fill_src->require_option(1, 2);
  fill->add_option("--punctures", punctures, "number of punctures");
  fill->add_option("--label", fill_labels, "puncture label to fill (repeatable)");
  fill->add_flag("--all", fill_all, "fill every puncture");

  // kernel-basis ----------------------------------------------------------
  int mu_degree = 0;
  bool chi_mode = false;
  CLI::App* kernel = app.add_subcommand(
      "kernel-basis", "free basis of an explicit finite-index kernel");
  kernel->fallthrough();
  kernel->add_option("--mu", mu_degree,
                     "degree-N cyclic kernel of F_2 (gamma_0 -> 1, gamma_1 -> 0)");
  kernel->add_flag("--chi", chi_mode,
                   "index-2 hyperelliptic kernel (needs --genus/--punctures)");
  kernel->add_option("--genus", genus, "genus for --chi");
  kernel->add_option("--punctures", punctures, "punctures for --chi");

  // rewrite ---------------------------------------------------------------
  std::string word_text;
  CLI::App* rewrite = app.add_subcommand(
      "rewrite", "rewrite a kernel word in the chi basis");
  rewrite->fallthrough();
  rewrite->add_option("--genus", genus, "genus")->required();
  rewrite->add_option("--punctures", punctures, "punctures");
  rewrite->add_option("--word", word_text, "word over the curve alphabet")
      ->required();

  // quotient ----------------------------------------------------------------
  bool odd_case = false, apply_tietze = false;
  CLI::App* quotient = app.add_subcommand(
      "quotient", "presentation of the hyperelliptic quotient kernel");
  quotient->fallthrough();
  quotient->add_option("--genus", genus, "genus")->required();
  quotient->add_option("--punctures", punctures, "punctures");
  quotient->add_flag("--odd", odd_case, "kill the first puncture class");
  quotient->add_flag("--tietze", apply_tietze,
                     "eliminate redundant generators afterwards");

  // covers --------------------------------------------------------------- --
  std::string group_spec, class_spec = "sol", cache_path;
  bool list_epis = false;
  CLI::App* covers = app.add_subcommand(
      "covers", "census of connected Galois covers with a given deck group");
  covers->fallthrough();
  covers->add_option("--genus", genus, "genus")->required();
  covers->add_option("--punctures", punctures, "punctures");
  covers->add_option("--group", group_spec, "deck group spec, e.g. S3 or C2xC4")
      ->required();
  covers->add_option("--class", class_spec, "ambient class: sol, nil, ell:p, prime-to:p")
      ->capture_default_str();
  covers->add_flag("--list", list_epis, "include the epimorphism tuples");
  covers->add_option("--cache", cache_path, "JSON-lines census cache file");

  // verify ----------------------------------------------------------------
  std::string suite_name;
  VerifyOptions vopt;
  CLI::App* verify = app.add_subcommand(
      "verify", "run a named verification suite");
  verify->fallthrough();
  verify->add_option("suite", suite_name,
                     "ns-rank | mu-n | chi | exactness | sylow | hopf")
      ->required();
  verify->add_option("--samples", vopt.ns_rank_samples,
                     "random kernels for ns-rank")
      ->capture_default_str();
  verify->add_option("--rewrites", vopt.chi_rewrites, "kernel words for chi")
      ->capture_default_str();
  verify->add_option("--max", vopt.mu_max, "largest degree for mu-n")
      ->capture_default_str();
  verify->add_option("--max-order", vopt.max_order,
                     "corpus bound for exactness/hopf")
      ->capture_default_str();
  verify->add_option("--sylow-max-order", vopt.sylow_max_order,
                     "corpus bound for sylow")
      ->capture_default_str();

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("devissage");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  auto started = std::chrono::steady_clock::now();
  CommandOutput result;
  std::string command;
  try {
    if (app.got_subcommand(present)) {
      command = "present";
      FpPresentation p = load_presentation("", genus, punctures);
      result.parameters = {{"genus", genus}, {"punctures", punctures}};
      result.payload = presentation_to_json(p);
    } else if (app.got_subcommand(abelianize)) {
      command = "abelianize";
      FpPresentation p = load_presentation(in_file, genus, punctures);
      result.parameters = in_file.empty()
                              ? ordered_json{{"genus", genus},
                                             {"punctures", punctures}}
                              : ordered_json{{"file", in_file}};
      result.payload = abelian_to_json(abelian_invariants(p));
    } else if (app.got_subcommand(fill)) {
      command = "fill";
      FpPresentation p = load_presentation(in_file, genus, punctures);
      if (fill_all) {
        fill_labels.clear();
        for (const auto& [label, w] : p.ramification())
          fill_labels.push_back(label);
      } else if (fill_labels.empty()) {
        throw UsageError("fill needs --label or --all");
      }
      for (const std::string& label : fill_labels)
        p = fill_puncture(p, label);
      result.parameters = in_file.empty()
                              ? ordered_json{{"genus", genus},
                                             {"punctures", punctures}}
                              : ordered_json{{"file", in_file}};
      result.parameters["labels"] = fill_labels;
      result.payload = presentation_to_json(p);
      result.payload["abelianization"] =
          abelian_to_json(abelian_invariants(p));
    } else if (app.got_subcommand(kernel)) {
      command = "kernel-basis";
      if ((mu_degree > 0) == chi_mode)
        throw UsageError("kernel-basis needs exactly one of --mu N or --chi");
      if (mu_degree > 0) {
        result.parameters = {{"mu", mu_degree}};
        result.payload = basis_to_json(mu_n_kernel_basis(mu_degree));
        result.payload["kind"] = "mu";
      } else {
        result.parameters = {{"chi", true},
                             {"genus", genus},
                             {"punctures", punctures}};
        result.payload = basis_to_json(chi_kernel_basis(genus, punctures));
        result.payload["kind"] = "chi";
        result.payload["labels"] = chi_basis_labels(genus, punctures);
      }
    } else if (app.got_subcommand(rewrite)) {
      command = "rewrite";
      int rank = 2 * genus + 1 + punctures;
      Word w = parse_word(rank, word_text);
      auto factors = rewrite_in_chi_basis(genus, punctures, w);
      ordered_json list = ordered_json::array();
      for (const SignedLabel& f : factors)
        list.push_back(ordered_json{{"label", f.label}, {"sign", f.sign}});
      bool verified = expand_chi_factors(genus, punctures, factors) == w;
      result.parameters = {{"genus", genus},
                           {"punctures", punctures},
                           {"word", word_text}};
      result.payload = {{"word", to_text(w)},
                        {"factors", std::move(list)},
                        {"verified", verified}};
      if (!verified) result.exit_code = 1;
    } else if (app.got_subcommand(quotient)) {
      command = "quotient";
      FpPresentation p = hyperelliptic_quotient(genus, punctures, odd_case);
      if (apply_tietze) p = tietze_eliminate(p);
      result.parameters = {{"genus", genus},
                           {"punctures", punctures},
                           {"odd", odd_case},
                           {"tietze", apply_tietze}};
      result.payload = presentation_to_json(p);
    } else if (app.got_subcommand(covers)) {
      command = "covers";
      FiniteGroup g = parse_group_spec(group_spec);
      GroupClass cls = GroupClass::parse(class_spec);
      result.parameters = {{"genus", genus},     {"punctures", punctures},
                           {"group", group_spec}, {"class", class_spec},
                           {"jobs", jobs},        {"list", list_epis}};
      std::optional<CoverCensus> census;
      bool cache_hit = false;
      if (!cache_path.empty()) {
        census = census_cache_lookup(cache_path, genus, punctures, group_spec,
                                     class_spec);
        cache_hit = census.has_value();
        // The cache only keys the census; reject it if the class check
        // would fail now (the cache could have been written by other inputs).
        if (census && !class_membership(g, cls))
          throw std::invalid_argument("deck group " + group_spec +
                                      " lies outside class " + class_spec);
      }
      if (!census) {
        census = cover_census(genus, punctures, g, group_spec, cls, jobs);
        if (!cache_path.empty()) census_cache_append(cache_path, *census);
      }
      result.payload = census_to_json(*census, cache_hit);
      if (list_epis) {
        FpPresentation p = punctures >= 1
                               ? punctured_curve_group(genus, punctures)
                               : surface_group(genus);
        result.payload["epimorphisms"] = list_epimorphisms(p, g, jobs);
      }
    } else if (app.got_subcommand(verify)) {
      command = "verify";
      vopt.seed = seed;
      VerifySuite suite = run_verify_suite(suite_name, vopt);
      result.parameters = {{"suite", suite_name}, {"seed", seed}};
      result.payload = suite_to_json(suite);
      if (!suite.all_passed()) result.exit_code = 1;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    ordered_json error = {{"error", e.what()}, {"command", command}};
    out << error.dump(2) << '\n';
    return 1;
  }

  double elapsed_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - started)
                          .count();
  if (format == "tsv") {
    flatten_tsv(result.payload, "", out);
  } else {
    ordered_json envelope = {{"command", command},
                             {"parameters", std::move(result.parameters)},
                             {"payload", std::move(result.payload)},
                             {"elapsed_ms", elapsed_ms},
                             {"version", kCliVersion}};
    out << envelope.dump(2) << '\n';
  }
  return result.exit_code;
}

}  // namespace devissage
