// Command-line surface for the exact Littlewood-Richardson / Horn toolkit.
// Exit codes: 0 computed, 1 usage or parse error, 2 internal cross-oracle
// disagreement. Predicate outcomes never affect the exit code.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lrhorn/hive.hpp"
#include "lrhorn/horn.hpp"
#include "lrhorn/serialize.hpp"
#include "lrhorn/spectra.hpp"
#include "lrhorn/tableau.hpp"
#include "lrhorn/tail_cone.hpp"

namespace {

using lrhorn::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDisagreement = 2;

void emit(const json& payload) { std::cout << payload.dump() << "\n"; }

int ambient_length(const std::vector<std::string>& csvs, int requested) {
  if (requested > 0) return requested;
  std::size_t length = 0;
  for (const auto& text : csvs) length = std::max(length, lrhorn::split_csv(text).size());
  if (length == 0) throw std::invalid_argument("empty input vectors");
  return static_cast<int>(length);
}

struct CoeffOptions {
  std::string lambda, mu, nu;
  std::string method = "both";
  int r = 0;
  std::string format = "json";
  bool witnesses = false;
};

int run_coeff(const CoeffOptions& opt) {
  const int r = ambient_length({opt.lambda, opt.mu, opt.nu}, opt.r);
  const auto triple = lrhorn::make_partition_triple(
      lrhorn::parse_partition(opt.lambda, r), lrhorn::parse_partition(opt.mu, r),
      lrhorn::parse_partition(opt.nu, r));

  json payload{{"command", "coeff"}, {"method", opt.method}};
  payload.update(lrhorn::triple_to_json(triple));
  if (opt.witnesses) {
    json arrays = json::array();
    if (lrhorn::is_homogeneous(triple))
      for (const auto& y :
           lrhorn::enumerate_tail_positive(lrhorn::to_fundamental(triple)))
        arrays.push_back(lrhorn::triangle_array_to_json(y));
    payload["witnesses"] = std::move(arrays);
  }

  auto hive_count = [&]() {
    // the grid count is defined through the weight conversion, which needs
    // homogeneity; inhomogeneous triples have coefficient zero
    if (!lrhorn::is_homogeneous(triple)) return lrhorn::Int(0);
    return lrhorn::count_tail_positive(lrhorn::to_fundamental(triple));
  };

  bool disagreement = false;
  std::string plain;
  if (opt.method == "tableau") {
    const auto count = lr_coefficient(triple);
    payload["tableau"] = count.str();
    plain = count.str();
  } else if (opt.method == "hive") {
    const auto count = hive_count();
    payload["hive"] = count.str();
    plain = count.str();
  } else if (opt.method == "both") {
    const auto tableau = lr_coefficient(triple);
    const auto hive = hive_count();
    payload["tableau"] = tableau.str();
    payload["hive"] = hive.str();
    payload["agree"] = tableau == hive;
    disagreement = tableau != hive;
    plain = tableau.str() + " " + hive.str() + (disagreement ? " DISAGREE" : " agree");
  } else {
    throw CLI::ValidationError("--method must be tableau, hive or both");
  }

  if (opt.format == "text")
    std::cout << plain << "\n";
  else
    emit(payload);
  if (disagreement) {
    std::cerr << "cross-oracle disagreement; this is a defect in the build, not the input\n";
    return kExitDisagreement;
  }
  return kExitOk;
}

struct HornOptions {
  int r = 0;
  std::string format = "json";
};

int run_horn(const HornOptions& opt) {
  const auto facets = lrhorn::generate_facets(opt.r);
  if (opt.format == "text") {
    for (const auto& facet : facets)
      std::cout << lrhorn::horn_inequality_to_text(facet) << "\n";
    return kExitOk;
  }
  json list = json::array();
  for (const auto& facet : facets) {
    auto entry = lrhorn::horn_inequality_to_json(facet);
    entry["text"] = lrhorn::horn_inequality_to_text(facet);
    list.push_back(std::move(entry));
  }
  emit(json{{"command", "horn"},
            {"r", opt.r},
            {"equality", "|λ| = |μ| + |ν|"},
            {"count", facets.size()},
            {"inequalities", std::move(list)}});
  return kExitOk;
}

struct MemberOptions {
  std::string lambda, mu, nu;
  int r = 0;
  std::string format = "json";
};

int run_member(const MemberOptions& opt) {
  auto lambda = lrhorn::parse_rational_vector(opt.lambda);
  auto mu = lrhorn::parse_rational_vector(opt.mu);
  auto nu = lrhorn::parse_rational_vector(opt.nu);
  const int r = ambient_length({opt.lambda, opt.mu, opt.nu}, opt.r);
  for (auto* v : {&lambda, &mu, &nu}) v->resize(static_cast<std::size_t>(r), lrhorn::Rat(0));
  const auto query = lrhorn::make_cone_query(lambda, mu, nu);
  const bool in_cone = lrhorn::cone_contains(query, lrhorn::generate_facets(r));

  // the semigroup question only makes sense for genuine partitions
  bool integral = true;
  for (const auto* v : {&query.lambda, &query.mu, &query.nu})
    for (const auto& x : *v)
      if (denominator(x) != 1 || x < 0) integral = false;

  json payload{{"command", "member"},
               {"lambda", opt.lambda},
               {"mu", opt.mu},
               {"nu", opt.nu},
               {"cone", in_cone},
               {"semigroup", nullptr}};
  std::string semigroup_text = "n/a";
  if (integral) {
    auto to_partition = [r](const std::vector<lrhorn::Rat>& v) {
      std::vector<lrhorn::Int> parts;
      for (const auto& x : v) parts.push_back(numerator(x));
      return lrhorn::make_partition(std::move(parts), r);
    };
    const bool in_semigroup = lrhorn::semigroup_contains(lrhorn::PartitionTriple{
        to_partition(query.lambda), to_partition(query.mu), to_partition(query.nu)});
    payload["semigroup"] = in_semigroup;
    semigroup_text = in_semigroup ? "yes" : "no";
  }
  if (opt.format == "text")
    std::cout << "cone: " << (in_cone ? "yes" : "no") << " semigroup: " << semigroup_text
              << "\n";
  else
    emit(payload);
  return kExitOk;
}

struct ConsistentOptions {
  int r = 0;
  int cardinality = 0;  // 0 = all
  std::string format = "json";
};

int run_consistent(const ConsistentOptions& opt) {
  if (opt.cardinality < 0 || opt.cardinality > opt.r)
    throw CLI::ValidationError("--cardinality must lie in [1, r]");
  json list = json::array();
  bool any_disagreement = false;
  std::size_t consistent_count = 0;
  for (int s = opt.cardinality > 0 ? opt.cardinality : 1;
       s <= (opt.cardinality > 0 ? opt.cardinality : opt.r); ++s) {
    const auto subsets = lrhorn::subsets_of_size(opt.r, s);
    for (const auto& I : subsets)
      for (const auto& J : subsets)
        for (const auto& K : subsets) {
          const lrhorn::SubsetTriple st{opt.r, I, J, K};
          const bool by_definition = lrhorn::is_lr_consistent(st);
          const bool balanced =
              weight_size(lrhorn::rho(st.I)) ==
              weight_size(lrhorn::rho(st.J)) + weight_size(lrhorn::rho(st.K));
          auto verdict = balanced ? lrhorn::is_tail_positive_form(lrhorn::horn_form(st))
                                  : lrhorn::TailPositivityResult{};
          const bool by_tail_cone = balanced && verdict.positive;
          if (by_definition != by_tail_cone) any_disagreement = true;
          if (!by_definition && !by_tail_cone) continue;
          ++consistent_count;
          json entry{{"I", st.I},
                     {"J", st.J},
                     {"K", st.K},
                     {"definition", by_definition},
                     {"tail_cone", by_tail_cone}};
          if (verdict.certificate)
            entry["certificate"] = lrhorn::certificate_to_json(*verdict.certificate);
          if (opt.format == "text") {
            std::cout << lrhorn::horn_inequality_to_text(lrhorn::HornInequality{st})
                      << (by_definition == by_tail_cone ? "" : "  DISAGREE") << "\n";
          }
          list.push_back(std::move(entry));
        }
  }
  if (opt.format != "text")
    emit(json{{"command", "consistent"},
              {"r", opt.r},
              {"cardinality", opt.cardinality},
              {"count", consistent_count},
              {"agree", !any_disagreement},
              {"triples", std::move(list)}});
  if (any_disagreement) {
    std::cerr << "cross-oracle disagreement; this is a defect in the build, not the input\n";
    return kExitDisagreement;
  }
  return kExitOk;
}

struct SaturationOptions {
  int r = 0;
  int max_weight = 0;
  int max_stretch = 2;
  std::string format = "json";
};

int run_saturation(const SaturationOptions& opt) {
  const auto report = lrhorn::saturation_scan(opt.r, lrhorn::Int(opt.max_weight),
                                              opt.max_stretch);
  if (opt.format == "text")
    std::cout << "scanned " << report.triples_scanned << " triples, " << report.in_cone
              << " in cone, " << report.candidates.size() << " candidates, "
              << (report.any_positive_stretch ? "positive stretch found"
                                              : "no positive stretch")
              << "\n";
  else {
    auto payload = lrhorn::saturation_report_to_json(report);
    payload["command"] = "saturation";
    emit(payload);
  }
  return kExitOk;
}

struct SpectraOptions {
  int r = 0;
  long long trials = 1000;
  std::uint64_t seed = 42;
  std::string format = "json";
};

int run_spectra(const SpectraOptions& opt) {
  const auto report =
      lrhorn::he_probe(opt.r, opt.trials, opt.seed, lrhorn::generate_facets(opt.r));
  if (opt.format == "text")
    std::cout << "trials " << report.trials << ", violations " << report.violations.size()
              << ", worst margin " << report.worst_margin << "\n";
  else {
    auto payload = lrhorn::spectral_report_to_json(report);
    payload["command"] = "spectra";
    emit(payload);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Littlewood-Richardson coefficients, Horn inequalities, and cone tools"};
  app.require_subcommand(1);

  CoeffOptions coeff;
  auto* coeff_cmd = app.add_subcommand("coeff", "Coefficient of a partition triple");
  coeff_cmd->add_option("--lambda", coeff.lambda)->required();
  coeff_cmd->add_option("--mu", coeff.mu)->required();
  coeff_cmd->add_option("--nu", coeff.nu)->required();
  coeff_cmd->add_option("--method", coeff.method, "tableau|hive|both");
  coeff_cmd->add_option("--r", coeff.r, "ambient length (default: longest input)");
  coeff_cmd->add_option("--format", coeff.format, "json|text");
  coeff_cmd->add_flag("--witnesses", coeff.witnesses,
                      "include the counted arrays in the JSON output");

  HornOptions horn;
  auto* horn_cmd = app.add_subcommand("horn", "Facet inequalities of the eigenvalue cone");
  horn_cmd->add_option("--r", horn.r)->required();
  horn_cmd->add_option("--format", horn.format, "json|text");

  MemberOptions member;
  auto* member_cmd = app.add_subcommand("member", "Cone and semigroup membership");
  member_cmd->add_option("--lambda", member.lambda)->required();
  member_cmd->add_option("--mu", member.mu)->required();
  member_cmd->add_option("--nu", member.nu)->required();
  member_cmd->add_option("--r", member.r);
  member_cmd->add_option("--format", member.format, "json|text");

  ConsistentOptions consistent;
  auto* consistent_cmd =
      app.add_subcommand("consistent", "Consistent subset triples by both procedures");
  consistent_cmd->add_option("--r", consistent.r)->required();
  consistent_cmd->add_option("--cardinality", consistent.cardinality, "restrict to one size");
  consistent_cmd->add_option("--format", consistent.format, "json|text");

  SaturationOptions saturation;
  auto* saturation_cmd = app.add_subcommand("saturation", "Scan for unsaturated cone points");
  saturation_cmd->add_option("--r", saturation.r)->required();
  saturation_cmd->add_option("--max-weight", saturation.max_weight)->required();
  saturation_cmd->add_option("--max-stretch", saturation.max_stretch);
  saturation_cmd->add_option("--format", saturation.format, "json|text");

  SpectraOptions spectra;
  auto* spectra_cmd = app.add_subcommand("spectra", "Random spectral probe of the cone");
  spectra_cmd->add_option("--r", spectra.r)->required();
  spectra_cmd->add_option("--trials", spectra.trials);
  spectra_cmd->add_option("--seed", spectra.seed);
  spectra_cmd->add_option("--format", spectra.format, "json|text");

  try {
    app.parse(argc, argv);
    if (coeff_cmd->parsed()) return run_coeff(coeff);
    if (horn_cmd->parsed()) return run_horn(horn);
    if (member_cmd->parsed()) return run_member(member);
    if (consistent_cmd->parsed()) return run_consistent(consistent);
    if (saturation_cmd->parsed()) return run_saturation(saturation);
    if (spectra_cmd->parsed()) return run_spectra(spectra);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
