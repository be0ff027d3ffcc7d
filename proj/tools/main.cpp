#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

void add_common_options(CLI::App& sub, nullcert::cli::CliConfig& config) {
  static const std::map<std::string, nullcert::cli::Format> formats{{"text", nullcert::cli::Format::text},
                                                                    {"json", nullcert::cli::Format::json}};
  sub.add_option("--format", config.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case).description(""))
      ->type_name("text|json");
  sub.add_option("--max-pairs", config.limits.max_pair_reductions, "Cap on S-pair reductions per basis computation")
      ->check(CLI::PositiveNumber);
  sub.add_option("--max-degree", config.limits.max_total_degree, "Cap on the total degree of basis elements")
      ->check(CLI::PositiveNumber);
}

void add_input(CLI::App& sub, nullcert::cli::CliConfig& config) {
  sub.add_option("input", config.input, "System file in .polysys format ('-' or omitted: stdin)");
}

}  // namespace

int main(int argc, char** argv) {
  nullcert::cli::CliConfig config;
  CLI::App app{"Groebner bases, emptiness of varieties and Nullstellensatz certificates over Q"};
  app.require_subcommand(1);

  auto* gb = app.add_subcommand("gb", "Print the reduced Groebner basis of the system");
  add_input(*gb, config);
  gb->add_option("--order", config.order, "Monomial order: lex:a,b,... or block:[a][b,...]");
  add_common_options(*gb, config);

  auto* consistent = app.add_subcommand("consistent", "Decide whether the system has a common zero");
  add_input(*consistent, config);
  add_common_options(*consistent, config);

  auto* bernd = app.add_subcommand("bernd", "Look for a final polynomial in the lex basis of the graph ideal");
  add_input(*bernd, config);
  add_common_options(*bernd, config);

  auto* certify = app.add_subcommand("certify", "Produce a verified Nullstellensatz certificate");
  add_input(*certify, config);
  certify->add_option("--order", config.order, "z-eliminating order for the scaled graph ideal");
  add_common_options(*certify, config);

  auto* fuzz = app.add_subcommand("fuzz", "Run the property suite on random inconsistent systems");
  fuzz->add_option("--seed", config.seed, "Seed of the deterministic generator");
  fuzz->add_option("--trials", config.trials, "Number of random systems");
  fuzz->add_option("--jobs", config.workers, "Worker threads (output does not depend on it)")
      ->check(CLI::PositiveNumber);
  add_common_options(*fuzz, config);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : nullcert::cli::kUsage;
  }
  config.subcommand = app.get_subcommands().front()->get_name();
  return nullcert::cli::run(config, std::cin, std::cout, std::cerr);
}
