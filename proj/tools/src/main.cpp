#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "famart/cli/commands.hpp"
#include "famart/errors.hpp"

using namespace famart::cli;

namespace {

std::vector<unsigned> parse_horizons(const std::string& s) {
  std::vector<unsigned> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(static_cast<unsigned>(std::stoul(item)));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"famart: martingale f.a.p. conditions with exact certificates"};
  app.require_subcommand(1);
  std::string format = "json";

  CheckOptions check;
  auto* check_cmd = app.add_subcommand("check", "decide one condition on a model file");
  check_cmd->add_option("model", check.path, "model file")->required();
  check_cmd->add_option("--condition", check.condition, "3, 4, 5, 5*, 6, 7, 8, 10 or coherence")->required();
  check_cmd->add_option("--c", check.c, "constant c for (3) when the file has a reference_measure");
  check_cmd->add_option("--format", format, "json or text");

  std::string report_path;
  auto* report_cmd = app.add_subcommand("report", "decide every applicable condition and audit the results");
  report_cmd->add_option("model", report_path, "model file")->required();
  report_cmd->add_option("--format", format, "json or text");

  ExampleOptions ex;
  auto* ex_cmd = app.add_subcommand("examples", "write a generated model file");
  ex_cmd->add_option("name", ex.name, "dmw, bp, harmonic or finite-random")->required();
  ex_cmd->add_option("--N", ex.n_states, "number of explicit states (bp, harmonic)");
  ex_cmd->add_option("--k", ex.k, "truncation index (bp)");
  ex_cmd->add_option("--p", ex.p, "coin bias, 0 < p < 1/2 (dmw)");
  ex_cmd->add_option("--n", ex.n, "horizon (dmw)");
  ex_cmd->add_option("--seed", ex.seed, "seed (finite-random)");
  ex_cmd->add_option("-o,--output", ex.output, "output file instead of standard output");

  std::string certify_model, certify_cert;
  auto* cert_cmd = app.add_subcommand("certify", "re-validate a verdict or report against a model file");
  cert_cmd->add_option("model", certify_model, "model file")->required();
  cert_cmd->add_option("certificate", certify_cert, "verdict or report JSON")->required();

  std::string div_p = "1/3", div_n = "10,20,40";
  auto* div_cmd = app.add_subcommand("divergence", "Binomial(n,p) against Binomial(n,1/2), exactly");
  div_cmd->add_option("--p", div_p, "coin bias, 0 < p < 1/2");
  div_cmd->add_option("--horizons", div_n, "comma separated horizons");
  div_cmd->add_option("--format", format, "json or text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kInvalid;
  }

  try {
    const Format fmt = parse_format(format);
    if (*check_cmd) {
      check.format = fmt;
      return cmd_check(check, std::cout, std::cerr);
    }
    if (*report_cmd) return cmd_report(report_path, fmt, std::cout, std::cerr);
    if (*ex_cmd) return cmd_examples(ex, std::cout, std::cerr);
    if (*cert_cmd) return cmd_certify(certify_model, certify_cert, std::cout, std::cerr);
    if (*div_cmd) return cmd_divergence(div_p, parse_horizons(div_n), fmt, std::cout, std::cerr);
  } catch (const famart::InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  }
  return kInvalid;
}
