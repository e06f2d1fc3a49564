#ifndef FAMART_CLI_COMMANDS_HPP
#define FAMART_CLI_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "famart/checkers.hpp"
#include "famart/cli/json_io.hpp"

namespace famart::cli {

/// Process exit codes.
enum ExitCode : int { kHolds = 0, kFails = 1, kInvalid = 2, kAuditFailed = 3 };

enum class Format { Json, Text };
Format parse_format(const std::string& s);

struct CheckOptions {
  std::string path;
  std::string condition;
  Format format = Format::Json;
  std::string c = "1";  ///< constant for (3) when the file carries a reference measure
};

struct ExampleOptions {
  std::string name;  ///< dmw, bp, harmonic, finite-random
  unsigned n_states = 8;
  unsigned k = 4;
  std::string p = "1/3";
  unsigned n = 2;
  std::uint64_t seed = 0;
  std::string output;  ///< empty: standard output
};

/// Runs one condition on a parsed model file, filling defaults for the
/// auxiliary inputs the file does not provide.
checkers::Verdict run_condition(const ModelFile& f, checkers::Condition c, const Rational& c3 = Rational(1));

/// Auxiliary inputs a certificate for `c` must have been issued against.
checkers::Problem expected_problem(const ModelFile& f, checkers::Condition c);

/// Y for (5*) when the file gives none: the P0 masses with tail 0 on tail
/// models, the constant 1 otherwise.
RandVar default_weight(const Model& m);

struct Report {
  std::string digest;
  std::vector<checkers::Verdict> verdicts;
  std::vector<std::pair<std::string, bool>> implications;
  std::vector<std::string> audit_failures;
};

Report build_report(const ModelFile& f);
json to_json(const Report& r);

int cmd_check(const CheckOptions& opt, std::ostream& out, std::ostream& err);
int cmd_report(const std::string& path, Format format, std::ostream& out, std::ostream& err);
int cmd_examples(const ExampleOptions& opt, std::ostream& out, std::ostream& err);
/// cmd_certify on already loaded inputs. `doc` is one verdict or a report.
/// Throws InvalidInput on malformed documents.
int certify_document(const ModelFile& f, const json& doc, std::ostream& out);
int cmd_certify(const std::string& model_path, const std::string& certificate_path, std::ostream& out,
                std::ostream& err);
int cmd_divergence(const std::string& p, const std::vector<unsigned>& horizons, Format format, std::ostream& out,
                   std::ostream& err);

/// Model file for a named generator (no I/O).
ModelFile example_file(const ExampleOptions& opt);

}  // namespace famart::cli

#endif  // FAMART_CLI_COMMANDS_HPP
