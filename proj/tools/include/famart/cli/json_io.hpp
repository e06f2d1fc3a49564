#ifndef FAMART_CLI_JSON_IO_HPP
#define FAMART_CLI_JSON_IO_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "famart/checkers.hpp"
#include "famart/spaces.hpp"

namespace famart::cli {

using nlohmann::json;

/// A certificate that parses but cannot be a valid object (e.g. an f.a.p.
/// whose masses do not sum to 1). Distinct from malformed input.
struct CertificateRejected : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ModelFile {
  ModelFile(Model m, LinSpace l) : model(std::move(m)), basis(std::move(l)) {}

  Model model;
  LinSpace basis;
  std::optional<spaces::Filtration> filtration;
  std::optional<spaces::AdaptedProcess> process;
  std::optional<RandVar> weight;
  std::optional<std::vector<RandVar>> bets;
  std::optional<std::vector<Rational>> bet_previsions;
  std::optional<std::vector<Rational>> prevision;
  std::optional<std::vector<std::vector<std::size_t>>> events;
  std::optional<Fap> reference_measure;
};

json to_json(const Rational& r);
Rational rational_from_json(const json& j, const std::string& where);

json to_json(const RandVar& x);
RandVar randvar_from_json(const json& j, const std::string& where);

json to_json(const Fap& p);
Fap fap_from_json(const json& j, const std::string& where);

/// Throws InvalidInput naming the offending key on any violation.
ModelFile parse_model_file(const json& j);
json to_json(const ModelFile& f);
ModelFile load_model_file(const std::string& path);
json load_json(const std::string& path);

/// FNV-1a 64 over the canonical serialization, as 16 hex digits.
std::string model_digest(const ModelFile& f);

json to_json(const checkers::Certificate& c);
checkers::Certificate certificate_from_json(const json& j);
json to_json(const checkers::Verdict& v);
checkers::Verdict verdict_from_json(const json& j);

}  // namespace famart::cli

#endif  // FAMART_CLI_JSON_IO_HPP
