#include "famart/cli/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <map>

#include "famart/errors.hpp"

namespace famart::cli {

namespace {

using checkers::Certificate;

const json& member(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw InvalidInput(where + " must be a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw InvalidInput(where + " is missing \"" + key + "\"");
  return *it;
}

const json* optional_member(const json& j, const char* key) {
  auto it = j.find(key);
  return it == j.end() || it->is_null() ? nullptr : &*it;
}

const json& array_of(const json& j, const std::string& where) {
  if (!j.is_array()) throw InvalidInput(where + " must be a JSON array");
  return j;
}

std::vector<Rational> rationals_from_json(const json& j, const std::string& where) {
  std::vector<Rational> out;
  const auto& a = array_of(j, where);
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(rational_from_json(a[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

json rationals_to_json(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& r : v) a.push_back(to_json(r));
  return a;
}

std::size_t index_from_json(const json& j, const std::string& where) {
  if (!j.is_number_unsigned()) throw InvalidInput(where + " must be a non-negative integer");
  return j.get<std::size_t>();
}

std::vector<std::size_t> indices_from_json(const json& j, const std::string& where) {
  std::vector<std::size_t> out;
  const auto& a = array_of(j, where);
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(index_from_json(a[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<std::vector<std::size_t>> index_sets_from_json(const json& j, const std::string& where) {
  std::vector<std::vector<std::size_t>> out;
  const auto& a = array_of(j, where);
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(indices_from_json(a[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<RandVar> randvars_from_json(const json& j, const std::string& where) {
  std::vector<RandVar> out;
  const auto& a = array_of(j, where);
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(randvar_from_json(a[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

json randvars_to_json(const std::vector<RandVar>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

/// Fap parsing inside a certificate: invariant violations are rejections.
Fap certificate_fap(const json& j, const std::string& where) {
  try {
    return fap_from_json(j, where);
  } catch (const InvalidInput& e) {
    if (std::string(e.what()).find("f.a.p.") != std::string::npos) throw CertificateRejected(e.what());
    throw;
  }
}

}  // namespace

json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const InvalidInput& e) {
      throw InvalidInput(where + ": " + e.what());
    }
  }
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw InvalidInput(where + " must be a rational string \"num/den\" or an integer");
}

json to_json(const RandVar& x) {
  json j;
  j["values"] = rationals_to_json(x.values());
  if (x.tail()) j["tail"] = to_json(*x.tail());
  return j;
}

RandVar randvar_from_json(const json& j, const std::string& where) {
  if (j.is_array()) return RandVar(rationals_from_json(j, where));
  std::optional<Rational> tail;
  if (const json* t = optional_member(j, "tail")) tail = rational_from_json(*t, where + ".tail");
  return RandVar(rationals_from_json(member(j, "values", where), where + ".values"), std::move(tail));
}

json to_json(const Fap& p) {
  json j;
  j["alpha"] = to_json(p.alpha());
  j["mass"] = rationals_to_json(p.ca_mass());
  if (p.ca_tail()) j["tail"] = to_json(*p.ca_tail());
  return j;
}

Fap fap_from_json(const json& j, const std::string& where) {
  Rational alpha = rational_from_json(member(j, "alpha", where), where + ".alpha");
  std::vector<Rational> mass = rationals_from_json(member(j, "mass", where), where + ".mass");
  std::optional<Rational> tail;
  if (const json* t = optional_member(j, "tail")) tail = rational_from_json(*t, where + ".tail");
  return Fap::create(std::move(alpha), std::move(mass), std::move(tail));
}

ModelFile parse_model_file(const json& j) {
  if (!j.is_object()) throw InvalidInput("model file must be a JSON object");
  const json& states = member(j, "states", "model file");
  if (!states.is_number_unsigned()) throw InvalidInput("\"states\" must be a non-negative integer");
  const json& tail = member(j, "tail", "model file");
  if (!tail.is_boolean()) throw InvalidInput("\"tail\" must be true or false");

  std::vector<Rational> p0 = rationals_from_json(member(j, "p0", "model file"), "p0");
  if (p0.size() != states.get<std::size_t>()) {
    throw InvalidInput("\"p0\" has " + std::to_string(p0.size()) + " entries but \"states\" is " +
                       std::to_string(states.get<std::size_t>()));
  }
  std::optional<Rational> p0_tail;
  const json* pt = optional_member(j, "p0_tail");
  if (tail.get<bool>()) {
    if (!pt) throw InvalidInput("tail model needs \"p0_tail\"");
    p0_tail = rational_from_json(*pt, "p0_tail");
  } else if (pt) {
    throw InvalidInput("\"p0_tail\" given for a model without tail point");
  }
  Model model = Model::create(std::move(p0), std::move(p0_tail));

  const json* basis_j = optional_member(j, "basis");
  const json* filtration_j = optional_member(j, "filtration");
  const json* process_j = optional_member(j, "process");
  if ((filtration_j == nullptr) != (process_j == nullptr)) {
    throw InvalidInput("\"filtration\" and \"process\" must be given together");
  }
  LinSpace basis;
  std::optional<spaces::Filtration> filtration;
  std::optional<spaces::AdaptedProcess> process;
  if (filtration_j) {
    if (basis_j) throw InvalidInput("explicit \"basis\" is not allowed when \"filtration\" and \"process\" are given");
    std::vector<spaces::Partition> partitions;
    const auto& fa = array_of(*filtration_j, "filtration");
    for (std::size_t t = 0; t < fa.size(); ++t) {
      partitions.push_back(index_sets_from_json(fa[t], "filtration[" + std::to_string(t) + "]"));
    }
    filtration = spaces::Filtration(std::move(partitions));
    process = randvars_from_json(*process_j, "process");
    basis = spaces::trading_space(model, *filtration, *process);
  } else if (basis_j) {
    basis = LinSpace(randvars_from_json(*basis_j, "basis"));
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const std::string what = "basis[" + std::to_string(k) + "]";
      basis[k].require_conforms(model, what.c_str());
    }
  } else {
    throw InvalidInput("model file needs \"basis\" or \"filtration\" + \"process\"");
  }

  ModelFile f{std::move(model), std::move(basis)};
  f.filtration = std::move(filtration);
  f.process = std::move(process);
  if (const json* w = optional_member(j, "weight")) {
    f.weight = randvar_from_json(*w, "weight");
    f.weight->require_conforms(f.model, "weight");
  }
  if (const json* c = optional_member(j, "coherence")) {
    f.bets = randvars_from_json(member(*c, "bets", "coherence"), "coherence.bets");
    f.bet_previsions = rationals_from_json(member(*c, "previsions", "coherence"), "coherence.previsions");
    if (f.bets->size() != f.bet_previsions->size()) {
      throw InvalidInput("coherence: bets and previsions differ in length");
    }
    for (const auto& d : *f.bets) d.require_conforms(f.model, "coherence bet");
  }
  if (const json* e = optional_member(j, "prevision")) {
    f.prevision = rationals_from_json(*e, "prevision");
    if (f.prevision->size() != f.basis.size()) {
      throw InvalidInput("\"prevision\" needs one value per basis element (" + std::to_string(f.basis.size()) + ")");
    }
  }
  if (const json* ev = optional_member(j, "events")) f.events = index_sets_from_json(*ev, "events");
  if (const json* q = optional_member(j, "reference_measure")) {
    f.reference_measure = fap_from_json(*q, "reference_measure");
    f.reference_measure->require_conforms(f.model);
  }
  return f;
}

json to_json(const ModelFile& f) {
  json j;
  j["states"] = f.model.n_states();
  j["tail"] = f.model.has_tail();
  j["p0"] = rationals_to_json(f.model.p0_mass());
  if (f.model.has_tail()) j["p0_tail"] = to_json(*f.model.p0_tail());
  if (f.filtration && f.process) {
    j["filtration"] = f.filtration->partitions();
    j["process"] = randvars_to_json(*f.process);
  } else {
    j["basis"] = randvars_to_json(f.basis.basis());
  }
  if (f.weight) j["weight"] = to_json(*f.weight);
  if (f.bets) j["coherence"] = {{"bets", randvars_to_json(*f.bets)}, {"previsions", rationals_to_json(*f.bet_previsions)}};
  if (f.prevision) j["prevision"] = rationals_to_json(*f.prevision);
  if (f.events) j["events"] = *f.events;
  if (f.reference_measure) j["reference_measure"] = to_json(*f.reference_measure);
  return j;
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

ModelFile load_model_file(const std::string& path) { return parse_model_file(load_json(path)); }

std::string model_digest(const ModelFile& f) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : to_json(f).dump()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json to_json(const Certificate& c) {
  json j;
  j["kind"] = std::string(checkers::certificate_kind(c));
  std::visit(
      [&j](const auto& cert) {
        using T = std::decay_t<decltype(cert)>;
        using namespace checkers;
        if constexpr (std::is_same_v<T, ArbitrageVector>) {
          j["coefficients"] = rationals_to_json(cert.coefficients);
          j["x"] = to_json(cert.x);
        } else if constexpr (std::is_same_v<T, MartingaleFap>) {
          j["fap"] = to_json(cert.fap);
          j["equivalent"] = cert.equivalent;
          j["charges"] = rationals_to_json(cert.charges);
        } else if constexpr (std::is_same_v<T, SeparatingFunctional>) {
          j["fap"] = to_json(cert.fap);
          j["open_set"] = cert.open_set;
          j["charges"] = rationals_to_json(cert.charges);
        } else if constexpr (std::is_same_v<T, FarkasWitness>) {
          j["weights"] = rationals_to_json(cert.weights);
        } else if constexpr (std::is_same_v<T, CStarBound>) {
          j["value"] = to_json(cert.value);
          json bounds = json::array();
          for (const auto& b : cert.bounds) {
            bounds.push_back({{"coordinate", b.coordinate}, {"weights", rationals_to_json(b.weights)}, {"bound", to_json(b.bound)}});
          }
          j["bounds"] = std::move(bounds);
          j["attaining_coordinate"] = cert.attaining_coordinate;
          j["attaining_coefficients"] = rationals_to_json(cert.attaining_coefficients);
          j["attaining_x"] = to_json(cert.attaining_x);
          if (cert.qstar) j["qstar"] = to_json(*cert.qstar);
        } else if constexpr (std::is_same_v<T, SureLossBet>) {
          j["stakes"] = rationals_to_json(cert.stakes);
          j["gain"] = to_json(cert.gain);
        } else if constexpr (std::is_same_v<T, Witness>) {
          j["coefficients"] = rationals_to_json(cert.coefficients);
          j["x"] = to_json(cert.x);
          j["event"] = cert.event;
          if (cert.gap) j["gap"] = to_json(*cert.gap);
        } else if constexpr (std::is_same_v<T, RepresentingFap>) {
          j["fap"] = to_json(cert.fap);
          j["charges"] = rationals_to_json(cert.charges);
        }
      },
      c);
  return j;
}

Certificate certificate_from_json(const json& j) {
  using namespace checkers;
  const json& kind_j = member(j, "kind", "certificate");
  if (!kind_j.is_string()) throw InvalidInput("certificate kind must be a string");
  const std::string kind = kind_j.get<std::string>();
  const std::string w = "certificate";
  auto rats = [&](const char* key) { return rationals_from_json(member(j, key, w), w + "." + key); };
  auto rat = [&](const char* key) { return rational_from_json(member(j, key, w), w + "." + key); };
  auto rv = [&](const char* key) { return randvar_from_json(member(j, key, w), w + "." + key); };

  if (kind == "trivial") return Trivial{};
  if (kind == "arbitrage_vector") return ArbitrageVector{rats("coefficients"), rv("x")};
  if (kind == "martingale_fap") {
    const json& eq = member(j, "equivalent", w);
    if (!eq.is_boolean()) throw InvalidInput("certificate.equivalent must be a boolean");
    return MartingaleFap{certificate_fap(member(j, "fap", w), "certificate.fap"), eq.get<bool>(), rats("charges")};
  }
  if (kind == "separating_functional") {
    const json& u = member(j, "open_set", w);
    if (!u.is_string()) throw InvalidInput("certificate.open_set must be a string");
    return SeparatingFunctional{certificate_fap(member(j, "fap", w), "certificate.fap"), u.get<std::string>(),
                                rats("charges")};
  }
  if (kind == "farkas_witness") return FarkasWitness{rats("weights")};
  if (kind == "cstar_bound") {
    CStarBound c;
    c.value = rat("value");
    const auto& bounds = array_of(member(j, "bounds", w), "certificate.bounds");
    for (std::size_t i = 0; i < bounds.size(); ++i) {
      const std::string bw = "certificate.bounds[" + std::to_string(i) + "]";
      c.bounds.push_back({index_from_json(member(bounds[i], "coordinate", bw), bw + ".coordinate"),
                          rationals_from_json(member(bounds[i], "weights", bw), bw + ".weights"),
                          rational_from_json(member(bounds[i], "bound", bw), bw + ".bound")});
    }
    c.attaining_coordinate = index_from_json(member(j, "attaining_coordinate", w), "certificate.attaining_coordinate");
    c.attaining_coefficients = rats("attaining_coefficients");
    c.attaining_x = rv("attaining_x");
    if (const json* q = optional_member(j, "qstar")) c.qstar = certificate_fap(*q, "certificate.qstar");
    return c;
  }
  if (kind == "sure_loss_bet") return SureLossBet{rats("stakes"), rat("gain")};
  if (kind == "witness") {
    Witness c{rats("coefficients"), rv("x"), indices_from_json(member(j, "event", w), "certificate.event"), {}};
    if (const json* g = optional_member(j, "gap")) c.gap = rational_from_json(*g, "certificate.gap");
    return c;
  }
  if (kind == "representing_fap") {
    return RepresentingFap{certificate_fap(member(j, "fap", w), "certificate.fap"), rats("charges")};
  }
  throw InvalidInput("unknown certificate kind \"" + kind + "\"");
}

json to_json(const checkers::Verdict& v) {
  json j;
  j["condition"] = std::string(checkers::condition_id(v.condition));
  j["holds"] = v.holds;
  j["certificate"] = to_json(v.certificate);
  j["narrative"] = v.narrative;
  json problem = json::object();
  const auto& p = v.problem;
  if (p.q) problem["q"] = to_json(*p.q);
  if (p.c) problem["c"] = to_json(*p.c);
  if (p.weight) problem["weight"] = to_json(*p.weight);
  if (p.bets) problem["bets"] = randvars_to_json(*p.bets);
  if (p.previsions) problem["previsions"] = rationals_to_json(*p.previsions);
  if (p.events) problem["events"] = *p.events;
  j["problem"] = std::move(problem);
  json stats = json::object();
  for (const auto& [k, val] : v.stats) stats[k] = val;
  j["stats"] = std::move(stats);
  return j;
}

checkers::Verdict verdict_from_json(const json& j) {
  checkers::Verdict v;
  const json& cond = member(j, "condition", "verdict");
  if (!cond.is_string()) throw InvalidInput("verdict.condition must be a string");
  v.condition = checkers::parse_condition(cond.get<std::string>());
  const json& holds = member(j, "holds", "verdict");
  if (!holds.is_boolean()) throw InvalidInput("verdict.holds must be a boolean");
  v.holds = holds.get<bool>();
  v.certificate = certificate_from_json(member(j, "certificate", "verdict"));
  if (const json* n = optional_member(j, "narrative"); n && n->is_string()) v.narrative = n->get<std::string>();
  if (const json* p = optional_member(j, "problem")) {
    if (!p->is_object()) throw InvalidInput("verdict.problem must be an object");
    if (const json* q = optional_member(*p, "q")) v.problem.q = fap_from_json(*q, "problem.q");
    if (const json* c = optional_member(*p, "c")) v.problem.c = rational_from_json(*c, "problem.c");
    if (const json* y = optional_member(*p, "weight")) v.problem.weight = randvar_from_json(*y, "problem.weight");
    if (const json* b = optional_member(*p, "bets")) v.problem.bets = randvars_from_json(*b, "problem.bets");
    if (const json* e = optional_member(*p, "previsions")) v.problem.previsions = rationals_from_json(*e, "problem.previsions");
    if (const json* ev = optional_member(*p, "events")) v.problem.events = index_sets_from_json(*ev, "problem.events");
  }
  if (const json* s = optional_member(j, "stats"); s && s->is_object()) {
    for (const auto& [k, val] : s->items()) {
      if (val.is_string()) v.stats.emplace_back(k, val.get<std::string>());
    }
  }
  return v;
}

}  // namespace famart::cli
