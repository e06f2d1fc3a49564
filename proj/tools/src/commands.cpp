#include "famart/cli/commands.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "famart/errors.hpp"
#include "famart/spaces.hpp"

namespace famart::cli {

using checkers::Condition;
using checkers::Verdict;

namespace {

std::vector<std::vector<std::size_t>> canonical_events(std::vector<std::vector<std::size_t>> events) {
  for (auto& e : events) {
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
  }
  return events;
}

void print_verdict_text(const Verdict& v, std::ostream& out) {
  out << checkers::condition_id(v.condition) << (v.holds ? " holds" : " fails") << "\n";
  out << "  certificate: " << checkers::certificate_kind(v.certificate) << "\n";
  out << "  " << v.narrative << "\n";
  for (const auto& [k, val] : v.stats) out << "  " << k << " = " << val << "\n";
}

/// Runs `body`, mapping input errors to exit code 2 with a diagnostic.
template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kInvalid;
}

}  // namespace

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "text") return Format::Text;
  throw InvalidInput("unknown format \"" + s + "\" (expected json or text)");
}

RandVar default_weight(const Model& m) {
  if (!m.has_tail()) return RandVar::constant(m, Rational(1));
  return RandVar(m.p0_mass(), Rational(0));
}

checkers::Problem expected_problem(const ModelFile& f, Condition c) {
  checkers::Problem p;
  const std::size_t k = f.basis.size();
  switch (c) {
    case Condition::EquivalentMartingale:
      p.q = f.reference_measure;
      break;
    case Condition::WeightedBoundedRatio:
      p.weight = f.weight ? *f.weight : default_weight(f.model);
      break;
    case Condition::SupDominatesPrevision:
      p.previsions = f.prevision ? *f.prevision : std::vector<Rational>(k);
      p.events = canonical_events(f.events ? *f.events : std::vector<std::vector<std::size_t>>{f.model.support()});
      break;
    case Condition::Coherence:
      p.bets = f.bets ? *f.bets : f.basis.basis();
      p.previsions = f.bet_previsions ? *f.bet_previsions : std::vector<Rational>(p.bets->size());
      break;
    default:
      break;
  }
  return p;
}

Verdict run_condition(const ModelFile& f, Condition c, const Rational& c3) {
  const Model& m = f.model;
  const LinSpace& l = f.basis;
  const checkers::Problem p = expected_problem(f, c);
  switch (c) {
    case Condition::EquivalentMartingale:
      return p.q ? checkers::verify_condition3(m, l, *p.q, c3) : checkers::find_emfap(m, l);
    case Condition::EssSupNonNegative: return checkers::check_acmfap(m, l);
    case Condition::BoundedRatio: return checkers::check_bounded_ratio(m, l);
    case Condition::WeightedBoundedRatio: return checkers::verify_condition5star(m, l, *p.weight);
    case Condition::NoArbitrage: return checkers::check_no_arbitrage(m, l);
    case Condition::SupDominatesPrevision: return checkers::check_sup_dominates_prevision(m, l, *p.previsions, *p.events);
    case Condition::VanishingAtInfinity: return checkers::check_condition8(m, l);
    case Condition::NormClosure: return checkers::check_norm_closure(m, l);
    case Condition::Coherence: return checkers::check_coherence(*p.bets, *p.previsions, m);
  }
  throw InvalidInput("unknown condition");
}

Report build_report(const ModelFile& f) {
  Report r;
  r.digest = model_digest(f);
  for (Condition c : checkers::kAllConditions) {
    if (c == Condition::VanishingAtInfinity && !f.model.has_tail()) continue;
    // (3) is reported through the equivalent martingale f.a.p. search, which
    // decides it for every (Q, c) at once.
    r.verdicts.push_back(c == Condition::EquivalentMartingale ? checkers::find_emfap(f.model, f.basis)
                                                              : run_condition(f, c));
  }
  auto holds = [&r](Condition c) {
    for (const auto& v : r.verdicts) {
      if (v.condition == c) return v.holds;
    }
    throw std::logic_error("condition missing from report");
  };
  const bool h3 = holds(Condition::EquivalentMartingale);
  const bool h4 = holds(Condition::EssSupNonNegative);
  const bool h5 = holds(Condition::BoundedRatio);
  const bool h6 = holds(Condition::NoArbitrage);
  const bool h10 = holds(Condition::NormClosure);
  r.implications.emplace_back("(3) => (6)", !h3 || h6);
  r.implications.emplace_back("(6) => (4)", !h6 || h4);
  r.implications.emplace_back("(5) finite => (3)", !h5 || h3);
  r.implications.emplace_back("(10) <=> (6) (atomic P0)", h10 == h6);
  if (!f.model.has_tail()) r.implications.emplace_back("(6) => (3) (finite model)", !h6 || h3);

  for (const auto& [claim, ok] : r.implications) {
    if (!ok) r.audit_failures.push_back("implication violated: " + claim);
  }
  for (const auto& v : r.verdicts) {
    if (auto val = checkers::validate(f.model, f.basis, v); !val) {
      r.audit_failures.push_back(std::string(checkers::condition_id(v.condition)) +
                                 " certificate does not re-validate: " + val.reason);
    }
  }
  return r;
}

json to_json(const Report& r) {
  json j;
  j["model_digest"] = r.digest;
  json verdicts = json::array();
  for (const auto& v : r.verdicts) verdicts.push_back(to_json(v));
  j["verdicts"] = std::move(verdicts);
  json imp = json::array();
  for (const auto& [claim, ok] : r.implications) imp.push_back({{"claim", claim}, {"ok", ok}});
  j["implications"] = std::move(imp);
  j["audit"] = r.audit_failures.empty() ? json("passed") : json(r.audit_failures);
  return j;
}

int cmd_check(const CheckOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ModelFile f = load_model_file(opt.path);
    const Condition c = checkers::parse_condition(opt.condition);
    const Verdict v = run_condition(f, c, Rational::parse(opt.c));
    if (opt.format == Format::Json) {
      out << to_json(v).dump(2) << "\n";
    } else {
      print_verdict_text(v, out);
    }
    return v.holds ? kHolds : kFails;
  });
}

int cmd_report(const std::string& path, Format format, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ModelFile f = load_model_file(path);
    const Report r = build_report(f);
    if (format == Format::Json) {
      out << to_json(r).dump(2) << "\n";
    } else {
      out << "model " << r.digest << "\n";
      for (const auto& v : r.verdicts) {
        out << std::left << std::setw(11) << checkers::condition_id(v.condition) << std::setw(7)
            << (v.holds ? "holds" : "fails") << checkers::certificate_kind(v.certificate);
        for (const auto& [k, val] : v.stats) out << "  " << k << "=" << val;
        out << "\n";
      }
      out << "implications:\n";
      for (const auto& [claim, ok] : r.implications) out << "  " << (ok ? "ok   " : "FAIL ") << claim << "\n";
      out << "audit: " << (r.audit_failures.empty() ? "passed" : "FAILED") << "\n";
    }
    for (const auto& msg : r.audit_failures) err << "audit: " << msg << "\n";
    return r.audit_failures.empty() ? kHolds : kAuditFailed;
  });
}

ModelFile example_file(const ExampleOptions& opt) {
  if (opt.name == "dmw") {
    auto fm = spaces::example_dmw(Rational::parse(opt.p), opt.n);
    LinSpace l = spaces::trading_space(fm.model, fm.filtration, fm.process);
    ModelFile f{std::move(fm.model), std::move(l)};
    f.filtration = std::move(fm.filtration);
    f.process = std::move(fm.process);
    return f;
  }
  if (opt.name == "bp") {
    auto ex = spaces::example_bp(opt.n_states, opt.k);
    auto& fm = ex.filtered;
    LinSpace l = spaces::trading_space(fm.model, fm.filtration, fm.process);
    ModelFile f{std::move(fm.model), std::move(l)};
    f.filtration = std::move(fm.filtration);
    f.process = std::move(fm.process);
    f.reference_measure = std::move(ex.q_ref);
    return f;
  }
  if (opt.name == "harmonic") {
    auto ex = spaces::example_harmonic(opt.n_states);
    return ModelFile{std::move(ex.model), std::move(ex.space)};
  }
  if (opt.name == "finite-random") {
    auto ex = spaces::example_finite_random(opt.seed);
    return ModelFile{std::move(ex.model), std::move(ex.space)};
  }
  throw InvalidInput("unknown example \"" + opt.name + "\" (expected dmw, bp, harmonic or finite-random)");
}

int cmd_examples(const ExampleOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const std::string text = to_json(example_file(opt)).dump(2) + "\n";
    if (opt.output.empty()) {
      out << text;
    } else {
      std::ofstream file(opt.output);
      if (!file) throw InvalidInput("cannot write " + opt.output);
      file << text;
    }
    return kHolds;
  });
}

int certify_document(const ModelFile& f, const json& doc, std::ostream& out) {
  std::vector<json> items;
  if (doc.is_object() && doc.contains("verdicts")) {
    if (!doc["verdicts"].is_array()) throw InvalidInput("\"verdicts\" must be an array");
    items.assign(doc["verdicts"].begin(), doc["verdicts"].end());
  } else {
    items.push_back(doc);
  }

  bool all_ok = true;
  for (const auto& item : items) {
    std::string label = item.is_object() && item.contains("condition") && item["condition"].is_string()
                            ? item["condition"].get<std::string>()
                            : "?";
    std::string reason;
    try {
      const Verdict v = verdict_from_json(item);
      const checkers::Problem want = expected_problem(f, v.condition);
      const auto& got = v.problem;
      if (v.condition == Condition::EquivalentMartingale) {
        if (got.q && f.reference_measure && *got.q != *f.reference_measure) {
          reason = "certificate uses a reference measure other than the model file's";
        } else if (got.q && !f.reference_measure && !v.holds) {
          reason = "a failure for one particular Q does not refute (3)";
        }
      } else if (want.weight && got.weight != want.weight) {
        reason = "certificate was issued for a different weight Y";
      } else if (v.condition == Condition::SupDominatesPrevision &&
                 (got.previsions != want.previsions || !got.events || canonical_events(*got.events) != *want.events)) {
        reason = "certificate was issued for different previsions or events";
      } else if (v.condition == Condition::Coherence && (got.bets != want.bets || got.previsions != want.previsions)) {
        reason = "certificate was issued for different bets or previsions";
      }
      if (reason.empty()) {
        if (auto val = checkers::validate(f.model, f.basis, v); !val) reason = val.reason;
      }
    } catch (const CertificateRejected& e) {
      reason = e.what();
    }
    if (reason.empty()) {
      out << label << ": certificate valid\n";
    } else {
      all_ok = false;
      out << label << ": certificate rejected: " << reason << "\n";
    }
  }
  return all_ok ? kHolds : kFails;
}

int cmd_certify(const std::string& model_path, const std::string& certificate_path, std::ostream& out,
                std::ostream& err) {
  return guarded(err, [&] { return certify_document(load_model_file(model_path), load_json(certificate_path), out); });
}

int cmd_divergence(const std::string& p, const std::vector<unsigned>& horizons, Format format, std::ostream& out,
                   std::ostream& err) {
  return guarded(err, [&] {
    const auto rows = checkers::divergence_study(Rational::parse(p), horizons);
    if (format == Format::Json) {
      json a = json::array();
      for (const auto& r : rows) {
        a.push_back({{"n", r.n},
                     {"total_variation", to_json(r.total_variation)},
                     {"min_likelihood_ratio", to_json(r.min_likelihood_ratio)},
                     {"max_likelihood_ratio", to_json(r.max_likelihood_ratio)}});
      }
      out << a.dump(2) << "\n";
    } else {
      out << std::left << std::setw(6) << "n" << std::setw(14) << "TV (approx)" << std::setw(14) << "min LR"
          << std::setw(14) << "max LR" << "TV (exact)\n";
      for (const auto& r : rows) {
        out << std::setw(6) << r.n << std::setw(14) << r.total_variation.raw().get_d() << std::setw(14)
            << r.min_likelihood_ratio.raw().get_d() << std::setw(14) << r.max_likelihood_ratio.raw().get_d()
            << r.total_variation << "\n";
      }
    }
    return kHolds;
  });
}

}  // namespace famart::cli
