#include <algorithm>
#include <set>

#include "famart/checkers.hpp"
#include "famart/errors.hpp"

namespace famart::checkers {

namespace {

// Each check returns an empty string on success, otherwise the reason.
using Reason = std::string;

Reason fap_ok(const Fap& p, const Model& m) {
  if (!p.conforms(m)) return "f.a.p. does not match the model shape";
  return {};
}

Reason charges_ok(const Fap& p, const std::vector<Rational>& charges, const Model& m) {
  if (auto r = fap_ok(p, m); !r.empty()) return r;
  if (charges.size() != m.dimension()) return "charge vector has the wrong length";
  for (std::size_t c = 0; c < charges.size(); ++c) {
    if (charges[c] != p.charge(c)) return "stated charge of coordinate " + std::to_string(c) + " disagrees with P";
  }
  return {};
}

Reason in_span(const Model& m, const LinSpace& l, const std::vector<Rational>& b, const RandVar& x) {
  if (b.size() != l.size()) return "coefficient count " + std::to_string(b.size()) + " != basis size";
  if (!x.conforms(m)) return "random variable does not match the model shape";
  if (l.combine(m, b) != x) return "X is not sum_k b_k X_k";
  return {};
}

Reason martingale(const Model& m, const LinSpace& l, const Fap& p) {
  if (auto r = fap_ok(p, m); !r.empty()) return r;
  for (std::size_t k = 0; k < l.size(); ++k) {
    const Rational e = expect(p, l[k]);
    if (!e.is_zero()) return "E_P(X_" + std::to_string(k) + ") = " + e.str() + " != 0";
  }
  return {};
}

Reason arbitrage(const Model& m, const LinSpace& l, const ArbitrageVector& a) {
  if (auto r = in_span(m, l, a.coefficients, a.x); !r.empty()) return r;
  bool positive = false;
  for (std::size_t c : m.support()) {
    if (a.x.at(c).is_negative()) return "X(" + std::to_string(c) + ") < 0 on the support";
    positive = positive || a.x.at(c).is_positive();
  }
  if (!positive) return "X vanishes on the support";
  return {};
}

Reason weights_on_support(const Model& m, const std::vector<Rational>& w, bool strict) {
  if (w.size() != m.dimension()) return "weight vector has the wrong length";
  for (std::size_t c = 0; c < w.size(); ++c) {
    if (w[c].is_negative()) return "negative weight at coordinate " + std::to_string(c);
    if (!m.charged(c) && !w[c].is_zero()) return "weight on null coordinate " + std::to_string(c);
    if (strict && m.charged(c) && !w[c].is_positive()) return "zero weight on charged coordinate " + std::to_string(c);
  }
  return {};
}

Rational weighted_value(const std::vector<Rational>& w, const RandVar& x) {
  Rational total;
  for (std::size_t c = 0; c < w.size(); ++c) total += w[c] * x.at(c);
  return total;
}

Reason cstar_bound(const Model& m, const LinSpace& basis, const CStarBound& cert) {
  const auto support = m.support();
  if (cert.bounds.size() != support.size()) return "need one coordinate bound per charged coordinate";
  Rational best;
  for (std::size_t j = 0; j < support.size(); ++j) {
    const auto& b = cert.bounds[j];
    const std::string at = " (coordinate " + std::to_string(support[j]) + ")";
    if (b.coordinate != support[j]) return "coordinate bounds out of order" + at;
    if (auto r = weights_on_support(m, b.weights, false); !r.empty()) return r + at;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (weighted_value(b.weights, basis[k]) + basis[k].at(b.coordinate) != Rational(0)) {
        return "dual identity fails for basis element " + std::to_string(k) + at;
      }
    }
    if (sum(b.weights) != b.bound) return "weights do not sum to the stated bound" + at;
    if (j == 0 || b.bound > best) best = b.bound;
  }
  if (best != cert.value) return "c* " + cert.value.str() + " is not the largest coordinate bound " + best.str();
  if (!m.charged(cert.attaining_coordinate)) return "attaining coordinate is not charged";
  if (cert.attaining_coefficients.size() != basis.size()) return "attaining coefficients have the wrong length";
  const RandVar& x = cert.attaining_x;
  if (!x.conforms(m) || basis.combine(m, cert.attaining_coefficients) != x) {
    return "attaining X is not the combination of its coefficients";
  }
  for (std::size_t c : support) {
    if (x.at(c) < Rational(-1)) return "attaining X falls below -1 at coordinate " + std::to_string(c);
  }
  if (x.at(cert.attaining_coordinate) != cert.value) return "attaining X does not reach c*";
  return {};
}

Reason witness_on_support(const Model& m, const LinSpace& l, const Witness& w) {
  if (auto r = in_span(m, l, w.coefficients, w.x); !r.empty()) return r;
  if (w.event != m.support()) return "witness event is not the essential support";
  if (!w.gap) return "witness has no gap";
  return {};
}

template <typename T>
const T* as(const Verdict& v) {
  return std::get_if<T>(&v.certificate);
}

Reason wrong_kind(const Verdict& v) {
  return "certificate kind " + std::string(certificate_kind(v.certificate)) + " does not prove " +
         std::string(condition_id(v.condition)) + (v.holds ? " holds" : " fails");
}

Reason check(const Model& m, const LinSpace& l, const Verdict& v) {
  switch (v.condition) {
    case Condition::NoArbitrage:
      if (v.holds) {
        const auto* f = as<FarkasWitness>(v);
        if (!f) return wrong_kind(v);
        if (auto r = weights_on_support(m, f->weights, true); !r.empty()) return r;
        if (sum(f->weights) != Rational(1)) return "weights do not sum to 1";
        for (std::size_t k = 0; k < l.size(); ++k) {
          if (!weighted_value(f->weights, l[k]).is_zero()) return "weights do not annihilate X_" + std::to_string(k);
        }
        return {};
      } else {
        const auto* a = as<ArbitrageVector>(v);
        return a ? arbitrage(m, l, *a) : wrong_kind(v);
      }

    case Condition::NormClosure:
      if (v.holds) {
        const auto* s = as<SeparatingFunctional>(v);
        if (!s) return wrong_kind(v);
        if (auto r = charges_ok(s->fap, s->charges, m); !r.empty()) return r;
        if (auto r = martingale(m, l, s->fap); !r.empty()) return r;
        if (!is_equivalent(s->fap, m)) return "separating P is not equivalent to P0";
        return {};
      } else {
        const auto* a = as<ArbitrageVector>(v);
        return a ? arbitrage(m, l, *a) : wrong_kind(v);
      }

    case Condition::EquivalentMartingale:
      if (v.problem.q || v.problem.c) {
        if (!v.problem.q || !v.problem.c) return "problem records only one of Q and c";
        const Fap& q = *v.problem.q;
        const Rational& c = *v.problem.c;
        if (auto r = fap_ok(q, m); !r.empty()) return r;
        if (!q.alpha().is_zero() || !is_equivalent(q, m)) return "Q is not a countably additive measure ~ P0";
        if (!c.is_positive()) return "c must be positive";
        if (v.holds) {
          const auto* s = as<SeparatingFunctional>(v);
          if (!s) return wrong_kind(v);
          if (auto r = charges_ok(s->fap, s->charges, m); !r.empty()) return r;
          if (auto r = fap_ok(s->fap, m); !r.empty()) return r;
          if (!is_abs_continuous(s->fap, m)) return "P1 is not absolutely continuous";
          for (std::size_t k = 0; k < l.size(); ++k) {
            if (expect(s->fap, l[k]) + c * expect(q, l[k]) != Rational(0)) {
              return "E_P1(X_" + std::to_string(k) + ") != -c E_Q(X_" + std::to_string(k) + ")";
            }
          }
          return {};
        }
        const auto* w = as<Witness>(v);
        if (!w) return wrong_kind(v);
        if (auto r = witness_on_support(m, l, *w); !r.empty()) return r;
        if (*w->gap != ess_sup(-w->x, m) - c * expect(q, w->x)) return "gap != ess sup(-X) - c E_Q(X)";
        if (!w->gap->is_negative()) return "gap is not negative";
        return {};
      }
      if (v.holds) {
        const auto* mf = as<MartingaleFap>(v);
        if (!mf) return wrong_kind(v);
        if (auto r = charges_ok(mf->fap, mf->charges, m); !r.empty()) return r;
        if (auto r = martingale(m, l, mf->fap); !r.empty()) return r;
        if (!mf->equivalent || !is_equivalent(mf->fap, m)) return "P is not equivalent to P0";
        return {};
      } else {
        const auto* a = as<ArbitrageVector>(v);
        return a ? arbitrage(m, l, *a) : wrong_kind(v);
      }

    case Condition::EssSupNonNegative:
      if (v.holds) {
        const auto* mf = as<MartingaleFap>(v);
        if (!mf) return wrong_kind(v);
        if (auto r = charges_ok(mf->fap, mf->charges, m); !r.empty()) return r;
        if (auto r = martingale(m, l, mf->fap); !r.empty()) return r;
        if (!is_abs_continuous(mf->fap, m)) return "P is not absolutely continuous";
        return {};
      } else {
        const auto* w = as<Witness>(v);
        if (!w) return wrong_kind(v);
        if (auto r = witness_on_support(m, l, *w); !r.empty()) return r;
        if (*w->gap != ess_sup(w->x, m)) return "gap != ess sup(X)";
        if (!w->gap->is_negative()) return "ess sup(X) is not negative";
        return {};
      }

    case Condition::BoundedRatio:
    case Condition::WeightedBoundedRatio: {
      LinSpace basis = l;
      if (v.condition == Condition::WeightedBoundedRatio) {
        if (!v.problem.weight) return "problem does not record the weight Y";
        const RandVar& y = *v.problem.weight;
        if (!y.conforms(m)) return "weight does not match the model shape";
        for (std::size_t i = 0; i < m.n_states(); ++i) {
          if (m.charged(i) && !y.at(i).is_positive()) return "weight not positive on the support";
        }
        if (m.has_tail() && !y.tail()->is_zero()) return "weight does not vanish at the tail";
        std::vector<RandVar> weighted;
        for (const auto& x : l.basis()) weighted.push_back(product(x, y));
        basis = LinSpace(std::move(weighted));
      }
      if (v.holds) {
        const auto* cb = as<CStarBound>(v);
        if (!cb) return wrong_kind(v);
        if (auto r = cstar_bound(m, basis, *cb); !r.empty()) return r;
        if (cb->qstar) {
          if (auto r = martingale(m, l, *cb->qstar); !r.empty()) return "Q*: " + r;
          if (!cb->qstar->alpha().is_zero() || !is_abs_continuous(*cb->qstar, m)) {
            return "Q* is not a countably additive measure << P0";
          }
        }
        return {};
      }
      const auto* a = as<ArbitrageVector>(v);
      return a ? arbitrage(m, basis, *a) : wrong_kind(v);
    }

    case Condition::VanishingAtInfinity:
      if (!m.has_tail()) return "(8) needs a model with a tail point";
      if (v.holds) {
        if (!as<Trivial>(v)) return wrong_kind(v);
        for (std::size_t k = 0; k < l.size(); ++k) {
          if (!l[k].tail()->is_zero()) return "basis element " + std::to_string(k) + " has a non-zero tail";
        }
        return {};
      } else {
        const auto* w = as<Witness>(v);
        if (!w) return wrong_kind(v);
        if (auto r = in_span(m, l, w->coefficients, w->x); !r.empty()) return r;
        if (w->event != std::vector<std::size_t>{m.tail_coordinate()}) return "event is not the tail point";
        if (!w->gap || *w->gap != *w->x.tail()) return "gap is not the tail value";
        if (w->gap->is_zero()) return "tail value is zero";
        return {};
      }

    case Condition::SupDominatesPrevision: {
      if (!v.problem.previsions || !v.problem.events) return "problem does not record previsions and events";
      const auto& e = *v.problem.previsions;
      const auto& events = *v.problem.events;
      if (e.size() != l.size()) return "prevision count does not match the basis";
      if (v.holds) {
        const auto* rf = as<RepresentingFap>(v);
        if (!rf) return wrong_kind(v);
        if (auto r = charges_ok(rf->fap, rf->charges, m); !r.empty()) return r;
        if (auto r = fap_ok(rf->fap, m); !r.empty()) return r;
        for (std::size_t k = 0; k < l.size(); ++k) {
          if (expect(rf->fap, l[k]) != e[k]) return "E_P(X_" + std::to_string(k) + ") != E(X_" + std::to_string(k) + ")";
        }
        for (const auto& a : events) {
          const std::set<std::size_t> inside(a.begin(), a.end());
          for (std::size_t c = 0; c < m.dimension(); ++c) {
            if (!inside.count(c) && !rf->fap.charge(c).is_zero()) {
              return "P charges coordinate " + std::to_string(c) + " outside an event";
            }
          }
        }
        return {};
      }
      const auto* w = as<Witness>(v);
      if (!w) return wrong_kind(v);
      if (std::find(events.begin(), events.end(), w->event) == events.end()) return "event not in the family";
      if (auto r = in_span(m, l, w->coefficients, w->x); !r.empty()) return r;
      if (w->event.empty()) return w->gap ? "empty event cannot have a finite gap" : Reason{};
      for (std::size_t c : w->event) {
        if (c >= m.dimension()) return "event coordinate outside the model";
      }
      Rational sup_a = w->x.at(w->event.front());
      for (std::size_t c : w->event) sup_a = std::max(sup_a, w->x.at(c));
      if (!w->gap || *w->gap != sup_a - dot(w->coefficients, e)) return "gap != sup_A X - E(X)";
      if (!w->gap->is_negative()) return "gap is not negative";
      return {};
    }

    case Condition::Coherence: {
      if (!v.problem.bets || !v.problem.previsions) return "problem does not record bets and previsions";
      const auto& d = *v.problem.bets;
      const auto& e = *v.problem.previsions;
      if (d.size() != e.size()) return "bets and previsions do not match";
      for (const auto& x : d) {
        if (!x.conforms(m)) return "bet does not match the model shape";
      }
      if (v.holds) {
        const auto* rf = as<RepresentingFap>(v);
        if (!rf) return wrong_kind(v);
        if (auto r = charges_ok(rf->fap, rf->charges, m); !r.empty()) return r;
        if (auto r = fap_ok(rf->fap, m); !r.empty()) return r;
        for (std::size_t j = 0; j < d.size(); ++j) {
          if (expect(rf->fap, d[j]) != e[j]) return "E_P(D_" + std::to_string(j) + ") != E(D_" + std::to_string(j) + ")";
        }
        return {};
      }
      const auto* s = as<SureLossBet>(v);
      if (!s) return wrong_kind(v);
      if (s->stakes.size() != d.size()) return "stake count does not match the bets";
      if (!s->gain.is_positive()) return "gain is not positive";
      std::optional<Rational> worst;
      for (std::size_t c = 0; c < m.dimension(); ++c) {
        Rational g;
        for (std::size_t j = 0; j < d.size(); ++j) g += s->stakes[j] * (d[j].at(c) - e[j]);
        if (!worst || g < *worst) worst = g;
      }
      if (*worst != s->gain) return "minimum gain " + worst->str() + " != stated gain " + s->gain.str();
      return {};
    }
  }
  return "unknown condition";
}

}  // namespace

Validation validate(const Model& m, const LinSpace& l, const Verdict& verdict) {
  if (!l.basis().empty()) {
    for (const auto& x : l.basis()) {
      if (!x.conforms(m)) return {false, "basis does not match the model shape"};
    }
  }
  try {
    Reason r = check(m, l, verdict);
    if (r.empty()) return {true, {}};
    return {false, std::move(r)};
  } catch (const std::exception& e) {
    return {false, std::string("malformed certificate: ") + e.what()};
  }
}

}  // namespace famart::checkers
