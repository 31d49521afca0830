#include "skc/junta.hpp"

#include <algorithm>
#include <sstream>

namespace skc {

namespace {

void check_length_guard(int n, const char* who) {
  if (n < 0 || n > kMaxJuntaLength)
    throw GuardError(std::string(who) + ": length " + std::to_string(n) +
                     " exceeds the enumeration guard of " +
                     std::to_string(kMaxJuntaLength));
}

// Nonzero-mass extremes straight from the sparse slice; no enumeration.
struct NonzeroExtremes {
  Integer count{0};
  Rational min;
  Rational max;
};

NonzeroExtremes nonzero_extremes(const LengthDistribution& slice) {
  NonzeroExtremes ex;
  const Integer residual =
      pow2(static_cast<unsigned long>(slice.length())) -
      Integer(slice.overrides().size());
  auto take = [&](const Rational& mass, const Integer& copies) {
    if (mass <= 0 || copies <= 0) return;
    if (ex.count == 0) {
      ex.min = ex.max = mass;
    } else {
      ex.min = std::min(ex.min, mass);
      ex.max = std::max(ex.max, mass);
    }
    ex.count += copies;
  };
  take(slice.default_mass(), residual);
  for (const auto& [bits, mass] : slice.overrides()) take(mass, Integer(1));
  return ex;
}

}  // namespace

DistributionEnsemble uniform_ensemble() {
  return {[](int n) {
    return LengthDistribution(
        n, make_ratio(Integer(1), pow2(static_cast<unsigned long>(n))));
  }};
}

DistributionEnsemble junta_nu(const PiercedSet& ps) {
  const int threshold = ps.threshold;
  auto pos = ps.pos;
  auto neg = ps.neg;
  return {[threshold, pos, neg](int n) {
    if (n < threshold)
      return LengthDistribution(
          n, make_ratio(Integer(1), pow2(static_cast<unsigned long>(n))));
    const Integer bulk = pow2(static_cast<unsigned long>(n) *
                              static_cast<unsigned long>(n));  // 2^{n^2}
    LengthDistribution slice(n, make_ratio(Integer(1), bulk));
    const Rational pierced =
        make_ratio(Integer(1), Integer(2)) *
        (Rational(1) - make_ratio(pow2(static_cast<unsigned long>(n)) - 2, bulk));
    slice.set(pos(n), pierced);
    slice.set(neg(n), pierced);
    return slice;
  }};
}

BalanceReport check_balance(const DistributionEnsemble& e,
                            const Membership& member, const Rational& c,
                            LengthRange range, int min_length, Exec exec) {
  if (c <= 1) throw std::invalid_argument("check_balance: c must exceed 1");
  BalanceReport report;
  const Rational lo = Rational(1) / c;
  const Rational hi = Rational(1) - lo;
  bool any_checked = false;
  bool all_pass = true;
  for (int n = range.lo; n <= range.hi; ++n) {
    check_length_guard(n, "check_balance");
    const LengthDistribution slice = e.slice(n);
    const std::int64_t count = static_cast<std::int64_t>(strings_of_length(n));
    const Rational in_mass =
        sum_indices(exec, count, Rational(0), [&](std::int64_t v) {
          const BitString x{n, static_cast<std::uint64_t>(v)};
          return member(x) ? slice.mass(x) : Rational(0);
        });
    BalanceRecord rec;
    rec.n = n;
    rec.in_mass = in_mass;
    rec.margin = std::min(in_mass - lo, hi - in_mass);
    rec.checked = n >= min_length;
    rec.pass = !rec.checked || rec.margin >= 0;
    if (rec.checked) {
      any_checked = true;
      all_pass = all_pass && rec.pass;
    }
    report.records.push_back(std::move(rec));
  }
  report.vacuous = !any_checked;
  report.pass = all_pass;
  return report;
}

DichotomyReport check_dichotomy(const DistributionEnsemble& e,
                                const Polynomial& p, LengthRange range,
                                Exec) {
  DichotomyReport report;
  report.pass = true;
  for (int n = range.lo; n <= range.hi; ++n) {
    check_length_guard(n, "check_dichotomy");
    const LengthDistribution slice = e.slice(n);
    const NonzeroExtremes ex = nonzero_extremes(slice);
    DichotomyRecord rec;
    rec.n = n;
    const Integer pn = p.eval(n);
    rec.floor = pn >= 0
                    ? make_ratio(Integer(1),
                                 pow2(static_cast<unsigned long>(pn.get_ui())))
                    : Rational(0);
    if (ex.count == 0) {
      rec.pass = true;  // no nonzero mass to violate the floor
    } else {
      rec.min_nonzero = ex.min;
      rec.pass = ex.min >= rec.floor;
    }
    report.pass = report.pass && rec.pass;
    report.records.push_back(std::move(rec));
  }
  return report;
}

AlmostUniformityReport check_almost_uniformity(const DistributionEnsemble& e,
                                               const Rational& K, int n0,
                                               LengthRange range, Exec) {
  if (K <= 0) throw std::invalid_argument("check_almost_uniformity: K must be positive");
  AlmostUniformityReport report;
  report.pass = true;
  for (int n = range.lo; n <= range.hi; ++n) {
    check_length_guard(n, "check_almost_uniformity");
    const LengthDistribution slice = e.slice(n);
    const NonzeroExtremes ex = nonzero_extremes(slice);
    AlmostUniformityRecord rec;
    rec.n = n;
    rec.checked = n > n0;
    rec.vacuous = ex.count < 2;
    rec.worst_ratio = rec.vacuous ? Rational(1) : ex.max / ex.min;
    rec.pass = !rec.checked || rec.vacuous || rec.worst_ratio <= K;
    if (rec.checked) report.pass = report.pass && rec.pass;
    report.records.push_back(std::move(rec));
  }
  return report;
}

Decider pierced_heuristic(const PiercedSet& ps) {
  const int threshold = ps.threshold;
  auto neg = ps.neg;
  return [threshold, neg](const BitString& x) {
    if (x.length >= threshold && x == neg(x.length)) return false;
    return true;
  };
}

Rational error_weight(const Decider& alg, const DistributionEnsemble& e,
                      const Membership& member, int n, Exec exec) {
  check_length_guard(n, "error_weight");
  const LengthDistribution slice = e.slice(n);
  const std::int64_t count = static_cast<std::int64_t>(strings_of_length(n));
  return sum_indices(exec, count, Rational(0), [&](std::int64_t v) {
    const BitString x{n, static_cast<std::uint64_t>(v)};
    return member(x) != alg(x) ? slice.mass(x) : Rational(0);
  });
}

HeuristicBoundReport check_heuristic_bound(
    const std::vector<std::pair<int, Rational>>& weights, const Polynomial& q,
    int threshold) {
  HeuristicBoundReport report;
  bool any_checked = false;
  bool all_pass = true;
  for (const auto& [n, weight] : weights) {
    HeuristicBoundRecord rec;
    rec.n = n;
    rec.weight = weight;
    rec.checked = n >= threshold;
    const Integer qn = q.eval(n);
    if (rec.checked && qn <= 0)
      throw std::invalid_argument("check_heuristic_bound: q(" +
                                  std::to_string(n) + ") is not positive");
    rec.limit = qn > 0 ? make_ratio(Integer(1), qn) : Rational(0);
    rec.pass = !rec.checked || weight < rec.limit;  // strict, per Def 3.1(2)
    if (rec.checked) {
      any_checked = true;
      all_pass = all_pass && rec.pass;
    }
    report.records.push_back(std::move(rec));
  }
  report.vacuous = !any_checked;
  report.pass = all_pass;
  return report;
}

Membership pad_set(Membership inner) {
  return [inner = std::move(inner)](const BitString& x) {
    if (x.length >= 2 && !x.bit(0) && !x.bit(1)) return true;
    if (x.length >= 1 && x.bit(0)) {
      // |x| = 1 + k + (k^2 + 2) has at most one solution k >= 0
      for (int k = 0; k + k * k + 3 <= x.length; ++k) {
        if (k + k * k + 3 != x.length) continue;
        for (int i = 1 + k; i < x.length; ++i)
          if (!x.bit(i)) return false;
        std::uint64_t w = 0;
        for (int i = 1; i < 1 + k; ++i)
          w = (w << 1) | static_cast<std::uint64_t>(x.bit(i));
        return inner(BitString{k, w});
      }
    }
    return false;
  };
}

JuntaReport run_junta_checks(const DistributionEnsemble& e,
                             const Membership& member, const Decider& alg,
                             int threshold, const JuntaCheckParams& params,
                             LengthRange range, Exec exec) {
  JuntaReport report;
  report.range = range;
  report.threshold = threshold;
  report.params = params;

  report.balance = check_balance(e, member, params.balance_c, range,
                                 threshold, exec);
  report.dichotomy = check_dichotomy(e, params.dichotomy_p, range, exec);
  report.almost_uniformity = check_almost_uniformity(
      e, params.uniformity_k, params.uniformity_n0, range, exec);
  for (int n = range.lo; n <= range.hi; ++n)
    report.error_weights.emplace_back(n, error_weight(alg, e, member, n, exec));
  report.heuristic =
      check_heuristic_bound(report.error_weights, params.heuristic_q, threshold);

  for (std::size_t i = 0; i < report.balance.records.size(); ++i) {
    JuntaLengthRecord rec;
    rec.n = report.balance.records[i].n;
    rec.in_mass = report.balance.records[i].in_mass;
    const auto& dich = report.dichotomy.records[i];
    rec.min_nonzero = dich.min_nonzero.value_or(Rational(0));
    rec.max_ratio = report.almost_uniformity.records[i].worst_ratio;
    report.records.push_back(std::move(rec));
  }
  report.any_vacuous = report.balance.vacuous || report.heuristic.vacuous;
  return report;
}

std::string junta_report_text(const JuntaReport& r) {
  std::ostringstream out;
  out << "junta-report v" << r.version << '\n';
  out << "lengths " << r.range.lo << ".." << r.range.hi << " threshold "
      << r.threshold << '\n';
  out << "params balance_c=" << fraction_str(r.params.balance_c)
      << " dichotomy_p=" << r.params.dichotomy_p.str()
      << " uniformity_K=" << fraction_str(r.params.uniformity_k)
      << " uniformity_n0=" << r.params.uniformity_n0
      << " heuristic_q=" << r.params.heuristic_q.str() << '\n';
  for (const auto& rec : r.records)
    out << "n=" << rec.n << " in_mass=" << fraction_str(rec.in_mass)
        << " min_nonzero=" << fraction_str(rec.min_nonzero)
        << " max_ratio=" << fraction_str(rec.max_ratio) << '\n';
  auto verdict = [&](const char* name, bool pass, bool vacuous) {
    out << "verdict " << name << ' ' << (pass ? "pass" : "fail");
    if (vacuous) out << " (vacuous)";
    out << '\n';
  };
  verdict("balance", r.balance.pass, r.balance.vacuous);
  verdict("dichotomy", r.dichotomy.pass, false);
  verdict("almost_uniformity", r.almost_uniformity.pass, false);
  verdict("heuristic_bound", r.heuristic.pass, r.heuristic.vacuous);
  out << "hardness " << (r.hardness_assumed ? "assumed-not-checked" : "checked")
      << '\n';
  return out.str();
}

std::string junta_report_csv(const JuntaReport& r) {
  std::ostringstream out;
  out << "# junta-report v" << r.version << '\n';
  out << "# lengths=" << r.range.lo << ".." << r.range.hi
      << " threshold=" << r.threshold << '\n';
  out << "n,in_mass,min_nonzero,max_ratio\n";
  for (const auto& rec : r.records)
    out << rec.n << ',' << fraction_str(rec.in_mass) << ','
        << fraction_str(rec.min_nonzero) << ',' << fraction_str(rec.max_ratio)
        << '\n';
  auto verdict = [&](const char* name, bool pass, bool vacuous) {
    out << "# verdict," << name << ',' << (pass ? "pass" : "fail");
    if (vacuous) out << ",vacuous";
    out << '\n';
  };
  verdict("balance", r.balance.pass, r.balance.vacuous);
  verdict("dichotomy", r.dichotomy.pass, false);
  verdict("almost_uniformity", r.almost_uniformity.pass, false);
  verdict("heuristic_bound", r.heuristic.pass, r.heuristic.vacuous);
  out << "# hardness,"
      << (r.hardness_assumed ? "assumed-not-checked" : "checked") << '\n';
  return out.str();
}

}  // namespace skc
