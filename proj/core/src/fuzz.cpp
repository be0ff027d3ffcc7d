#include "nullcert/fuzz.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "nullcert/sysio.hpp"

namespace nullcert {

namespace {

constexpr std::size_t kRedrawsBeforeDegreeBump = 16;

const char* check_name(Check c) {
  switch (c) {
    case Check::pass: return "pass";
    case Check::fail: return "FAIL";
    case Check::not_run: return "-";
  }
  return "?";
}

Polynomial random_polynomial(TrialRng& rng, const RingPtr& ring, std::uint32_t max_degree, std::int64_t coeff_bound,
                             std::size_t max_terms) {
  const std::size_t n = ring->num_vars();
  const auto num_terms = static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(max_terms)));
  std::vector<Term> terms;
  for (std::size_t t = 0; t < num_terms; ++t) {
    std::vector<Monomial::Exponent> e(n, 0);
    const auto degree = rng.between(0, max_degree);
    for (std::int64_t d = 0; d < degree; ++d) ++e[static_cast<std::size_t>(rng.between(0, static_cast<std::int64_t>(n) - 1))];
    std::int64_t c = rng.between(1, coeff_bound);
    if (rng.between(0, 1) == 1) c = -c;
    terms.push_back(Term{Rational(static_cast<long>(c)), Monomial(std::move(e))});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

std::vector<Polynomial> shuffled(std::vector<Polynomial> v, TrialRng& rng) {
  // Fisher-Yates with the trial stream
  for (std::size_t i = v.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.between(0, static_cast<std::int64_t>(i) - 1));
    std::swap(v[i - 1], v[j]);
  }
  return v;
}

}  // namespace

void FuzzParams::validate() const {
  if (trials == 0) throw InvalidArgument("trials must be at least 1");
  if (num_vars == 0 || num_vars > 4) throw InvalidArgument("num_vars must be in 1..4");
  if (num_polys == 0 || num_polys > 4) throw InvalidArgument("num_polys must be in 1..4");
  if (max_degree == 0 || max_degree > 3) throw InvalidArgument("max_degree must be in 1..3");
  if (coeff_bound <= 0 || coeff_bound > 100) throw InvalidArgument("coeff_bound must be in 1..100");
}

namespace {

std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

TrialRng::TrialRng(std::uint64_t seed, std::uint64_t trial, std::uint64_t stream)
    : state_(mix64(mix64(seed) ^ mix64(trial ^ mix64(stream)))) {}

std::uint64_t TrialRng::next() {
  // SplitMix64
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::int64_t TrialRng::between(std::int64_t lo, std::int64_t hi) {
  if (hi <= lo) return lo;
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(next() % span);
}

SystemF gen_inconsistent_system(const FuzzParams& params, std::size_t trial_index) {
  params.validate();
  TrialRng rng(params.seed, trial_index, 0);
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= params.num_vars; ++i) names.push_back("x" + std::to_string(i));
  const RingPtr ring = make_lex_ring(std::move(names));
  const std::size_t k = params.num_polys;

  std::uint32_t degree = params.max_degree;
  for (std::size_t attempt = 0;; ++attempt) {
    if (attempt > 0 && attempt % kRedrawsBeforeDegreeBump == 0) ++degree;
    std::vector<Polynomial> polys;
    Polynomial last = Polynomial::constant(ring, Rational(1));
    bool ok = true;
    for (std::size_t i = 0; i + 1 < k && ok; ++i) {
      Polynomial f = random_polynomial(rng, ring, degree, params.coeff_bound, 3);
      const Polynomial lambda = random_polynomial(rng, ring, std::max<std::uint32_t>(1, degree - 1), params.coeff_bound, 2);
      if (f.is_constant()) ok = false;  // zero or a unit makes the trial trivial
      last -= lambda * f;
      polys.push_back(std::move(f));
    }
    if (!ok || last.is_zero()) continue;
    polys.push_back(std::move(last));
    return SystemF(ring, std::move(polys));
  }
}

TrialVerdict run_property_suite(const SystemF& system, const ComputationLimits& limits,
                                std::uint64_t permutation_seed) {
  TrialVerdict v;
  auto record = [&v](Check& slot, bool ok, const std::string& what) {
    slot = ok ? Check::pass : Check::fail;
    if (!ok) v.failures.push_back(what);
  };
  try {
    const GroebnerBasis base = reduced_groebner_basis(system.polys(), limits);
    const bool inconsistent = contains_one(base);

    const IdealPresentation scaled = build_scaled_graph_ideal(system);
    const GroebnerBasis unreduced = buchberger(scaled.generators, limits);
    const GroebnerBasis basis = reduce_basis(unreduced);
    {
      const auto& reg = scaled.ring->registry();
      const Monomial z = Monomial::variable(reg.size(), reg.index_of(kScaleVariable));
      v.unreduced_z_lead = std::any_of(unreduced.elements.begin(), unreduced.elements.end(),
                                       [&](const Polynomial& g) { return g.leading_monomial() == z; });
    }

    const auto p = find_extended_final(basis, system);
    record(v.extended_final_found, p.has_value(), "no extended final polynomial in the reduced basis");
    if (p) {
      v.extended_final = render_polynomial(*p);
      const CertificateBundle bundle = extract_certificate(*p, system);
      record(v.certificate, bundle.verified, "certificate: sum lambda_i f_i != 1");
      record(v.z1_final, is_final_polynomial(specialize_z_one(*p), system), "p(1, x, y) is not final");
      record(v.membership, ideal_member(*p, basis), "membership: extended final polynomial not in the ideal");
    }

    TrialRng rng(permutation_seed, 0, 1);
    const auto permuted = shuffled(scaled.generators, rng);
    const GroebnerBasis again = reduced_groebner_basis(permuted, limits);
    record(v.uniqueness, again.elements == basis.elements, "uniqueness: permuted generators give another reduced basis");

    const IdealPresentation graph = build_graph_ideal(system);
    const GroebnerBasis lex_basis = reduced_groebner_basis(graph.generators, limits);
    v.final_present = find_final_in_basis(lex_basis, system).has_value();

    const bool certified = p.has_value() || v.final_present;
    record(v.soundness, !certified || inconsistent, "soundness: certificate found for a consistent system");
  } catch (const LimitExceeded& e) {
    v = TrialVerdict{};
    v.skipped = true;
    v.skip_reason = e.what();
  }
  return v;
}

std::string summary_line(const FuzzSummary& s) {
  std::ostringstream os;
  os << "trials=" << s.trials << " skipped=" << s.skipped << " thm5_pass=" << s.thm5_pass
     << " final_present=" << s.final_present << " counterexamples=" << s.counterexamples;
  return os.str();
}

FuzzReport run_fuzz(const FuzzParams& params, const ComputationLimits& limits, unsigned workers) {
  params.validate();
  limits.validate();
  std::vector<std::optional<SystemF>> systems(params.trials);
  std::vector<TrialVerdict> verdicts(params.trials);

  std::atomic<std::size_t> cursor{0};
  auto work = [&] {
    for (std::size_t i = cursor++; i < params.trials; i = cursor++) {
      systems[i] = gen_inconsistent_system(params, i);
      verdicts[i] = run_property_suite(*systems[i], limits, params.seed ^ (i + 1));
    }
  };
  workers = std::max(1U, workers);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  FuzzReport report{params, {}, std::move(verdicts), {}};
  for (auto& s : systems) report.systems.push_back(std::move(*s));
  auto& sum = report.summary;
  sum.trials = params.trials;
  for (const auto& v : report.verdicts) {
    if (v.skipped) {
      ++sum.skipped;
      continue;
    }
    if (v.extended_final_found == Check::pass) ++sum.thm5_pass;
    if (v.final_present) {
      ++sum.final_present;
    } else {
      ++sum.counterexamples;
    }
    if (v.hard_failure()) ++sum.hard_failures;
  }
  return report;
}

std::string FuzzReport::render() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < verdicts.size(); ++i) {
    const auto& v = verdicts[i];
    os << "trial " << i << ": ";
    if (v.skipped) {
      os << "skipped (" << v.skip_reason << ")\n";
      continue;
    }
    os << "thm5=" << check_name(v.extended_final_found) << " cert=" << check_name(v.certificate)
       << " z1final=" << check_name(v.z1_final) << " member=" << check_name(v.membership)
       << " unique=" << check_name(v.uniqueness) << " sound=" << check_name(v.soundness)
       << " final=" << (v.final_present ? "yes" : "no") << '\n';
    for (const auto& f : v.failures) os << "  FAIL " << f << '\n';
  }
  os << summary_line(summary) << '\n';
  for (std::size_t i = 0; i < verdicts.size(); ++i) {
    const auto& v = verdicts[i];
    if (v.skipped || v.final_present) continue;
    os << "# counterexample: trial " << i << '\n' << render_system(systems[i]);
  }
  return os.str();
}

}  // namespace nullcert
