#include "commands.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "nullcert/certificate.hpp"
#include "nullcert/fuzz.hpp"
#include "nullcert/sysio.hpp"

namespace nullcert::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::string_view kCounterexample = "NO FINAL POLYNOMIAL — counterexample to the conjecture";
constexpr std::string_view kNotApplicable = "consistent — not applicable";

/// Maps library errors onto the exit-code contract.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "error: parse error at line " << e.line() << ", column " << e.column() << ": " << e.message() << '\n';
    return kUsage;
  } catch (const LimitExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kLimit;
  } catch (const InvariantViolation& e) {
    err << "error: invariant violated: " << e.what() << '\n';
    return kInvariant;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

void print_lines(std::ostream& out, const std::vector<std::string>& lines, std::string_view indent = "") {
  for (const auto& l : lines) out << indent << l << '\n';
}

std::vector<std::string> render_all(const std::vector<Polynomial>& polys) {
  std::vector<std::string> out;
  out.reserve(polys.size());
  for (const auto& p : polys) out.push_back(render_polynomial(p));
  return out;
}

bool system_inconsistent(const SystemF& system, const ComputationLimits& limits) {
  return contains_one(reduced_groebner_basis(system.polys(), limits));
}

}  // namespace

int cmd_gb(const CliConfig& config, std::string_view text, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const SystemDocument doc = parse_document(text);
    const auto order_text = config.order ? config.order : doc.order_text;
    if (!order_text) {
      err << "error: gb requires an explicit order (--order or an 'order:' line)\n";
      return static_cast<int>(kUsage);
    }
    const RingPtr ring = with_order(doc.system.ring(), parse_order(*order_text, doc.system.ring()->registry()));
    std::vector<Polynomial> gens;
    for (const auto& f : doc.system.polys()) gens.push_back(embed(f, ring));
    const GroebnerBasis basis = reduced_groebner_basis(gens, config.limits);
    const auto lines = render_all(basis.elements);
    if (config.format == Format::json) {
      out << Json(lines).dump() << '\n';
    } else {
      print_lines(out, lines);
    }
    return static_cast<int>(kOk);
  });
}

int cmd_consistent(const CliConfig& config, std::string_view text, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const SystemF system = parse_system(text);
    const char* status = system_inconsistent(system, config.limits) ? "inconsistent" : "consistent";
    if (config.format == Format::json) {
      out << Json{{"status", status}}.dump() << '\n';
    } else {
      out << status << '\n';
    }
    return static_cast<int>(kOk);
  });
}

int cmd_bernd(const CliConfig& config, std::string_view text, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const SystemF system = parse_system(text);
    if (!system_inconsistent(system, config.limits)) {
      if (config.format == Format::json) {
        out << Json{{"status", "consistent"}}.dump() << '\n';
      } else {
        out << kNotApplicable << '\n';
      }
      return static_cast<int>(kOk);
    }
    const IdealPresentation graph = build_graph_ideal(system);
    const GroebnerBasis basis = reduced_groebner_basis(graph.generators, config.limits);

    Assignment to_zero;
    for (const auto& y : graph_variable_names(system.size())) to_zero.emplace(y, Polynomial(system.ring()));
    std::vector<std::string> specialized;
    for (const auto& g : basis.elements) specialized.push_back(render_polynomial(substitute(g, to_zero, system.ring())));
    const auto final_poly = find_final_in_basis(basis, system);
    const std::string order = format_order(graph.ring->order(), graph.ring->registry());

    if (config.format == Format::json) {
      Json j{{"status", "inconsistent"},
             {"order", order},
             {"basis", render_all(basis.elements)},
             {"specialized", specialized},
             {"final", final_poly ? Json(render_polynomial(*final_poly)) : Json(nullptr)}};
      out << j.dump() << '\n';
      return static_cast<int>(kOk);
    }
    out << "reduced basis of the graph ideal (" << order << "):\n";
    print_lines(out, render_all(basis.elements), "  ");
    out << "specialization y -> 0:\n";
    print_lines(out, specialized, "  ");
    if (final_poly) {
      out << "final polynomial: " << render_polynomial(*final_poly) << '\n';
    } else {
      out << kCounterexample << '\n';
    }
    return static_cast<int>(kOk);
  });
}

int cmd_certify(const CliConfig& config, std::string_view text, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const SystemF system = parse_system(text);
    CertifyOptions options;
    options.limits = config.limits;
    if (config.order) {
      const VariableRegistry registry = scaled_graph_registry(system);
      MonomialOrder order = parse_order(*config.order, registry);
      if (!is_eliminating_order(order, registry, {kScaleVariable})) {
        err << "error: order " << *config.order << " is not z-eliminating\n";
        return static_cast<int>(kUsage);
      }
      options.scaled_order = std::move(order);
    }
    const auto result = certify(system, options);
    const auto* bundle = std::get_if<CertificateBundle>(&result);
    if (!bundle) {
      if (config.format == Format::json) {
        out << Json{{"status", "consistent"}}.dump() << '\n';
      } else {
        out << "consistent\n";
      }
      return static_cast<int>(kOk);
    }
    const std::string extended = render_polynomial(bundle->extended_final);
    const std::string final_poly = render_polynomial(specialize_z_one(bundle->extended_final));
    const auto lambdas = render_all(bundle->lambdas);
    if (config.format == Format::json) {
      Json j{{"status", "inconsistent"},
             {"extended_final", extended},
             {"c", bundle->c.to_string()},
             {"lambdas", lambdas},
             {"verified", bundle->verified},
             {"final", final_poly}};
      out << j.dump() << '\n';
      return static_cast<int>(kOk);
    }
    out << "inconsistent\n";
    out << "extended final polynomial: " << extended << '\n';
    out << "c: " << bundle->c << '\n';
    for (std::size_t i = 0; i < lambdas.size(); ++i) out << "lambda" << (i + 1) << ": " << lambdas[i] << '\n';
    out << "identity: ";
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
      out << (i ? " + " : "") << '(' << lambdas[i] << ")*(" << render_polynomial(system.polys()[i]) << ')';
    }
    out << " = " << render_polynomial(certificate_combination(bundle->lambdas, system))
        << (bundle->verified ? " [verified]" : " [NOT VERIFIED]") << '\n';
    out << "final polynomial: " << final_poly << '\n';
    return static_cast<int>(kOk);
  });
}

int cmd_fuzz(const CliConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (config.trials == 0) {
      err << "error: --trials must be at least 1\n";
      return static_cast<int>(kUsage);
    }
    FuzzParams params;
    params.seed = config.seed;
    params.trials = config.trials;
    const FuzzReport report = run_fuzz(params, config.limits, config.workers);
    if (config.format == Format::json) {
      const auto& s = report.summary;
      Json counterexamples = Json::array();
      for (std::size_t i = 0; i < report.verdicts.size(); ++i) {
        const auto& v = report.verdicts[i];
        if (!v.skipped && !v.final_present) {
          counterexamples.push_back({{"trial", i}, {"system", render_system(report.systems[i])}});
        }
      }
      Json failures = Json::array();
      for (std::size_t i = 0; i < report.verdicts.size(); ++i) {
        for (const auto& f : report.verdicts[i].failures) failures.push_back({{"trial", i}, {"failure", f}});
      }
      Json j{{"seed", params.seed},
             {"trials", s.trials},
             {"skipped", s.skipped},
             {"thm5_pass", s.thm5_pass},
             {"final_present", s.final_present},
             {"counterexamples", s.counterexamples},
             {"hard_failures", failures},
             {"counterexample_systems", counterexamples}};
      out << j.dump() << '\n';
    } else {
      out << report.render();
    }
    return static_cast<int>(report.summary.hard_failures == 0 ? kOk : kInvariant);
  });
}

int run(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  if (config.subcommand == "fuzz") return cmd_fuzz(config, out, err);

  std::string text;
  if (config.input == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  } else {
    std::ifstream file(config.input, std::ios::binary);
    if (!file) {
      err << "error: cannot open '" << config.input << "'\n";
      return kUsage;
    }
    std::ostringstream buf;
    buf << file.rdbuf();
    text = buf.str();
  }

  if (config.subcommand == "gb") return cmd_gb(config, text, out, err);
  if (config.subcommand == "consistent") return cmd_consistent(config, text, out, err);
  if (config.subcommand == "bernd") return cmd_bernd(config, text, out, err);
  if (config.subcommand == "certify") return cmd_certify(config, text, out, err);
  err << "error: unknown subcommand '" << config.subcommand << "'\n";
  return kUsage;
}

}  // namespace nullcert::cli
