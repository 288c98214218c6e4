#include "qsenum_cli/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <json.hpp>
#include <ostream>

#include "qsenum/enumeration.hpp"
#include "qsenum/error.hpp"
#include "qsenum/oracle.hpp"
#include "qsenum/pommaret.hpp"
#include "qsenum/text.hpp"

namespace qsenum::cli {

namespace {

using Json = nlohmann::ordered_json;

struct HelpRequested {
  std::string text;
};

Json terms_json(const std::vector<Term>& terms) {
  Json arr = Json::array();
  for (const Term& t : terms) arr.push_back(to_string(t));
  return arr;
}

std::string terms_text(const std::vector<Term>& terms) {
  std::string out = "(";
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(terms[i]);
  }
  return out + ")";
}

std::string ring_text(RingSpec ring) {
  return "S(" + std::to_string(ring.ell()) + "," + std::to_string(ring.n()) + ")";
}

// [1^6, 0^6]
std::string run_length(const std::vector<std::uint32_t>& a) {
  std::string out = "[";
  for (std::size_t i = 0; i < a.size();) {
    std::size_t j = i;
    while (j < a.size() && a[j] == a[i]) ++j;
    if (i > 0) out += ", ";
    out += std::to_string(a[i]) + "^" + std::to_string(j - i);
    i = j;
  }
  return out + "]";
}

const char* verdict(bool b) { return b ? "true" : "false"; }

void verify_or_throw(const EnumerationResult& result) {
  const std::optional<std::uint32_t> p =
      result.characteristic ? std::optional<std::uint32_t>(result.characteristic->value())
                            : std::nullopt;
  const auto r = static_cast<Degree>(result.gotzmann_number);
  for (const auto& e : result.ideals) {
    const auto& gens = e.ideal.generators();
    std::vector<std::string> failures = oracle::verify_ideal(result.ring, gens,
                                                             result.hilbert_polynomial, r, p);
    for (Degree d = e.regularity; d <= e.regularity + 2; ++d) {
      if (!oracle::naive_cones_partition(result.ring, gens, e.pommaret_basis.terms, d)) {
        failures.push_back("Pommaret cones do not partition degree " + std::to_string(d));
        break;
      }
    }
    if (!failures.empty()) {
      std::string msg = "verification failed for " + to_string(e.ideal) + ":";
      for (const auto& f : failures) msg += " " + f + ";";
      throw std::runtime_error(msg);
    }
  }
}

void run_enum(const CliRequest& req, std::ostream& out) {
  const EnumerationOptions opts{req.flags.threads};
  const EnumerationResult result =
      req.mode == Mode::Borel
          ? borel_enum(req.ring.ell(), req.ring.n(), *req.polynomial, req.flags.s_override,
                       *req.characteristic, opts)
          : quasi_stable_enum(req.ring.ell(), req.ring.n(), *req.polynomial, req.flags.s_override,
                              opts);
  if (req.flags.verify) verify_or_throw(result);

  if (req.flags.format == Format::Json) {
    Json j;
    j["ring"] = {{"ell", result.ring.ell()}, {"n", result.ring.n()}};
    j["hilbert"] = to_string(result.hilbert_polynomial);
    j["gotzmann_number"] = result.gotzmann_number;
    if (result.characteristic) j["characteristic"] = result.characteristic->value();
    j["count"] = result.ideals.size();
    if (!req.flags.count_only) {
      Json ideals = Json::array();
      for (const auto& e : result.ideals) {
        Json item;
        item["generators"] = terms_json(e.ideal.generators());
        if (req.flags.show_pommaret) item["pommaret_basis"] = terms_json(e.pommaret_basis.terms);
        item["regularity"] = e.regularity;
        ideals.push_back(std::move(item));
      }
      j["ideals"] = std::move(ideals);
    }
    out << j.dump(2) << '\n';
    return;
  }

  if (req.flags.count_only) {
    out << result.ideals.size() << '\n';
    return;
  }
  out << "# " << ring_text(result.ring) << "  P(z) = " << to_string(result.hilbert_polynomial)
      << "  r = " << result.gotzmann_number;
  if (result.characteristic) out << "  p = " << result.characteristic->value();
  out << "  count = " << result.ideals.size() << '\n';
  for (const auto& e : result.ideals) {
    out << to_string(e.ideal) << "  reg = " << e.regularity;
    if (req.flags.show_pommaret) out << "  pommaret = " << terms_text(e.pommaret_basis.terms);
    out << '\n';
  }
}

void run_check(const CliRequest& req, std::ostream& out) {
  const MonomialIdeal& ideal = *req.ideal;
  const Characteristic p = req.characteristic.value_or(Characteristic(0));
  const bool qs = is_quasi_stable(ideal);
  const bool st = is_stable(ideal);
  const bool ss = is_strongly_stable(ideal);
  const bool pb = is_p_borel(ideal, p);
  if (req.flags.format == Format::Json) {
    Json j;
    j["ideal"] = terms_json(ideal.generators());
    j["characteristic"] = p.value();
    j["quasi_stable"] = qs;
    j["stable"] = st;
    j["strongly_stable"] = ss;
    j["p_borel"] = pb;
    out << j.dump(2) << '\n';
    return;
  }
  out << "quasi-stable: " << verdict(qs) << '\n'
      << "stable: " << verdict(st) << '\n'
      << "strongly-stable: " << verdict(ss) << '\n'
      << p.value() << "-Borel: " << verdict(pb) << '\n';
}

void run_pommaret(const CliRequest& req, std::ostream& out) {
  const PommaretBasis basis = completion(*req.ideal);
  const Degree reg = regularity(*req.ideal);
  const RingSpec ring = req.ring;
  if (req.flags.format == Format::Json) {
    Json j;
    j["pommaret_basis"] = terms_json(basis.terms);
    Json classes = Json::object();
    for (VarIndex v = ring.ell(); v <= ring.n(); ++v) {
      classes["x" + std::to_string(v)] = terms_json(class_partition(basis, v));
    }
    j["classes"] = std::move(classes);
    j["regularity"] = reg;
    out << j.dump(2) << '\n';
    return;
  }
  out << "pommaret basis: " << terms_text(basis.terms) << '\n';
  for (VarIndex v = ring.ell(); v <= ring.n(); ++v) {
    out << "class x" << v << ": " << terms_text(class_partition(basis, v)) << '\n';
  }
  out << "regularity: " << reg << '\n';
}

void run_hilbert(const CliRequest& req, std::ostream& out) {
  const HilbertPolynomial p = hilbert_polynomial(*req.ideal);
  if (req.flags.format == Format::Json) {
    Json j;
    j["ideal"] = terms_json(req.ideal->generators());
    j["hilbert"] = to_string(p);
    out << j.dump(2) << '\n';
    return;
  }
  out << "P(z) = " << to_string(p) << '\n';
}

void run_gotzmann(const CliRequest& req, std::ostream& out) {
  const GotzmannDecomposition d = gotzmann_decompose(*req.polynomial);
  if (req.flags.format == Format::Json) {
    Json j;
    j["hilbert"] = to_string(*req.polynomial);
    j["gotzmann_number"] = d.r();
    j["a"] = d.a;
    out << j.dump(2) << '\n';
    return;
  }
  out << "r = " << d.r() << "; a = " << run_length(d.a) << '\n';
}

void run_saturate(const CliRequest& req, std::ostream& out) {
  const MonomialIdeal& ideal = *req.ideal;
  const MonomialIdeal sat = is_quasi_stable(ideal) ? saturate(ideal) : saturation_naive(ideal);
  if (req.flags.format == Format::Json) {
    Json j;
    j["ideal"] = terms_json(ideal.generators());
    j["saturation"] = terms_json(sat.generators());
    out << j.dump(2) << '\n';
    return;
  }
  out << to_string(sat) << '\n';
}

}  // namespace

CliRequest parse_request(const std::vector<std::string>& args) {
  CLI::App app{"Enumerate and inspect quasi-stable and Borel-fixed monomial ideals", "qsenum"};
  app.require_subcommand(1, 1);

  int ell = 0;
  int n = -1;
  std::string hilbert_text;
  std::string ideal_text;
  std::string mode_text = "quasi-stable";
  std::string format_text = "text";
  std::optional<std::uint32_t> char_value;
  std::optional<Degree> s_value;
  bool count_only = false;
  bool show_pommaret = false;
  bool verify = false;
  unsigned threads = 1;

  auto ring_opts = [&](CLI::App* sub, bool required) {
    sub->add_option("--ell", ell, "index of the smallest variable")->capture_default_str();
    auto* opt = sub->add_option("--n", n, "index of the largest variable");
    if (required) opt->required();
  };
  auto format_opt = [&](CLI::App* sub) {
    sub->add_option("--format", format_text, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };

  auto* en = app.add_subcommand("enum", "list saturated ideals with a given Hilbert polynomial");
  ring_opts(en, true);
  en->add_option("--hilbert", hilbert_text, "Hilbert polynomial in z, e.g. 6*z-3")->required();
  en->add_option("--mode", mode_text)->check(CLI::IsMember({"quasi-stable", "borel"}))
      ->capture_default_str();
  en->add_option("--char", char_value, "field characteristic (0 or a prime)");
  en->add_option("--s", s_value, "working degree, at least the Gotzmann number");
  en->add_flag("--count-only", count_only);
  en->add_flag("--show-pommaret", show_pommaret);
  en->add_flag("--verify", verify, "re-check every ideal with the brute-force reference code");
  en->add_option("--threads", threads)->check(CLI::Range(1u, 1024u))->capture_default_str();
  format_opt(en);

  auto* ch = app.add_subcommand("check", "stability predicates of an ideal");
  ring_opts(ch, true);
  ch->add_option("--ideal", ideal_text)->required();
  ch->add_option("--char", char_value, "characteristic for the p-Borel test (default 0)");
  format_opt(ch);

  auto* po = app.add_subcommand("pommaret", "Pommaret basis, classes and regularity");
  ring_opts(po, true);
  po->add_option("--ideal", ideal_text)->required();
  format_opt(po);

  auto* hi = app.add_subcommand("hilbert", "Hilbert polynomial of a quasi-stable ideal");
  ring_opts(hi, true);
  hi->add_option("--ideal", ideal_text)->required();
  format_opt(hi);

  auto* go = app.add_subcommand("gotzmann", "Gotzmann number and decomposition");
  go->add_option("--hilbert", hilbert_text)->required();
  format_opt(go);

  auto* sa = app.add_subcommand("saturate", "saturation of an ideal");
  ring_opts(sa, true);
  sa->add_option("--ideal", ideal_text)->required();
  format_opt(sa);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested{app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  CliRequest req;
  const CLI::App* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  if (name == "enum") req.subcommand = Subcommand::Enum;
  if (name == "check") req.subcommand = Subcommand::Check;
  if (name == "pommaret") req.subcommand = Subcommand::Pommaret;
  if (name == "hilbert") req.subcommand = Subcommand::Hilbert;
  if (name == "gotzmann") req.subcommand = Subcommand::Gotzmann;
  if (name == "saturate") req.subcommand = Subcommand::Saturate;

  req.mode = mode_text == "borel" ? Mode::Borel : Mode::QuasiStable;
  req.flags.format = format_text == "json" ? Format::Json : Format::Text;
  req.flags.count_only = count_only;
  req.flags.show_pommaret = show_pommaret;
  req.flags.verify = verify;
  req.flags.s_override = s_value;
  req.flags.threads = threads;

  try {
    if (req.subcommand != Subcommand::Gotzmann) req.ring = RingSpec(ell, n);
    if (char_value) req.characteristic = Characteristic(*char_value);
    if (!hilbert_text.empty()) req.polynomial = parse_hilbert(hilbert_text);
    if (!ideal_text.empty()) req.ideal = parse_ideal(ideal_text, req.ring);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  if (req.subcommand == Subcommand::Enum && req.mode == Mode::Borel && !req.characteristic) {
    throw UsageError("--mode borel needs --char");
  }
  return req;
}

void run(const CliRequest& request, std::ostream& out) {
  switch (request.subcommand) {
    case Subcommand::Enum:
      return run_enum(request, out);
    case Subcommand::Check:
      return run_check(request, out);
    case Subcommand::Pommaret:
      return run_pommaret(request, out);
    case Subcommand::Hilbert:
      return run_hilbert(request, out);
    case Subcommand::Gotzmann:
      return run_gotzmann(request, out);
    case Subcommand::Saturate:
      return run_saturate(request, out);
  }
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliRequest req;
  try {
    req = parse_request(args);
  } catch (const HelpRequested& h) {
    out << h.text;
    return kExitOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n' << "run with --help for usage\n";
    return kExitUsage;
  }
  try {
    run(req, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace qsenum::cli
