#include "delta/cli.hpp"

#include "delta/charset.hpp"
#include "delta/errors.hpp"
#include "delta/lattice.hpp"
#include "delta/report.hpp"
#include "delta/schemes.hpp"
#include "delta/text.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

namespace delta::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::size_t dim = 0;
  std::string points;
  std::uint64_t r = 0;
  std::vector<std::string> files;
  std::string poly;
  std::string ranking;
  std::optional<Coord> radius;
  Coord window = kDefaultWindow;
  std::string format = "text";
  std::string catalog;
  std::string scheme;
};

Format format_of(const Options& o) { return o.format == "json" ? Format::Json : Format::Text; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SystemFile load(const std::string& path) {
  try {
    return parse_system(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(e.kind(), path + ": " + e.what(), e.line(), e.column());
  }
}

std::uint64_t step_cap() {
  const char* env = std::getenv("DELTA_STRENGTH_STEP_CAP");
  if (env == nullptr || *env == '\0') return kDefaultStepCap;
  std::uint64_t v = 0;
  const std::string_view s(env);
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || v == 0) {
    throw UsageError("DELTA_STRENGTH_STEP_CAP must be a positive integer");
  }
  return v;
}

OrbitSearch search_of(const Options& o) { return OrbitSearch{o.radius, o.window, step_cap()}; }

Ranking ranking_of(const SystemFile& file, const Options& o) {
  if (o.ranking.empty()) return file.ranking();
  std::vector<std::size_t> indets(file.symbols.arity());
  for (std::size_t i = 0; i < indets.size(); ++i) indets[i] = i;
  return Ranking(parse_ranking(o.ranking, file.symbols), std::move(indets));
}

const std::string& single_file(const Options& o) {
  if (o.files.size() != 1) throw UsageError("exactly one --file is required");
  return o.files.front();
}

Symbols entry_symbols(const CatalogEntry& e) { return {e.constants, {"s1", "s2"}, e.indeterminates}; }

struct Evaluated {
  std::string label;
  StrengthReport report;
  Symbols symbols;
};

Evaluated evaluate_catalog(const std::string& name, const std::string& scheme, const Options& o) {
  CatalogEntry e = catalog_entry(name, scheme);
  return {name + " " + scheme, strength(e.system, e.ranking, search_of(o), scheme), entry_symbols(e)};
}

Evaluated evaluate_file(const std::string& path, const Options& o) {
  const SystemFile file = load(path);
  const auto gens = file.generators();
  if (gens.empty()) throw UsageError(path + ": no polynomials");
  return {path, strength(gens, ranking_of(file, o), search_of(o), file.scheme.value_or("")), file.symbols};
}

int cmd_lattice(const std::string& which, const Options& o, std::ostream& out) {
  if (o.dim == 0) throw UsageError("--dim must be at least 1");
  const bool natural = which == "omega" || which == "oracle-v";
  const LatticeSet s = parse_points(o.points, o.dim, natural ? Signature::NonNegative : Signature::Integer);
  if (which == "omega") out << emit_polynomial(omega(s), std::nullopt, format_of(o));
  if (which == "phi") out << emit_polynomial(phi(s), static_cast<unsigned>(o.dim), format_of(o));
  if (which == "oracle-v") out << oracle_count_v(s, o.r) << "\n";
  if (which == "oracle-w") out << oracle_count_w(s, o.r) << "\n";
  return kOk;
}

int cmd_leader(const Options& o, std::ostream& out) {
  const SystemFile file = load(single_file(o));
  const Ranking rk = ranking_of(file, o);
  out << to_string(leader(file.poly(o.poly), rk), file.symbols) << "\n";
  return kOk;
}

int cmd_charset(const Options& o, std::ostream& out) {
  const SystemFile file = load(single_file(o));
  const Ranking rk = ranking_of(file, o);
  CharacteristicSet cs = [&] {
    if (!o.poly.empty()) return orbit_minimal_charset(file.poly(o.poly), rk, search_of(o));
    const auto gens = file.generators();
    if (gens.empty()) throw UsageError("no polynomials in file");
    return system_charset(gens, rk, search_of(o));
  }();
  out << emit_charset(cs, file.symbols, format_of(o));
  return kOk;
}

int cmd_reduce(const Options& o, std::ostream& out) {
  const SystemFile file = load(single_file(o));
  const Ranking rk = ranking_of(file, o);
  const DiffPolynomial& d = file.poly(o.poly);
  const auto gens = file.generators(o.poly);
  if (gens.empty()) throw UsageError("no generators to reduce against");
  const OrbitSearch search = search_of(o);
  const CharacteristicSet cs = system_charset(gens, rk, search);
  const ReductionResult r = reduce_remainder(d, cs, search.step_cap);
  if (format_of(o) == Format::Json) {
    nlohmann::ordered_json j;
    j["remainder"] = to_string(r.remainder, file.symbols, rk);
    j["multiplier"] = to_string(r.multiplier, file.symbols, rk);
    j["steps"] = r.steps;
    out << j.dump(2) << "\n";
  } else {
    out << "remainder: " << to_string(r.remainder, file.symbols, rk) << "\n";
    out << "multiplier: " << to_string(r.multiplier, file.symbols, rk) << "\n";
    out << "steps: " << r.steps << "\n";
  }
  return kOk;
}

int cmd_strength(const Options& o, std::ostream& out) {
  Evaluated ev = [&] {
    if (!o.catalog.empty()) {
      if (!o.files.empty()) throw UsageError("--catalog and --file are mutually exclusive");
      if (o.scheme.empty()) throw UsageError("--catalog requires --scheme");
      return evaluate_catalog(o.catalog, o.scheme, o);
    }
    return evaluate_file(single_file(o), o);
  }();
  out << emit_report(ev.report, ev.symbols, format_of(o));
  return kOk;
}

int cmd_compare(const Options& o, std::ostream& out) {
  std::vector<Evaluated> evs;
  if (!o.catalog.empty()) {
    if (!o.files.empty()) throw UsageError("--catalog and --file are mutually exclusive");
    for (const auto& s : catalog_schemes_for(o.catalog)) evs.push_back(evaluate_catalog(o.catalog, s, o));
  } else {
    for (const auto& f : o.files) evs.push_back(evaluate_file(f, o));
  }
  if (evs.size() < 2) throw UsageError("compare needs at least two schemes");
  std::vector<StrengthReport> reports;
  for (const auto& e : evs) reports.push_back(e.report);
  const auto ranked = compare_schemes(reports);
  if (format_of(o) == Format::Json) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& r : ranked) {
      j.push_back({{"place", r.place}, {"label", evs[r.index].label}, {"psi", to_string(reports[r.index].psi)}});
    }
    out << j.dump(2) << "\n";
  } else {
    for (std::size_t k = 0; k < ranked.size(); ++k) {
      const auto& r = ranked[k];
      const bool tie = (k > 0 && ranked[k - 1].place == r.place) ||
                       (k + 1 < ranked.size() && ranked[k + 1].place == r.place);
      out << r.place << ". " << evs[r.index].label << ": " << to_string(reports[r.index].psi)
          << (tie ? " (tie)" : "") << "\n";
    }
  }
  return kOk;
}

int cmd_discretize(const Options& o, std::ostream& out) {
  if (o.catalog.empty() || o.scheme.empty()) throw UsageError("discretize requires --catalog and --scheme");
  const CatalogEntry e = catalog_entry(o.catalog, o.scheme);
  if (!e.note.empty()) out << "# " << e.note << "\n";
  out << to_string(as_system_file(e));
  return kOk;
}

int cmd_catalog_list(std::ostream& out) {
  for (const auto& name : catalog_names()) {
    out << name << ":";
    for (const auto& s : catalog_schemes_for(name)) out << " " << s;
    out << "\n";
  }
  return kOk;
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SyntaxError:
    case ErrorKind::UndeclaredSymbol:
    case ErrorKind::ArityError:
      return kParse;
    case ErrorKind::Unstable:
      return kUnstable;
    case ErrorKind::SizeLimit:
    case ErrorKind::StepCapExceeded:
      return kSizeLimit;
    case ErrorKind::UnknownEntry:
      return kUsage;
    default:
      return kPrecondition;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Strength of difference schemes via difference dimension polynomials", "delta-strength"};
  app.require_subcommand(1);
  Options o;

  auto format_opt = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto lattice_cmd = [&](const std::string& name, const std::string& help, bool with_r) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--dim", o.dim, "Dimension m")->required();
    sub->add_option("--points", o.points, "Points, e.g. \"(1,0);(-2,0)\"")->required();
    if (with_r) sub->add_option("-r", o.r, "Order bound")->required();
    else format_opt(sub);
    return sub;
  };
  auto search_opts = [&](CLI::App* sub) {
    sub->add_option("--ranking", o.ranking, "Translation priority, e.g. \"s2, s1\"");
    sub->add_option("--radius", o.radius, "Orbit search radius (default 2*order+2)")->check(CLI::NonNegativeNumber);
    sub->add_option("--window", o.window, "Stabilization window")->check(CLI::NonNegativeNumber);
  };

  lattice_cmd("omega", "Dimension polynomial of a subset of N^m", false);
  lattice_cmd("phi", "Dimension polynomial of a subset of Z^m", false);
  lattice_cmd("oracle-v", "Count points of N^m not above E by enumeration", true);
  lattice_cmd("oracle-w", "Count points of Z^m not above A by enumeration", true);

  CLI::App* leader_cmd = app.add_subcommand("leader", "Leader of a polynomial");
  leader_cmd->add_option("--file", o.files, "System file")->required();
  leader_cmd->add_option("--poly", o.poly, "Polynomial name")->required();
  leader_cmd->add_option("--ranking", o.ranking, "Translation priority");

  CLI::App* charset_cmd = app.add_subcommand("charset", "Characteristic set of a polynomial or system");
  charset_cmd->add_option("--file", o.files, "System file")->required();
  charset_cmd->add_option("--poly", o.poly, "Single polynomial (default: the system)");
  search_opts(charset_cmd);
  format_opt(charset_cmd);

  CLI::App* reduce_cmd = app.add_subcommand("reduce", "Remainder of a polynomial modulo the other generators");
  reduce_cmd->add_option("--file", o.files, "System file")->required();
  reduce_cmd->add_option("--poly", o.poly, "Polynomial to reduce")->required();
  search_opts(reduce_cmd);
  format_opt(reduce_cmd);

  CLI::App* strength_cmd = app.add_subcommand("strength", "Difference dimension polynomial of a scheme");
  strength_cmd->add_option("--file", o.files, "System file");
  strength_cmd->add_option("--catalog", o.catalog, "Catalog PDE");
  strength_cmd->add_option("--scheme", o.scheme, "Catalog scheme");
  search_opts(strength_cmd);
  format_opt(strength_cmd);

  CLI::App* compare_cmd = app.add_subcommand("compare", "Rank schemes by strength");
  compare_cmd->add_option("--file", o.files, "System files (repeatable)");
  compare_cmd->add_option("--catalog", o.catalog, "Compare every scheme of a catalog PDE");
  search_opts(compare_cmd);
  format_opt(compare_cmd);

  CLI::App* discretize_cmd = app.add_subcommand("discretize", "Print the difference system of a catalog entry");
  discretize_cmd->add_option("--catalog", o.catalog, "Catalog PDE")->required();
  discretize_cmd->add_option("--scheme", o.scheme, "Scheme")->required();

  CLI::App* list_cmd = app.add_subcommand("catalog-list", "List catalog PDEs and their schemes");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "omega" || name == "phi" || name == "oracle-v" || name == "oracle-w") return cmd_lattice(name, o, out);
    if (sub == leader_cmd) return cmd_leader(o, out);
    if (sub == charset_cmd) return cmd_charset(o, out);
    if (sub == reduce_cmd) return cmd_reduce(o, out);
    if (sub == strength_cmd) return cmd_strength(o, out);
    if (sub == compare_cmd) return cmd_compare(o, out);
    if (sub == discretize_cmd) return cmd_discretize(o, out);
    if (sub == list_cmd) return cmd_catalog_list(out);
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  }
}

}  // namespace delta::cli
