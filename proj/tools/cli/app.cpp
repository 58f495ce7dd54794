#include "app.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>

#include "commands.hpp"
#include "instances.hpp"
#include "polytext.hpp"
#include "recprs/error.hpp"

namespace recprs::cli {

namespace {

using nlohmann::json;

void render_text(const json& v, std::ostream& out, int indent);

void render_scalar(const json& v, std::ostream& out) {
  if (v.is_string()) {
    out << v.get<std::string>();
  } else {
    out << v.dump();
  }
}

bool is_flat(const json& v) {
  if (!v.is_array()) return false;
  for (const auto& e : v) {
    if (e.is_structured()) return false;
  }
  return true;
}

void render_flat_array(const json& v, std::ostream& out) {
  out << '[';
  bool first = true;
  for (const auto& e : v) {
    out << (first ? "" : ", ");
    render_scalar(e, out);
    first = false;
  }
  out << ']';
}

// Indented key/value rendering of a report for terminal reading.
void render_text(const json& v, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_object()) {
    for (const auto& [key, val] : v.items()) {
      out << pad << key << ':';
      if (is_flat(val)) {
        out << ' ';
        render_flat_array(val, out);
        out << '\n';
      } else if (val.is_structured()) {
        out << '\n';
        render_text(val, out, indent + 2);
      } else {
        out << ' ';
        render_scalar(val, out);
        out << '\n';
      }
    }
  } else if (v.is_array()) {
    for (const auto& e : v) {
      out << pad << "-\n";
      render_text(e, out, indent + 2);
    }
  } else {
    out << pad;
    render_scalar(v, out);
    out << '\n';
  }
}

struct Shared {
  bool json_output = false;
  std::string rule = "sturm";
};

void emit(const json& report, const Shared& s, std::ostream& out) {
  if (s.json_output) {
    out << report.dump(2) << '\n';
  } else {
    render_text(report, out, 0);
  }
}

// G defaults to F' when only F is given.
std::pair<Poly, Poly> read_pair(const std::vector<std::string>& polys) {
  if (polys.empty() || polys.size() > 2) throw ParseError("expected one or two polynomials");
  Poly f = parse_poly_text(polys[0]);
  Poly g = polys.size() == 2 ? parse_poly_text(polys[1]) : f.derivative();
  return {std::move(f), std::move(g)};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Recursive polynomial remainder sequences and their subresultants over Q"};
  app.name("recprs");
  app.require_subcommand(1);
  Shared s;
  const auto add_common = [&s](CLI::App* sub) {
    sub->add_flag("--json", s.json_output, "Print the report as JSON");
    sub->add_option("--rule", s.rule, "Division rule")
        ->check(CLI::IsMember({"sturm", "monic"}))
        ->capture_default_str();
  };
  const char* poly_help = "Polynomial: expression, JSON coefficient array, or @file";

  std::vector<std::string> polys;
  auto* prs = app.add_subcommand("prs", "Polynomial remainder sequence of F and G");
  prs->add_option("polys", polys, poly_help)->required()->expected(2);
  add_common(prs);

  auto* rprs = app.add_subcommand("rprs", "Recursive PRS of F and G (G defaults to F')");
  rprs->add_option("polys", polys, poly_help)->required()->expected(1, 2);
  add_common(rprs);

  SubresRequest req;
  std::string kind = "classic";
  auto* subres = app.add_subcommand("subres", "One subresultant of F and G (G defaults to F')");
  subres->add_option("polys", polys, poly_help)->required()->expected(1, 2);
  subres->add_option("--kind", kind, "Subresultant family")
      ->check(CLI::IsMember({"classic", "recursive", "nested", "reduced"}))
      ->capture_default_str();
  subres->add_option("--k", req.k, "Recursion level (1-based)")->capture_default_str();
  subres->add_option("--j", req.j, "Subresultant degree")->required();
  subres->add_flag("--matrix", req.include_matrix, "Include the matrix entries");
  add_common(subres);

  std::string root_poly;
  auto* rootcount = app.add_subcommand("rootcount", "Real roots counted with multiplicity");
  rootcount->add_option("poly", root_poly, poly_help)->required();
  rootcount->add_flag("--json", s.json_output, "Print the report as JSON");

  std::optional<std::uint64_t> seed;
  bool corrupt = false;
  auto* verify = app.add_subcommand("verify", "Check every subresultant identity exactly");
  verify->add_option("polys", polys, poly_help)->expected(1, 2);
  verify->add_option("--seed", seed, "Use a random instance from this seed");
  verify->add_flag("--corrupt-ledger", corrupt,
                   "Test hook: double every R-bar constant before checking");
  add_common(verify);

  std::string sweep;
  bool csv = false;
  BenchOptions bopt;
  auto* bench = app.add_subcommand("bench", "Matrix sizes and timings per (k, j)");
  bench->add_option("polys", polys, poly_help)->expected(1, 2);
  bench->add_option("--sweep", sweep, "Degree range LO:HI over (x-1)^a (x+1)^b with G = F'");
  bench->add_option("--max-cols", bopt.max_cols, "Largest recursive matrix to build")
      ->capture_default_str();
  bench->add_flag("--csv", csv, "Print CSV instead of a report");
  add_common(bench);

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    const DivisionRule rule = rule_by_name(s.rule);
    if (*prs) {
      const auto [f, g] = read_pair(polys);
      emit(cmd_prs(f, g, rule), s, out);
    } else if (*rprs) {
      const auto [f, g] = read_pair(polys);
      emit(cmd_rprs(f, g, rule), s, out);
    } else if (*subres) {
      req.kind = subres_kind_by_name(kind);
      const auto [f, g] = read_pair(polys);
      emit(cmd_subres(f, g, rule, req), s, out);
    } else if (*rootcount) {
      emit(cmd_rootcount(parse_poly_text(root_poly)), s, out);
    } else if (*verify) {
      if (seed.has_value() == !polys.empty()) {
        throw ParseError("verify takes either polynomials or --seed");
      }
      const auto [f, g] = seed ? random_instance(*seed) : read_pair(polys);
      bool passed = false;
      const LedgerHook hook = corrupt ? LedgerHook(corrupt_ledger) : LedgerHook();
      const json report = cmd_verify(f, g, rule, hook, passed);
      emit(report, s, out);
      if (!passed) {
        for (const auto& c : report["checks"]) {
          if (c["passed"].get<bool>()) continue;
          err << "failed: " << c["identity"].get<std::string>() << " at k=" << c["k"].dump();
          if (c.contains("j")) err << " j=" << c["j"].dump();
          if (c.contains("i")) err << " i=" << c["i"].dump();
          err << '\n';
        }
        return kDomainError;
      }
    } else if (*bench) {
      json table;
      if (!sweep.empty()) {
        if (!polys.empty()) throw ParseError("bench takes either polynomials or --sweep");
        const auto colon = sweep.find(':');
        if (colon == std::string::npos) throw ParseError("--sweep expects LO:HI");
        try {
          table = bench_sweep(std::stoi(sweep.substr(0, colon)), std::stoi(sweep.substr(colon + 1)),
                              rule, bopt);
        } catch (const std::logic_error&) {
          throw ParseError("--sweep expects integers LO:HI");
        }
      } else {
        const auto [f, g] = read_pair(polys);
        table = bench_instance(f, g, rule, bopt);
      }
      if (csv) {
        out << bench_csv(table);
      } else {
        emit(json{{"rows", table}}, s, out);
      }
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind());
    if (e.level()) err << " at level " << *e.level();
    err << ": " << e.what() << '\n';
    return kDomainError;
  }
  return kOk;
}

}  // namespace recprs::cli
