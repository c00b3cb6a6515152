#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <map>
#include <ostream>

#include <CLI/CLI.hpp>
#include <nlohmann/json.hpp>

#include "naples/naples.hpp"

namespace naples::cli {
namespace {

using json = nlohmann::json;

enum class Format { json, csv, plain };

struct Common {
  Format format = Format::json;
  unsigned threads = 1;
  bool allow_large = false;
};

json to_json(const BigInt& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() &&
      value <= std::numeric_limits<std::int64_t>::max()) {
    return json(value.convert_to<std::int64_t>());
  }
  return json(value.str());
}

json to_json(const Interval& iv) { return json::array({iv.lo(), iv.hi()}); }

json to_json(const Lot& lot) {
  json j{{"total", lot.total()}};
  j["obstruction"] = lot.obstruction() ? to_json(*lot.obstruction()) : json(nullptr);
  return j;
}

json to_json(const ParkOutcome& outcome) {
  json cars = json::array();
  for (const auto& rec : outcome.cars()) {
    cars.push_back({{"pref", rec.preferred},
                    {"spot", rec.parked},
                    {"mode", to_string(rec.mode)},
                    {"path", to_json(rec.traverse)}});
  }
  json j{{"parked", outcome.parked_spots()}};
  j["failed_at"] = outcome.failed_at() ? json(*outcome.failed_at()) : json(nullptr);
  j["cars"] = std::move(cars);
  return j;
}

json to_json(const VerifyReport& r) {
  json params = json::object();
  for (const auto& [name, value] : r.params) params[name] = value;
  return {{"claim", std::string(to_string(r.claim))},
          {"params", std::move(params)},
          {"lhs", to_json(r.lhs)},
          {"rhs", to_json(r.rhs)},
          {"ok", r.ok},
          {"counterexamples", r.counterexamples}};
}

std::string joined(std::span<const Vertex> prefs) {
  std::string s;
  for (std::size_t i = 0; i < prefs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(prefs[i]);
  }
  return s;
}

std::string lot_text(const Lot& lot) {
  std::string s = "total=" + std::to_string(lot.total()) + " obstruction=";
  if (const auto& b = lot.obstruction()) {
    s += "[" + std::to_string(b->lo()) + "," + std::to_string(b->hi()) + "]";
  } else {
    s += "none";
  }
  return s;
}

void print_outcome(std::ostream& out, const ParkOutcome& outcome, Format format) {
  switch (format) {
    case Format::json:
      out << to_json(outcome).dump() << '\n';
      return;
    case Format::csv: {
      out << "car,pref,spot,mode,path_lo,path_hi\n";
      int car = 1;
      for (const auto& rec : outcome.cars()) {
        out << car++ << ',' << rec.preferred << ',' << rec.parked << ',' << to_string(rec.mode)
            << ',' << rec.traverse.lo() << ',' << rec.traverse.hi() << '\n';
      }
      if (outcome.failed_at()) out << *outcome.failed_at() << ",,,failed,,\n";
      return;
    }
    case Format::plain: {
      out << "parked=" << joined(outcome.parked_spots()) << '\n';
      int car = 1;
      for (const auto& rec : outcome.cars()) {
        out << "car " << car++ << ": pref " << rec.preferred << " -> " << rec.parked << " ("
            << to_string(rec.mode) << ") path [" << rec.traverse.lo() << ","
            << rec.traverse.hi() << "]\n";
      }
      if (outcome.failed_at()) out << "failed_at=" << *outcome.failed_at() << '\n';
      return;
    }
  }
}

void print_seq(std::ostream& out, std::span<const Vertex> prefs, Format format) {
  if (format == Format::json) {
    out << json(std::vector<Vertex>(prefs.begin(), prefs.end())).dump() << '\n';
  } else {
    out << joined(prefs) << '\n';
  }
}

void print_lot_seq(std::ostream& out, const LotSeq& value, Format format) {
  switch (format) {
    case Format::json:
      out << json{{"prefs", value.prefs}, {"lot", to_json(value.lot)}}.dump() << '\n';
      return;
    case Format::csv: {
      out << joined(value.prefs) << '\n';
      const auto& b = value.lot.obstruction();
      out << value.lot.total() << ',' << (b ? std::to_string(b->lo()) : "") << ','
          << (b ? std::to_string(b->hi()) : "") << '\n';
      return;
    }
    case Format::plain:
      out << joined(value.prefs) << '\n' << lot_text(value.lot) << '\n';
      return;
  }
}

void print_big(std::ostream& out, const BigInt& value) { out << value.str() << '\n'; }

void print_report(std::ostream& out, const VerifyReport& r, Format format) {
  switch (format) {
    case Format::json:
      out << to_json(r).dump() << '\n';
      return;
    case Format::csv:
      out << "claim,lhs,rhs,ok,counterexamples\n"
          << to_string(r.claim) << ',' << r.lhs.str() << ',' << r.rhs.str() << ','
          << (r.ok ? "true" : "false") << ',' << r.counterexamples.size() << '\n';
      return;
    case Format::plain: {
      out << to_string(r.claim) << '(';
      bool first = true;
      for (const auto& [name, value] : r.params) {
        out << (first ? "" : ",") << name << '=' << value;
        first = false;
      }
      out << "): lhs=" << r.lhs.str() << " rhs=" << r.rhs.str()
          << (r.relation == Relation::less ? " (strict <)" : " (=)") << ' '
          << (r.ok ? "ok" : "FAILED") << '\n';
      for (const auto& c : r.counterexamples) out << "  counterexample " << format_seq(c) << '\n';
      return;
    }
  }
}

Lot obstructed_lot(int n, int k, std::optional<int> start) {
  if (k > 0 && !start) throw InvalidLot("an obstructed lot with k > 0 needs --obstruction-start");
  return Lot::with_block(n + k, start.value_or(1), k);
}

}  // namespace

PrefSeq parse_prefs(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.size() >= 2 && ((text.front() == '[' && text.back() == ']') ||
                           (text.front() == '(' && text.back() == ')'))) {
    text = trim(text.substr(1, text.size() - 2));
  }
  PrefSeq out;
  if (text.empty()) return out;
  while (true) {
    const auto comma = text.find(',');
    const auto token = trim(text.substr(0, comma));
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw std::invalid_argument("malformed preference '" + std::string(token) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Parking functions: simulate, map, enumerate, count and verify", "naples"};
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  const std::map<std::string, Format> formats{
      {"json", Format::json}, {"csv", Format::csv}, {"plain", Format::plain}};
  app.add_option("--format", common.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats));
  app.add_option("--threads", common.threads, "Worker threads for enumeration")
      ->check(CLI::Range(1u, 256u));
  app.add_flag("--allow-large", common.allow_large,
               "Lift the 1e8 candidate guardrail on exhaustive scans");

  int n = 0;
  int k = 0;
  int m = 0;
  std::optional<int> obstruction_start;
  std::string prefs_text;

  auto* park = app.add_subcommand("park", "Simulate one parking rule");
  std::string park_family;
  park->add_option("--family", park_family)
      ->required()
      ->check(CLI::IsMember({"classical", "naples", "obstructed"}));
  park->add_option("--n", n, "Free vertices")->required()->check(CLI::NonNegativeNumber);
  park->add_option("--k", k, "Backup limit or obstruction length")->check(CLI::NonNegativeNumber);
  park->add_option("--obstruction-start", obstruction_start);
  park->add_option("--prefs", prefs_text, "Comma-separated preferences")->required();

  auto* map = app.add_subcommand("map", "Apply a reflection, bijection or involution");
  std::string op;
  map->add_option("--op", op)
      ->required()
      ->check(CLI::IsMember({"phi", "phi-bar", "iota", "xi", "xi-inv", "xi-bar", "psi", "Psi"}));
  map->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
  map->add_option("--k", k)->check(CLI::NonNegativeNumber);
  map->add_option("--obstruction-start", obstruction_start);
  map->add_option("--prefs", prefs_text)->required();

  auto* decompose = app.add_subcommand("decompose", "k-decomposition and boundary cars");
  decompose->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
  decompose->add_option("--k", k)->check(CLI::NonNegativeNumber);
  decompose->add_option("--prefs", prefs_text)->required();

  auto* stats_cmd = app.add_subcommand("stats", "Ascent, descent and tie counts");
  stats_cmd->add_option("--prefs", prefs_text)->required();

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List a family in lexicographic order");
  std::string family_name;
  std::optional<std::size_t> limit;
  enumerate_cmd->add_option("--family", family_name)
      ->required()
      ->check(CLI::IsMember({"pf", "naples", "contained", "opf", "lpf"}, CLI::ignore_case));
  enumerate_cmd->add_option("--m", m)->required()->check(CLI::NonNegativeNumber);
  enumerate_cmd->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
  enumerate_cmd->add_option("--k", k)->check(CLI::NonNegativeNumber);
  enumerate_cmd->add_option("--obstruction-start", obstruction_start);
  enumerate_cmd->add_option("--limit", limit);

  auto* count = app.add_subcommand("count", "Closed forms and the Naples recursion");
  std::string formula;
  count->add_option("--formula", formula)
      ->required()
      ->check(CLI::IsMember({"classical", "contained", "lpf", "naples-recursive"}));
  auto* count_m = count->add_option("--m", m)->check(CLI::NonNegativeNumber);
  count->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
  count->add_option("--k", k)->check(CLI::NonNegativeNumber);

  auto* verify_cmd = app.add_subcommand("verify", "Exhaustively check a counting claim");
  std::string claim_name;
  verify_cmd->add_option("--claim", claim_name)
      ->required()
      ->check(CLI::IsMember({"bijection", "ties", "injection", "recursion", "lpf-count", "bound"}));
  verify_cmd->add_option("--m", m)->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--k", k)->check(CLI::NonNegativeNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  }

  EnumerateOptions options;
  options.threads = common.threads;
  options.allow_large = common.allow_large;
  const Format format = common.format;

  try {
    if (park->parsed()) {
      const auto prefs = parse_prefs(prefs_text);
      if (park_family == "classical") {
        print_outcome(out, park_classical(prefs, n), format);
      } else if (park_family == "naples") {
        print_outcome(out, park_naples(prefs, n, k), format);
      } else {
        print_outcome(out, park_obstructed(prefs, obstructed_lot(n, k, obstruction_start)), format);
      }
      return kExitOk;
    }

    if (map->parsed()) {
      const auto prefs = parse_prefs(prefs_text);
      check_prefs(prefs, op == "phi-bar" ? n + k : n);
      if (op == "phi") {
        print_seq(out, phi(prefs, n), format);
      } else if (op == "phi-bar") {
        print_lot_seq(out, phi_bar(prefs, obstructed_lot(n, k, obstruction_start)), format);
      } else if (op == "iota") {
        print_lot_seq(out, iota(prefs, n, k), format);
      } else if (op == "xi") {
        print_seq(out, xi(prefs, n, k), format);
      } else if (op == "xi-inv") {
        print_seq(out, xi_inverse(prefs, n, k), format);
      } else if (op == "xi-bar") {
        print_lot_seq(out, xi_bar(prefs, n, k), format);
      } else if (op == "psi") {
        print_seq(out, psi_small(prefs, n, k), format);
      } else {
        print_seq(out, psi_big(prefs, n, k), format);
      }
      return kExitOk;
    }

    if (decompose->parsed()) {
      const auto prefs = parse_prefs(prefs_text);
      const auto dec = k_decompose(prefs, n, k);
      const auto boundaries = dec.boundary_cars();
      if (format == Format::json) {
        json parts = json::array();
        for (int i = 1; i <= dec.size(); ++i) {
          const auto& p = dec.part(i);
          parts.push_back({{"start", p.start},
                           {"length", p.length},
                           {"class", i % 2 == 1 ? "backward" : "forward"},
                           {"prefs", PrefSeq(prefs.begin() + p.start - 1,
                                             prefs.begin() + p.start - 1 + p.length)}});
        }
        out << json{{"parts", parts}, {"boundary_cars", boundaries}}.dump() << '\n';
      } else {
        const char sep = format == Format::csv ? ',' : ' ';
        if (format == Format::csv) out << "part,start,length,prefs\n";
        for (int i = 1; i <= dec.size(); ++i) {
          const auto& p = dec.part(i);
          const std::span<const Vertex> run(prefs.data() + p.start - 1,
                                            static_cast<std::size_t>(p.length));
          out << i << sep << p.start << sep << p.length << sep
              << (format == Format::csv ? "\"" + joined(run) + "\"" : format_seq(run)) << '\n';
        }
        if (format == Format::plain) out << "boundary_cars=" << joined(boundaries) << '\n';
      }
      return kExitOk;
    }

    if (stats_cmd->parsed()) {
      const auto s = stats(parse_prefs(prefs_text));
      if (format == Format::json) {
        out << json{{"ascents", s.ascents}, {"descents", s.descents}, {"ties", s.ties}}.dump()
            << '\n';
      } else if (format == Format::csv) {
        out << "ascents,descents,ties\n" << s.ascents << ',' << s.descents << ',' << s.ties << '\n';
      } else {
        out << "ascents=" << s.ascents << " descents=" << s.descents << " ties=" << s.ties << '\n';
      }
      return kExitOk;
    }

    if (enumerate_cmd->parsed()) {
      FamilyParams params{*parse_family(family_name), m, n, k, obstruction_start};
      options.limit = limit;
      const auto members = enumerate(params, options);
      if (format == Format::json) {
        out << "[";
        for (std::size_t i = 0; i < members.size(); ++i) {
          out << (i ? ",\n" : "\n") << json(members[i]).dump();
        }
        out << (members.empty() ? "]\n" : "\n]\n");
      } else {
        for (const auto& f : members) out << joined(f) << '\n';
      }
      return kExitOk;
    }

    if (count->parsed()) {
      if (formula == "classical") {
        if (count_m->count() == 0) throw InvalidFamilyParams("--formula classical needs --m");
        print_big(out, count_classical(m, n));
      } else if (formula == "contained") {
        print_big(out, count_contained(n));
      } else if (formula == "lpf") {
        print_big(out, count_lpf(n, k));
      } else {
        print_big(out, naples_count_recursive(n, k, options));
      }
      return kExitOk;
    }

    if (verify_cmd->parsed()) {
      const auto report = verify(*parse_claim(claim_name), {m, n, k}, options);
      print_report(out, report, format);
      return report.ok ? kExitOk : kExitVerifyFailed;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::logic_error& e) {
    err << "internal check failed: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
  return kExitBadInput;
}

}  // namespace naples::cli
