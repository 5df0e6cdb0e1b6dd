#include "morsecob/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "morsecob/decision.hpp"
#include "morsecob/expression.hpp"
#include "morsecob/handles.hpp"
#include "morsecob/reeb.hpp"
#include "morsecob/search.hpp"

namespace morsecob::cli {
namespace {

using Json = nlohmann::ordered_json;

Json abc_json(AbcClass c) {
  return c == AbcClass::None ? Json(nullptr) : Json(std::string(to_string(c)));
}

Json decision_json(const Surface& fa, const Surface& fb, const Decision& d) {
  const auto& g = d.diagnostics;
  return Json{
      {"fa", fa.to_string()},
      {"fb", fb.to_string()},
      {"exists", d.exists},
      {"cond1", d.cond1_holds},
      {"cond2", d.cond2_holds},
      {"abc", abc_json(d.abc_class)},
      {"diagnostics",
       {{"P_a", g.genus_a},
        {"P_b", g.genus_b},
        {"Po_a", g.odd_a},
        {"Po_b", g.odd_b},
        {"Pprime_sum_a", g.even_part_sum_a},
        {"Pprime_sum_b", g.even_part_sum_b}}},
  };
}

// One line per failed condition, empty when the pair is accepted.
std::vector<std::string> failure_reasons(const Decision& d) {
  const auto& g = d.diagnostics;
  std::vector<std::string> out;
  if (!d.cond1_holds) {
    out.push_back("condition (1) fails: P_o(F_b) - P_o(F_a) = " +
                  std::to_string(g.odd_b - g.odd_a) + " is odd, F_a and F_b are not cobordant");
  }
  if (g.odd_b > g.genus_a) {
    out.push_back("condition (2) fails: P_o(F_b) = " + std::to_string(g.odd_b) +
                  " > P(F_a) = " + std::to_string(g.genus_a));
  }
  if (g.odd_a > g.genus_b) {
    out.push_back("condition (2) fails: P_o(F_a) = " + std::to_string(g.odd_a) +
                  " > P(F_b) = " + std::to_string(g.genus_b));
  }
  return out;
}

void print_decision(std::ostream& out, const Surface& fa, const Surface& fb, const Decision& d) {
  const auto& g = d.diagnostics;
  out << "F_a: " << fa.to_string() << "\n"
      << "F_b: " << fb.to_string() << "\n"
      << "P(F_a) = " << g.genus_a << ", P_o(F_a) = " << g.odd_a
      << ", sum P'(F_a) = " << g.even_part_sum_a << "\n"
      << "P(F_b) = " << g.genus_b << ", P_o(F_b) = " << g.odd_b
      << ", sum P'(F_b) = " << g.even_part_sum_b << "\n"
      << "condition (1): " << (d.cond1_holds ? "holds" : "fails") << "\n"
      << "condition (2): " << (d.cond2_holds ? "holds" : "fails") << "\n"
      << "class: " << to_string(d.abc_class) << "\n";
  for (const auto& reason : failure_reasons(d)) {
    out << reason << "\n";
  }
  out << "verdict: "
      << (d.exists ? "a Morse function with one singular value exists"
                   : "no Morse function with one singular value exists")
      << "\n";
}

SearchBounds bounds_for(const Surface& fa, const Surface& fb, int max_moves) {
  SearchBounds b;
  b.max_components = static_cast<int>(std::max(fa.size(), fb.size()));
  b.max_nonorientable_genus = 0;
  b.max_orientable_genus = 0;
  for (const auto* s : {&fa, &fb}) {
    for (const auto& c : s->components()) {
      b.max_nonorientable_genus = std::max(b.max_nonorientable_genus, c.nonorientable_genus());
      if (c.is_orientable()) {
        b.max_orientable_genus = std::max(b.max_orientable_genus, c.genus());
      }
    }
  }
  b.max_moves = max_moves > 0 ? max_moves : heuristic_budget(fa, fb);
  return b;
}

Json report_json(const VerifyReport& r) {
  Json pairs = Json::array();
  for (const auto& rec : r.records) {
    pairs.push_back(Json{
        {"fa", rec.fa.to_string()},
        {"fb", rec.fb.to_string()},
        {"exists", rec.exists},
        {"status", to_string(rec.status)},
        {"witness_length", rec.witness_length ? Json(*rec.witness_length) : Json(nullptr)},
        {"witness_valid", rec.witness_valid},
        {"budget", rec.budget},
    });
  }
  Json violations = Json::array();
  for (const auto& v : r.necessity_violations) {
    violations.push_back(Json{{"fa", v.fa.to_string()}, {"reached", v.reached.to_string()}});
  }
  return Json{
      {"bounds",
       {{"max_components", r.bounds.max_components},
        {"max_P", r.bounds.max_nonorientable_genus},
        {"max_genus", r.bounds.max_orientable_genus},
        {"max_moves", r.bounds.max_moves}}},
      {"checked_pairs", r.checked_pairs()},
      {"found", r.count(PairStatus::Found)},
      {"rejected", r.count(PairStatus::Rejected)},
      {"undecided", r.undecided()},
      {"mismatches", r.mismatches()},
      {"pairs", std::move(pairs)},
      {"necessity_violations", std::move(violations)},
  };
}

void print_report(std::ostream& out, const VerifyReport& r) {
  const auto& b = r.bounds;
  out << "bounds: components <= " << b.max_components << ", P per component <= "
      << b.max_nonorientable_genus << ", orientable genus <= " << b.max_orientable_genus
      << ", moves <= " << b.max_moves << "\n"
      << "checked pairs: " << r.checked_pairs() << "\n"
      << "  found: " << r.count(PairStatus::Found) << "\n"
      << "  rejected: " << r.count(PairStatus::Rejected) << "\n"
      << "  undecided: " << r.undecided() << "\n"
      << "  mismatches: " << r.count(PairStatus::Mismatch) << "\n"
      << "necessity violations: " << r.necessity_violations.size() << "\n";
  for (const auto& rec : r.records) {
    if (rec.status == PairStatus::Mismatch || rec.status == PairStatus::Undecided ||
        !rec.witness_valid) {
      out << to_string(rec.status) << (rec.witness_valid ? "" : " (invalid witness)") << ": "
          << rec.fa.to_string() << " -> " << rec.fb.to_string() << " (budget " << rec.budget
          << ")\n";
    }
  }
  for (const auto& v : r.necessity_violations) {
    out << "necessity violation: " << v.fa.to_string() << " reaches " << v.reached.to_string()
        << "\n";
  }
  out << (r.mismatches() == 0 ? "result: no mismatches\n" : "result: MISMATCHES FOUND\n");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide and witness single-singular-value Morse functions on 3-dimensional "
               "cobordisms between closed surfaces"};
  app.require_subcommand(1);

  std::string expr_a, expr_b, out_path;
  bool json = false;
  int max_moves = 0;
  SearchBounds verify_bounds;
  verify_bounds.max_moves = 64;
  unsigned threads = 0;

  auto* invariants = app.add_subcommand("invariants", "Print the invariants of a surface");
  invariants->add_option("surface", expr_a, "Surface expression")->required();

  auto* decide_cmd = app.add_subcommand("decide", "Decide existence for a pair of surfaces");
  decide_cmd->add_option("lower", expr_a, "Lower boundary F_a")->required();
  decide_cmd->add_option("upper", expr_b, "Upper boundary F_b")->required();
  decide_cmd->add_flag("--json", json, "Emit JSON");

  auto* witness_cmd = app.add_subcommand("witness", "Search for a handle-move witness");
  witness_cmd->add_option("lower", expr_a, "Lower boundary F_a")->required();
  witness_cmd->add_option("upper", expr_b, "Upper boundary F_b")->required();
  witness_cmd->add_option("--max-moves", max_moves, "Move budget (default: heuristic)")
      ->check(CLI::PositiveNumber);
  witness_cmd->add_flag("--json", json, "Emit JSON");

  auto* verify_cmd = app.add_subcommand("verify", "Exhaustively compare decide with search");
  verify_cmd->add_option("--max-components", verify_bounds.max_components,
                         "Components per side")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--max-p", verify_bounds.max_nonorientable_genus,
                         "Non-orientable genus per component")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--max-genus", verify_bounds.max_orientable_genus,
                         "Orientable genus per component")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--max-moves", verify_bounds.max_moves,
                         "Ceiling on the per-pair heuristic budget")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--threads", threads, "Worker threads (0 = all cores)");
  verify_cmd->add_option("--out", out_path, "Write the report to this path");
  verify_cmd->add_flag("--json", json, "Emit the report as JSON");

  auto* reeb_cmd = app.add_subcommand("reeb", "Emit the Reeb graph as Graphviz DOT");
  reeb_cmd->add_option("lower", expr_a, "Lower boundary F_a")->required();
  reeb_cmd->add_option("upper", expr_b, "Upper boundary F_b")->required();
  reeb_cmd->add_option("--out", out_path, "Output path (default: standard output)");

  std::vector<const char*> argv;
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitInputError;
  }

  try {
    if (invariants->parsed()) {
      const auto s = parse_surface(expr_a);
      out << "surface: " << s.to_string() << "\n"
          << "P = " << total_nonorientable_genus(s) << "\n"
          << "P_o = " << odd_component_count(s) << "\n"
          << "chi = " << euler_char(s) << "\n"
          << "components:\n";
      for (ComponentId id = 0; id < s.size(); ++id) {
        const auto& c = s.component(id);
        out << "  #" << id << " " << c.to_string() << ": P = " << c.nonorientable_genus()
            << ", P' = " << even_genus_part(c) << ", r = " << r_label(c)
            << ", r' = " << r_prime_label(c) << ", chi = " << c.euler_char() << "\n";
      }
      return kExitYes;
    }

    if (decide_cmd->parsed()) {
      const auto fa = parse_surface(expr_a);
      const auto fb = parse_surface(expr_b);
      const auto d = decide(fa, fb);
      if (json) {
        out << decision_json(fa, fb, d).dump(2) << "\n";
      } else {
        print_decision(out, fa, fb, d);
      }
      return d.exists ? kExitYes : kExitNo;
    }

    if (witness_cmd->parsed()) {
      const auto fa = parse_surface(expr_a);
      const auto fb = parse_surface(expr_b);
      const auto d = decide(fa, fb);
      const auto bounds = bounds_for(fa, fb, max_moves);
      std::optional<Witness> w;
      if (d.exists) {
        w = find_witness(fa, fb, bounds);
      }
      const int code = w ? kExitYes : (d.exists ? kExitBudgetExhausted : kExitNo);
      if (json) {
        Json moves = Json::array();
        if (w) {
          for (const auto& m : w->moves) {
            moves.push_back(format_move(m));
          }
        }
        out << Json{
                   {"fa", fa.to_string()},
                   {"fb", fb.to_string()},
                   {"exists", d.exists},
                   {"status", w ? "found" : (d.exists ? "budget_exhausted" : "rejected")},
                   {"budget", bounds.max_moves},
                   {"length", w ? Json(w->moves.size()) : Json(nullptr)},
                   {"middle", w ? Json(w->middle.to_string()) : Json(nullptr)},
                   {"moves", std::move(moves)},
               }
                   .dump(2)
            << "\n";
      } else if (w) {
        out << format_moves(w->moves);
      } else if (d.exists) {
        out << "no witness within budget of " << bounds.max_moves << " moves\n";
      } else {
        out << "no witness: the pair fails the existence conditions\n";
        for (const auto& reason : failure_reasons(d)) {
          out << reason << "\n";
        }
      }
      return code;
    }

    if (verify_cmd->parsed()) {
      const auto report = verify_theorem(verify_bounds, threads);
      std::ostringstream text;
      if (json) {
        text << report_json(report).dump(2) << "\n";
      } else {
        print_report(text, report);
      }
      if (out_path.empty()) {
        out << text.str();
      } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) {
          err << "error: cannot write " << out_path << "\n";
          return kExitInputError;
        }
        file << text.str();
      }
      return report.mismatches() == 0 ? kExitYes : kExitNo;
    }

    if (reeb_cmd->parsed()) {
      const auto dot = to_dot(build_reeb(parse_surface(expr_a), parse_surface(expr_b)));
      if (out_path.empty()) {
        out << dot;
      } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) {
          err << "error: cannot write " << out_path << "\n";
          return kExitInputError;
        }
        file << dot;
      }
      return kExitYes;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace morsecob::cli
