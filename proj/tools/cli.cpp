#include "cli.hpp"

#include <CLI11.hpp>

#include <map>
#include <optional>

#include "iplogic/mints.hpp"
#include "iplogic/parser.hpp"
#include "iplogic/prover.hpp"
#include "iplogic/synth.hpp"
#include "iplogic/truth_table.hpp"

namespace iplogic::cli {

namespace {

struct Options {
  std::string formula;
  std::string logic = "int";
  std::string aggregator = "and";
  bool with_neg = true;
  bool weakest = false;
  std::vector<std::string> abducibles;
  bool abducibles_given = false;
  std::optional<std::size_t> limit;
  std::optional<std::size_t> budget;
  std::string prog, ic, goal;
};

ProverKind to_kind(const std::string& name) {
  return name == "cls" ? ProverKind::Classical : ProverKind::Intuitionistic;
}

Aggregator to_aggregator(const std::string& name) {
  static const std::map<std::string, Aggregator> table = {
      {"and", Aggregator::And},       {"or", Aggregator::Or},
      {"imp", Aggregator::Imp},       {"revimp", Aggregator::RevImp},
      {"iff", Aggregator::Iff},
  };
  return table.at(name);
}

// Duplicate-free, order-preserving; rejects names the grammar cannot express.
AtomSet parse_abducibles(const std::vector<std::string>& names) {
  AtomSet out;
  for (const auto& name : names) {
    if (!is_valid_atom_name(name))
      throw ParseError("invalid abducible atom '" + name + "'", 1, 1);
    if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
  }
  return out;
}

std::optional<AtomSet> abducibles_of(const Options& opt) {
  if (!opt.abducibles_given) return std::nullopt;
  return parse_abducibles(opt.abducibles);
}

// Emits candidates one per line; exit 0 iff anything was emitted.
int emit(CandidateStream stream, const std::optional<std::size_t>& limit, std::ostream& out) {
  std::size_t count = 0;
  while (!limit || count < *limit) {
    auto candidate = stream.next();
    if (!candidate) break;
    out << *candidate << '\n';
    ++count;
  }
  return count > 0 ? 0 : 1;
}

int emit_set(const std::vector<Formula>& set, std::ostream& out) {
  for (const auto& f : set) out << f << '\n';
  return set.empty() ? 1 : 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"propositional proving, weakest-assumption synthesis and abduction"};
  app.name("iplogic");
  app.require_subcommand(1);
  Options opt;

  auto add_logic = [&](CLI::App* cmd) {
    cmd->add_option("--logic", opt.logic, "logic to prove in")
        ->check(CLI::IsMember({"int", "cls"}))
        ->capture_default_str();
  };
  auto add_formula = [&](CLI::App* cmd) {
    cmd->add_option("formula", opt.formula, "formula in the tool's syntax")->required();
  };
  auto add_abducibles = [&](CLI::App* cmd) {
    cmd->add_option("--abducibles", opt.abducibles,
                    "comma-separated atoms candidates may mention (default: atoms of the formula)")
        ->delimiter(',')
        ->trigger_on_parse()
        ->each([&](const std::string&) { opt.abducibles_given = true; });
  };
  auto add_limit = [&](CLI::App* cmd) {
    cmd->add_option("--limit", opt.limit, "stop after this many candidates");
  };
  auto add_synth_flags = [&](CLI::App* cmd) {
    cmd->add_option("--aggregator", opt.aggregator, "connective joining chosen literals")
        ->check(CLI::IsMember({"and", "or", "imp", "revimp", "iff"}))
        ->capture_default_str();
    cmd->add_flag("--with-neg,!--no-neg", opt.with_neg,
                  "also consider negated literals (default: on)");
    add_abducibles(cmd);
  };

  CLI::App* prove = app.add_subcommand("prove", "decide provability; prints true or false");
  add_logic(prove);
  add_formula(prove);

  CLI::App* protasis =
      app.add_subcommand("protasis", "enumerate consistent assumptions that prove the formula");
  add_logic(protasis);
  add_synth_flags(protasis);
  add_limit(protasis);
  add_formula(protasis);

  CLI::App* weakest =
      app.add_subcommand("weakest", "print the minimal (weakest) such assumptions");
  add_logic(weakest);
  add_synth_flags(weakest);
  add_formula(weakest);

  CLI::App* explain_cmd = app.add_subcommand(
      "explain", "abduce literal conjunctions explaining a goal under a program");
  add_logic(explain_cmd);
  add_abducibles(explain_cmd);
  add_limit(explain_cmd);
  explain_cmd->add_option("--prog", opt.prog, "background program formula")->required();
  explain_cmd->add_option("--ic", opt.ic, "integrity constraint formula")->required();
  explain_cmd->add_option("--goal", opt.goal, "goal formula")->required();

  CLI::App* mints = app.add_subcommand(
      "mints", "enumerate canonical-form premises (conjunctions of implicational shapes)");
  add_logic(mints);
  add_abducibles(mints);
  add_limit(mints);
  mints->add_option("--budget", opt.budget, "slot budget (default: number of abducibles)");
  mints->add_flag("--weakest", opt.weakest, "print only the weakest premises");
  add_formula(mints);

  CLI::App* table = app.add_subcommand("table", "print the classical truth table");
  add_formula(table);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }

  try {
    const ProverKind kind = to_kind(opt.logic);
    if (prove->parsed()) {
      const bool provable = proves(kind, parse(opt.formula));
      out << (provable ? "true" : "false") << '\n';
      return provable ? 0 : 1;
    }
    if (protasis->parsed()) {
      SynthConfig config{kind, to_aggregator(opt.aggregator), opt.with_neg, abducibles_of(opt)};
      return emit(any_protasis(config, parse(opt.formula)), opt.limit, out);
    }
    if (weakest->parsed()) {
      SynthConfig config{kind, to_aggregator(opt.aggregator), opt.with_neg, abducibles_of(opt)};
      return emit_set(weakest_protasis(config, parse(opt.formula)), out);
    }
    if (explain_cmd->parsed()) {
      return emit(explain(kind, abducibles_of(opt), parse(opt.prog), parse(opt.ic),
                          parse(opt.goal)),
                  opt.limit, out);
    }
    if (mints->parsed()) {
      Formula f = parse(opt.formula);
      if (opt.weakest)
        return emit_set(weakest_mints_premise(kind, abducibles_of(opt), f, opt.budget), out);
      return emit(any_mints_premise(kind, abducibles_of(opt), f, opt.budget), opt.limit, out);
    }
    // table
    print_truth_table(parse(opt.formula), out);
    return 0;
  } catch (const ParseError& e) {
    err << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const SearchLimitError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace iplogic::cli
