#include "sp16/cli.hpp"

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "sp16/errors.hpp"
#include "sp16/io.hpp"
#include "sp16/verify.hpp"

namespace sp16 {

int cmd_verify(Suite suite, std::uint64_t trials, std::uint64_t seed, std::ostream& out, std::ostream& err) {
  try {
    bool ok = true;
    const auto run = [&](SuiteReport (*fn)(std::uint64_t, std::uint64_t)) {
      const SuiteReport rep = fn(trials, seed);
      out << render_suite(rep);
      ok = ok && rep.ok();
    };
    if (suite == Suite::algebra || suite == Suite::all) run(verify_algebra);
    if (suite == Suite::setops || suite == Suite::all) run(verify_setops);
    if (suite == Suite::pipeline || suite == Suite::all) run(verify_pipeline);
    return ok ? kExitOk : kExitPropertyFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

int cmd_eval(const EvalArgs& args, std::ostream& out, std::ostream& err) {
  try {
    const SetFile file = load_set_file(args.input);
    EvalOptions options;
    options.mode = args.mode;
    options.side = args.side;
    options.allow_uncertified = args.allow_uncertified;
    options.basis = CountBasis::intro;
    out << render_report(evaluate_bound(file.set, options));
    if (args.strict_counts) {
      options.basis = CountBasis::strict;
      out << render_report(evaluate_bound(file.set, options));
    }
    return kExitOk;
  } catch (const DegenerateRError& e) {
    err << "degenerate R: " << e.what() << '\n';
    return kExitDegenerateR;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const ZeroElementError& e) {
    err << "validation error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

int cmd_search(const SearchArgs& args, std::ostream& out, std::ostream& err) {
  try {
    SearchConfig config = load_search_config(args.config);
    if (args.seed) config.seed = *args.seed;
    const SearchRecord record = run_search(config);

    const std::filesystem::path best_path =
        args.out.value_or(args.config.parent_path() / (args.config.stem().string() + ".best.set"));
    save_set_file(best_path, make_set_file(record.best_set));
    if (args.history) {
      std::ofstream h(*args.history);
      if (!h) throw ValidationError("cannot write history file " + args.history->string());
      h << render_history_table(record);
    }
    out << render_search_record(record);
    out << "best_set_saved " << best_path.string() << '\n';
    return kExitOk;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact 16-on sum-product toolkit"};
  app.require_subcommand(1);

  std::string suite_name = "all";
  std::uint64_t trials = 200;
  std::uint64_t verify_seed = 1;
  auto* verify = app.add_subcommand("verify", "run the exact property suites");
  verify->add_option("suite", suite_name, "algebra, setops, pipeline or all")
      ->check(CLI::IsMember({"algebra", "setops", "pipeline", "all"}));
  verify->add_option("count", trials, "same as --trials");
  verify->add_option("--trials", trials, "random cases per law");
  verify->add_option("--seed", verify_seed, "generator seed");

  EvalArgs eval_args;
  std::string mode_name = "sixteen_on";
  std::string side_name;
  auto* eval = app.add_subcommand("eval", "evaluate the bound pipeline on a set file");
  eval->add_option("input", eval_args.input, "set file")->required();
  eval->add_option("--mode", mode_name, "octonion or sixteen_on")
      ->check(CLI::IsMember({"octonion", "sixteen_on"}));
  eval->add_option("--side", side_name, "left or right quotients for S_x")->check(CLI::IsMember({"left", "right"}));
  eval->add_flag("--allow-uncertified", eval_args.allow_uncertified, "evaluate sets outside one privileged orthant");
  eval->add_flag("--strict-counts", eval_args.strict_counts, "also report with the strict count basis");

  SearchArgs search_args;
  std::uint64_t search_seed = 0;
  std::string search_out;
  std::string history_out;
  auto* search = app.add_subcommand("search", "run a seeded search over niner sets");
  search->add_option("config", search_args.config, "JSON search config")->required();
  auto* seed_opt = search->add_option("--seed", search_seed, "override the config seed");
  search->add_option("--out", search_out, "where to save the best set");
  search->add_option("--history", history_out, "write the history table here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  if (verify->parsed()) {
    Suite suite = Suite::all;
    if (suite_name == "algebra") suite = Suite::algebra;
    else if (suite_name == "setops") suite = Suite::setops;
    else if (suite_name == "pipeline") suite = Suite::pipeline;
    return cmd_verify(suite, trials, verify_seed, out, err);
  }
  if (eval->parsed()) {
    eval_args.mode = mode_name == "octonion" ? Mode::octonion : Mode::sixteen_on;
    if (!side_name.empty()) eval_args.side = side_name == "left" ? Side::left : Side::right;
    return cmd_eval(eval_args, out, err);
  }
  if (search->parsed()) {
    if (seed_opt->count() > 0) search_args.seed = search_seed;
    if (!search_out.empty()) search_args.out = search_out;
    if (!history_out.empty()) search_args.history = history_out;
    return cmd_search(search_args, out, err);
  }
  return kExitUsage;
}

}  // namespace sp16
