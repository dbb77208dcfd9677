#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "stringnet/errors.hpp"
#include "stringnet/oracle.hpp"
#include "stringnet/shell.hpp"

using namespace sn;

namespace {

struct Options {
  std::string category, job, suite = "all", kind, manifold, cache_dir, out;
  int budget = kDefaultBudget;
  bool no_cache = false;
};

JobFile job_for(const Options& o) {
  if (!o.job.empty()) return load_job(o.job);
  if (!o.category.empty()) return default_job(o.category);
  throw ParseError("one of --job or --category is required", 0, 0);
}

std::optional<std::string> cache_for(const Options& o) {
  if (o.no_cache) return std::nullopt;
  if (!o.cache_dir.empty()) return o.cache_dir;
  return default_cache_dir();
}

int emit(const Report& r, const Options& o) {
  if (o.out.empty()) {
    std::cout << r.str();
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw ParseError("cannot write " + o.out, 0, 0);
    f << r.str();
  }
  return r.status();
}

int run(const std::string& verb, const Options& o) {
  if (verb == "validate") {
    if (o.category.empty()) throw ParseError("--category is required", 0, 0);
    return emit(cmd_validate(open_category(o.category)), o);
  }
  if (verb == "simples") {
    JobFile J = job_for(o);
    if (!J.doc.engine) return emit(cmd_validate(J.doc), o);
    return emit(cmd_simples(J.doc, o.kind, o.manifold, cache_for(o)), o);
  }
  JobFile J = job_for(o);
  if (!J.doc.engine) return emit(cmd_validate(J.doc), o);
  if (verb == "theorem") {
    Report r;
    if (o.suite == "all") {
      for (const auto& s : J.suites) r.merge(cmd_theorem(J, s));
    } else {
      r = cmd_theorem(J, o.suite);
    }
    return emit(r, o);
  }
  if (verb == "oracle") return emit(cmd_oracle(J, o.budget), o);
  return emit(cmd_report(J, o.budget, cache_for(o)), o);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"String-net spaces over fusion categories: validation, simple objects, theorem suites"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* s) {
    s->add_option("--category", o.category, "category data file");
    s->add_option("--job", o.job, "job file");
    s->add_option("--out", o.out, "write the report here instead of stdout");
  };
  auto* validate = app.add_subcommand("validate", "check the fusion data and declared algebras");
  common(validate);
  auto* simples = app.add_subcommand("simples", "simple objects of a cylinder category");
  common(simples);
  simples->add_option("kind", o.kind, "bc or frob")->required();
  simples->add_option("manifold", o.manifold, "circle or interval")->required();
  auto* theorem = app.add_subcommand("theorem", "run a theorem suite");
  common(theorem);
  theorem->add_option("--suite", o.suite, "feq, ucor-iso, vtrans, fold, dprof or all");
  auto* oracle = app.add_subcommand("oracle", "compare brute-force dimensions with the engine");
  common(oracle);
  auto* report = app.add_subcommand("report", "everything a job asks for");
  common(report);
  for (auto* s : {oracle, report}) s->add_option("--budget", o.budget, "vertex budget of the oracle");
  for (auto* s : {simples, report}) {
    s->add_option("--cache-dir", o.cache_dir, "results cache (default: $STRINGNET_CACHE_DIR)");
    s->add_flag("--no-cache", o.no_cache, "ignore the results cache");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitParse;
  }
  std::string verb = app.get_subcommands().front()->get_name();
  try {
    return run(verb, o);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
}
