#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "branchlab/errors.hpp"
#include "commands.hpp"

#ifndef BRANCHLAB_GIT_DESCRIBE
#define BRANCHLAB_GIT_DESCRIBE "unknown"
#endif

using namespace branchlab;
using namespace branchlab::cli;

namespace {

struct Options {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::string out;
  unsigned threads = 0;
  std::string format = "csv";
};

void reportError(const std::string& kind, const std::string& message) {
  nlohmann::ordered_json e;
  e["error"] = kind;
  e["message"] = message;
  std::cerr << e.dump() << '\n';
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

int run(const std::string& name, const std::function<CommandResult(const Config&, const RunContext&)>& command,
        const Options& opt) {
  const Config config = Config::load(opt.config);
  RunContext ctx;
  ctx.seed = opt.seed ? *opt.seed : static_cast<std::uint64_t>(config.integer("seed", 1));
  ctx.threads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  CommandResult r = command(config, ctx);

  // Run metadata first; runtime_ms stays null so that reruns are byte-identical.
  nlohmann::ordered_json meta;
  meta["command"] = name;
  meta["seed"] = ctx.seed;
  meta["git_describe"] = BRANCHLAB_GIT_DESCRIBE;
  meta["config_hash"] = hex64(config.hash());
  meta["runtime_ms"] = nullptr;
  meta["exit_code"] = r.exitCode;
  for (const auto& [k, v] : r.table.meta.items()) meta[k] = v;
  r.table.meta = std::move(meta);

  const Format f = opt.format == "json" ? Format::Json : Format::Csv;
  if (opt.out.empty() || opt.out == "-") {
    write(std::cout, r.table, f);
  } else {
    std::ofstream out(opt.out, std::ios::binary);
    if (!out) throw InvalidInput("cannot write " + opt.out);
    write(out, r.table, f);
  }
  return r.exitCode;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"branchlab: exact and limiting moments of multitype branching processes"};
  app.require_subcommand(1);
  Options opt;

  const std::map<std::string, std::pair<std::string, std::function<CommandResult(const Config&, const RunContext&)>>>
      commands{
          {"model-check", {"Eigenpair, Sigma^2 and criticality of a model", modelCheck}},
          {"simulate", {"Simulate marked genealogies and dump them", simulateTrees}},
          {"verify-m2f", {"Compare brute force, many-to-few and recursive moments", verifyManyToFew}},
          {"moments", {"Planar factorial moment by one or more methods", moments}},
          {"convergence", {"Rescaled and ultrametric moments against their limits", convergence}},
          {"survival", {"Kolmogorov profile n P(Z_n > 0)", survival}},
          {"cpp", {"Coalescent point process sampler against the moment formula", cpp}},
      };
  std::string chosen;
  for (const auto& [name, entry] : commands) {
    CLI::App* sub = app.add_subcommand(name, entry.first);
    sub->add_option("--config", opt.config, "JSON experiment config")->required()->check(CLI::ExistingFile);
    sub->add_option("--seed", opt.seed, "Master seed (overrides the config)");
    sub->add_option("--out", opt.out, "Output file (default stdout)");
    sub->add_option("--threads", opt.threads, "Worker threads (default: all cores)");
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub->callback([&chosen, name = name] { chosen = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kRuntimeError;
  }

  try {
    return run(chosen, commands.at(chosen).second, opt);
  } catch (const ModelPropertyError& e) {
    reportError("model_property", e.what());
    return kModelProperty;
  } catch (const EnumerationCapExceeded& e) {
    reportError("enumeration_cap", e.what());
    return kRuntimeError;
  } catch (const std::invalid_argument& e) {
    reportError("invalid_input", e.what());
    return kRuntimeError;
  } catch (const std::exception& e) {
    reportError("runtime", e.what());
    return kRuntimeError;
  }
}
