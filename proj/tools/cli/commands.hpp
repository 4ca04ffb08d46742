#pragma once

#include <cstdint>
#include <string>

#include "config.hpp"
#include "output.hpp"

namespace branchlab::cli {

enum ExitCode { kOk = 0, kRuntimeError = 1, kModelProperty = 2, kVerification = 3 };

struct RunContext {
  std::uint64_t seed = 1;
  unsigned threads = 1;
};

struct CommandResult {
  Table table;
  int exitCode = kOk;
};

CommandResult modelCheck(const Config& c, const RunContext& ctx);
CommandResult simulateTrees(const Config& c, const RunContext& ctx);
CommandResult verifyManyToFew(const Config& c, const RunContext& ctx);
CommandResult moments(const Config& c, const RunContext& ctx);
CommandResult convergence(const Config& c, const RunContext& ctx);
CommandResult survival(const Config& c, const RunContext& ctx);
CommandResult cpp(const Config& c, const RunContext& ctx);

}  // namespace branchlab::cli
