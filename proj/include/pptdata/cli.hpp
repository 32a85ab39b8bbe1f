#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pptdata::cli {

// Exit codes, one per failure class.
enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kUsage = 2,  // unknown subcommand or bad flags
  kConfig = 3,
  kIo = 4,
  kFormat = 5,
  kInvalid = 6,
  kNotReached = 7,
};

/// Default output directory when -o is not given.
inline constexpr const char* kOutDirEnv = "PPTDATA_OUT_DIR";

/// Entry point behind the `pptdata` binary. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace pptdata::cli
