#pragma once

namespace rwm {

// Entry point behind the `rwm` binary; exposed so tests can drive the CLI
// in-process. Returns 0 on success, 1 on configuration/usage errors, 2 on
// runtime errors.
int cli_main(int argc, const char* const* argv);

} // namespace rwm
