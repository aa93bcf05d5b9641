#pragma once

namespace lzs {

/// Entry point of the lzs-sim command line. Exit codes: 0 success,
/// 1 runtime error, 2 usage/config error.
int cli_main(int argc, const char* const* argv);

}  // namespace lzs
