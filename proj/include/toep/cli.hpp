#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace toep {

// Full command surface of the `tm` binary, callable in-process. `args` is
// argv without the program name. Returns the process exit code: 0 success,
// 1 failed check, 2 malformed request, 3 domain error. Identical argument
// vectors produce byte-identical output on `out`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toep
