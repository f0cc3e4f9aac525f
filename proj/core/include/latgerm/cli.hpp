#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace latgerm {

// Command-line entry point, callable in-process. Returns the process exit
// code: 0 on success, 1 on a domain error (reported as a JSON object on
// `out`), 2 on a usage error (reported on `err`). All regular output is
// JSON on `out`; SVG goes to the file named by --out.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace latgerm
