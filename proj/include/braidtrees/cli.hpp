#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace braidtrees {

// Runs one command-line invocation against the given streams and returns
// the process exit code: 0 on success (and when every checked identity
// passes), 1 when a checked identity fails, 2 on input errors -- bad
// flags, unparseable expressions or files, undefined operations, and
// expansions exceeding the BRAIDTREES_MAX_TERMS cap.
//
// `args` excludes the program name.  Identical invocations write
// byte-identical output.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace braidtrees
