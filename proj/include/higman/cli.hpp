#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace higman::cli {

/// Batch entry point used by the higman binary and by tests.
/// Exit codes: 0 success, 2 usage or parse failure, 3 verification or
/// count failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace higman::cli
