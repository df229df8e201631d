/*
   Copyright 2026 The sigmacode Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


#ifndef SIGMACODE_TOOLS_CLI_HPP
#define SIGMACODE_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace sigmacode::cli {

/// Process exit codes.
enum Exit : int {
    kOk = 0,
    kFailure = 1,
    kParse = 2,
    kModel = 3,
    kDomain = 4,
    kSize = 5,
    kDuplicate = 6,
    kBoundViolation = 7,
};

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sigmacode::cli

#endif
