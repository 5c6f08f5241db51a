/*
   Copyright 2026 The xnfactor Authors

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

#ifndef XNFACTOR_CLI_HPP
#define XNFACTOR_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace xnfactor::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUnsupported = 2;
inline constexpr int kExitVerifyFailed = 3;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitBadModulus = 65;
inline constexpr int kExitInternal = 70;

/// Entry point of the xnfactor tool. argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace xnfactor::cli

#endif  // XNFACTOR_CLI_HPP
