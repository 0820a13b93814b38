/*
   Copyright 2026 The formforge Authors

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

#ifndef FORMFORGE_CLI_HPP
#define FORMFORGE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace formforge {

// Exit codes: 0 proved/true, 1 refuted/false, 2 unknown/evidence, 3 usage,
// 4 malformed JSON, 5 any other error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv);

}  // namespace formforge

#endif
