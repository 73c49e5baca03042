// Copyright 2026 The Anusaaraka Engine Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ANUSAARAKA_CLI_HPP_
#define ANUSAARAKA_CLI_HPP_

#include <iosfwd>

namespace anusaaraka {

// Exit codes of the `anusaaraka` tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;  // validation or round trip failure
inline constexpr int kExitError = 2;   // usage, I/O, resource or input error

// Subcommands: transduce, invert, validate, trace, roundtrip, gen. `in`, `out`
// and `err` stand in for the standard streams when no --in/--out is given.
int cli_main(int argc, const char* const* argv, std::istream& in, std::ostream& out,
             std::ostream& err);

}  // namespace anusaaraka

#endif  // ANUSAARAKA_CLI_HPP_
