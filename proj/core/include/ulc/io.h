// Copyright 2026 The ulc Authors
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

#ifndef ULC_IO_H_
#define ULC_IO_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "ulc/geometry.h"
#include "ulc/sequence.h"
#include "ulc/shephard.h"

namespace ulc {

// Sequence files hold a JSON array of rationals, each either a string
// "p/q" / "p" or a JSON integer: ["1", "1/2", 3].
Seq ParseSequence(std::string_view json_text);
std::string SequenceToJson(const Seq& seq);

// Polytope files: {"dim": n, "vertices": [["0", "0"], ["1", "0"], ...]}.
Body ParseBody(std::string_view json_text);
std::string BodyToJson(const Body& body);

// {"n", "lambda", "proportionality", "sequence", "P", "Q"} with P and Q in
// the polytope format.
std::string RealizationToJson(const Seq& sequence,
                              const Realization& realization);
Realization ParseRealization(std::string_view json_text);

// {"holds", "kind", "index", "lhs", "rhs"}; absent fields are omitted.
std::string ReportToJson(const ViolationReport& report);

// File helpers. Failures to open or read throw ParseError.
std::string ReadTextFile(const std::filesystem::path& path);
void WriteTextFile(const std::filesystem::path& path, std::string_view text);
Seq LoadSequence(const std::filesystem::path& path);
Body LoadBody(const std::filesystem::path& path);

}  // namespace ulc

#endif  // ULC_IO_H_
