// Copyright 2026 The gmix Authors.
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

#ifndef GMIX_CSV_H_
#define GMIX_CSV_H_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace gmix {

// Shortest round-trippable form is not required; outputs use a fixed 17
// significant digits so files are byte-stable across runs.
std::string format_real(double x);

// Splits one CSV record on commas. No quoting support; none of the formats
// written here need it.
std::vector<std::string> split_csv(std::string_view line);

double parse_real(std::string_view token);
long long parse_integer(std::string_view token);

// Reads the next non-empty line; returns false at end of stream.
bool next_record(std::istream& in, std::string& line);

}  // namespace gmix

#endif  // GMIX_CSV_H_
