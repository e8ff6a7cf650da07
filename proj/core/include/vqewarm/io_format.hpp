/* Copyright 2026 The vqewarm Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/
#ifndef VQEWARM_IO_FORMAT_HPP_
#define VQEWARM_IO_FORMAT_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace vqewarm {

// Every floating-point value this project persists goes through
// format_double: 17 significant digits, enough for exact double round trips,
// and independent of any stream or locale state.
std::string format_double(double value);

// Locale-independent strict parsers; throw std::runtime_error on malformed
// input. `what` names the value being parsed for the error message.
double parse_double(std::string_view text, std::string_view what);
long long parse_int(std::string_view text, std::string_view what);
unsigned long long parse_uint(std::string_view text, std::string_view what);

std::vector<std::string> split_csv_line(std::string_view line);
std::string_view trim(std::string_view text);

}  // namespace vqewarm

#endif  // VQEWARM_IO_FORMAT_HPP_
