// Copyright 2026 The rdom Authors.
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

#ifndef RDOM_CSV_HPP_
#define RDOM_CSV_HPP_

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace rdom {

// Quotes a field when it holds a comma, quote, or line break.
std::string csv_escape(std::string_view field);

// Writes a mandatory header row followed by data rows of the same width.
class CsvWriter {
 public:
  CsvWriter(std::ostream& out, std::vector<std::string> header);

  void row(const std::vector<std::string>& fields);
  std::size_t rows_written() const { return rows_; }

 private:
  void write(const std::vector<std::string>& fields);

  std::ostream& out_;
  std::size_t width_;
  std::size_t rows_ = 0;
};

}  // namespace rdom

#endif  // RDOM_CSV_HPP_
