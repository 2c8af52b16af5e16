/*
 * Copyright 2026 The crossconn Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "crossconn/cayley_io.hpp"

#include <charconv>  // for from_chars
#include <fstream>   // for ifstream
#include <istream>   // for istream
#include <ostream>   // for ostream
#include <sstream>   // for istringstream, ostringstream
#include <vector>    // for vector

#include <fmt/format.h>  // for fmt::format

#include "crossconn/error.hpp"  // for Error

namespace crossconn {

  namespace {

    std::vector<std::string> split(std::string const& line) {
      std::istringstream       in(line);
      std::vector<std::string> words;
      std::string              w;
      while (in >> w) {
        words.push_back(w);
      }
      return words;
    }

    std::size_t parse_index(std::string const& word, std::size_t line_no) {
      std::size_t value = 0;
      auto [ptr, ec]
          = std::from_chars(word.data(), word.data() + word.size(), value);
      if (ec != std::errc() || ptr != word.data() + word.size()) {
        throw Error(ErrorCode::ParseError,
                    fmt::format("line {}: \"{}\" is not a non-negative integer",
                                line_no,
                                word));
      }
      return value;
    }

  }  // namespace

  void write_cayley(std::ostream& out, FiniteSemigroup const& S) {
    out << S.size() << '\n';
    for (element_t a = 0; a < S.size(); ++a) {
      auto row = S.row(a);
      for (std::size_t b = 0; b < row.size(); ++b) {
        out << (b == 0 ? "" : " ") << row[b];
      }
      out << '\n';
    }
    if (S.has_labels()) {
      out << "#labels";
      for (auto const& l : S.labels()) {
        out << ' ' << l;
      }
      out << '\n';
    }
  }

  std::string to_cayley_string(FiniteSemigroup const& S) {
    std::ostringstream out;
    write_cayley(out, S);
    return out.str();
  }

  FiniteSemigroup read_cayley(std::istream& in) {
    std::string              line;
    std::size_t              line_no = 0;
    std::size_t              n       = 0;
    bool                     have_n  = false;
    Table                    table;
    std::vector<std::string> labels;
    bool                     have_labels = false;

    while (std::getline(in, line)) {
      ++line_no;
      auto words = split(line);
      if (words.empty()) {
        continue;
      }
      if (words[0] == "#labels") {
        if (have_labels) {
          throw Error(ErrorCode::ParseError,
                      fmt::format("line {}: duplicate #labels line", line_no));
        }
        have_labels = true;
        labels.assign(words.begin() + 1, words.end());
        continue;
      }
      if (!have_n) {
        if (words.size() != 1) {
          throw Error(ErrorCode::ParseError,
                      fmt::format("line {}: expected the order n", line_no));
        }
        n      = parse_index(words[0], line_no);
        have_n = true;
        if (n == 0) {
          throw Error(ErrorCode::ParseError, "the order must be positive");
        }
        continue;
      }
      if (table.size() == n) {
        throw Error(ErrorCode::ParseError,
                    fmt::format("line {}: more than {} rows", line_no, n));
      }
      if (words.size() != n) {
        throw Error(ErrorCode::ParseError,
                    fmt::format("line {}: expected {} entries, found {}",
                                line_no,
                                n,
                                words.size()));
      }
      auto& row = table.emplace_back();
      for (auto const& w : words) {
        row.push_back(parse_index(w, line_no));
      }
    }
    if (!have_n) {
      throw Error(ErrorCode::ParseError, "empty input");
    }
    if (table.size() != n) {
      throw Error(ErrorCode::ParseError,
                  fmt::format("expected {} rows, found {}", n, table.size()));
    }
    return FiniteSemigroup::from_table(table, std::move(labels));
  }

  FiniteSemigroup read_cayley_string(std::string const& text) {
    std::istringstream in(text);
    return read_cayley(in);
  }

  FiniteSemigroup read_cayley_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error(ErrorCode::ParseError,
                  fmt::format("cannot open \"{}\"", path));
    }
    return read_cayley(in);
  }

}  // namespace crossconn
