// Copyright 2026 The primdeg Authors
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

#ifndef PRIMDEG_TNS_IO_HPP
#define PRIMDEG_TNS_IO_HPP

/// \file tns_io.hpp
/// Reader and writer for the TNS text format:
///
///     tns v1
///     order <m> dim <n>
///     <i1> <i2> ... <im> [<value>]
///     ...
///
/// Indices are 1-based in the file. A missing value means 1. `#` starts a
/// comment that runs to end of line; blank lines are ignored; LF and CRLF
/// line endings are accepted.

#include <charconv>
#include <cmath>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <type_traits>
#include <vector>

#include "primdeg/tensor.hpp"

namespace primdeg {

class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string &msg)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename T>
bool parse_number(std::string_view tok, T &out) {
  const char *first = tok.data();
  const char *last = tok.data() + tok.size();
  if constexpr (std::is_floating_point_v<T>) {
    if (first != last && *first == '+') ++first;
  }
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

} // namespace detail

/// Parses a TNS stream. Duplicate index tuples are summed.
/// Throws ParseError naming the offending line.
inline Tensor parse_tensor(std::istream &in) {
  std::string raw;
  std::size_t line_no = 0;
  int stage = 0; // 0: expect magic, 1: expect order/dim, 2: entries
  std::size_t order = 0, dim = 0;
  std::optional<TensorBuilder> builder;
  std::vector<Index> idx;

  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    auto tok = detail::split_ws(line);
    if (tok.empty()) continue;

    if (stage == 0) {
      if (tok.size() != 2 || tok[0] != "tns" || tok[1] != "v1")
        throw ParseError(line_no, "expected header 'tns v1'");
      stage = 1;
      continue;
    }
    if (stage == 1) {
      if (tok.size() != 4 || tok[0] != "order" || tok[2] != "dim" ||
          !detail::parse_number(tok[1], order) ||
          !detail::parse_number(tok[3], dim))
        throw ParseError(line_no, "expected 'order <m> dim <n>'");
      if (order < 2)
        throw ParseError(line_no, "order must be >= 2, got " + std::to_string(order));
      if (dim < 1) throw ParseError(line_no, "dim must be >= 1");
      builder.emplace(order, dim);
      idx.resize(order);
      stage = 2;
      continue;
    }

    if (tok.size() != order && tok.size() != order + 1) {
      throw ParseError(line_no, "expected " + std::to_string(order) +
                                    " indices and an optional value, got " +
                                    std::to_string(tok.size()) + " fields");
    }
    for (std::size_t p = 0; p < order; ++p) {
      std::size_t v = 0;
      if (!detail::parse_number(tok[p], v))
        throw ParseError(line_no, "bad index '" + std::string(tok[p]) + "'");
      if (v < 1 || v > dim) {
        throw ParseError(line_no, "index " + std::to_string(v) +
                                      " out of range [1, " +
                                      std::to_string(dim) + "]");
      }
      idx[p] = static_cast<Index>(v - 1);
    }
    double value = 1.0;
    if (tok.size() == order + 1) {
      if (!detail::parse_number(tok[order], value))
        throw ParseError(line_no, "bad value '" + std::string(tok[order]) + "'");
      if (!std::isfinite(value) || !(value > 0.0))
        throw ParseError(line_no, "value must be positive and finite, got '" +
                                      std::string(tok[order]) + "'");
    }
    builder->add(idx, value);
  }
  if (stage == 0) throw ParseError(line_no, "missing header 'tns v1'");
  if (stage == 1) throw ParseError(line_no, "missing 'order <m> dim <n>' line");
  return std::move(*builder).build();
}

inline Tensor parse_tensor(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_tensor(in);
}

/// Shortest round-trip decimal form of a value ("1" for 1.0).
inline std::string format_value(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

/// Writes `a` in TNS form, entries in lexicographic index order.
inline void write_tensor(std::ostream &out, const Tensor &a) {
  out << "tns v1\n"
      << "order " << a.order() << " dim " << a.dim() << "\n";
  for (std::size_t e = 0; e < a.nnz(); ++e) {
    for (Index i : a.index(e)) out << (i + 1) << ' ';
    out << format_value(a.value(e)) << '\n';
  }
}

inline std::string to_tns(const Tensor &a) {
  std::ostringstream os;
  write_tensor(os, a);
  return os.str();
}

} // namespace primdeg

#endif // PRIMDEG_TNS_IO_HPP
