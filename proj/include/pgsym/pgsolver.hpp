/*
 * Copyright 2026 The pgsym Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "pgsym/explicit_game.hpp"

namespace pgsym {

/// Syntax or validation error in PGSolver input; line and column are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column);
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Parses the PGSolver text format:
///
///     [parity <maxid>;]
///     <id> <priority> <owner> <succ>(,<succ>)* ["name"];
///     ...
///
/// Records are `;`-terminated and may span or share lines. The header is
/// accepted as a hint and not checked against the ids.
ExplicitGame parse_pgsolver(std::string_view text);

/// Emits one record per line, preceded by a `parity <maxid>;` header.
/// Throws InvalidGame for invalid games (including the empty game).
std::string write_pgsolver(const ExplicitGame& game);

}  // namespace pgsym
