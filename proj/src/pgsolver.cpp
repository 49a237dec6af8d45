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

#include "pgsym/pgsolver.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <sstream>
#include <unordered_map>

namespace pgsym {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column) {}

namespace {

struct Position {
    std::size_t line = 1;
    std::size_t column = 1;
};

class Scanner {
public:
    explicit Scanner(std::string_view text) : text_(text) {}

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
    }

    bool at_end() {
        skip_space();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    Position where() {
        skip_space();
        return here_;
    }

    [[noreturn]] void fail(const std::string& message) {
        skip_space();
        throw ParseError(message, here_.line, here_.column);
    }

    void expect(char c, const char* what) {
        if (peek() != c) fail(std::string("expected ") + what);
        advance();
    }

    bool accept_word(std::string_view word) {
        skip_space();
        if (text_.substr(pos_, word.size()) != word) return false;
        const std::size_t after = pos_ + word.size();
        if (after < text_.size() && std::isalnum(static_cast<unsigned char>(text_[after]))) return false;
        for (std::size_t i = 0; i < word.size(); ++i) advance();
        return true;
    }

    std::uint64_t number(const char* what) {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) {
            pos_ = start;
            fail(std::string("expected ") + what);
        }
        std::uint64_t value = 0;
        const auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
        const std::size_t end = pos_;
        pos_ = start;
        if (ec != std::errc{} || ptr != text_.data() + end) fail(std::string(what) + " out of range");
        while (pos_ < end) advance();
        if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
            fail(std::string("unexpected character after ") + what);
        }
        return value;
    }

    std::string quoted() {
        expect('"', "'\"'");
        std::string out;
        for (;;) {
            if (pos_ >= text_.size()) fail("unterminated name");
            const char c = text_[pos_];
            if (c == '"') {
                advance();
                return out;
            }
            if (c == '\\' && pos_ + 1 < text_.size()) {
                advance();
                out.push_back(text_[pos_]);
                advance();
                continue;
            }
            if (c == '\n') fail("unterminated name");
            out.push_back(c);
            advance();
        }
    }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++here_.line;
            here_.column = 1;
        } else {
            ++here_.column;
        }
        ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    Position here_;
};

}  // namespace

ExplicitGame parse_pgsolver(std::string_view text) {
    Scanner in(text);
    ExplicitGame game;
    std::vector<Position> record_pos;

    if (in.accept_word("parity")) {
        in.number("maximal vertex id");
        in.expect(';', "';' after header");
    }
    while (!in.at_end()) {
        const Position at = in.where();
        VertexRecord v;
        v.id = in.number("vertex id");
        const std::uint64_t prio = in.number("priority");
        if (prio > std::numeric_limits<Priority>::max()) in.fail("priority out of range");
        v.priority = static_cast<Priority>(prio);
        const Position owner_at = in.where();
        const std::uint64_t owner = in.number("owner");
        if (owner > 1) throw ParseError("owner must be 0 or 1", owner_at.line, owner_at.column);
        v.owner = owner == 0 ? Player::Even : Player::Odd;
        if (in.peek() == ';' || in.peek() == '"') in.fail("empty successor list");
        v.successors.push_back(in.number("successor id"));
        while (in.peek() == ',') {
            in.expect(',', "','");
            v.successors.push_back(in.number("successor id"));
        }
        if (in.peek() == '"') v.name = in.quoted();
        in.expect(';', "';' at end of record");
        game.vertices.push_back(std::move(v));
        record_pos.push_back(at);
    }
    if (game.vertices.empty()) throw ParseError("game has no vertices", 1, 1);

    std::unordered_map<VertexId, std::size_t> idx;
    for (std::size_t k = 0; k < game.vertices.size(); ++k) {
        if (!idx.emplace(game.vertices[k].id, k).second) {
            throw ParseError("duplicate vertex id " + std::to_string(game.vertices[k].id),
                             record_pos[k].line, record_pos[k].column);
        }
    }
    for (std::size_t k = 0; k < game.vertices.size(); ++k) {
        for (VertexId w : game.vertices[k].successors) {
            if (!idx.contains(w)) {
                throw ParseError("dangling successor id " + std::to_string(w), record_pos[k].line,
                                 record_pos[k].column);
            }
        }
    }
    return game;
}

std::string write_pgsolver(const ExplicitGame& game) {
    validate(game);
    VertexId max_id = 0;
    for (const auto& v : game.vertices) max_id = std::max(max_id, v.id);
    std::ostringstream out;
    out << "parity " << max_id << ";\n";
    for (const auto& v : game.vertices) {
        out << v.id << ' ' << v.priority << ' ' << index_of(v.owner) << ' ';
        for (std::size_t i = 0; i < v.successors.size(); ++i) {
            if (i) out << ',';
            out << v.successors[i];
        }
        if (v.name) {
            out << " \"";
            for (char c : *v.name) {
                if (c == '"' || c == '\\') out << '\\';
                out << c;
            }
            out << '"';
        }
        out << ";\n";
    }
    return out.str();
}

}  // namespace pgsym
