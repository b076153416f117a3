//
// gammasg - verification toolkit for finite ordered Gamma-semigroups
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
//

#include "gammasg/document.hpp"

#include <algorithm>      // for max, min
#include <cctype>         // for isalnum
#include <optional>       // for optional
#include <sstream>        // for ostringstream
#include <unordered_map>  // for unordered_map

#include "gammasg/errors.hpp"

namespace gammasg {

  ParseError::ParseError(std::size_t        line,
                         std::size_t        column,
                         std::string const& msg)
      : std::runtime_error("line " + std::to_string(line) + ", column "
                           + std::to_string(column) + ": " + msg),
        _line(line),
        _column(column),
        _message(msg) {}

  namespace {
    constexpr std::string_view kHeader = "gamma-structure v1";

    struct Token {
      std::string text;
      std::size_t column;
    };

    struct Line {
      std::size_t        number;
      std::vector<Token> tokens;
    };

    bool is_name_char(unsigned char c) {
      return std::isalnum(c) || c == '_' || c == '\'' || c == '.' || c == '-'
             || c >= 0x80;
    }

    // Splits into non-blank lines of tokens, dropping comments.
    std::vector<Line> tokenize(std::string_view text) {
      std::vector<Line> lines;
      std::size_t       number = 0;
      std::size_t       start  = 0;
      while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
          end = text.size();
        }
        std::string_view raw = text.substr(start, end - start);
        ++number;
        if (auto hash = raw.find('#'); hash != std::string_view::npos) {
          raw = raw.substr(0, hash);
        }
        Line        line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
          unsigned char c = raw[i];
          if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
            continue;
          }
          std::size_t j = i;
          while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t'
                 && raw[j] != '\r') {
            ++j;
          }
          line.tokens.push_back({std::string(raw.substr(i, j - i)), i + 1});
          i = j;
        }
        if (!line.tokens.empty()) {
          lines.push_back(std::move(line));
        }
        if (end == text.size()) {
          break;
        }
        start = end + 1;
      }
      return lines;
    }

    void check_name(Line const& line, Token const& tok) {
      for (std::size_t i = 0; i < tok.text.size(); ++i) {
        if (!is_name_char(static_cast<unsigned char>(tok.text[i]))) {
          throw ParseError(line.number,
                           tok.column + i,
                           "unexpected character '"
                               + std::string(1, tok.text[i]) + "' in name \""
                               + tok.text + "\"");
        }
      }
    }

    class Parser {
     public:
      explicit Parser(std::string_view text) : _lines(tokenize(text)) {}

      StructureDocument run() {
        if (_lines.empty()) {
          throw ParseError(
              1, 1, "empty document, expected \"gamma-structure v1\"");
        }
        auto const& head = _lines[0];
        if (head.tokens.size() != 2
            || head.tokens[0].text + " " + head.tokens[1].text != kHeader) {
          throw ParseError(head.number,
                           head.tokens[0].column,
                           "expected header \"gamma-structure v1\"");
        }
        _pos = 1;
        while (_pos < _lines.size()) {
          auto const& line  = _lines[_pos];
          auto const& first = line.tokens[0].text;
          if (first == "elements:") {
            parse_names(
                line, _doc.elements, _element_index, "element", _seen_elements);
            ++_pos;
          } else if (first == "gammas:") {
            parse_names(line, _doc.ops, _op_index, "gamma", _seen_ops);
            ++_pos;
          } else if (first == "table") {
            parse_table();
          } else if (first == "order:") {
            parse_order();
          } else {
            throw ParseError(line.number,
                             line.tokens[0].column,
                             "expected a section header (elements:, gammas:, "
                             "table <name>:, order:), got \""
                                 + first + "\"");
          }
        }
        if (!_seen_elements) {
          throw ParseError(
              _lines.back().number, 1, "missing \"elements:\" section");
        }
        if (!_seen_ops) {
          throw ParseError(
              _lines.back().number, 1, "missing \"gammas:\" section");
        }
        _doc.tables.resize(_doc.ops.size());
        for (std::size_t g = 0; g < _doc.ops.size(); ++g) {
          if (_doc.tables[g].empty()) {
            throw ParseError(_lines.back().number,
                             1,
                             "dimension mismatch: missing table for gamma \""
                                 + _doc.ops[g] + "\"");
          }
        }
        finish_order();
        return std::move(_doc);
      }

     private:
      void parse_names(Line const&                                   line,
                       std::vector<std::string>&                     out,
                       std::unordered_map<std::string, std::size_t>& index,
                       char const*                                   what,
                       bool&                                         seen) {
        if (seen) {
          throw ParseError(line.number,
                           line.tokens[0].column,
                           std::string("duplicate ") + what + "s section");
        }
        if (!_doc.tables.empty() || _order_seen) {
          throw ParseError(
              line.number,
              line.tokens[0].column,
              std::string(what) + "s must be declared before tables and order");
        }
        seen = true;
        if (line.tokens.size() < 2) {
          throw ParseError(line.number,
                           line.tokens[0].column,
                           std::string("at least one ") + what + " required");
        }
        for (std::size_t i = 1; i < line.tokens.size(); ++i) {
          auto const& tok = line.tokens[i];
          check_name(line, tok);
          if (!index.emplace(tok.text, out.size()).second) {
            throw ParseError(line.number,
                             tok.column,
                             std::string("duplicate ") + what + " name \""
                                 + tok.text + "\"");
          }
          out.push_back(tok.text);
        }
        if (out.size() > kMaxElements) {
          throw ParseError(line.number,
                           line.tokens[0].column,
                           std::string("too many ") + what + "s");
        }
      }

      std::size_t resolve_element(Line const& line, Token const& tok) const {
        check_name(line, tok);
        auto it = _element_index.find(tok.text);
        if (it == _element_index.end()) {
          throw ParseError(
              line.number, tok.column, "unknown element \"" + tok.text + "\"");
        }
        return it->second;
      }

      void require_declarations(Line const& line) const {
        if (!_seen_elements || !_seen_ops) {
          throw ParseError(line.number,
                           line.tokens[0].column,
                           "elements and gammas must be declared first");
        }
      }

      void parse_table() {
        auto const& line = _lines[_pos];
        require_declarations(line);
        if (line.tokens.size() != 2 || line.tokens[1].text.size() < 2
            || line.tokens[1].text.back() != ':') {
          throw ParseError(line.number,
                           line.tokens[0].column,
                           "expected \"table <gamma>:\"");
        }
        Token name = line.tokens[1];
        name.text.pop_back();
        check_name(line, name);
        auto it = _op_index.find(name.text);
        if (it == _op_index.end()) {
          throw ParseError(
              line.number, name.column, "unknown gamma \"" + name.text + "\"");
        }
        if (_doc.tables.empty()) {
          _doc.tables.resize(_doc.ops.size());
        }
        auto& table = _doc.tables[it->second];
        if (!table.empty()) {
          throw ParseError(line.number,
                           name.column,
                           "duplicate table for gamma \"" + name.text + "\"");
        }
        std::size_t const n = _doc.elements.size();
        ++_pos;
        for (std::size_t row = 0; row < n; ++row, ++_pos) {
          if (_pos >= _lines.size() || is_header(_lines[_pos])) {
            auto const& where =
                _pos < _lines.size() ? _lines[_pos] : _lines.back();
            throw ParseError(where.number,
                             1,
                             "dimension mismatch: table \"" + name.text
                                 + "\" has " + std::to_string(row)
                                 + " rows, expected " + std::to_string(n));
          }
          auto const& r = _lines[_pos];
          if (r.tokens.size() != n) {
            throw ParseError(r.number,
                             r.tokens[std::min(n, r.tokens.size() - 1)].column,
                             "dimension mismatch: row has "
                                 + std::to_string(r.tokens.size())
                                 + " entries, expected " + std::to_string(n));
          }
          std::vector<std::size_t> values;
          for (auto const& tok : r.tokens) {
            values.push_back(resolve_element(r, tok));
          }
          table.push_back(std::move(values));
        }
      }

      static bool is_header(Line const& line) {
        auto const& t = line.tokens[0].text;
        return t == "elements:" || t == "gammas:" || t == "table"
               || t == "order:";
      }

      void parse_order() {
        auto const& line = _lines[_pos];
        require_declarations(line);
        if (_order_seen) {
          throw ParseError(
              line.number, line.tokens[0].column, "duplicate order section");
        }
        if (line.tokens.size() != 1) {
          throw ParseError(line.number,
                           line.tokens[1].column,
                           "unexpected token after \"order:\"");
        }
        _order_seen         = true;
        std::size_t const n = _doc.elements.size();
        _leq.assign(n, std::vector<bool>(n, false));
        _pair_line.assign(n, std::vector<std::size_t>(n, 0));
        for (std::size_t i = 0; i < n; ++i) {
          _leq[i][i] = true;
        }
        for (++_pos; _pos < _lines.size() && !is_header(_lines[_pos]); ++_pos) {
          auto const& r = _lines[_pos];
          if (r.tokens.size() != 3 || r.tokens[1].text != "<=") {
            throw ParseError(r.number,
                             r.tokens[0].column,
                             "expected \"<lesser> <= <greater>\"");
          }
          auto const i = resolve_element(r, r.tokens[0]);
          auto const j = resolve_element(r, r.tokens[2]);
          _leq[i][j]   = true;
          if (_pair_line[i][j] == 0) {
            _pair_line[i][j] = r.number;
          }
        }
      }

      void finish_order() {
        std::size_t const n = _doc.elements.size();
        if (!_order_seen) {
          return;
        }
        auto const& names = _doc.elements;
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = i + 1; j < n; ++j) {
            if (_leq[i][j] && _leq[j][i]) {
              throw ParseError(std::max(_pair_line[i][j], _pair_line[j][i]),
                               1,
                               "order is not antisymmetric: " + names[i]
                                   + " <= " + names[j] + " and " + names[j]
                                   + " <= " + names[i]);
            }
          }
        }
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            if (i == j || !_leq[i][j]) {
              continue;
            }
            for (std::size_t l = 0; l < n; ++l) {
              if (l != j && _leq[j][l] && !_leq[i][l]) {
                throw ParseError(std::max(_pair_line[i][j], _pair_line[j][l]),
                                 1,
                                 "order is not transitively closed: " + names[i]
                                     + " <= " + names[j] + " and " + names[j]
                                     + " <= " + names[l] + " but \"" + names[i]
                                     + " <= " + names[l] + "\" is missing");
              }
            }
          }
        }
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            if (i != j && _leq[i][j]) {
              _doc.order_pairs.emplace_back(i, j);
            }
          }
        }
      }

      std::vector<Line>                            _lines;
      std::size_t                                  _pos = 0;
      StructureDocument                            _doc;
      std::unordered_map<std::string, std::size_t> _element_index;
      std::unordered_map<std::string, std::size_t> _op_index;
      bool                                         _seen_elements = false;
      bool                                         _seen_ops      = false;
      bool                                         _order_seen    = false;
      RawOrder                                     _leq;
      std::vector<std::vector<std::size_t>>        _pair_line;
    };

    std::string default_element_name(std::size_t i, std::size_t n) {
      if (n <= 26) {
        return std::string(1, static_cast<char>('a' + i));
      }
      return "e" + std::to_string(i);
    }
  }  // namespace

  RawOrder StructureDocument::order_matrix() const {
    std::size_t const n = elements.size();
    RawOrder          leq(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
      leq[i][i] = true;
    }
    for (auto [i, j] : order_pairs) {
      leq[i][j] = true;
    }
    return leq;
  }

  OrderedGammaStructure StructureDocument::to_structure() const {
    return OrderedGammaStructure(GammaStructure(tables),
                                 OrderRelation(order_matrix()));
  }

  StructureDocument StructureDocument::from_structure(
      OrderedGammaStructure const& M) {
    Names names;
    for (std::size_t i = 0; i < M.size(); ++i) {
      names.elements.push_back(default_element_name(i, M.size()));
    }
    for (std::size_t g = 0; g < M.number_of_ops(); ++g) {
      names.ops.push_back("g" + std::to_string(g));
    }
    return from_structure(M, names);
  }

  StructureDocument StructureDocument::from_structure(
      OrderedGammaStructure const& M, Names const& names) {
    StructureDocument doc;
    doc.elements = names.elements;
    doc.ops      = names.ops;
    doc.tables   = M.structure().tables();
    for (std::size_t i = 0; i < M.size(); ++i) {
      for (std::size_t j = 0; j < M.size(); ++j) {
        if (i != j && M.leq(i, j)) {
          doc.order_pairs.emplace_back(i, j);
        }
      }
    }
    return doc;
  }

  StructureDocument parse(std::string_view text) {
    return Parser(text).run();
  }

  std::string format(StructureDocument const& doc) {
    std::ostringstream out;
    auto               names_line = [&](char const*                     label,
                                        std::vector<std::string> const& names) {
      out << label;
      for (auto const& name : names) {
        out << ' ' << name;
      }
      out << '\n';
    };
    out << kHeader << '\n';
    names_line("elements:", doc.elements);
    names_line("gammas:", doc.ops);
    for (std::size_t g = 0; g < doc.tables.size(); ++g) {
      out << "table " << doc.ops[g] << ":\n";
      for (auto const& row : doc.tables[g]) {
        for (std::size_t y = 0; y < row.size(); ++y) {
          out << (y == 0 ? "" : " ") << doc.elements[row[y]];
        }
        out << '\n';
      }
    }
    out << "order:\n";
    for (auto [i, j] : doc.order_pairs) {
      out << doc.elements[i] << " <= " << doc.elements[j] << '\n';
    }
    return out.str();
  }

}  // namespace gammasg
