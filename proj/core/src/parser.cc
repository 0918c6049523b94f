//
// Copyright 2026 The Prov Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "prov/parser.h"

#include <cctype>
#include <string>
#include <vector>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "prov/status.h"

namespace prov {
namespace {

enum class Tok {
  kIdent,
  kNumber,
  kString,
  kLBracket,
  kRBracket,
  kLParen,
  kRParen,
  kComma,
  kSemicolon,
  kOp,
  kEnd,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

std::string Describe(const Token& t) {
  switch (t.kind) {
    case Tok::kEnd: return "end of input";
    case Tok::kString: return absl::StrCat("'", t.text, "'");
    default: return absl::StrCat("\"", t.text, "\"");
  }
}

bool IsReserved(absl::string_view word) {
  return word == "sigma" || word == "pi" || word == "join" || word == "agg" ||
         word == "and";
}

absl::Status SyntaxError(int line, int column, absl::string_view message) {
  return MakeError(absl::StatusCode::kInvalidArgument, error_kind::kSyntaxError,
                   absl::StrCat(line, ":", column, ": ", message));
}

absl::StatusOr<std::vector<Token>> Lex(absl::string_view text) {
  std::vector<Token> tokens;
  int line = 1;
  int column = 1;
  size_t i = 0;
  auto advance = [&](size_t n) {
    for (size_t k = 0; k < n; ++k) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
      ++i;
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const int tl = line;
    const int tc = column;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) ||
              text[j] == '_')) {
        ++j;
      }
      tokens.push_back({Tok::kIdent, std::string(text.substr(i, j - i)), tl, tc});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '-' && i + 1 < text.size() &&
         std::isdigit(static_cast<unsigned char>(text[i + 1])))) {
      size_t j = i + 1;
      while (j < text.size() &&
             (std::isdigit(static_cast<unsigned char>(text[j])) ||
              text[j] == '.')) {
        ++j;
      }
      tokens.push_back(
          {Tok::kNumber, std::string(text.substr(i, j - i)), tl, tc});
      advance(j - i);
      continue;
    }
    if (c == '\'') {
      const size_t close = text.find('\'', i + 1);
      if (close == absl::string_view::npos) {
        return SyntaxError(tl, tc, "unterminated string literal");
      }
      tokens.push_back(
          {Tok::kString, std::string(text.substr(i + 1, close - i - 1)), tl, tc});
      advance(close - i + 1);
      continue;
    }
    if (c == '<' || c == '>' || c == '!' || c == '=') {
      size_t len = 1;
      if (c != '=' && i + 1 < text.size() && text[i + 1] == '=') len = 2;
      if (c == '!' && len == 1) {
        return SyntaxError(tl, tc, "expected '=' after '!'");
      }
      tokens.push_back({Tok::kOp, std::string(text.substr(i, len)), tl, tc});
      advance(len);
      continue;
    }
    Tok kind;
    switch (c) {
      case '[': kind = Tok::kLBracket; break;
      case ']': kind = Tok::kRBracket; break;
      case '(': kind = Tok::kLParen; break;
      case ')': kind = Tok::kRParen; break;
      case ',': kind = Tok::kComma; break;
      case ';': kind = Tok::kSemicolon; break;
      default:
        return SyntaxError(tl, tc,
                           absl::StrCat("unexpected character '",
                                        std::string(1, c), "'"));
    }
    tokens.push_back({kind, std::string(1, c), tl, tc});
    advance(1);
  }
  tokens.push_back({Tok::kEnd, "", line, column});
  return tokens;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  absl::StatusOr<Expr> ParseQuery() {
    PROV_ASSIGN_OR_RETURN(Expr expr, ParseExpr());
    if (Peek().kind != Tok::kEnd) return Unexpected({"end of input"});
    return expr;
  }

 private:
  const Token& Peek(size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }

  absl::Status Unexpected(const std::vector<std::string>& expected) const {
    const Token& t = Peek();
    return SyntaxError(t.line, t.column,
                       absl::StrCat("expected ", absl::StrJoin(expected, " or "),
                                    ", found ", Describe(t)));
  }

  absl::Status Expect(Tok kind, absl::string_view spelling) {
    if (Peek().kind != kind) {
      return Unexpected({absl::StrCat("'", spelling, "'")});
    }
    ++pos_;
    return absl::OkStatus();
  }

  absl::StatusOr<std::string> ExpectIdent() {
    const Token& t = Peek();
    if (t.kind != Tok::kIdent || IsReserved(t.text)) {
      return Unexpected({"identifier"});
    }
    ++pos_;
    return t.text;
  }

  absl::StatusOr<Expr> ParseExpr() {
    const Token& t = Peek();
    if (t.kind != Tok::kIdent) {
      return Unexpected({"relation name", "'sigma'", "'pi'", "'join'", "'agg'"});
    }
    if (t.text == "sigma") return ParseSelect();
    if (t.text == "pi") return ParseProject();
    if (t.text == "join") return ParseJoin();
    if (t.text == "agg") return ParseAggregate();
    PROV_ASSIGN_OR_RETURN(std::string name, ExpectIdent());
    return Scan(std::move(name));
  }

  absl::StatusOr<Expr> ParseParenthesizedInput() {
    PROV_RETURN_IF_ERROR(Expect(Tok::kLParen, "("));
    PROV_ASSIGN_OR_RETURN(Expr input, ParseExpr());
    PROV_RETURN_IF_ERROR(Expect(Tok::kRParen, ")"));
    return input;
  }

  absl::StatusOr<std::vector<std::string>> ParseIdentList() {
    std::vector<std::string> names;
    PROV_ASSIGN_OR_RETURN(std::string first, ExpectIdent());
    names.push_back(std::move(first));
    while (Peek().kind == Tok::kComma) {
      ++pos_;
      PROV_ASSIGN_OR_RETURN(std::string next, ExpectIdent());
      names.push_back(std::move(next));
    }
    return names;
  }

  absl::StatusOr<Comparison> ParseComparison() {
    Comparison cmp;
    PROV_ASSIGN_OR_RETURN(cmp.lhs, ExpectIdent());
    const Token& op = Peek();
    if (op.kind != Tok::kOp) {
      return Unexpected({"'='", "'!='", "'<'", "'>'", "'<='", "'>='"});
    }
    for (CompareOp candidate : {CompareOp::kEq, CompareOp::kNe, CompareOp::kLt,
                                CompareOp::kGt, CompareOp::kLe,
                                CompareOp::kGe}) {
      if (op.text == CompareOpSymbol(candidate)) cmp.op = candidate;
    }
    ++pos_;
    const Token& rhs = Peek();
    switch (rhs.kind) {
      case Tok::kNumber: {
        absl::StatusOr<Decimal> d = Decimal::Parse(rhs.text);
        if (!d.ok()) {
          return SyntaxError(rhs.line, rhs.column,
                             absl::StrCat("malformed number '", rhs.text, "'"));
        }
        cmp.rhs = Value::Num(*d);
        ++pos_;
        break;
      }
      case Tok::kString:
        cmp.rhs = Value::Txt(rhs.text);
        ++pos_;
        break;
      default: {
        if (rhs.kind != Tok::kIdent || IsReserved(rhs.text)) {
          return Unexpected({"attribute", "number", "string"});
        }
        cmp.rhs = AttrRef{rhs.text};
        ++pos_;
      }
    }
    return cmp;
  }

  absl::StatusOr<Expr> ParseSelect() {
    ++pos_;  // sigma
    PROV_RETURN_IF_ERROR(Expect(Tok::kLBracket, "["));
    Predicate pred;
    PROV_ASSIGN_OR_RETURN(Comparison first, ParseComparison());
    pred.conjuncts.push_back(std::move(first));
    while (Peek().kind == Tok::kIdent && Peek().text == "and") {
      ++pos_;
      PROV_ASSIGN_OR_RETURN(Comparison next, ParseComparison());
      pred.conjuncts.push_back(std::move(next));
    }
    if (Peek().kind != Tok::kRBracket) return Unexpected({"'and'", "']'"});
    ++pos_;
    PROV_ASSIGN_OR_RETURN(Expr input, ParseParenthesizedInput());
    return Select(std::move(pred), std::move(input));
  }

  absl::StatusOr<Expr> ParseProject() {
    ++pos_;  // pi
    PROV_RETURN_IF_ERROR(Expect(Tok::kLBracket, "["));
    PROV_ASSIGN_OR_RETURN(std::vector<std::string> attrs, ParseIdentList());
    if (Peek().kind != Tok::kRBracket) return Unexpected({"','", "']'"});
    ++pos_;
    PROV_ASSIGN_OR_RETURN(Expr input, ParseParenthesizedInput());
    return Project(std::move(attrs), std::move(input));
  }

  absl::StatusOr<std::pair<std::string, std::string>> ParseEquality() {
    const bool parenthesized = Peek().kind == Tok::kLParen;
    if (parenthesized) ++pos_;
    PROV_ASSIGN_OR_RETURN(std::string left, ExpectIdent());
    if (Peek().kind != Tok::kOp || Peek().text != "=") {
      return Unexpected({"'='"});
    }
    ++pos_;
    PROV_ASSIGN_OR_RETURN(std::string right, ExpectIdent());
    if (parenthesized) PROV_RETURN_IF_ERROR(Expect(Tok::kRParen, ")"));
    return std::make_pair(std::move(left), std::move(right));
  }

  absl::StatusOr<Expr> ParseJoin() {
    ++pos_;  // join
    PROV_RETURN_IF_ERROR(Expect(Tok::kLBracket, "["));
    std::vector<std::pair<std::string, std::string>> on;
    PROV_ASSIGN_OR_RETURN(auto first, ParseEquality());
    on.push_back(std::move(first));
    while (Peek().kind == Tok::kComma) {
      ++pos_;
      PROV_ASSIGN_OR_RETURN(auto next, ParseEquality());
      on.push_back(std::move(next));
    }
    if (Peek().kind != Tok::kRBracket) return Unexpected({"','", "']'"});
    ++pos_;
    PROV_RETURN_IF_ERROR(Expect(Tok::kLParen, "("));
    PROV_ASSIGN_OR_RETURN(Expr left, ParseExpr());
    PROV_RETURN_IF_ERROR(Expect(Tok::kComma, ","));
    PROV_ASSIGN_OR_RETURN(Expr right, ParseExpr());
    PROV_RETURN_IF_ERROR(Expect(Tok::kRParen, ")"));
    return Join(std::move(on), std::move(left), std::move(right));
  }

  absl::StatusOr<Expr> ParseAggregate() {
    ++pos_;  // agg
    PROV_RETURN_IF_ERROR(Expect(Tok::kLBracket, "["));
    std::vector<std::string> group_by;
    if (Peek().kind != Tok::kSemicolon) {
      PROV_ASSIGN_OR_RETURN(group_by, ParseIdentList());
    }
    if (Peek().kind != Tok::kSemicolon) return Unexpected({"','", "';'"});
    ++pos_;
    const Token& fn_token = Peek();
    std::optional<AggFn> fn;
    if (fn_token.kind == Tok::kIdent) fn = AggFnFromName(fn_token.text);
    if (!fn.has_value()) {
      return Unexpected({"'avg'", "'sum'", "'count'", "'min'", "'max'"});
    }
    ++pos_;
    PROV_RETURN_IF_ERROR(Expect(Tok::kLParen, "("));
    std::optional<std::string> target;
    if (Peek().kind != Tok::kRParen) {
      PROV_ASSIGN_OR_RETURN(target, ExpectIdent());
    }
    PROV_RETURN_IF_ERROR(Expect(Tok::kRParen, ")"));
    PROV_RETURN_IF_ERROR(Expect(Tok::kRBracket, "]"));
    PROV_ASSIGN_OR_RETURN(Expr input, ParseParenthesizedInput());
    return Aggregate(std::move(group_by), *fn, std::move(target),
                     std::move(input));
  }

  std::vector<Token> tokens_;
  size_t pos_ = 0;
};

}  // namespace

absl::StatusOr<Expr> Parse(absl::string_view text) {
  PROV_ASSIGN_OR_RETURN(std::vector<Token> tokens, Lex(text));
  return Parser(std::move(tokens)).ParseQuery();
}

}  // namespace prov
