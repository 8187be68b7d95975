#pragma once

#include <array>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

namespace bugnav::extract {

struct CodeToken {
  std::string kind;  // "kw_int", "ident", "num", "str", "semi", ...
  std::string text;  // identifier spelling; empty for other kinds
  bool operator==(const CodeToken&) const = default;
};

/// Lexical tokens of one source file. Comments are dropped; string and
/// character literals keep only their kind.
struct CodeTokenStream {
  std::vector<CodeToken> tokens;

  [[nodiscard]] std::size_t size() const noexcept { return tokens.size(); }
  [[nodiscard]] bool empty() const noexcept { return tokens.empty(); }
  bool operator==(const CodeTokenStream&) const = default;
};

namespace detail {

inline const std::unordered_set<std::string_view>& java_keywords() {
  static const std::unordered_set<std::string_view> kw = {
      "abstract", "assert", "boolean", "break", "byte", "case", "catch", "char", "class", "const",
      "continue", "default", "do", "double", "else", "enum", "extends", "final", "finally", "float",
      "for", "goto", "if", "implements", "import", "instanceof", "int", "interface", "long", "native",
      "new", "package", "private", "protected", "public", "return", "short", "static", "strictfp", "super",
      "switch", "synchronized", "this", "throw", "throws", "transient", "try", "void", "volatile", "while",
      "true", "false", "null", "var", "record", "yield"};
  return kw;
}

// Longest first.
inline constexpr std::array<std::pair<std::string_view, std::string_view>, 50> kOperators = {{
    {">>>=", "ushr_assign"}, {"<<=", "shl_assign"}, {">>=", "shr_assign"}, {">>>", "ushr"},
    {"...", "ellipsis"},     {"->", "arrow"},       {"::", "coloncolon"},   {"++", "inc"},
    {"--", "dec"},           {"&&", "andand"},      {"||", "oror"},         {"==", "eqeq"},
    {"!=", "ne"},            {"<=", "le"},          {">=", "ge"},           {"+=", "plus_assign"},
    {"-=", "minus_assign"},  {"*=", "star_assign"}, {"/=", "slash_assign"}, {"&=", "and_assign"},
    {"|=", "or_assign"},     {"^=", "xor_assign"},  {"%=", "mod_assign"},   {"<<", "shl"},
    {">>", "shr"},           {"=", "eq"},           {";", "semi"},          {",", "comma"},
    {".", "dot"},            {"(", "lparen"},       {")", "rparen"},        {"{", "lbrace"},
    {"}", "rbrace"},         {"[", "lbracket"},     {"]", "rbracket"},      {"<", "lt"},
    {">", "gt"},             {"+", "plus"},         {"-", "minus"},         {"*", "star"},
    {"/", "slash"},          {"%", "mod"},          {"!", "not"},           {"~", "tilde"},
    {"?", "question"},       {":", "colon"},        {"&", "amp"},           {"|", "pipe"},
    {"^", "caret"},          {"@", "at"},
}};

inline bool ident_start(char c) {
  const auto u = static_cast<unsigned char>(c);
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || c == '$' || u >= 0x80;
}
inline bool ident_part(char c) { return ident_start(c) || (c >= '0' && c <= '9'); }
inline bool digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace detail

/// Error-tolerant lexer for Java-family source; unknown characters are skipped.
inline CodeTokenStream tokenize_code(std::string_view src) {
  CodeTokenStream out;
  const auto n = src.size();
  std::size_t i = 0;
  auto emit = [&](std::string kind, std::string text = {}) { out.tokens.push_back({std::move(kind), std::move(text)}); };

  while (i < n) {
    const char c = src[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f') {
      ++i;
    } else if (src.substr(i, 2) == "//") {
      while (i < n && src[i] != '\n') ++i;
    } else if (src.substr(i, 2) == "/*") {
      const auto end = src.find("*/", i + 2);
      i = end == std::string_view::npos ? n : end + 2;
    } else if (src.substr(i, 3) == "\"\"\"") {
      const auto end = src.find("\"\"\"", i + 3);
      i = end == std::string_view::npos ? n : end + 3;
      emit("str");
    } else if (c == '"' || c == '\'') {
      ++i;
      while (i < n && src[i] != c && src[i] != '\n') i += (src[i] == '\\') ? 2 : 1;
      if (i < n && src[i] == c) ++i;
      emit(c == '"' ? "str" : "chr");
    } else if (detail::digit(c) || (c == '.' && i + 1 < n && detail::digit(src[i + 1]))) {
      ++i;
      while (i < n) {
        const char d = src[i];
        const char prev = src[i - 1];
        if (detail::ident_part(d) || d == '.' ||
            ((d == '+' || d == '-') && (prev == 'e' || prev == 'E' || prev == 'p' || prev == 'P')))
          ++i;
        else
          break;
      }
      emit("num");
    } else if (detail::ident_start(c)) {
      const auto start = i;
      while (i < n && detail::ident_part(src[i])) ++i;
      const auto word = src.substr(start, i - start);
      if (detail::java_keywords().contains(word))
        emit("kw_" + std::string(word));
      else
        emit("ident", std::string(word));
    } else {
      bool matched = false;
      for (const auto& [op, name] : detail::kOperators) {
        if (src.substr(i, op.size()) == op) {
          emit(std::string(name));
          i += op.size();
          matched = true;
          break;
        }
      }
      if (!matched) ++i;
    }
  }
  return out;
}

}  // namespace bugnav::extract
