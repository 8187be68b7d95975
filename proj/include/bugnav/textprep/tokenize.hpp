#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "bugnav/textprep/porter_stemmer.hpp"
#include "bugnav/textprep/stopwords.hpp"

namespace bugnav::textprep {

/// Ordered lowercase tokens. No token is empty or contains whitespace.
struct TokenStream {
  std::vector<std::string> tokens;

  [[nodiscard]] bool empty() const noexcept { return tokens.empty(); }
  [[nodiscard]] std::size_t size() const noexcept { return tokens.size(); }
  bool operator==(const TokenStream&) const = default;
};

struct TokenizeOptions {
  // Keep '.' and '_' that sit between two word characters, so
  // "tweets_clean.txt" and "java.lang.Object" stay whole.
  bool keep_compounds = false;
};

inline bool is_word_char(char c) {
  const auto u = static_cast<unsigned char>(c);
  return (u >= '0' && u <= '9') || (u >= 'a' && u <= 'z') || (u >= 'A' && u <= 'Z') || u >= 0x80;
}

inline std::string to_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
  });
  return out;
}

/// Splits text into word runs, preserving the original casing.
inline std::vector<std::string> split_words(std::string_view text, TokenizeOptions opts = {}) {
  std::vector<std::string> words;
  std::string current;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (is_word_char(c)) {
      current.push_back(c);
      continue;
    }
    const bool joiner = opts.keep_compounds && (c == '.' || c == '_') && !current.empty() &&
                        i + 1 < text.size() && is_word_char(text[i + 1]);
    if (joiner) {
      current.push_back(c);
      continue;
    }
    if (!current.empty()) words.push_back(std::move(current));
    current.clear();
  }
  if (!current.empty()) words.push_back(std::move(current));
  return words;
}

inline TokenStream tokenize(std::string_view text, TokenizeOptions opts = {}) {
  TokenStream ts;
  for (auto& w : split_words(text, opts)) ts.tokens.push_back(to_lower(w));
  return ts;
}

inline TokenStream remove_stopwords(const TokenStream& ts) {
  TokenStream out;
  std::copy_if(ts.tokens.begin(), ts.tokens.end(), std::back_inserter(out.tokens),
               [](const std::string& t) { return !is_stopword(t); });
  return out;
}

inline TokenStream stem_all(const TokenStream& ts) {
  TokenStream out;
  out.tokens.reserve(ts.size());
  for (const auto& t : ts.tokens) out.tokens.push_back(stem(t));
  return out;
}

inline std::string join(const std::vector<std::string>& parts, std::string_view sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out.append(sep);
    out.append(parts[i]);
  }
  return out;
}

}  // namespace bugnav::textprep
