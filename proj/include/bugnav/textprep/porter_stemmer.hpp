#pragma once

#include <string>
#include <string_view>

namespace bugnav::textprep {

// Porter (1980) suffix stripper, original-algorithm variant. Input is
// expected lowercase; words of any length are processed.
class PorterStemmer {
 public:
  [[nodiscard]] std::string stem(std::string_view token) const {
    std::string w(token);
    if (w.empty()) return w;
    w = step1a(w);
    w = step1b(w);
    w = step1c(w);
    w = step2(w);
    w = step3(w);
    w = step4(w);
    w = step5a(w);
    w = step5b(w);
    return w;
  }

 private:
  struct Rule {
    std::string_view suffix;
    std::string_view replacement;
    int condition;
  };

  // Rule conditions.
  static constexpr int kAlways = 0;
  static constexpr int kPositiveMeasure = 1;
  static constexpr int kMeasureAbove1 = 2;
  static constexpr int kIonStem = 3;
  static constexpr int kContainsVowel = 4;

  static bool is_consonant(std::string_view w, std::size_t i) {
    switch (w[i]) {
      case 'a': case 'e': case 'i': case 'o': case 'u':
        return false;
      case 'y':
        return i == 0 ? true : !is_consonant(w, i - 1);
      default:
        return true;
    }
  }

  // Number of VC sequences in [C](VC)^m[V].
  static int measure(std::string_view w) {
    int m = 0;
    bool prev_vowel = false;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const bool cons = is_consonant(w, i);
      if (cons && prev_vowel) ++m;
      prev_vowel = !cons;
    }
    return m;
  }

  static bool contains_vowel(std::string_view w) {
    for (std::size_t i = 0; i < w.size(); ++i)
      if (!is_consonant(w, i)) return true;
    return false;
  }

  static bool ends_double_consonant(std::string_view w) {
    const auto n = w.size();
    return n >= 2 && w[n - 1] == w[n - 2] && is_consonant(w, n - 1);
  }

  static bool ends_cvc(std::string_view w) {
    const auto n = w.size();
    return n >= 3 && is_consonant(w, n - 3) && !is_consonant(w, n - 2) &&
           is_consonant(w, n - 1) && w[n - 1] != 'w' && w[n - 1] != 'x' && w[n - 1] != 'y';
  }

  static bool holds(int condition, std::string_view stem) {
    switch (condition) {
      case kPositiveMeasure: return measure(stem) > 0;
      case kMeasureAbove1: return measure(stem) > 1;
      case kIonStem: return measure(stem) > 1 && !stem.empty() && (stem.back() == 's' || stem.back() == 't');
      case kContainsVowel: return contains_vowel(stem);
      default: return true;
    }
  }

  // The first rule whose suffix matches decides, whether or not its condition holds.
  template <std::size_t N>
  static std::string apply(const std::string& w, const Rule (&rules)[N]) {
    for (const auto& r : rules) {
      if (!w.ends_with(r.suffix)) continue;
      std::string stem = w.substr(0, w.size() - r.suffix.size());
      if (!holds(r.condition, stem)) return w;
      return stem.append(r.replacement);
    }
    return w;
  }

  static std::string step1a(const std::string& w) {
    static constexpr Rule rules[] = {
        {"sses", "ss", kAlways}, {"ies", "i", kAlways}, {"ss", "ss", kAlways}, {"s", "", kAlways}};
    return apply(w, rules);
  }

  static std::string step1b(const std::string& w) {
    if (w.ends_with("eed")) {
      std::string stem = w.substr(0, w.size() - 3);
      return measure(stem) > 0 ? stem + "ee" : w;
    }
    std::string stem;
    if (w.ends_with("ed") && contains_vowel(std::string_view(w).substr(0, w.size() - 2))) {
      stem = w.substr(0, w.size() - 2);
    } else if (w.ends_with("ing") && contains_vowel(std::string_view(w).substr(0, w.size() - 3))) {
      stem = w.substr(0, w.size() - 3);
    } else {
      return w;
    }
    if (stem.ends_with("at") || stem.ends_with("bl") || stem.ends_with("iz")) return stem + "e";
    if (ends_double_consonant(stem)) {
      const char last = stem.back();
      if (last != 'l' && last != 's' && last != 'z') stem.pop_back();
      return stem;
    }
    if (measure(stem) == 1 && ends_cvc(stem)) return stem + "e";
    return stem;
  }

  static std::string step1c(const std::string& w) {
    static constexpr Rule rules[] = {{"y", "i", kContainsVowel}};
    return apply(w, rules);
  }

  static std::string step2(const std::string& w) {
    static constexpr Rule rules[] = {
        {"ational", "ate", kPositiveMeasure}, {"tional", "tion", kPositiveMeasure},
        {"enci", "ence", kPositiveMeasure},   {"anci", "ance", kPositiveMeasure},
        {"izer", "ize", kPositiveMeasure},    {"abli", "able", kPositiveMeasure},
        {"alli", "al", kPositiveMeasure},     {"entli", "ent", kPositiveMeasure},
        {"eli", "e", kPositiveMeasure},       {"ousli", "ous", kPositiveMeasure},
        {"ization", "ize", kPositiveMeasure}, {"ation", "ate", kPositiveMeasure},
        {"ator", "ate", kPositiveMeasure},    {"alism", "al", kPositiveMeasure},
        {"iveness", "ive", kPositiveMeasure}, {"fulness", "ful", kPositiveMeasure},
        {"ousness", "ous", kPositiveMeasure}, {"aliti", "al", kPositiveMeasure},
        {"iviti", "ive", kPositiveMeasure},   {"biliti", "ble", kPositiveMeasure},
    };
    return apply(w, rules);
  }

  static std::string step3(const std::string& w) {
    static constexpr Rule rules[] = {
        {"icate", "ic", kPositiveMeasure}, {"ative", "", kPositiveMeasure},
        {"alize", "al", kPositiveMeasure}, {"iciti", "ic", kPositiveMeasure},
        {"ical", "ic", kPositiveMeasure},  {"ful", "", kPositiveMeasure},
        {"ness", "", kPositiveMeasure},
    };
    return apply(w, rules);
  }

  static std::string step4(const std::string& w) {
    static constexpr Rule rules[] = {
        {"al", "", kMeasureAbove1},   {"ance", "", kMeasureAbove1}, {"ence", "", kMeasureAbove1},
        {"er", "", kMeasureAbove1},   {"ic", "", kMeasureAbove1},   {"able", "", kMeasureAbove1},
        {"ible", "", kMeasureAbove1}, {"ant", "", kMeasureAbove1},  {"ement", "", kMeasureAbove1},
        {"ment", "", kMeasureAbove1}, {"ent", "", kMeasureAbove1},  {"ion", "", kIonStem},
        {"ou", "", kMeasureAbove1},   {"ism", "", kMeasureAbove1},  {"ate", "", kMeasureAbove1},
        {"iti", "", kMeasureAbove1},  {"ous", "", kMeasureAbove1},  {"ive", "", kMeasureAbove1},
        {"ize", "", kMeasureAbove1},
    };
    return apply(w, rules);
  }

  static std::string step5a(const std::string& w) {
    if (!w.ends_with('e')) return w;
    std::string stem = w.substr(0, w.size() - 1);
    const int m = measure(stem);
    if (m > 1 || (m == 1 && !ends_cvc(stem))) return stem;
    return w;
  }

  static std::string step5b(const std::string& w) {
    if (w.ends_with("ll") && measure(std::string_view(w).substr(0, w.size() - 1)) > 1)
      return w.substr(0, w.size() - 1);
    return w;
  }
};

inline std::string stem(std::string_view token) {
  static const PorterStemmer stemmer;
  return stemmer.stem(token);
}

}  // namespace bugnav::textprep
