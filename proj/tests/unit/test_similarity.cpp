#include <gtest/gtest.h>

#include <random>

#include "bugnav/similarity/gst.hpp"
#include "bugnav/similarity/overlap.hpp"
#include "bugnav/similarity/similarity_vector.hpp"
#include "oracles.hpp"
#include "issue_texts.hpp"

using namespace bugnav;
using namespace bugnav::similarity;
using extract::CodeToken;
using extract::CodeTokenStream;

namespace {

std::set<int> subset(unsigned mask) {
  std::set<int> s;
  for (int i = 0; i < 12; ++i)
    if (mask >> i & 1u) s.insert(i);
  return s;
}

CodeTokenStream stream_of(const std::vector<int>& symbols) {
  static const char* kinds[] = {"kw_int", "semi", "ident", "lparen"};
  CodeTokenStream s;
  for (int v : symbols) s.tokens.push_back({kinds[v], v == 2 ? "x" : ""});
  return s;
}

std::vector<int> letters(const std::string& s) {
  std::vector<int> out;
  for (char c : s) out.push_back(c - 'A');
  return out;
}

std::size_t coverage(const std::vector<Tile>& tiles) {
  std::size_t n = 0;
  for (const auto& t : tiles) n += t.length;
  return n;
}

// Space-separated identifiers; in exact mode each distinct name is its own token.
std::string idents(const std::string& prefix, int from, int to) {
  std::string out;
  for (int i = from; i < to; ++i) out += prefix + std::to_string(i) + " ";
  return out;
}

extract::RepoContext context_with_code(std::map<std::string, std::string> files) {
  extract::RepoContext ctx;
  for (auto& [path, src] : files) ctx.code_files.emplace(path, extract::tokenize_code(src));
  return ctx;
}

corpus::IssueDocument doc(std::string body) {
  corpus::IssueDocument d;
  d.ref = corpus::IssueRef("o", "r", 1);
  d.body = std::move(body);
  return d;
}

}  // namespace

// --- overlap coefficient ---------------------------------------------------------------

TEST(Overlap, Examples) {
  const std::set<std::string> ab{"a", "b"}, bc{"b", "c"}, a{"a"}, none;
  EXPECT_EQ(overlap_coefficient(ab, ab), 1.0);
  EXPECT_EQ(overlap_coefficient(ab, bc), 0.5);
  EXPECT_EQ(overlap_coefficient(a, none), 0.0);
  EXPECT_EQ(overlap_coefficient(none, none), 0.0);
}

TEST(Overlap, ExhaustiveSixElementUniverse) {
  for (unsigned x = 0; x < 64; ++x) {
    for (unsigned y = 0; y < 64; ++y) {
      const auto X = subset(x), Y = subset(y);
      const double v = overlap_coefficient(X, Y);
      ASSERT_EQ(v, oracle::overlap(X, Y)) << x << " " << y;
      ASSERT_EQ(v, overlap_coefficient(Y, X));
      ASSERT_GE(v, 0.0);
      ASSERT_LE(v, 1.0);
      if (X.empty() || Y.empty()) ASSERT_EQ(v, 0.0);
      else if ((x & y) == x || (x & y) == y) ASSERT_EQ(v, 1.0);
    }
  }
}

TEST(Overlap, SampledTwelveElementUniverse) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<unsigned> mask(0, 4095);
  for (int i = 0; i < 20000; ++i) {
    const auto X = subset(mask(rng)), Y = subset(mask(rng));
    ASSERT_EQ(overlap_coefficient(X, Y), oracle::overlap(X, Y));
  }
}

// --- greedy string tiling -----------------------------------------------------------------

TEST(Gst, SharedPrefixExample) {
  const auto a = letters("ABCDEFGHIJX"), b = letters("ABCDEFGHIJY");
  EXPECT_EQ(tiling_similarity<int>(a, b, 9), 20.0 / 22.0);
  EXPECT_EQ(oracle::tiling_similarity(a, b, 9), 20.0 / 22.0);
}

TEST(Gst, IdentityDisjointAndEmpty) {
  const auto a = letters("ABABABABABAB");
  EXPECT_EQ(tiling_similarity<int>(a, a, 9), 1.0);
  EXPECT_EQ(tiling_similarity<int>(letters("AAAAAAAAA"), letters("BBBBBBBBB"), 1), 0.0);
  EXPECT_EQ(tiling_similarity<int>(std::vector<int>{}, std::vector<int>{}, 9), 1.0);
  EXPECT_EQ(tiling_similarity<int>(a, std::vector<int>{}, 9), 0.0);
  EXPECT_THROW(tiling_similarity<int>(a, a, 0), ValidationError);
  EXPECT_THROW(gst_similarity(stream_of({0}), stream_of({0}), {0, true}), ValidationError);
}

TEST(Gst, MatchesBruteForceOracleOnShortStreams) {
  std::mt19937 rng(20200407);
  std::uniform_int_distribution<int> len(0, 12), sym(0, 1), coin(0, 3), pos(0, 11);
  int nontrivial = 0;
  for (int c = 0; c < 3000; ++c) {
    std::vector<int> a(len(rng)), b;
    for (auto& v : a) v = sym(rng);
    if (coin(rng) == 0) {
      b.resize(len(rng));
      for (auto& v : b) v = sym(rng);
    } else {  // a perturbed copy keeps long common runs likely
      b = a;
      for (int k = coin(rng); k > 0 && !b.empty(); --k) b[pos(rng) % b.size()] ^= 1;
      if (coin(rng) == 0 && b.size() < 12) b.insert(b.begin(), sym(rng));
    }
    const double expected = oracle::tiling_similarity(a, b, 9);
    ASSERT_EQ(gst_similarity(stream_of(a), stream_of(b)), expected) << c;
    if (expected > 0 && expected < 1) ++nontrivial;
  }
  EXPECT_GT(nontrivial, 100);
}

TEST(Gst, GreedyEqualsOptimalWhenOneTileFits) {
  // With |a|,|b| <= 12 and min_match_len >= 7, two tiles cannot fit, so the
  // longest single run the greedy pass takes is already optimal.
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> len(0, 12), sym(0, 1);
  for (std::size_t mml = 7; mml <= 12; ++mml) {
    for (int c = 0; c < 300; ++c) {
      std::vector<int> a(len(rng)), b(len(rng));
      for (auto& v : a) v = sym(rng);
      for (auto& v : b) v = sym(rng);
      ASSERT_EQ(tiling_similarity<int>(a, b, mml), oracle::tiling_similarity(a, b, mml));
    }
  }
}

TEST(Gst, GreedyCanMissOptimumForShortMinimumMatch) {
  const auto a = letters("AABABB"), b = letters("ABBBBAB");
  EXPECT_EQ(coverage(greedy_string_tiling<int>(a, b, 2)), 3u);
  EXPECT_EQ(oracle::max_tiling_coverage(a, b, 2), 5u);
}

TEST(Gst, SymmetricAndMonotoneInMinimumMatch) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> len(0, 40), sym(0, 2);
  for (int c = 0; c < 500; ++c) {
    std::vector<int> a(len(rng)), b(len(rng));
    for (auto& v : a) v = sym(rng);
    for (auto& v : b) v = sym(rng);
    double prev = 2.0;
    for (std::size_t mml = 1; mml <= 12; ++mml) {
      const double s = tiling_similarity<int>(a, b, mml);
      ASSERT_EQ(s, tiling_similarity<int>(b, a, mml));
      ASSERT_GE(s, 0.0);
      ASSERT_LE(s, 1.0);
      ASSERT_LE(s, prev) << c << " mml " << mml;
      prev = s;
    }
    if (a.size() >= 9) ASSERT_EQ(tiling_similarity<int>(a, a, 9), 1.0);
  }
}

TEST(Gst, RenamedIdentifiersMatchOnlyWhenAbstracted) {
  const auto x = extract::tokenize_code("for (int i = 0; i < n; i++) { total += values[i]; }");
  const auto y = extract::tokenize_code("for (int k = 0; k < size; k++) { acc += data[k]; }");
  EXPECT_EQ(gst_similarity(x, y), 1.0);
  EXPECT_LT(gst_similarity(x, y, {9, false}), 1.0);
}

// --- code similarity -----------------------------------------------------------------------

TEST(CodeSimilarity, MaximumOverFileGrid) {
  // Distinct identifiers compared in exact mode with min_match_len 1, so each
  // pair's similarity is 2 * shared / 20.
  const auto driver = context_with_code({{"D1.java", idents("d1_", 0, 10)}, {"D2.java", idents("d2_", 0, 10)}});
  corpus::Patch patch{"p", {{"P1.java", idents("d1_", 0, 1) + idents("d2_", 0, 6) + idents("p1_", 0, 3), ""},
                            {"P2.java", idents("d1_", 1, 4) + idents("d2_", 6, 8) + idents("p2_", 0, 5), ""}}};
  const GstOptions exact{1, false};
  const std::vector<std::vector<double>> expected = {{0.1, 0.3}, {0.6, 0.2}};
  for (int d = 0; d < 2; ++d)
    for (int p = 0; p < 2; ++p)
      EXPECT_DOUBLE_EQ(gst_similarity(driver.code_files.at("D" + std::to_string(d + 1) + ".java"),
                                      extract::tokenize_code(patch.modified_files[p].new_content), exact),
                       expected[d][p]);
  EXPECT_EQ(code_similarity(driver, patch, exact), std::optional<double>(0.6));
}

TEST(CodeSimilarity, IdenticalFileAndNotApplicableCases) {
  const std::string src = "class A { int f(int x) { return x + 1; } }";
  const auto driver = context_with_code({{"A.java", src}});
  EXPECT_EQ(code_similarity(driver, {"p", {{"B.java", src, ""}}}), std::optional<double>(1.0));
  EXPECT_FALSE(code_similarity(driver, {"p", {{"res/layout/a.xml", "<Button/>", ""}}}));
  EXPECT_FALSE(code_similarity(driver, {"p", {{"Gone.java", "", ""}}}));
  EXPECT_FALSE(code_similarity(context_with_code({}), {"p", {{"B.java", src, ""}}}));
}

TEST(CodeSimilarity, ImprovingOnePairNeverLowersAggregate) {
  const auto driver = context_with_code({{"D1.java", idents("d", 0, 10)}, {"D2.java", idents("e", 0, 10)}});
  const GstOptions exact{1, false};
  double prev = 0;
  for (int shared = 0; shared <= 10; ++shared) {
    corpus::Patch p{"p", {{"P.java", idents("d", 0, shared) + idents("z", shared, 10), ""},
                          {"Q.java", idents("e", 0, 2) + idents("y", 2, 10), ""}}};
    const double v = *code_similarity(driver, p, exact);
    EXPECT_GE(v, prev);
    prev = v;
  }
  EXPECT_EQ(prev, 1.0);
}

// --- similarity vector ------------------------------------------------------------------------

TEST(SimilarityVector, AndroidPermissionsWithoutPatchOrDeps) {
  extract::RepoContext a, b;
  a.android = b.android = true;
  a.permissions = b.permissions = {"camera", "internet"};
  a.ui_elements = {"button", "save_btn"};
  b.ui_elements = {"button", "textview", "title"};
  const auto da = doc(""), db = doc("");
  const auto v = similarity_vector({da, a}, {db, b}, std::nullopt);
  EXPECT_EQ(v.permission, 1.0);
  EXPECT_EQ(v.ui, 0.5);
  EXPECT_EQ(v.dependency, 0.0);
  EXPECT_EQ(v.code, 0.0);
  EXPECT_EQ(v.applicable, (std::set<Component>{Component::permission, Component::ui}));
}

TEST(SimilarityVector, JavaProjectsShareOneOfTwoDependencies) {
  extract::RepoContext a, b;
  a.dependencies = {{"junit", "junit"}, {"com.typesafe", "config"}};
  b.dependencies = {{"junit", "junit"}, {"org.slf4j", "slf4j-api"}, {"com.google.guava", "guava"}};
  const auto da = doc("fails to load"), db = doc("");
  const auto v = similarity_vector({da, a}, {db, b}, std::nullopt);
  EXPECT_EQ(v.dependency, 0.5);
  EXPECT_EQ(v.applicable, std::set<Component>{Component::dependency});
  EXPECT_EQ(v.permission, 0.0);  // not Android
}

TEST(SimilarityVector, DriverMentionsExtendItsDependencySet) {
  extract::RepoContext a, b;
  a.dependencies = {{"org.apache.uima", "uimaj-core"}};
  b.dependencies = {{"org.tartarus", "snowball"}, {"org.nd4j", "nd4j-native"}};
  const auto without = doc("nothing relevant"), with = doc("the Snowball library breaks");
  const auto db = doc("");
  EXPECT_EQ(similarity_vector({without, a}, {db, b}, std::nullopt).dependency, 0.0);
  EXPECT_EQ(similarity_vector({with, a}, {db, b}, std::nullopt).dependency, 0.5);
}

TEST(SimilarityVector, MauiAndDeeplearning4jShareStemmer) {
  extract::RepoContext maui, dl4j;
  maui.dependencies = {{"org.tartarus", "snowball"}, {"org.apache.uima", "uimaj-core"}};
  dl4j.dependencies = {{"org.tartarus", "snowball"}, {"org.nd4j", "nd4j-native"}, {"com.google.guava", "guava"}};
  corpus::IssueDocument driver = doc(texts::kMauiBody);
  driver.title = texts::kMauiTitle;
  const auto candidate = doc("");
  const auto v = similarity_vector({driver, maui}, {candidate, dl4j}, std::nullopt);
  EXPECT_GT(v.dependency, 0.0);
  EXPECT_EQ(v.dependency, 0.5);
}

TEST(SimilarityVector, PatchEnablesCodeComponent) {
  extract::RepoContext a = context_with_code({{"A.java", "class A { void f() { g(); h(); i(); } }"}}), b;
  const auto da = doc(""), db = doc("");
  const auto v =
      similarity_vector({da, a}, {db, b}, corpus::Patch{"p", {{"B.java", "class B { void x() { y(); z(); w(); } }", ""}}});
  EXPECT_EQ(v.applicable, std::set<Component>{Component::code});
  EXPECT_EQ(v.code, 1.0);
}
