#include "grandforest/core.hpp"

#include <gtest/gtest.h>

#include "grandforest/biject.hpp"
#include "test_oracles.hpp"

namespace grandforest {
namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected grandforest::Error";
  return ErrorCode::TooLarge;
}

std::int64_t detail_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.detail();
  }
  ADD_FAILURE() << "expected grandforest::Error";
  return -1;
}

TEST(ParseWord, FigureTwoWord) {
  const auto p = parse_word("UDDUDU");
  EXPECT_EQ(p.length(), 6u);
  EXPECT_EQ(p.semilength(), 3u);
  const StepWord expected = {Step::Up, Step::Down, Step::Down, Step::Up, Step::Down, Step::Up};
  EXPECT_EQ(p.steps(), expected);
}

TEST(ParseWord, EmptyIsValid) { EXPECT_TRUE(parse_word("").empty()); }

TEST(ParseWord, ParenthesisAlphabet) { EXPECT_EQ(parse_word("())("), parse_word("UDDU")); }

TEST(ParseWord, IllegalCharacterReportsPosition) {
  EXPECT_EQ(code_of([] { parse_word("UDX"); }), ErrorCode::IllegalCharacter);
  EXPECT_EQ(detail_of([] { parse_word("UDX"); }), 2);
}

TEST(ParseWord, MixedAlphabetsRejected) {
  EXPECT_EQ(code_of([] { parse_word("U)"); }), ErrorCode::IllegalCharacter);
  EXPECT_EQ(detail_of([] { parse_word("(D"); }), 1);
}

TEST(ParseWord, UnbalancedReportsExcess) {
  EXPECT_EQ(code_of([] { parse_word("UUD"); }), ErrorCode::Unbalanced);
  EXPECT_EQ(detail_of([] { parse_word("UUD"); }), 1);
  EXPECT_EQ(detail_of([] { parse_word("DDDU"); }), -2);
}

TEST(ParseWord, DoesNotRequirePrefixProperty) { EXPECT_NO_THROW(parse_word("DU")); }

TEST(FormatWord, Transliterates) {
  EXPECT_EQ(format_word(parse_word("UD"), Alphabet::Paren), "()");
  EXPECT_EQ(format_word(parse_word("UDDU"), Alphabet::UD), "UDDU");
  EXPECT_EQ(format_word(GrandDyckPath{}, Alphabet::Paren), "");
}

TEST(FormatWord, RoundTripsEveryBalancedWordUpToSix) {
  for (unsigned n = 0; n <= 6; ++n) {
    for (const auto& w : testing::all_balanced_words(n)) {
      const auto p = parse_word(w);
      for (Alphabet a : {Alphabet::UD, Alphabet::Paren}) {
        EXPECT_EQ(parse_word(format_word(p, a)), p) << w;
      }
      EXPECT_EQ(format_word(p), w);
    }
  }
}

TEST(DyckPath, RejectsDip) {
  EXPECT_EQ(code_of([] { DyckPath({Step::Down, Step::Up}); }), ErrorCode::NotDyck);
  EXPECT_EQ(code_of([] { DyckPath({Step::Up}); }), ErrorCode::Unbalanced);
}

TEST(ParseForest, FigureOneSeventhForest) {
  const Forest f = parse_forest("() ()()");
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f.trees()[0], edge_tree());
  EXPECT_EQ(f.trees()[1], cherry_tree());
  EXPECT_EQ(f.edges(), 3u);
}

TEST(ParseForest, Empty) { EXPECT_TRUE(parse_forest("").empty()); }

TEST(ParseForest, Errors) {
  EXPECT_EQ(code_of([] { parse_forest("(()"); }), ErrorCode::Unbalanced);
  EXPECT_EQ(code_of([] { parse_forest("() )("); }), ErrorCode::TokenNotDyck);
  EXPECT_EQ(detail_of([] { parse_forest("() )("); }), 1);
  EXPECT_EQ(code_of([] { parse_forest("()  ()"); }), ErrorCode::EmptyToken);
  EXPECT_EQ(code_of([] { parse_forest(" ()"); }), ErrorCode::EmptyToken);
  EXPECT_EQ(code_of([] { parse_forest("() "); }), ErrorCode::EmptyToken);
  EXPECT_EQ(code_of([] { parse_forest("UD"); }), ErrorCode::IllegalCharacter);
  EXPECT_EQ(detail_of([] { parse_forest("() (x)"); }), 4);
}

TEST(FormatForest, Examples) {
  EXPECT_EQ(format_forest(Forest({cherry_tree()})), "()()");
  EXPECT_EQ(format_forest(Forest({edge_tree(), edge_tree(), edge_tree()})), "() () ()");
  EXPECT_EQ(format_forest(Forest{}), "");
}

TEST(FormatForest, RoundTripAndEdgeAdditivity) {
  for (const char* text : {"", "()", "(()) ()()", "((())()) () (()()())", "()()() ((()))"}) {
    const Forest f = parse_forest(text);
    EXPECT_EQ(format_forest(f), text);
    const std::string s(text);
    EXPECT_EQ(f.edges(), static_cast<std::size_t>(std::count(s.begin(), s.end(), '(')));
  }
}

TEST(Forest, RejectsEdgelessTree) {
  EXPECT_EQ(code_of([] { Forest({edge_tree(), Tree::leaf()}); }), ErrorCode::InvalidForest);
  EXPECT_EQ(detail_of([] { Forest({edge_tree(), Tree::leaf()}); }), 1);
}

TEST(Forest, EmptyIsTheOnlyZeroEdgeForest) {
  EXPECT_EQ(Forest{}.edges(), 0u);
  EXPECT_GT(Forest({edge_tree()}).edges(), 0u);
}

TEST(TreeMeasures, Edges) {
  EXPECT_EQ(tree_edges(Tree::leaf()), 0u);
  EXPECT_EQ(tree_edges(cherry_tree()), 2u);
  EXPECT_EQ(tree_edges(path_tree(3)), 3u);
}

TEST(TreeMeasures, HeightCountsEdges) {
  EXPECT_EQ(tree_height(Tree::leaf()), 0u);
  EXPECT_EQ(tree_height(edge_tree()), 1u);
  EXPECT_EQ(tree_height(cherry_tree()), 1u);
  EXPECT_EQ(tree_height(path_tree(3)), 3u);
}

TEST(PathPeak, Examples) {
  EXPECT_EQ(path_peak(parse_word("UDUD")), (Peak{1, 0}));
  EXPECT_EQ(path_peak(parse_word("UDDUDU")), (Peak{1, -1}));
  EXPECT_EQ(path_peak(parse_word("")), (Peak{0, 0}));
}

TEST(PathPeak, DyckMaxLevelIsTreeHeight) {
  for (unsigned n = 0; n <= 8; ++n) {
    for (const auto& w : testing::all_dyck_words(n)) {
      const auto p = parse_word(w);
      const DyckPath d(p.steps());
      EXPECT_EQ(path_peak(p).min_level, 0);
      EXPECT_EQ(path_peak(p).max_level, static_cast<std::int64_t>(tree_height(dyck_to_tree(d)))) << w;
    }
  }
}

TEST(Levels, Trace) {
  const std::vector<std::int64_t> expected = {0, 1, 0, -1, 0, -1, 0};
  EXPECT_EQ(levels(parse_word("UDDUDU").steps()), expected);
}

}  // namespace
}  // namespace grandforest
