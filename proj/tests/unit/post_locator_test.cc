// Copyright 2026 The Harvest Authors.
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

#include "harvest/post_locator.h"

#include <string>

#include <gtest/gtest.h>

#include "harvest/errors.h"
#include "harvest/html_parser.h"
#include "harvest/render.h"
#include "harvest/vsm.h"
#include "support/oracles.h"

namespace harvest {
namespace {

using testing::exhaustive_locator;

std::string post_body(int i) {
  return "Post number " + std::to_string(i) +
         " talks about kernel modules, firmware blobs and the initramfs rebuild that "
         "finally made the wireless card show up after the last upgrade went wrong.";
}

std::string nav_and_posts(int posts) {
  std::string html = "<nav><a href='/'>Home</a><a href='/f'>Forums</a><a href='/s'>Search</a></nav>";
  html += "<div class=thread>";
  for (int i = 1; i <= posts; ++i) html += "<div class=post><p>" + post_body(i) + "</p></div>";
  html += "</div>";
  return html;
}

TEST(PostLocator, FindsRepeatingPostDivs) {
  Document doc = parse_html(nav_and_posts(6), "http://x.org/t");
  const RenderedPage page = render_text(doc);
  const LocatorConfig cfg;
  const CandidatePath best = locate_post_path(page, doc, cfg);
  EXPECT_EQ(best.xpath.str(), "/html/body/div/div");
  EXPECT_EQ(best.element_count, 6u);
  const auto oracle = exhaustive_locator(doc, page, cfg);
  ASSERT_TRUE(oracle);
  EXPECT_EQ(oracle->score, best.score);
}

TEST(PostLocator, LongArticleWithTwoCommentsHasNoPosts) {
  std::string html = "<article><p>" + post_body(0) + post_body(0) + "</p></article>";
  html += "<div class=c><p>Nice.</p></div><div class=c><p>Thanks.</p></div>";
  Document doc = parse_html(html, "http://x.org/t");
  EXPECT_THROW(locate_post_path(render_text(doc), doc, LocatorConfig{}), NoPostsFound);
}

TEST(PostLocator, FormDescendantVetoesCandidate) {
  Document doc = parse_html(
      "<div><form><input></form><p>alpha beta</p></div><div><p>alpha</p></div>", "http://x.org/");
  const RenderedPage page = render_text(doc);
  EXPECT_EQ(score_xpath(page, NodePath::parse("/html/body/div[1]"), doc, LocatorConfig{}), 0.0);
  EXPECT_GT(score_xpath(page, NodePath::parse("/html/body/div[2]"), doc, LocatorConfig{}), 0.0);
}

TEST(PostLocator, WholePageScoresOne) {
  Document doc = parse_html("<div><p>a b</p><p>c</p></div>", "http://x.org/");
  const RenderedPage page = render_text(doc);
  EXPECT_DOUBLE_EQ(score_xpath(page, NodePath::parse("/html/body/div"), doc, LocatorConfig{}),
                   1.0);
}

TEST(PostLocator, FooterAncestorDividesByTen) {
  Document doc = parse_html("<div><p>a b c</p></div><footer><p>a b</p></footer>", "http://x.org/");
  const RenderedPage page = render_text(doc);
  const NodePath path = NodePath::parse("/html/body/footer/p");
  const double sim = cosine_similarity(build_vsm(page.full_text), build_vsm("a b"));
  EXPECT_EQ(score_xpath(page, path, doc, LocatorConfig{}), sim / 10.0);
}

TEST(PostLocator, FormWrappedPostsUseInnerPath) {
  std::string html = "<form action=/reply><div class=thread>";
  for (int i = 1; i <= 5; ++i) html += "<div class=post><p>" + post_body(i) + "</p></div>";
  html += "</div><input type=submit></form>";
  Document doc = parse_html(html, "http://x.org/t");
  const RenderedPage page = render_text(doc);
  const CandidatePath best = locate_post_path(page, doc, LocatorConfig{});
  EXPECT_EQ(best.xpath.str(), "/html/body/form/div/div");
  EXPECT_FALSE(descendants_blacklisted(doc, best.xpath));
  EXPECT_EQ(exhaustive_locator(doc, page, LocatorConfig{})->score, best.score);
}

TEST(PostLocator, CandidatesClimbThreeLevels) {
  Document doc = parse_html("<div><div><div><div><p>x</p></div></div></div></div>", "http://x.org/");
  const auto paths = candidate_paths(render_text(doc), 3);
  std::vector<std::string> got;
  for (const auto& p : paths) got.push_back(p.str());
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, (std::vector<std::string>{"/html/body/div/div", "/html/body/div/div/div",
                                           "/html/body/div/div/div/div",
                                           "/html/body/div/div/div/div/p"}));
}

// Posts wrapped twice beyond the text lines sit more than three levels above
// every line origin, so the locator never proposes the container even though
// an exhaustive search over all element paths finds it.
TEST(PostLocator, DeepWrappersExceedAncestorWindow) {
  std::string html = "<div class=thread>";
  for (int i = 1; i <= 5; ++i) {
    html += "<div class=wrap><table><tr><td><div><p>" + post_body(i) +
            "</p></div></td></tr></table></div>";
  }
  html += "</div>";
  Document doc = parse_html(html, "http://x.org/t");
  const RenderedPage page = render_text(doc);
  EXPECT_THROW(locate_post_path(page, doc, LocatorConfig{}), NoPostsFound);
  const auto oracle = exhaustive_locator(doc, page, LocatorConfig{});
  ASSERT_TRUE(oracle);
  EXPECT_EQ(oracle->xpath.str(), "/html/body/div/div");

  LocatorConfig wide;
  wide.ancestor_levels = 6;
  EXPECT_EQ(locate_post_path(page, doc, wide).xpath.str(), "/html/body/div/div");
}

// Inline elements never start a text line, so a row of four navigation links
// is outside the candidate set. Scoring every element path does admit it,
// with the navigation discount applied.
TEST(PostLocator, InlineRepeatsAreNotCandidates) {
  Document doc = parse_html(
      "<nav><a href='/'>Home</a> <a href='/f'>Forums</a> <a href='/m'>Members</a> "
      "<a href='/l'>Log in</a></nav><div><p>Welcome to the community.</p></div>",
      "http://x.org/");
  const RenderedPage page = render_text(doc);
  EXPECT_THROW(locate_post_path(page, doc, LocatorConfig{}), NoPostsFound);
  const auto oracle = exhaustive_locator(doc, page, LocatorConfig{});
  ASSERT_TRUE(oracle);
  EXPECT_EQ(oracle->xpath.str(), "/html/body/nav/a");
  EXPECT_LT(oracle->score, 0.1);
}

TEST(PostLocator, ConfigValidation) {
  LocatorConfig cfg;
  cfg.min_post_count = 0;
  EXPECT_THROW(cfg.validate(), ConfigError);
  cfg = {};
  cfg.ancestor_discount = 0.5;
  EXPECT_THROW(cfg.validate(), ConfigError);
}

TEST(PostLocator, RankingPrefersScoreThenCount) {
  CandidatePath a{NodePath::parse("/html/body/div"), 0.5, 4};
  CandidatePath b{NodePath::parse("/html/body/ul/li"), 0.5, 6};
  CandidatePath c{NodePath::parse("/html/body/p"), 0.6, 4};
  EXPECT_TRUE(ranks_before(c, a));
  EXPECT_FALSE(ranks_before(a, c));
  EXPECT_NE(ranks_before(a, b), ranks_before(b, a));
}

}  // namespace
}  // namespace harvest
