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

#include "harvest/render.h"

#include <gtest/gtest.h>

#include "harvest/html_parser.h"

namespace harvest {
namespace {

RenderedPage render(std::string_view html) {
  return render_text(parse_html(html, "http://x.org/"));
}

TEST(Render, SiblingParagraphsAreSeparateLines) {
  const RenderedPage page = render("<p>a</p><p>b</p>");
  ASSERT_EQ(page.lines.size(), 2u);
  EXPECT_EQ(page.lines[0].text, "a");
  EXPECT_EQ(page.lines[0].origin.str(), "/html/body/p[1]");
  EXPECT_EQ(page.lines[1].origin.str(), "/html/body/p[2]");
  EXPECT_EQ(page.full_text, "a\nb");
}

TEST(Render, InlineTextJoinsAtCommonAncestor) {
  const RenderedPage page = render("<div>x<span>y</span></div>");
  ASSERT_EQ(page.lines.size(), 1u);
  EXPECT_EQ(page.lines[0].text, "xy");
  EXPECT_EQ(page.lines[0].origin.str(), "/html/body/div");
}

TEST(Render, SkipsScriptAndStyle) {
  const RenderedPage page = render("<div><script>var a;</script><style>p{}</style>z</div>");
  ASSERT_EQ(page.lines.size(), 1u);
  EXPECT_EQ(page.lines[0].text, "z");
}

TEST(Render, BreaksAndBlocksSplitLines) {
  const RenderedPage page = render("<div>one<br>two<div>three</div>  four </div>");
  std::vector<std::string> texts;
  for (const auto& l : page.lines) texts.push_back(l.text);
  EXPECT_EQ(texts, (std::vector<std::string>{"one", "two", "three", "four"}));
}

TEST(Render, CollapsesWhitespace) {
  const RenderedPage page = render("<p>  a \n\t b  <b> c </b></p>");
  ASSERT_EQ(page.lines.size(), 1u);
  EXPECT_EQ(page.lines[0].text, "a b c");
}

TEST(Render, SubtreeText) {
  Document doc = parse_html("<div class=p><p>a</p><p>b</p></div><div>c</div>", "http://x.org/");
  EXPECT_EQ(subtree_text(doc, NodePath::parse("/html/body/div[1]")), "a\nb");
  EXPECT_EQ(subtree_text(doc, NodePath::parse("/html/body/div")), "a\nb\nc");
  EXPECT_EQ(subtree_text(doc, NodePath::parse("/html/body/table")), "");
}

TEST(Render, BlockElements) {
  EXPECT_TRUE(is_block_element("div"));
  EXPECT_TRUE(is_block_element("li"));
  EXPECT_FALSE(is_block_element("span"));
  EXPECT_FALSE(is_block_element("a"));
}

}  // namespace
}  // namespace harvest
