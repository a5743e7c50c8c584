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

#include "harvest/html_parser.h"

#include <gtest/gtest.h>

#include "harvest/dom.h"

namespace harvest {
namespace {

const Node* first_element(const Node* node, std::string_view tag) {
  if (node->is(tag)) return node;
  for (const Node* c : node->children) {
    if (const Node* hit = first_element(c, tag)) return hit;
  }
  return nullptr;
}

TEST(HtmlParser, MinimalPage) {
  Document doc = parse_html("<html><body><p>hi</p></body></html>", "http://x.org/t1");
  ASSERT_NE(doc.body(), nullptr);
  EXPECT_EQ(count_matching(doc, NodePath::parse("/html/body/p")), 1u);
  EXPECT_EQ(doc.body()->text_content(), "hi");
}

TEST(HtmlParser, RepairsUnclosedFragment) {
  Document doc = parse_html("<p>unclosed", "http://x.org/");
  const auto ps = resolve(doc, NodePath::parse("/html/body/p"));
  ASSERT_EQ(ps.size(), 1u);
  EXPECT_EQ(ps[0]->text_content(), "unclosed");
}

TEST(HtmlParser, EmptyInputGivesEmptyBody) {
  Document doc = parse_html("", "http://x.org/");
  ASSERT_NE(doc.body(), nullptr);
  EXPECT_TRUE(doc.body()->children.empty());
}

TEST(HtmlParser, ImpliedEndTags) {
  Document doc = parse_html("<ul><li>a<li>b<li>c</ul><p>x<p>y<div>z</div>", "http://x.org/");
  EXPECT_EQ(count_matching(doc, NodePath::parse("/html/body/ul/li")), 3u);
  EXPECT_EQ(count_matching(doc, NodePath::parse("/html/body/p")), 2u);
  // A div closes the open paragraph instead of nesting in it.
  EXPECT_EQ(count_matching(doc, NodePath::parse("/html/body/div")), 1u);
}

TEST(HtmlParser, TableRowsWithoutTbody) {
  Document doc = parse_html("<table><tr><td>1<td>2<tr><td>3</table>", "http://x.org/");
  EXPECT_EQ(count_matching(doc, NodePath::parse("/html/body/table/tbody/tr")), 2u);
  EXPECT_EQ(count_matching(doc, NodePath::parse("/html/body/table/tbody/tr[1]/td")), 2u);
}

TEST(HtmlParser, RawTextAndComments) {
  Document doc = parse_html("<script>if (a < b) { x = '</div>'; }</script><!-- c --><p>t</p>",
                            "http://x.org/");
  const Node* script = first_element(doc.root(), "script");
  ASSERT_NE(script, nullptr);
  EXPECT_EQ(script->text_content(), "if (a < b) { x = '</div>'; }");
  EXPECT_EQ(count_matching(doc, NodePath::parse("/html/body/p")), 1u);
}

TEST(HtmlParser, AttributesAndEntities) {
  Document doc = parse_html("<a HREF='/x?a=1&amp;b=2' class=u>Tom &amp; Jerry&nbsp;&#x263A;</a>",
                            "http://x.org/");
  const Node* a = first_element(doc.root(), "a");
  ASSERT_NE(a, nullptr);
  ASSERT_NE(a->attribute("href"), nullptr);
  EXPECT_EQ(*a->attribute("href"), "/x?a=1&b=2");
  EXPECT_EQ(*a->attribute("class"), "u");
  EXPECT_EQ(a->text_content(), "Tom & Jerry\xC2\xA0\xE2\x98\xBA");
}

TEST(HtmlParser, DecodesEntities) {
  EXPECT_EQ(decode_entities("&lt;b&gt; &quot;q&quot; &#65;&#x42; &bogus;"),
            "<b> \"q\" AB &bogus;");
}

TEST(HtmlParser, SniffsCharset) {
  std::string charset;
  // BOM wins over the meta declaration.
  EXPECT_EQ(decode_html_bytes("\xEF\xBB\xBF<meta charset=latin1>\xC3\xA4", &charset),
            "<meta charset=latin1>\xC3\xA4");
  EXPECT_EQ(charset, "UTF-8");
  EXPECT_EQ(decode_html_bytes("<meta charset=\"iso-8859-1\"><p>\xE4</p>", &charset),
            "<meta charset=\"iso-8859-1\"><p>\xC3\xA4</p>");
  EXPECT_EQ(charset, "WINDOWS-1252");  // the WHATWG label for latin1
  EXPECT_EQ(decode_html_bytes("<p>\xC3\xA4</p>", &charset), "<p>\xC3\xA4</p>");
  EXPECT_EQ(charset, "UTF-8");
}

TEST(HtmlParser, BaseHrefSetsBaseUrl) {
  Document doc = parse_html("<head><base href='/forum/'></head><body></body>",
                            "http://x.org/t/1");
  EXPECT_EQ(doc.base_url().str(), "http://x.org/forum/");
  EXPECT_EQ(doc.url().str(), "http://x.org/t/1");
}

TEST(Dom, PathResolution) {
  Document doc = parse_html("<div><p>a</p><p>b</p><p>c</p><p>d</p><p>e</p></div>",
                            "http://x.org/");
  EXPECT_EQ(count_matching(doc, NodePath::parse("/html/body/div/p")), 5u);
  EXPECT_EQ(count_matching(doc, NodePath::parse("/html/body/div/p[3]")), 1u);
  EXPECT_EQ(count_matching(doc, NodePath::parse("/html/body/div/p[9]")), 0u);
  EXPECT_EQ(count_matching(doc, NodePath::parse("/html/body/span")), 0u);
  const auto ps = resolve(doc, NodePath::parse("/html/body/div/p"));
  EXPECT_EQ(node_path(ps[2]).str(), "/html/body/div/p[3]");
  EXPECT_EQ(relative_path(ps[2]->parent, ps[2]).str(), "p[3]");
}

TEST(Dom, BlacklistChecks) {
  Document doc = parse_html("<footer><div><p>x</p></div></footer><div><form></form></div>",
                            "http://x.org/");
  EXPECT_TRUE(ancestors_blacklisted(doc, NodePath::parse("/html/body/footer/div/p")));
  EXPECT_FALSE(descendants_blacklisted(doc, NodePath::parse("/html/body/footer/div")));
  EXPECT_TRUE(descendants_blacklisted(doc, NodePath::parse("/html/body/div")));
  EXPECT_FALSE(ancestors_blacklisted(doc, NodePath::parse("/html/body/div")));
}

TEST(Dom, ClassContainsIsCaseInsensitiveSubstring) {
  Document doc = parse_html("<span class='postAuthor big'>x</span>", "http://x.org/");
  const Node* span = first_element(doc.root(), "span");
  EXPECT_TRUE(class_contains(span, "author"));
  EXPECT_FALSE(class_contains(span, "user"));
}

}  // namespace
}  // namespace harvest
