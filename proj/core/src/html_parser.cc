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

#include <iconv.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <cerrno>
#include <charconv>
#include <unordered_map>
#include <utility>

#include "harvest/utf8.h"

namespace harvest {
namespace {

constexpr std::size_t kMaxDepth = 512;

bool ieq_prefix(std::string_view s, std::size_t pos, std::string_view prefix) {
  if (pos + prefix.size() > s.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(s[pos + i])) != prefix[i]) {
      return false;
    }
  }
  return true;
}

std::string lower_ascii(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

// ---------------------------------------------------------------------------
// Encoding

std::string sniff_meta_charset(std::string_view bytes) {
  const std::string head = lower_ascii(bytes.substr(0, 1024));
  std::size_t pos = 0;
  while ((pos = head.find("<meta", pos)) != std::string::npos) {
    const std::size_t end = head.find('>', pos);
    const std::string_view tag =
        std::string_view(head).substr(pos, end == std::string::npos ? head.npos : end - pos);
    const std::size_t cs = tag.find("charset");
    pos += 5;
    if (cs == std::string_view::npos) continue;
    std::size_t i = cs + 7;
    while (i < tag.size() && (std::isspace(static_cast<unsigned char>(tag[i])))) ++i;
    if (i >= tag.size() || tag[i] != '=') continue;
    ++i;
    while (i < tag.size() && (std::isspace(static_cast<unsigned char>(tag[i])) ||
                              tag[i] == '"' || tag[i] == '\'')) {
      ++i;
    }
    std::string name;
    while (i < tag.size()) {
      const auto c = static_cast<unsigned char>(tag[i]);
      if (!(std::isalnum(c) || c == '-' || c == '_' || c == ':' || c == '.')) break;
      name.push_back(static_cast<char>(c));
      ++i;
    }
    if (!name.empty()) return name;
  }
  return {};
}

std::string canonical_charset(std::string name) {
  name = lower_ascii(name);
  if (name == "utf8" || name == "utf-8" || name == "unicode-1-1-utf-8") return "UTF-8";
  // Per the WHATWG encoding standard these labels all mean windows-1252.
  if (name == "iso-8859-1" || name == "latin1" || name == "l1" ||
      name == "us-ascii" || name == "ascii" || name == "iso8859-1" ||
      name == "cp1252" || name == "windows-1252") {
    return "WINDOWS-1252";
  }
  if (name == "utf-16") return "UTF-16LE";
  return name;
}

std::string convert_with_iconv(std::string_view bytes, const std::string& charset,
                               bool* ok) {
  iconv_t cd = iconv_open("UTF-8", charset.c_str());
  if (cd == reinterpret_cast<iconv_t>(-1)) {
    *ok = false;
    return {};
  }
  *ok = true;
  std::string out;
  out.reserve(bytes.size() * 2);
  std::array<char, 4096> buffer;
  char* in = const_cast<char*>(bytes.data());
  std::size_t in_left = bytes.size();
  while (in_left > 0) {
    char* dst = buffer.data();
    std::size_t dst_left = buffer.size();
    const std::size_t rc = iconv(cd, &in, &in_left, &dst, &dst_left);
    out.append(buffer.data(), buffer.size() - dst_left);
    if (rc == static_cast<std::size_t>(-1)) {
      if (errno == E2BIG) continue;
      // Invalid or truncated input: substitute and skip one byte.
      utf8::append(out, utf8::kReplacement);
      ++in;
      --in_left;
      iconv(cd, nullptr, nullptr, nullptr, nullptr);
    }
  }
  iconv_close(cd);
  return out;
}

// ---------------------------------------------------------------------------
// Entities

const std::unordered_map<std::string_view, char32_t>& entity_table() {
  static const std::unordered_map<std::string_view, char32_t> kTable = {
      {"amp", '&'},       {"lt", '<'},         {"gt", '>'},
      {"quot", '"'},      {"apos", '\''},      {"nbsp", 0xA0},
      {"copy", 0xA9},     {"reg", 0xAE},       {"trade", 0x2122},
      {"hellip", 0x2026}, {"mdash", 0x2014},   {"ndash", 0x2013},
      {"lsquo", 0x2018},  {"rsquo", 0x2019},   {"ldquo", 0x201C},
      {"rdquo", 0x201D},  {"sbquo", 0x201A},   {"bdquo", 0x201E},
      {"laquo", 0xAB},    {"raquo", 0xBB},     {"lsaquo", 0x2039},
      {"rsaquo", 0x203A}, {"bull", 0x2022},    {"middot", 0xB7},
      {"para", 0xB6},     {"sect", 0xA7},      {"deg", 0xB0},
      {"plusmn", 0xB1},   {"times", 0xD7},     {"divide", 0xF7},
      {"euro", 0x20AC},   {"pound", 0xA3},     {"yen", 0xA5},
      {"cent", 0xA2},     {"iexcl", 0xA1},     {"iquest", 0xBF},
      {"shy", 0xAD},      {"ensp", 0x2002},    {"emsp", 0x2003},
      {"thinsp", 0x2009}, {"zwnj", 0x200C},    {"zwj", 0x200D},
      {"auml", 0xE4},     {"ouml", 0xF6},      {"uuml", 0xFC},
      {"Auml", 0xC4},     {"Ouml", 0xD6},      {"Uuml", 0xDC},
      {"szlig", 0xDF},    {"eacute", 0xE9},    {"egrave", 0xE8},
      {"ecirc", 0xEA},    {"euml", 0xEB},      {"Eacute", 0xC9},
      {"aacute", 0xE1},   {"agrave", 0xE0},    {"acirc", 0xE2},
      {"atilde", 0xE3},   {"aring", 0xE5},     {"aelig", 0xE6},
      {"ccedil", 0xE7},   {"Ccedil", 0xC7},    {"iacute", 0xED},
      {"igrave", 0xEC},   {"icirc", 0xEE},     {"iuml", 0xEF},
      {"ntilde", 0xF1},   {"Ntilde", 0xD1},    {"oacute", 0xF3},
      {"ograve", 0xF2},   {"ocirc", 0xF4},     {"otilde", 0xF5},
      {"oslash", 0xF8},   {"Oslash", 0xD8},    {"uacute", 0xFA},
      {"ugrave", 0xF9},   {"ucirc", 0xFB},     {"yacute", 0xFD},
      {"yuml", 0xFF},     {"Agrave", 0xC0},    {"Aacute", 0xC1},
      {"larr", 0x2190},   {"rarr", 0x2192},    {"uarr", 0x2191},
      {"darr", 0x2193},   {"hearts", 0x2665},  {"frac12", 0xBD},
      {"frac14", 0xBC},   {"frac34", 0xBE},    {"sup2", 0xB2},
      {"sup3", 0xB3},     {"micro", 0xB5},     {"ordf", 0xAA},
      {"ordm", 0xBA},
  };
  return kTable;
}

// Windows-1252 remapping of C1 numeric references, as browsers do.
char32_t remap_c1(char32_t cp) {
  static constexpr std::array<char32_t, 32> kC1 = {
      0x20AC, 0x81,   0x201A, 0x0192, 0x201E, 0x2026, 0x2020, 0x2021,
      0x02C6, 0x2030, 0x0160, 0x2039, 0x0152, 0x8D,   0x017D, 0x8F,
      0x90,   0x2018, 0x2019, 0x201C, 0x201D, 0x2022, 0x2013, 0x2014,
      0x02DC, 0x2122, 0x0161, 0x203A, 0x0153, 0x9D,   0x017E, 0x0178};
  if (cp >= 0x80 && cp <= 0x9F) return kC1[cp - 0x80];
  return cp;
}

// ---------------------------------------------------------------------------
// Tokenizer

enum class TokenType { kText, kStartTag, kEndTag, kComment };

struct Token {
  TokenType type = TokenType::kText;
  std::string name;  // tag name, or text / comment data
  std::vector<Attribute> attributes;
  bool self_closing = false;
};

bool is_raw_text(std::string_view tag) {
  return tag == "script" || tag == "style" || tag == "xmp" || tag == "iframe" ||
         tag == "noembed" || tag == "noframes";
}

bool is_rcdata(std::string_view tag) { return tag == "textarea" || tag == "title"; }

class Tokenizer {
 public:
  explicit Tokenizer(std::string_view input) : in_(input) {}

  bool next(Token& token) {
    if (pos_ >= in_.size()) return false;
    token = Token{};
    if (!raw_end_tag_.empty()) return read_raw(token);
    if (in_[pos_] != '<') return read_text(token);
    if (in_.compare(pos_, 4, "<!--") == 0) return read_comment(token);
    if (pos_ + 1 < in_.size()) {
      const char c = in_[pos_ + 1];
      if (c == '!' || c == '?') return read_bogus(token);
      if (c == '/' && pos_ + 2 < in_.size() &&
          std::isalpha(static_cast<unsigned char>(in_[pos_ + 2]))) {
        return read_end_tag(token);
      }
      if (c == '/' && pos_ + 2 < in_.size() && in_[pos_ + 2] == '>') {
        pos_ += 3;  // "</>" is dropped
        return next(token);
      }
      if (std::isalpha(static_cast<unsigned char>(c))) return read_start_tag(token);
    }
    // A lone '<' is text.
    token.type = TokenType::kText;
    token.name = "<";
    ++pos_;
    return true;
  }

 private:
  bool read_text(Token& token) {
    std::size_t end = in_.find('<', pos_);
    if (end == std::string_view::npos) end = in_.size();
    token.type = TokenType::kText;
    token.name = decode_entities(in_.substr(pos_, end - pos_));
    pos_ = end;
    return true;
  }

  bool read_comment(Token& token) {
    std::size_t end = in_.find("-->", pos_ + 4);
    token.type = TokenType::kComment;
    if (end == std::string_view::npos) {
      token.name = std::string(in_.substr(pos_ + 4));
      pos_ = in_.size();
    } else {
      token.name = std::string(in_.substr(pos_ + 4, end - pos_ - 4));
      pos_ = end + 3;
    }
    return true;
  }

  bool read_bogus(Token& token) {
    std::size_t end = in_.find('>', pos_);
    if (end == std::string_view::npos) end = in_.size() - 1;
    token.type = TokenType::kComment;
    token.name = std::string(in_.substr(pos_ + 2, end - pos_ - 2));
    pos_ = end + 1;
    return true;
  }

  std::string read_name() {
    std::string name;
    while (pos_ < in_.size()) {
      const auto c = static_cast<unsigned char>(in_[pos_]);
      if (std::isspace(c) || c == '/' || c == '>') break;
      name.push_back(static_cast<char>(std::tolower(c)));
      ++pos_;
    }
    return name;
  }

  void skip_space() {
    while (pos_ < in_.size() && std::isspace(static_cast<unsigned char>(in_[pos_]))) ++pos_;
  }

  bool read_end_tag(Token& token) {
    pos_ += 2;
    token.type = TokenType::kEndTag;
    token.name = read_name();
    const std::size_t end = in_.find('>', pos_);
    pos_ = end == std::string_view::npos ? in_.size() : end + 1;
    return true;
  }

  bool read_start_tag(Token& token) {
    ++pos_;
    token.type = TokenType::kStartTag;
    token.name = read_name();
    while (pos_ < in_.size()) {
      skip_space();
      if (pos_ >= in_.size()) break;
      if (in_[pos_] == '>') {
        ++pos_;
        break;
      }
      if (in_[pos_] == '/') {
        ++pos_;
        if (pos_ < in_.size() && in_[pos_] == '>') {
          token.self_closing = true;
          ++pos_;
          break;
        }
        continue;
      }
      std::string attr;
      while (pos_ < in_.size()) {
        const auto c = static_cast<unsigned char>(in_[pos_]);
        if (std::isspace(c) || c == '/' || c == '>' || (c == '=' && !attr.empty())) break;
        attr.push_back(static_cast<char>(std::tolower(c)));
        ++pos_;
      }
      skip_space();
      std::string value;
      if (pos_ < in_.size() && in_[pos_] == '=') {
        ++pos_;
        skip_space();
        if (pos_ < in_.size() && (in_[pos_] == '"' || in_[pos_] == '\'')) {
          const char quote = in_[pos_++];
          std::size_t end = in_.find(quote, pos_);
          if (end == std::string_view::npos) end = in_.size();
          value = decode_entities(in_.substr(pos_, end - pos_));
          pos_ = std::min(end + 1, in_.size());
        } else {
          const std::size_t start = pos_;
          while (pos_ < in_.size() && !std::isspace(static_cast<unsigned char>(in_[pos_])) &&
                 in_[pos_] != '>') {
            ++pos_;
          }
          value = decode_entities(in_.substr(start, pos_ - start));
        }
      }
      const bool duplicate =
          std::any_of(token.attributes.begin(), token.attributes.end(),
                      [&](const Attribute& a) { return a.name == attr; });
      if (!attr.empty() && !duplicate) {
        token.attributes.push_back({std::move(attr), std::move(value)});
      }
    }
    if (is_raw_text(token.name) || is_rcdata(token.name)) {
      raw_end_tag_ = "</" + token.name;
      decode_raw_ = is_rcdata(token.name);
    } else if (token.name == "plaintext") {
      raw_end_tag_ = "\x01";
    }
    return true;
  }

  bool read_raw(Token& token) {
    std::size_t end = pos_;
    while (true) {
      end = in_.find('<', end);
      if (end == std::string_view::npos || ieq_prefix(in_, end, raw_end_tag_)) break;
      ++end;
    }
    if (end == std::string_view::npos) end = in_.size();
    token.type = TokenType::kText;
    const std::string_view raw = in_.substr(pos_, end - pos_);
    token.name = decode_raw_ ? decode_entities(raw) : std::string(raw);
    pos_ = end;
    raw_end_tag_.clear();
    if (token.name.empty()) return next(token);
    return true;
  }

  std::string_view in_;
  std::size_t pos_ = 0;
  std::string raw_end_tag_;
  bool decode_raw_ = false;
};

// ---------------------------------------------------------------------------
// Tree construction

bool is_void(std::string_view tag) {
  static const TagSet kVoid = {"area", "base",  "br",   "col",  "embed",
                               "hr",   "img",   "input", "link", "meta",
                               "param", "source", "track", "wbr", "keygen"};
  return kVoid.contains(tag);
}

bool closes_paragraph(std::string_view tag) {
  static const TagSet kTags = {
      "address", "article", "aside",  "blockquote", "center", "details",
      "dialog",  "dir",     "div",    "dl",         "fieldset", "figcaption",
      "figure",  "footer",  "header", "hgroup",     "main",   "menu",
      "nav",     "ol",      "p",      "section",    "summary", "ul",
      "h1",      "h2",      "h3",     "h4",         "h5",     "h6",
      "pre",     "listing", "form",   "table",      "hr",     "xmp",
      "li",      "dd",      "dt",     "plaintext"};
  return kTags.contains(tag);
}

bool is_heading(std::string_view tag) {
  return tag.size() == 2 && tag[0] == 'h' && tag[1] >= '1' && tag[1] <= '6';
}

bool is_head_content(std::string_view tag) {
  return tag == "meta" || tag == "link" || tag == "base" || tag == "title" ||
         tag == "style" || tag == "script" || tag == "noscript" || tag == "template";
}

bool is_scope_barrier(std::string_view tag) {
  return tag == "html" || tag == "table" || tag == "td" || tag == "th" ||
         tag == "caption" || tag == "applet" || tag == "marquee" ||
         tag == "object" || tag == "template";
}

bool is_table_section(std::string_view tag) {
  return tag == "tbody" || tag == "thead" || tag == "tfoot";
}

class TreeBuilder {
 public:
  explicit TreeBuilder(Document& doc) : doc_(doc) {
    html_ = doc_.create(NodeType::kElement, "html");
    Document::append_child(doc_.root(), html_);
    head_ = doc_.create(NodeType::kElement, "head");
    Document::append_child(html_, head_);
    stack_ = {html_, head_};
  }

  void process(Token& token) {
    switch (token.type) {
      case TokenType::kText:
        text(token.name);
        break;
      case TokenType::kComment: {
        Node* c = doc_.create(NodeType::kComment, std::move(token.name));
        Document::append_child(current(), c);
        break;
      }
      case TokenType::kStartTag:
        start_tag(token);
        break;
      case TokenType::kEndTag:
        end_tag(token.name);
        break;
    }
  }

  void finish() { ensure_body(); }

 private:
  Node* current() { return stack_.back(); }

  void ensure_body() {
    if (body_ != nullptr) return;
    body_ = doc_.create(NodeType::kElement, "body");
    Document::append_child(html_, body_);
    stack_ = {html_, body_};
  }

  void text(std::string& data) {
    if (head_open_ != nullptr) {
      Node* t = doc_.create(NodeType::kText, std::move(data));
      Document::append_child(head_open_, t);
      return;
    }
    if (body_ == nullptr) {
      if (utf8::is_blank(data)) return;
      ensure_body();
    }
    Node* parent = current();
    if (!parent->children.empty() && parent->children.back()->type == NodeType::kText) {
      parent->children.back()->data += data;
      return;
    }
    Node* t = doc_.create(NodeType::kText, std::move(data));
    Document::append_child(parent, t);
  }

  void merge_attributes(Node* target, std::vector<Attribute>& attrs) {
    for (auto& a : attrs) {
      if (!target->has_attribute(a.name)) target->attributes.push_back(std::move(a));
    }
  }

  // Index into stack_ of the topmost element named `tag` that is not
  // hidden behind a scope barrier, or -1.
  int find_in_scope(std::string_view tag, bool table_scope = false,
                    std::string_view extra_barrier = {}) const {
    for (int i = static_cast<int>(stack_.size()) - 1; i >= 0; --i) {
      const std::string& name = stack_[i]->name;
      if (name == tag) return i;
      if (table_scope) {
        if (name == "html" || name == "table" || name == "template") return -1;
      } else if (is_scope_barrier(name) || (!extra_barrier.empty() && name == extra_barrier)) {
        return -1;
      }
    }
    return -1;
  }

  void pop_to(int index) {
    if (index <= 0) return;
    stack_.resize(static_cast<std::size_t>(index));
  }

  void close_paragraph() {
    const int p = find_in_scope("p", false, "button");
    if (p >= 0) pop_to(p);
  }

  Node* insert(const std::string& tag, std::vector<Attribute> attrs, bool push) {
    if (stack_.size() >= kMaxDepth) stack_.pop_back();
    Node* el = doc_.create(NodeType::kElement, tag);
    el->attributes = std::move(attrs);
    Document::append_child(current(), el);
    if (push) stack_.push_back(el);
    return el;
  }

  bool in_foreign_content() const {
    return std::any_of(stack_.begin(), stack_.end(),
                       [](const Node* n) { return n->name == "svg" || n->name == "math"; });
  }

  void start_tag(Token& token) {
    const std::string& tag = token.name;
    if (tag.empty()) return;
    head_open_ = nullptr;
    if (tag == "html") {
      merge_attributes(html_, token.attributes);
      return;
    }
    if (body_ == nullptr) {
      if (tag == "head") return;
      if (is_head_content(tag)) {
        insert_into_head(token);
        return;
      }
    }
    if (tag == "body") {
      ensure_body();
      merge_attributes(body_, token.attributes);
      return;
    }
    if (tag == "head") return;
    ensure_body();

    if (tag == "tr" || tag == "td" || tag == "th" || is_table_section(tag) ||
        tag == "caption" || tag == "colgroup" || tag == "col") {
      table_start_tag(token);
      return;
    }
    if (closes_paragraph(tag)) close_paragraph();
    if (is_heading(tag) && is_heading(current()->name)) stack_.pop_back();
    if (tag == "li") {
      close_list_item("li", {"ul", "ol"});
    } else if (tag == "dd" || tag == "dt") {
      close_list_item("dd", {"dl"});
      close_list_item("dt", {"dl"});
    } else if (tag == "option") {
      if (current()->name == "option") stack_.pop_back();
    } else if (tag == "optgroup") {
      if (current()->name == "option") stack_.pop_back();
      if (current()->name == "optgroup") stack_.pop_back();
    } else if (tag == "a") {
      const int a = find_in_scope("a");
      if (a >= 0) pop_to(a);
    } else if (tag == "select") {
      const int s = find_in_scope("select");
      if (s >= 0) pop_to(s);
    } else if (tag == "table") {
      // Nested tables are fine, but a table directly inside a row is not.
      if (current()->name == "tr" || is_table_section(current()->name)) {
        insert("td", {}, true);
      }
    }
    const bool leaf =
        is_void(tag) || (token.self_closing && in_foreign_content()) || tag == "image";
    insert(tag == "image" ? "img" : tag, std::move(token.attributes), !leaf);
  }

  void insert_into_head(Token& token) {
    Node* el = doc_.create(NodeType::kElement, token.name);
    el->attributes = std::move(token.attributes);
    Document::append_child(head_, el);
    if (!is_void(token.name)) head_open_ = el;
  }

  void close_list_item(std::string_view tag, std::initializer_list<std::string_view> lists) {
    for (int i = static_cast<int>(stack_.size()) - 1; i >= 0; --i) {
      const std::string& name = stack_[i]->name;
      if (name == tag) {
        pop_to(i);
        return;
      }
      if (std::find(lists.begin(), lists.end(), name) != lists.end() ||
          is_scope_barrier(name) || name == "body") {
        return;
      }
    }
  }

  void table_start_tag(Token& token) {
    const std::string& tag = token.name;
    const int table = find_in_scope("table", true);
    if (table < 0) return;  // stray table markup outside a table is dropped
    if (tag == "caption" || tag == "colgroup" || is_table_section(tag)) {
      pop_to(table + 1);
      insert(tag, std::move(token.attributes), true);
      return;
    }
    if (tag == "col") {
      pop_to(table + 1);
      insert(tag, std::move(token.attributes), false);
      return;
    }
    // tr, td, th
    int keep = table + 1;
    for (int i = static_cast<int>(stack_.size()) - 1; i > table; --i) {
      const std::string& name = stack_[i]->name;
      if (is_table_section(name) || (tag != "tr" && name == "tr")) {
        keep = i + 1;
        break;
      }
    }
    pop_to(keep);
    if (current()->name == "table") insert("tbody", {}, true);
    if (tag != "tr" && is_table_section(current()->name)) insert("tr", {}, true);
    insert(tag, std::move(token.attributes), true);
  }

  void end_tag(const std::string& tag) {
    if (head_open_ != nullptr) {
      if (tag == head_open_->name) head_open_ = nullptr;
      return;
    }
    if (tag == "html" || tag == "body" || tag == "head") return;
    if (body_ == nullptr) return;
    if (tag == "br") {
      insert("br", {}, false);
      return;
    }
    if (tag == "p") {
      close_paragraph();
      return;
    }
    if (tag == "li" || tag == "dd" || tag == "dt") {
      close_list_item(tag, {"ul", "ol", "dl"});
      return;
    }
    if (is_heading(tag)) {
      for (int i = static_cast<int>(stack_.size()) - 1; i > 1; --i) {
        if (is_heading(stack_[i]->name)) {
          pop_to(i);
          return;
        }
        if (is_scope_barrier(stack_[i]->name)) return;
      }
      return;
    }
    if (tag == "tr" || tag == "td" || tag == "th" || tag == "caption" ||
        tag == "colgroup" || is_table_section(tag)) {
      // Rows, cells and sections close only within their own table.
      const int table = find_in_scope("table", true);
      for (int i = static_cast<int>(stack_.size()) - 1; i > table && i > 1; --i) {
        if (stack_[i]->name == tag) {
          pop_to(i);
          return;
        }
      }
      return;
    }
    const int index = find_in_scope(tag, tag == "table");
    if (index > 1) pop_to(index);
  }

  Document& doc_;
  Node* html_ = nullptr;
  Node* head_ = nullptr;
  Node* body_ = nullptr;
  std::vector<Node*> stack_;
  Node* head_open_ = nullptr;
};

}  // namespace

std::string decode_entities(std::string_view text) {
  if (text.find('&') == std::string_view::npos) return std::string(text);
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '&') {
      out.push_back(text[i++]);
      continue;
    }
    std::size_t j = i + 1;
    if (j < text.size() && text[j] == '#') {
      ++j;
      int base = 10;
      if (j < text.size() && (text[j] == 'x' || text[j] == 'X')) {
        base = 16;
        ++j;
      }
      const std::size_t digits_start = j;
      while (j < text.size() && (base == 16 ? std::isxdigit(static_cast<unsigned char>(text[j]))
                                            : std::isdigit(static_cast<unsigned char>(text[j])))) {
        ++j;
      }
      if (j > digits_start && j - digits_start <= 8) {
        unsigned long value = 0;
        std::from_chars(text.data() + digits_start, text.data() + j, value, base);
        char32_t cp = static_cast<char32_t>(value);
        if (cp == 0 || cp > 0x10FFFF) cp = utf8::kReplacement;
        utf8::append(out, remap_c1(cp));
        if (j < text.size() && text[j] == ';') ++j;
        i = j;
        continue;
      }
      out.push_back(text[i++]);
      continue;
    }
    while (j < text.size() && std::isalnum(static_cast<unsigned char>(text[j])) &&
           j - i <= 32) {
      ++j;
    }
    const std::string_view name = text.substr(i + 1, j - i - 1);
    const auto& table = entity_table();
    const auto it = table.find(name);
    const bool terminated = j < text.size() && text[j] == ';';
    if (it != table.end() &&
        (terminated || name == "amp" || name == "lt" || name == "gt" ||
         name == "nbsp" || name == "quot" || name == "copy")) {
      utf8::append(out, it->second);
      i = terminated ? j + 1 : j;
      continue;
    }
    out.push_back(text[i++]);
  }
  return out;
}

std::string decode_html_bytes(std::string_view bytes, std::string* detected_charset) {
  std::string charset;
  std::string_view payload = bytes;
  if (bytes.starts_with("\xEF\xBB\xBF")) {
    charset = "UTF-8";
    payload.remove_prefix(3);
  } else if (bytes.starts_with("\xFF\xFE")) {
    charset = "UTF-16LE";
    payload.remove_prefix(2);
  } else if (bytes.starts_with("\xFE\xFF")) {
    charset = "UTF-16BE";
    payload.remove_prefix(2);
  } else {
    charset = sniff_meta_charset(bytes);
    charset = charset.empty() ? "UTF-8" : canonical_charset(charset);
  }
  if (detected_charset != nullptr) *detected_charset = charset;
  if (charset == "UTF-8") return utf8::sanitize(payload);
  bool ok = false;
  std::string converted = convert_with_iconv(payload, charset, &ok);
  if (!ok) {
    if (detected_charset != nullptr) *detected_charset = "UTF-8";
    return utf8::sanitize(payload);
  }
  return converted;
}

Document parse_html(std::string_view bytes, std::string_view base_url) {
  Document doc{std::string(base_url), bytes.size()};
  const std::string text = decode_html_bytes(bytes);
  TreeBuilder builder(doc);
  Tokenizer tokenizer(text);
  Token token;
  while (tokenizer.next(token)) builder.process(token);
  builder.finish();
  doc.assign_document_order();
  doc.resolve_base_url();
  return doc;
}

}  // namespace harvest
