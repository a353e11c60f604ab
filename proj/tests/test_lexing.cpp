#include <gtest/gtest.h>

#include <random>
#include <regex>
#include <string>
#include <vector>

#include "srctopics/lexing.hpp"
#include "test_support.hpp"

using namespace srctopics;
using Tokens = std::vector<std::string>;

namespace {

const ProfileRegistry& registry() {
  static const ProfileRegistry r = builtin_profiles();
  return r;
}

Tokens tokens_of(const std::string& lang, const std::string& content) {
  return extract_name_tokens({"f", content}, *registry().find(lang));
}

}  // namespace

TEST(DetectLanguage, Extensions) {
  EXPECT_EQ(detect_language("src/main.c", registry()), "c");
  EXPECT_EQ(detect_language("README.md", registry()), std::nullopt);
  EXPECT_EQ(detect_language("Lib/foo.PY", registry()), "python");
  EXPECT_EQ(detect_language("a/b.tar.gz", registry()), std::nullopt);
  EXPECT_EQ(detect_language("Makefile", registry()), std::nullopt);
  EXPECT_EQ(detect_language("dir.py/file", registry()), std::nullopt);
  EXPECT_EQ(detect_language("x.hpp", registry()), "c++");
  EXPECT_EQ(detect_language("x.go", registry()), "go");
  EXPECT_EQ(detect_language("x.sh", registry()), "shell");
}

TEST(Profiles, BuiltinSetCoversEightLanguages) {
  for (const char* name : {"c", "c++", "python", "ruby", "java", "javascript", "go", "shell"})
    EXPECT_NE(registry().find(name), nullptr) << name;
}

TEST(Profiles, ShippedConfigMatchesBuiltin) {
  auto text = read_file(std::filesystem::path(SRCTOPICS_ROOT) / "data" / "profiles.conf");
  EXPECT_EQ(text, builtin_profiles_text());
}

TEST(Profiles, ExtensionsUniqueAndLowercase) {
  std::set<std::string> seen;
  for (const auto& p : registry().profiles())
    for (const auto& e : p.extensions) {
      EXPECT_TRUE(seen.insert(e).second) << e;
      EXPECT_EQ(e, detail::ascii_lower(e));
    }
}

TEST(Profiles, RejectsInvalidProfiles) {
  EXPECT_THROW(parse_profiles("[a]\nextensions = x\n[b]\nextensions = x\n"), data_error);
  EXPECT_THROW(parse_profiles("[a]\nextensions = X\n"), data_error);
  EXPECT_THROW(parse_profiles("[a]\n"), data_error);
  EXPECT_THROW(parse_profiles("extensions = x\n"), data_error);
  EXPECT_THROW(parse_profiles("[a]\nextensions = x\nblock_comment = /*\n"), data_error);
  EXPECT_THROW(parse_profiles("[a]\nextensions = x\ncolour = red\n"), data_error);
  try {
    parse_profiles("[a]\nextensions = x\nbogus\n", "p.conf");
    FAIL();
  } catch (const data_error& e) {
    EXPECT_NE(std::string(e.what()).find("p.conf:3"), std::string::npos) << e.what();
  }
}

TEST(Profiles, CustomProfileLoads) {
  auto reg = parse_profiles("[lua]\nextensions = lua\nline_comment = --\nblock_comment = --[[ ]]\nstring = \" \" \\\n"
                            "keywords = local function end\n");
  auto toks = extract_name_tokens({"a.lua", "local fooBar = 1 -- note\n--[[ gone\n]] function baz() end"},
                                  *reg.profile_for("a.lua"));
  EXPECT_EQ(toks, (Tokens{"fooBar", "baz"}));
}

TEST(ExtractNameTokens, SpecExamples) {
  EXPECT_EQ(tokens_of("c", "int fooBar = 0; // baz"), Tokens{"fooBar"});
  EXPECT_EQ(tokens_of("python", "def f(xs): return xs"), (Tokens{"f", "xs", "xs"}));
  EXPECT_EQ(tokens_of("c", "char *s = \"fooBar\";"), Tokens{"s"});
}

TEST(ExtractNameTokens, CommentsAndStrings) {
  EXPECT_EQ(tokens_of("c", "#include <stdio.h>\nint main() { /* hidden */ return helper(); }"),
            (Tokens{"main", "helper"}));
  EXPECT_EQ(tokens_of("python", "x = '''doc\nstring''' + \"a\\\"b\" + y  # tail"), (Tokens{"x", "y"}));
  EXPECT_EQ(tokens_of("javascript", "let t = `tpl ${v}`; w"), (Tokens{"t", "w"}));
  EXPECT_EQ(tokens_of("ruby", "=begin\nhidden\n=end\nputs value"), (Tokens{"puts", "value"}));
  EXPECT_EQ(tokens_of("c", "a = 'x'; b = '\\''; c"), (Tokens{"a", "b", "c"}));
}

TEST(ExtractNameTokens, UnterminatedRegionsRunToEnd) {
  EXPECT_EQ(tokens_of("c", "alpha /* never closed beta"), Tokens{"alpha"});
  EXPECT_EQ(tokens_of("python", "gamma = \"open string delta"), Tokens{"gamma"});
  EXPECT_EQ(tokens_of("c", "s = \"ends with escape \\"), Tokens{"s"});
}

TEST(ExtractNameTokens, BlockCommentsDoNotNest) {
  EXPECT_EQ(tokens_of("c", "/* a /* b */ visible */"), Tokens{"visible"});
}

TEST(ExtractNameTokens, NumbersAndIdentifiersWithDigits) {
  EXPECT_EQ(tokens_of("c", "x1 = 0x1F + 12abc + _tmp9;"), (Tokens{"x1", "_tmp9"}));
}

TEST(ExtractNameTokens, NonAsciiBytesAreSeparators) {
  EXPECT_EQ(tokens_of("python", "caf\xc3\xa9 = na\xc3\xafve"), (Tokens{"caf", "na", "ve"}));
}

TEST(ExtractNameTokens, KeywordsAreCaseSensitive) {
  EXPECT_EQ(tokens_of("python", "None none NONE"), (Tokens{"none", "NONE"}));
}

// Random programs assembled from code words, comments and strings separated
// by whitespace: removing the comment and string pieces must not change the
// tokens, and every token is a non-keyword identifier.
TEST(ExtractNameTokens, StrippingRegionsIsInvisible) {
  std::mt19937_64 rng(3);
  const std::vector<std::string> code = {"fooBar", "x", "_y2", "42", "if", "return", "(", ")", "+", "=", "baz_qux"};
  const std::vector<std::string> c_regions = {"/* c1 fooBar */", "// line hidden\n", "\"str hidden\"", "'q'",
                                              "\"esc \\\" hidden\"", "#define HIDDEN 1\n"};
  const std::vector<std::string> py_regions = {"# hidden\n", "'single hidden'", "\"\"\"triple\nhidden\"\"\"",
                                               "\"dq \\\" hidden\""};
  const std::regex ident("[A-Za-z_][A-Za-z0-9_]*");
  for (const auto& [lang, regions] : {std::pair{std::string("c"), c_regions}, std::pair{std::string("python"), py_regions}}) {
    const auto& profile = *registry().find(lang);
    for (int n = 0; n < 500; ++n) {
      std::string full, stripped;
      for (int k = 0, len = 1 + static_cast<int>(rng() % 30); k < len; ++k) {
        if (rng() % 4 == 0) {
          full += "\n" + regions[rng() % regions.size()] + "\n";
          stripped += "\n\n";
        } else {
          const auto& w = code[rng() % code.size()];
          full += w + " ";
          stripped += w + " ";
        }
      }
      auto a = extract_name_tokens({"f", full}, profile);
      ASSERT_EQ(a, extract_name_tokens({"f", stripped}, profile)) << full;
      ASSERT_EQ(a, extract_name_tokens({"f", full}, profile));
      for (const auto& t : a) {
        ASSERT_TRUE(std::regex_match(t, ident)) << t;
        ASSERT_FALSE(profile.keywords.count(t)) << t;
        ASSERT_EQ(t.find("hidden"), std::string::npos);
        ASSERT_NE(t, "HIDDEN");
      }
    }
  }
}
