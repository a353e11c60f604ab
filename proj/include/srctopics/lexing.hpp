#pragma once

// Language detection by file suffix and a profile-driven scanner that pulls
// identifier tokens out of source text while skipping comments, string
// literals and reserved words.
//
// Profiles are plain data. The built-in set is itself written in the profile
// config format (see builtin_profiles_text()) so a user file can replace or
// extend it without code changes.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "srctopics/util.hpp"

namespace srctopics {

struct StringDelim {
  std::string open;
  std::string close;
  std::optional<char> escape;
};

struct LanguageProfile {
  std::string name;
  std::vector<std::string> extensions;
  std::vector<std::string> line_comments;
  std::vector<std::pair<std::string, std::string>> block_comments;
  std::vector<StringDelim> string_delims;
  std::unordered_set<std::string> keywords;
};

struct SourceFile {
  std::string path;
  std::string content;
};

namespace detail {

inline bool is_ascii_alpha(unsigned char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
inline bool is_ident_start(unsigned char c) { return is_ascii_alpha(c) || c == '_'; }
inline bool is_ident_char(unsigned char c) { return is_ident_start(c) || (c >= '0' && c <= '9'); }

inline std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out)
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  return out;
}

}  // namespace detail

class ProfileRegistry {
 public:
  // Validates and registers a profile. Throws usage_error on a violated
  // invariant (empty name, duplicate name, empty or non-lowercase or
  // already-claimed extension, empty delimiter).
  void add(LanguageProfile profile) {
    if (profile.name.empty()) throw usage_error("language profile with empty name");
    if (by_name_.count(profile.name)) throw usage_error("duplicate language profile: " + profile.name);
    if (profile.extensions.empty()) throw usage_error("profile " + profile.name + " has no extensions");
    std::set<std::string> own;
    for (const auto& ext : profile.extensions) {
      if (ext.empty() || ext != detail::ascii_lower(ext))
        throw usage_error("profile " + profile.name + ": extension must be non-empty lowercase: '" + ext + "'");
      if (by_extension_.count(ext) || !own.insert(ext).second)
        throw usage_error("extension '" + ext + "' claimed twice (profile " + profile.name + ")");
    }
    for (const auto& [open, close] : profile.block_comments)
      if (open.empty() || close.empty())
        throw usage_error("profile " + profile.name + ": empty block comment delimiter");
    for (const auto& lc : profile.line_comments)
      if (lc.empty()) throw usage_error("profile " + profile.name + ": empty line comment marker");
    for (const auto& sd : profile.string_delims)
      if (sd.open.empty() || sd.close.empty())
        throw usage_error("profile " + profile.name + ": empty string delimiter");

    std::size_t index = profiles_.size();
    for (const auto& ext : profile.extensions) by_extension_[ext] = index;
    by_name_[profile.name] = index;
    profiles_.push_back(std::move(profile));
  }

  const LanguageProfile* find(std::string_view name) const {
    auto it = by_name_.find(std::string(name));
    return it == by_name_.end() ? nullptr : &profiles_[it->second];
  }

  // Profile for the lowercase suffix after the last '.' of the file name.
  const LanguageProfile* profile_for(std::string_view path) const {
    auto slash = path.find_last_of("/\\");
    std::string_view file = slash == std::string_view::npos ? path : path.substr(slash + 1);
    auto dot = file.rfind('.');
    if (dot == std::string_view::npos || dot + 1 >= file.size()) return nullptr;
    auto it = by_extension_.find(detail::ascii_lower(file.substr(dot + 1)));
    return it == by_extension_.end() ? nullptr : &profiles_[it->second];
  }

  const std::vector<LanguageProfile>& profiles() const { return profiles_; }

 private:
  std::vector<LanguageProfile> profiles_;
  std::map<std::string, std::size_t> by_name_;
  std::map<std::string, std::size_t> by_extension_;
};

inline std::optional<std::string> detect_language(std::string_view path, const ProfileRegistry& registry) {
  if (const auto* p = registry.profile_for(path)) return p->name;
  return std::nullopt;
}

// Profile config format, one directive per line:
//
//   # comment
//   [python]
//   extensions = py pyw
//   line_comment = #
//   block_comment = <open> <close>
//   string = <open> <close> [<escape-char>]
//   keywords = def class ...
//
// Values are whitespace separated. Every key may repeat; repeats append.
inline ProfileRegistry parse_profiles(std::string_view text, std::string_view source = "<profiles>") {
  ProfileRegistry registry;
  std::optional<LanguageProfile> current;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& msg) {
    throw data_error(std::string(source) + ":" + std::to_string(line_no) + ": " + msg);
  };
  auto flush = [&] {
    if (!current) return;
    try {
      registry.add(std::move(*current));
    } catch (const usage_error& e) {
      fail(e.what());
    }
    current.reset();
  };

  for (auto raw : split_char(text, '\n')) {
    ++line_no;
    auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (line.front() == '[') {
      if (line.back() != ']' || line.size() < 3) fail("malformed section header");
      flush();
      current.emplace();
      current->name = std::string(trim(line.substr(1, line.size() - 2)));
      continue;
    }
    if (!current) fail("directive outside of a [language] section");
    auto eq = line.find('=');
    if (eq == std::string_view::npos) fail("expected key = value");
    auto key = trim(line.substr(0, eq));
    auto values = split_ws(line.substr(eq + 1));
    if (key == "extensions") {
      for (auto v : values) current->extensions.emplace_back(v);
    } else if (key == "line_comment") {
      for (auto v : values) current->line_comments.emplace_back(v);
    } else if (key == "block_comment") {
      if (values.size() != 2) fail("block_comment needs <open> <close>");
      current->block_comments.emplace_back(std::string(values[0]), std::string(values[1]));
    } else if (key == "string") {
      if (values.size() != 2 && values.size() != 3) fail("string needs <open> <close> [<escape>]");
      StringDelim d{std::string(values[0]), std::string(values[1]), std::nullopt};
      if (values.size() == 3) {
        if (values[2].size() != 1) fail("string escape must be a single character");
        d.escape = values[2][0];
      }
      current->string_delims.push_back(std::move(d));
    } else if (key == "keywords") {
      for (auto v : values) current->keywords.emplace(v);
    } else {
      fail("unknown key '" + std::string(key) + "'");
    }
  }
  flush();
  return registry;
}

inline std::string_view builtin_profiles_text() {
  return R"conf(# Built-in language profiles.
# The '#' marker in C and C++ drops preprocessor lines.

[c]
extensions = c h
line_comment = // #
block_comment = /* */
string = " " \
string = ' ' \
keywords = auto break case char const continue default do double else enum extern
keywords = float for goto if inline int long register restrict return short signed
keywords = sizeof static struct switch typedef union unsigned void volatile while
keywords = _Alignas _Alignof _Atomic _Bool _Complex _Generic _Imaginary _Noreturn
keywords = _Static_assert _Thread_local

[c++]
extensions = cc cpp cxx c++ hpp hh hxx h++ ipp inl
line_comment = // #
block_comment = /* */
string = " " \
string = ' ' \
keywords = alignas alignof and and_eq asm auto bitand bitor bool break case catch
keywords = char char8_t char16_t char32_t class compl concept const consteval constexpr
keywords = constinit const_cast continue co_await co_return co_yield decltype default
keywords = delete do double dynamic_cast else enum explicit export extern false float
keywords = for friend goto if inline int long mutable namespace new noexcept not
keywords = not_eq nullptr operator or or_eq private protected public register
keywords = reinterpret_cast requires return short signed sizeof static static_assert
keywords = static_cast struct switch template this thread_local throw true try
keywords = typedef typeid typename union unsigned using virtual void volatile wchar_t
keywords = while xor xor_eq override final

[python]
extensions = py pyw pyi
line_comment = #
string = """ """ \
string = ''' ''' \
string = " " \
string = ' ' \
keywords = False None True and as assert async await break class continue def del
keywords = elif else except finally for from global if import in is lambda nonlocal
keywords = not or pass raise return try while with yield

[ruby]
extensions = rb rake gemspec ru
line_comment = #
block_comment = =begin =end
string = " " \
string = ' ' \
keywords = BEGIN END __ENCODING__ __FILE__ __LINE__ alias and begin break case class
keywords = def defined do else elsif end ensure false for if in module next nil not
keywords = or redo rescue retry return self super then true undef unless until when
keywords = while yield

[java]
extensions = java
line_comment = //
block_comment = /* */
string = """ """ \
string = " " \
string = ' ' \
keywords = abstract assert boolean break byte case catch char class const continue
keywords = default do double else enum extends final finally float for goto if
keywords = implements import instanceof int interface long native new package
keywords = private protected public return short static strictfp super switch
keywords = synchronized this throw throws transient try void volatile while true
keywords = false null var record yield sealed permits

[javascript]
extensions = js mjs cjs jsx
line_comment = //
block_comment = /* */
string = " " \
string = ' ' \
string = ` ` \
keywords = async await break case catch class const continue debugger default delete
keywords = do else enum export extends false finally for function if implements
keywords = import in instanceof interface let new null package private protected
keywords = public return static super switch this throw true try typeof var void
keywords = while with yield

[go]
extensions = go
line_comment = //
block_comment = /* */
string = " " \
string = ' ' \
string = ` `
keywords = break case chan const continue default defer else fallthrough for func go
keywords = goto if import interface map package range return select struct switch
keywords = type var true false nil iota bool byte complex64 complex128 error float32
keywords = float64 int int8 int16 int32 int64 rune string uint uint8 uint16 uint32
keywords = uint64 uintptr

[shell]
extensions = sh bash zsh ksh
line_comment = #
string = " " \
string = ' '
keywords = if then else elif fi case esac for select while until do done in function
keywords = time coproc
)conf";
}

inline ProfileRegistry builtin_profiles() { return parse_profiles(builtin_profiles_text(), "<builtin>"); }

// Emits every maximal [A-Za-z0-9_] run that starts with a letter or '_' and is
// not a keyword, outside comment and string regions. At any position the
// longest matching opener (comment or string) wins. Unterminated regions run to
// the end of the content. Block comments do not nest.
inline std::vector<std::string> extract_name_tokens(const SourceFile& file, const LanguageProfile& profile) {
  enum class Kind { line, block, string };
  struct Opener {
    std::string_view open;
    Kind kind;
    std::size_t index;
  };
  std::vector<Opener> openers;
  for (std::size_t i = 0; i < profile.block_comments.size(); ++i)
    openers.push_back({profile.block_comments[i].first, Kind::block, i});
  for (std::size_t i = 0; i < profile.line_comments.size(); ++i)
    openers.push_back({profile.line_comments[i], Kind::line, i});
  for (std::size_t i = 0; i < profile.string_delims.size(); ++i)
    openers.push_back({profile.string_delims[i].open, Kind::string, i});
  std::stable_sort(openers.begin(), openers.end(),
                   [](const Opener& a, const Opener& b) { return a.open.size() > b.open.size(); });

  const std::string_view text = file.content;
  const std::size_t n = text.size();
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < n) {
    const Opener* hit = nullptr;
    for (const auto& op : openers) {
      if (text.compare(i, op.open.size(), op.open) == 0) {
        hit = &op;
        break;
      }
    }
    if (hit) {
      std::size_t body = i + hit->open.size();
      switch (hit->kind) {
        case Kind::line: {
          auto eol = text.find('\n', body);
          i = eol == std::string_view::npos ? n : eol;
          break;
        }
        case Kind::block: {
          const auto& close = profile.block_comments[hit->index].second;
          auto end = text.find(close, body);
          i = end == std::string_view::npos ? n : end + close.size();
          break;
        }
        case Kind::string: {
          const auto& delim = profile.string_delims[hit->index];
          std::size_t j = body;
          i = n;
          while (j < n) {
            if (delim.escape && text[j] == *delim.escape) {
              j += 2;
              continue;
            }
            if (text.compare(j, delim.close.size(), delim.close) == 0) {
              i = j + delim.close.size();
              break;
            }
            ++j;
          }
          break;
        }
      }
      continue;
    }
    auto c = static_cast<unsigned char>(text[i]);
    if (detail::is_ident_char(c)) {
      std::size_t j = i;
      while (j < n && detail::is_ident_char(static_cast<unsigned char>(text[j]))) ++j;
      if (detail::is_ident_start(c)) {
        std::string token(text.substr(i, j - i));
        if (!profile.keywords.count(token)) tokens.push_back(std::move(token));
      }
      i = j;
      continue;
    }
    ++i;
  }
  return tokens;
}

}  // namespace srctopics
