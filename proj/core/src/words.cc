#include "twistcert/words.h"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "twistcert/error.h"

namespace twistcert {

namespace {

Alphabet make_standard_alphabet() {
  Alphabet a;
  for (auto name : kTorusGenerators) {
    a.add({std::string(name), GeneratorKind::kTwist, std::string(name)});
  }
  a.add({"c", GeneratorKind::kTwist, "c"});
  a.add({"r", GeneratorKind::kReflection, ""});
  a.add({"h", GeneratorKind::kComplementHomeo, ""});
  a.add({"s", GeneratorKind::kCurveReverser, ""});
  a.add({"y", GeneratorKind::kCrosscapSlide, ""});
  return a;
}

bool valid_name(std::string_view name) {
  if (name.empty() || !std::islower(static_cast<unsigned char>(name[0]))) {
    return false;
  }
  return std::all_of(name.begin(), name.end(), [](char ch) {
    auto c = static_cast<unsigned char>(ch);
    return std::islower(c) || std::isdigit(c);
  });
}

class WordParser {
 public:
  explicit WordParser(std::string_view text) : text_(text) {}

  Word parse() {
    Word w = sequence();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected ')'");
    return w;
  }

 private:
  Word sequence() {
    std::vector<Letter> out;
    for (;;) {
      skip_space();
      if (pos_ == text_.size() || text_[pos_] == ')') break;
      if (text_[pos_] == '(') {
        ++pos_;
        Word inner = sequence();
        skip_space();
        if (pos_ == text_.size() || text_[pos_] != ')') fail("missing ')'");
        ++pos_;
        long n = 1;
        if (pos_ < text_.size() && text_[pos_] == '^') {
          ++pos_;
          n = exponent();
        }
        Word expanded = power(inner, n);
        out.insert(out.end(), expanded.begin(), expanded.end());
      } else {
        out.push_back(letter());
      }
    }
    return Word(std::move(out));
  }

  Letter letter() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
           text_[pos_] != '(' && text_[pos_] != ')') {
      ++pos_;
    }
    return parse_letter(text_.substr(start, pos_ - start));
  }

  long exponent() {
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string_view digits = text_.substr(start, pos_ - start);
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
    long n = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
      fail("bad exponent after ')^'");
    }
    return n;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in word '" +
                     std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

const Alphabet& Alphabet::standard() {
  static const Alphabet alphabet = make_standard_alphabet();
  return alphabet;
}

void Alphabet::add(Generator g) {
  if (!valid_name(g.name)) throw Error("invalid generator name '" + g.name + "'");
  if (find(g.name)) throw Error("duplicate generator '" + g.name + "'");
  if ((g.kind == GeneratorKind::kTwist) == g.curve.empty()) {
    throw Error("generator '" + g.name + "': a twist carries exactly one curve");
  }
  generators_.push_back(std::move(g));
}

const Generator* Alphabet::find(std::string_view name) const {
  auto it = std::find_if(generators_.begin(), generators_.end(),
                         [&](const Generator& g) { return g.name == name; });
  return it == generators_.end() ? nullptr : &*it;
}

Generator Alphabet::resolve(std::string_view name) const {
  if (const Generator* g = find(name)) return *g;
  return {std::string(name), GeneratorKind::kTwist, std::string(name)};
}

bool is_torus_generator(std::string_view name) {
  return std::find(std::begin(kTorusGenerators), std::end(kTorusGenerators), name) !=
         std::end(kTorusGenerators);
}

bool is_boundary_twist(std::string_view name) {
  return name == "c1" || name == "c2" || name == "c3";
}

bool is_involution(std::string_view name) {
  return Alphabet::standard().resolve(name).is_involution();
}

Letter::Letter(std::string name, int sign) : name_(std::move(name)), sign_(sign) {
  if (sign_ != 1 && sign_ != -1) throw Error("letter sign must be +1 or -1");
  if (is_involution(name_)) sign_ = 1;
}

bool Letter::cancels(const Letter& other) const {
  return name_ == other.name_ && (sign_ != other.sign_ || is_involution(name_));
}

std::string Letter::to_string() const {
  return sign_ > 0 ? name_ : name_ + "^-1";
}

Letter parse_letter(std::string_view token) {
  int sign = 1;
  std::string_view name = token;
  if (auto caret = token.find('^'); caret != std::string_view::npos) {
    if (token.substr(caret) != "^-1") {
      throw ParseError("only '^-1' may follow a generator name: '" + std::string(token) + "'");
    }
    name = token.substr(0, caret);
    sign = -1;
  }
  if (!valid_name(name)) {
    throw ParseError("invalid generator name '" + std::string(name) + "'");
  }
  return Letter(std::string(name), sign);
}

bool Word::is_reduced() const {
  for (std::size_t i = 1; i < letters_.size(); ++i) {
    if (letters_[i - 1].cancels(letters_[i])) return false;
  }
  return true;
}

Word Word::slice(std::size_t pos, std::size_t len) const {
  pos = std::min(pos, letters_.size());
  len = std::min(len, letters_.size() - pos);
  return Word(std::vector<Letter>(letters_.begin() + pos, letters_.begin() + pos + len));
}

std::string Word::to_string() const {
  std::string out;
  for (const Letter& l : letters_) {
    if (!out.empty()) out += ' ';
    out += l.to_string();
  }
  return out;
}

Word operator*(const Word& u, const Word& v) {
  std::vector<Letter> out;
  out.reserve(u.size() + v.size());
  out.insert(out.end(), u.begin(), u.end());
  out.insert(out.end(), v.begin(), v.end());
  return Word(std::move(out));
}

Word parse_word(std::string_view text) { return WordParser(text).parse(); }

Word free_reduce(const Word& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (const Letter& l : w) {
    if (!stack.empty() && stack.back().cancels(l)) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return Word(std::move(stack));
}

Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    out.push_back(it->inverse());
  }
  return free_reduce(Word(std::move(out)));
}

Word commutator(const Word& x, const Word& y) {
  return free_reduce(x * y * invert(x) * invert(y));
}

Word power(const Word& w, long n) {
  Word base = n < 0 ? invert(w) : free_reduce(w);
  std::vector<Letter> out;
  unsigned long count = n < 0 ? 0UL - static_cast<unsigned long>(n) : static_cast<unsigned long>(n);
  out.reserve(base.size() * count);
  for (unsigned long i = 0; i < count; ++i) {
    out.insert(out.end(), base.begin(), base.end());
  }
  return free_reduce(Word(std::move(out)));
}

Word conjugate(const Word& w, const Word& by) {
  return free_reduce(by * w * invert(by));
}

}  // namespace twistcert
