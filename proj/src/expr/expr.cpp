#include "prlab/expr.hpp"

#include <cctype>
#include <charconv>

#include "prlab/errors.hpp"
#include "prlab/filters.hpp"
#include "prlab/lattice.hpp"

namespace prlab {

namespace {

class Parser {
 public:
  Parser(UniversePtr u, const std::string& text) : u_(std::move(u)), end_(text.size()) {
    for (std::size_t i = 0; i < text.size(); ++i)
      if (!std::isspace(static_cast<unsigned char>(text[i]))) chars_.push_back({text[i], i});
  }

  Preradical parse() {
    Preradical p = join_level();
    if (i_ != chars_.size()) fail("unexpected '" + std::string(1, peek()) + "'");
    return p;
  }

 private:
  struct Char {
    char c;
    std::size_t pos;
  };

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos()); }
  std::size_t pos() const { return i_ < chars_.size() ? chars_[i_].pos : end_; }
  char peek() const { return i_ < chars_.size() ? chars_[i_].c : '\0'; }

  void expect(char c) {
    if (peek() != c) fail(i_ < chars_.size() ? "expected '" + std::string(1, c) + "', found '" + peek() + "'"
                                             : "expected '" + std::string(1, c) + "', found end of input");
    ++i_;
  }

  Preradical join_level() {
    Preradical p = meet_level();
    while (peek() == '|') {
      ++i_;
      p = join(p, meet_level());
    }
    return p;
  }

  Preradical meet_level() {
    Preradical p = product_level();
    while (peek() == '&') {
      ++i_;
      p = meet(p, product_level());
    }
    return p;
  }

  Preradical product_level() {
    Preradical p = primary();
    while (peek() == '*' || peek() == ':') {
      const char op = peek();
      ++i_;
      Preradical q = primary();
      p = op == '*' ? prod(p, q) : coprod(p, q);
    }
    return p;
  }

  std::string word() {
    std::string w;
    while (std::isalpha(static_cast<unsigned char>(peek()))) w += chars_[i_++].c;
    return w;
  }

  // Raw argument text up to the next ',' or ')'.
  std::string raw_arg() {
    std::string s;
    while (i_ < chars_.size() && peek() != ',' && peek() != ')') s += chars_[i_++].c;
    return s;
  }

  std::size_t module_arg() {
    const std::size_t at = pos();
    const std::string label = raw_arg();
    if (label.empty()) throw ParseError("expected a module label", at);
    const std::size_t m = u_->find_label(label);
    if (m == kNoRep) throw ParseError("unknown module '" + label + "'", at);
    return m;
  }

  const Submodule& sub_arg(std::size_t m) {
    const std::size_t at = pos();
    const std::string s = raw_arg();
    try {
      return resolve_submodule(*u_, m, s);
    } catch (const InvalidParameter& e) {
      throw ParseError(e.what(), at);
    }
  }

  Filter filter_arg() {
    std::vector<std::size_t> ideals;
    const std::size_t count = u_->ring().left_ideals().size();
    while (peek() != ')') {
      const std::size_t at = pos();
      const std::string s = raw_arg();
      std::size_t k = 0;
      const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), k);
      if (s.empty() || ec != std::errc() || p != s.data() + s.size()) throw ParseError("bad ideal index '" + s + "'", at);
      if (k >= count) throw ParseError("ideal index out of range '" + s + "'", at);
      ideals.push_back(k);
      if (peek() == ',') {
        ++i_;
        if (peek() == ')') fail("expected an ideal index");
      } else if (peek() != ')') {
        fail("expected ',' or ')'");
      }
    }
    return Filter(u_->ring_ptr(), std::move(ideals));
  }

  Preradical primary() {
    if (peek() == '(') {
      ++i_;
      Preradical p = join_level();
      expect(')');
      return p;
    }
    const std::size_t at = pos();
    if (i_ >= chars_.size()) fail("unexpected end of input");
    const std::string w = word();
    if (w.empty()) fail("unexpected '" + std::string(1, peek()) + "'");
    if (w == "zero") return zero_preradical(u_);
    if (w == "one") return identity_preradical(u_);
    if (w == "soc") return socle_preradical(u_);
    if (w == "jac") return jacobson_preradical(u_);
    if (w == "sing") return singular_preradical(u_);
    if (w == "alpha" || w == "omega") {
      expect('(');
      const std::size_t m = module_arg();
      expect(',');
      const Submodule& n = sub_arg(m);
      expect(')');
      try {
        return w == "alpha" ? alpha(u_, m, n) : omega(u_, m, n);
      } catch (const InvalidParameter& e) {
        throw ParseError(e.what(), at);
      }
    }
    if (w == "filter") {
      expect('(');
      Filter f = filter_arg();
      expect(')');
      try {
        return preradical_of_filter(u_, f);
      } catch (const InvalidParameter& e) {
        throw ParseError(e.what(), at);
      }
    }
    if (w == "hat" || w == "sq" || w == "circ" || w == "bar" || w == "tilde") {
      expect('(');
      Preradical p = join_level();
      expect(')');
      if (w == "hat") return hat(p);
      if (w == "sq") return square(p);
      if (w == "circ") return circ(p);
      if (w == "bar") return bar(p);
      return tilde(p);
    }
    throw ParseError("unknown name '" + w + "'", at);
  }

  UniversePtr u_;
  std::vector<Char> chars_;
  std::size_t end_;
  std::size_t i_ = 0;
};

}  // namespace

const Submodule& resolve_submodule(const Universe& u, std::size_t m, const std::string& s) {
  const auto& subs = u.subs(m);
  if (!s.empty() && s[0] == '#') {
    std::size_t k = 0;
    const auto [p, ec] = std::from_chars(s.data() + 1, s.data() + s.size(), k);
    if (ec != std::errc() || p != s.data() + s.size() || s.size() == 1)
      throw InvalidParameter("bad submodule index '" + s + "'");
    if (k >= subs.size()) throw InvalidParameter("submodule index out of range '" + s + "'");
    return subs[k].sub;
  }
  if (s.empty()) throw InvalidParameter("expected a submodule");
  const std::size_t n = u.find_label(s);
  if (n == kNoRep) throw InvalidParameter("unknown module '" + s + "'");
  const Submodule* found = nullptr;
  for (std::size_t k : u.fully_invariant(m)) {
    if (subs[k].sub_rep != n) continue;
    if (found) throw InvalidParameter("ambiguous submodule '" + s + "' of " + u.label(m) + "; use #k");
    found = &subs[k].sub;
  }
  if (!found) throw InvalidParameter("no fully invariant submodule '" + s + "' in " + u.label(m));
  return *found;
}

Preradical eval_expr(const UniversePtr& u, const std::string& text) { return Parser(u, text).parse(); }

}  // namespace prlab
