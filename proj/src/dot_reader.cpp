#include <cctype>
#include <unordered_set>

#include "pathcov/graph_document.hpp"

namespace pathcov {

namespace {

struct Token {
  enum class Type { id, arrow, lbrace, rbrace, lbracket, rbracket, semicolon, equals, comma, end };
  Type type;
  std::string text;
  std::size_t line;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_space_and_comments();
    if (pos_ >= text_.size()) return {Token::Type::end, "", line_};
    const char c = text_[pos_];
    switch (c) {
      case '{':
        return single(Token::Type::lbrace);
      case '}':
        return single(Token::Type::rbrace);
      case '[':
        return single(Token::Type::lbracket);
      case ']':
        return single(Token::Type::rbracket);
      case ';':
        return single(Token::Type::semicolon);
      case '=':
        return single(Token::Type::equals);
      case ',':
        return single(Token::Type::comma);
      case '"':
        return quoted();
      default:
        break;
    }
    if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
      pos_ += 2;
      return {Token::Type::arrow, "->", line_};
    }
    if (is_id_char(c) || c == '-') return identifier();
    fail(std::string("unexpected character '") + c + "'");
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(ParseError::Kind::syntax, "DOT line " + std::to_string(line_) + ": " + message);
  }

 private:
  static bool is_id_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' ||
           static_cast<unsigned char>(c) >= 0x80;
  }

  Token single(Token::Type type) { return {type, std::string(1, text_[pos_++]), line_}; }

  Token identifier() {
    const std::size_t begin = pos_;
    if (text_[pos_] == '-') ++pos_;
    while (pos_ < text_.size() && is_id_char(text_[pos_])) ++pos_;
    if (pos_ == begin + 1 && text_[begin] == '-') fail("undirected edge operator is not supported");
    return {Token::Type::id, std::string(text_.substr(begin, pos_ - begin)), line_};
  }

  Token quoted() {
    const std::size_t start_line = line_;
    std::string out;
    ++pos_;
    while (pos_ < text_.size() && text_[pos_] != '"') {
      if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) {
        const char escaped = text_[pos_ + 1];
        if (escaped == '"' || escaped == '\\') {
          out += escaped;
        } else if (escaped == '\n') {
          ++line_;
        } else {
          out += '\\';
          out += escaped;
        }
        pos_ += 2;
        continue;
      }
      if (text_[pos_] == '\n') ++line_;
      out += text_[pos_++];
    }
    if (pos_ >= text_.size()) fail("unterminated string");
    ++pos_;
    return {Token::Type::id, std::move(out), start_line};
  }

  void skip_space_and_comments() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '\n') {
        ++line_;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '#' || (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/')) {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '*') {
        const auto close = text_.find("*/", pos_ + 2);
        if (close == std::string_view::npos) fail("unterminated comment");
        for (std::size_t i = pos_; i < close; ++i) line_ += text_[i] == '\n';
        pos_ = close + 2;
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
};

class DotParser {
 public:
  explicit DotParser(std::string_view text) : lexer_(text) { advance(); }

  GraphDocument parse() {
    if (is_keyword("strict")) advance();
    if (!is_keyword("digraph")) {
      if (is_keyword("graph")) lexer_.fail("undirected graphs are not supported");
      lexer_.fail("expected 'digraph'");
    }
    advance();
    if (tok_.type == Token::Type::id) {
      doc_.name = tok_.text;
      advance();
    }
    expect(Token::Type::lbrace, "'{'");
    while (tok_.type != Token::Type::rbrace) {
      if (tok_.type == Token::Type::end) lexer_.fail("missing '}'");
      statement();
    }
    advance();
    if (tok_.type != Token::Type::end) lexer_.fail("trailing content after the graph block");
    return std::move(doc_);
  }

 private:
  void advance() { tok_ = lexer_.next(); }

  bool is_keyword(std::string_view word) const {
    if (tok_.type != Token::Type::id || tok_.text.size() != word.size()) return false;
    for (std::size_t i = 0; i < word.size(); ++i) {
      if (std::tolower(static_cast<unsigned char>(tok_.text[i])) != word[i]) return false;
    }
    return true;
  }

  void expect(Token::Type type, const char* what) {
    if (tok_.type != type) lexer_.fail(std::string("expected ") + what);
    advance();
  }

  void skip_attributes() {
    while (tok_.type == Token::Type::lbracket) {
      advance();
      while (tok_.type != Token::Type::rbracket) {
        if (tok_.type == Token::Type::end) lexer_.fail("unterminated attribute list");
        advance();
      }
      advance();
    }
  }

  void declare(const std::string& label) {
    if (declared_.insert(label).second) doc_.vertices.push_back(label);
  }

  void statement() {
    if (tok_.type == Token::Type::semicolon) {
      advance();
      return;
    }
    if (is_keyword("subgraph") || tok_.type == Token::Type::lbrace) lexer_.fail("subgraphs are not supported");
    if (tok_.type != Token::Type::id) lexer_.fail("expected a statement");
    if (is_keyword("graph") || is_keyword("node") || is_keyword("edge")) {
      advance();
      skip_attributes();
      optional_semicolon();
      return;
    }
    std::string first = tok_.text;
    advance();
    if (tok_.type == Token::Type::equals) {
      advance();
      if (tok_.type != Token::Type::id) lexer_.fail("expected an attribute value");
      advance();
      optional_semicolon();
      return;
    }
    declare(first);
    while (tok_.type == Token::Type::arrow) {
      advance();
      if (tok_.type != Token::Type::id) lexer_.fail("expected a node after '->'");
      declare(tok_.text);
      doc_.edges.emplace_back(first, tok_.text);
      first = tok_.text;
      advance();
    }
    skip_attributes();
    optional_semicolon();
  }

  void optional_semicolon() {
    if (tok_.type == Token::Type::semicolon || tok_.type == Token::Type::comma) advance();
  }

  Lexer lexer_;
  Token tok_{Token::Type::end, "", 0};
  GraphDocument doc_;
  std::unordered_set<std::string> declared_;
};

}  // namespace

GraphDocument parse_dot_document(std::string_view text) { return DotParser(text).parse(); }

}  // namespace pathcov
