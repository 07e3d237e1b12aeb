#include "bicoh/parser.hpp"

#include <cctype>
#include <vector>

namespace bicoh {

namespace {

struct Lexer {
  std::string text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(pos) + " in '" + text + "'");
  }

  bool eof() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool accept(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string ident() {
    skip_ws();
    if (pos >= text.size() || !std::isalpha(static_cast<unsigned char>(text[pos])))
      fail("expected identifier");
    std::size_t start = pos;
    while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    return text.substr(start, pos - start);
  }
};

struct Parser {
  Lexer lex;

  ObjPtr obj_atom() {
    if (lex.accept('(')) {
      ObjPtr x = obj_expr();
      lex.expect(')');
      return x;
    }
    std::string name = lex.ident();
    if (name == "I") return unit_obj();
    return gen_obj(std::move(name));
  }

  ObjPtr obj_expr() {
    ObjPtr acc = obj_atom();
    while (lex.accept('*')) acc = tensor_obj(acc, obj_atom());
    return acc;
  }

  std::vector<ObjPtr> obj_args(std::size_t count) {
    lex.expect('[');
    std::vector<ObjPtr> out;
    out.push_back(obj_expr());
    while (out.size() < count) {
      lex.expect(',');
      out.push_back(obj_expr());
    }
    lex.expect(']');
    return out;
  }

  CellPtr cell_atom() {
    if (lex.accept('(')) {
      CellPtr c = cell_expr();
      lex.expect(')');
      return c;
    }
    std::string head = lex.ident();
    bool primed = lex.accept('\'');
    if (head == "id") {
      if (primed) lex.fail("'id' takes no prime");
      auto a = obj_args(1);
      return id_cell(a[0]);
    }
    if (head == "a") {
      auto a = obj_args(3);
      return primed ? assoc_inv(a[0], a[1], a[2]) : assoc(a[0], a[1], a[2]);
    }
    if (head == "l") {
      auto a = obj_args(1);
      return primed ? lunit_inv(a[0]) : lunit(a[0]);
    }
    if (head == "r") {
      auto a = obj_args(1);
      return primed ? runit_inv(a[0]) : runit(a[0]);
    }
    if (head == "R") {
      auto a = obj_args(2);
      return primed ? braid_inv(a[0], a[1]) : braid(a[0], a[1]);
    }
    lex.fail("unknown cell head '" + head + "'");
  }

  CellPtr cell_term() {
    CellPtr acc = cell_atom();
    while (lex.peek() == '*') {
      lex.accept('*');
      acc = tensor_cell(acc, cell_atom());
    }
    return acc;
  }

  CellPtr cell_expr() {
    CellPtr acc = cell_term();
    while (lex.accept(';')) acc = compose(cell_term(), acc);  // diagram order reversed
    return acc;
  }
};

}  // namespace

ObjPtr parse_obj(const std::string& text) {
  Parser p{Lexer{text}};
  ObjPtr x = p.obj_expr();
  if (!p.lex.eof()) p.lex.fail("trailing input");
  return x;
}

CellPtr parse_cell(const std::string& text) {
  Parser p{Lexer{text}};
  CellPtr c = p.cell_expr();
  if (!p.lex.eof()) p.lex.fail("trailing input");
  return c;
}

namespace {

void collect(const ObjPtr& x, std::vector<std::string>& out) {
  switch (x->kind) {
    case ObjKind::Unit: return;
    case ObjKind::Gen:
      for (const std::string& n : out)
        if (n == x->name) return;
      out.push_back(x->name);
      return;
    case ObjKind::Tensor:
      collect(x->left, out);
      collect(x->right, out);
      return;
  }
}

void collect(const CellPtr& c, std::vector<std::string>& out) {
  for (const ObjPtr& o : c->objs) collect(o, out);
  if (c->snd) collect(c->snd, out);
  if (c->fst) collect(c->fst, out);
}

}  // namespace

GenSet infer_gens(const ObjPtr& x) {
  std::vector<std::string> names;
  collect(x, names);
  return GenSet::of(std::move(names));
}

GenSet infer_gens(const CellPtr& c) {
  std::vector<std::string> names;
  collect(c, names);
  return GenSet::of(std::move(names));
}

}  // namespace bicoh
