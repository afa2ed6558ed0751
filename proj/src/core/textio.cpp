#include "core/textio.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace idem {

namespace {

struct Token {
  std::string text;
  int line = 0, col = 0;
  bool is_punct = false;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](char c) {
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  };
  const std::string punct = "{};:,[]";
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') {
        advance(text[i]);
        ++i;
      }
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(c);
      ++i;
      continue;
    }
    if (punct.find(c) != std::string::npos) {
      out.push_back({std::string(1, c), line, col, true});
      advance(c);
      ++i;
      continue;
    }
    Token t{"", line, col, false};
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
           punct.find(text[i]) == std::string::npos && text[i] != '#') {
      t.text += text[i];
      advance(text[i]);
      ++i;
    }
    out.push_back(std::move(t));
  }
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(tokenize(text)) {}

  Document parse() {
    Document doc;
    while (!done()) {
      Block b = parse_block();
      if (doc.find(b.name))
        fail("duplicate block name '" + b.name + "'");
      doc.blocks.push_back(std::move(b));
      resolve_and_validate(doc, doc.blocks.back());
    }
    if (doc.blocks.empty()) fail("document has no blocks");
    return doc;
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) {
    int line = 0, col = 0;
    if (pos_ < toks_.size()) {
      line = toks_[pos_].line;
      col = toks_[pos_].col;
    } else if (!toks_.empty()) {
      line = toks_.back().line;
      col = toks_.back().col;
    }
    throw ParseError(std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
  }
  bool done() const { return pos_ >= toks_.size(); }
  const Token& peek() {
    if (done()) fail("unexpected end of input");
    return toks_[pos_];
  }
  Token next() {
    Token t = peek();
    ++pos_;
    return t;
  }
  void expect(const std::string& s) {
    if (peek().text != s) fail("expected '" + s + "', found '" + peek().text + "'");
    ++pos_;
  }
  bool accept(const std::string& s) {
    if (!done() && peek().text == s) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string ident() {
    if (peek().is_punct) fail("expected a name, found '" + peek().text + "'");
    return next().text;
  }

  std::vector<std::string> name_list_until(const std::string& stop) {
    std::vector<std::string> out;
    while (peek().text != stop) {
      if (peek().is_punct) fail("expected an element name");
      out.push_back(next().text);
    }
    return out;
  }

  int elem_index(const std::vector<std::string>& names, const Token& t) {
    auto it = std::find(names.begin(), names.end(), t.text);
    if (it != names.end()) return static_cast<int>(it - names.begin());
    // bare index fallback
    bool digits = !t.text.empty() &&
                  std::all_of(t.text.begin(), t.text.end(),
                              [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    if (digits) {
      int v = std::stoi(t.text);
      if (v >= 0 && v < static_cast<int>(names.size())) return v;
    }
    pos_ = pos_ > 0 ? pos_ - 1 : 0;
    fail("unknown element '" + t.text + "'");
  }

  // [[a,b],[b,c]] with rows matched against the element count
  std::vector<int> table(const std::vector<std::string>& names) {
    const int n = static_cast<int>(names.size());
    std::vector<int> out;
    expect("[");
    for (int row = 0; row < n; ++row) {
      expect("[");
      for (int colu = 0; colu < n; ++colu) {
        if (peek().text == "]")
          fail("row " + std::to_string(row) + " has too few entries");
        out.push_back(elem_index(names, next()));
        if (colu + 1 < n) {
          if (peek().text == "]")
            fail("row " + std::to_string(row) + " has too few entries");
          expect(",");
        }
      }
      if (peek().text == ",")
        fail("row " + std::to_string(row) + " has too many entries");
      expect("]");
      if (row + 1 < n) expect(",");
    }
    expect("]");
    return out;
  }

  Cim cim_body() {
    // inside the braces: elements/zero/one/add
    expect("elements");
    expect(":");
    std::vector<std::string> names = name_list_until(";");
    expect(";");
    if (names.empty()) fail("carrier must be non-empty");
    expect("zero");
    expect(":");
    Token z = next();
    expect(";");
    expect("one");
    expect(":");
    Token o = next();
    expect(";");
    expect("add");
    expect(":");
    Cim c;
    c.n = static_cast<int>(names.size());
    c.names = names;
    c.bottom = elem_index(names, z);
    c.top = elem_index(names, o);
    c.join = table(names);
    accept(";");
    return c;
  }

  Block parse_block() {
    Block b;
    b.kind = ident();
    if (b.kind != "cim" && b.kind != "semiring" && b.kind != "top" &&
        b.kind != "module" && b.kind != "monoid" && b.kind != "ring") {
      pos_ = pos_ > 0 ? pos_ - 1 : 0;
      fail("unknown block kind '" + b.kind + "'");
    }
    b.name = ident();
    if (b.kind == "module") {
      expect("over");
      b.ring_ref = ident();
    }
    expect("{");
    if (b.kind == "cim") {
      b.cim = cim_body();
    } else if (b.kind == "semiring") {
      expect("cim");
      expect(":");
      Semiring s;
      if (peek().text == "{") {
        expect("{");
        s.add = cim_body();
        expect("}");
      } else {
        b.cim_ref = ident();
      }
      expect(";");
      expect("one");
      expect(":");
      Token o = next();
      expect(";");
      expect("mul");
      expect(":");
      if (b.cim_ref.empty()) {
        s.one = elem_index(s.add.names, o);
        s.mul = table(s.add.names);
        b.semiring = std::move(s);
      } else {
        // defer resolution; stash tokens by re-parsing later is awkward,
        // so parse against placeholder names resolved in a second step
        pending_one_ = o;
        pending_table_pos_ = pos_;
        skip_table();
        b.semiring = std::nullopt;
      }
      accept(";");
    } else if (b.kind == "top") {
      expect("points");
      expect(":");
      std::vector<std::string> names = name_list_until(";");
      expect(";");
      expect("closed");
      expect(":");
      Top t;
      t.n = static_cast<int>(names.size());
      t.names = names;
      while (true) {
        expect("[");
        Mask m = 0;
        while (peek().text != "]") {
          Token e = next();
          m |= bit(elem_index(names, e));
          accept(",");
        }
        expect("]");
        t.closed.push_back(m);
        if (!accept(",")) break;
      }
      std::sort(t.closed.begin(), t.closed.end());
      t.closed.erase(std::unique(t.closed.begin(), t.closed.end()), t.closed.end());
      accept(";");
      b.top = std::move(t);
    } else if (b.kind == "module") {
      expect("cim");
      expect(":");
      Module m;
      expect("{");
      m.carrier = cim_body();
      expect("}");
      expect(";");
      expect("action");
      expect(":");
      pending_action_names_ = m.carrier.names;
      pending_module_ = std::move(m);
      pending_table_pos_ = pos_;
      skip_table();
      accept(";");
    } else if (b.kind == "monoid") {
      expect("elements");
      expect(":");
      std::vector<std::string> names = name_list_until(";");
      expect(";");
      expect("mul");
      expect(":");
      Monoid m;
      m.n = static_cast<int>(names.size());
      m.names = names;
      m.mul = table(names);
      accept(";");
      // the unit is the element acting as identity
      int one = -1;
      for (int e = 0; e < m.n; ++e) {
        bool unit = true;
        for (int x = 0; x < m.n && unit; ++x)
          if (m.times(e, x) != x) unit = false;
        if (unit) one = e;
      }
      if (one < 0) {
        fail("monoid has no unit element");
      }
      m.one = one;
      b.monoid = std::move(m);
    } else if (b.kind == "ring") {
      expect("elements");
      expect(":");
      std::vector<std::string> names = name_list_until(";");
      expect(";");
      expect("add");
      expect(":");
      Ring r;
      r.n = static_cast<int>(names.size());
      r.names = names;
      r.add = table(names);
      expect(";");
      expect("mul");
      expect(":");
      r.mul = table(names);
      accept(";");
      int zero = -1, one = -1;
      for (int e = 0; e < r.n; ++e) {
        bool z = true, o = true;
        for (int x = 0; x < r.n; ++x) {
          if (r.plus(e, x) != x) z = false;
          if (r.times(e, x) != x) o = false;
        }
        if (z) zero = e;
        if (o) one = e;
      }
      if (zero < 0) fail("ring has no additive unit");
      if (one < 0) fail("ring has no multiplicative unit");
      r.zero = zero;
      r.one = one;
      b.ring = std::move(r);
    }
    expect("}");
    return b;
  }

  void skip_table() {
    int depth = 0;
    do {
      const Token& t = peek();
      if (t.text == "[") ++depth;
      else if (t.text == "]") --depth;
      else if (depth == 0) fail("expected a table");
      ++pos_;
    } while (depth > 0);
  }

  void resolve_and_validate(Document& doc, Block& b) {
    if (b.kind == "cim") {
      Report r = check_cim(*b.cim);
      if (!r.ok()) fail("invalid cim '" + b.name + "': " + r.summary());
    } else if (b.kind == "semiring") {
      if (!b.cim_ref.empty()) {
        const Block* ref = doc.find(b.cim_ref);
        if (!ref || ref->kind != "cim")
          fail("semiring '" + b.name + "' references unknown cim '" + b.cim_ref + "'");
        Semiring s;
        s.add = *ref->cim;
        std::size_t save = pos_;
        pos_ = pending_table_pos_;
        s.one = elem_index(s.add.names, pending_one_);
        s.mul = table(s.add.names);
        pos_ = save;
        b.semiring = std::move(s);
      }
      Report r = check_semiring(*b.semiring);
      if (!r.ok()) fail("invalid semiring '" + b.name + "': " + r.summary());
    } else if (b.kind == "top") {
      Report r = check_top(*b.top);
      if (!r.ok()) fail("invalid top '" + b.name + "': " + r.summary());
    } else if (b.kind == "module") {
      const Block* ref = doc.find(b.ring_ref);
      if (!ref || ref->kind != "semiring")
        fail("module '" + b.name + "' references unknown semiring '" + b.ring_ref + "'");
      Module m = std::move(*pending_module_);
      m.ring = *ref->semiring;
      std::size_t save = pos_;
      pos_ = pending_table_pos_;
      m.action = action_table(m.ring.add.names.empty()
                                  ? default_names(m.ring.n())
                                  : m.ring.add.names,
                              pending_action_names_);
      pos_ = save;
      Report r = check_module(m);
      if (!r.ok()) fail("invalid module '" + b.name + "': " + r.summary());
      b.module = std::move(m);
      pending_module_.reset();
    } else if (b.kind == "monoid") {
      Report r = check_monoid(*b.monoid);
      if (!r.ok()) fail("invalid monoid '" + b.name + "': " + r.summary());
    } else if (b.kind == "ring") {
      Report r = check_ring(*b.ring);
      if (!r.ok()) fail("invalid ring '" + b.name + "': " + r.summary());
    }
  }

  static std::vector<std::string> default_names(int n) {
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i) out.push_back("e" + std::to_string(i));
    return out;
  }

  // |R| rows of |M| entries
  std::vector<int> action_table(const std::vector<std::string>& ring_names,
                                const std::vector<std::string>& mod_names) {
    const int nr = static_cast<int>(ring_names.size());
    const int nm = static_cast<int>(mod_names.size());
    std::vector<int> out;
    expect("[");
    for (int row = 0; row < nr; ++row) {
      expect("[");
      for (int colu = 0; colu < nm; ++colu) {
        if (peek().text == "]") fail("action row has too few entries");
        out.push_back(elem_index(mod_names, next()));
        if (colu + 1 < nm) expect(",");
      }
      expect("]");
      if (row + 1 < nr) expect(",");
    }
    expect("]");
    return out;
  }

  Token pending_one_;
  std::size_t pending_table_pos_ = 0;
  std::optional<Module> pending_module_;
  std::vector<std::string> pending_action_names_;
};

std::string name_or_index(const std::vector<std::string>& names, int i) {
  if (i < static_cast<int>(names.size()) && !names[i].empty()) return names[i];
  return "e" + std::to_string(i);
}

void emit_table(std::ostringstream& os, const std::vector<std::string>& names,
                const std::vector<int>& t, int rows, int cols) {
  os << "[";
  for (int r = 0; r < rows; ++r) {
    os << (r ? ", [" : "[");
    for (int c = 0; c < cols; ++c)
      os << (c ? ", " : "") << name_or_index(names, t[static_cast<std::size_t>(r) * cols + c]);
    os << "]";
  }
  os << "]";
}

void emit_cim_body(std::ostringstream& os, const Cim& c) {
  os << "elements:";
  for (int i = 0; i < c.n; ++i) os << " " << name_or_index(c.names, i);
  os << "; zero: " << name_or_index(c.names, c.bottom);
  os << "; one: " << name_or_index(c.names, c.top);
  os << "; add: ";
  emit_table(os, c.names, c.join, c.n, c.n);
}

}  // namespace

const Block* Document::find(const std::string& name) const {
  for (const Block& b : blocks)
    if (b.name == name) return &b;
  return nullptr;
}

const Block& Document::need(const std::string& name) const {
  const Block* b = find(name);
  if (!b) throw DomainError("no block named '" + name + "'");
  return *b;
}

const Block& Document::need_kind(const std::string& name, const std::string& kind) const {
  const Block& b = need(name);
  if (b.kind != kind)
    throw DomainError("block '" + name + "' is a " + b.kind + ", expected " + kind);
  return b;
}

const Block& Document::pick(const std::string& name,
                            std::initializer_list<const char*> kinds) const {
  if (!name.empty()) {
    const Block& b = need(name);
    for (const char* k : kinds)
      if (b.kind == k) return b;
    throw DomainError("block '" + name + "' has kind " + b.kind);
  }
  for (const Block& b : blocks)
    for (const char* k : kinds)
      if (b.kind == k) return b;
  throw DomainError("document has no block of the requested kind");
}

Document parse_document(const std::string& text) { return Parser(text).parse(); }

std::string emit_block(const Block& b) {
  std::ostringstream os;
  if (b.kind == "cim") {
    os << "cim " << b.name << " { ";
    emit_cim_body(os, *b.cim);
    os << " }";
  } else if (b.kind == "semiring") {
    const Semiring& s = *b.semiring;
    os << "semiring " << b.name << " { cim: ";
    if (!b.cim_ref.empty()) {
      os << b.cim_ref;
    } else {
      os << "{ ";
      emit_cim_body(os, s.add);
      os << " }";
    }
    os << "; one: " << name_or_index(s.add.names, s.one) << "; mul: ";
    emit_table(os, s.add.names, s.mul, s.n(), s.n());
    os << " }";
  } else if (b.kind == "top") {
    const Top& t = *b.top;
    os << "top " << b.name << " { points:";
    for (int i = 0; i < t.n; ++i) os << " " << t.point_label(i);
    os << "; closed: ";
    for (std::size_t i = 0; i < t.closed.size(); ++i) {
      os << (i ? ", [" : "[");
      bool first = true;
      for (int x = 0; x < t.n; ++x)
        if (has(t.closed[i], x)) {
          os << (first ? "" : ", ") << t.point_label(x);
          first = false;
        }
      os << "]";
    }
    os << " }";
  } else if (b.kind == "module") {
    const Module& m = *b.module;
    os << "module " << b.name << " over " << b.ring_ref << " { cim: { ";
    emit_cim_body(os, m.carrier);
    os << " }; action: ";
    emit_table(os, m.carrier.names, m.action, m.ring.n(), m.m());
    os << " }";
  } else if (b.kind == "monoid") {
    const Monoid& m = *b.monoid;
    os << "monoid " << b.name << " { elements:";
    for (int i = 0; i < m.n; ++i) os << " " << m.label(i);
    os << "; mul: ";
    emit_table(os, m.names, m.mul, m.n, m.n);
    os << " }";
  } else if (b.kind == "ring") {
    const Ring& r = *b.ring;
    os << "ring " << b.name << " { elements:";
    for (int i = 0; i < r.n; ++i) os << " " << r.label(i);
    os << "; add: ";
    emit_table(os, r.names, r.add, r.n, r.n);
    os << "; mul: ";
    emit_table(os, r.names, r.mul, r.n, r.n);
    os << " }";
  } else {
    throw DomainError("cannot emit block kind " + b.kind);
  }
  return os.str();
}

std::string emit_document(const Document& doc) {
  std::string out;
  for (const Block& b : doc.blocks) {
    out += emit_block(b);
    out += "\n";
  }
  return out;
}

Block block_of_semiring(std::string name, const Semiring& s) {
  Block b;
  b.kind = "semiring";
  b.name = std::move(name);
  b.semiring = s;
  return b;
}

Block block_of_top(std::string name, const Top& t) {
  Block b;
  b.kind = "top";
  b.name = std::move(name);
  b.top = t;
  return b;
}

Block block_of_monoid(std::string name, const Monoid& m) {
  Block b;
  b.kind = "monoid";
  b.name = std::move(name);
  b.monoid = m;
  return b;
}

Block block_of_ring(std::string name, const Ring& r) {
  Block b;
  b.kind = "ring";
  b.name = std::move(name);
  b.ring = r;
  return b;
}

Block block_of_cim(std::string name, const Cim& c) {
  Block b;
  b.kind = "cim";
  b.name = std::move(name);
  b.cim = c;
  return b;
}

}  // namespace idem
