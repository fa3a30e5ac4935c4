#pragma once

/**
 * @file io.hpp
 * @brief Line-oriented text formats for algebras, tensors, forms,
 * representations, matched pairs, bialgebras and Rota-Baxter operators.
 *
 * A workspace file is a sequence of blocks; each block starts with a header
 * line and continues with entry lines until the next header. `#` starts a
 * comment. Indices are 1-based. Headers:
 *
 *   algebra <name> dim <n> field <Q|Fp:p> flavor <zinbiel|comm|unchecked>
 *     prod i j -> c*k [+ c*k ...]
 *   tensor2 <name> dim <n> field <F>
 *     r i j = c
 *   form <name> dim <n> field <F> [skew] [nondegenerate]
 *     w i j = c
 *   rep <name> base <algebra> dim <m>
 *     rho i : a b ; c d        (matrix rows separated by ';')
 *     mu i : ...
 *   matched-pair <name> A <algebra> B <algebra>
 *     rho i : ...   mu i : ...   rho' i : ...   mu' i : ...
 *   bialgebra <name> primal <algebra> dual <algebra>
 *   rb-operator <name> base <algebra> weight <c>
 *     P : rows
 *
 * Serialization is canonical: nonzero entries only, in index order, with
 * coefficients printed exactly; parse(serialize(w)) == w and serialize is a
 * fixed point on its own output.
 */

#include "rota_baxter.hpp"

#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace zinbiel {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_, column_;
};

struct TensorDoc {
  std::string name;
  FieldSpec field;
  Tensor2 tensor;
};

struct FormDoc {
  std::string name;
  FieldSpec field;
  BilinearForm form;
  bool declared_skew = false;
  bool declared_nondegenerate = false;
};

struct RepDoc {
  std::string name;
  std::string base;
  Representation rep;
};

struct MatchedPairDoc {
  std::string name;
  std::string a, b;
  MatchedPair pair;
};

struct BialgebraDoc {
  std::string name;
  std::string primal, dual;
  Bialgebra bialgebra;
};

struct RBDoc {
  std::string name;
  std::string base;
  RBOperator op;
};

struct AlgebraDoc {
  Algebra algebra;
  /// Flavor written in the header (the stored algebra carries it only when verified).
  Flavor declared = Flavor::unchecked;
};

using Document = std::variant<AlgebraDoc, TensorDoc, FormDoc, RepDoc, MatchedPairDoc, BialgebraDoc, RBDoc>;

struct ParseOptions {
  /// Reject algebras whose declared flavor fails verification.
  bool verify_flavor = true;
  /// Replace every header field by this one.
  std::optional<FieldSpec> field_override;
};

class Workspace {
 public:
  std::vector<Document> documents;

  template <typename T>
  std::vector<const T*> all() const {
    std::vector<const T*> out;
    for (const auto& d : documents)
      if (auto p = std::get_if<T>(&d)) out.push_back(p);
    return out;
  }

  const Algebra& algebra(const std::string& name) const {
    for (const auto* d : all<AlgebraDoc>())
      if (d->algebra.name() == name) return d->algebra;
    throw std::out_of_range("no algebra named '" + name + "'");
  }

  void add(Document d) { documents.push_back(std::move(d)); }
};

// --- lexing -------------------------------------------------------------------------

namespace detail {

struct Token {
  std::string text;
  int column;
};

inline std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (i < line.size()) {
    if (is_space(line[i])) {
      ++i;
      continue;
    }
    if (line[i] == '#') break;
    std::size_t start = i;
    if (line[i] == ':' || line[i] == ';' || line[i] == '=') {
      out.push_back({std::string(1, line[i]), static_cast<int>(start + 1)});
      ++i;
      continue;
    }
    while (i < line.size() && !is_space(line[i]) && line[i] != '#' && line[i] != ':' && line[i] != ';' && line[i] != '=') ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start + 1)});
  }
  return out;
}

class LineCursor {
 public:
  LineCursor(std::vector<Token> tokens, int line) : t_(std::move(tokens)), line_(line) {}

  bool done() const { return pos_ >= t_.size(); }
  int line() const { return line_; }
  int column() const { return done() ? (t_.empty() ? 1 : t_.back().column + static_cast<int>(t_.back().text.size())) : t_[pos_].column; }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, column(), msg); }
  [[noreturn]] void fail_at(const Token& t, const std::string& msg) const { throw ParseError(line_, t.column, msg); }

  const Token& next(const char* what) {
    if (done()) fail(std::string("expected ") + what);
    return t_[pos_++];
  }
  const Token& peek() const { return t_[pos_]; }

  void expect(const std::string& word) {
    const auto& t = next(("'" + word + "'").c_str());
    if (t.text != word) fail_at(t, "expected '" + word + "', found '" + t.text + "'");
  }

  int index(int n) {
    const auto& t = next("an index");
    if (t.text.empty() || t.text.find_first_not_of("0123456789") != std::string::npos) fail_at(t, "malformed index '" + t.text + "'");
    long v = 0;
    try {
      v = std::stol(t.text);
    } catch (const std::exception&) {
      fail_at(t, "malformed index '" + t.text + "'");
    }
    if (v < 1 || v > n) fail_at(t, "index " + t.text + " out of range 1.." + std::to_string(n));
    return static_cast<int>(v - 1);
  }

  int positive(const char* what) {
    const auto& t = next(what);
    if (t.text.empty() || t.text.find_first_not_of("0123456789") != std::string::npos || t.text.size() > 6 || std::stoi(t.text) < 1)
      fail_at(t, std::string("malformed ") + what + " '" + t.text + "'");
    return std::stoi(t.text);
  }

  Scalar scalar(const FieldSpec& f) {
    const auto& t = next("a coefficient");
    return scalar_of(t, f);
  }

  Scalar scalar_of(const Token& t, const FieldSpec& f) const {
    try {
      return f.parse_scalar(t.text);
    } catch (const std::exception& e) {
      fail_at(t, e.what());
    }
  }

  void end() {
    if (!done()) fail("unexpected '" + t_[pos_].text + "'");
  }

 private:
  std::vector<Token> t_;
  std::size_t pos_ = 0;
  int line_;
};

inline FieldSpec parse_field(LineCursor& c, const ParseOptions& opt) {
  const auto& t = c.next("a field");
  std::string text = t.text;
  // `:` is its own token, so Fp:p arrives as three tokens
  if (!c.done() && c.peek().text == ":") {
    c.next(":");
    text += ":" + c.next("a prime").text;
  }
  FieldSpec f;
  try {
    f = FieldSpec::parse(text);
  } catch (const std::exception& e) {
    c.fail_at(t, e.what());
  }
  return opt.field_override ? *opt.field_override : f;
}

/// Parses "a b ; c d" into an m×m matrix.
inline Matrix parse_matrix(LineCursor& c, int m, const FieldSpec& f) {
  Matrix out(m, m);
  for (int i = 0; i < m; ++i) {
    if (i > 0) c.expect(";");
    for (int j = 0; j < m; ++j) out(i, j) = c.scalar(f);
  }
  c.end();
  return out;
}

inline std::string format_matrix(const Matrix& m) {
  std::string out;
  for (int i = 0; i < m.rows(); ++i) {
    if (i > 0) out += " ;";
    for (int j = 0; j < m.cols(); ++j) out += " " + m(i, j).to_string();
  }
  return out;
}

struct RawBlock {
  std::vector<Token> header;
  int header_line;
  std::vector<LineCursor> lines;
};

inline const std::set<std::string>& header_words() {
  static const std::set<std::string> words{"algebra", "tensor2", "form", "rep", "matched-pair", "bialgebra", "rb-operator"};
  return words;
}

}  // namespace detail

// --- parsing ---------------------------------------------------------------------------

namespace detail {

inline AlgebraDoc parse_algebra_block(RawBlock& b, const ParseOptions& opt) {
  LineCursor h(b.header, b.header_line);
  h.expect("algebra");
  std::string name = h.next("a name").text;
  h.expect("dim");
  int n = h.positive("dimension");
  h.expect("field");
  FieldSpec f = parse_field(h, opt);
  h.expect("flavor");
  const auto& ft = h.next("a flavor");
  Flavor fl;
  try {
    fl = parse_flavor(ft.text);
  } catch (const std::exception& e) {
    h.fail_at(ft, e.what());
  }
  h.end();
  ProductTable table;
  for (auto& c : b.lines) {
    c.expect("prod");
    int i = c.index(n), j = c.index(n);
    c.expect("->");
    Vector v(static_cast<std::size_t>(n), f.make(0));
    std::set<int> seen;
    bool first = true;
    while (!c.done()) {
      if (!first) c.expect("+");
      first = false;
      const auto& t = c.next("a term");
      auto star = t.text.find('*');
      Scalar coeff = f.make(1);
      std::string idx = t.text;
      if (star != std::string::npos) {
        coeff = c.scalar_of(Token{t.text.substr(0, star), t.column}, f);
        idx = t.text.substr(star + 1);
      }
      if (idx.empty() || idx.find_first_not_of("0123456789") != std::string::npos || idx.size() > 6)
        c.fail_at(t, "malformed term '" + t.text + "'");
      int k = std::stoi(idx);
      if (k < 1 || k > n) c.fail_at(t, "index " + idx + " out of range 1.." + std::to_string(n));
      if (!seen.insert(k).second) c.fail_at(t, "duplicate basis index " + idx + " in product");
      v[static_cast<std::size_t>(k - 1)] = coeff;
    }
    if (first) c.fail("expected at least one term (omit the line for a zero product)");
    if (!table.emplace(std::pair{i, j}, v).second)
      throw ParseError(c.line(), 1, "duplicate product entry for (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
  }
  Algebra a(name, n, f, table, Flavor::unchecked);
  AlgebraDoc doc{a, fl};
  if (fl != Flavor::unchecked) {
    try {
      doc.algebra = a.with_flavor(fl);
    } catch (const std::invalid_argument& e) {
      if (opt.verify_flavor) throw ParseError(b.header_line, 1, e.what());
    }
  }
  return doc;
}

inline std::map<std::pair<int, int>, Scalar> parse_entries(RawBlock& b, const char* key, int n, const FieldSpec& f) {
  std::map<std::pair<int, int>, Scalar> out;
  for (auto& c : b.lines) {
    c.expect(key);
    int i = c.index(n), j = c.index(n);
    c.expect("=");
    Scalar s = c.scalar(f);
    c.end();
    if (!out.emplace(std::pair{i, j}, s).second)
      throw ParseError(c.line(), 1, std::string("duplicate entry ") + key + " " + std::to_string(i + 1) + " " + std::to_string(j + 1));
  }
  return out;
}

inline TensorDoc parse_tensor_block(RawBlock& b, const ParseOptions& opt) {
  LineCursor h(b.header, b.header_line);
  h.expect("tensor2");
  std::string name = h.next("a name").text;
  h.expect("dim");
  int n = h.positive("dimension");
  h.expect("field");
  FieldSpec f = parse_field(h, opt);
  h.end();
  Tensor2 t(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t(i, j) = f.make(0);
  for (auto& [ij, s] : parse_entries(b, "r", n, f)) t(ij.first, ij.second) = s;
  return TensorDoc{name, f, t};
}

inline FormDoc parse_form_block(RawBlock& b, const ParseOptions& opt) {
  LineCursor h(b.header, b.header_line);
  h.expect("form");
  std::string name = h.next("a name").text;
  h.expect("dim");
  int n = h.positive("dimension");
  h.expect("field");
  FieldSpec f = parse_field(h, opt);
  bool skew = false, nondeg = false;
  while (!h.done()) {
    const auto& t = h.next("a declaration");
    if (t.text == "skew")
      skew = true;
    else if (t.text == "nondegenerate")
      nondeg = true;
    else
      h.fail_at(t, "unknown form declaration '" + t.text + "'");
  }
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = f.make(0);
  for (auto& [ij, s] : parse_entries(b, "w", n, f)) m(ij.first, ij.second) = s;
  BilinearForm w(m);
  if (skew && !w.is_skew()) throw ParseError(b.header_line, 1, "form '" + name + "' is declared skew but is not skew-symmetric");
  if (nondeg && !w.is_nondegenerate()) throw ParseError(b.header_line, 1, "form '" + name + "' is declared nondegenerate but is singular");
  return FormDoc{name, f, w, skew, nondeg};
}

/// Reads `key i : rows` lines into operator families (zero when omitted).
inline std::map<std::string, std::vector<Matrix>> parse_operator_lines(RawBlock& b, const std::map<std::string, std::pair<int, int>>& shapes,
                                                                       const FieldSpec& f) {
  std::map<std::string, std::vector<Matrix>> out;
  std::map<std::string, std::vector<bool>> seen;
  for (auto& [key, shape] : shapes) {
    Matrix z(shape.second, shape.second);
    for (int i = 0; i < shape.second; ++i)
      for (int j = 0; j < shape.second; ++j) z(i, j) = f.make(0);
    out[key] = std::vector<Matrix>(static_cast<std::size_t>(shape.first), z);
    seen[key] = std::vector<bool>(static_cast<std::size_t>(shape.first), false);
  }
  for (auto& c : b.lines) {
    const auto& kt = c.next("an operator name");
    auto it = shapes.find(kt.text);
    if (it == shapes.end()) c.fail_at(kt, "unexpected entry '" + kt.text + "'");
    int i = c.index(it->second.first);
    c.expect(":");
    if (seen[kt.text][static_cast<std::size_t>(i)]) c.fail_at(kt, "duplicate entry " + kt.text + " " + std::to_string(i + 1));
    seen[kt.text][static_cast<std::size_t>(i)] = true;
    out[kt.text][static_cast<std::size_t>(i)] = parse_matrix(c, it->second.second, f);
  }
  return out;
}

inline const Algebra& lookup_algebra(const Workspace& w, LineCursor& h, const Token& t) {
  for (const auto* d : w.all<AlgebraDoc>())
    if (d->algebra.name() == t.text) return d->algebra;
  h.fail_at(t, "unknown algebra '" + t.text + "' (define it earlier in the file)");
}

inline RepDoc parse_rep_block(RawBlock& b, const Workspace& w) {
  LineCursor h(b.header, b.header_line);
  h.expect("rep");
  std::string name = h.next("a name").text;
  h.expect("base");
  const auto& bt = h.next("an algebra name");
  const Algebra& base = lookup_algebra(w, h, bt);
  h.expect("dim");
  int m = h.positive("dimension");
  h.end();
  auto ops = parse_operator_lines(b, {{"rho", {base.dim(), m}}, {"mu", {base.dim(), m}}}, base.field());
  return RepDoc{name, bt.text, Representation(base, m, ops["rho"], ops["mu"])};
}

inline MatchedPairDoc parse_matched_pair_block(RawBlock& b, const Workspace& w) {
  LineCursor h(b.header, b.header_line);
  h.expect("matched-pair");
  std::string name = h.next("a name").text;
  h.expect("A");
  const auto& at = h.next("an algebra name");
  const Algebra& A = lookup_algebra(w, h, at);
  h.expect("B");
  const auto& bt = h.next("an algebra name");
  const Algebra& B = lookup_algebra(w, h, bt);
  h.end();
  if (!(A.field() == B.field())) throw ParseError(b.header_line, 1, "matched pair over different fields");
  auto ops = parse_operator_lines(
      b, {{"rho", {A.dim(), B.dim()}}, {"mu", {A.dim(), B.dim()}}, {"rho'", {B.dim(), A.dim()}}, {"mu'", {B.dim(), A.dim()}}}, A.field());
  return MatchedPairDoc{name, at.text, bt.text, MatchedPair(A, B, ops["rho"], ops["mu"], ops["rho'"], ops["mu'"])};
}

inline BialgebraDoc parse_bialgebra_block(RawBlock& b, const Workspace& w) {
  LineCursor h(b.header, b.header_line);
  h.expect("bialgebra");
  std::string name = h.next("a name").text;
  h.expect("primal");
  const auto& pt = h.next("an algebra name");
  const Algebra& P = lookup_algebra(w, h, pt);
  h.expect("dual");
  const auto& dt = h.next("an algebra name");
  const Algebra& D = lookup_algebra(w, h, dt);
  h.end();
  if (!b.lines.empty()) b.lines.front().fail("bialgebra blocks take no entries");
  if (P.dim() != D.dim()) throw ParseError(b.header_line, 1, "primal and dual dimensions differ");
  if (!(P.field() == D.field())) throw ParseError(b.header_line, 1, "primal and dual fields differ");
  return BialgebraDoc{name, pt.text, dt.text, Bialgebra(P, D, name)};
}

inline RBDoc parse_rb_block(RawBlock& b, const Workspace& w) {
  LineCursor h(b.header, b.header_line);
  h.expect("rb-operator");
  std::string name = h.next("a name").text;
  h.expect("base");
  const auto& bt = h.next("an algebra name");
  const Algebra& base = lookup_algebra(w, h, bt);
  h.expect("weight");
  Scalar lambda = h.scalar(base.field());
  h.end();
  int n = base.dim();
  Matrix P(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) P(i, j) = base.field().make(0);
  bool seen = false;
  for (auto& c : b.lines) {
    const auto& kt = c.next("'P'");
    if (kt.text != "P") c.fail_at(kt, "unexpected entry '" + kt.text + "'");
    if (seen) c.fail_at(kt, "duplicate entry P");
    seen = true;
    c.expect(":");
    P = parse_matrix(c, n, base.field());
  }
  return RBDoc{name, bt.text, RBOperator{base, P, lambda}};
}

inline std::string document_name(const Document& d) {
  return std::visit(
      [](const auto& x) -> std::string {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, AlgebraDoc>)
          return x.algebra.name();
        else
          return x.name;
      },
      d);
}

}  // namespace detail

inline Workspace parse_workspace(const std::string& text, const ParseOptions& opt = {}) {
  using namespace detail;
  std::vector<RawBlock> blocks;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    if (header_words().count(toks.front().text)) {
      blocks.push_back(RawBlock{toks, lineno, {}});
    } else {
      if (blocks.empty()) throw ParseError(lineno, toks.front().column, "entry '" + toks.front().text + "' before any block header");
      blocks.back().lines.emplace_back(toks, lineno);
    }
  }
  Workspace w;
  std::set<std::string> names;
  for (auto& b : blocks) {
    const std::string& kind = b.header.front().text;
    Document d;
    if (kind == "algebra")
      d = parse_algebra_block(b, opt);
    else if (kind == "tensor2")
      d = parse_tensor_block(b, opt);
    else if (kind == "form")
      d = parse_form_block(b, opt);
    else if (kind == "rep")
      d = parse_rep_block(b, w);
    else if (kind == "matched-pair")
      d = parse_matched_pair_block(b, w);
    else if (kind == "bialgebra")
      d = parse_bialgebra_block(b, w);
    else
      d = parse_rb_block(b, w);
    auto name = document_name(d);
    if (!names.insert(name).second) throw ParseError(b.header_line, b.header.size() > 1 ? b.header[1].column : 1, "duplicate block name '" + name + "'");
    w.add(std::move(d));
  }
  return w;
}

// --- serialization ------------------------------------------------------------------------

/// Names are single tokens in the text format; whitespace becomes '_'.
inline std::string token_name(std::string s) {
  for (auto& c : s)
    if (c == ' ' || c == '\t' || c == '#' || c == ':' || c == ';' || c == '=') c = '_';
  return s;
}

inline std::string serialize_algebra(const Algebra& a, std::optional<Flavor> declared = std::nullopt) {
  std::string out = "algebra " + token_name(a.name()) + " dim " + std::to_string(a.dim()) + " field " + a.field().to_string() + " flavor " +
                    to_string(declared.value_or(a.flavor())) + "\n";
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) {
      const auto& terms = a.terms(i, j);
      if (terms.empty()) continue;
      out += "prod " + std::to_string(i + 1) + " " + std::to_string(j + 1) + " ->";
      bool first = true;
      for (const auto& t : terms) {
        out += (first ? " " : " + ") + a.field().coerce(t.coeff).to_string() + "*" + std::to_string(t.index + 1);
        first = false;
      }
      out += "\n";
    }
  return out;
}

inline std::string serialize_tensor(const std::string& name, const FieldSpec& f, const Tensor2& t) {
  std::string out = "tensor2 " + token_name(name) + " dim " + std::to_string(t.dim()) + " field " + f.to_string() + "\n";
  for (int i = 0; i < t.dim(); ++i)
    for (int j = 0; j < t.dim(); ++j)
      if (!t(i, j).is_zero()) out += "r " + std::to_string(i + 1) + " " + std::to_string(j + 1) + " = " + f.coerce(t(i, j)).to_string() + "\n";
  return out;
}

inline std::string serialize_form(const FormDoc& d) {
  std::string out = "form " + token_name(d.name) + " dim " + std::to_string(d.form.dim()) + " field " + d.field.to_string();
  if (d.declared_skew) out += " skew";
  if (d.declared_nondegenerate) out += " nondegenerate";
  out += "\n";
  const auto& m = d.form.matrix();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) out += "w " + std::to_string(i + 1) + " " + std::to_string(j + 1) + " = " + d.field.coerce(m(i, j)).to_string() + "\n";
  return out;
}

namespace detail {

inline std::string operator_lines(const std::string& key, const std::vector<Matrix>& ops, const FieldSpec& f) {
  std::string out;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (ops[i].is_zero()) continue;
    Matrix m = ops[i];
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c) m(r, c) = f.coerce(m(r, c));
    out += key + " " + std::to_string(i + 1) + " :" + format_matrix(m) + "\n";
  }
  return out;
}

}  // namespace detail

inline std::string serialize_document(const Document& d) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, AlgebraDoc>) {
          return serialize_algebra(x.algebra, x.declared);
        } else if constexpr (std::is_same_v<T, TensorDoc>) {
          return serialize_tensor(x.name, x.field, x.tensor);
        } else if constexpr (std::is_same_v<T, FormDoc>) {
          return serialize_form(x);
        } else if constexpr (std::is_same_v<T, RepDoc>) {
          const auto& f = x.rep.base().field();
          return "rep " + x.name + " base " + x.base + " dim " + std::to_string(x.rep.space_dim()) + "\n" +
                 detail::operator_lines("rho", x.rep.rho_family(), f) + detail::operator_lines("mu", x.rep.mu_family(), f);
        } else if constexpr (std::is_same_v<T, MatchedPairDoc>) {
          const auto& f = x.pair.A().field();
          return "matched-pair " + x.name + " A " + x.a + " B " + x.b + "\n" +
                 detail::operator_lines("rho", x.pair.action_on_B().rho_family(), f) +
                 detail::operator_lines("mu", x.pair.action_on_B().mu_family(), f) +
                 detail::operator_lines("rho'", x.pair.action_on_A().rho_family(), f) +
                 detail::operator_lines("mu'", x.pair.action_on_A().mu_family(), f);
        } else if constexpr (std::is_same_v<T, BialgebraDoc>) {
          return "bialgebra " + x.name + " primal " + x.primal + " dual " + x.dual + "\n";
        } else {
          const auto& f = x.op.base.field();
          std::string out = "rb-operator " + x.name + " base " + x.base + " weight " + f.coerce(x.op.weight).to_string() + "\n";
          if (!x.op.P.is_zero()) {
            Matrix m = x.op.P;
            for (int r = 0; r < m.rows(); ++r)
              for (int c = 0; c < m.cols(); ++c) m(r, c) = f.coerce(m(r, c));
            out += "P :" + detail::format_matrix(m) + "\n";
          }
          return out;
        }
      },
      d);
}

inline std::string serialize_workspace(const Workspace& w) {
  std::string out;
  for (std::size_t i = 0; i < w.documents.size(); ++i) {
    if (i) out += "\n";
    out += serialize_document(w.documents[i]);
  }
  return out;
}

/// Convenience: the single algebra in `text`.
inline Algebra parse_algebra(const std::string& text, const ParseOptions& opt = {}) {
  auto w = parse_workspace(text, opt);
  auto as = w.all<AlgebraDoc>();
  if (as.size() != 1) throw ParseError(1, 1, "expected exactly one algebra block, found " + std::to_string(as.size()));
  return as.front()->algebra;
}

/// Tensor lines `r i j = c`, with or without a header; a headerless file takes
/// its dimension and field from `context`.
inline Tensor2 parse_tensor(const std::string& text, const Algebra& context) {
  bool has_header = false;
  {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      auto toks = detail::tokenize(line);
      if (toks.empty()) continue;
      has_header = toks.front().text == "tensor2";
      break;
    }
  }
  std::string full = has_header ? text
                                : "tensor2 r dim " + std::to_string(context.dim()) + " field " + context.field().to_string() + "\n" + text;
  ParseOptions opt;
  opt.field_override = context.field();
  Workspace w;
  try {
    w = parse_workspace(full, opt);
  } catch (const ParseError& e) {
    if (has_header) throw;
    throw ParseError(e.line() - 1, e.column(), std::string(e.what()).substr(std::string(e.what()).find(": ") + 2));
  }
  auto ts = w.all<TensorDoc>();
  if (ts.size() != 1) throw ParseError(1, 1, "expected exactly one tensor");
  if (ts.front()->tensor.dim() != context.dim()) throw ParseError(1, 1, "tensor dimension differs from the algebra dimension");
  return ts.front()->tensor;
}

}  // namespace zinbiel
