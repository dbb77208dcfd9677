#include "stringnet/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "stringnet/errors.hpp"

namespace sn {

namespace {

class ExprParser {
 public:
  ExprParser(const std::string& s, const NumberField* K, const std::map<std::string, Scalar>& vars,
             int line, int col)
      : s_(s), K_(K), vars_(vars), line_(line), col0_(col) {}

  Scalar run() {
    Scalar v = expr();
    skip();
    if (i_ < s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("line " + std::to_string(line_) + ", column " +
                         std::to_string(col0_ + static_cast<int>(i_)) + ": " + msg,
                     line_, col0_ + static_cast<int>(i_));
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  Scalar expr() {
    Scalar v = term();
    for (;;) {
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else return v;
    }
  }
  Scalar term() {
    Scalar v = factor();
    for (;;) {
      if (eat('*')) v *= factor();
      else if (eat('/')) {
        Scalar d = factor();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else return v;
    }
  }
  Scalar factor() {
    if (eat('-')) return -factor();
    if (eat('+')) return factor();
    Scalar b = primary();
    if (eat('^')) {
      skip();
      bool neg = eat('-');
      skip();
      size_t st = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (st == i_) fail("expected an integer exponent");
      long e = std::stol(s_.substr(st, i_ - st));
      Scalar r = Scalar::one(K_);
      for (long k = 0; k < e; ++k) r *= b;
      if (neg) {
        if (r.is_zero()) fail("division by zero");
        r = r.inv();
      }
      return r;
    }
    return b;
  }
  Scalar primary() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end of expression");
    char c = s_[i_];
    if (c == '(') {
      ++i_;
      Scalar v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t st = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (i_ < s_.size() && s_[i_] == '.') fail("decimal literals are not exact; write a fraction");
      return Scalar(K_, {Rational(mpz_class(s_.substr(st, i_ - st)))});
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t st = i_;
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
      std::string id = s_.substr(st, i_ - st);
      if (K_->degree() > 1 && id == K_->generator()) return Scalar::generator(K_);
      auto it = vars_.find(id);
      if (it != vars_.end()) return it->second;
      i_ = st;
      fail("unknown name '" + id + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& s_;
  const NumberField* K_;
  const std::map<std::string, Scalar>& vars_;
  int line_, col0_;
  size_t i_ = 0;
};

struct Tok {
  std::string s;
  int col;
};

struct Line {
  int no = 0;
  std::vector<Tok> toks;
  bool has_expr = false;
  std::string expr;
  int expr_col = 0;
};

std::vector<Line> split_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int no = 0;
  while (std::getline(in, raw)) {
    ++no;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    Line L;
    L.no = no;
    std::string head = raw;
    auto eq = raw.find('=');
    if (eq != std::string::npos) {
      head = raw.substr(0, eq);
      L.has_expr = true;
      L.expr = raw.substr(eq + 1);
      L.expr_col = static_cast<int>(eq) + 2;
    }
    size_t i = 0;
    while (i < head.size()) {
      if (std::isspace(static_cast<unsigned char>(head[i]))) {
        ++i;
        continue;
      }
      size_t st = i;
      if (head[i] == ':') ++i;
      else
        while (i < head.size() && !std::isspace(static_cast<unsigned char>(head[i])) && head[i] != ':') ++i;
      L.toks.push_back({head.substr(st, i - st), static_cast<int>(st) + 1});
    }
    if (L.toks.empty() && !L.has_expr) continue;
    out.push_back(std::move(L));
  }
  return out;
}

[[noreturn]] void fail_at(const Line& L, int col, const std::string& msg) {
  throw ParseError("line " + std::to_string(L.no) + ", column " + std::to_string(col) + ": " + msg, L.no,
                   col);
}
[[noreturn]] void fail_tok(const Line& L, size_t k, const std::string& msg) {
  fail_at(L, k < L.toks.size() ? L.toks[k].col : (L.toks.empty() ? 1 : L.toks.back().col), msg);
}

long to_int(const Line& L, size_t k) {
  if (k >= L.toks.size()) fail_tok(L, k, "missing integer");
  const std::string& s = L.toks[k].s;
  char* end = nullptr;
  long v = std::strtol(s.c_str(), &end, 10);
  if (s.empty() || *end) fail_tok(L, k, "expected an integer, got '" + s + "'");
  return v;
}

struct FEntry {
  int line;
  Label a, b, c, d, e, f;
  int m[4];
  Scalar val;
};

class CategoryParser {
 public:
  CategoryParser(const std::string& text, std::string origin) {
    doc_.origin = std::move(origin);
    doc_.text = text;
    lines_ = split_lines(text);
  }

  CategoryDoc run() {
    size_t k = 0;
    for (; k < lines_.size(); ++k) {
      const std::string& key = lines_[k].toks.empty() ? std::string() : lines_[k].toks[0].s;
      if (key == "algebra" || key == "bimodule" || key == "gen") break;
      category_line(lines_[k]);
    }
    finalize();
    if (!doc_.structure.ok()) return std::move(doc_);
    for (; k < lines_.size(); ++k) second_line(lines_[k]);
    flush_algebra();
    flush_bimodule();
    return std::move(doc_);
  }

 private:
  const NumberField* K() const { return field_ ? field_.get() : NumberField::rationals().get(); }

  Scalar expr(const Line& L) {
    if (!L.has_expr) fail_tok(L, L.toks.size(), "expected '= expression'");
    return parse_scalar(L.expr, K(), doc_.vars, L.no, L.expr_col);
  }

  Label label(const Line& L, size_t k) {
    if (k >= L.toks.size()) fail_tok(L, k, "missing label");
    auto it = label_ix_.find(L.toks[k].s);
    if (it == label_ix_.end()) fail_tok(L, k, "unknown label '" + L.toks[k].s + "'");
    return it->second;
  }

  void need_labels(const Line& L) {
    if (labels_.empty()) fail_tok(L, 0, "labels must be declared first");
  }

  void category_line(const Line& L) {
    if (L.toks.empty()) fail_at(L, 1, "expected a keyword");
    const std::string& key = L.toks[0].s;
    size_t n = L.toks.size();
    if (key == "name") {
      if (n != 2) fail_tok(L, 1, "expected: name <identifier>");
      name_ = L.toks[1].s;
    } else if (key == "field") {
      if (field_ || !labels_.empty()) fail_tok(L, 0, "field must be declared once, before labels");
      if (n == 2 && L.toks[1].s == "Q") {
        field_ = NumberField::rationals();
        return;
      }
      if (n < 4 || L.toks[2].s != "minpoly") fail_tok(L, 1, "expected: field <generator> minpoly c0 ... cd [hint x]");
      std::vector<Rational> mp;
      std::optional<double> hint;
      size_t k = 3;
      for (; k < n && L.toks[k].s != "hint"; ++k) {
        try {
          mp.push_back(Rational(L.toks[k].s));
          mp.back().canonicalize();
        } catch (const std::exception&) {
          fail_tok(L, k, "expected a rational coefficient");
        }
      }
      if (k < n) {
        if (k + 2 != n) fail_tok(L, k, "expected: hint <decimal>");
        try {
          hint = std::stod(L.toks[k + 1].s);
        } catch (const std::exception&) {
          fail_tok(L, k + 1, "expected a decimal");
        }
      }
      if (mp.size() < 2 || mp.back() != 1) fail_tok(L, 3, "minimal polynomial must be monic of degree >= 1");
      try {
        field_ = std::make_shared<NumberField>("Q(" + L.toks[1].s + ")", L.toks[1].s, mp, hint);
      } catch (const Error& e) {
        fail_tok(L, 3, e.what());
      }
    } else if (key == "let") {
      if (n != 2 || !L.has_expr) fail_tok(L, 1, "expected: let <name> = <expression>");
      doc_.vars[L.toks[1].s] = expr(L);
    } else if (key == "labels") {
      if (!labels_.empty()) fail_tok(L, 0, "labels declared twice");
      for (size_t k = 1; k < n; ++k) {
        if (label_ix_.count(L.toks[k].s)) fail_tok(L, k, "duplicate label");
        label_ix_[L.toks[k].s] = static_cast<Label>(labels_.size());
        labels_.push_back(L.toks[k].s);
      }
      if (labels_.empty()) fail_tok(L, 1, "no labels");
      int r = static_cast<int>(labels_.size());
      N_.assign(static_cast<size_t>(r) * r * r, 0);
      dual_.assign(r, -1);
    } else if (key == "unit") {
      need_labels(L);
      if (n != 2) fail_tok(L, 1, "expected: unit <label>");
      unit_ = label(L, 1);
    } else if (key == "dual") {
      need_labels(L);
      if (n != 3) fail_tok(L, 1, "expected: dual <label> <label>");
      Label a = label(L, 1), b = label(L, 2);
      dual_[a] = b;
      dual_[b] = a;
    } else if (key == "fuse") {
      need_labels(L);
      if (n < 4 || L.toks[3].s != ":") fail_tok(L, 1, "expected: fuse <a> <b> : <c> ...");
      Label a = label(L, 1), b = label(L, 2);
      int r = static_cast<int>(labels_.size());
      for (size_t k = 4; k < n; ++k) {
        if (L.toks[k].s == "-") continue;
        Label c = label(L, k);
        ++N_[(static_cast<size_t>(a) * r + b) * r + c];
      }
    } else if (key == "F") {
      need_labels(L);
      if (n != 7 && n != 11) fail_tok(L, 1, "expected: F a b c d e f [m1 m2 m3 m4] = <expression>");
      FEntry f;
      f.line = L.no;
      f.a = label(L, 1), f.b = label(L, 2), f.c = label(L, 3), f.d = label(L, 4);
      f.e = label(L, 5), f.f = label(L, 6);
      for (int k = 0; k < 4; ++k) f.m[k] = n == 11 ? static_cast<int>(to_int(L, 7 + k)) - 1 : 0;
      f.val = expr(L);
      F_.push_back(f);
      F_lines_.push_back(&L);
    } else if (key == "F_default") {
      if (n != 2 || L.toks[1].s != "identity") fail_tok(L, 1, "expected: F_default identity");
      F_default_ = true;
    } else if (key == "pivotal") {
      need_labels(L);
      if (n != 2) fail_tok(L, 1, "expected: pivotal <label> = <expression>");
      pivotal_[label(L, 1)] = expr(L);
    } else if (key == "spherical") {
      if (n != 1) fail_tok(L, 1, "unexpected argument");
      spherical_ = true;
    } else {
      fail_tok(L, 0, "unknown key '" + key + "'");
    }
  }

  void finalize() {
    if (labels_.empty()) throw ParseError(doc_.origin + ": no labels declared", 0, 0);
    if (unit_ < 0) throw ParseError(doc_.origin + ": no unit declared", 0, 0);
    int r = static_cast<int>(labels_.size());
    auto Nf = [&](Label a, Label b, Label c) { return N_[(static_cast<size_t>(a) * r + b) * r + c]; };
    for (Label a = 0; a < r; ++a)
      if (dual_[a] < 0) {
        dual_[a] = a;
        for (Label b = 0; b < r; ++b)
          if (Nf(a, b, unit_) > 0) {
            dual_[a] = b;
            break;
          }
      }
    FieldPtr K = field_ ? field_ : NumberField::rationals();
    auto C = std::make_shared<FusionCategory>(name_.empty() ? doc_.origin : name_, K, labels_, unit_, dual_);
    for (Label a = 0; a < r; ++a)
      for (Label b = 0; b < r; ++b)
        for (Label c = 0; c < r; ++c)
          if (Nf(a, b, c)) C->set_N(a, b, c, Nf(a, b, c));
    std::map<std::tuple<Label, Label, Label, Label>, Matrix> blocks;
    for (size_t k = 0; k < F_.size(); ++k) {
      const FEntry& f = F_[k];
      const Line& L = *F_lines_[k];
      auto rows = C->F_rows(f.a, f.b, f.c, f.d);
      auto cols = C->F_cols(f.a, f.b, f.c, f.d);
      auto key = std::make_tuple(f.a, f.b, f.c, f.d);
      if (!blocks.count(key)) blocks[key] = Matrix(int(rows.size()), int(cols.size()));
      int i = -1, j = -1;
      for (size_t q = 0; q < rows.size(); ++q)
        if (rows[q] == FIndex{f.e, f.m[0], f.m[1]}) i = int(q);
      for (size_t q = 0; q < cols.size(); ++q)
        if (cols[q] == FIndex{f.f, f.m[2], f.m[3]}) j = int(q);
      if (i < 0 || j < 0) fail_tok(L, 5, "F entry is not admissible for the fusion rules");
      blocks[key](i, j) = f.val;
    }
    for (auto& [key, M] : blocks) {
      auto [a, b, c, d] = key;
      if (M.rows() != M.cols()) {
        doc_.structure.add("fusion associativity",
                           "(" + labels_[a] + "," + labels_[b] + "," + labels_[c] + ";" + labels_[d] + ")");
        continue;
      }
      try {
        C->set_F(a, b, c, d, M);
      } catch (const ContractViolation&) {
        doc_.structure.add("F invertibility",
                           "(" + labels_[a] + "," + labels_[b] + "," + labels_[c] + ";" + labels_[d] + ")");
      }
    }
    if (F_default_) C->fill_default_F();
    for (auto& [a, t] : pivotal_) C->set_pivotal(a, t);
    C->set_spherical_declared(spherical_);
    doc_.cat = C;
    if (!doc_.structure.ok()) return;
    doc_.structure = derive_duality(*C);
    if (doc_.structure.ok()) doc_.engine = std::make_shared<Engine>(C);
  }

  Site site_of(const Line& L, size_t from) {
    Site s;
    for (size_t k = from; k < L.toks.size(); ++k) s.push_back(label(L, k));
    if (s.empty()) fail_tok(L, from, "expected labels");
    return s;
  }

  AlgPtr find_alg(const Line& L, size_t k) {
    if (k >= L.toks.size()) fail_tok(L, k, "missing algebra name");
    if (L.toks[k].s == "1") return trivial_;
    AlgPtr a = doc_.algebra(L.toks[k].s);
    if (!a) fail_tok(L, k, "unknown algebra '" + L.toks[k].s + "'");
    return a;
  }

  void flush_algebra() {
    if (!pending_alg_) return;
    auto A = std::make_shared<FrobAlgebra>(algebra_from_coords(*doc_.engine, pending_alg_name_,
                                                               pending_alg_site_, alg_coords_));
    doc_.algebras.push_back(A);
    pending_alg_ = false;
  }

  void flush_bimodule() {
    if (!pending_bim_) return;
    auto M = std::make_shared<Bimodule>(bimodule_from_coords(
        *doc_.engine, pending_bim_name_, bim_l_, bim_r_, pending_bim_site_, bim_coords_));
    doc_.bimodules.push_back(M);
    pending_bim_ = false;
  }

  void check_new_name(const Line& L, size_t k) {
    if (k >= L.toks.size()) fail_tok(L, k, "missing name");
    const std::string& s = L.toks[k].s;
    if (s == "1" || doc_.algebra(s) || doc_.bimodule(s) || (pending_alg_ && pending_alg_name_ == s))
      fail_tok(L, k, "name '" + s + "' already in use");
  }

  std::tuple<int, int, int, int> coord_key(const Line& L) {
    size_t n = L.toks.size();
    if (n != 4 && n != 5) fail_tok(L, 1, "expected three 1-based summand indices and an optional vertex index");
    int i = static_cast<int>(to_int(L, 1)) - 1, j = static_cast<int>(to_int(L, 2)) - 1;
    int k = static_cast<int>(to_int(L, 3)) - 1, mu = n == 5 ? static_cast<int>(to_int(L, 4)) - 1 : 0;
    return {i, j, k, mu};
  }

  void second_line(const Line& L) {
    const std::string& key = L.toks.empty() ? std::string() : L.toks[0].s;
    size_t n = L.toks.size();
    const Engine& E = *doc_.engine;
    if (!trivial_) trivial_ = trivial_algebra(E);
    try {
      if (key == "algebra") {
        flush_algebra();
        flush_bimodule();
        check_new_name(L, 1);
        if (n < 4) fail_tok(L, 2, "expected: algebra <name> group|on <labels>");
        if (L.toks[2].s == "group") {
          doc_.algebras.push_back(std::make_shared<FrobAlgebra>(group_algebra(E, L.toks[1].s, site_of(L, 3))));
        } else if (L.toks[2].s == "on") {
          pending_alg_ = true;
          pending_alg_name_ = L.toks[1].s;
          pending_alg_site_ = site_of(L, 3);
          alg_coords_ = {};
        } else {
          fail_tok(L, 2, "expected 'group' or 'on'");
        }
      } else if (key == "mult" || key == "comult") {
        if (!pending_alg_) fail_tok(L, 0, key + " outside an 'algebra ... on' block");
        auto k = coord_key(L);
        (key == "mult" ? alg_coords_.mult : alg_coords_.comult)[k] = expr(L);
      } else if (key == "unit" || key == "counit") {
        if (!pending_alg_) fail_tok(L, 0, key + " outside an 'algebra ... on' block");
        if (n != 2) fail_tok(L, 1, "expected: " + key + " <summand> = <expression>");
        (key == "unit" ? alg_coords_.unit : alg_coords_.counit)[int(to_int(L, 1)) - 1] = expr(L);
      } else if (key == "bimodule") {
        flush_algebra();
        flush_bimodule();
        check_new_name(L, 1);
        if (n < 4) fail_tok(L, 2, "expected: bimodule <name> regular|free|over ...");
        const std::string& kind = L.toks[2].s;
        if (kind == "regular") {
          if (n != 4) fail_tok(L, 3, "expected: bimodule <name> regular <algebra>");
          doc_.bimodules.push_back(std::make_shared<Bimodule>(regular_bimodule(E, find_alg(L, 3), L.toks[1].s)));
        } else if (kind == "free") {
          if (n < 6) fail_tok(L, 3, "expected: bimodule <name> free <algebra> <labels> <algebra>");
          AlgPtr a = find_alg(L, 3), b = find_alg(L, n - 1);
          Site s;
          for (size_t k = 4; k + 1 < n; ++k) s.push_back(label(L, k));
          doc_.bimodules.push_back(std::make_shared<Bimodule>(free_bimodule(E, a, s, b, L.toks[1].s)));
        } else if (kind == "over") {
          if (n < 7 || L.toks[5].s != "on") fail_tok(L, 3, "expected: bimodule <name> over <A> <B> on <labels>");
          pending_bim_ = true;
          pending_bim_name_ = L.toks[1].s;
          bim_l_ = find_alg(L, 3);
          bim_r_ = find_alg(L, 4);
          pending_bim_site_ = site_of(L, 6);
          bim_coords_ = {};
        } else {
          fail_tok(L, 2, "expected 'regular', 'free' or 'over'");
        }
      } else if (key == "left" || key == "right") {
        if (!pending_bim_) fail_tok(L, 0, key + " outside a 'bimodule ... over' block");
        auto k = coord_key(L);
        (key == "left" ? bim_coords_.left : bim_coords_.right)[k] = expr(L);
      } else if (key == "gen") {
        flush_algebra();
        flush_bimodule();
        if (n < 3) fail_tok(L, 1, "expected: gen bc|frob circle|interval ...");
        std::vector<std::string> rest;
        for (size_t k = 2; k < n; ++k) rest.push_back(L.toks[k].s);
        GeneratorDecl g;
        if (L.toks[1].s == "bc") g.c = parse_cdec(doc_, rest, L.no);
        else if (L.toks[1].s == "frob") {
          g.frob = true;
          g.f = parse_fdec(doc_, rest, L.no);
        } else fail_tok(L, 1, "expected 'bc' or 'frob'");
        doc_.generators.push_back(std::move(g));
      } else if (key.empty()) {
        fail_at(L, 1, "expected a keyword");
      } else {
        fail_tok(L, 0, "unknown key '" + key + "' (fusion data must precede algebras)");
      }
    } catch (const MalformedDecoration& e) {
      fail_tok(L, 0, e.what());
    }
  }

  CategoryDoc doc_;
  std::vector<Line> lines_;
  FieldPtr field_;
  std::string name_;
  std::vector<std::string> labels_;
  std::map<std::string, Label> label_ix_;
  Label unit_ = -1;
  std::vector<Label> dual_;
  std::vector<int> N_;
  std::vector<FEntry> F_;
  std::vector<const Line*> F_lines_;
  bool F_default_ = false;
  std::map<Label, Scalar> pivotal_;
  bool spherical_ = false;

  AlgPtr trivial_;
  bool pending_alg_ = false, pending_bim_ = false;
  std::string pending_alg_name_, pending_bim_name_;
  Site pending_alg_site_, pending_bim_site_;
  AlgebraCoords alg_coords_;
  ActionCoords bim_coords_;
  AlgPtr bim_l_, bim_r_;
};

}  // namespace

Scalar parse_scalar(const std::string& expr, const NumberField* K, const std::map<std::string, Scalar>& vars,
                    int line, int col) {
  return ExprParser(expr, K, vars, line, col).run();
}

AlgPtr CategoryDoc::algebra(const std::string& name) const {
  for (const auto& a : algebras)
    if (a->name == name) return a;
  return nullptr;
}

BimPtr CategoryDoc::bimodule(const std::string& name) const {
  for (const auto& b : bimodules)
    if (b->name == name) return b;
  return nullptr;
}

CategoryDoc parse_category(const std::string& text, const std::string& origin) {
  return CategoryParser(text, origin).run();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CategoryDoc load_category(const std::string& path) { return parse_category(read_file(path), path); }

namespace {

Manifold manifold_of(const std::string& s, int line) {
  if (s == "circle") return Manifold::circle;
  if (s == "interval") return Manifold::interval;
  throw ParseError("line " + std::to_string(line) + ": expected 'circle' or 'interval', got '" + s + "'", line, 1);
}

}  // namespace

CDec parse_cdec(const CategoryDoc& doc, const std::vector<std::string>& toks, int line) {
  if (toks.empty()) throw ParseError("line " + std::to_string(line) + ": empty decoration", line, 1);
  CDec d;
  d.man = manifold_of(toks[0], line);
  const FusionCategory& C = *doc.cat;
  for (size_t k = 1; k < toks.size(); ++k) {
    if (toks[k] == "-") continue;
    Site s;
    std::string t = toks[k];
    size_t st = 0;
    while (st <= t.size()) {
      size_t plus = t.find('+', st);
      std::string part = t.substr(st, plus == std::string::npos ? std::string::npos : plus - st);
      bool rev = !part.empty() && part.back() == '*';
      if (rev) part.pop_back();
      Label a;
      try {
        a = C.label(part);
      } catch (const UnknownLabel&) {
        throw ParseError("line " + std::to_string(line) + ": unknown label '" + part + "'", line, 1);
      }
      s.push_back(rev ? C.dual(a) : a);
      if (plus == std::string::npos) break;
      st = plus + 1;
    }
    d.points.push_back(s);
  }
  return d;
}

FDec parse_fdec(const CategoryDoc& doc, const std::vector<std::string>& toks, int line) {
  if (toks.empty()) throw ParseError("line " + std::to_string(line) + ": empty decoration", line, 1);
  FDec d;
  d.man = manifold_of(toks[0], line);
  auto alg = [&](const std::string& s) -> AlgPtr {
    if (s == "1") return trivial_algebra(*doc.engine);
    AlgPtr a = doc.algebra(s);
    if (!a) throw ParseError("line " + std::to_string(line) + ": unknown algebra '" + s + "'", line, 1);
    return a;
  };
  for (size_t k = 1; k < toks.size(); ++k) {
    if ((k - 1) % 2 == 0) d.segs.push_back(alg(toks[k]));
    else {
      BimPtr b = doc.bimodule(toks[k]);
      if (!b) throw ParseError("line " + std::to_string(line) + ": unknown bimodule '" + toks[k] + "'", line, 1);
      d.points.push_back(b);
    }
  }
  check_decoration(d);
  return d;
}

}  // namespace sn
