#include "conelab/session.hpp"

#include "conelab/errors.hpp"
#include "conelab/parse.hpp"

namespace conelab {

void Session::declare(const std::string& name, const std::string& kind) {
  kinds_.emplace(name, kind);
  order_.push_back(name);
}

namespace {

template <class Map>
const auto& lookup(const Map& map, const std::map<std::string, std::string>& kinds, const std::string& name,
                   const char* kind) {
  const auto it = map.find(name);
  if (it != map.end()) return it->second;
  const auto k = kinds.find(name);
  if (k == kinds.end()) throw InputError(std::string("unknown ") + kind + " '" + name + "'");
  throw InputError("'" + name + "' is a " + k->second + ", not a " + kind);
}

}  // namespace

const Ideal& Session::ideal(const std::string& name) const { return lookup(ideals_, kinds_, name, "ideal"); }
const Point& Session::point(const std::string& name) const { return lookup(points_, kinds_, name, "point"); }
const ComplexDecl& Session::complex(const std::string& name) const {
  return lookup(complexes_, kinds_, name, "complex");
}
const ResolutionDecl& Session::resolution(const std::string& name) const {
  return lookup(resolutions_, kinds_, name, "resolution");
}
const MapDecl& Session::map(const std::string& name) const { return lookup(maps_, kinds_, name, "map"); }
const ChowDecl& Session::chow(const std::string& name) const { return lookup(chows_, kinds_, name, "chow ring"); }

/// Recursive-descent reader for session files; one method per statement.
class SessionParser {
 public:
  explicit SessionParser(std::string_view text) : cur_(tokenize(text)) {}

  Session run() {
    while (!cur_.at_end()) statement();
    return std::move(session_);
  }

 private:
  void statement() {
    const Token head = cur_.expect_identifier("a statement keyword");
    if (head.text == "ring") return ring_statement();
    if (head.text == "ideal") return ideal_statement(head);
    if (head.text == "point") return point_statement(head);
    if (head.text == "complex") return complex_statement();
    if (head.text == "resolution") return resolution_statement();
    if (head.text == "map") return map_statement();
    if (head.text == "chow") return chow_statement();
    if (head.text == "degree") return degree_statement();
    cur_.fail_at(head,
                 "expected ring, ideal, point, complex, resolution, map, chow or degree, found '" + head.text + "'");
  }

  std::string new_name(const std::string& kind) {
    const Token t = cur_.expect_identifier(kind + " name");
    if (session_.has(t.text)) cur_.fail_at(t, "'" + t.text + "' is already declared");
    return t.text;
  }

  const RingPtr& current_ring(const Token& at) const {
    if (!ring_) cur_.fail_at(at, "ring not declared");
    return ring_;
  }

  RingPtr ring_literal(bool with_order) {
    Field field;
    const Token f = cur_.expect_identifier("a field (QQ or GF)");
    if (f.text == "GF") {
      cur_.expect_symbol("(");
      const Token p = cur_.expect_number("a prime");
      cur_.expect_symbol(")");
      try {
        field = Field::prime(static_cast<std::uint32_t>(std::stoul(p.text)));
      } catch (const std::exception& e) {
        cur_.fail_at(p, e.what());
      }
    } else if (f.text != "QQ") {
      cur_.fail_at(f, "expected a field (QQ or GF(p)), found '" + f.text + "'");
    }
    cur_.expect_symbol("[");
    std::vector<std::string> names;
    if (!cur_.at_symbol("]")) do {
        const Token v = cur_.expect_identifier("a variable name");
        for (const auto& n : names)
          if (n == v.text) cur_.fail_at(v, "duplicate variable '" + v.text + "'");
        names.push_back(v.text);
      } while (cur_.accept(","));
    cur_.expect_symbol("]");
    MonomialOrder order = MonomialOrder::grevlex();
    if (with_order && cur_.at_word("order")) {
      cur_.next();
      const Token o = cur_.expect_identifier("a monomial order");
      if (o.text == "lex")
        order = MonomialOrder::lex();
      else if (o.text != "grevlex")
        cur_.fail_at(o, "expected order grevlex or lex, found '" + o.text + "'");
    }
    return PolynomialRing::make(field, std::move(names), std::move(order));
  }

  void ring_statement() {
    ring_ = ring_literal(true);
    cur_.expect_symbol(";");
  }

  void ideal_statement(const Token& head) {
    const RingPtr ring = current_ring(head);
    const std::string name = new_name("ideal");
    cur_.expect_symbol("=");
    std::vector<Polynomial> gens;
    if (!cur_.at_symbol(";")) do
        gens.push_back(parse_expression(cur_, ring));
      while (cur_.accept(","));
    cur_.expect_symbol(";");
    session_.ideals_.emplace(name, Ideal(ring, std::move(gens)));
    session_.declare(name, "ideal");
  }

  Scalar constant(const RingPtr& ring) {
    const Token at = cur_.peek();
    const Polynomial c = parse_expression(cur_, ring);
    if (!c.is_constant()) cur_.fail_at(at, "expected a constant");
    return c.is_zero() ? Scalar::zero(ring->field()) : c.constant_term();
  }

  void point_statement(const Token& head) {
    const RingPtr ring = current_ring(head);
    const std::string name = new_name("point");
    cur_.expect_symbol("=");
    const Token open = cur_.expect_symbol("(");
    Point p;
    if (!cur_.at_symbol(")")) do
        p.push_back(constant(ring));
      while (cur_.accept(","));
    cur_.expect_symbol(")");
    if (p.size() != ring->nvars())
      cur_.fail_at(open, "point has " + std::to_string(p.size()) + " coordinates but the ring has " +
                             std::to_string(ring->nvars()) + " variables");
    cur_.expect_symbol(";");
    session_.points_.emplace(name, std::move(p));
    session_.point_rings_.emplace(name, ring);
    session_.declare(name, "point");
  }

  const Ideal& existing_ideal() {
    const Token t = cur_.expect_identifier("an ideal name");
    try {
      return session_.ideal(t.text);
    } catch (const InputError& e) {
      cur_.fail_at(t, e.what());
    }
  }

  /// [[a, b], [c, d]] (rows) or [] for no columns.
  PolyMatrix matrix(const RingPtr& ring, std::size_t rows) {
    const Token open = cur_.expect_symbol("[");
    std::vector<std::vector<Polynomial>> data;
    if (!cur_.at_symbol("]")) do {
        cur_.expect_symbol("[");
        std::vector<Polynomial> row;
        if (!cur_.at_symbol("]")) do
            row.push_back(parse_expression(cur_, ring));
          while (cur_.accept(","));
        cur_.expect_symbol("]");
        data.push_back(std::move(row));
      } while (cur_.accept(","));
    cur_.expect_symbol("]");
    const std::size_t cols = data.empty() ? 0 : data.front().size();
    if (!data.empty() && data.size() != rows)
      cur_.fail_at(open, "matrix needs " + std::to_string(rows) + " rows, found " + std::to_string(data.size()));
    PolyMatrix m(ring, rows, cols);
    for (std::size_t i = 0; i < data.size(); ++i) {
      if (data[i].size() != cols) cur_.fail_at(open, "matrix rows have different lengths");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = data[i][j];
    }
    return m;
  }

  void complex_statement() {
    const std::string name = new_name("complex");
    cur_.expect_symbol("=");
    const Token kw = cur_.expect_identifier("'matrix'");
    if (kw.text != "matrix") cur_.fail_at(kw, "expected 'matrix'");
    // The ring is only known after 'over'; read the matrix text first.
    std::vector<Token> saved = matrix_tokens();
    cur_.expect_symbol("->");
    const Token omega = cur_.expect_identifier("'omega'");
    if (omega.text != "omega") cur_.fail_at(omega, "expected 'omega'");
    const Token over = cur_.expect_identifier("'over'");
    if (over.text != "over") cur_.fail_at(over, "expected 'over'");
    const Token ideal_name = cur_.peek();
    const Ideal& ideal = existing_ideal();
    const RingPtr& ring = ideal.ring();
    const std::size_t r = ideal.generators().size();

    saved.push_back({Token::Kind::End, "", ideal_name.line, ideal_name.column});
    TokenCursor sub(std::move(saved));
    std::swap(sub, cur_);
    PolyMatrix d = matrix(ring, ring->nvars());
    std::swap(sub, cur_);

    PolyMatrix via(ring, r, d.cols());
    if (cur_.at_word("via")) {
      cur_.next();
      via = matrix(ring, r);
      if (via.cols() != d.cols()) cur_.fail_at(ideal_name, "'via' needs one column per column of the differential");
    } else if (r == d.cols()) {
      via = PolyMatrix::identity(ring, r);
    } else if (d.cols() > 0) {
      cur_.fail_at(ideal_name, "'via' is required when the complex has a different rank than the equations");
    }
    cur_.expect_symbol(";");
    session_.complexes_.emplace(name, ComplexDecl{ideal_name.text, std::move(d), std::move(via)});
    session_.declare(name, "complex");
  }

  /// Copies the tokens of one bracketed matrix without interpreting them.
  std::vector<Token> matrix_tokens() {
    std::vector<Token> out;
    int depth = 0;
    do {
      const Token t = cur_.next();
      if (t.kind == Token::Kind::End) cur_.fail_at(t, "unterminated matrix");
      if (t.kind == Token::Kind::Symbol && t.text == "[") ++depth;
      if (t.kind == Token::Kind::Symbol && t.text == "]") --depth;
      if (out.empty() && !(t.kind == Token::Kind::Symbol && t.text == "[")) cur_.fail_at(t, "expected '['");
      out.push_back(t);
    } while (depth > 0);
    return out;
  }

  void resolution_statement() {
    const std::string name = new_name("resolution");
    cur_.expect_symbol("=");
    const Token kind = cur_.expect_identifier("tautological, padded, reordered or complex");
    ResolutionDecl decl{ResolutionDecl::Kind::Tautological, {}, 1, {}};
    const Token src = cur_.expect_identifier("a name");
    decl.source = src.text;
    auto require = [&](const char* what, bool ok) {
      if (!ok) cur_.fail_at(src, "'" + src.text + "' is not a declared " + what);
    };
    if (kind.text == "tautological") {
      require("ideal", session_.ideals_.count(src.text) > 0);
    } else if (kind.text == "padded") {
      decl.kind = ResolutionDecl::Kind::Padded;
      require("resolution", session_.resolutions_.count(src.text) > 0);
      if (cur_.peek().kind == Token::Kind::Number) decl.count = std::stoul(cur_.next().text);
    } else if (kind.text == "reordered") {
      decl.kind = ResolutionDecl::Kind::Reordered;
      require("resolution", session_.resolutions_.count(src.text) > 0);
      cur_.expect_symbol("(");
      do decl.order.push_back(std::stoul(cur_.expect_number("an index").text));
      while (cur_.accept(","));
      cur_.expect_symbol(")");
    } else if (kind.text == "complex") {
      decl.kind = ResolutionDecl::Kind::Complex;
      require("complex", session_.complexes_.count(src.text) > 0);
    } else {
      cur_.fail_at(kind, "expected tautological, padded, reordered or complex, found '" + kind.text + "'");
    }
    cur_.expect_symbol(";");
    session_.resolutions_.emplace(name, std::move(decl));
    session_.declare(name, "resolution");
  }

  void map_statement() {
    const std::string name = new_name("map");
    cur_.expect_symbol(":");
    const Token src = cur_.peek();
    const Ideal& source = existing_ideal();
    cur_.expect_symbol("->");
    const Token dst = cur_.peek();
    const Ideal& target = existing_ideal();
    cur_.expect_symbol("=");
    const Token open = cur_.expect_symbol("(");
    std::vector<Polynomial> images;
    do images.push_back(parse_expression(cur_, source.ring()));
    while (cur_.accept(","));
    cur_.expect_symbol(")");
    if (images.size() != target.ring()->nvars())
      cur_.fail_at(open, "map needs one image per variable of " + dst.text + "'s ring");
    cur_.expect_symbol(";");
    session_.maps_.emplace(name, MapDecl{src.text, dst.text, std::move(images)});
    session_.declare(name, "map");
  }

  void chow_statement() {
    const std::string name = new_name("chow ring");
    cur_.expect_symbol("=");
    ChowDecl decl;
    decl.ring = ring_literal(false);
    auto keyword = [&](const char* word) {
      const Token t = cur_.expect_identifier(std::string("'") + word + "'");
      if (t.text != word) cur_.fail_at(t, std::string("expected '") + word + "', found '" + t.text + "'");
    };
    keyword("weights");
    cur_.expect_symbol("(");
    if (!cur_.at_symbol(")")) do
        decl.weights.push_back(static_cast<std::uint32_t>(std::stoul(cur_.expect_number("a weight").text)));
      while (cur_.accept(","));
    const Token close = cur_.expect_symbol(")");
    if (decl.weights.size() != decl.ring->nvars())
      cur_.fail_at(close, "one weight per Chow ring generator is required");
    keyword("relations");
    cur_.expect_symbol("(");
    if (!cur_.at_symbol(")")) do
        decl.relations.push_back(parse_expression(cur_, decl.ring));
      while (cur_.accept(","));
    cur_.expect_symbol(")");
    keyword("top");
    decl.top = std::stoul(cur_.expect_number("the top degree").text);
    cur_.expect_symbol(";");
    session_.chows_.emplace(name, std::move(decl));
    session_.declare(name, "chow ring");
  }

  void degree_statement() {
    const Token t = cur_.expect_identifier("a chow ring name");
    const auto it = session_.chows_.find(t.text);
    if (it == session_.chows_.end()) cur_.fail_at(t, "'" + t.text + "' is not a declared chow ring");
    ChowDecl& decl = it->second;
    cur_.expect_symbol("=");
    do {
      Polynomial cls = parse_expression(cur_, decl.ring);
      cur_.expect_symbol("->");
      const Scalar v = constant(decl.ring);
      decl.functional.emplace_back(std::move(cls), v.rational());
    } while (cur_.accept(","));
    cur_.expect_symbol(";");
  }

  TokenCursor cur_;
  Session session_;
  RingPtr ring_;
};

Session parse_session(std::string_view text) { return SessionParser(text).run(); }

namespace {

std::string join_polys(const std::vector<Polynomial>& ps) {
  std::string s;
  for (const auto& p : ps) s += (s.empty() ? "" : ", ") + p.to_string();
  return s;
}

std::string ring_text(const RingPtr& ring, bool with_order) {
  std::string s = ring->field().name() + "[";
  for (std::size_t i = 0; i < ring->nvars(); ++i) s += (i ? "," : "") + ring->names()[i];
  s += "]";
  if (with_order) s += std::string(" order ") + (ring->order().kind() == MonomialOrder::Kind::Lex ? "lex" : "grevlex");
  return s;
}

std::string matrix_text(const PolyMatrix& m) {
  if (m.cols() == 0) return "[]";
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? ", " : "") + m(i, j).to_string();
    s += "]";
  }
  return s + "]";
}

bool same_matrix(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

}  // namespace

std::string Session::to_string() const {
  std::string out;
  RingPtr ring;
  auto switch_ring = [&](const RingPtr& r) {
    if (ring && *ring == *r) return;
    ring = r;
    out += "ring " + ring_text(r, true) + ";\n";
  };
  for (const auto& name : order_) {
    const std::string& kind = kinds_.at(name);
    if (kind == "ideal") {
      const Ideal& I = ideals_.at(name);
      switch_ring(I.ring());
      out += "ideal " + name + " = " + join_polys(I.generators()) + ";\n";
    } else if (kind == "point") {
      const Point& p = points_.at(name);
      switch_ring(point_rings_.at(name));
      out += "point " + name + " = (";
      for (std::size_t i = 0; i < p.size(); ++i) out += (i ? ", " : "") + p[i].to_string();
      out += ");\n";
    } else if (kind == "complex") {
      const ComplexDecl& c = complexes_.at(name);
      out += "complex " + name + " = matrix " + matrix_text(c.differential) + " -> omega over " + c.ideal + " via " +
             matrix_text(c.via) + ";\n";
    } else if (kind == "resolution") {
      const ResolutionDecl& r = resolutions_.at(name);
      out += "resolution " + name + " = ";
      switch (r.kind) {
        case ResolutionDecl::Kind::Tautological:
          out += "tautological " + r.source;
          break;
        case ResolutionDecl::Kind::Padded:
          out += "padded " + r.source + " " + std::to_string(r.count);
          break;
        case ResolutionDecl::Kind::Complex:
          out += "complex " + r.source;
          break;
        case ResolutionDecl::Kind::Reordered:
          out += "reordered " + r.source + " (";
          for (std::size_t i = 0; i < r.order.size(); ++i) out += (i ? ", " : "") + std::to_string(r.order[i]);
          out += ")";
          break;
      }
      out += ";\n";
    } else if (kind == "map") {
      const MapDecl& m = maps_.at(name);
      out += "map " + name + " : " + m.source + " -> " + m.target + " = (" + join_polys(m.images) + ");\n";
    } else if (kind == "chow ring") {
      const ChowDecl& c = chows_.at(name);
      out += "chow " + name + " = " + ring_text(c.ring, false) + " weights (";
      for (std::size_t i = 0; i < c.weights.size(); ++i) out += (i ? ", " : "") + std::to_string(c.weights[i]);
      out += ") relations (" + join_polys(c.relations) + ") top " + std::to_string(c.top) + ";\n";
      if (!c.functional.empty()) {
        out += "degree " + name + " = ";
        for (std::size_t i = 0; i < c.functional.size(); ++i)
          out += (i ? ", " : "") + c.functional[i].first.to_string() + " -> " + c.functional[i].second.get_str();
        out += ";\n";
      }
    }
  }
  return out;
}

bool operator==(const Session& a, const Session& b) {
  if (a.order_ != b.order_ || a.kinds_ != b.kinds_) return false;
  for (const auto& [name, I] : a.ideals_) {
    const Ideal& J = b.ideals_.at(name);
    if (!(*I.ring() == *J.ring()) || I.generators() != J.generators()) return false;
  }
  if (a.points_ != b.points_) return false;
  for (const auto& [name, c] : a.complexes_) {
    const ComplexDecl& d = b.complexes_.at(name);
    if (c.ideal != d.ideal || !same_matrix(c.differential, d.differential) || !same_matrix(c.via, d.via)) return false;
  }
  for (const auto& [name, r] : a.resolutions_) {
    const ResolutionDecl& s = b.resolutions_.at(name);
    if (r.kind != s.kind || r.source != s.source || r.count != s.count || r.order != s.order) return false;
  }
  for (const auto& [name, m] : a.maps_) {
    const MapDecl& n = b.maps_.at(name);
    if (m.source != n.source || m.target != n.target || m.images != n.images) return false;
  }
  for (const auto& [name, c] : a.chows_) {
    const ChowDecl& d = b.chows_.at(name);
    if (!(*c.ring == *d.ring) || c.weights != d.weights || c.relations != d.relations || c.top != d.top ||
        c.functional.size() != d.functional.size())
      return false;
    for (std::size_t i = 0; i < c.functional.size(); ++i)
      if (!(c.functional[i].first == d.functional[i].first) || c.functional[i].second != d.functional[i].second)
        return false;
  }
  return true;
}

}  // namespace conelab
