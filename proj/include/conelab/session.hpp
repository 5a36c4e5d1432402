#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "conelab/cones.hpp"
#include "conelab/errors.hpp"
#include "conelab/linalg.hpp"

namespace conelab {

/// Unknown or mistyped name in a command; reported like a parse error.
class InputError : public Error {
 public:
  using Error::Error;
};

struct ComplexDecl {
  std::string ideal;
  PolyMatrix differential;  // n x s, into Omega
  PolyMatrix via;           // r x s, onto the equations
};

struct ResolutionDecl {
  enum class Kind { Tautological, Padded, Reordered, Complex };
  Kind kind;
  std::string source;  // ideal, resolution or complex name
  std::size_t count = 1;
  std::vector<std::size_t> order;
};

struct MapDecl {
  std::string source;
  std::string target;
  std::vector<Polynomial> images;  // target coordinates on the source ambient
};

struct ChowDecl {
  RingPtr ring;
  std::vector<std::uint32_t> weights;
  std::vector<Polynomial> relations;
  std::size_t top = 0;
  std::vector<std::pair<Polynomial, mpq_class>> functional;
};

/// Everything a session file declares, by name. Every name is unique across
/// kinds; `order` lists declarations as they appeared.
class Session {
 public:
  const Ideal& ideal(const std::string& name) const;
  const Point& point(const std::string& name) const;
  const ComplexDecl& complex(const std::string& name) const;
  const ResolutionDecl& resolution(const std::string& name) const;
  const MapDecl& map(const std::string& name) const;
  const ChowDecl& chow(const std::string& name) const;

  bool has(const std::string& name) const { return kinds_.count(name) > 0; }
  const std::vector<std::string>& order() const { return order_; }

  /// Canonical source text; parsing it back gives an equal session.
  std::string to_string() const;
  friend bool operator==(const Session& a, const Session& b);

 private:
  friend class SessionParser;
  void declare(const std::string& name, const std::string& kind);

  std::map<std::string, std::string> kinds_;
  std::vector<std::string> order_;
  std::map<std::string, Ideal> ideals_;
  std::map<std::string, Point> points_;
  std::map<std::string, RingPtr> point_rings_;
  std::map<std::string, ComplexDecl> complexes_;
  std::map<std::string, ResolutionDecl> resolutions_;
  std::map<std::string, MapDecl> maps_;
  std::map<std::string, ChowDecl> chows_;
};

/// Throws ParseError with line and column on any syntax or name error.
Session parse_session(std::string_view text);

}  // namespace conelab
