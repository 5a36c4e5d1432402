#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "conelab/parse.hpp"
#include "conelab/session.hpp"
#include "json.hpp"

namespace testing {

inline const std::string kSourceDir = CONELAB_SOURCE_DIR;

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline const conelab::Session& corpus() {
  static const conelab::Session session = conelab::parse_session(slurp(kSourceDir + "/corpus/charts.cl"));
  return session;
}

inline const nlohmann::json& manifest() {
  static const nlohmann::json doc = nlohmann::json::parse(slurp(kSourceDir + "/corpus/manifest.json"));
  return doc;
}

inline const nlohmann::json& frozen() {
  static const nlohmann::json doc = nlohmann::json::parse(slurp(kSourceDir + "/tests/oracles/frozen.json"));
  return doc;
}

inline std::vector<std::string> corpus_ideals() {
  std::vector<std::string> out;
  for (const auto& c : manifest()["charts"]) out.push_back(c["ideal"].get<std::string>());
  return out;
}

inline conelab::RingPtr ring(const std::vector<std::string>& names,
                             conelab::Field field = conelab::Field::rationals()) {
  return conelab::PolynomialRing::make(field, names);
}

inline conelab::Polynomial poly(const conelab::RingPtr& r, const std::string& text) {
  return conelab::parse_polynomial(r, text);
}

inline conelab::Ideal ideal(const conelab::RingPtr& r, const std::string& text) {
  return conelab::Ideal(r, text.empty() ? std::vector<conelab::Polynomial>{} : conelab::parse_polynomials(r, text));
}

inline conelab::Ideal ideal(const conelab::RingPtr& r, const std::vector<std::string>& texts) {
  std::vector<conelab::Polynomial> gens;
  for (const auto& t : texts) gens.push_back(poly(r, t));
  return conelab::Ideal(r, gens);
}

// Small random polynomials for property tests; fixed seeds keep runs reproducible.
class RandomPolynomials {
 public:
  RandomPolynomials(conelab::RingPtr r, std::uint32_t seed) : ring_(std::move(r)), rng_(seed) {}

  conelab::Polynomial next(int max_terms = 4, int max_degree = 3, int max_coef = 5) {
    std::uniform_int_distribution<int> terms(0, max_terms), coef(-max_coef, max_coef), deg(0, max_degree);
    conelab::Polynomial f(ring_);
    for (int t = terms(rng_); t > 0; --t) {
      conelab::Monomial m(ring_->nvars());
      int budget = deg(rng_);
      std::uniform_int_distribution<std::size_t> var(0, ring_->nvars() - 1);
      while (budget-- > 0) {
        const std::size_t v = var(rng_);
        m.set(v, m[v] + 1);
      }
      f += conelab::Polynomial::term(ring_, conelab::Scalar(ring_->field(), coef(rng_)), m);
    }
    return f;
  }

  std::mt19937& engine() { return rng_; }

 private:
  conelab::RingPtr ring_;
  std::mt19937 rng_;
};

}  // namespace testing
