#pragma once

// Ring descriptions k[x_1..x_n]/I with all variables in one degree g, and their parsed form.

#include <set>

#include "groebner.hpp"
#include "parse.hpp"

namespace gradedreg {

struct RingDesc {
  FieldSpec field;
  std::vector<std::string> variables;
  std::uint32_t degree = 1;
  std::vector<std::string> ideal;

  void validate() const {
    field.validate();
    if (degree < 1) throw error(errc::invalid_input, "ring.degree must be >= 1");
    std::set<std::string> seen;
    for (const auto& v : variables)
      if (!seen.insert(v).second) throw error(errc::invalid_input, "ring.variables: duplicate name '" + v + "'");
  }

  friend bool operator==(const RingDesc&, const RingDesc&) = default;
};

/// Default variable names: x,y,z,w for up to four variables, otherwise x1..xn.
inline std::vector<std::string> default_variable_names(std::size_t n) {
  std::vector<std::string> names;
  static const char* small[] = {"x", "y", "z", "w"};
  for (std::size_t i = 0; i < n; ++i) names.push_back(n <= 4 ? small[i] : "x" + std::to_string(i + 1));
  return names;
}

/// Stanley-Reisner ring of a graph: one variable per vertex, the ideal generated by edge monomials.
inline RingDesc stanley_reisner_ring(const FieldSpec& field, std::size_t n,
                                     const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  RingDesc r;
  r.field = field;
  r.variables = default_variable_names(n);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (auto [a, b] : edges) {
    if (a < 1 || b < 1 || a > n || b > n)
      throw error(errc::invalid_graph, "edge {" + std::to_string(a) + "," + std::to_string(b) + "} outside 1.." + std::to_string(n));
    if (a == b) throw error(errc::invalid_graph, "loop at vertex " + std::to_string(a));
    if (!seen.insert({std::min(a, b), std::max(a, b)}).second)
      throw error(errc::invalid_graph, "duplicate edge {" + std::to_string(a) + "," + std::to_string(b) + "}");
    r.ideal.push_back(r.variables[std::min(a, b) - 1] + "*" + r.variables[std::max(a, b) - 1]);
  }
  return r;
}

/// A ring description parsed over a concrete field, with its Groebner basis up to a cap.
template <class F>
struct QuotientRing {
  F field;
  RingDesc desc;
  std::vector<Polynomial<F>> ideal;
  GroebnerBasis<F> gb;

  std::size_t nvars() const { return desc.variables.size(); }
  std::uint32_t g() const { return desc.degree; }
  std::uint32_t cap() const { return gb.cap; }

  Polynomial<F> parse(const std::string& text) const { return parse_polynomial(field, text, desc.variables); }
  Polynomial<F> reduce(const Polynomial<F>& p) const { return normal_form(p, gb); }
  std::string str(const Polynomial<F>& p) const { return to_string(field, p, desc.variables); }

  /// Graded degree of a homogeneous polynomial (zero polynomial has degree 0).
  std::uint32_t degree_of(const Polynomial<F>& p) const { return p.is_zero() ? 0 : p.lead().total() * g(); }

  /// Largest degree of an ideal generator.
  std::uint32_t max_relation_degree() const {
    std::uint32_t m = 0;
    for (const auto& p : ideal)
      if (!p.is_zero()) m = std::max(m, degree_of(p));
    return m;
  }
};

template <class F>
QuotientRing<F> make_quotient_ring(const F& field, const RingDesc& desc, std::uint32_t cap) {
  desc.validate();
  QuotientRing<F> r{field, desc, {}, GroebnerBasis<F>{field}};
  for (std::size_t k = 0; k < desc.ideal.size(); ++k) {
    auto p = parse_polynomial(field, desc.ideal[k], desc.variables);
    if (!p.is_homogeneous())
      throw error(errc::non_homogeneous_input, "ring.ideal[" + std::to_string(k) + "] = \"" + desc.ideal[k] + "\" is not homogeneous");
    r.ideal.push_back(std::move(p));
  }
  r.gb = buchberger(field, r.ideal, desc.variables.size(), desc.degree, cap);
  return r;
}

}  // namespace gradedreg
