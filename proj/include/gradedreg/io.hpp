#pragma once

// Input documents (ring, named modules, optional homomorphism), report documents and renderers.
// Error messages name the offending JSON field.

#include <chrono>
#include <iomanip>
#include <set>

#include "json.hpp"
#include "suites.hpp"

#ifndef GRADEDREG_VERSION
#define GRADEDREG_VERSION "dev"
#endif
#define GRADEDREG_VERSION_STRING GRADEDREG_VERSION

namespace gradedreg {

using json = nlohmann::json;

struct ModuleDesc {
  std::string kind;  // residue_field, free, cokernel, veronese_piece, pushforward, stanley_reisner
  std::vector<int> twists{0};
  std::vector<std::vector<std::string>> relations;  // one row per relation, one entry per generator
  std::string of;                                    // source module of veronese_piece / pushforward
  std::uint32_t d = 2;
  std::uint32_t e = 1;
  int piece = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // stanley_reisner: R / (x_a x_b)

  friend bool operator==(const ModuleDesc&, const ModuleDesc&) = default;
};

struct HomDesc {
  std::optional<std::uint32_t> order;
  std::optional<RingDesc> target;  // empty means "self"
  std::vector<std::string> images;

  friend bool operator==(const HomDesc&, const HomDesc&) = default;
};

struct InputDocument {
  RingDesc ring;
  std::map<std::string, ModuleDesc> modules;
  std::optional<HomDesc> hom;

  friend bool operator==(const InputDocument&, const InputDocument&) = default;
};

namespace io_detail {

[[noreturn]] inline void bad(const std::string& field, const std::string& what, errc code = errc::parse_error) {
  throw error(code, field + ": " + what);
}

template <class T>
T get(const json& j, const std::string& key, const std::string& path) {
  if (!j.contains(key)) bad(path + "." + key, "missing");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    bad(path + "." + key, "wrong type");
  }
}

template <class T>
T get_or(const json& j, const std::string& key, const std::string& path, T fallback) {
  return j.contains(key) ? get<T>(j, key, path) : fallback;
}

inline FieldSpec parse_field(const json& j, const std::string& path) {
  FieldSpec f;
  if (j.is_number_unsigned())
    f.characteristic = j.get<std::uint32_t>();
  else if (j.is_object())
    f.characteristic = get<std::uint32_t>(j, "characteristic", path);
  else
    bad(path, "expected a characteristic or {\"characteristic\": p}");
  try {
    f.validate();
  } catch (const error& e) {
    bad(path, e.message(), errc::invalid_field);
  }
  return f;
}

inline std::vector<std::pair<std::size_t, std::size_t>> parse_edges(const json& j, const std::string& path) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (!j.is_array()) bad(path, "expected an array of [a, b] pairs");
  for (std::size_t k = 0; k < j.size(); ++k) {
    const auto& e = j[k];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
      bad(path + "[" + std::to_string(k) + "]", "expected [a, b] with positive vertex numbers");
    out.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
  }
  return out;
}

inline RingDesc parse_ring(const json& doc, const FieldSpec& field, const std::string& path) {
  if (doc.contains("stanley_reisner")) {
    const auto& g = doc["stanley_reisner"];
    std::string p = path + "stanley_reisner";
    auto n = get<std::size_t>(g, "vertices", p);
    auto edges = parse_edges(g.contains("edges") ? g["edges"] : json::array(), p + ".edges");
    try {
      return stanley_reisner_ring(field, n, edges);
    } catch (const error& e) {
      bad(p + ".edges", e.message(), e.code());
    }
  }
  if (!doc.contains("ring")) bad(path + "ring", "missing (or give stanley_reisner)");
  const auto& r = doc["ring"];
  std::string p = path + "ring";
  RingDesc d;
  d.field = field;
  d.variables = get<std::vector<std::string>>(r, "variables", p);
  d.degree = get_or<std::uint32_t>(r, "degree", p, 1);
  d.ideal = get_or<std::vector<std::string>>(r, "ideal", p, {});
  try {
    d.validate();
  } catch (const error& e) {
    bad(p, e.message(), e.code());
  }
  return d;
}

inline ModuleDesc parse_module(const json& j, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an object");
  ModuleDesc m;
  m.kind = get<std::string>(j, "kind", path);
  if (m.kind == "residue_field") return m;
  if (m.kind == "free") {
    m.twists = get_or<std::vector<int>>(j, "twists", path, {0});
    if (m.twists.empty()) bad(path + ".twists", "needs at least one generator", errc::invalid_input);
    return m;
  }
  if (m.kind == "cokernel") {
    m.twists = get_or<std::vector<int>>(j, "twists", path, {0});
    if (m.twists.empty()) bad(path + ".twists", "needs at least one generator", errc::invalid_input);
    const json& rels = j.contains("relations") ? j["relations"] : json::array();
    if (!rels.is_array()) bad(path + ".relations", "expected an array");
    for (std::size_t k = 0; k < rels.size(); ++k) {
      std::string rp = path + ".relations[" + std::to_string(k) + "]";
      // a bare string is a relation on a single generator
      if (rels[k].is_string())
        m.relations.push_back({rels[k].get<std::string>()});
      else if (rels[k].is_array() && std::all_of(rels[k].begin(), rels[k].end(), [](const json& x) { return x.is_string(); }))
        m.relations.push_back(rels[k].get<std::vector<std::string>>());
      else
        bad(rp, "expected a polynomial string or an array of them");
      if (m.relations.back().size() != m.twists.size())
        bad(rp, "has " + std::to_string(m.relations.back().size()) + " entries for " + std::to_string(m.twists.size()) +
                    " generators",
            errc::invalid_input);
    }
    return m;
  }
  if (m.kind == "veronese_piece" || m.kind == "pushforward") {
    m.of = get<std::string>(j, "of", path);
    m.piece = get_or<int>(j, "piece", path, 0);
    if (m.kind == "veronese_piece") {
      m.d = get<std::uint32_t>(j, "d", path);
      if (m.d < 1) bad(path + ".d", "must be >= 1", errc::invalid_input);
      if (m.piece < 0 || m.piece >= int(m.d)) bad(path + ".piece", "must lie in 0..d-1", errc::bad_piece_index);
    } else {
      m.e = get_or<std::uint32_t>(j, "e", path, 1);
      if (m.e < 1) bad(path + ".e", "must be >= 1", errc::invalid_input);
    }
    return m;
  }
  if (m.kind == "stanley_reisner") {
    m.edges = parse_edges(j.contains("edges") ? j["edges"] : json::array(), path + ".edges");
    return m;
  }
  bad(path + ".kind", "unknown module kind '" + m.kind + "'", errc::invalid_input);
}

inline HomDesc parse_hom(const json& j, const FieldSpec& field, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an object");
  HomDesc h;
  if (j.contains("order")) h.order = get<std::uint32_t>(j, "order", path);
  if (j.contains("target")) {
    const auto& t = j["target"];
    if (t.is_string()) {
      if (t.get<std::string>() != "self") bad(path + ".target", "expected \"self\" or a ring description");
    } else if (t.is_object()) {
      h.target = parse_ring(json{{"ring", t}}, field, path + ".target.");
    } else {
      bad(path + ".target", "expected \"self\" or a ring description");
    }
  }
  h.images = get<std::vector<std::string>>(j, "images", path);
  return h;
}

}  // namespace io_detail

inline InputDocument parse_input(const json& doc) {
  using namespace io_detail;
  if (!doc.is_object()) bad("input", "expected a JSON object");
  InputDocument in;
  FieldSpec field = doc.contains("field") ? parse_field(doc["field"], "field") : FieldSpec{};
  in.ring = parse_ring(doc, field, "");
  if (doc.contains("modules")) {
    if (!doc["modules"].is_object()) bad("modules", "expected an object of named modules");
    for (const auto& [name, m] : doc["modules"].items()) in.modules[name] = parse_module(m, "modules." + name);
  }
  for (const auto& [name, m] : in.modules)
    if (!m.of.empty() && !in.modules.count(m.of))
      bad("modules." + name + ".of", "undefined module '" + m.of + "'", errc::invalid_input);
  if (doc.contains("hom")) in.hom = parse_hom(doc["hom"], field, "hom");
  return in;
}

inline InputDocument parse_input_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw error(errc::parse_error, std::string("input: ") + e.what());
  }
  return parse_input(j);
}

/// A standalone homomorphism file: {"order", "target", "images"}.
inline HomDesc parse_hom_text(const std::string& text, const FieldSpec& field) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw error(errc::parse_error, std::string("hom: ") + e.what());
  }
  return io_detail::parse_hom(j, field, "hom");
}

/// Degrees beyond this are refused rather than attempted.
inline constexpr int kMaxDegree = 160;

/// Largest degree of `name` needed to know the module itself up to degree hi.
inline int required_degree(const InputDocument& in, const std::string& name, int hi, int depth = 0) {
  if (depth > int(in.modules.size())) throw error(errc::invalid_input, "modules." + name + ".of: cyclic reference");
  const auto& m = in.modules.at(name);
  if (m.kind == "veronese_piece") return required_degree(in, m.of, int(m.d) * hi + int(m.d) - 1, depth + 1);
  if (m.kind == "pushforward") {
    int q = 1;
    for (std::uint32_t k = 0; k < m.e && q <= kMaxDegree; ++k) q *= int(std::max<std::uint32_t>(in.ring.field.characteristic, 1));
    if (q > kMaxDegree) throw error(errc::degree_cap_exceeded, "modules." + name + ".e: order p^e is too large");
    return required_degree(in, m.of, q * (hi + 1) - 1, depth + 1);
  }
  int top = hi;
  for (int t : m.twists) top = std::max(top, hi - t);
  return top;
}

/// Builds named modules over one ring, sharing algebra tables.
template <class F>
class Workspace {
 public:
  Workspace(const F& field, const InputDocument& in, const RingDesc& ring, std::uint32_t cap) : in_(in) {
    if (cap > std::uint32_t(kMaxDegree))
      throw error(errc::degree_cap_exceeded, "--jmax: the request needs degree " + std::to_string(cap) +
                                                 ", above the supported " + std::to_string(kMaxDegree));
    try {
      ring_ = std::make_shared<const QuotientRing<F>>(make_quotient_ring(field, ring, std::max<std::uint32_t>(cap, 2)));
    } catch (const error& e) {
      io_detail::bad("ring", e.message(), e.code());
    }
    cap_ = ring_->cap();
  }

  const RingPtr<F>& ring() const { return ring_; }

  AlgebraPtr<F> table(std::uint32_t cap) {
    cap = std::min(cap, cap_);
    if (!table_ || table_->cap < cap) table_ = std::make_shared<const AlgebraTable<F>>(build_algebra_table(*ring_, cap));
    return table_;
  }

  ModuleTable<F> module(const std::string& name, int hi) {
    auto it = in_.modules.find(name);
    if (it == in_.modules.end()) throw error(errc::invalid_input, "--module: undefined module '" + name + "'");
    const ModuleDesc& m = it->second;
    std::string path = "modules." + name;
    int need = required_degree(in_, name, hi);
    if (need > int(cap_))
      throw error(errc::window_exceeded, path + ": needs degree " + std::to_string(need) + " beyond ring cap " +
                                             std::to_string(cap_));
    auto a = table(std::uint32_t(std::max(need, 0)));
    try {
      if (m.kind == "residue_field") return residue_field(a, hi);
      if (m.kind == "free") return free_module(a, m.twists, hi);
      if (m.kind == "stanley_reisner") {
        RingDesc sr = stanley_reisner_ring(ring_->desc.field, ring_->nvars(), m.edges);
        std::vector<std::string> rels;
        for (auto& r : sr.ideal) rels.push_back(rename(r, sr.variables));
        return cyclic_module(a, *ring_, rels, hi);
      }
      if (m.kind == "cokernel") return cokernel_of(a, m, path, hi);
      if (m.kind == "veronese_piece") {
        auto src = module(m.of, int(m.d) * hi + int(m.d) - 1);
        auto v = std::make_shared<const AlgebraTable<F>>(veronese_algebra(*src.alg, m.d));
        return truncate_window(veronese_piece(src, v, int(m.d), m.piece), hi);
      }
      if (m.kind == "pushforward") {
        auto h = frobenius_hom(ring_, m.e);
        int q = int(h.d);
        if (m.piece < 0 || m.piece >= q)
          throw error(errc::bad_piece_index, path + ".piece: must lie in 0.." + std::to_string(q - 1));
        auto src = module(m.of, q * (hi + 1) - 1);
        auto t = hom_tables(h, std::uint32_t(src.hi), src.alg);
        return truncate_window(pushforward_piece(t, src, m.piece), hi);
      }
    } catch (const error& e) {
      const std::string& what = e.message();
      if (what.rfind("modules.", 0) == 0 || what.rfind("--", 0) == 0) throw;
      io_detail::bad(path, what, e.code());
    }
    throw std::logic_error("unhandled module kind");
  }

 private:
  // Stanley-Reisner shortcut edges use default vertex names; map them to the ring's names.
  std::string rename(const std::string& mono, const std::vector<std::string>& defaults) const {
    auto star = mono.find('*');
    auto index = [&](const std::string& v) {
      return std::size_t(std::find(defaults.begin(), defaults.end(), v) - defaults.begin());
    };
    return ring_->desc.variables[index(mono.substr(0, star))] + "*" + ring_->desc.variables[index(mono.substr(star + 1))];
  }

  ModuleTable<F> cokernel_of(const AlgebraPtr<F>& a, const ModuleDesc& m, const std::string& path, int hi) {
    std::vector<std::pair<int, SparseVec<F>>> rels;
    for (std::size_t k = 0; k < m.relations.size(); ++k) {
      std::string rp = path + ".relations[" + std::to_string(k) + "]";
      std::vector<Polynomial<F>> parts;
      std::optional<int> deg;
      for (std::size_t s = 0; s < m.relations[k].size(); ++s) {
        Polynomial<F> p;
        try {
          p = ring_->reduce(ring_->parse(m.relations[k][s]));
        } catch (const error& e) {
          io_detail::bad(rp + "[" + std::to_string(s) + "]", e.message(), e.code());
        }
        if (!p.is_zero()) {
          if (!p.is_homogeneous())
            io_detail::bad(rp + "[" + std::to_string(s) + "]", "not homogeneous", errc::non_homogeneous_input);
          int dj = int(ring_->degree_of(p)) + m.twists[s];
          if (deg && *deg != dj)
            io_detail::bad(rp, "components have degrees " + std::to_string(*deg) + " and " + std::to_string(dj),
                           errc::non_homogeneous_input);
          deg = dj;
        }
        parts.push_back(std::move(p));
      }
      if (!deg || *deg > hi) continue;  // zero relation, or one that only matters beyond the window
      SparseVec<F> v;
      for (std::size_t s = 0; s < parts.size(); ++s) {
        if (parts[s].is_zero()) continue;
        index_t off = free_offset(*a, m.twists, s, *deg);
        for (auto [i, c] : element_vector(*a, std::uint32_t(*deg - m.twists[s]), parts[s])) v.emplace_back(off + i, c);
      }
      std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      rels.emplace_back(*deg, std::move(v));
    }
    return cokernel(a, m.twists, rels, hi);
  }

  const InputDocument& in_;
  RingPtr<F> ring_;
  AlgebraPtr<F> table_;
  std::uint32_t cap_ = 0;
};

// JSON forms of result payloads. Rationals are {num, den}; minus infinity is null.

inline json to_json_value(const RegValue& v) {
  if (!v.is_finite()) return nullptr;
  return json{{"num", v.num()}, {"den", v.den()}};
}

inline RegValue reg_value_from_json(const json& j) {
  if (j.is_null()) return {};
  return RegValue(j.at("num").get<std::int64_t>(), j.at("den").get<std::int64_t>());
}

inline json to_json_value(const BettiTable& b) {
  json entries = json::array();
  for (const auto& [ij, n] : b.entries) entries.push_back({{"i", ij.first}, {"j", ij.second}, {"beta", n}});
  return {{"imin", b.imin}, {"i_max", b.i_max}, {"j_max", b.j_max}, {"entries", entries}};
}

inline BettiTable betti_from_json(const json& j) {
  BettiTable b{j.at("imin").get<int>(), j.at("i_max").get<int>(), j.at("j_max").get<int>(), {}};
  for (const auto& e : j.at("entries")) b.entries[{e.at("i").get<int>(), e.at("j").get<int>()}] = e.at("beta").get<std::size_t>();
  return b;
}

inline json witness_json(const std::optional<std::pair<int, int>>& w) {
  if (!w) return nullptr;
  return json{w->first, w->second};
}

inline std::optional<std::pair<int, int>> witness_from_json(const json& j) {
  if (j.is_null()) return std::nullopt;
  return std::pair{j.at(0).get<int>(), j.at(1).get<int>()};
}

inline json to_json_value(const RegularityVerdict& v) {
  return {{"reg", to_json_value(v.value)},
          {"reg_text", v.value.str()},
          {"boundary_attained", v.boundary_attained},
          {"boundary_i", v.boundary_i},
          {"boundary_j", v.boundary_j},
          {"termination_certified", v.termination_certified},
          {"witness", witness_json(v.witness)}};
}

inline RegularityVerdict verdict_from_json(const json& j) {
  RegularityVerdict v;
  v.value = reg_value_from_json(j.at("reg"));
  v.boundary_attained = j.at("boundary_attained").get<bool>();
  v.boundary_i = j.at("boundary_i").get<bool>();
  v.boundary_j = j.at("boundary_j").get<bool>();
  v.termination_certified = j.at("termination_certified").get<bool>();
  v.witness = witness_from_json(j.at("witness"));
  return v;
}

inline json to_json_value(const KoszulVerdict& v) {
  return {{"verdict", v.koszul_up_to_window ? "KoszulUpToWindow" : "NotKoszul"}, {"witness", witness_json(v.witness)}};
}

inline json to_json_value(const SuiteReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name},
                      {"lhs", c.lhs},
                      {"relation", c.relation},
                      {"rhs", c.rhs},
                      {"certified", c.certified},
                      {"holds", c.holds}});
  return {{"suite", r.suite}, {"i_max", r.i_max}, {"j_max", r.j_max}, {"pass", r.pass()}, {"checks", checks}};
}

inline SuiteReport suite_from_json(const json& j) {
  SuiteReport r{j.at("suite").get<std::string>(), j.at("i_max").get<int>(), j.at("j_max").get<int>(), {}};
  for (const auto& c : j.at("checks"))
    r.checks.push_back({c.at("name").get<std::string>(), c.at("lhs").get<std::string>(),
                        c.at("relation").get<std::string>(), c.at("rhs").get<std::string>(),
                        c.at("certified").get<bool>(), c.at("holds").get<bool>()});
  return r;
}

struct ReportDocument {
  std::string command;
  std::vector<std::string> arguments;
  int i_max = 8;
  int j_max = 12;
  json result = json::object();
  std::string version = GRADEDREG_VERSION_STRING;
  std::int64_t elapsed_us = 0;

  json to_json() const {
    return {{"command", command}, {"arguments", arguments}, {"window", {{"i_max", i_max}, {"j_max", j_max}}},
            {"result", result},   {"version", version},      {"elapsed_us", elapsed_us}};
  }

  static ReportDocument from_json(const json& j) {
    ReportDocument d;
    d.command = j.at("command").get<std::string>();
    d.arguments = j.at("arguments").get<std::vector<std::string>>();
    d.i_max = j.at("window").at("i_max").get<int>();
    d.j_max = j.at("window").at("j_max").get<int>();
    d.result = j.at("result");
    d.version = j.at("version").get<std::string>();
    d.elapsed_us = j.at("elapsed_us").get<std::int64_t>();
    return d;
  }

  std::string render() const { return to_json().dump(2) + "\n"; }
  static ReportDocument parse(const std::string& text) { return from_json(json::parse(text)); }

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

/// Strand layout: header of i values, one row per t = j - i, '.' for zero.
inline std::string render_betti_text(const BettiTable& b) {
  int i_lo = b.imin, i_hi = b.i_max;
  for (const auto& [ij, n] : b.entries) {
    i_lo = std::min(i_lo, ij.first);
    i_hi = std::max(i_hi, ij.first);
  }
  std::optional<int> t_lo, t_hi;
  for (const auto& [ij, n] : b.entries) {
    int t = ij.second - ij.first;
    t_lo = t_lo ? std::min(*t_lo, t) : t;
    t_hi = t_hi ? std::max(*t_hi, t) : t;
  }
  std::size_t w = 1, label = 1;
  for (int i = i_lo; i <= i_hi; ++i) w = std::max(w, std::to_string(i).size());
  for (const auto& [ij, n] : b.entries) w = std::max(w, std::to_string(n).size());
  if (t_lo) label = std::max(std::to_string(*t_lo).size(), std::to_string(*t_hi).size());
  std::ostringstream os;
  os << std::string(label + 1, ' ');
  for (int i = i_lo; i <= i_hi; ++i) os << ' ' << std::setw(int(w)) << i;
  os << '\n';
  if (t_lo)
    for (int t = *t_lo; t <= *t_hi; ++t) {
      os << std::setw(int(label)) << t << ':';
      for (int i = i_lo; i <= i_hi; ++i) {
        std::size_t n = b.at(i, i + t);
        os << ' ' << std::setw(int(w)) << (n ? std::to_string(n) : std::string("."));
      }
      os << '\n';
    }
  return os.str();
}

inline std::string render_betti_csv(const BettiTable& b) {
  std::ostringstream os;
  os << "i,j,beta\n";
  for (const auto& [ij, n] : b.entries) os << ij.first << ',' << ij.second << ',' << n << '\n';
  return os.str();
}

inline std::string render_betti_json(const BettiTable& b) { return to_json_value(b).dump(2) + "\n"; }

}  // namespace gradedreg
