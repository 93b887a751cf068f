// gradedreg: Betti tables and regularity over quotient algebras and along ordered homomorphisms.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "gradedreg/gradedreg.hpp"

using namespace gradedreg;

namespace {

struct Options {
  std::string input;
  std::string module;
  int i_max = 8;
  int j_max = 12;
  std::string format = "text";
  std::uint32_t d = 2;
  int piece = 0;
  std::string piece_sel = "all";
  std::uint32_t e = 1;
  int steps = 3;
  std::string hom;
  std::string suite = "all";
};

std::string read_file(const std::string& path, const std::string& flag) {
  std::ifstream f(path);
  if (!f) throw error(errc::invalid_input, flag + ": cannot read '" + path + "'");
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

std::string dims_text(const json& dims) {
  std::string s = "(";
  for (std::size_t k = 0; k < dims.size(); ++k) s += (k ? "," : "") + std::to_string(dims[k].get<std::size_t>());
  return s + ")";
}

/// Dimensions in degrees lo..hi with trailing zeros dropped.
template <class F>
json dims_json(const ModuleTable<F>& m, int hi) {
  std::vector<std::size_t> d;
  for (int j = m.lo; j <= std::min(hi, m.hi); ++j) d.push_back(m.dim(j));
  while (!d.empty() && d.back() == 0) d.pop_back();
  return d;
}

template <class F>
json resolve_json(const ModuleTable<F>& m, const Options& o) {
  auto res = minimal_free_resolution(m, o.i_max, std::min(o.j_max, m.hi));
  return {{"betti", to_json_value(betti_table(res))}, {"regularity", to_json_value(regularity_of(res))}};
}

std::string verdict_text(const json& v) {
  std::ostringstream os;
  os << "reg: " << v["reg_text"].get<std::string>() << "\n";
  os << "boundary_attained: " << (v["boundary_attained"].get<bool>() ? "true" : "false") << "\n";
  os << "termination_certified: " << (v["termination_certified"].get<bool>() ? "true" : "false") << "\n";
  if (!v["witness"].is_null()) os << "witness: (" << v["witness"][0] << "," << v["witness"][1] << ")\n";
  return os.str();
}

std::string resolved_text(const json& r) {
  return render_betti_text(betti_from_json(r["betti"])) + verdict_text(r["regularity"]);
}

template <class F>
Workspace<F> workspace(const F& field, const InputDocument& in, const RingDesc& ring, const std::string& module,
                       const Options& o) {
  if (module.empty()) throw error(errc::invalid_input, "--module: required");
  if (!in.modules.count(module)) throw error(errc::invalid_input, "--module: undefined module '" + module + "'");
  int need = required_degree(in, module, o.j_max);
  return Workspace<F>(field, in, ring, std::uint32_t(std::max(24, need + 4)));
}

ReportDocument run(const std::string& cmd, const Options& o, const std::vector<std::string>& args) {
  ReportDocument doc;
  doc.command = cmd;
  doc.arguments = args;
  doc.i_max = o.i_max;
  doc.j_max = o.j_max;
  if (o.i_max < 0 || o.j_max < 0) throw error(errc::invalid_input, "--imax/--jmax: must be non-negative");

  if (cmd == "verify") {
    auto r = verify_suite(o.suite, o.i_max, o.j_max);
    doc.result = to_json_value(r);
    return doc;
  }

  if (o.input.empty()) throw error(errc::invalid_input, "--input: required");
  InputDocument in = parse_input_text(read_file(o.input, "--input"));

  doc.result = with_field(in.ring.field, [&](auto field) -> json {
    using F = decltype(field);
    if (cmd == "koszul") {
      Workspace<F> ws(field, in, in.ring, std::uint32_t(std::max(o.j_max, 2)));
      auto v = is_koszul(ws.table(std::uint32_t(o.j_max)), o.i_max, o.j_max);
      return {{"koszul", to_json_value(v)}};
    }
    if (cmd == "betti" || cmd == "reg") {
      auto ws = workspace(field, in, in.ring, o.module, o);
      return resolve_json(ws.module(o.module, o.j_max), o);
    }
    if (cmd == "veronese" || cmd == "frobenius") {
      InputDocument ext = in;
      std::vector<int> pieces;
      std::uint32_t q = o.d;
      if (cmd == "veronese") {
        if (o.d < 1) throw error(errc::invalid_input, "--d: must be >= 1");
        pieces.push_back(o.piece);
      } else {
        if (field.characteristic() == 0) throw error(errc::char_zero, "--e: Frobenius needs positive characteristic");
        if (o.e < 1) throw error(errc::invalid_input, "--e: must be >= 1");
        q = 1;
        for (std::uint32_t k = 0; k < o.e && q <= std::uint32_t(kMaxDegree); ++k) q *= field.characteristic();
        if (q > std::uint32_t(kMaxDegree)) throw error(errc::degree_cap_exceeded, "--e: order p^e is too large");
        if (o.piece_sel == "all")
          for (int i = 0; i < int(q); ++i) pieces.push_back(i);
        else
          try {
            pieces.push_back(std::stoi(o.piece_sel));
          } catch (const std::exception&) {
            throw error(errc::invalid_input, "--piece: expected an index or 'all'");
          }
      }
      for (int i : pieces)
        if (i < 0 || i >= int(q))
          throw error(errc::bad_piece_index, "--piece: " + std::to_string(i) + " outside 0.." + std::to_string(q - 1));
      json out = json::array();
      for (int i : pieces) {
        std::string name = "V_" + std::to_string(i);
        ModuleDesc md;
        md.kind = cmd == "veronese" ? "veronese_piece" : "pushforward";
        md.of = o.module;
        md.d = q;
        md.e = o.e;
        md.piece = i;
        ext.modules["(" + name + ")"] = md;
        auto ws = workspace(field, ext, ext.ring, "(" + name + ")", o);
        auto m = ws.module("(" + name + ")", o.j_max);
        json r = resolve_json(m, o);
        r["name"] = name;
        r["dims"] = dims_json(m, o.j_max);
        out.push_back(r);
      }
      return {{"q", q}, {"pieces", out}};
    }
    if (cmd == "reg-hom") {
      HomDesc hd;
      if (!o.hom.empty())
        hd = parse_hom_text(read_file(o.hom, "--hom"), in.ring.field);
      else if (in.hom)
        hd = *in.hom;
      else
        throw error(errc::invalid_input, "--hom: required (or give \"hom\" in the input)");
      RingDesc target = hd.target.value_or(in.ring);
      auto ws = workspace(field, in, target, o.module, o);
      auto m = ws.module(o.module, o.j_max);
      Workspace<F> src(field, in, in.ring, std::max<std::uint32_t>(24, ws.ring()->cap()));
      auto h = make_hom(src.ring(), ws.ring(), hd.images);
      if (hd.order && *hd.order != h.d)
        throw error(errc::order_mismatch, "hom.order: declared " + std::to_string(*hd.order) + ", images have order " +
                                              std::to_string(h.d));
      auto t = hom_tables(h, m.alg->cap, m.alg);
      auto b = betti_over_hom(t, m, o.i_max, o.j_max);
      return {{"d", h.d},
              {"dg", b.dg},
              {"kappa", b.kappa},
              {"betti", to_json_value(b.table)},
              {"regularity", to_json_value(b.verdict)}};
    }
    if (cmd == "tower") {
      auto ws = workspace(field, in, in.ring, o.module, o);
      auto m = ws.module(o.module, o.j_max);
      if (o.steps < 1) throw error(errc::invalid_input, "--steps: must be >= 1");
      auto psi = frobenius_hom(ws.ring(), o.e);
      auto t = hom_tables(psi, m.alg->cap, m.alg);
      auto tw = composition_tower(psi, t, m, o.steps, o.i_max, o.j_max);
      json levels = json::array();
      for (std::size_t k = 0; k < tw.verdicts.size(); ++k)
        levels.push_back({{"level", k + 1},
                          {"order", tw.homs[k].d},
                          {"betti", to_json_value(tw.verdicts[k].table)},
                          {"regularity", to_json_value(tw.verdicts[k].verdict)}});
      return {{"levels", levels}};
    }
    throw std::logic_error("unknown command " + cmd);
  });
  return doc;
}

std::string render_text(const ReportDocument& doc) {
  const auto& r = doc.result;
  const auto& cmd = doc.command;
  if (cmd == "betti") return render_betti_text(betti_from_json(r["betti"]));
  if (cmd == "reg") return resolved_text(r);
  if (cmd == "koszul") {
    std::string s = r["koszul"]["verdict"].get<std::string>();
    const auto& w = r["koszul"]["witness"];
    if (!w.is_null()) s += " witness (" + std::to_string(w[0].get<int>()) + "," + std::to_string(w[1].get<int>()) + ")";
    return s + "\n";
  }
  if (cmd == "veronese" || cmd == "frobenius") {
    std::string s;
    for (const auto& p : r["pieces"])
      s += p["name"].get<std::string>() + " dims " + dims_text(p["dims"]) + "\n" + resolved_text(p);
    return s;
  }
  if (cmd == "reg-hom") {
    return "order: " + std::to_string(r["d"].get<int>()) + "\nkappa: " + std::to_string(r["kappa"].get<int>()) + "\n" +
           resolved_text(r);
  }
  if (cmd == "tower") {
    std::string s;
    for (const auto& l : r["levels"])
      s += "level " + std::to_string(l["level"].get<int>()) + " (order " + std::to_string(l["order"].get<int>()) +
           ")\n" + resolved_text(l);
    return s;
  }
  // verify
  auto rep = suite_from_json(r);
  std::ostringstream os;
  std::size_t failed = 0;
  for (const auto& c : rep.checks) {
    const char* tag = c.holds ? "PASS" : (c.certified ? "FAIL" : "SKIP");
    failed += !c.holds && c.certified;
    os << tag << "  " << c.name << ": " << c.lhs << " " << c.relation << " " << c.rhs
       << (c.certified ? "" : " (uncertified)") << "\n";
  }
  os << rep.suite << ": " << (rep.pass() ? "pass" : "FAIL") << " (" << rep.checks.size() << " checks, " << failed
     << " failed)\n";
  return os.str();
}

std::string render_csv(const ReportDocument& doc) {
  const auto& r = doc.result;
  if (r.contains("betti")) return render_betti_csv(betti_from_json(r["betti"]));
  std::string s;
  auto rows = [&](const json& list, const std::string& key) {
    s = key + ",i,j,beta\n";
    for (const auto& p : list) {
      auto b = betti_from_json(p["betti"]);
      std::string label = p.contains("name") ? p["name"].get<std::string>() : std::to_string(p["level"].get<int>());
      for (const auto& [ij, n] : b.entries)
        s += label + "," + std::to_string(ij.first) + "," + std::to_string(ij.second) + "," + std::to_string(n) + "\n";
    }
  };
  if (r.contains("pieces")) {
    rows(r["pieces"], "piece");
    return s;
  }
  if (r.contains("levels")) {
    rows(r["levels"], "level");
    return s;
  }
  if (r.contains("koszul")) {
    const auto& w = r["koszul"]["witness"];
    return "verdict,witness_i,witness_j\n" + r["koszul"]["verdict"].get<std::string>() + "," +
           (w.is_null() ? std::string(",") : std::to_string(w[0].get<int>()) + "," + std::to_string(w[1].get<int>())) + "\n";
  }
  s = "name,lhs,relation,rhs,certified,holds\n";
  for (const auto& c : r["checks"])
    s += "\"" + c["name"].get<std::string>() + "\"," + c["lhs"].get<std::string>() + "," +
         c["relation"].get<std::string>() + "," + c["rhs"].get<std::string>() + "," +
         (c["certified"].get<bool>() ? "true" : "false") + "," + (c["holds"].get<bool>() ? "true" : "false") + "\n";
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded Betti numbers and regularity over quotient algebras"};
  app.set_version_flag("--version", std::string(GRADEDREG_VERSION_STRING));
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub, bool needs_module) {
    sub->add_option("--input", o.input, "input document (JSON)")->required();
    if (needs_module) sub->add_option("--module", o.module, "module name from the input")->required();
    sub->add_option("--imax", o.i_max, "homological cap")->capture_default_str();
    sub->add_option("--jmax", o.j_max, "internal degree cap")->capture_default_str();
    sub->add_option("--format", o.format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
  };
  common(app.add_subcommand("betti", "graded Betti table of a module"), true);
  common(app.add_subcommand("reg", "windowed regularity of a module"), true);
  common(app.add_subcommand("koszul", "Koszul test of the ring up to the window"), false);
  auto ver = app.add_subcommand("veronese", "Veronese piece V_i(d, M)");
  common(ver, true);
  ver->add_option("--d", o.d, "Veronese degree")->capture_default_str();
  ver->add_option("--piece", o.piece, "piece index 0..d-1")->capture_default_str();
  auto fro = app.add_subcommand("frobenius", "pieces of the Frobenius pushforward");
  common(fro, true);
  fro->add_option("--e", o.e, "Frobenius exponent")->capture_default_str();
  fro->add_option("--piece", o.piece_sel, "piece index or 'all'")->capture_default_str();
  auto rh = app.add_subcommand("reg-hom", "Betti numbers and regularity over a homomorphism");
  common(rh, true);
  rh->add_option("--hom", o.hom, "homomorphism document (JSON); defaults to the input's \"hom\"");
  auto tw = app.add_subcommand("tower", "composition tower along Frobenius");
  common(tw, true);
  tw->add_option("--e", o.e, "Frobenius exponent")->capture_default_str();
  tw->add_option("--steps", o.steps, "number of levels")->capture_default_str();
  auto vf = app.add_subcommand("verify", "run a property suite");
  vf->add_option("--suite", o.suite, "suite name or 'all'")->capture_default_str();
  vf->add_option("--imax", o.i_max, "homological cap")->capture_default_str();
  vf->add_option("--jmax", o.j_max, "internal degree cap")->capture_default_str();
  vf->add_option("--format", o.format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  std::string cmd = app.get_subcommands().front()->get_name();
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    auto start = std::chrono::steady_clock::now();
    ReportDocument doc = run(cmd, o, args);
    doc.elapsed_us =
        std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
    if (o.format == "json")
      std::cout << doc.render();
    else if (o.format == "csv")
      std::cout << render_csv(doc);
    else
      std::cout << render_text(doc);
    if (cmd == "verify" && !suite_from_json(doc.result).pass()) return 1;
    return 0;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_window_error(e.code()) ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
