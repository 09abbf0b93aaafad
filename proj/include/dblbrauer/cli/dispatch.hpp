#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dblbrauer/invariants.hpp"
#include "dblbrauer/io/json.hpp"
#include "dblbrauer/moduli.hpp"

namespace dblbrauer {

enum class OutputFormat { tsv, json };

struct RunConfig {
  std::string subcommand;
  FieldTag field{FieldKind::prime_field, 13};
  std::uint64_t seed = 1;
  ResidueMode mode = ResidueMode::tame;
  std::string input = "-";
  OutputFormat format = OutputFormat::tsv;
  std::string out;
};

// What a subcommand emits: a JSON document, TSV rows, and an exit code.
struct Report {
  json doc = json::object();
  std::vector<std::vector<std::string>> rows;
  int code = 0;

  void row(std::vector<std::string> r) { rows.push_back(std::move(r)); }
  std::string render(OutputFormat f) const {
    if (f == OutputFormat::json) return doc.dump(2) + "\n";
    std::string s;
    for (auto& r : rows) {
      for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "\t" : "") + r[i];
      s += "\n";
    }
    return s;
  }
};

namespace cli {

inline json read_payload(const std::string& path, std::istream& in) {
  std::stringstream buf;
  if (path == "-") buf << in.rdbuf();
  else {
    std::ifstream f(path);
    if (!f) throw domain_error("cannot open input file " + path);
    buf << f.rdbuf();
  }
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw parse_error(std::string("malformed JSON: ") + e.what(), e.byte ? e.byte - 1 : 0);
  }
}

template <class K>
void residue_rows(Report& rep, const SymbolClass<K>& s, const std::vector<PlaneCurve<K>>& declared, Rng& rng,
                  ResidueMode mode) {
  json list = json::array();
  for (auto& c : symbol_support(s, declared, rng)) {
    auto r = residue_symbol(s, c, mode);
    const char* v = verdict_name(classify_residue(r, rng));
    list.push_back({{"curve", to_string(c.f())}, {"residue", to_string(r.value())}, {"verdict", v}});
    rep.row({"residue", to_string(c.f()), v, to_string(r.value())});
  }
  rep.doc["residues"] = list;
}

inline Report residues(const RunConfig& cfg, std::istream& in) {
  const json j = read_payload(cfg.input, in);
  return with_field(field_from_json(j, cfg.field), [&](const auto& k) {
    using K = std::decay_t<decltype(k)>;
    Rng rng(cfg.seed);
    Report rep;
    SymbolClass<K> s = symbol_from_json(j, k);
    auto declared = curves_from_json(j, k, rng);
    rep.doc["field"] = k.tag().to_string();
    rep.doc["mode"] = mode_name(cfg.mode);
    rep.doc["symbol"] = symbol_json(s);
    residue_rows(rep, s, declared, rng, cfg.mode);
    return rep;
  });
}

inline Report clifford(const RunConfig& cfg, std::istream& in) {
  const json j = read_payload(cfg.input, in);
  return with_field(field_from_json(j, cfg.field), [&](const auto& k) {
    using K = std::decay_t<decltype(k)>;
    Rng rng(cfg.seed);
    Report rep;
    FormMatrix<K> m = matrix_from_json(require(j, "entries"), k);
    std::optional<MPoly<K>> ell;
    if (j.contains("ell")) ell = parse_poly(require_string(j, "ell"), k);
    auto declared = curves_from_json(j, k, rng);
    MinorLadder<K> l = ensure_principal_minors(m, rng, ell);
    SymbolClass<K> s = clifford_symbols(diagonalize(l));
    rep.doc["field"] = k.tag().to_string();
    rep.doc["ladder"] = ladder_json(l);
    rep.doc["symbol"] = symbol_json(s);
    for (std::size_t i = 0; i < l.minors.size(); ++i) rep.row({"minor", std::to_string(i + 1), to_string(l.minors[i])});
    for (auto& t : s.terms()) rep.row({"symbol", to_string(t.a), to_string(t.b)});
    residue_rows(rep, s, declared, rng, cfg.mode);
    return rep;
  });
}

template <class K>
SymResolution<K> load_resolution(const json& j, const K& k) {
  return resolution_from_json(j, k);
}

inline Report resolution_check(const RunConfig& cfg, std::istream& in) {
  const json j = read_payload(cfg.input, in);
  return with_field(field_from_json(j, cfg.field), [&](const auto& k) {
    Rng rng(cfg.seed);
    Report rep;
    try {
      auto r = load_resolution(j, k);
      auto b = branch_curve(r, rng);
      rep.doc = {{"valid", true},
                 {"partition", partition_string(r.partition)},
                 {"e", r.e},
                 {"eps", r.epsilon},
                 {"det", to_string(b.det)},
                 {"smooth", smoothness_name(b.smooth)}};
      rep.row({"valid", "true"});
      rep.row({"partition", partition_string(r.partition)});
      rep.row({"e", std::to_string(r.e)});
      rep.row({"eps", std::to_string(r.epsilon)});
      rep.row({"det", to_string(b.det)});
      rep.row({"smooth", smoothness_name(b.smooth)});
      if (!b.witness.empty()) {
        rep.doc["witness"] = b.witness;
        rep.row({"witness", b.witness});
      }
      if (b.smooth == Smoothness::singular) rep.code = 1;
    } catch (const invalid_resolution& e) {
      rep.doc = {{"valid", false}, {"reason", e.what()}};
      rep.row({"valid", "false", e.what()});
      rep.code = 1;
    }
    return rep;
  });
}

template <class K>
PlaneCurve<K> smooth_branch(const SymResolution<K>& r, Rng& rng) {
  auto b = branch_curve(r, rng);
  if (b.smooth != Smoothness::smooth || !b.curve)
    throw unsupported(std::string("branch curve smoothness is ") + smoothness_name(b.smooth));
  return *b.curve;
}

template <class K>
void divisor_rows(Report& rep, const char* label, const CurveDivisor<K>& d) {
  for (auto& c : d.clusters()) {
    if (c.point.empty()) rep.row({label, to_string(c.factor), to_string(c.y), std::to_string(c.mult)});
    else
      rep.row({label, to_string(c.factor, 'a'), "[" + to_string(c.point[0], 'a') + " : " + to_string(c.point[1], 'a') + " : " +
                                                   to_string(c.point[2], 'a') + "]",
               std::to_string(c.mult)});
  }
}

inline Report weil_divisor_cmd(const RunConfig& cfg, std::istream& in) {
  const json j = read_payload(cfg.input, in);
  return with_field(field_from_json(j, cfg.field), [&](const auto& k) {
    Rng rng(cfg.seed);
    Report rep;
    auto r = load_resolution(j, k);
    auto c = smooth_branch(r, rng);
    auto w = weil_divisor(r, c, rng);
    rep.doc = {{"twist", w.twist}, {"deg_D", w.d.degree()}, {"D", divisor_json(w.d)}, {"L.C", divisor_json(w.lc)}};
    rep.row({"twist", std::to_string(w.twist)});
    rep.row({"deg_D", std::to_string(w.d.degree())});
    divisor_rows(rep, "D", w.d);
    divisor_rows(rep, "L.C", w.lc);
    return rep;
  });
}

inline Report compat(const RunConfig& cfg, std::istream& in, std::optional<std::size_t> column) {
  const json j = read_payload(cfg.input, in);
  return with_field(field_from_json(j, cfg.field), [&](const auto& k) {
    Rng rng(cfg.seed);
    Report rep;
    auto r = load_resolution(j, k);
    auto c = smooth_branch(r, rng);
    auto cr = compatibility_check(r, c, rng, cfg.mode, column);
    const char* verdict = cr.pass() ? "PASS" : "FAIL";
    rep.doc = {{"verdict", verdict}, {"column", cr.column}, {"divisor_identity", cr.divisor_identity},
               {"residues_ok", cr.residues_ok}, {"message", cr.message}};
    if (cr.lhs) rep.doc["lhs"] = divisor_json(*cr.lhs);
    if (cr.rhs) rep.doc["rhs"] = divisor_json(*cr.rhs);
    rep.row({verdict, cr.message});
    rep.row({"column", std::to_string(cr.column)});
    rep.row({"divisor_identity", cr.divisor_identity ? "true" : "false"});
    rep.row({"residues_ok", cr.residues_ok ? "true" : "false"});
    rep.code = cr.pass() ? 0 : 1;
    return rep;
  });
}

inline Report invariants(std::int64_t p, std::int64_t d, std::optional<std::int64_t> rho) {
  Report rep;
  auto c = hodge_invariants(p, d);
  rep.doc = {{"p", c.p}, {"d", c.d}, {"h01", c.h01}, {"h20", c.h20}, {"b2", c.b2}, {"genus", c.genus}};
  std::vector<std::string> row{std::to_string(c.p),   std::to_string(c.d),  std::to_string(c.h01),
                               std::to_string(c.h20), std::to_string(c.b2), std::to_string(c.genus)};
  if (rho) {
    auto br = brauer_p_rank(p, d, *rho);
    rep.doc["rho"] = *rho;
    rep.doc["brauer_p_rank"] = br;
    row.push_back(std::to_string(*rho));
    row.push_back(std::to_string(br));
  }
  rep.row(row);
  return rep;
}

inline Report moduli_dim_cmd(int e, const std::string& parts) {
  Report rep;
  auto r = moduli_dim(e, parse_partition(parts));
  const char* kind = r.generic ? "generic" : "special";
  rep.doc = {{"e", r.e}, {"partition", partition_string(r.parts)}, {"epsilon", r.epsilon}, {"twists", r.twists},
             {"dim", r.dim_l}, {"bound", curve_moduli_dim(e)}, {"kind", kind}};
  rep.row({std::to_string(r.dim_l), kind});
  return rep;
}

inline Report verify_appendix(int e_max) {
  Report rep;
  auto v = verify_combinatorics(e_max);
  json eq = json::object();
  for (auto& [e, names] : v.equality_sets) {
    eq[std::to_string(e)] = names;
    std::string joined;
    for (auto& n : names) joined += (joined.empty() ? "" : " ") + n;
    rep.row({"equality", std::to_string(e), joined});
  }
  for (auto& c : v.counterexamples) rep.row({"counterexample", c});
  rep.row({std::to_string(v.counterexamples.size()) + " counterexamples"});
  rep.doc = {{"e_max", e_max},     {"partitions", v.partitions},    {"equality_cases", v.equality_cases},
             {"overlaps", v.overlaps}, {"equality_sets", eq}, {"counterexamples", v.counterexamples}};
  rep.code = v.ok() ? 0 : 1;
  return rep;
}

inline Report k3_catalog_cmd() {
  Report rep;
  json rows = json::array();
  rep.row({"partition", "count", "L⊗L", "quadric bundle", "case"});
  for (auto& r : k3_catalog()) {
    rows.push_back({{"partition", partition_string(r.parts)}, {"count", r.count}, {"LL", r.square},
                    {"quadric_bundle", r.bundle}, {"case", r.tag}});
    rep.row({partition_string(r.parts), std::to_string(r.count), r.square, r.bundle, r.tag});
  }
  rep.doc["rows"] = rows;
  return rep;
}

inline Report gen_fixture(const RunConfig& cfg, const std::string& parts) {
  return with_field(cfg.field, [&](const auto& k) {
    Rng rng(cfg.seed);
    Report rep;
    auto fx = generate_fixture(k, parse_partition(parts), rng);
    rep.doc = resolution_json(fx.resolution);
    rep.row({rep.doc.dump()});
    return rep;
  });
}

}  // namespace cli

// Parses arguments, runs one subcommand and writes its report. Exit codes:
// 0 success, 1 FAIL, counterexample or undecided, 2 input error.
inline int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Brauer classes of double planes from symmetric resolutions"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string field = "fp:13", mode = "tame", format = "tsv";
  app.add_option("--field", field, "coefficient field: qq, qqi or fp:Q")->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for every randomized step")->capture_default_str();
  app.add_option("--mode", mode, "residue sign convention: tame or paper")->capture_default_str();
  app.add_option("--format", format, "output format: tsv or json")->capture_default_str();
  app.add_option("--out", cfg.out, "write the report to this file");

  auto with_input = [&](CLI::App* s) {
    s->add_option("input", cfg.input, "JSON payload path, - for stdin")->capture_default_str();
    return s;
  };
  with_input(app.add_subcommand("residues", "residue profile of a symbol class"));
  with_input(app.add_subcommand("clifford", "Clifford class and residues of a symmetric matrix of forms"));
  with_input(app.add_subcommand("resolution-check", "validate a resolution fixture and its branch curve"));
  with_input(app.add_subcommand("weil-divisor", "Weil divisor read off the last column of minors"));
  std::size_t column = 0;
  auto* compat = with_input(app.add_subcommand("compat", "divisor-level compatibility check"));
  compat->add_option("--column", column, "take D from this column instead of the last");
  std::int64_t p = 0, d = 0, rho = 0;
  auto* inv = app.add_subcommand("invariants", "invariants of a p-cyclic cover branched in degree pd");
  inv->add_option("p", p)->required();
  inv->add_option("d", d)->required();
  auto* rho_opt = inv->add_option("rho", rho, "Picard rank");
  int e = 0, e_max = 0;
  std::string parts;
  auto* md = app.add_subcommand("moduli-dim", "dimension count for a partition");
  md->add_option("e", e)->required();
  md->add_option("partition", parts)->required();
  auto* va = app.add_subcommand("verify-appendix", "check the dimension bound for every partition up to e_max");
  va->add_option("e_max", e_max)->required();
  app.add_subcommand("k3-catalog", "partitions of 6");
  auto* gf = app.add_subcommand("gen-fixture", "sample a smooth resolution fixture");
  gf->add_option("partition", parts)->required();
  for (auto* s : app.get_subcommands({})) s->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();

  Report rep;
  try {
    cfg.field = FieldTag::parse(field);
    if (mode == "tame") cfg.mode = ResidueMode::tame;
    else if (mode == "paper") cfg.mode = ResidueMode::paper;
    else throw domain_error("unknown mode '" + mode + "'");
    if (format == "tsv") cfg.format = OutputFormat::tsv;
    else if (format == "json") cfg.format = OutputFormat::json;
    else throw domain_error("unknown format '" + format + "'");
    const std::string& sc = cfg.subcommand;
    if (sc == "residues") rep = cli::residues(cfg, in);
    else if (sc == "clifford") rep = cli::clifford(cfg, in);
    else if (sc == "resolution-check") rep = cli::resolution_check(cfg, in);
    else if (sc == "weil-divisor") rep = cli::weil_divisor_cmd(cfg, in);
    else if (sc == "compat") rep = cli::compat(cfg, in, column ? std::optional<std::size_t>(column) : std::nullopt);
    else if (sc == "invariants") rep = cli::invariants(p, d, rho_opt->count() ? std::optional<std::int64_t>(rho) : std::nullopt);
    else if (sc == "moduli-dim") rep = cli::moduli_dim_cmd(e, parts);
    else if (sc == "verify-appendix") rep = cli::verify_appendix(e_max);
    else if (sc == "k3-catalog") rep = cli::k3_catalog_cmd();
    else rep = cli::gen_fixture(cfg, parts);
  } catch (const unsupported& e) {
    err << "UNDECIDED: " << e.what() << "\n";
    return 1;
  } catch (const retry_exhausted& e) {
    err << "UNDECIDED: " << e.what() << "\n";
    return 1;
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const std::string text = rep.render(cfg.format);
  if (cfg.out.empty()) out << text;
  else {
    std::ofstream f(cfg.out);
    if (!f) {
      err << "error: cannot write " << cfg.out << "\n";
      return 2;
    }
    f << text;
  }
  return rep.code;
}

}  // namespace dblbrauer
