#include <cstdint>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "opetope/dfc.hpp"
#include "opetope/dot.hpp"
#include "opetope/equivalence.hpp"
#include "opetope/functor_p.hpp"
#include "opetope/functor_z.hpp"
#include "opetope/generator.hpp"
#include "opetope/io.hpp"
#include "opetope/oracle.hpp"

using namespace opetope;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kRejected = 1;
constexpr int kUsage = 2;

struct Loaded {
  DocKind kind = DocKind::unknown;
  RawDfc dfc;
  RawOpetope ope;
};

Loaded load(const std::string& path) {
  std::string text = read_file(path);
  Loaded l;
  l.kind = sniff(text);
  if (l.kind == DocKind::dfc) {
    auto p = parse_dfc(text);
    for (const auto& w : p.warnings) std::cerr << path << ": warning: " << w << "\n";
    l.dfc = std::move(p.value);
  } else if (l.kind == DocKind::opetope) {
    auto p = parse_opetope(text);
    for (const auto& w : p.warnings) std::cerr << path << ": warning: " << w << "\n";
    l.ope = std::move(p.value);
  } else {
    throw ParseError(path + ": neither a DFC nor an opetope document");
  }
  return l;
}

void print(const std::vector<Diagnostic>& ds) {
  for (const auto& d : ds) std::cout << to_json_line(d) << "\n";
}

Checked<Dfc> need_dfc(const Loaded& l, bool allow_point) {
  DfcOptions o;
  o.allow_point = allow_point;
  return dfc_validate(l.dfc, o);
}

int cmd_validate(const std::vector<std::string>& files, bool allow_point) {
  int rc = kOk;
  for (const auto& f : files) {
    Loaded l = load(f);
    std::vector<Diagnostic> ds = l.kind == DocKind::dfc ? need_dfc(l, allow_point).diagnostics
                                                        : opetope_validate(l.ope).diagnostics;
    print(ds);
    if (!ds.empty()) rc = kRejected;
  }
  return rc;
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty())
    std::cout << text;
  else
    write_file(out, text);
}

int cmd_convert(const std::string& file, const std::string& to, const std::string& out, bool allow_point) {
  Loaded l = load(file);
  if (to == "ope") {
    if (l.kind != DocKind::dfc) throw ParseError("convert --to ope expects a DFC document");
    auto c = need_dfc(l, allow_point);
    if (!c.ok()) return print(c.diagnostics), kRejected;
    auto y = z_of(*c);
    if (!y.ok()) return print(y.diagnostics), kRejected;
    emit(serialize_opetope(y->raw()), out);
    return kOk;
  }
  if (l.kind != DocKind::opetope) throw ParseError("convert --to dfc expects an opetope document");
  auto y = opetope_validate(l.ope);
  if (!y.ok()) return print(y.diagnostics), kRejected;
  auto c = p_of(*y);
  if (!c.ok()) return print(c.diagnostics), kRejected;
  emit(serialize_dfc(c->mop().raw()), out);
  return kOk;
}

const char* status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::none: return "none";
    case SearchStatus::exhausted: return "exhausted";
  }
  return "?";
}

template <class R>
int report_search(const R& r) {
  json j = {{"status", status_name(r.status)}, {"expansions", r.expansions}, {"witnesses", json::array()}};
  for (const auto& w : r.witnesses) j["witnesses"].push_back(json::parse(iso_json(w)));
  std::cout << j.dump() << "\n";
  return r.found() ? kOk : kRejected;
}

int cmd_iso(const std::string& a, const std::string& b, const SearchOptions& opts, bool allow_point) {
  Loaded la = load(a), lb = load(b);
  if (la.kind != lb.kind) throw ParseError("iso needs two documents of the same kind");
  if (la.kind == DocKind::dfc) {
    auto c = need_dfc(la, allow_point), d = need_dfc(lb, allow_point);
    if (!c.ok() || !d.ok()) return print(c.diagnostics), print(d.diagnostics), kRejected;
    return report_search(dfc_iso_search(*c, *d, opts));
  }
  auto y = opetope_validate(la.ope), z = opetope_validate(lb.ope);
  if (!y.ok() || !z.ok()) return print(y.diagnostics), print(z.diagnostics), kRejected;
  return report_search(opetope_iso_search(*y, *z, opts));
}

template <class M>
int report_map(const M& m) {
  if (!m.ok()) {
    std::cout << json{{"verified", false}, {"error", m.error}}.dump() << "\n";
    return kRejected;
  }
  std::cout << json{{"verified", true}, {"witness", json::parse(iso_json(*m.value))}}.dump() << "\n";
  return kOk;
}

int cmd_roundtrip(const std::string& file, bool allow_point) {
  Loaded l = load(file);
  if (l.kind == DocKind::dfc) {
    auto c = need_dfc(l, allow_point);
    if (!c.ok()) return print(c.diagnostics), kRejected;
    return report_map(theta(*c));
  }
  auto y = opetope_validate(l.ope);
  if (!y.ok()) return print(y.diagnostics), kRejected;
  return report_map(tau(*y));
}

int cmd_gen(const GenParams& params, std::uint64_t seed, int count, bool as_dfc) {
  for (int i = 0; i < count; ++i) {
    Opetope y = gen_opetope(seed + static_cast<std::uint64_t>(i), params);
    if (as_dfc) {
      auto c = p_of(y);
      if (!c.ok()) return print(c.diagnostics), kRejected;
      std::cout << serialize_dfc(c->mop().raw());
    } else {
      std::cout << serialize_opetope(y.raw());
    }
  }
  return kOk;
}

int cmd_oracle(const std::string& check, const std::vector<std::string>& files, bool allow_point) {
  if (files.empty()) throw ParseError("oracle needs a file");
  Loaded l = load(files[0]);
  if (check == "kernel") {
    if (l.kind != DocKind::opetope) throw ParseError("kernel expects an opetope document");
    bool ok = true;
    for (std::size_t i = 0; i + 1 < l.ope.trees.size() && i < l.ope.constellations.size(); ++i) {
      auto v = oracle_kernel(l.ope.trees[i], l.ope.constellations[i], l.ope.trees[i + 1]);
      std::cout << json{{"level", i}, {"ok", v.ok}, {"witness", v.witness}, {"dots", v.dots}}.dump() << "\n";
      ok = ok && v.ok;
    }
    return ok ? kOk : kRejected;
  }
  if (l.kind != DocKind::dfc) throw ParseError(check + " expects a DFC document");
  if (check == "thinness") {
    bool ok = true;
    for (const auto& ch : oracle_thinness(l.dfc)) {
      std::cout << json{{"z", ch.z}, {"y", ch.y}, {"x", ch.x}, {"loop", ch.loop_chain}, {"ok", ch.ok},
                        {"completions", ch.completions}}
                       .dump()
                << "\n";
      ok = ok && ch.ok;
    }
    return ok ? kOk : kRejected;
  }
  if (check == "strictness") {
    int top = -1;
    for (const auto& c : l.dfc.cells) top = std::max(top, c.dim);
    bool ok = true;
    for (int k = 0; k <= top; ++k)
      for (Sign s : {Sign::minus, Sign::plus}) {
        auto o = oracle_strictness(l.dfc, k, s);
        std::cout << json{{"k", k}, {"sign", std::string(sign_symbol(s))}, {"strict", o.strict},
                          {"pairs", o.closure.size()}}
                         .dump()
                  << "\n";
        ok = ok && o.strict;
      }
    return ok ? kOk : kRejected;
  }
  if (check == "hexagon") {
    auto h = oracle_hexagon(l.dfc);
    std::cout << json{{"ok", h.ok}, {"configurations", h.configurations}, {"counterexample", h.counterexample}}.dump()
              << "\n";
    return h.ok ? kOk : kRejected;
  }
  if (check == "iso") {
    if (files.size() != 2) throw ParseError("oracle iso needs two files");
    Loaded other = load(files[1]);
    auto ws = oracle_iso(l.dfc, other.dfc);
    if (!ws) {
      std::cout << json{{"feasible", false}}.dump() << "\n";
      return kRejected;
    }
    std::cout << json{{"feasible", true}, {"witnesses", *ws}}.dump() << "\n";
    return ws->empty() ? kRejected : kOk;
  }
  if (check == "lemmas") {
    auto c = need_dfc(l, allow_point);
    if (!c.ok()) return print(c.diagnostics), kRejected;
    bool ok = true;
    for (const auto& r : lemma_suite(*c)) {
      std::cout << json{{"lemma", r.name}, {"checked", r.checked}, {"counterexamples", r.counterexamples}}.dump()
                << "\n";
      ok = ok && r.counterexamples.empty();
    }
    return ok ? kOk : kRejected;
  }
  throw ParseError("unknown oracle check " + check);
}

int cmd_export_dot(const std::string& file, int level) {
  Loaded l = load(file);
  if (l.kind == DocKind::dfc) {
    std::cout << export_dot(l.dfc);
    return kOk;
  }
  auto y = opetope_validate(l.ope);
  if (!y.ok()) return print(y.diagnostics), kRejected;
  if (level < 0) {
    std::cout << export_dot(*y);
  } else {
    if (level > y->dim()) throw ParseError("--tree is out of range");
    SubdividedTree t = level < y->dim() ? y->subdivided(level) : SubdividedTree{y->tree(level), {}};
    std::cout << export_dot(t, "T" + std::to_string(level));
  }
  return kOk;
}

int cmd_info(const std::string& file, bool allow_point) {
  Loaded l = load(file);
  json j;
  if (l.kind == DocKind::dfc) {
    auto c = need_dfc(l, allow_point);
    if (!c.ok()) return print(c.diagnostics), kRejected;
    const auto& mop = c->mop();
    json counts = json::array();
    for (int k = -1; k <= c->dim(); ++k) counts.push_back(mop.cells_of_dim(k).size());
    auto s = strata(*c);
    j = {{"kind", "dfc"}, {"dim", c->dim()}, {"top", c->omega_id()}, {"cells_by_dim", counts},
         {"lambda", s.lambda}, {"loops", s.loops}, {"nulls", s.nulls}, {"degenerate", c->degenerate()}};
  } else {
    auto y = opetope_validate(l.ope);
    if (!y.ok()) return print(y.diagnostics), kRejected;
    json levels = json::array();
    for (int i = 0; i <= y->dim(); ++i) {
      std::size_t whites = i < y->dim() ? whitedots(y->subdivided(i)).size() : 0;
      levels.push_back({{"nodes", y->tree(i).nodes.size()}, {"edges", y->tree(i).edges.size()}, {"whitedots", whites}});
    }
    j = {{"kind", "opetope"}, {"dim", y->dim()}, {"levels", levels}, {"degenerate", y->degenerate()}};
  }
  std::cout << j.dump() << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Validate and translate opetopes between face complexes and zoom complexes"};
  app.require_subcommand(1);
  app.fallthrough();
  bool allow_point = false;
  app.add_flag("--allow-point", allow_point, "accept the 0-dimensional point as a DFC");

  std::vector<std::string> files;
  std::string file, file2, to, out, check;
  int level = -1, count = 1;
  std::uint64_t seed = 1;
  bool all = false, as_dfc = false;
  std::int64_t budget = SearchOptions{}.budget;
  GenParams gp;

  auto* validate = app.add_subcommand("validate", "check every axiom; diagnostics as JSON lines");
  validate->add_option("files", files, "documents")->required()->check(CLI::ExistingFile);

  auto* convert = app.add_subcommand("convert", "translate between the two encodings");
  convert->add_option("file", file)->required()->check(CLI::ExistingFile);
  convert->add_option("--to", to, "target encoding")->required()->check(CLI::IsMember({"ope", "dfc"}));
  convert->add_option("-o,--output", out, "output path");

  auto* iso = app.add_subcommand("iso", "search for an isomorphism");
  iso->add_option("a", file)->required()->check(CLI::ExistingFile);
  iso->add_option("b", file2)->required()->check(CLI::ExistingFile);
  iso->add_flag("--all", all, "report every witness within the budget");
  iso->add_option("--budget", budget, "assignment cap, 0 for none");

  auto* roundtrip = app.add_subcommand("roundtrip", "build and verify theta or tau");
  roundtrip->add_option("file", file)->required()->check(CLI::ExistingFile);

  auto* gen = app.add_subcommand("gen", "generate random opetopes");
  gen->add_option("--dim", gp.dim)->check(CLI::Range(0, 12));
  gen->add_option("--seed", seed);
  gen->add_option("--max-nodes", gp.max_linear_nodes)->check(CLI::NonNegativeNumber);
  gen->add_option("--max-whitedots", gp.max_whitedots)->check(CLI::NonNegativeNumber);
  gen->add_option("--max-dots", gp.max_dots)->check(CLI::PositiveNumber);
  gen->add_option("--count", count)->check(CLI::PositiveNumber);
  gen->add_flag("--dfc", as_dfc, "emit the face complex of each opetope");

  auto* oracle = app.add_subcommand("oracle", "run a brute-force checker");
  oracle->add_option("check", check)
      ->required()
      ->check(CLI::IsMember({"thinness", "strictness", "kernel", "hexagon", "iso", "lemmas"}));
  oracle->add_option("files", files)->required()->check(CLI::ExistingFile);

  auto* dot = app.add_subcommand("export-dot", "render as Graphviz DOT");
  dot->add_option("file", file)->required()->check(CLI::ExistingFile);
  dot->add_option("--tree", level, "only this level of an opetope");

  auto* info = app.add_subcommand("info", "summary counts");
  info->add_option("file", file)->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    SearchOptions so;
    so.all = all;
    so.budget = budget;
    if (*validate) return cmd_validate(files, allow_point);
    if (*convert) return cmd_convert(file, to, out, allow_point);
    if (*iso) return cmd_iso(file, file2, so, allow_point);
    if (*roundtrip) return cmd_roundtrip(file, allow_point);
    if (*gen) return cmd_gen(gp, seed, count, as_dfc);
    if (*oracle) return cmd_oracle(check, files, allow_point);
    if (*dot) return cmd_export_dot(file, level);
    if (*info) return cmd_info(file, allow_point);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kRejected;
  }
  return kUsage;
}
