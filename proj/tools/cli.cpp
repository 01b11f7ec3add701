#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hecke_cells/orbits.hpp"
#include "hecke_cells/tilting.hpp"

namespace hecke_cells::cli {

namespace {

using nlohmann::json;

struct Config {
  std::string type;
  int p = 0;
  int len = -1;
  int margin = -1;
  std::string basis;
  std::string out;
  std::string format;
  std::string lambda;
  std::string mu;
  std::string word;
  std::string mode = "absolute";
};

std::pair<int, int> bounds(const AffineWeylGroup& G, const Config& c) {
  auto [L, m] = default_bounds(G.datum().type());
  if (c.len >= 0) L = c.len;
  if (c.margin >= 0) m = c.margin;
  else if (c.len >= 0) m = std::min(m, L);
  if (L < 0 || m < 0 || L < m) throw InputError("need 0 <= margin <= len");
  return {L, m};
}

CellPartition build_partition(const AffineWeylGroup& G, const Config& c) {
  auto [L, m] = bounds(G, c);
  if (!c.basis.empty()) {
    BasisTable table = BasisTable::load(G, c.basis);
    AntisphericalBasis basis(table, L + 1);
    return right_cells(basis, L, m);
  }
  return right_cells(G, L, m);
}

std::string format_or(const Config& c, const std::string& fallback, std::initializer_list<const char*> allowed) {
  std::string f = c.format.empty() ? fallback : c.format;
  for (const char* a : allowed)
    if (f == a) return f;
  throw InputError("format '" + f + "' is not available for this command");
}

Weight parse_weight(const AffineWeylGroup& G, const std::string& text, const char* flag) {
  if (text.empty()) throw InputError(std::string("missing ") + flag);
  Weight w = Weight::parse(text);
  G.check_weight(w);
  return w;
}

json poly_json(const LaurentPoly& c) {
  json poly = json::array();
  for (const auto& [e, k] : c.terms()) poly.push_back({e, k});
  return poly;
}

std::string cmd_cells(const AffineWeylGroup& G, const Config& c) {
  CellPartition P = build_partition(G, c);
  if (format_or(c, "json", {"json", "tsv"}) == "json") return P.to_json().dump(2) + "\n";
  std::string out = "word\tlength\tcell\ttrusted\n";
  for (int i = 0; i < P.num_elements(); ++i) {
    const AffineElement& w = P.ball->element(i);
    out += P.word(i) + "\t" + std::to_string(w.length()) + "\t" + std::to_string(P.cell_of[i]) + "\t" +
           (P.trusted_element(w) ? "1" : "0") + "\n";
  }
  return out;
}

std::string cmd_kl(const AffineWeylGroup& G, const Config& c) {
  KLBasis kl(G);
  std::vector<AffineElement> elements;
  if (!c.word.empty()) {
    elements.push_back(G.parse(c.word));
    if (!G.in_W(elements.back())) throw InputError("'" + c.word + "' is not in the affine Weyl group");
  } else if (c.len >= 0) {
    elements = G.enumerate_fW(c.len);
  } else {
    throw InputError("kl needs --word or --len");
  }
  BasisTable table = BasisTable::from_basis(kl, elements);
  if (format_or(c, "json", {"json", "tsv"}) == "json") return table.to_json().dump(2) + "\n";
  return table.to_text();
}

std::string cmd_asph(const AffineWeylGroup& G, const Config& c) {
  if (c.word.empty()) throw InputError("asph needs --word");
  AffineElement w = G.parse(c.word);
  if (!G.in_fW(w)) throw InputError("'" + c.word + "' is not minimal in its coset");
  const int L = std::max(w.length(), c.len);
  std::optional<BasisTable> table;
  if (!c.basis.empty()) table.emplace(BasisTable::load(G, c.basis));
  AntisphericalBasis basis = table ? AntisphericalBasis(*table, L) : AntisphericalBasis(G, L);
  const FWBall& ball = basis.ball();
  const auto& elt = basis.element(ball.index_or_throw(w));
  const bool as_json = format_or(c, "json", {"json", "tsv"}) == "json";
  if (!as_json) {
    std::string out = "y\tpoly\ttilting\n";
    for (auto it = elt.rbegin(); it != elt.rend(); ++it)
      out += ball.word(it->first) + "\t" + it->second.to_string() + "\t" + std::to_string(it->second.at_one()) + "\n";
    return out;
  }
  json j;
  j["schema"] = 1;
  j["type"] = G.datum().type().to_string();
  j["w"] = G.to_string(w);
  j["basis"] = {{"p", basis.prime()}, {"provenance", basis.provenance()}};
  j["terms"] = json::array();
  json tilt = json::object();
  for (auto it = elt.rbegin(); it != elt.rend(); ++it) {
    j["terms"].push_back({{"y", ball.word(it->first)}, {"poly", poly_json(it->second)}});
    tilt[ball.word(it->first)] = it->second.at_one();
  }
  j["tilting_class"] = tilt;
  return j.dump(2) + "\n";
}

std::string cmd_verlinde(const AffineWeylGroup& G, const Config& c) {
  if (c.p <= 0) throw InputError("verlinde needs --p");
  std::vector<Weight> lambdas, mus;
  const std::vector<Weight> all = alcove_weights(G, c.p);
  lambdas = c.lambda.empty() ? all : std::vector<Weight>{parse_weight(G, c.lambda, "--lambda")};
  mus = c.mu.empty() ? all : std::vector<Weight>{parse_weight(G, c.mu, "--mu")};
  const bool as_json = format_or(c, "tsv", {"json", "tsv"}) == "json";
  std::string tsv = "lambda\tmu\tnu\tmultiplicity\n";
  json rows = json::array();
  for (const Weight& l : lambdas) {
    for (const Weight& m : mus) {
      for (const auto& [nu, k] : fusion_row(G, l, m, c.p)) {
        tsv += l.to_string() + "\t" + m.to_string() + "\t" + nu.to_string() + "\t" + std::to_string(k) + "\n";
        rows.push_back({{"lambda", l.to_string()}, {"mu", m.to_string()}, {"nu", nu.to_string()}, {"multiplicity", k}});
      }
    }
  }
  if (!as_json) return tsv;
  json j;
  j["schema"] = 1;
  j["type"] = G.datum().type().to_string();
  j["p"] = c.p;
  j["rows"] = rows;
  return j.dump(2) + "\n";
}

std::string cmd_alcove(const AffineWeylGroup& G, const Config& c) {
  format_or(c, "json", {"json"});
  if (c.p <= 0) throw InputError("alcove needs --p");
  Weight lambda = parse_weight(G, c.lambda, "--lambda");
  Alcove a = G.alcove(lambda, c.p);
  CosetMinimality cm = G.coset_minimality(a.element);
  json j;
  j["schema"] = 1;
  j["type"] = G.datum().type().to_string();
  j["p"] = c.p;
  j["lambda"] = lambda.to_string();
  j["w"] = G.to_string(a.element);
  j["length"] = a.element.length();
  j["floors"] = a.floors;
  j["w_dot_0"] = G.dot_action(a.element, G.datum().zero(), c.p).to_string();
  j["in_fW"] = cm.in_fW;
  j["in_fWf"] = cm.in_fWf;
  return j.dump(2) + "\n";
}

std::string cmd_decompose(const AffineWeylGroup& G, const Config& c) {
  format_or(c, "json", {"json"});
  GenerationConstants gc = generation_constants(G);
  json j;
  j["schema"] = 1;
  j["type"] = G.datum().type().to_string();
  if (!c.word.empty()) {
    AffineElement w = G.parse(c.word);
    if (!G.in_fW(w)) throw InputError("'" + c.word + "' is not minimal in its coset");
    FWDecomposition dec = decompose_fW(G, gc, w);
    j["w"] = G.to_string(w);
    j["lambda"] = dec.lambda.to_string();
    j["z"] = G.to_string(dec.z);
    return j.dump(2) + "\n";
  }
  CellPartition P = build_partition(G, c);
  j["length_bound"] = P.length_bound;
  j["margin"] = P.margin;
  j["cells"] = json::array();
  for (int cell : P.trusted_cells()) {
    CellGenerators K = cell_generators(P, gc, cell);
    json cand = json::array(), minimal = json::array();
    for (const auto& v : K.candidate) cand.push_back(G.to_string(v));
    for (const auto& v : K.minimal) minimal.push_back(G.to_string(v));
    j["cells"].push_back({{"id", cell}, {"A", K.A}, {"candidate", cand}, {"minimal", minimal}});
  }
  return j.dump(2) + "\n";
}

std::string cmd_humphreys(const AffineWeylGroup& G, const Config& c) {
  format_or(c, "json", {"json"});
  if (c.p <= 0) throw InputError("humphreys needs --p");
  G.check_prime(c.p);
  Weight lambda = parse_weight(G, c.lambda, "--lambda");
  CellPartition P = build_partition(G, c);
  OrbitTable T(G.datum());
  CellOrbitMap M = cell_to_orbit(P, T);
  HumphreysMode mode = c.mode == "relative" ? HumphreysMode::Relative : HumphreysMode::Absolute;
  return humphreys_predict(P, T, M, lambda, c.p, mode).to_json(T).dump(2) + "\n";
}

std::string cmd_orbits(const AffineWeylGroup& G, const Config& c) {
  format_or(c, "json", {"json"});
  OrbitTable T(G.datum());
  json j = T.to_json();
  if (G.rank() <= 2 || c.len >= 0) {
    CellPartition P = build_partition(G, c);
    CellOrbitMap M = cell_to_orbit(P, T);
    json entries = json::array();
    for (const auto& [cell, o] : M.orbit_of) entries.push_back({{"cell", cell}, {"orbit", T.orbits()[o].name}});
    j["cell_map"] = {{"provenance", M.provenance},
                     {"complete", M.complete},
                     {"length_bound", P.length_bound},
                     {"margin", P.margin},
                     {"entries", entries}};
  }
  return j.dump(2) + "\n";
}

std::string cmd_plot(const AffineWeylGroup& G, const Config& c) {
  format_or(c, "svg", {"svg"});
  if (G.rank() != 2) throw UnsupportedError("plot needs a rank-2 type");
  CellPartition P = build_partition(G, c);
  return render_cell_diagram(P, c.p);
}

json error_json(const std::string& kind, const std::string& message) {
  return {{"error", kind}, {"message", message}};
}

}  // namespace

std::pair<int, int> default_bounds(const CartanType& t) {
  if (t.rank == 2) return t.series == 'G' ? std::pair{24, 8} : std::pair{20, 6};
  return {12, 4};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Affine Weyl group cells, canonical bases, tilting fusion and support predictions"};
  app.name("hecke-cells");
  app.require_subcommand(1);

  struct Sub {
    const char* name;
    const char* help;
    std::string (*run)(const AffineWeylGroup&, const Config&);
  };
  const Sub subs[] = {
      {"cells", "right cells of the antispherical module", cmd_cells},
      {"kl", "Kazhdan-Lusztig basis elements or a basis table", cmd_kl},
      {"asph", "antispherical canonical basis element and tilting class", cmd_asph},
      {"verlinde", "fusion multiplicities in the fundamental alcove", cmd_verlinde},
      {"alcove", "alcove of a weight", cmd_alcove},
      {"decompose", "w = t_lambda z factorisations and cell generators", cmd_decompose},
      {"humphreys", "predicted support variety of a tilting module", cmd_humphreys},
      {"orbits", "nilpotent orbits, closure order and cell map", cmd_orbits},
      {"plot", "SVG alcove diagram coloured by cell", cmd_plot},
  };
  std::map<CLI::App*, const Sub*> dispatch;
  for (const Sub& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("--type", cfg.type, "Cartan type, e.g. A1, C2, G2")->required();
    sub->add_option("--p", cfg.p, "characteristic; 0 is the formal regime");
    sub->add_option("--len", cfg.len, "length bound");
    sub->add_option("--margin", cfg.margin, "trust margin");
    sub->add_option("--basis", cfg.basis, "canonical basis table (.json or text)");
    sub->add_option("--out", cfg.out, "output path");
    sub->add_option("--format", cfg.format, "json, tsv or svg")->check(CLI::IsMember({"json", "tsv", "svg"}));
    sub->add_option("--lambda", cfg.lambda, "weight in fundamental-weight coordinates");
    sub->add_option("--mu", cfg.mu, "second weight");
    sub->add_option("--word", cfg.word, "reduced word, e.g. s0.s1");
    sub->add_option("--mode", cfg.mode, "absolute or relative")->check(CLI::IsMember({"absolute", "relative"}));
    dispatch[sub] = &s;
  }

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << app.help();
    err << error_json("usage", e.what()).dump() << "\n";
    return kUsage;
  }

  const Sub* sub = nullptr;
  for (const auto& [app_ptr, s] : dispatch)
    if (app_ptr->parsed()) sub = s;

  try {
    AffineWeylGroup G = AffineWeylGroup::from_type(cfg.type);
    std::string text = sub->run(G, cfg);
    if (cfg.out.empty()) {
      out << text;
    } else {
      std::ofstream f(cfg.out, std::ios::binary);
      if (!f) throw DataError("cannot write '" + cfg.out + "'");
      f << text;
    }
    return kOk;
  } catch (const UnsupportedError& e) {
    err << error_json("unsupported", e.what()).dump() << "\n";
    return kUnsupported;
  } catch (const DataError& e) {
    err << error_json("data", e.what()).dump() << "\n";
    return kData;
  } catch (const std::overflow_error& e) {
    err << error_json("unsupported", e.what()).dump() << "\n";
    return kUnsupported;
  } catch (const InputError& e) {
    err << error_json("input", e.what()).dump() << "\n";
    return kUsage;
  }
}

}  // namespace hecke_cells::cli
