#include <algorithm>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hecke_cells/hecke.hpp"

namespace hecke_cells {

BasisTable::BasisTable(AffineWeylGroup G, int p, std::string provenance)
    : G_(std::move(G)), p_(p), provenance_(std::move(provenance)) {
  if (p < 0) throw InputError("prime label must be nonnegative");
}

BasisTable BasisTable::from_basis(const CanonicalBasis& basis, const std::vector<AffineElement>& elements) {
  BasisTable t(basis.group(), basis.prime(), basis.provenance());
  for (const AffineElement& w : elements) t.insert(w, basis.element(w));
  return t;
}

HeckeElt BasisTable::element(const AffineElement& w) const {
  auto it = entries_.find(w);
  if (it == entries_.end()) throw DataError("basis table has no entry for " + G_.to_string(w));
  return it->second;
}

void BasisTable::insert(const AffineElement& w, HeckeElt expansion) {
  const std::string name = G_.to_string(w);
  if (!G_.in_W(w)) throw DataError("table entry outside W: " + name);
  auto diag = expansion.find(w);
  if (diag == expansion.end() || diag->second != LaurentPoly::constant(1))
    throw DataError("table entry " + name + ": diagonal coefficient is not 1");
  for (const auto& [y, c] : expansion) {
    if (y == w) continue;
    if (!G_.bruhat_leq(y, w))
      throw DataError("table entry " + name + ": term " + G_.to_string(y) + " is not below it in the Bruhat order");
    if (p_ == 0 && !c.in_positive_part())
      throw DataError("table entry " + name + ": coefficient of " + G_.to_string(y) + " is not in vZ[v]");
  }
  if (!entries_.emplace(w, std::move(expansion)).second) throw DataError("duplicate table entry " + name);
}

std::vector<AffineElement> BasisTable::ordered_keys() const {
  std::vector<std::pair<std::vector<int>, AffineElement>> keyed;
  for (const auto& [w, h] : entries_) keyed.emplace_back(G_.reduced_word(w), w);
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return word_less(a.first, b.first);
  });
  std::vector<AffineElement> out;
  for (auto& kv : keyed) out.push_back(kv.second);
  return out;
}

std::vector<std::pair<AffineElement, LaurentPoly>> BasisTable::ordered_terms(const HeckeElt& h) const {
  std::vector<std::tuple<std::vector<int>, AffineElement, LaurentPoly>> keyed;
  for (const auto& [y, c] : h) keyed.emplace_back(G_.reduced_word(y), y, c);
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    const auto& wa = std::get<0>(a);
    const auto& wb = std::get<0>(b);
    if (wa.size() != wb.size()) return wa.size() > wb.size();
    return word_less(wa, wb);
  });
  std::vector<std::pair<AffineElement, LaurentPoly>> out;
  for (auto& [word, y, c] : keyed) out.emplace_back(y, c);
  return out;
}

std::string BasisTable::to_text() const {
  std::string out = "p " + std::to_string(p_) + "\n";
  if (!provenance_.empty()) out += "provenance " + provenance_ + "\n";
  for (const AffineElement& w : ordered_keys()) {
    out += "w=" + G_.to_string(w) + " :";
    bool first = true;
    for (const auto& [y, c] : ordered_terms(entries_.at(w))) {
      out += first ? " " : ", ";
      out += G_.to_string(y) + ":" + c.to_string();
      first = false;
    }
    out += "\n";
  }
  return out;
}

BasisTable BasisTable::from_text(const AffineWeylGroup& G, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::optional<BasisTable> table;
  auto fail = [&](const std::string& what) -> void {
    throw DataError("basis table line " + std::to_string(lineno) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    if (!table) {
      if (line.rfind("p ", 0) != 0) fail("expected header 'p <prime>'");
      int p = -1;
      try {
        size_t pos = 0;
        p = std::stoi(line.substr(2), &pos);
        if (pos != line.size() - 2) p = -1;
      } catch (const std::exception&) {
      }
      if (p < 0) fail("malformed prime label");
      table.emplace(G, p);
      continue;
    }
    if (line.rfind("provenance ", 0) == 0) {
      table->provenance_ = line.substr(11);
      continue;
    }
    if (line.rfind("w=", 0) != 0) fail("malformed record");
    size_t sep = line.find(" :");
    if (sep == std::string::npos) fail("malformed record: missing ' :'");
    try {
      AffineElement w = G.parse(line.substr(2, sep - 2));
      std::string rest = line.substr(sep + 2);
      HeckeElt h;
      size_t start = 0;
      while (start < rest.size()) {
        size_t end = rest.find(',', start);
        std::string entry = rest.substr(start, end == std::string::npos ? std::string::npos : end - start);
        start = end == std::string::npos ? rest.size() : end + 1;
        size_t colon = entry.rfind(':');
        if (colon == std::string::npos) fail("malformed term '" + entry + "'");
        std::string key = entry.substr(0, colon);
        key.erase(0, key.find_first_not_of(' '));
        AffineElement y = G.parse(key);
        if (h.count(y)) fail("repeated term " + key);
        LaurentPoly c = LaurentPoly::parse(entry.substr(colon + 1));
        if (c.is_zero()) fail("zero coefficient for " + key);
        h.emplace(y, c);
      }
      table->insert(w, std::move(h));
    } catch (const InputError& e) {
      fail(e.what());
    } catch (const DataError& e) {
      if (std::string(e.what()).rfind("basis table line", 0) == 0) throw;
      fail(e.what());
    }
  }
  if (!table) return BasisTable(G, 0);
  return std::move(*table);
}

nlohmann::json BasisTable::to_json() const {
  nlohmann::json j;
  j["schema"] = 1;
  j["type"] = G_.datum().type().to_string();
  j["p"] = p_;
  j["provenance"] = provenance_;
  j["entries"] = nlohmann::json::array();
  for (const AffineElement& w : ordered_keys()) {
    nlohmann::json e;
    e["w"] = G_.to_string(w);
    e["terms"] = nlohmann::json::array();
    for (const auto& [y, c] : ordered_terms(entries_.at(w))) {
      nlohmann::json t;
      t["y"] = G_.to_string(y);
      nlohmann::json poly = nlohmann::json::array();
      for (const auto& [ex, co] : c.terms()) poly.push_back({ex, co});
      t["poly"] = poly;
      e["terms"].push_back(t);
    }
    j["entries"].push_back(e);
  }
  return j;
}

BasisTable BasisTable::from_json(const AffineWeylGroup& G, const nlohmann::json& j) {
  try {
    if (j.contains("type") && j.at("type").get<std::string>() != G.datum().type().to_string())
      throw DataError("basis table is for type " + j.at("type").get<std::string>());
    BasisTable t(G, j.at("p").get<int>(), j.value("provenance", std::string()));
    for (const auto& e : j.at("entries")) {
      AffineElement w = G.parse(e.at("w").get<std::string>());
      HeckeElt h;
      for (const auto& term : e.at("terms")) {
        std::vector<LaurentPoly::Term> terms;
        for (const auto& pair : term.at("poly"))
          terms.emplace_back(pair.at(0).get<int>(), pair.at(1).get<std::int64_t>());
        AffineElement y = G.parse(term.at("y").get<std::string>());
        if (h.count(y)) throw DataError("repeated term in entry " + e.at("w").get<std::string>());
        h.emplace(y, LaurentPoly::from_terms(std::move(terms)));
      }
      t.insert(w, std::move(h));
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed basis table: ") + e.what());
  } catch (const InputError& e) {
    throw DataError(std::string("malformed basis table: ") + e.what());
  }
}

BasisTable BasisTable::load(const AffineWeylGroup& G, const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read basis table '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  const bool json = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
  if (json) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(ss.str());
    } catch (const nlohmann::json::exception& e) {
      throw DataError(std::string("malformed basis table: ") + e.what());
    }
    return from_json(G, j);
  }
  return from_text(G, ss.str());
}

void BasisTable::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write basis table '" + path + "'");
  const bool json = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
  if (json)
    out << to_json().dump(2) << "\n";
  else
    out << to_text();
}

}  // namespace hecke_cells
