#include "fanring/serialize.hpp"

#include <json.hpp>

#include "fanring/errors.hpp"

namespace fanring {

namespace {

using nlohmann::json;

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw parse_error(e.what(), e.byte);
  }
}

const json& need(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end())
    throw parse_error(std::string("missing key \"") + key + '"');
  return *it;
}

int to_int(const json& j, const char* what) {
  if (!j.is_number_integer())
    throw parse_error(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::vector<int> to_int_vector(const json& j, const char* what) {
  if (!j.is_array())
    throw parse_error(std::string(what) + " must be an array");
  std::vector<int> out;
  out.reserve(j.size());
  for (const json& v : j) out.push_back(to_int(v, what));
  return out;
}

Mode mode_from_json(const json& j) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "additive") return Mode::additive;
    if (s == "multiplicative") return Mode::multiplicative;
  }
  throw parse_error("mode must be \"additive\" or \"multiplicative\"");
}

json cone_to_json(const ConeRef& c) {
  json out = json::array();
  for (int ray : c.rays) out.push_back(ray + 1);
  return out;
}

ConeRef cone_from_json(const json& j, const char* what) {
  std::vector<int> rays = to_int_vector(j, what);
  for (int& r : rays) --r;
  return ConeRef(std::move(rays));
}

json coeff_to_json(const CoeffElem& c) {
  json out = json::array();
  for (const auto& [exp, coef] : c.terms) {
    json term;
    term["c"] = coef.str();
    term["e"] = exp;
    out.push_back(std::move(term));
  }
  return out;
}

CoeffElem coeff_from_json(const json& j, Mode mode, int n) {
  if (!j.is_array()) throw parse_error("coefficient must be an array of terms");
  CoeffElem c(mode, n);
  for (const json& term : j) {
    std::vector<int> exp = to_int_vector(need(term, "e"), "r-exponent");
    if (static_cast<int>(exp.size()) != n)
      throw parse_error("r-exponent vector has wrong length");
    c.add_term(std::move(exp), Int(need(term, "c").get<std::string>()));
  }
  return c;
}

json poly_to_json(const XPolynomial& p) {
  json j;
  j["d"] = p.d;
  j["mode"] = to_string(p.mode);
  j["n"] = p.n;
  json terms = json::array();
  for (const auto& [exp, coeff] : p.terms) {
    json term;
    term["c"] = coeff_to_json(coeff);
    term["e"] = exp;
    terms.push_back(std::move(term));
  }
  j["terms"] = std::move(terms);
  return j;
}

XPolynomial poly_from_json(const json& j) {
  Mode mode = mode_from_json(need(j, "mode"));
  int d = to_int(need(j, "d"), "d");
  int n = to_int(need(j, "n"), "n");
  XPolynomial p(mode, d, n);
  for (const json& term : need(j, "terms")) {
    std::vector<int> exp = to_int_vector(need(term, "e"), "x-exponent");
    p.add_term(std::move(exp), coeff_from_json(need(term, "c"), mode, n));
  }
  return p;
}

json basis_to_json(const ShellingData& data) {
  json out = json::array();
  for (const ConeRef& t : data.tau) out.push_back(cone_to_json(t));
  return out;
}

// Everything a parser does beyond JSON syntax counts as parsing too:
// keep input_error (and so parse_error) as is, fold anything else
// (type mismatches, bad integers, mode violations) into parse_error.
template <typename F>
auto parsing(F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const input_error&) {
    throw;
  } catch (const std::exception& e) {
    throw parse_error(e.what());
  }
}

}  // namespace

FanFile parse_fan_file(const std::string& text) {
  json j = parse_text(text);
  return parsing([&] {
    FanFile file;
    file.fan.dim = to_int(need(j, "dim"), "dim");
    for (const json& ray : need(j, "rays")) {
      std::vector<Int> coords;
      for (const json& v : ray)
        coords.push_back(Int(to_int(v, "ray coordinate")));
      file.fan.rays.push_back(LatticeVector(std::move(coords)));
    }
    for (const json& cone : need(j, "max_cones"))
      file.fan.max_cones.push_back(cone_from_json(cone, "max cone"));
    check_structure(file.fan);
    if (j.contains("order")) {
      std::vector<int> order = to_int_vector(j["order"], "order");
      int m = file.fan.max_cone_count();
      std::vector<bool> seen(m, false);
      if (static_cast<int>(order.size()) != m)
        throw input_error("stored order is not a permutation of the maximal cones");
      for (int& v : order) {
        if (v < 1 || v > m || seen[v - 1])
          throw input_error(
              "stored order is not a permutation of the maximal cones");
        seen[v - 1] = true;
        --v;
      }
      file.order = std::move(order);
    }
    if (j.contains("name")) {
      if (!j["name"].is_string()) throw parse_error("name must be a string");
      file.name = j["name"].get<std::string>();
    }
    return file;
  });
}

std::string write_fan_file(const FanFile& file) {
  json j;
  j["dim"] = file.fan.dim;
  json rays = json::array();
  for (const LatticeVector& v : file.fan.rays) {
    json ray = json::array();
    for (const Int& c : v.coords) ray.push_back(c.convert_to<long long>());
    rays.push_back(std::move(ray));
  }
  j["rays"] = std::move(rays);
  json cones = json::array();
  for (const ConeRef& c : file.fan.max_cones) cones.push_back(cone_to_json(c));
  j["max_cones"] = std::move(cones);
  if (file.order) {
    json order = json::array();
    for (int v : *file.order) order.push_back(v + 1);
    j["order"] = std::move(order);
  }
  if (file.name) j["name"] = *file.name;
  return j.dump(2);
}

XPolynomial parse_polynomial(const std::string& text) {
  json j = parse_text(text);
  return parsing([&] { return poly_from_json(j); });
}

std::string write_polynomial(const XPolynomial& p) {
  return poly_to_json(p).dump(2);
}

Presentation parse_presentation(const std::string& text) {
  json j = parse_text(text);
  return parsing([&] {
    Presentation pres;
    pres.mode = mode_from_json(need(j, "mode"));
    pres.d = to_int(need(j, "d"), "d");
    pres.n = to_int(need(j, "n"), "n");
    for (const json& rel : need(j, "relations")) {
      Relation r;
      std::string kind = need(rel, "kind").get<std::string>();
      if (kind == "monomial")
        r.kind = RelationKind::monomial;
      else if (kind == "linear")
        r.kind = RelationKind::linear;
      else if (kind == "product")
        r.kind = RelationKind::product;
      else
        throw parse_error("unknown relation kind \"" + kind + '"');
      r.poly = poly_from_json(need(rel, "poly"));
      if (r.poly.mode != pres.mode || r.poly.d != pres.d || r.poly.n != pres.n)
        throw parse_error("relation polynomial shape differs from the header");
      if (rel.contains("nonface"))
        r.nonface = cone_from_json(rel["nonface"], "nonface");
      if (rel.contains("u")) {
        std::vector<Int> coords;
        for (int v : to_int_vector(rel["u"], "u")) coords.push_back(Int(v));
        r.u = DualVector(std::move(coords));
      }
      pres.relations.push_back(std::move(r));
    }
    return pres;
  });
}

std::string write_presentation(const Presentation& pres) {
  json j;
  j["mode"] = to_string(pres.mode);
  j["d"] = pres.d;
  j["n"] = pres.n;
  json rels = json::array();
  for (const Relation& r : pres.relations) {
    json rel;
    switch (r.kind) {
      case RelationKind::monomial: rel["kind"] = "monomial"; break;
      case RelationKind::linear: rel["kind"] = "linear"; break;
      case RelationKind::product: rel["kind"] = "product"; break;
    }
    rel["poly"] = poly_to_json(r.poly);
    if (r.nonface) rel["nonface"] = cone_to_json(*r.nonface);
    if (r.u) {
      json u = json::array();
      for (const Int& c : r.u->coords) u.push_back(c.convert_to<long long>());
      rel["u"] = std::move(u);
    }
    rels.push_back(std::move(rel));
  }
  j["relations"] = std::move(rels);
  return j.dump(2);
}

NormalForm parse_normal_form(const std::string& text) {
  json j = parse_text(text);
  return parsing([&] {
    Mode mode = mode_from_json(need(j, "mode"));
    int n = to_int(need(j, "n"), "n");
    const json& coeffs = need(j, "coeffs");
    if (!coeffs.is_array()) throw parse_error("coeffs must be an array");
    NormalForm nf(mode, n, static_cast<int>(coeffs.size()));
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      nf.coeffs[i] = coeff_from_json(coeffs[i], mode, n);
    return nf;
  });
}

std::string write_normal_form(const NormalForm& nf, const ShellingData& data) {
  if (nf.size() != data.size())
    throw dimension_error("normal form shape does not match the order data");
  json j;
  j["mode"] = to_string(nf.mode);
  j["n"] = nf.n;
  j["basis"] = basis_to_json(data);
  json coeffs = json::array();
  for (const CoeffElem& c : nf.coeffs) coeffs.push_back(coeff_to_json(c));
  j["coeffs"] = std::move(coeffs);
  return j.dump(2);
}

MultTable parse_mult_table(const std::string& text) {
  json j = parse_text(text);
  return parsing([&] {
    MultTable table;
    table.mode = mode_from_json(need(j, "mode"));
    table.n = to_int(need(j, "n"), "n");
    table.size = to_int(need(j, "size"), "size");
    const json& entries = need(j, "entries");
    if (!entries.is_array() ||
        entries.size() != static_cast<std::size_t>(table.size) * table.size)
      throw parse_error("entries must hold size*size normal forms");
    for (const json& entry : entries) {
      if (!entry.is_array() ||
          entry.size() != static_cast<std::size_t>(table.size))
        throw parse_error("table entry has the wrong number of coefficients");
      NormalForm nf(table.mode, table.n, table.size);
      for (int i = 0; i < table.size; ++i)
        nf.coeffs[i] = coeff_from_json(entry[i], table.mode, table.n);
      table.entries.push_back(std::move(nf));
    }
    return table;
  });
}

std::string write_mult_table(const MultTable& table, const ShellingData& data) {
  if (table.size != data.size())
    throw dimension_error("table shape does not match the order data");
  json j;
  j["mode"] = to_string(table.mode);
  j["n"] = table.n;
  j["size"] = table.size;
  j["basis"] = basis_to_json(data);
  json entries = json::array();
  for (const NormalForm& nf : table.entries) {
    json entry = json::array();
    for (const CoeffElem& c : nf.coeffs) entry.push_back(coeff_to_json(c));
    entries.push_back(std::move(entry));
  }
  j["entries"] = std::move(entries);
  return j.dump(2);
}

SpecTable parse_spec_table(const std::string& text) {
  json j = parse_text(text);
  return parsing([&] {
    SpecTable table;
    table.size = to_int(need(j, "size"), "size");
    const json& entries = need(j, "entries");
    if (!entries.is_array() ||
        entries.size() != static_cast<std::size_t>(table.size) * table.size)
      throw parse_error("entries must hold size*size rows");
    for (const json& entry : entries) {
      if (!entry.is_array() ||
          entry.size() != static_cast<std::size_t>(table.size))
        throw parse_error("table entry has the wrong number of values");
      std::vector<TruncPoly> row;
      for (const json& value : entry) {
        if (!value.is_array())
          throw parse_error("specialized value must be an array of terms");
        TruncPoly p;
        for (const json& term : value) {
          std::vector<int> exp = to_int_vector(need(term, "e"), "t-exponent");
          Int c(need(term, "c").get<std::string>());
          if (c != 0) p.terms.emplace(std::move(exp), std::move(c));
        }
        row.push_back(std::move(p));
      }
      table.entries.push_back(std::move(row));
    }
    return table;
  });
}

std::string write_spec_table(const SpecTable& table,
                             const SpecializationTarget& target) {
  json j;
  j["size"] = table.size;
  j["vars"] = target.vars();
  j["caps"] = target.caps();
  json entries = json::array();
  for (const auto& row : table.entries) {
    json entry = json::array();
    for (const TruncPoly& p : row) {
      json value = json::array();
      for (const auto& [exp, c] : p.terms) {
        json term;
        term["c"] = c.str();
        term["e"] = exp;
        value.push_back(std::move(term));
      }
      entry.push_back(std::move(value));
    }
    entries.push_back(std::move(entry));
  }
  j["entries"] = std::move(entries);
  return j.dump(2);
}

}  // namespace fanring
