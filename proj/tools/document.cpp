#include "document.hpp"

#include <algorithm>
#include <sstream>

#include "cspoly/errors.hpp"

namespace cspoly::cli {

using nlohmann::json;

ModelDescriptor describe(const ModelSpec& model) {
  ModelDescriptor d;
  d.name = preset_name(model.preset);
  d.N = model.N;
  d.kappa = model.kappa.str();
  d.alpha = {model.alpha2.str(), model.alpha1.str(), model.alpha0.str()};
  d.beta = {model.beta1.str(), model.beta0.str()};
  if (model.a) d.params["a"] = model.a->str();
  if (model.b) d.params["b"] = model.b->str();
  return d;
}

ModelDescriptor describe_free(std::size_t N, const Rat& kappa) {
  ModelDescriptor d;
  d.name = "none";
  d.N = N;
  d.kappa = kappa.str();
  return d;
}

namespace {

template <class Range>
std::vector<Term> sorted(const Range& range) {
  std::vector<Term> out;
  for (const auto& [e, c] : range) out.push_back({e, c.str()});
  std::stable_sort(out.begin(), out.end(),
                   [](const Term& a, const Term& b) { return grevlex_greater(a.exponent, b.exponent); });
  return out;
}

}  // namespace

std::vector<Term> terms_of(const SymPoly& p) {
  std::vector<std::pair<Exponent, Rat>> v;
  for (const auto& [lam, c] : p.terms()) v.emplace_back(lam.vec().parts(), c);
  return sorted(v);
}

std::vector<Term> terms_of(const Polynomial& p) { return sorted(p.terms()); }

std::vector<Term> terms_of(const FExpansion& e) {
  std::vector<std::pair<Exponent, Rat>> v;
  for (const auto& [m, c] : e) v.emplace_back(m.parts(), c);
  return sorted(v);
}

std::vector<Term> terms_of(const GExpansion& e) {
  std::vector<std::pair<Exponent, Rat>> v;
  for (const auto& [lam, c] : e) v.emplace_back(lam.vec().parts(), c);
  return sorted(v);
}

json to_json(const OutputDocument& doc) {
  json j;
  j["command"] = doc.command;
  json m;
  m["name"] = doc.model.name;
  m["N"] = doc.model.N;
  m["kappa"] = doc.model.kappa;
  m["alpha"] = doc.model.alpha;
  m["beta"] = doc.model.beta;
  m["params"] = doc.model.params;
  j["model"] = m;
  if (doc.index) j["index"] = *doc.index;
  if (doc.ntilde) j["ntilde"] = *doc.ntilde;
  if (doc.eigenvalue) j["eigenvalue"] = *doc.eigenvalue;
  j["basis"] = doc.basis;
  json terms = json::array();
  for (const auto& t : doc.terms) {
    json jt;
    if (doc.x_block) {
      const auto split = std::min(*doc.x_block, t.exponent.size());
      jt["x"] = std::vector<int>(t.exponent.begin(), t.exponent.begin() + split);
      jt["xtilde"] = std::vector<int>(t.exponent.begin() + split, t.exponent.end());
    } else {
      jt["exponent"] = t.exponent;
    }
    jt["coeff"] = t.coeff;
    terms.push_back(jt);
  }
  if (doc.x_block) j["x_block"] = *doc.x_block;
  j["terms"] = terms;
  if (!doc.verification.is_null()) j["verification"] = doc.verification;
  return j;
}

OutputDocument from_json(const json& j) {
  try {
    OutputDocument doc;
    doc.command = j.at("command").get<std::string>();
    const auto& m = j.at("model");
    doc.model.name = m.at("name").get<std::string>();
    doc.model.N = m.at("N").get<std::size_t>();
    doc.model.kappa = m.at("kappa").get<std::string>();
    doc.model.alpha = m.at("alpha").get<std::vector<std::string>>();
    doc.model.beta = m.at("beta").get<std::vector<std::string>>();
    doc.model.params = m.at("params").get<std::map<std::string, std::string>>();
    if (j.contains("index")) doc.index = j.at("index").get<std::vector<int>>();
    if (j.contains("ntilde")) doc.ntilde = j.at("ntilde").get<std::vector<int>>();
    if (j.contains("eigenvalue")) doc.eigenvalue = j.at("eigenvalue").get<std::string>();
    doc.basis = j.at("basis").get<std::string>();
    if (j.contains("x_block")) doc.x_block = j.at("x_block").get<std::size_t>();
    for (const auto& jt : j.at("terms")) {
      Term t;
      if (doc.x_block) {
        t.exponent = jt.at("x").get<std::vector<int>>();
        const auto tail = jt.at("xtilde").get<std::vector<int>>();
        t.exponent.insert(t.exponent.end(), tail.begin(), tail.end());
      } else {
        t.exponent = jt.at("exponent").get<std::vector<int>>();
      }
      t.coeff = jt.at("coeff").get<std::string>();
      Rat::parse(t.coeff);
      doc.terms.push_back(std::move(t));
    }
    if (j.contains("verification")) doc.verification = j.at("verification");
    return doc;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed document: ") + e.what());
  }
}

std::string emit_json(const OutputDocument& doc) { return to_json(doc).dump(2) + "\n"; }

OutputDocument parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed document: ") + e.what());
  }
  return from_json(j);
}

namespace {

std::string join(const std::vector<int>& v, char sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

std::string latex_rat(const Rat& r) {
  const Rat a = r.sign() < 0 ? -r : r;
  if (a.is_integer()) return a.str();
  return "\\frac{" + a.mpq().get_num().get_str() + "}{" + a.mpq().get_den().get_str() + "}";
}

std::string latex_monomial(const OutputDocument& doc, const std::vector<int>& e) {
  if (doc.basis != "x") return doc.basis + "_{(" + join(e, ',') + ")}";
  std::string out;
  const std::size_t split = doc.x_block ? *doc.x_block : e.size();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (!e[i]) continue;
    const bool tilde = i >= split;
    const std::size_t idx = tilde ? i - split + 1 : i + 1;
    out += std::string(tilde ? "\\tilde{x}" : "x") + "_{" + std::to_string(idx) + "}";
    if (e[i] != 1) out += "^{" + std::to_string(e[i]) + "}";
  }
  return out;
}

}  // namespace

std::string emit_csv(const OutputDocument& doc) {
  std::ostringstream os;
  if (doc.x_block) {
    os << "x,xtilde,coeff\n";
    for (const auto& t : doc.terms) {
      const auto split = std::min(*doc.x_block, t.exponent.size());
      os << join({t.exponent.begin(), t.exponent.begin() + split}, ' ') << ','
         << join({t.exponent.begin() + split, t.exponent.end()}, ' ') << ',' << t.coeff << '\n';
    }
  } else {
    os << "basis,exponent,coeff\n";
    for (const auto& t : doc.terms) os << doc.basis << ',' << join(t.exponent, ' ') << ',' << t.coeff << '\n';
  }
  return os.str();
}

std::string emit_latex(const OutputDocument& doc) {
  std::string lhs;
  if (doc.command == "eig") {
    lhs = "P_{(" + join(doc.index.value_or(std::vector<int>{}), ',') + ")}";
  } else if (doc.ntilde) {
    lhs = "f_{(" + join(doc.index.value_or(std::vector<int>{}), ',') + "),(" + join(*doc.ntilde, ',') + ")}";
  } else {
    lhs = "f_{(" + join(doc.index.value_or(std::vector<int>{}), ',') + ")}";
  }
  std::string rhs;
  for (const auto& t : doc.terms) {
    const Rat c = Rat::parse(t.coeff);
    const std::string mono = latex_monomial(doc, t.exponent);
    const bool unit = (c == Rat(1) || c == Rat(-1)) && !mono.empty();
    std::string piece = unit ? mono : latex_rat(c) + (mono.empty() ? "" : " " + mono);
    if (rhs.empty()) {
      rhs = (c.sign() < 0 ? "-" : "") + piece;
    } else {
      rhs += (c.sign() < 0 ? " - " : " + ") + piece;
    }
  }
  if (rhs.empty()) rhs = "0";
  return lhs + " = " + rhs + "\n";
}

}  // namespace cspoly::cli
