#include "extword/json_io.hpp"

namespace extword {

using nlohmann::json;

json exponent_to_json(const Exponent& e) {
  json arr = json::array();
  int top = std::max(e.degree(), 0);
  for (int i = 0; i <= top; ++i) {
    if (e.coeff(i).fits_slong_p())
      arr.push_back(e.coeff(i).get_si());
    else
      arr.push_back(e.coeff(i).get_str());
  }
  return arr;
}

Exponent exponent_from_json(const json& j, int dims) {
  if (!j.is_array()) throw invalid_input_error("exponent JSON must be an array");
  std::vector<Int> cs;
  for (const auto& x : j) {
    if (x.is_string())
      cs.emplace_back(x.get<std::string>());
    else
      cs.emplace_back(static_cast<long>(x.get<int64_t>()));
  }
  if (static_cast<int>(cs.size()) > dims) throw invalid_input_error("exponent JSON exceeds d_max");
  cs.resize(static_cast<size_t>(dims), Int(0));
  return Exponent::from_coeffs(std::move(cs));
}

json word_to_json(const Word& w) {
  const auto& ab = *w.alphabet();
  json blocks = json::array();
  for (const auto& b : w.blocks()) {
    if (const auto* f = std::get_if<FiniteBlock>(&b)) {
      json ls = json::array();
      for (LetterId l : f->letters) ls.push_back(ab.name(l));
      blocks.push_back({{"type", "finite"}, {"letters", ls}});
    } else if (const auto* p = std::get_if<PowerBlock>(&b)) {
      json e;
      if (p->exp.fits_slong_p())
        e = p->exp.get_si();
      else
        e = p->exp.get_str();
      blocks.push_back({{"type", "power"}, {"base", word_to_json(*p->base)}, {"exp", e}});
    } else {
      const auto& a = std::get<AtomBlock>(b);
      blocks.push_back({{"type", "atom"},
                        {"level", a.level},
                        {"rho", word_to_json(*a.rho)},
                        {"lambda", word_to_json(*a.lambda)},
                        {"offset", exponent_to_json(a.offset)}});
    }
  }
  return {{"blocks", blocks}};
}

Word word_from_json(const json& j, const std::shared_ptr<const Alphabet>& ab, int dims) {
  Word out(ab, dims);
  for (const auto& b : j.at("blocks")) {
    std::string type = b.at("type").get<std::string>();
    if (type == "finite") {
      std::vector<LetterId> ls;
      for (const auto& s : b.at("letters")) ls.push_back(ab->find(s.get<std::string>()));
      out = raw_concat(out, make_finite(ab, dims, std::move(ls)));
    } else if (type == "power") {
      Word base = word_from_json(b.at("base"), ab, dims);
      Int e = b.at("exp").is_string() ? Int(b.at("exp").get<std::string>())
                                      : Int(static_cast<long>(b.at("exp").get<int64_t>()));
      out = raw_concat(out, make_power(base, e));
    } else if (type == "atom") {
      Word rho = word_from_json(b.at("rho"), ab, dims);
      Word lam = word_from_json(b.at("lambda"), ab, dims);
      out = raw_concat(out, make_atom(b.at("level").get<int>(), rho, lam,
                                      exponent_from_json(b.at("offset"), dims)));
    } else {
      throw invalid_input_error("unknown block type in word JSON: " + type);
    }
  }
  return out;
}

json lattice_to_json(const PeriodLattice& l) {
  json rows = json::array();
  for (const auto& r : l.rows()) rows.push_back(exponent_to_json(r));
  return rows;
}

}  // namespace extword
