#include "extword/base_group.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace extword {

std::vector<LetterId> BaseGroup::involute_letters(const std::vector<LetterId>& u) const {
  const auto& ab = *alphabet();
  std::vector<LetterId> out(u.rbegin(), u.rend());
  for (auto& l : out) l = ab.inverse(l);
  return out;
}

bool BaseGroup::is_local_geodesic_window(const std::vector<LetterId>& u) const {
  size_t n = u.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j <= n; ++j) {
      std::vector<LetterId> f(u.begin() + static_cast<long>(i), u.begin() + static_cast<long>(j));
      auto g = geodesic_length(f);
      if (!g) throw invalid_input_error("geodesic capability missing");
      if (*g < static_cast<long>(f.size())) return false;
    }
  return true;
}

namespace {

// ---------------------------------------------------------------------------

class FreeGroup final : public BaseGroup {
public:
  explicit FreeGroup(const std::vector<std::string>& gens)
      : ab_(Alphabet::with_inverses(gens)), desc_("free:") {
    for (size_t i = 0; i < gens.size(); ++i) desc_ += (i ? "," : "") + gens[i];
  }
  const std::shared_ptr<const Alphabet>& alphabet() const override { return ab_; }

  std::vector<LetterId> normal_form(const std::vector<LetterId>& u) const override {
    std::vector<LetterId> st;
    for (LetterId l : u) {
      if (!st.empty() && ab_->is_inverse_pair(st.back(), l))
        st.pop_back();
      else
        st.push_back(l);
    }
    return st;
  }

  std::optional<Int> cyclic_member(const std::vector<LetterId>& u,
                                   const std::vector<LetterId>& v) const override {
    auto ru = normal_form(u);
    auto rv = normal_form(v);
    if (rv.empty()) return ru.empty() ? std::optional<Int>(0) : std::nullopt;
    if (ru.empty()) return Int(0);
    // v = c w c~ with w cyclically reduced
    std::vector<LetterId> c;
    while (rv.size() >= 2 && ab_->is_inverse_pair(rv.back(), rv.front())) {
      c.push_back(rv.front());
      rv.erase(rv.begin());
      rv.pop_back();
    }
    // primitive root p of w: w = p^j
    long n = static_cast<long>(rv.size());
    long p = n;
    for (long d = 1; d <= n / 2; ++d) {
      if (n % d) continue;
      bool ok = true;
      for (long i = 0; i + d < n && ok; ++i) ok = rv[static_cast<size_t>(i)] == rv[static_cast<size_t>(i + d)];
      if (ok) {
        p = d;
        break;
      }
    }
    long j = n / p;
    // u must reduce to c p^{jm} c~
    if (ru.size() < 2 * c.size()) return std::nullopt;
    for (size_t i = 0; i < c.size(); ++i) {
      if (ru[i] != c[i]) return std::nullopt;
      if (ru[ru.size() - 1 - i] != ab_->inverse(c[i])) return std::nullopt;
    }
    std::vector<LetterId> mid(ru.begin() + static_cast<long>(c.size()),
                              ru.end() - static_cast<long>(c.size()));
    if (mid.empty()) return Int(0);
    long mn = static_cast<long>(mid.size());
    if (mn % p) return std::nullopt;
    long k = mn / p;
    bool pos = true, neg = true;
    for (long i = 0; i < mn; ++i) {
      if (mid[static_cast<size_t>(i)] != rv[static_cast<size_t>(i % p)]) pos = false;
      if (mid[static_cast<size_t>(i)] != ab_->inverse(rv[static_cast<size_t>(p - 1 - (i % p))])) neg = false;
    }
    if (pos && k % j == 0) return Int(k / j);
    if (neg && k % j == 0) return Int(-k / j);
    return std::nullopt;
  }

  std::optional<long> geodesic_length(const std::vector<LetterId>& u) const override {
    return static_cast<long>(normal_form(u).size());
  }

  bool is_free() const override { return true; }
  std::string describe() const override { return desc_; }

private:
  std::shared_ptr<const Alphabet> ab_;
  std::string desc_;
};

// ---------------------------------------------------------------------------

class FreeAbelian final : public BaseGroup {
public:
  FreeAbelian(int rank, std::string desc) : rank_(rank), desc_(std::move(desc)) {
    if (rank < 1 || rank > 26) throw invalid_input_error("abelian rank must be in [1,26]");
    std::vector<std::string> names;
    for (int i = 0; i < rank; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
    ab_ = Alphabet::with_inverses(names);
  }
  const std::shared_ptr<const Alphabet>& alphabet() const override { return ab_; }

  std::vector<Int> exponent_vector(const std::vector<LetterId>& u) const {
    std::vector<Int> v(static_cast<size_t>(rank_), Int(0));
    for (LetterId l : u) {
      int base = l / 2;
      v[static_cast<size_t>(base)] += (l % 2 == 0) ? 1 : -1;
    }
    return v;
  }

  // Positive-exponent letters ascending, then negative-exponent letters
  // descending: this layout commutes with the involution.
  std::vector<LetterId> normal_form(const std::vector<LetterId>& u) const override {
    auto v = exponent_vector(u);
    std::vector<LetterId> out;
    for (int i = 0; i < rank_; ++i)
      for (Int k = 0; k < v[static_cast<size_t>(i)]; ++k) out.push_back(2 * i);
    for (int i = rank_ - 1; i >= 0; --i)
      for (Int k = 0; k > v[static_cast<size_t>(i)]; --k) out.push_back(2 * i + 1);
    return out;
  }

  std::optional<Int> cyclic_member(const std::vector<LetterId>& u,
                                   const std::vector<LetterId>& v) const override {
    auto vu = exponent_vector(u), vv = exponent_vector(v);
    bool vz = std::all_of(vv.begin(), vv.end(), [](const Int& x) { return x == 0; });
    bool uz = std::all_of(vu.begin(), vu.end(), [](const Int& x) { return x == 0; });
    if (vz) return uz ? std::optional<Int>(0) : std::nullopt;
    std::optional<Int> m;
    for (int i = 0; i < rank_; ++i) {
      const Int &a = vu[static_cast<size_t>(i)], &b = vv[static_cast<size_t>(i)];
      if (b == 0) {
        if (a != 0) return std::nullopt;
        continue;
      }
      if (a % b != 0) return std::nullopt;
      Int k = a / b;
      if (m && *m != k) return std::nullopt;
      m = k;
    }
    return m ? m : std::optional<Int>(0);
  }

  std::optional<long> geodesic_length(const std::vector<LetterId>& u) const override {
    auto v = exponent_vector(u);
    Int s = 0;
    for (const auto& x : v) s += abs(x);
    return s.get_si();
  }

  std::string describe() const override { return desc_; }

private:
  int rank_;
  std::string desc_;
  std::shared_ptr<const Alphabet> ab_;
};

// ---------------------------------------------------------------------------

class FiniteTable final : public BaseGroup {
public:
  explicit FiniteTable(const std::string& json_text) {
    auto j = nlohmann::json::parse(json_text);
    std::vector<std::string> elems = j.at("elements").get<std::vector<std::string>>();
    for (size_t i = 0; i < elems.size(); ++i) index_[elems[i]] = static_cast<int>(i);
    n_ = static_cast<int>(elems.size());
    identity_ = index_.at(j.at("identity").get<std::string>());
    mul_.assign(static_cast<size_t>(n_ * n_), -1);
    for (auto it = j.at("table").begin(); it != j.at("table").end(); ++it) {
      std::string key = it.key();
      auto comma = key.find(',');
      if (comma == std::string::npos) throw invalid_input_error("bad table key: " + key);
      int x = index_.at(key.substr(0, comma)), y = index_.at(key.substr(comma + 1));
      mul_[static_cast<size_t>(x * n_ + y)] = index_.at(it.value().get<std::string>());
    }
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y)
        if (mul_[static_cast<size_t>(x * n_ + y)] < 0)
          throw invalid_input_error("incomplete multiplication table");
    inv_elem_.assign(static_cast<size_t>(n_), -1);
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y)
        if (mul_[static_cast<size_t>(x * n_ + y)] == identity_) inv_elem_[static_cast<size_t>(x)] = y;
    // generators: base symbol -> element; ~s maps to the inverse element.
    // Letters whose element is an involution (g = g^-1) become fixed points.
    std::map<std::string, int> gens;
    for (auto it = j.at("generators").begin(); it != j.at("generators").end(); ++it) {
      std::string name = it.key();
      if (!name.empty() && name[0] == '~') continue;
      gens[name] = index_.at(it.value().get<std::string>());
    }
    std::vector<std::string> names;
    std::vector<LetterId> invs;
    for (auto& [name, el] : gens) {
      if (inv_elem_[static_cast<size_t>(el)] == el) {
        letter_elem_.push_back(el);
        invs.push_back(static_cast<LetterId>(names.size()));
        names.push_back(name);
      } else {
        LetterId pos = static_cast<LetterId>(names.size());
        names.push_back(name);
        names.push_back("~" + name);
        letter_elem_.push_back(el);
        letter_elem_.push_back(inv_elem_[static_cast<size_t>(el)]);
        invs.push_back(pos + 1);
        invs.push_back(pos);
      }
    }
    ab_ = Alphabet::custom(std::move(names), std::move(invs));
    build_reps();
  }

  const std::shared_ptr<const Alphabet>& alphabet() const override { return ab_; }

  int eval(const std::vector<LetterId>& u) const {
    int g = identity_;
    for (LetterId l : u) g = mul_[static_cast<size_t>(g * n_ + letter_elem_[static_cast<size_t>(l)])];
    return g;
  }

  std::vector<LetterId> normal_form(const std::vector<LetterId>& u) const override {
    return reps_[static_cast<size_t>(eval(u))];
  }
  bool is_trivial(const std::vector<LetterId>& u) const override { return eval(u) == identity_; }

  std::optional<Int> cyclic_member(const std::vector<LetterId>& u,
                                   const std::vector<LetterId>& v) const override {
    int gu = eval(u), gv = eval(v);
    int x = identity_;
    for (int m = 0; m < n_ + 1; ++m) {
      if (x == gu) return Int(m);
      x = mul_[static_cast<size_t>(x * n_ + gv)];
      if (x == identity_ && m > 0) break;
    }
    return std::nullopt;
  }

  std::optional<long> geodesic_length(const std::vector<LetterId>& u) const override {
    return dist_[static_cast<size_t>(eval(u))];
  }

  bool is_finite_group() const override { return true; }
  std::string describe() const override { return "table(" + std::to_string(n_) + " elements)"; }

private:
  void build_reps() {
    reps_.assign(static_cast<size_t>(n_), {});
    dist_.assign(static_cast<size_t>(n_), -1);
    std::vector<int> order;
    dist_[static_cast<size_t>(identity_)] = 0;
    order.push_back(identity_);
    for (size_t qi = 0; qi < order.size(); ++qi) {
      int g = order[qi];
      for (LetterId l = 0; l < ab_->size(); ++l) {
        int h = mul_[static_cast<size_t>(g * n_ + letter_elem_[static_cast<size_t>(l)])];
        if (dist_[static_cast<size_t>(h)] >= 0) continue;
        dist_[static_cast<size_t>(h)] = dist_[static_cast<size_t>(g)] + 1;
        reps_[static_cast<size_t>(h)] = reps_[static_cast<size_t>(g)];
        reps_[static_cast<size_t>(h)].push_back(l);
        order.push_back(h);
      }
    }
    for (int g = 0; g < n_; ++g)
      if (dist_[static_cast<size_t>(g)] < 0)
        throw invalid_input_error("generators do not generate the whole table group");
    // involution-compatible representatives where possible
    for (int g = 0; g < n_; ++g) {
      int gi = inv_elem_[static_cast<size_t>(g)];
      if (gi == g) {
        // look for a short palindromic representative
        auto pal = find_palindromic(g);
        if (pal) reps_[static_cast<size_t>(g)] = *pal;
        continue;
      }
      if (gi < g) continue;
      auto wi = involute_of(reps_[static_cast<size_t>(g)]);
      reps_[static_cast<size_t>(gi)] = wi;
    }
  }

  std::optional<std::vector<LetterId>> find_palindromic(int g) const {
    // w = u c involute(u) with c a fixed-point letter, or w = u involute(u)
    if (g == identity_) return std::vector<LetterId>{};
    std::vector<std::pair<int, std::vector<LetterId>>> layer = {{identity_, {}}};
    for (int depth = 0; depth < 4; ++depth) {
      for (auto& [h, w] : layer) {
        for (LetterId c = 0; c < ab_->size(); ++c) {
          if (ab_->inverse(c) != c) continue;
          // candidate u c involute(u) where u = w
          std::vector<LetterId> cand = w;
          cand.push_back(c);
          auto iw = involute_of(w);
          cand.insert(cand.end(), iw.begin(), iw.end());
          if (eval(cand) == g) return cand;
        }
      }
      std::vector<std::pair<int, std::vector<LetterId>>> next;
      for (auto& [h, w] : layer)
        for (LetterId l = 0; l < ab_->size(); ++l) {
          auto w2 = w;
          w2.push_back(l);
          next.emplace_back(eval(w2), w2);
        }
      layer = std::move(next);
      if (layer.size() > 4096) break;
    }
    return std::nullopt;
  }

  std::vector<LetterId> involute_of(const std::vector<LetterId>& u) const {
    std::vector<LetterId> out(u.rbegin(), u.rend());
    for (auto& l : out) l = ab_->inverse(l);
    return out;
  }

  std::shared_ptr<const Alphabet> ab_;
  int n_ = 0, identity_ = 0;
  std::vector<int> mul_, inv_elem_;
  std::vector<int> letter_elem_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::vector<LetterId>> reps_;
  std::vector<long> dist_;
};

}  // namespace

BaseGroupPtr make_free_group(const std::vector<std::string>& generators) {
  if (generators.empty()) throw invalid_input_error("free group needs at least one generator");
  return std::make_shared<FreeGroup>(generators);
}

BaseGroupPtr make_free_abelian(int rank) {
  return std::make_shared<FreeAbelian>(rank, "abelian:" + std::to_string(rank));
}

BaseGroupPtr make_cyclic_z() { return std::make_shared<FreeAbelian>(1, "cyclic"); }

BaseGroupPtr make_finite_table(const std::string& json_text) {
  return std::make_shared<FiniteTable>(json_text);
}

BaseGroupPtr make_group(const std::string& spec) {
  if (spec.rfind("free:", 0) == 0) {
    std::vector<std::string> gens;
    std::string rest = spec.substr(5);
    std::istringstream is(rest);
    std::string tok;
    while (std::getline(is, tok, ','))
      if (!tok.empty()) gens.push_back(tok);
    return make_free_group(gens);
  }
  if (spec.rfind("abelian:", 0) == 0) return make_free_abelian(std::stoi(spec.substr(8)));
  if (spec == "cyclic") return make_cyclic_z();
  if (spec.rfind("table:", 0) == 0) {
    std::ifstream in(spec.substr(6));
    if (!in) throw invalid_input_error("cannot open group table file: " + spec.substr(6));
    std::ostringstream ss;
    ss << in.rdbuf();
    return make_finite_table(ss.str());
  }
  throw invalid_input_error("unknown group spec: " + spec +
                            " (expected free:a,b | abelian:k | cyclic | table:FILE)");
}

}  // namespace extword
