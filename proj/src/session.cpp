#include "extword/session.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "extword/constructions.hpp"
#include "extword/json_io.hpp"
#include "extword/periods.hpp"

namespace extword {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::string degree_str(int d) { return d == kBottomDegree ? "-inf" : std::to_string(d); }

// Split at the first top-level ';' (outside parentheses and brackets).
std::optional<size_t> top_level_semi(const std::string& s) {
  int depth = 0;
  bool in_lit = false;
  for (size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (in_lit) {
      if (c == ']') in_lit = false;
      continue;
    }
    if (c == '[') in_lit = true;
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ';' && depth == 0) return i;
  }
  return std::nullopt;
}

}  // namespace

Session::Session(SessionOptions opts) : opts_(std::move(opts)) {
  group_ = make_group(opts_.group_spec);
  ab_ = group_->alphabet();
  dims_ = opts_.dmax + 1;
  if (dims_ < 2)
    std::cerr << "warning: rank(A) < 2 is degenerate (finite words only)\n";
  if (group_->is_finite_group())
    std::cerr << "warning: finite base group; no infinite G-reduced words exist and the "
                 "extension collapses to G\n";
  caps_.reduction_steps = opts_.max_steps;
}

Session::Element Session::eval_expr(const Expr& e) {
  auto leaf_element = [&](const Word& w) {
    Element el;
    el.word = canonical(w);
    el.leaves.push_back(el.word);
    el.seq.emplace_back(0, false);
    return el;
  };
  switch (e.kind) {
    case Expr::Kind::Letter:
    case Expr::Kind::Var: {
      auto it = bindings_.find(e.name);
      if (it != bindings_.end()) return leaf_element(it->second);
      return leaf_element(make_finite(ab_, dims_, {ab_->find(e.name)}));
    }
    case Expr::Kind::Product: {
      Element out;
      out.word = Word(ab_, dims_);
      for (const auto& a : e.args) {
        Element sub = eval_expr(*a);
        out.word = concat(out.word, sub.word);
        std::vector<int> remap(sub.leaves.size());
        for (size_t i = 0; i < sub.leaves.size(); ++i) {
          int found = -1;
          for (size_t j = 0; j < out.leaves.size(); ++j)
            if (equal(out.leaves[j], sub.leaves[i])) {
              found = static_cast<int>(j);
              break;
            }
          if (found < 0) {
            out.leaves.push_back(sub.leaves[i]);
            found = static_cast<int>(out.leaves.size()) - 1;
          }
          remap[i] = found;
        }
        for (auto [idx, inv] : sub.seq) out.seq.emplace_back(remap[static_cast<size_t>(idx)], inv);
      }
      return out;
    }
    case Expr::Kind::Power: {
      Element base = eval_expr(*e.args[0]);
      Element out;
      out.word = Word(ab_, dims_);
      out.leaves = base.leaves;
      if (e.number == 0) return out;
      bool neg = e.number < 0;
      Int k = neg ? -e.number : e.number;
      if (k > 4096) throw cap_exceeded_error("expression power exceeds the expansion cap");
      std::vector<std::pair<int, bool>> one = base.seq;
      Word wone = base.word;
      if (neg) {
        wone = canonical(involute(wone));
        std::reverse(one.begin(), one.end());
        for (auto& [idx, inv] : one) inv = !inv;
      }
      long reps = k.get_si();
      for (long i = 0; i < reps; ++i) {
        out.word = concat(out.word, wone);
        out.seq.insert(out.seq.end(), one.begin(), one.end());
      }
      return out;
    }
    case Expr::Kind::IntArg:
    case Expr::Kind::ExponentArg:
      throw invalid_input_error("number or exponent literal used as a word");
    case Expr::Kind::Builtin: {
      auto word_arg = [&](size_t i) {
        if (i >= e.args.size()) throw invalid_input_error(e.name + ": missing argument");
        return eval_expr(*e.args[i]).word;
      };
      auto int_arg = [&](size_t i) {
        if (i >= e.args.size() || e.args[i]->kind != Expr::Kind::IntArg)
          throw invalid_input_error(e.name + ": expected an integer argument");
        return e.args[i]->number.get_si();
      };
      if (e.name == "raypair") return leaf_element(ray_pair(word_arg(0), word_arg(1)));
      if (e.name == "wm") {
        Word seed = e.args.size() > 1 ? word_arg(1)
                                      : make_finite(ab_, dims_, {ab_->base_letters().front()});
        return leaf_element(w_m_word(int_arg(0), seed));
      }
      if (e.name == "xd") return leaf_element(x_d(word_arg(0), static_cast<int>(int_arg(1))));
      if (e.name == "xinf") return leaf_element(x_infty(word_arg(0)));
      if (e.name == "hnn")
        return leaf_element(hnn_stable_letter(word_arg(0), word_arg(1), word_arg(2)));
      if (e.name == "cdr") {
        auto d = cdr_decompose(word_arg(0));
        if (!d) throw invalid_input_error("cdr: no cyclically reduced decomposition");
        return leaf_element(d->core);
      }
      if (e.name == "atom") {
        Word r = word_arg(0), l = word_arg(1);
        Exponent off(dims_);
        if (e.args.size() > 2) {
          if (e.args[2]->kind != Expr::Kind::ExponentArg)
            throw invalid_input_error("atom: third argument must be c=[...]");
          off = Exponent::parse(e.args[2]->literal, dims_);
        }
        return leaf_element(make_atom(r.degree() + 1, r, l, off));
      }
      throw invalid_input_error("unknown builtin: " + e.name);
    }
  }
  throw invalid_input_error("malformed expression");
}

Word Session::eval_word(const std::string& text) { return eval_expr(*parse_expr(text)).word; }

const GeneratorTable& Session::table_for(const std::vector<Word>& leaves) {
  std::ostringstream key;
  for (const auto& l : leaves) key << word_to_json(canonical(l)).dump() << "|";
  auto it = tables_.find(key.str());
  if (it == tables_.end()) {
    GeneratorTable t = preprocess(leaves, group_, caps_);
    it = tables_.emplace(key.str(), std::move(t)).first;
  }
  return it->second;
}

std::vector<int> Session::fact_of(const GeneratorTable& t, const Element& el) const {
  std::vector<int> out;
  for (auto [idx, inv] : el.seq) {
    const auto& f = t.delta_fact[static_cast<size_t>(idx)];
    if (inv) {
      auto fi = t.involute_fact(f);
      out.insert(out.end(), fi.begin(), fi.end());
    } else {
      out.insert(out.end(), f.begin(), f.end());
    }
  }
  return out;
}

int Session::run_line(const std::string& line, std::ostream& out, std::ostream& err) {
  std::string s = trim(line);
  if (s.empty() || s[0] == '#') return 0;
  try {
    dispatch(s, out);
    return 0;
  } catch (const cap_exceeded_error& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const invalid_input_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

void Session::dispatch(const std::string& line, std::ostream& out) {
  std::istringstream is(line);
  std::string cmd;
  is >> cmd;
  std::string rest;
  std::getline(is, rest);
  rest = trim(rest);
  nlohmann::json j;
  j["cmd"] = cmd;

  auto emit = [&](const std::string& human) {
    if (opts_.json)
      out << j.dump() << "\n";
    else
      out << human << "\n";
  };

  if (cmd == "let") {
    auto eq = rest.find('=');
    if (eq == std::string::npos) throw invalid_input_error("let needs: let NAME = EXPR");
    std::string name = trim(rest.substr(0, eq));
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0])))
      throw invalid_input_error("bad binding name: " + name);
    Word w = eval_word(rest.substr(eq + 1));
    bindings_[name] = w;
    j["name"] = name;
    j["word"] = word_to_json(w);
    emit("bound " + name + " = " + word_str(w));
    return;
  }
  if (cmd == "wp") {
    Element el = eval_expr(*parse_expr(rest));
    const GeneratorTable& t = table_for(el.leaves);
    ReducedDegree rd = reduced_degree(t, fact_of(t, el), caps_);
    bool triv = rd.degree == kBottomDegree;
    j["trivial"] = triv;
    j["rdeg"] = degree_str(rd.degree);
    emit(std::string("trivial: ") + (triv ? "true" : "false"));
    return;
  }
  if (cmd == "weq") {
    auto semi = top_level_semi(rest);
    if (!semi) throw invalid_input_error("weq needs: weq EXPR ; EXPR");
    Word a = eval_word(rest.substr(0, *semi));
    Word b = eval_word(rest.substr(*semi + 1));
    bool eqr = equal(a, b);
    j["equal"] = eqr;
    emit(std::string("equal: ") + (eqr ? "true" : "false"));
    return;
  }
  if (cmd == "eq") {
    auto semi0 = top_level_semi(rest);
    if (!semi0) throw invalid_input_error("eq needs: eq EXPR ; EXPR");
    size_t semi = *semi0;
    Element a = eval_expr(*parse_expr(rest.substr(0, semi)));
    Element b = eval_expr(*parse_expr(rest.substr(semi + 1)));
    std::vector<Word> leaves = a.leaves;
    for (const auto& l : b.leaves) {
      bool found = false;
      for (const auto& x : leaves) found = found || equal(x, l);
      if (!found) leaves.push_back(l);
    }
    const GeneratorTable& t = table_for(leaves);
    auto adjust = [&](Element& el) {
      for (auto& [idx, inv] : el.seq) {
        for (size_t k = 0; k < leaves.size(); ++k)
          if (equal(leaves[k], el.leaves[static_cast<size_t>(idx)])) {
            idx = static_cast<int>(k);
            break;
          }
      }
      el.leaves = leaves;
    };
    adjust(a);
    adjust(b);
    bool eqr = ext_equal(t, fact_of(t, a), fact_of(t, b), caps_);
    j["equal"] = eqr;
    emit(std::string("equal: ") + (eqr ? "true" : "false"));
    return;
  }
  if (cmd == "deg") {
    Word w = eval_word(rest);
    j["deg"] = degree_str(w.degree());
    j["length"] = exponent_to_json(w.length());
    emit("deg: " + degree_str(w.degree()) + "  |w| = " + w.length().str());
    return;
  }
  if (cmd == "rdeg") {
    Element el = eval_expr(*parse_expr(rest));
    const GeneratorTable& t = table_for(el.leaves);
    ReducedDegree rd = reduced_degree(t, fact_of(t, el), caps_);
    j["rdeg"] = degree_str(rd.degree);
    j["witness"] = word_to_json(rd.witness);
    emit("rdeg: " + degree_str(rd.degree) + "  witness: " + word_str(rd.witness));
    return;
  }
  if (cmd == "eval") {
    auto at = rest.rfind(" at ");
    if (at == std::string::npos) throw invalid_input_error("eval needs: eval EXPR at [a0,a1,...]");
    Word w = eval_word(rest.substr(0, at));
    Exponent pos = Exponent::parse(trim(rest.substr(at + 4)), dims_);
    LetterId l = eval_at(w, pos);
    j["letter"] = ab_->name(l);
    emit("letter: " + ab_->name(l));
    return;
  }
  if (cmd == "periods") {
    Word w = eval_word(rest);
    PeriodLattice L = proper_period_lattice(w);
    j["rows"] = lattice_to_json(L);
    emit("periods: " + L.str());
    return;
  }
  if (cmd == "order") {
    long maxn = 16;
    auto mpos = rest.rfind(" --max ");
    std::string expr = rest;
    if (mpos != std::string::npos) {
      maxn = std::stol(rest.substr(mpos + 7));
      expr = rest.substr(0, mpos);
    }
    Element el = eval_expr(*parse_expr(expr));
    const GeneratorTable& t = table_for(el.leaves);
    auto n = order_probe(t, fact_of(t, el), maxn, caps_);
    j["order"] = n ? nlohmann::json(*n) : nlohmann::json(nullptr);
    j["max"] = maxn;
    emit(n ? "order: " + std::to_string(*n) : "order: absent (> " + std::to_string(maxn) + ")");
    return;
  }
  if (cmd == "cdr") {
    Word w = eval_word(rest);
    auto d = cdr_decompose(w);
    if (!d) {
      j["defined"] = false;
      emit("cdr: absent");
      return;
    }
    j["defined"] = true;
    j["c"] = word_to_json(d->c);
    j["core"] = word_to_json(d->core);
    emit("cdr: c = " + word_str(d->c) + "  core = " + word_str(d->core));
    return;
  }
  if (cmd == "normalize") {
    Word w = canonical(eval_word(rest));
    j["word"] = word_to_json(w);
    j["length"] = exponent_to_json(w.length());
    emit("canonical: " + word_str(w));
    return;
  }
  if (cmd == "freduced") {
    Word w = eval_word(rest);
    bool fr = is_freely_reduced(w);
    j["freely_reduced"] = fr;
    j["cyclically_reduced"] = is_cyclically_reduced(w);
    emit(std::string("freely reduced: ") + (fr ? "true" : "false") +
         "  cyclically reduced: " + (is_cyclically_reduced(w) ? "true" : "false"));
    return;
  }
  if (cmd == "greduced") {
    Word w = eval_word(rest);
    Tri t = is_g_reduced(w, *group_, opts_.window);
    j["g_reduced"] = tri_str(t);
    emit(std::string("G-reduced: ") + tri_str(t));
    return;
  }
  if (cmd == "trace") {
    Element el = eval_expr(*parse_expr(rest));
    const GeneratorTable& t = table_for(el.leaves);
    std::vector<std::string> log;
    TraceResult res = random_reduction_trace(t, fact_of(t, el), opts_.seed, caps_, &log);
    if (opts_.json) {
      j["steps"] = res.steps;
      j["degree"] = degree_str(res.degree);
      j["log"] = log;
      out << j.dump() << "\n";
    } else {
      for (const auto& line2 : log) out << line2 << "\n";
      out << "trace: " << res.steps << " steps, final degree " << degree_str(res.degree) << "\n";
    }
    return;
  }
  if (cmd == "table-export") {
    std::istringstream rs(rest);
    std::string file;
    rs >> file;
    std::string expr;
    std::getline(rs, expr);
    Element el = eval_expr(*parse_expr(trim(expr)));
    const GeneratorTable& t = table_for(el.leaves);
    std::ofstream of(file);
    if (!of) throw invalid_input_error("cannot write " + file);
    of << table_to_json(t);
    j["file"] = file;
    j["generators"] = t.entries.size();
    emit("table written: " + file + " (" + std::to_string(t.entries.size()) + " generators)");
    return;
  }
  if (cmd == "table-import") {
    std::ifstream in(trim(rest));
    if (!in) throw invalid_input_error("cannot read " + rest);
    std::ostringstream ss;
    ss << in.rdbuf();
    GeneratorTable t = table_from_json(ss.str(), group_);
    j["generators"] = t.entries.size();
    emit("table loaded: " + std::to_string(t.entries.size()) + " generators");
    return;
  }
  if (cmd == "demo") {
    run_demo(rest, out);
    return;
  }
  throw invalid_input_error("unknown command: " + cmd);
}

}  // namespace extword
