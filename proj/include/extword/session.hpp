#pragma once

#include <iosfwd>
#include <map>

#include "extword/extension.hpp"
#include "extword/parser.hpp"

namespace extword {

struct SessionOptions {
  std::string group_spec = "free:a,b";
  int dmax = 3;
  uint64_t seed = 0;
  long max_steps = 1000000;
  int window = 64;
  bool json = false;
  bool trace = false;
};

// Command loop state: base group, named bindings, caps, output mode.
// Exit codes: 0 computed, 2 invalid input/syntax, 3 cap exceeded.
class Session {
public:
  explicit Session(SessionOptions opts);

  // One command ('#' comments and blank lines are no-ops). Returns 0/2/3.
  int run_line(const std::string& line, std::ostream& out, std::ostream& err);

  const BaseGroupPtr& group() const { return group_; }
  int dims() const { return dims_; }

  // Expression evaluation (word plus its leaf factorization).
  struct Element {
    Word word;
    std::vector<Word> leaves;
    std::vector<std::pair<int, bool>> seq;  // (leaf index, inverted)
  };
  Element eval_expr(const Expr& e);
  Word eval_word(const std::string& text);

private:
  void dispatch(const std::string& line, std::ostream& out);
  const GeneratorTable& table_for(const std::vector<Word>& leaves);
  std::vector<int> fact_of(const GeneratorTable& t, const Element& el) const;
  void run_demo(const std::string& name, std::ostream& out);

  SessionOptions opts_;
  BaseGroupPtr group_;
  std::shared_ptr<const Alphabet> ab_;
  int dims_;
  Caps caps_;
  std::map<std::string, Word> bindings_;
  // preprocessed-table cache keyed by the serialized leaf set
  std::map<std::string, GeneratorTable> tables_;
};

}  // namespace extword
