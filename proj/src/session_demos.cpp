#include <functional>
#include <iostream>
#include <sstream>

#include "extword/constructions.hpp"
#include "extword/session.hpp"

namespace extword {

namespace {

struct DemoCtx {
  Session session;
  std::ostream& out;
  bool ok = true;

  DemoCtx(const std::string& group, std::ostream& o)
      : session([&] {
          SessionOptions so;
          so.group_spec = group;
          return so;
        }()),
        out(o) {}

  void check(const std::string& label, const std::string& cmdline, const std::string& expect) {
    std::ostringstream cap;
    int rc = session.run_line(cmdline, cap, cap);
    std::string got = cap.str();
    if (!got.empty() && got.back() == '\n') got.pop_back();
    bool pass = rc == 0 && got == expect;
    ok = ok && pass;
    out << "  " << label << ": " << got << (pass ? "" : "   [expected: " + expect + "]") << "\n";
  }
  void show(const std::string& label, const std::string& cmdline) {
    std::ostringstream cap;
    session.run_line(cmdline, cap, cap);
    std::string got = cap.str();
    if (!got.empty() && got.back() == '\n') got.pop_back();
    out << "  " << label << ": " << got << "\n";
  }
};

}  // namespace

void Session::run_demo(const std::string& name, std::ostream& out) {
  auto finish = [&](DemoCtx& d) {
    out << "demo " << name << ": " << (d.ok ? "PASS" : "FAIL") << "\n";
    if (!d.ok) throw invalid_input_error("demo expectations not met: " + name);
  };

  if (name == "fig-one") {
    DemoCtx d("free:a,b", out);
    out << "A closed word of length 2t-1 that is not freely reduced:\n";
    d.show("word", "normalize atom(a ~b ~a b; ~a a b b) atom(a ~b a b; b ~b; c=[-1])");
    d.check("freely reduced", "freduced atom(a ~b ~a b; ~a a b b) atom(a ~b a b; b ~b; c=[-1])",
            "freely reduced: false  cyclically reduced: false");
    finish(d);
    return;
  }
  if (name == "fig-w") {
    DemoCtx d("free:a,b", out);
    out << "w = [aaa...)(...abab...)(...bbb] of length 2t:\n";
    d.session.run_line("let w = atom(a; a b) atom(a b; b)", out, out);
    d.check("deg", "deg w", "deg: 1  |w| = [0,2]");
    d.check("aw = wb", "eq a w ; w b", "equal: false");
    d.check("periods", "periods w", "periods: {[2]}");
    finish(d);
    return;
  }
  if (name == "fig-wa") {
    DemoCtx d("free:a,b", out);
    d.session.run_line("let w = atom(a; a b) atom(a b; b)", out, out);
    d.check("aw[(0,1)]", "eval a w at [0,1]", "letter: a");
    d.check("wb[(0,1)]", "eval w b at [0,1]", "letter: b");
    d.check("aw = wb", "eq a w ; w b", "equal: false");
    finish(d);
    return;
  }
  if (name == "fig-waa") {
    DemoCtx d("free:a,b", out);
    d.session.run_line("let w = atom(a; a b) atom(a b; b)", out, out);
    d.check("aa w = w bb", "eq a a w ; w b b", "equal: true");
    finish(d);
    return;
  }
  if (name == "fig-xw") {
    DemoCtx d("free:x,y", out);
    d.session.run_line("let t = raypair(x; y)", out, out);
    d.check("x t = t y", "eq x t ; t y", "equal: true");
    finish(d);
    return;
  }
  if (name == "collapse-u") {
    DemoCtx d("free:a,b", out);
    d.session.run_line("let u = atom(a b; a ~a)", out, out);
    d.check("ab u = u a~a (in W(A,Gamma))", "weq a b u ; u a ~a", "equal: true");
    finish(d);
    return;
  }
  if (name == "ex-conj") {
    DemoCtx d("free:a,b", out);
    d.check("u w = w v for w = raypair(a;b)", "eq a raypair(a;b) ; raypair(a;b) b", "equal: true");
    d.check("length obstruction: a raypair != raypair ab",
            "eq a raypair(a; a b) ; raypair(a; a b) a b", "equal: false");
    finish(d);
    return;
  }
  if (name == "sec7-hnn") {
    DemoCtx d("free:a,b", out);
    d.session.run_line("let s = hnn(a a; b b; a b)", out, out);
    d.check("s b^2 ~s = a^2", "eq s b b (s)^-1 ; a a", "equal: true");
    d.check("s b ~s = a", "eq s b (s)^-1 ; a", "equal: false");
    finish(d);
    return;
  }
  if (name == "ex-semidirect-1") {
    DemoCtx d("free:a,b", out);
    d.session.run_line("let s1 = raypair(a; ~a)", out, out);
    d.check("a s1 = s1 ~a", "eq a s1 ; s1 ~a", "equal: true");
    d.check("order of s1", "order s1 --max 4", "order: 2");
    finish(d);
    return;
  }
  if (name == "ex-semidirect-2") {
    DemoCtx d("free:a,b", out);
    d.session.run_line("let s2 = raypair(a; a) raypair(a; ~a)", out, out);
    d.check("a s2 = s2 ~a", "eq a s2 ; s2 ~a", "equal: true");
    d.check("order of s2", "order s2 --max 10", "order: absent (> 10)");
    finish(d);
    return;
  }
  if (name == "ex-semidirect-3") {
    DemoCtx d("free:a,b", out);
    d.session.run_line("let s3 = hnn(a a; ~a ~a; a b)", out, out);
    d.check("~s3 a^2 s3 = ~a^2", "eq (s3)^-1 a a s3 ; ~a ~a", "equal: true");
    finish(d);
    return;
  }
  if (name == "prop-abel") {
    DemoCtx d("free:a,b", out);
    d.session.run_line("let x = a b", out, out);
    d.session.run_line("let x1 = xd(a b; 1)", out, out);
    d.session.run_line("let x2 = xd(a b; 2)", out, out);
    d.check("x x1 = x1 x", "eq x x1 ; x1 x", "equal: true");
    d.check("x1 x2 = x2 x1", "eq x1 x2 ; x2 x1", "equal: true");
    d.check("x (x1)^-1 nontrivial", "wp x (x1)^-1", "trivial: false");
    finish(d);
    return;
  }
  if (name == "prop-gunnar") {
    DemoCtx d("free:a,b", out);
    d.session.run_line("let ai = xinf(a)", out, out);
    d.check("order of a_inf", "order ai --max 4", "order: 2");
    d.check("a a_inf = a_inf ~a", "eq a ai ; ai ~a", "equal: true");
    d.check("a = (a a_inf) a_inf", "eq a ai ai ; a", "equal: true");
    finish(d);
    return;
  }
  if (name == "cdr-examples") {
    DemoCtx d("free:a,b", out);
    d.session.run_line("let c = raypair(a; ~a)", out, out);
    d.check("decomposition of c b ~c", "cdr c b (c)^-1", "cdr: c = [a ...)(... ~a]{1}  core = b");
    d.check("raypair(a;~a) has none", "cdr c", "cdr: absent");
    finish(d);
    return;
  }
  throw invalid_input_error(
      "unknown demo: " + name +
      " (available: fig-one fig-w fig-wa fig-waa fig-xw collapse-u ex-conj sec7-hnn "
      "ex-semidirect-1 ex-semidirect-2 ex-semidirect-3 prop-abel prop-gunnar cdr-examples)");
}

}  // namespace extword
