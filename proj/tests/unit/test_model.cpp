#include "doctest.h"
#include "sia/model/examples.hpp"
#include "sia/model/model.hpp"

using namespace sia::model;

namespace {

std::string error_code(const std::string& text, Syntax s = Syntax::Auto) {
  try {
    parse_model(text, s);
  } catch (const ModelError& e) {
    return e.code();
  }
  return "";
}

using V = std::vector<std::string>;

}  // namespace

TEST_CASE("maple-like Lotka-Volterra") {
  auto m = parse_model(
      "diff(x1(t), t) = a*x1(t) - b*x1(t)*x2(t);\n diff(x2(t), t) = -c*x2(t) + d*x1(t)*x2(t);\n y(t) = x1(t)");
  CHECK(m.states == V{"x1", "x2"});
  CHECK(m.params == V{"a", "b", "c", "d"});
  CHECK(m.outputs == V{"y"});
  CHECK(m.inputs.empty());
}

TEST_CASE("slash-d syntax with an input") {
  auto m = parse_model("dx1/dt = a*x1 + x2*b + u(t); dx2/dt = x2*c + x1; y = x2");
  CHECK(m.states == V{"x1", "x2"});
  CHECK(m.params == V{"a", "b", "c"});
  CHECK(m.inputs == V{"u"});
  CHECK(m.outputs == V{"y"});
  auto same = parse_model("diff(x1(t),t) = a*x1(t) + x2(t)*b + u(t); diff(x2(t),t) = x2(t)*c + x1(t); y(t) = x2(t);");
  CHECK(m == same);
}

TEST_CASE("parse errors carry codes") {
  CHECK(error_code("diff(x(t),t) = a*x(t); y(t) = sin(x(t))") == "NonRationalError");
  CHECK(error_code("diff(x(t),t) = a*x(t)^(1/2); y(t) = x(t)") == "NonRationalError");
  CHECK(error_code("diff(x(t),t) = a*x(t) +; y(t) = x(t)") == "SyntaxError");
  CHECK(error_code("diff(x(t),t) = a*x(t); diff(x(t),t) = x(t); y(t) = x(t)") == "DuplicateDefinition");
  CHECK(error_code("dx/dt = a*x + u; dz/dt = u(t); y = x") == "UnknownSymbolUse");
  CHECK(error_code("diff(x(t),t) = a*x(t); y(t) = x(t); diff(y(t),t) = 1") == "UnknownSymbolUse");
  CHECK(error_code("diff(x(t),d) = a*x(t); y(t) = x(t)") == "SyntaxError");
  CHECK(error_code("diff(x(t),t) = g(t)*x(t) - g; y(t) = x(t)") == "AmbiguousSymbol");
}

TEST_CASE("literal SIRS listing with g(t) and g is ambiguous") {
  const char* text =
      "diff(s(t), t) = mu - mu*s(t) - b0*(1 + b1*x1(t))*i(t)*s(t)\n + g(t)*r(t);\n"
      "diff(i(t), t) = b0*(1 + b1*x1(t))*i(t)*s(t) - (nu+mu)*i(t);\n"
      "diff(r(t), t) = nu*i(t) - (mu + g)*r(t);\n"
      "diff(x1(t), t) = -M*x2(t);\ndiff(x2(t), t) = M*x1(t);\ny1(t) = i(t);\ny2(t) = r(t)\n";
  CHECK(error_code(text) == "AmbiguousSymbol");
}

TEST_CASE("classification is structural") {
  auto eqs = parse_equations(find_example("slow-fast")->text);
  auto table = classify_symbols(eqs);
  for (auto s : {"xA", "xB", "xC", "eA", "eC"}) CHECK(table.at(s).kind == SymbolKind::State);
  for (auto s : {"k1", "k2", "eB"}) CHECK(table.at(s).kind == SymbolKind::Parameter);
  for (auto s : {"y1", "y2", "y3", "y4"}) CHECK(table.at(s).kind == SymbolKind::Output);
  auto m = parse_model("diff(x(t),t) = -k*x(t); obs(t) = x(t)");
  CHECK(m.outputs == V{"obs"});
}

TEST_CASE("exact decimals and whitespace") {
  auto m = parse_model("diff(x(t),t) = 0.5*x (t); y(t) = x(t);");
  CHECK(render(m, m.odes[0], Syntax::MapleLike) == "1/2*x(t)");
}

TEST_CASE("validation diagnostics") {
  auto m = build_model(parse_equations("diff(x(t),t) = a*y(t); y(t) = x(t)"));
  auto d = validate(m);
  REQUIRE(d.size() == 1);
  CHECK(d[0].code == "OutputOnRHS");
  auto ok = parse_model(find_example("competition")->text);
  CHECK(validate(ok).empty());
  ModelSystem broken = ok;
  broken.odes.pop_back();
  auto d2 = validate(broken);
  REQUIRE(!d2.empty());
  CHECK(d2[0].code == "MissingODE");
}

TEST_CASE("catalog parses and round-trips in both grammars") {
  REQUIRE(examples().size() == 6);
  for (const auto& ex : examples()) {
    CAPTURE(ex.name);
    auto m = parse_model(ex.text);
    CHECK(parse_model(pretty_print(m, Syntax::MapleLike)) == m);
    CHECK(parse_model(pretty_print(m, Syntax::SlashD)) == m);
  }
  auto sirs = parse_model(find_example("sirs-forced")->text);
  CHECK(sirs.params == V{"b0", "b1", "g", "M", "mu", "nu"});
}

TEST_CASE("parsing never crashes on junk") {
  for (const char* junk : {"", ";;;", "diff(", "x = ", "= 3", "dx/dt = ", "diff(x(t),t) = ((x(t)", "\xff\xfe",
                           "y = 1/0", "diff(x(t), t) = x(t)^^2", "diff(x(t),t)=x(t)^1000000"}) {
    CHECK_NOTHROW((void)error_code(junk));
  }
}
