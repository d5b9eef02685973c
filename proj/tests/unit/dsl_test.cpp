#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "openmarkov/dsl.hpp"
#include "openmarkov/error.hpp"
#include "openmarkov/generators.hpp"

using namespace openmarkov;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(OPENMARKOV_TEST_DATA) + "/" + name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Error error_of(const std::string& text) {
  try {
    parse(text);
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "accepted: " << text;
  return Error(ErrorCode::Internal, "");
}

}  // namespace

TEST(Parse, IntroProcess) {
  const ProcessDoc doc = parse_process(slurp("intro_first.omp"));
  EXPECT_EQ(doc.name, "first");
  EXPECT_EQ(doc.states.size(), 4u);
  EXPECT_EQ(doc.edges.size(), 5u);
  EXPECT_EQ(doc.inputs.size(), 2u);
  EXPECT_EQ(doc.outputs.size(), 1u);
  EXPECT_EQ(doc.edges[0].rate, Rational(1, 2));
  EXPECT_EQ(to_open_markov(doc), fixtures::intro_first());
}

TEST(Parse, ChainAndLumped) {
  EXPECT_EQ(to_open_markov(parse_process(slurp("chain.omp"))).generator(),
            fixtures::chain().generator());
  EXPECT_EQ(to_open_markov(parse_process(slurp("lumped.omp"))), fixtures::lumped_chain());
}

TEST(Parse, EmptyProcess) {
  const ProcessDoc doc = parse_process("process E { states: ; }");
  EXPECT_EQ(doc.name, "E");
  EXPECT_TRUE(doc.states.empty());
  EXPECT_TRUE(doc.edges.empty());
  const OpenMarkov m = to_open_markov(doc);
  EXPECT_EQ(m.states().size(), 0u);
}

TEST(Parse, DecimalsParallelEdgesZeroRates) {
  const ProcessDoc doc = parse_process(
      "process P { states: x, y, z; edges: x -> y @ 1; x -> y @ 2; y->z@0.25; z -> x @ 0; }");
  const OpenMarkov m = to_open_markov(doc);
  EXPECT_EQ(m.generator()(1, 0), Rational(3));
  EXPECT_EQ(m.generator()(2, 1), Rational(1, 4));
  EXPECT_EQ(m.generator()(2, 2), Rational(0));
}

TEST(Parse, CommentsTrailingCommasAndOddNames) {
  const ProcessDoc doc = parse_process(
      "# header\nprocess q' {\n states: b_1, b.2, n\xC3\xBC, ; # tail\n inputs: s -> b_1, ;\n}\n");
  EXPECT_EQ(doc.states, (std::vector<std::string>{"b_1", "b.2", "n\xC3\xBC"}));
  EXPECT_EQ(doc.inputs.size(), 1u);
}

TEST(Parse, SyntaxErrorsCarryPositions) {
  const Error e = error_of("process P {\n  states: a b;\n}");
  EXPECT_EQ(e.code(), ErrorCode::SyntaxError);
  EXPECT_NE(std::string(e.what()).find("line 2, column 13"), std::string::npos) << e.what();
  EXPECT_EQ(error_of("process P { states: a; edges: a -> a @ x; }").code(), ErrorCode::SyntaxError);
  EXPECT_EQ(error_of("process P { states: a$; }").code(), ErrorCode::SyntaxError);
  EXPECT_EQ(error_of("procedure P {}").code(), ErrorCode::SyntaxError);
  EXPECT_EQ(error_of("process P { states: a; } trailing").code(), ErrorCode::SyntaxError);
}

TEST(Parse, SemanticErrors) {
  for (const char* text : {
           "process P { states: a; edges: a -> a @ 1; }",
           "process P { states: a, b; edges: a -> b @ -1; }",
           "process P { states: a; edges: a -> z @ 1; }",
           "process P { states: a, a; }",
           "process P { states: a; inputs: s -> a, t -> a; }",
           "process P { states: a, b; outputs: t -> a, t -> b; }",
           "process P { states: a; inputs: s -> q; }",
           "process P { edges: ; }",
           "process P { states: a; states: b; }",
           "process P { states: a; colours: ; }",
           "morphism m : A -> B { f: s -> s; }",
           "morphism m : A -> B { p: a -> x, a -> y; }",
       }) {
    EXPECT_EQ(error_of(text).code(), ErrorCode::SemanticError) << text;
  }
}

TEST(Parse, Morphism) {
  const MorphismDoc doc = parse_morphism(slurp("merge.map"));
  EXPECT_EQ(doc.source, "chain");
  EXPECT_EQ(doc.target, "lumped");
  ASSERT_TRUE(doc.f);
  EXPECT_EQ(doc.p.size(), 4u);
  EXPECT_EQ(table_image(doc.p), (FinSet{"a", "b", "c"}));
  const OpenMarkovMorphism m = to_morphism(doc, fixtures::chain(), fixtures::lumped_chain());
  EXPECT_EQ(m.p, fixtures::merge_b());
  EXPECT_TRUE(validate_morphism(m));

  const MorphismDoc bare = parse_morphism("morphism m : A -> B { p: a -> x; }");
  EXPECT_FALSE(bare.f);
  EXPECT_THROW(to_morphism(bare, fixtures::chain(), fixtures::lumped_chain()), Error);
  EXPECT_THROW(parse_morphism("process E { states: ; }"), Error);
}

TEST(Print, RoundTripsFixtures) {
  for (const char* name : {"intro_first.omp", "intro_second.omp", "chain.omp", "lumped.omp"}) {
    const ProcessDoc doc = parse_process(slurp(name));
    EXPECT_EQ(parse_process(print(doc)), doc) << name;
  }
  for (const char* name : {"merge.map", "bad_merge.map"}) {
    const MorphismDoc doc = parse_morphism(slurp(name));
    EXPECT_EQ(parse_morphism(print(doc)), doc) << name;
  }
  const ProcessDoc empty = parse_process("process E { states: ; }");
  EXPECT_EQ(parse_process(print(empty)), empty);
}

TEST(Print, RoundTripsRandomProcesses) {
  InstanceGenerator gen(91);
  for (int trial = 0; trial < 100; ++trial) {
    const auto [m, n] = gen.composable_pair(5, 2);
    const ProcessDoc doc = to_process_doc("R" + std::to_string(trial), compose_open(m, n));
    const ProcessDoc again = parse_process(print(doc));
    ASSERT_EQ(again, doc);
    const OpenMarkov back = to_open_markov(again);
    ASSERT_TRUE(validate_infinitesimal_stochastic(back.generator()));
    ASSERT_EQ(back, compose_open(m, n));
  }
}
