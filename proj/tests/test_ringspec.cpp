#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "multlab/corpus.hpp"
#include "multlab/errors.hpp"
#include "multlab/ringspec.hpp"

using namespace multlab;

namespace {

void expect_error_at(const std::string& text, std::size_t line, std::size_t column) {
  try {
    parse_ring_spec(text);
    ADD_FAILURE() << "accepted:\n" << text;
  } catch (const RingSpecError& e) {
    EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_EQ(e.column(), column) << e.what();
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(RingSpecParse, FullFile) {
  RingSpec s = parse_ring_spec("# comment\nfield 7\nvars x y  # trailing\nrel x^2\nrel  y^2 - 3*x*y \ncap 9\n");
  EXPECT_EQ(s.p, 7u);
  EXPECT_EQ(s.vars, (std::vector<std::string>{"x", "y"}));
  EXPECT_EQ(s.relations, (std::vector<std::string>{"x^2", "y^2 - 3*x*y"}));
  EXPECT_EQ(s.cap, 9);
}

TEST(RingSpecParse, Defaults) {
  RingSpec s = parse_ring_spec("vars x\nrel x^2");
  EXPECT_EQ(s.p, 101u);
  EXPECT_EQ(s.cap, 12);
  EXPECT_EQ(s.build().dim(), 2u);
}

TEST(RingSpecParse, TextRoundTrip) {
  for (const auto& ring : corpus()) {
    RingSpec s = ring.spec();
    RingSpec t = parse_ring_spec(s.to_text());
    EXPECT_EQ(t.p, s.p);
    EXPECT_EQ(t.vars, s.vars);
    EXPECT_EQ(t.relations, s.relations);
    EXPECT_EQ(t.cap, s.cap);
  }
}

TEST(RingSpecErrors, LineAndColumn) {
  expect_error_at("vars x y\nfoo 3\n", 2, 1);
  expect_error_at("vars x y\nrel x^2 + w*y\n", 2, 11);
  expect_error_at("vars x y\nrel x^2 $ y\n", 2, 9);
  expect_error_at("vars x y\n  rel x + y^2\n", 2, 7);
  expect_error_at("field 100\nvars x\n", 1, 7);
  expect_error_at("field 7\nfield 7\nvars x\n", 2, 1);
  expect_error_at("vars x\nfield 7\n", 2, 1);
  expect_error_at("rel x^2\nvars x\n", 1, 1);
  expect_error_at("vars x x\n", 1, 8);
  expect_error_at("vars x 2y\n", 1, 8);
  expect_error_at("vars x\ncap twelve\n", 2, 5);
  expect_error_at("vars x\ncap 0\n", 2, 5);
  expect_error_at("vars x\nvars y\n", 2, 1);
  expect_error_at("field 7\n", 2, 1);
}

TEST(RingSpecErrors, MissingFile) {
  EXPECT_THROW(load_ring_spec("/nonexistent/ring.ring"), Error);
}

TEST(Corpus, FilesMatchEmbeddedTexts) {
  const std::string dir = std::string(MULTLAB_SOURCE_DIR) + "/rings/";
  EXPECT_EQ(corpus().size(), 14u);
  for (const auto& ring : corpus()) EXPECT_EQ(read_file(dir + ring.name + ".ring"), ring.text) << ring.name;
}

TEST(Corpus, LookupByName) {
  EXPECT_EQ(corpus_ring("gor5").spec().vars.size(), 3u);
  EXPECT_THROW(corpus_ring("nope"), Error);
}

TEST(Corpus, EveryRingBuilds) {
  for (const auto& ring : corpus()) {
    RingSpec s = ring.spec();
    EXPECT_NO_THROW(s.build()) << ring.name;
  }
}
