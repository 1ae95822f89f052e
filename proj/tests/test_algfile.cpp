#include <unistd.h>

#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "homleib/algfile.hpp"

using namespace homleib;

namespace {

AlgebraFile parse(const std::string& text) { return parse_algebra_text(text); }

std::string minimal(const std::string& product = "[[[\"0\"]]]",
                    const std::string& twist = "[[\"1\"]]") {
    return "{\"name\":\"t\",\"kind\":\"hom_leibniz\",\"dim\":1,\"field\":\"rational\","
           "\"product\":" +
           product + ",\"twist\":" + twist + "}";
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& text) {
        char name[] = "/tmp/algfileXXXXXX";
        const int fd = mkstemp(name);
        REQUIRE(fd >= 0);
        close(fd);
        path = name;
        std::ofstream out(path);
        out << text;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("every builtin parses back to byte-identical canonical text") {
    const auto names = builtin_algebra_names();
    REQUIRE(names.size() == 9);
    CHECK(names.front() == "example_L");
    for (const auto& name : names) {
        const auto file = read_algebra_source("builtin:" + name);
        CHECK(file.name == name);
        const std::string text = serialize_algebra(file);
        const auto reparsed = parse_algebra_text(text);
        CHECK(serialize_algebra(reparsed) == text);
        // declared kinds are valid: checked() must not throw
        CHECK(reparsed.checked().name() == name);
    }
}

TEST_CASE("the canonical form is pinned") {
    const std::string expected = R"({
  "name": "example_L",
  "kind": "hom_leibniz",
  "dim": 2,
  "field": "rational",
  "product": [
    [
      [
        "0",
        "0"
      ],
      [
        "0",
        "0"
      ]
    ],
    [
      [
        "0",
        "0"
      ],
      [
        "1",
        "0"
      ]
    ]
  ],
  "twist": [
    [
      "1",
      "1"
    ],
    [
      "0",
      "1"
    ]
  ]
}
)";
    CHECK(serialize_algebra(read_algebra_source("builtin:example_L")) == expected);
}

TEST_CASE("parsing normalizes rationals to lowest terms") {
    const auto file = parse(minimal("[[[\"6/8\"]]]", "[[\"-2/2\"]]"));
    CHECK(file.structure[0] == Rational(3, 4));
    const std::string text = serialize_algebra(file);
    CHECK(text.find("3/4") != std::string::npos);
    CHECK(text.find("6/8") == std::string::npos);
    CHECK(text.find("\"-1\"") != std::string::npos);
}

TEST_CASE("malformed documents are rejected with input errors") {
    CHECK_THROWS_AS(parse("not json"), parse_error);
    CHECK_THROWS_AS(parse("[]"), parse_error);
    CHECK_THROWS_AS(parse("{}"), parse_error);
    // unknown key
    CHECK_THROWS_AS(parse("{\"name\":\"t\",\"kind\":\"hom_leibniz\",\"dim\":1,"
                          "\"field\":\"rational\",\"product\":[[[\"0\"]]],"
                          "\"twist\":[[\"1\"]],\"extra\":1}"),
                    parse_error);
    // wrong kind string
    CHECK_THROWS_AS(parse("{\"name\":\"t\",\"kind\":\"frobenius\",\"dim\":1,"
                          "\"field\":\"rational\",\"product\":[[[\"0\"]]],\"twist\":[[\"1\"]]}"),
                    parse_error);
    // dim zero, dim non-integer, wrong field
    CHECK_THROWS_AS(parse("{\"name\":\"t\",\"kind\":\"untyped\",\"dim\":0,"
                          "\"field\":\"rational\",\"product\":[],\"twist\":[]}"),
                    parse_error);
    CHECK_THROWS_AS(parse("{\"name\":\"t\",\"kind\":\"untyped\",\"dim\":1.5,"
                          "\"field\":\"rational\",\"product\":[[[\"0\"]]],\"twist\":[[\"1\"]]}"),
                    parse_error);
    CHECK_THROWS_AS(parse("{\"name\":\"t\",\"kind\":\"untyped\",\"dim\":1,"
                          "\"field\":\"real\",\"product\":[[[\"0\"]]],\"twist\":[[\"1\"]]}"),
                    parse_error);
    // ragged and misshapen tensors
    CHECK_THROWS_AS(parse(minimal("[[[\"0\",\"0\"]]]")), parse_error);
    CHECK_THROWS_AS(parse(minimal("[[[\"0\"]],[[\"0\"]]]")), parse_error);
    CHECK_THROWS_AS(parse(minimal("[[[\"0\"]]]", "[[\"1\",\"0\"]]")), parse_error);
    // entries must be rational strings
    CHECK_THROWS_AS(parse(minimal("[[[0]]]")), parse_error);
    CHECK_THROWS_AS(parse(minimal("[[[\"1.5\"]]]")), parse_error);
    // empty name
    CHECK_THROWS_AS(parse("{\"name\":\"\",\"kind\":\"hom_leibniz\",\"dim\":1,"
                          "\"field\":\"rational\",\"product\":[[[\"0\"]]],\"twist\":[[\"1\"]]}"),
                    parse_error);
}

TEST_CASE("oversized declared dimensions are a resource failure, not a parse failure") {
    CHECK_THROWS_AS(parse("{\"name\":\"t\",\"kind\":\"untyped\",\"dim\":300,"
                          "\"field\":\"rational\",\"product\":[],\"twist\":[]}"),
                    cap_error);
}

TEST_CASE("sources resolve builtins and files, and report unreadable paths") {
    CHECK_THROWS_AS(read_algebra_source("builtin:nonexistent"), parse_error);
    CHECK_THROWS_AS(read_algebra_source("/nonexistent/path.json"), parse_error);

    const TempFile tmp(serialize_algebra(read_algebra_source("builtin:zinbiel2")));
    const auto file = read_algebra_source(tmp.path);
    CHECK(file.name == "zinbiel2");
    CHECK(file.kind == AlgebraKind::hom_zinbiel);
    CHECK(file.dim == 2);
    CHECK(serialize_algebra(file) == serialize_algebra(read_algebra_source("builtin:zinbiel2")));
}

TEST_CASE("spec round trip preserves every component") {
    const auto spec = fixture_example_A();
    const auto file = algebra_file_from_spec(spec);
    const auto back = parse_algebra_text(serialize_algebra(file)).checked();
    CHECK(back.name() == spec.name());
    CHECK(back.kind() == spec.kind());
    CHECK(back.structure() == spec.structure());
    CHECK(back.twist() == spec.twist());
}
