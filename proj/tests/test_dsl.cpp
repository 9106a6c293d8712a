#include "normkit/dsl.hpp"
#include "normkit/error.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace normkit;

namespace {

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path);
    REQUIRE_MESSAGE(in.good(), "cannot open ", path.string());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

std::vector<std::filesystem::path> fixture_files() {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator("fixtures"))
        if (entry.path().extension() == ".nk") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    return files;
}

} // namespace

TEST_CASE("parsing the canonical monoid fixture") {
    const TheoryDocument doc = parse_document(slurp("fixtures/mon_z2_n2.nk"));
    CHECK(doc.signatures.size() == 1);
    CHECK(doc.theories.size() == 1);
    CHECK(doc.models.size() == 2);
    CHECK(doc.prenorms.size() == 1);

    REQUIRE(doc.find_model("Z2") != nullptr);
    REQUIRE(doc.find_model("N2") != nullptr);
    CHECK(doc.find_model("Z2")->model.certificate.satisfied);
    CHECK(doc.find_signature("nosuch") == nullptr);

    const PrenormDecl* p = doc.find_prenorm("P_one");
    REQUIRE(p != nullptr);
    CHECK(p->from == "Z2");
    CHECK(p->to == "N2");
    CHECK(p->prenorm.report.passed);
}

TEST_CASE("a failing prenorm declaration still parses") {
    const TheoryDocument doc = parse_document(slurp("fixtures/bad.nk"));
    const PrenormDecl* p = doc.find_prenorm("N_bad");
    REQUIRE(p != nullptr);
    CHECK_FALSE(p->prenorm.report.passed);
}

TEST_CASE("empty input gives an empty document") {
    const TheoryDocument doc = parse_document("# nothing here\n");
    CHECK(doc == TheoryDocument{});
}

TEST_CASE("round trip across the fixture corpus") {
    const std::vector<std::filesystem::path> files = fixture_files();
    REQUIRE(files.size() >= 10);
    for (const auto& path : files) {
        INFO("fixture ", path.string());
        const TheoryDocument first = parse_document(slurp(path));
        const std::string printed = print_document(first);
        const TheoryDocument second = parse_document(printed);
        CHECK(first == second);
        // The printer is canonical: printing again is byte-identical.
        CHECK(print_document(second) == printed);
    }
}

TEST_CASE("errors carry positions and stable codes") {
    auto code_of = [](const std::string& text) {
        try {
            parse_document(text);
            return errc::internal_invariant_violation;
        } catch (const Error& e) {
            return e.code();
        }
    };

    CHECK(code_of("signature S {") == errc::syntax_error);
    CHECK(code_of("frobnicate;") == errc::syntax_error);
    CHECK(code_of("signature S { fn f 1; fn f 2; }") == errc::duplicate_name);
    CHECK(code_of("theory T over Missing { vars x; }") == errc::unresolved_reference);
    CHECK(code_of("signature S { fn f 1; }\n"
                  "theory T over S { vars x; axiom a: forall x . g(x) = x; }") ==
          errc::unknown_symbol);
    CHECK(code_of("signature S { fn f 1; }\n"
                  "theory T over S { vars x; axiom a: forall x . f(x, x) = x; }") ==
          errc::arity_error);
    CHECK(code_of("signature S { fn c 0; }\n"
                  "theory T over S { vars x; }\n"
                  "model M of T { carrier a; fn c map () -> b; }") == errc::unknown_symbol);
    // Partial function table.
    CHECK(code_of("signature S { fn f 1; }\n"
                  "theory T over S { vars x; }\n"
                  "model M of T { carrier a, b; fn f map (a) -> a; }") == errc::model_invalid);

    try {
        parse_document("signature S {");
        FAIL("unterminated block");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("line 1") != std::string::npos);
    }
}
