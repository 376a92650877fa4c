#include <doctest.h>

#include "orbita/dsl.hpp"

#include <sstream>

using namespace orbita;

TEST_CASE("parse accepts the reference map") {
    ParseResult r = parse("map f : P1 -> P1 = [x0^2 - x1^2, x1^2]");
    REQUIRE(r.ok());
    const Morphism* f = r.document->find_map("f");
    REQUIRE(f != nullptr);
    CHECK(f->degree() == 2);
    CHECK(f->dim() == 1);
    // expansion check: F0 = x0^2 - x1^2
    BinaryForm f0 = f->forms()[0].to_binary();
    CHECK(f0 == BinaryForm(2, {BigInt(1), BigInt(0), BigInt(-1)}));
    CHECK(f->forms()[1].to_binary() == BinaryForm(2, {BigInt(0), BigInt(0), BigInt(1)}));
}

TEST_CASE("parse rejects bad maps with positioned diagnostics") {
    auto check_rejected = [](const std::string& src) {
        ParseResult r = parse(src);
        CHECK_FALSE(r.ok());
        REQUIRE_FALSE(r.diagnostics.empty());
        for (const auto& d : r.diagnostics) {
            CHECK(d.line >= 1);
            CHECK(d.column >= 1);
            // position points inside the source text
            size_t lines = 1 + std::count(src.begin(), src.end(), '\n');
            CHECK(d.line <= lines);
            CHECK_FALSE(d.message.empty());
            CHECK_FALSE(d.str().empty());
        }
    };
    check_rejected("map g : P1 -> P1 = [x0^2, x0*x1]");       // Res = 0
    check_rejected("map h : P1 -> P1 = [x0^2 + x1, x1^2]");   // non-homogeneous
    check_rejected("map k : P1 -> P1 = [x0^2, x1^2");         // syntax error
    check_rejected("map m : P1 -> P1 = [x0^2, x1^3]");        // degree mismatch
    check_rejected("map n : P1 -> P1 = [x0^2, x2^2]");        // variable out of range
    check_rejected("curve e = [0, 0]");                        // singular curve
}

TEST_CASE("curve and point definitions") {
    ParseResult r = parse("curve e = [0, 1]\npoint p = [4 : 1]\npoint q = [-1/3 : 2/3]");
    REQUIRE(r.ok());
    const EllipticCurve* e = r.document->find_curve("e");
    REQUIRE(e != nullptr);
    CHECK(e->a == 0);
    CHECK(e->b == 1);
    const ProjPoint* p = r.document->find_point("p");
    REQUIRE(p != nullptr);
    CHECK(*p == ProjPoint::from_integers({BigInt(4), BigInt(1)}));
    CHECK(*r.document->find_point("q") == ProjPoint::from_integers({BigInt(1), BigInt(-2)}));
}

TEST_CASE("comments and whitespace are insignificant") {
    ParseResult a = parse("# leading comment\nmap f : P1 -> P1 = [ x0^2 , x1^2 ] # trailing\n");
    ParseResult b = parse("map f:P1->P1=[x0^2,x1^2]");
    REQUIRE(a.ok());
    REQUIRE(b.ok());
    CHECK(*a.document == *b.document);
}

TEST_CASE("big integer literals parse exactly") {
    ParseResult r = parse("curve big = [123456789012345678901234567890, -1]");
    REQUIRE(r.ok());
    BigInt expect("123456789012345678901234567890");
    CHECK(r.document->find_curve("big")->a == expect);
}

TEST_CASE("parse-print round trip on a 20-definition corpus") {
    std::ostringstream corpus;
    corpus << "map sq : P1 -> P1 = [x0^2, x1^2]\n"
              "map zm1 : P1 -> P1 = [x0^2 - x1^2, x1^2]\n"
              "map cube : P1 -> P1 = [x0^3, x1^3]\n"
              "map cheb : P1 -> P1 = [x0^3 - 2*x0*x1^2, x1^3]\n"
              "map mix : P1 -> P1 = [2*x0^2 + x1^2, x0*x1 + x1^2]\n"
              "map surf : P2 -> P2 = [x0^2, x1^2, x2^2]\n"
              "map twist : P2 -> P2 = [x1^2, x2^2, x0^2]\n"
              "map big : P1 -> P1 = [7*x0^4 - 3*x0^2*x1^2 + x1^4, x0*x1^3 + 5*x1^4]\n"
              "curve e1 = [0, 1]\n"
              "curve e2 = [0, -2]\n"
              "curve e3 = [-1, 0]\n"
              "curve e4 = [-43, 166]\n"
              "curve e5 = [100, 100]\n"
              "point p1 = [4 : 1]\n"
              "point p2 = [0 : 1]\n"
              "point p3 = [1 : 0]\n"
              "point p4 = [-7 : 3]\n"
              "point p5 = [1/2 : 1]\n"
              "point p6 = [2 : 3 : 5]\n"
              "point p7 = [-1/3 : 2/3]\n";
    ParseResult r = parse(corpus.str());
    REQUIRE(r.ok());
    CHECK(r.document->definitions.size() == 20);
    std::string printed = print(*r.document);
    ParseResult again = parse(printed);
    REQUIRE(again.ok());
    CHECK(*again.document == *r.document);
    // printing is a fixed point
    CHECK(print(*again.document) == printed);
}

TEST_CASE("lookup helpers distinguish kinds") {
    ParseResult r = parse("map f : P1 -> P1 = [x0^2, x1^2]\ncurve f2 = [0, 1]");
    REQUIRE(r.ok());
    CHECK(r.document->find_map("f") != nullptr);
    CHECK(r.document->find_map("f2") == nullptr);
    CHECK(r.document->find_curve("f2") != nullptr);
    CHECK(r.document->find("missing") == nullptr);
}
