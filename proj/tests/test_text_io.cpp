#include <gtest/gtest.h>

#include "ldiag/enumerate.hpp"
#include "ldiag/json_io.hpp"
#include "ldiag/product.hpp"
#include "ldiag/text_io.hpp"

using namespace ldiag;

TEST(MatrixText, Parse) {
    EXPECT_EQ(parse_matrix("1 0; 0 2"), (WeightMatrix{{1, 0}, {0, 2}}));
    EXPECT_EQ(parse_matrix("  1   0 ;0 2 "), (WeightMatrix{{1, 0}, {0, 2}}));
    EXPECT_EQ(parse_matrix("e"), WeightMatrix{});
}

TEST(MatrixText, Errors) {
    auto code = [](const char* s) {
        try {
            parse_matrix(s);
        } catch (const Error& e) {
            return e.code();
        }
        return Errc::overflow;
    };
    EXPECT_EQ(code("1 0; 0 0"), Errc::unpacked);
    EXPECT_EQ(code("1 0; 1"), Errc::ragged);
    EXPECT_EQ(code("1 x"), Errc::parse_error);
    EXPECT_EQ(code("1 -1"), Errc::parse_error);
    EXPECT_EQ(code("1;;1"), Errc::parse_error);
    EXPECT_EQ(code(""), Errc::parse_error);
}

TEST(MatrixText, RoundTripOnDeck) {
    for (const auto& d : deck_up_to(4)) {
        const auto s = format_matrix(d);
        ASSERT_EQ(parse_matrix(s), d);
        ASSERT_EQ(format_matrix(parse_matrix(s)), s);
    }
}

TEST(PolyText, Format) {
    const auto qc = DeformPoly::qc(), qs = DeformPoly::qs();
    EXPECT_EQ(format_poly(1 + 2 * qc + qc * qs * qs), "1 + 2*qc + qc*qs^2");
    EXPECT_EQ(format_poly(DeformPoly{}), "0");
    EXPECT_EQ(format_poly(-qc + qs), "-qc + qs");
    EXPECT_EQ(format_poly(qc * qc - 3 * qc * qs + qs * qs), "qc^2 - 3*qc*qs + qs^2");
    EXPECT_EQ(format_poly(DeformPoly(-4)), "-4");
}

TEST(PolyText, RoundTrip) {
    for (const char* s : {"1 + 2*qc + qc*qs^2", "0", "-qc + qs", "qc^2 - 3*qc*qs + qs^2", "-4", "7*qc^3*qs^12"}) {
        EXPECT_EQ(format_poly(parse_poly(s)), s);
    }
    EXPECT_EQ(parse_poly("qs*qc + qc*qs"), 2 * DeformPoly::monomial(1, 1));
}

TEST(PolyText, Errors) {
    for (const char* s : {"", "+qc", "qc qs", "qz", "2*", "qc^", "qc*3", "1 ++ 2"}) EXPECT_THROW(parse_poly(s), Error) << s;
}

TEST(SumText, RoundTrip) {
    const auto s = deformed_product(WeightMatrix{{2}}, WeightMatrix{{1, 1}});
    EXPECT_EQ(parse_sum(format_sum(s)), s);
    EXPECT_EQ(format_sum(DiagramSum{}), "0\n");
    EXPECT_TRUE(parse_sum("0").is_zero());
    EXPECT_EQ(format_sum(deformed_product(WeightMatrix{{1}}, WeightMatrix{{1}})),
              "qs :: 1; 1\nqc :: 0 1; 1 0\n1 :: 1 0; 0 1\n");
}

TEST(CompositionText, RoundTrip) {
    EXPECT_EQ(parse_composition("2,3"), (Composition{2, 3}));
    EXPECT_EQ(parse_composition(" 2, 3 "), (Composition{2, 3}));
    EXPECT_EQ(parse_composition("e"), Composition{});
    EXPECT_EQ(format_composition(Composition{4, 1, 1}), "4,1,1");
    EXPECT_THROW(parse_composition("2,0"), Error);
    EXPECT_THROW(parse_composition("2,,3"), Error);
}

TEST(MonomialText, Format) {
    EXPECT_EQ(format_monomial(monomial_of(WeightMatrix{{1, 0}, {0, 2}, {1, 1}})), "L1*L2^2*V2*V3");
    EXPECT_EQ(format_monomial(Monomial{}), "1");
}

TEST(Json, SumRoundTripAndSchema) {
    const auto s = deformed_product(WeightMatrix{{2}}, WeightMatrix{{1}});
    const auto j = to_json(s);
    EXPECT_EQ(sum_from_json(j), s);
    EXPECT_EQ(j[0]["matrix"], json::parse("[[2],[1]]"));
    EXPECT_EQ(j[0]["coeff"], json::parse(R"([{"qc_exp":0,"qs_exp":2,"coeff":1}])"));
    EXPECT_THROW(sum_from_json(json::parse(R"([{"matrix":[[0]],"coeff":[]}])")), Error);
}
