#include <doctest.h>

#include <sstream>

#include "bhsd/files.hpp"
#include "test_util.hpp"

using namespace bhsd;

TEST_CASE("recipe line parsing") {
    const RecipeRecord rec = parse_recipe_line(
        "id=D1 ring=F4U variant=theorem31 lambda=3 rA=1B rB=6D rC=7C rD=45 aut=2^4 "
        "expect_d=12 expect_family=W64_2 expect_beta=4");
    CHECK(rec.id == "D1");
    CHECK(rec.recipe.ring == Ring::F4U);
    CHECK(rec.recipe.variant == Variant::Theorem31);
    CHECK(rec.recipe.lambda.bits == 0x3);
    CHECK(vec_to_string(rec.recipe.r_a) == "1B");
    CHECK(rec.expect.d == 12);
    CHECK(rec.expect.family == Family::W64_2);
    CHECK(rec.expect.beta == 4);
    CHECK_FALSE(rec.ext_c);
    CHECK_FALSE(rec.nb_x);
    CHECK_FALSE(rec.low_confidence);
}

TEST_CASE("recipe line with extension and neighbor") {
    const RecipeRecord rec = parse_recipe_line(
        "id=N1 ring=F4U variant=theorem31 lambda=9 rA=BA rB=7B rC=64 rD=C0 "
        "ext_c=3 ext_X=3131331u nb_x=01110100 expect_gamma=5 expect_beta=113");
    REQUIRE(rec.ext_c);
    CHECK(rec.ext_c->ring == Ring::F2U);
    CHECK(rec.ext_c->bits == 0x3);
    REQUIRE(rec.ext_x);
    CHECK(rec.ext_x->ring == Ring::F2U);
    CHECK(vec_to_string(*rec.ext_x) == "3131331u");
    CHECK(rec.nb_x == "01110100");

    // round trip
    const RecipeRecord again = parse_recipe_line(serialize_record(rec));
    CHECK(again.id == rec.id);
    CHECK(again.recipe.lambda.bits == rec.recipe.lambda.bits);
    CHECK(vec_to_string(*again.ext_x) == vec_to_string(*rec.ext_x));
    CHECK(again.nb_x == rec.nb_x);
    CHECK(again.expect.beta == rec.expect.beta);
}

TEST_CASE("recipe parse failures") {
    CHECK_THROWS_AS(parse_recipe_line("id=x ring=F9 variant=theorem31 rA=1 rB=1 rC=1 rD=1"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_recipe_line("id=x ring=F2 variant=theorem31 rA=1"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_recipe_line("id=x ring=F2 variant=nope rA=1 rB=1 rC=1 rD=1"),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        parse_recipe_line("id=x ring=F2 variant=theorem31 rA=1 rB=1 rC=1 rD=1 bogus=2"),
        std::invalid_argument);
    CHECK_THROWS_AS(parse_recipe_line("id=x ring=F2 variant=theorem31 rA=12 rB=1 rC=1 rD=1"),
                    std::invalid_argument);  // '2' is not binary
    // ext_c without ext_X
    CHECK_THROWS_AS(
        parse_recipe_line("id=x ring=F2 variant=theorem31 rA=1 rB=1 rC=1 rD=1 ext_c=1"),
        std::invalid_argument);
}

TEST_CASE("recipe stream skips comments and reports line numbers") {
    std::istringstream in(
        "# header comment\n"
        "\n"
        "id=a ring=F2 variant=theorem31 rA=0 rB=0 rC=0 rD=1  # trailing comment\n"
        "id=b ring=F2 variant=theorem31 rA=0 rB=0 rC=0 rD=1\n");
    const auto recs = parse_recipe_stream(in);
    CHECK(recs.size() == 2);
    CHECK(recs[1].id == "b");

    std::istringstream bad("\nid=c ring=F2\n");
    try {
        parse_recipe_stream(bad);
        FAIL("expected parse error");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("hex row packing") {
    const auto words = pack_bit_string("0110100000000001");
    CHECK(hex_pack_row(words.data(), 16) == "6801");
    CHECK(unpack_bit_string(hex_unpack_row("6801", 16), 16) == "0110100000000001");
    CHECK_THROWS_AS(hex_unpack_row("68", 16), std::invalid_argument);
    CHECK_THROWS_AS(hex_unpack_row("68z1", 16), std::invalid_argument);
    // tail padding must stay clear
    CHECK(hex_pack_row(pack_bit_string("10110").data(), 5) == "B0");
    CHECK_THROWS_AS(hex_unpack_row("B1", 5), std::invalid_argument);
}

TEST_CASE("artifact round trip") {
    CodeArtifact art;
    art.id = "h84";
    art.code = testutil::hamming84();
    art.profile.min_distance = 4;
    art.profile.type_two = true;
    art.profile.counts[4] = 14;

    std::ostringstream out;
    write_artifact(out, art);
    std::istringstream in(out.str());
    const CodeArtifact back = read_artifact(in);
    CHECK(back.id == "h84");
    CHECK(back.code == art.code);
    CHECK(back.profile.min_distance == 4);
    CHECK(back.profile.type_two);
    CHECK(back.profile.counts.at(4) == 14);
}
