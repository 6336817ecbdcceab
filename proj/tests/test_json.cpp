#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qf/json_io.hpp"

using namespace qf;

TEST_CASE("element round-trip, including moduli and big coefficients") {
    GroupRingElem big = GroupRingElem::monomial(Int("123456789012345678901234567890"), -7) +
                        GroupRingElem::constant(-5);
    CHECK(elem_from_json(elem_to_json(big)) == big);
    GroupRingElem mod = GroupRingElem::monomial(4, 2, 5);
    Json j = elem_to_json(mod);
    CHECK(j["modulus"] == 5);
    CHECK(elem_from_json(j) == mod);
    CHECK(elem_to_json(GroupRingElem::zero())["coeffs"].empty());
}

TEST_CASE("matrix round-trip and determinism") {
    Ring ring = ring_laurent();
    RingMatrix m(2, 3, ring);
    m.set(0, 0, GroupRingElem::monomial(2, 5));
    m.set(1, 2, GroupRingElem::constant(-9));
    Json j = matrix_to_json(m);
    CHECK(matrix_from_json(j, true) == m);
    CHECK(j.dump() == matrix_to_json(matrix_from_json(j, true)).dump());
}

TEST_CASE("every composite object round-trips") {
    StableIso f = make_tg(-2, 3);
    Json jf = iso_to_json(f);
    StableIso f2 = iso_from_json(jf);
    CHECK(jf.dump() == iso_to_json(f2).dump());
    CHECK(check_stable_iso(f2).ok);
    CHECK(f2.alpha == f.alpha);
    CHECK(f2.src_stab == f.src_stab);

    TwoSidedPrimEmbedding pe = make_jg_embedding(-1, 1, 6);
    Json jp = embedding_to_json(pe);
    TwoSidedPrimEmbedding pe2 = embedding_from_json(jp);
    CHECK(jp.dump() == embedding_to_json(pe2).dump());
    CHECK(validate_embedding(pe2, 6).ok);

    TwoSidedPrimEmbedding zi = make_coprime_embedding_Z(3, 5, true);
    Json jz = embedding_to_json(zi);
    CHECK(jz["laurent"] == false);
    CHECK(embedding_from_json(jz).j == zi.j);

    ExtendedSymmetricForm e{RingMatrix::from_ints({{0, 1}, {1, 0}}, ring_laurent()),
                            RingMatrix::from_ints({{1, 24}}, ring_laurent())};
    Json je = esf_to_json(e);
    CHECK(je.dump() == esf_to_json(esf_from_json(je)).dump());

    QuasiFormation x;
    x.K_rank = 1;
    x.V = RingMatrix::from_ints({{3}, {5}}, ring_Z());
    Json jq = quasiformation_to_json(x);
    QuasiFormation x2 = quasiformation_from_json(jq);
    CHECK(x2.V == x.V);
    CHECK(jq.dump() == quasiformation_to_json(x2).dump());
}

TEST_CASE("laurent defaults to true when absent") {
    Json j = Json::parse(R"({"rows":1,"cols":1,"entries":[[
        {"modulus":null,"coeffs":{"1":"2"}}]]})");
    RingMatrix m = matrix_from_json(j, true);
    CHECK(m.ring().laurent);
    Json emb = embedding_to_json(make_nab_fixture(3, 5, ring_laurent()));
    emb.erase("laurent");
    CHECK(embedding_from_json(emb).v.psi.ring().laurent);
}

TEST_CASE("malformed input raises parse errors") {
    CHECK_THROWS_AS(elem_from_json(Json::parse(R"({"coeffs":{"x":"1"}})")), ParseError);
    CHECK_THROWS_AS(elem_from_json(Json::parse(R"({"modulus":0,"coeffs":{"0":"ab"}})")),
                    ParseError);
    CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"rows":2,"cols":1,"entries":[]})"), true),
                    ParseError);
    CHECK_THROWS_AS(iso_from_json(Json::parse(R"({"alpha":3})")), ParseError);
    CHECK_THROWS_AS(embedding_from_json(Json::parse("[]")), ParseError);
    // Exponents on a non-Laurent matrix are rejected.
    Json j = Json::parse(R"({"rows":1,"cols":1,"entries":[[
        {"modulus":null,"coeffs":{"2":"1"}}]]})");
    CHECK_THROWS_AS(matrix_from_json(j, false), ParseError);
}
