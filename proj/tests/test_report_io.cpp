#include "inoue/report_io.hpp"

#include <doctest.h>

using namespace inoue;

TEST_CASE("scalar encodings") {
    BigInt big("123456789012345678901234567890");
    CHECK(int_to_json(big) == Json("123456789012345678901234567890"));
    CHECK(int_from_json(int_to_json(big)) == big);
    CHECK_THROWS_AS(int_from_json(Json(5)), ArithError);
    QuadElem q(5, make_rat(3, 2), make_rat(-1, 7));
    Json qj = quad_to_json(q);
    CHECK(qj.dump() == R"({"d":"5","a_num":"3","a_den":"2","b_num":"-1","b_den":"7"})");
    CHECK(quad_from_json(qj) == q);
    IMat m{{1, -2}, {3, 4}};
    CHECK(mat_from_json(mat_to_json(m)) == m);
}

TEST_CASE("class reports round trip") {
    for (auto [t, r, kind] : {std::tuple{3L, 5L, Kind::plus}, std::tuple{4L, 2L, Kind::plus},
                              std::tuple{5L, 3L, Kind::plus}, std::tuple{2L, 4L, Kind::minus}}) {
        ClassReport rep = classify(t, r, kind);
        Json j = class_report_to_json(rep);
        ClassReport back = class_report_from_json(j);
        CHECK(class_report_to_json(back).dump() == j.dump());
        CHECK(back.total_orbits() == rep.total_orbits());
        // Identical input, identical bytes.
        CHECK(emit_machine(machine_document("type2", Json::array({j}))) ==
              emit_machine(machine_document("type2", Json::array({class_report_to_json(classify(t, r, kind))}))));
    }
    Json j3 = class_report_to_json(classify(3, 5, Kind::plus));
    CHECK(j3.at("deformation_classes") == Json("1"));
    Json j4 = class_report_to_json(classify(4, 2, Kind::plus));
    const Json& orbs = j4.at("similarity_classes").at(0).at("orbits");
    CHECK(orbs.size() == 2);
    for (const auto& o : orbs) CHECK(o.at("component") == Json("Cstar"));
    Json jm = class_report_to_json(classify(1, 3, Kind::minus));
    CHECK(jm.at("biholomorphism_classes") == Json("1"));
    CHECK_FALSE(jm.contains("deformation_classes"));
}

TEST_CASE("type I report round trip") {
    TypeIReport rep = classify_type1(2, -2);
    Json j = type1_to_json(rep);
    CHECK(j.at("disc") == Json("-83"));
    TypeIReport back = type1_from_json(j);
    CHECK(type1_to_json(back).dump() == j.dump());
    CHECK(back.classes.size() == rep.classes.size());
}

TEST_CASE("verification documents") {
    VerificationReport empty{"nothing", {}};
    CHECK(empty.ok());
    Json doc = machine_document("verify", Json::array({verification_to_json(empty)}));
    CHECK(doc.at("schema_version") == Json(kSchemaVersion));
    CHECK(doc.at("reports").at(0).at("findings").is_array());
    CHECK(doc.at("reports").at(0).at("findings").empty());
    Json parsed = Json::parse(emit_machine(doc));
    CHECK(parsed == doc);

    VerificationReport rep{"type2 theta=3 r=1", {{"relations", true, ""}, {"tau", false, "k=(1,0)"}}};
    CHECK_FALSE(rep.ok());
    VerificationReport back = verification_from_json(verification_to_json(rep));
    CHECK(back.subject == rep.subject);
    CHECK(back.findings == rep.findings);
    std::string text = verification_text(rep);
    CHECK(text.find("[PASS] relations") != std::string::npos);
    CHECK(text.find("[FAIL] tau") != std::string::npos);
}

TEST_CASE("text tables") {
    std::string t = class_report_text(classify(4, 2, Kind::plus), true);
    CHECK(t.find("Cstar") != std::string::npos);
    std::string c = centralizer_text(IMat{{1, 1}, {1, 2}}, positive_centralizer_generator(IMat{{1, 1}, {1, 2}}));
    CHECK(c.find("-1") != std::string::npos);
    Json cj = classes_to_json(3, 1, similarity_classes(3, 1));
    CHECK(cj.at("count") == Json("1"));
}
