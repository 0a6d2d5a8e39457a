#pragma once

#include "inoue/centralizer.hpp"
#include "inoue/conjugacy.hpp"
#include "inoue/cubic.hpp"
#include "inoue/moduli.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace inoue {

inline constexpr const char* kSchemaVersion = "1";

// Keys keep insertion order so output is byte-stable.
using Json = nlohmann::ordered_json;

Json int_to_json(const BigInt& v);
BigInt int_from_json(const Json& j);
Json quad_to_json(const QuadElem& q);
QuadElem quad_from_json(const Json& j);
Json mat_to_json(const IMat& m);
IMat mat_from_json(const Json& j);

Json class_report_to_json(const ClassReport& rep);
ClassReport class_report_from_json(const Json& j);

Json type1_to_json(const TypeIReport& rep);
TypeIReport type1_from_json(const Json& j);

Json classes_to_json(const BigInt& trace, int det, const std::vector<SimilarityClass>& cls);
Json centralizer_to_json(const IMat& N, const CentralizerGen& gen);

struct Finding {
    std::string check;
    bool passed = true;
    std::string detail;
    friend bool operator==(const Finding&, const Finding&) = default;
};

struct VerificationReport {
    std::string subject;
    std::vector<Finding> findings;
    bool ok() const;
};

Json verification_to_json(const VerificationReport& rep);
VerificationReport verification_from_json(const Json& j);

// Wraps one or more report bodies in the versioned envelope.
Json machine_document(const std::string& command, Json reports);
std::string emit_machine(const Json& doc);

std::string class_report_text(const ClassReport& rep, bool list_orbits);
std::string type1_text(const TypeIReport& rep);
std::string classes_text(const BigInt& trace, int det, const std::vector<SimilarityClass>& cls);
std::string centralizer_text(const IMat& N, const CentralizerGen& gen);
std::string verification_text(const VerificationReport& rep);

}  // namespace inoue
