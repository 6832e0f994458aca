#pragma once

#include <json.hpp>

#include "lucasian/class_rules.hpp"
#include "lucasian/oracle.hpp"
#include "lucasian/residue_lemmas.hpp"
#include "lucasian/scan.hpp"

namespace lucasian {

using Json = nlohmann::ordered_json;

/// Numbers that fit in 64 bits become JSON numbers, larger ones decimal strings.
Json natural_json(const Natural& n);
Natural natural_from_json(const Json& j);

Json to_json(const VerificationReport& report);
Json to_json(const ConsistencyReport& report);
Json to_json(const CrossCheckReport& report);
Json to_json(const ClassRule& rule);
Json rule_table_json();
Json to_json(const Verdict& verdict);
Json to_json(const ResultRecord& record);
Json to_json(const ScanCheckpoint& checkpoint);

ResultRecord record_from_json(const Json& j);
/// Throws CheckpointError on schema or shape problems.
ScanCheckpoint checkpoint_from_json(const Json& j);

}  // namespace lucasian
