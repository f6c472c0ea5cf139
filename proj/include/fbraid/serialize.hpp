#pragma once

#include <json.hpp>

#include "fbraid/geom.hpp"
#include "fbraid/model.hpp"
#include "fbraid/report.hpp"
#include "fbraid/trace.hpp"

namespace fbraid {

nlohmann::ordered_json report_to_json(const CheckReport& report);
nlohmann::ordered_json evidence_to_json(const EqualityEvidence& evidence);
nlohmann::ordered_json wedge_action_to_json(const WedgeAction& action);

nlohmann::ordered_json trace_to_json(const DerivationTrace& trace);
DerivationTrace trace_from_json(const nlohmann::json& doc);

nlohmann::ordered_json config_to_json(const geom::DiskConfig& cfg);
geom::DiskConfig config_from_json(const nlohmann::json& doc);

}  // namespace fbraid
