#pragma once

#include <string>

#include <json.hpp>

#include "hooktab/crowding.hpp"
#include "hooktab/crystal.hpp"
#include "hooktab/tableau.hpp"
#include "hooktab/uncrowding.hpp"

namespace hooktab {

using json = nlohmann::json;

// Canonical JSON: {"shape": [...], "cells": [{"row","col","hook","arm","leg"}...]}
// with cells sorted by (row, col). Absent arm/leg lists are emitted as [].
json to_json(const HookValuedTableau& t);
HookValuedTableau hvt_from_json(const json& j);

json to_json(const ReversePlanePartition& r);
ReversePlanePartition rpp_from_json(const json& j);

// {"inner": [...], "outer": [...], "orientation": "row"|"column",
//  "entries": [{"row","col","value"}...]}
json to_json(const FlaggedTableau& f);
FlaggedTableau flagged_from_json(const json& j);

json to_json(const UncrowdResult& u);
json to_json(const SvtUncrowdResult& u);
json to_json(const CrowdResult& c);
json to_json(const CrystalGraph& g);

std::string canonical_string(const HookValuedTableau& t);

// ASCII rendering in the paper's stacked-cell layout: the leg above the
// hook, the arm to its right, row 1 at the bottom.
std::string render_ascii(const HookValuedTableau& t);
std::string render_ascii(const FlaggedTableau& f);

std::string dot_export(const CrystalGraph& g);

}  // namespace hooktab
