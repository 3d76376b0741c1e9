#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "selmer/selmer.hpp"

namespace selmer::cli {

enum class Format { Table, Json, Csv };

std::string reduction_label(const DeltaContribution& c);

nlohmann::ordered_json report_to_json(const SelmerReport& r);
std::string render_report(const SelmerReport& r, Format f);
std::string render_scan(const std::vector<SelmerReport>& rows, Format f);

}  // namespace selmer::cli
