#pragma once

#include <string>
#include <vector>

#include "linebot/sim_engine.hpp"

namespace linebot {

// One JSON object per record, keys in declaration order, no trailing spaces.
std::string trace_record_to_json(const TraceRecord& record);
std::string trace_to_jsonl(const std::vector<TraceRecord>& trace);

extern const char* const kTraceCsvHeader;

// Same columns as the JSONL keys; sensors packed as a 3-char bit string.
std::string trace_to_csv(const std::vector<TraceRecord>& trace);

}  // namespace linebot
