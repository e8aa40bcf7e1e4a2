// Copyright 2026 The qswap authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QSWAP_REPORT_IO_HPP
#define QSWAP_REPORT_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "qswap/conjecture_lab.hpp"
#include "qswap/oracle.hpp"
#include "qswap/swap_protocol.hpp"

namespace qswap {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

//! 17-significant-digit decimal form of a double (trailing zeros
//! stripped), locale independent; parses back to the identical bit pattern.
std::string format_double(double value);

//! Serialize a JSON tree with every float rendered by format_double.
//! indent < 0 emits a single line.
std::string dump_json(const Json& value, int indent = 2);

Json to_json(const CCRBreakdown& ccr);
Json to_json(const SchmidtCoeffs& coeffs);
Json to_json(const PureState& state);        // amplitudes as [re, im] pairs
Json to_json(const BBMOutcome& outcome);
Json to_json(const BoundReport& bounds);
Json to_json(const SwapReport& report);
Json to_json(const OracleOutcome& outcome);
Json to_json(const OracleReport& report);
Json to_json(const ScanConfig& config);
Json to_json(const ScanViolation& violation);
Json to_json(const ScanResult& result);

//! Wrap a payload in the versioned report document:
//! schema_version, command echo, ISO-8601 UTC timestamp, payload.
Json make_document(const std::string& payload_type, const std::string& command,
                   Json payload, double duration_seconds);

//! CSV writers. Dot decimal separator, comma delimiter, LF line endings.
void write_swap_csv(std::ostream& os, const SwapReport& report);
void write_qubit_scan_csv(std::ostream& os, const std::vector<QubitScanPoint>& points);
void write_bell_csv(std::ostream& os, const std::vector<PureState>& states, int d);
void write_scan_csv(std::ostream& os, const ScanResult& result);

}  // namespace qswap

#endif  // QSWAP_REPORT_IO_HPP
