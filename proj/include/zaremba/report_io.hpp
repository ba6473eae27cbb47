#pragma once

#include <zaremba/bounds.hpp>
#include <zaremba/census.hpp>
#include <zaremba/constructions.hpp>
#include <zaremba/spectral.hpp>

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace zaremba {

// All serializers keep large integers as decimal strings (JSON numbers lose
// precision past 2^53) and emit keys in sorted order, so identical inputs
// produce byte-identical payloads.

nlohmann::json count_json(std::int64_t a, int m, std::int64_t bound,
                          CountMode mode, const CountResult& r);
std::string count_csv(std::int64_t a, int m, std::int64_t bound,
                      CountMode mode, const CountResult& r);
std::string count_text(std::int64_t a, int m, std::int64_t bound,
                       CountMode mode, const CountResult& r);

// One enumerated sequence as a JSON line payload.
nlohmann::json sequence_json(const PartialQuotients& seq,
                             const Int& continuant);

nlohmann::json bound_report_json(const BoundReport& rep);
std::string bound_reports_csv(const std::vector<BoundReport>& reps);
std::string bound_report_text(const BoundReport& rep);

nlohmann::json theorem6_json(const Theorem6Report& rep);
std::string theorem6_text(const Theorem6Report& rep);

nlohmann::json witness_member_json(const WitnessMember& member);
nlohmann::json witness_set_json(const WitnessSet& set);
std::string witness_set_jsonl(const WitnessSet& set);
std::string witness_set_csv(const WitnessSet& set);
std::string witness_set_text(const WitnessSet& set);

nlohmann::json roots_json(int s);
std::string roots_csv(int s);
std::string roots_text(int s);

nlohmann::json gap_json(const GapCertificate& gap);
std::string gap_text(const GapCertificate& gap);

nlohmann::json zaremba_json(const Int& d, std::int64_t bound,
                            const std::optional<ZarembaWitness>& w);
std::string zaremba_text(const Int& d, std::int64_t bound,
                         const std::optional<ZarembaWitness>& w);

std::string mode_name(CountMode mode);

}  // namespace zaremba
