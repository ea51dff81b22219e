#pragma once
// Machine-readable reports shared by the CLI and the python bindings.
// Every report carries "schema": 1 and is deterministic for a fixed
// configuration (including the seed): no timestamps, no timings.

#include <json.hpp>
#include <string>
#include <vector>

#include "af/counts.hpp"
#include "af/verify.hpp"

namespace af {

using Json = nlohmann::json;

Json table_report();
Json census_report(int q, const std::string& mode, int threads);
Json orbit_report(const Json& start_vector, const std::string& gens, uint64_t budget);
Json dickson_report(const std::vector<int>& primes);
Json orders_report(const std::vector<int>& qs);
Json classify_report(const Json& vector_json);
Json verify_report(const std::vector<std::string>& suites, const std::vector<int>& qs_untwisted,
                   const std::vector<int>& qs_twisted, uint64_t seed, uint64_t random_instances,
                   int threads);

std::string census_csv(const Json& report);
std::string orders_csv(const Json& report);

Json suite_json(const SuiteResult& sr);

}  // namespace af
