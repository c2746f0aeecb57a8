#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "perron/bounds.hpp"
#include "perron/pipeline.hpp"
#include "perron/searchdpf.hpp"

namespace perron {

using Json = nlohmann::ordered_json;

Json to_json(const mpq_class& q);
Json to_json(const Interval& iv);
Json to_json(const IntVec& v);
Json to_json(const RatVec& v);
Json to_json(const IntPolynomial& p);
Json to_json(const HugeReal& h);

// {"n": n, "entries": [[...]]} with decimal-string entries.
Json matrix_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);

mpz_class integer_from_json(const Json& j);
mpq_class rational_from_json(const Json& j);
IntVec int_vector_from_json(const Json& j);
RatVec rat_vector_from_json(const Json& j);
Interval interval_from_json(const Json& j);

Json field_json(const FieldContext& ctx);
Json bound_json(const BoundReport& report);
Json search_json(const SearchResult& result);

// Everything needed to re-check a construction from JSON alone.
Json certificate_json(const Construction& c, const BoundReport& bounds, const Json& config);

// Pretty-printed with a trailing newline.
std::string dump(const Json& j);

// Writes through a temporary file and a rename. Throws Io.
void atomic_write(const std::filesystem::path& path, const std::string& contents);
std::string read_file(const std::filesystem::path& path);

}  // namespace perron
