#pragma once

#include "howe/curves.hpp"
#include "howe/howe_search.hpp"
#include "howe/isomorphism.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace howe {

// JSON-lines persistence, schema "howe-ssp/1": one header object on the
// first line, one record object per following line. Field elements are
// little-endian residue arrays; the field header pins the canonical modulus
// so files cannot be mixed across constructions. Execution details that vary
// between equivalent runs (--jobs, wall-clock timings) stay out of the file:
// outputs are byte-identical for identical (p, seed, options, version).
inline constexpr const char* kSchemaVersion = "howe-ssp/1";

struct RunHeader {
    std::string kind; // "catalog" | "howe_params" | "classification"
    u32 p = 0;
    u64 seed = 0;
    bool ordered_pairs = false;
};

std::string header_line(const RunHeader& h, const FieldCtxPtr& field);
std::string params_line(const HoweParams& hp);
std::string catalog_line(const SupersingularEntry& en);
std::string classification_line(u32 class_id, u32 representative,
                                const std::vector<u32>& members);

// errors: SchemaMismatch on version or field-header conflicts
RunHeader parse_header(const std::string& line, FieldCtxPtr& field_out);
HoweParams parse_params(const std::string& line, const FieldCtxPtr& field);

void write_params_file(std::ostream& os, const RunHeader& h,
                       const std::vector<HoweParams>& tuples);
std::pair<RunHeader, std::vector<HoweParams>> read_params_file(std::istream& is);

void write_classification_file(std::ostream& os, const RunHeader& h,
                               const IsoClassification& cls);

} // namespace howe
