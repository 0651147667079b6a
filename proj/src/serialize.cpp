#include "howe/serialize.hpp"

#include <json.hpp>

#include <istream>
#include <ostream>

namespace howe {

using nlohmann::json;

namespace {

json elem_json(const FieldElement& x) {
    json a = json::array();
    for (u32 v : x.to_coeffs()) a.push_back(v);
    return a;
}

FieldElement elem_from(const json& a, const FieldCtxPtr& field) {
    if (!a.is_array() || a.size() != field->degree())
        throw SchemaMismatch("serialize: element length does not match the field");
    std::vector<u32> c;
    for (const auto& v : a) {
        if (!v.is_number_unsigned() || v.get<u64>() >= field->p())
            throw SchemaMismatch("serialize: residue out of range");
        c.push_back(v.get<u32>());
    }
    return field->from_coeffs(c);
}

} // namespace

std::string header_line(const RunHeader& h, const FieldCtxPtr& field) {
    json j;
    j["schema"] = kSchemaVersion;
    j["kind"] = h.kind;
    j["p"] = h.p;
    j["field"] = {{"p", field->p()},
                  {"level", field->level()},
                  {"modulus", field->modulus()}};
    j["seed"] = h.seed;
    j["options"] = {{"ordered_pairs", h.ordered_pairs}};
    return j.dump();
}

std::string params_line(const HoweParams& hp) {
    json j;
    j["A1"] = elem_json(hp.A1);
    j["B1"] = elem_json(hp.B1);
    j["A2"] = elem_json(hp.A2);
    j["B2"] = elem_json(hp.B2);
    j["lambda"] = elem_json(hp.lambda);
    j["mu"] = elem_json(hp.mu);
    j["nu"] = elem_json(hp.nu);
    return j.dump();
}

std::string catalog_line(const SupersingularEntry& en) {
    json j;
    j["t0"] = elem_json(en.t0);
    j["j0"] = elem_json(en.j0);
    j["A0"] = elem_json(en.A0);
    j["B0"] = elem_json(en.B0);
    return j.dump();
}

std::string classification_line(u32 class_id, u32 representative,
                                const std::vector<u32>& members) {
    json j;
    j["class"] = class_id;
    j["representative"] = representative;
    j["members"] = members;
    return j.dump();
}

RunHeader parse_header(const std::string& line, FieldCtxPtr& field_out) {
    json j;
    try {
        j = json::parse(line);
    } catch (const json::exception&) {
        throw SchemaMismatch("serialize: header is not valid JSON");
    }
    if (!j.contains("schema") || j["schema"] != kSchemaVersion)
        throw SchemaMismatch("serialize: unsupported schema version");
    RunHeader h;
    h.kind = j.value("kind", "");
    h.p = j.at("p").get<u32>();
    h.seed = j.at("seed").get<u64>();
    h.ordered_pairs = j.at("options").value("ordered_pairs", false);
    const auto& f = j.at("field");
    u32 fp = f.at("p").get<u32>();
    u32 level = f.at("level").get<u32>();
    if (fp != h.p) throw SchemaMismatch("serialize: field prime differs from p");
    FieldCtxPtr field = FieldCtx::get(fp, 2 * level);
    std::vector<u32> mod = f.at("modulus").get<std::vector<u32>>();
    if (mod != field->modulus())
        throw SchemaMismatch("serialize: modulus is not the canonical one");
    field_out = field;
    return h;
}

HoweParams parse_params(const std::string& line, const FieldCtxPtr& field) {
    json j;
    try {
        j = json::parse(line);
    } catch (const json::exception&) {
        throw SchemaMismatch("serialize: record is not valid JSON");
    }
    return {elem_from(j.at("A1"), field),     elem_from(j.at("B1"), field),
            elem_from(j.at("A2"), field),     elem_from(j.at("B2"), field),
            elem_from(j.at("lambda"), field), elem_from(j.at("mu"), field),
            elem_from(j.at("nu"), field)};
}

void write_params_file(std::ostream& os, const RunHeader& h,
                       const std::vector<HoweParams>& tuples) {
    FieldCtxPtr field = make_base_field(h.p);
    os << header_line(h, field) << "\n";
    for (const auto& t : tuples) os << params_line(t) << "\n";
}

std::pair<RunHeader, std::vector<HoweParams>> read_params_file(std::istream& is) {
    std::string line;
    if (!std::getline(is, line))
        throw SchemaMismatch("serialize: empty input file");
    FieldCtxPtr field;
    RunHeader h = parse_header(line, field);
    if (h.kind != "howe_params")
        throw SchemaMismatch("serialize: expected a howe_params file");
    std::vector<HoweParams> tuples;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        tuples.push_back(parse_params(line, field));
    }
    return {h, tuples};
}

void write_classification_file(std::ostream& os, const RunHeader& h,
                               const IsoClassification& cls) {
    FieldCtxPtr field = make_base_field(h.p);
    os << header_line(h, field) << "\n";
    std::vector<std::vector<u32>> members(cls.num_classes());
    for (u32 r = 0; r < cls.class_of.size(); ++r)
        members[cls.class_of[r]].push_back(r);
    for (u32 c = 0; c < cls.num_classes(); ++c)
        os << classification_line(c, cls.representatives[c], members[c]) << "\n";
}

} // namespace howe
