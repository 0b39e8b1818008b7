#include "illumid/manifest.hpp"
#include "illumid/errors.hpp"

#include <fstream>
#include <set>

#include <json.hpp>

namespace illumid {

std::string to_string(Split s) {
    switch (s) {
        case Split::train: return "train";
        case Split::query: return "query";
        case Split::gallery: return "gallery";
    }
    return "train";
}

Split split_from_string(const std::string& s) {
    if (s == "train") return Split::train;
    if (s == "query") return Split::query;
    if (s == "gallery") return Split::gallery;
    throw parse_error("unknown split '" + s + "'");
}

namespace {
const std::set<std::string> kManifestKeys = {
    "image_path", "person_id", "camera_id", "split", "illum_class", "gamma"};
}

Manifest read_manifest(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw io_error("cannot open manifest '" + file.string() + "'");

    Manifest m;
    m.root = file.has_parent_path() ? file.parent_path() : std::filesystem::path(".");

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw parse_error("manifest " + file.string() + " line " +
                              std::to_string(lineno) + ": " + e.what());
        }
        const auto fail = [&](const std::string& why) {
            throw parse_error("manifest " + file.string() + " line " +
                              std::to_string(lineno) + ": " + why);
        };
        if (!j.is_object()) fail("record is not a JSON object");
        for (const auto& [key, _] : j.items()) {
            if (!kManifestKeys.count(key)) fail("unexpected key '" + key + "'");
        }
        for (const auto& key : kManifestKeys) {
            if (!j.contains(key)) fail("missing key '" + key + "'");
        }
        SampleRecord r;
        try {
            r.image_path = j.at("image_path").get<std::string>();
            r.person_id = j.at("person_id").get<int>();
            r.camera_id = j.at("camera_id").get<int>();
            r.split = split_from_string(j.at("split").get<std::string>());
            r.illum_class = j.at("illum_class").get<int>();
            r.gamma = j.at("gamma").get<double>();
        } catch (const parse_error&) {
            throw;
        } catch (const std::exception& e) {
            fail(e.what());
        }
        if (r.person_id < 0) fail("person_id must be >= 0");
        if (r.illum_class < 0) fail("illum_class must be >= 0");
        if (!(r.gamma > 0.0)) fail("gamma must be > 0");
        m.records.push_back(std::move(r));
    }
    if (m.records.empty()) {
        throw parse_error("manifest " + file.string() + ": no records");
    }
    return m;
}

void write_manifest(const Manifest& m, const std::filesystem::path& file) {
    std::ofstream out(file);
    if (!out) throw io_error("cannot write manifest '" + file.string() + "'");
    for (const auto& r : m.records) {
        nlohmann::ordered_json j;
        j["image_path"] = r.image_path;
        j["person_id"] = r.person_id;
        j["camera_id"] = r.camera_id;
        j["split"] = to_string(r.split);
        j["illum_class"] = r.illum_class;
        j["gamma"] = r.gamma;
        out << j.dump() << "\n";
    }
    if (!out) throw io_error("failed writing manifest '" + file.string() + "'");
}

} // namespace illumid
