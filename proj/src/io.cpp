#include "borda/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "borda/election.hpp"

namespace borda {

namespace {

using nlohmann::json;

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        // nlohmann reports line and column in the message.
        throw ValidationError(e.what());
    }
}

int get_int(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw ValidationError(std::string("missing or non-integer field \"") + key + "\"");
    return j[key].get<int>();
}

}  // namespace

std::string to_json(const Election& e) {
    json j;
    j["m"] = e.m;
    j["distinguished"] = e.distinguished;
    json votes = json::array();
    for (const Vote& v : e.votes) votes.push_back(v.ranking);
    j["votes"] = std::move(votes);
    return j.dump();
}

std::string to_json(const ScoreProfile& p) {
    json j;
    j["m"] = p.m;
    j["distinguished"] = p.distinguished;
    j["scores"] = p.scores;
    return j.dump();
}

Election election_from_json(const std::string& text) {
    const json j = parse(text);
    if (!j.is_object() || !j.contains("votes"))
        throw ValidationError("election JSON must be an object with a \"votes\" array");
    Election e;
    e.m = get_int(j, "m");
    e.distinguished = get_int(j, "distinguished");
    if (!j["votes"].is_array()) throw ValidationError("\"votes\" must be an array of rankings");
    for (const auto& row : j["votes"]) {
        Vote v;
        if (!row.is_array()) throw ValidationError("each vote must be an array of candidate indices");
        for (const auto& c : row) {
            if (!c.is_number_integer()) throw ValidationError("candidate indices must be integers");
            v.ranking.push_back(c.get<int>());
        }
        e.votes.push_back(std::move(v));
    }
    e.validate();
    return e;
}

ScoreProfile profile_from_json(const std::string& text) {
    const json j = parse(text);
    if (!j.is_object() || !j.contains("scores"))
        throw ValidationError("profile JSON must be an object with a \"scores\" array");
    const int m = get_int(j, "m");
    const int d = get_int(j, "distinguished");
    if (!j["scores"].is_array()) throw ValidationError("\"scores\" must be an array of integers");
    std::vector<Score> scores;
    for (const auto& s : j["scores"]) {
        if (!s.is_number_integer()) throw ValidationError("scores must be integers");
        scores.push_back(s.get<Score>());
    }
    return ScoreProfile::from_scores(m, std::move(scores), d);
}

LoadedInstance instance_from_json(const std::string& text) {
    const json j = parse(text);
    if (j.is_object() && j.contains("votes")) {
        Election e = election_from_json(text);
        LoadedInstance out{tally(e), std::move(e)};
        return out;
    }
    if (j.is_object() && j.contains("scores")) return {profile_from_json(text), std::nullopt};
    throw ValidationError("instance JSON must contain either \"votes\" or \"scores\"");
}

LoadedInstance load_instance_file(const std::string& path) {
    return instance_from_json(read_file(path));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write file: " + path);
    out << content;
    if (!out) throw ValidationError("write failed: " + path);
}

}  // namespace borda
