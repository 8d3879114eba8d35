#pragma once

#include "borda/types.hpp"

namespace borda {

// Canonical JSON: keys sorted, no insignificant whitespace. Feeding the
// output back through the parser reproduces it byte for byte.
std::string to_json(const Election& e);
std::string to_json(const ScoreProfile& p);

Election election_from_json(const std::string& text);
ScoreProfile profile_from_json(const std::string& text);

// Either file format, sniffed by the presence of "votes" vs "scores".
// Elections are tallied; the original election is kept alongside.
struct LoadedInstance {
    ScoreProfile profile;
    std::optional<Election> election;
};
LoadedInstance instance_from_json(const std::string& text);
LoadedInstance load_instance_file(const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace borda
