#pragma once

#include <iosfwd>

#include "json.hpp"

#include "bvh/lie.hpp"

namespace bvh {

struct ReportError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string command;
    std::string groupSpec;
    int p = 2;
    int maxDegree = 3;
    bool heavy = false;
    std::string format = "text";  // "text" or "json"
    unsigned seed = 1;
    std::string element;  // label, or "gamma" for the distinguished
                          // central element of order p
};

// Catalog spec ("dihedral:8", ...) or "@file.json" with a raw
// multiplication table {"name": ..., "mul": [[...]], "labels": [...]}.
Group loadGroup(const std::string& spec);

// The "gamma" alias / label lookup used by --element.
int resolveElement(const Group& G, int p, const std::string& name);

// Runs the command and fills a schema-versioned document ("bvh/1");
// ok reports whether every check in the document passed.
nlohmann::json runCommand(const RunConfig& cfg, bool& ok);

std::string renderReport(const nlohmann::json& doc, const std::string& format);

// runCommand + renderReport to the stream; returns the exit status
// (0 iff all checks passed).
int executeCommand(const RunConfig& cfg, std::ostream& out);

}  // namespace bvh
