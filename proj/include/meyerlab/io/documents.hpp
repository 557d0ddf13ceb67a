#pragma once

#include "meyerlab/exactnum/embedding.hpp"
#include "meyerlab/io/json.hpp"

#include <string>
#include <vector>

namespace meyerlab::io {

// Settings that may change how fast a document is computed but never its
// content.
struct RunOptions {
    unsigned threads = 1;
};

enum class Outcome { Verified, Negative, Inconclusive };
const char* to_string(Outcome o);

// {"kind", "format", "inputs", "outcome", "result"}. The inputs are everything
// needed to recompute the document.
struct Document {
    Json json;
    Outcome outcome = Outcome::Verified;
};

// Kinds: approximate_lattice, global_cover, intersection, projection,
// heis_cover, center, commutator, hull, heis_commensurability, pisot,
// ring_enumeration, polynomial_cover, shrink, delone, patch_cover,
// commensurability, cell_cover. Throws UsageError for unknown kinds or
// malformed inputs.
Document compute(const std::string& kind, const Json& inputs, const RunOptions& opts = {});

struct ReplayResult {
    bool ok = true;
    std::string kind;
    std::vector<std::string> passed;
    std::vector<std::string> failed;
};

// Checks the recorded evidence from the document alone (covers, Pisot
// certificates, patch assignments), then recomputes the document from its
// inputs and requires byte equality.
ReplayResult replay_document(const Json& doc, const RunOptions& opts = {});

// Pretty-printed with a trailing newline; the canonical byte form.
std::string dump(const Json& j);
Json parse_json(const std::string& text);

}  // namespace meyerlab::io
