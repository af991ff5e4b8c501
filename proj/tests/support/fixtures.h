#ifndef HTN_TESTS_SUPPORT_FIXTURES_H
#define HTN_TESTS_SUPPORT_FIXTURES_H

#include "htn/grounding/grounder.h"
#include "htn/hddl/parser.h"
#include "htn/lifted/indexed_model.h"

#include <filesystem>
#include <string>
#include <vector>

namespace htn::testing {

struct Loaded {
    lifted::IndexedModel model;  // straight from the encoder
    GroundProblem ground;
    grounding::GroundingStats stats;
};

std::filesystem::path fixtures_dir();
std::string read_text(const std::filesystem::path &path);

Loaded load_text(const std::string &domain, const std::string &problem);
/// `name` is relative to the fixtures directory, e.g. "corpus/door".
Loaded load_fixture(const std::string &name);

/// Names of the bundled corpus instances, sorted.
std::vector<std::string> corpus_names();

}  // namespace htn::testing

#endif
