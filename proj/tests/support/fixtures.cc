#include "fixtures.h"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace htn::testing {

std::filesystem::path fixtures_dir() { return HTN_FIXTURES_DIR; }

std::string read_text(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot read " + path.string());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

Loaded load_text(const std::string &domain, const std::string &problem) {
    const auto d = hddl::parse_domain(domain);
    const auto p = hddl::parse_problem(problem, d);
    Loaded out;
    out.model = lifted::encode_integers(d, p);
    out.ground = grounding::ground(out.model, &out.stats);
    return out;
}

Loaded load_fixture(const std::string &name) {
    const auto dir = fixtures_dir() / name;
    return load_text(read_text(dir / "domain.hddl"), read_text(dir / "problem.hddl"));
}

std::vector<std::string> corpus_names() {
    std::vector<std::string> out;
    for (const auto &e : std::filesystem::directory_iterator(fixtures_dir() / "corpus"))
        if (e.is_directory())
            out.push_back(e.path().filename().string());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace htn::testing
