#pragma once

#include <fstream>
#include <string>
#include <vector>

#include "philab/phiclass/classify.hpp"
#include "philab/theoremlab/ringspec.hpp"

namespace philab {

inline const std::vector<std::string>& default_corpus_specs() {
    static const std::vector<std::string> specs = [] {
        std::vector<std::string> s;
        for (int n = 2; n <= 32; ++n) s.push_back("Zn:" + std::to_string(n));
        for (const char* x : {"trunc:2:2,2", "trunc:2:2", "trunc:3:2", "trunc:2:3",
                              "prod:Zn:2|Zn:2", "prod:Zn:2|Zn:3", "prod:Zn:4|Zn:2", "prod:Zn:3|Zn:3",
                              "prod:trunc:2:2|Zn:2", "triv:Zn:2|self", "triv:Zn:4|Zn:2", "triv:Zn:4|self",
                              "triv:Zn:3|self", "triv:Zn:8|Zn:4", "triv:trunc:2:2|quot:x",
                              "divext:Z", "divext:Zloc:2", "divext:quad:-1:1", "divext:quad:-1:2", "selfext:Z"})
            s.push_back(x);
        return s;
    }();
    return specs;
}

/// One ring spec per line; '#' starts a comment, blank lines are skipped.
/// Parse errors report the line and the column inside it.
inline std::vector<std::string> read_corpus_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open corpus file " + path);
    std::vector<std::string> specs;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        const auto e = line.find_last_not_of(" \t\r");
        specs.push_back(line.substr(b, e - b + 1));
    }
    return specs;
}

struct CorpusEntry {
    std::string spec;
    AnyRing ring;
};

/// Builds every ring; the first bad spec aborts with its text in the message.
inline std::vector<CorpusEntry> build_corpus(const std::vector<std::string>& specs, std::size_t cap = kDefaultOrderCap) {
    std::vector<CorpusEntry> out;
    out.reserve(specs.size());
    for (const auto& s : specs) {
        try {
            out.push_back({s, parse_ring(s, cap)});
        } catch (const ParseError& e) {
            std::string msg = e.what();
            msg = msg.substr(msg.find(": ", msg.find("position")) + 2);
            throw ParseError(e.position(), msg + " in '" + s + "'");
        } catch (const Error& e) {
            throw Error(e.code(), "'" + s + "': " + e.what());
        }
    }
    return out;
}

}  // namespace philab
