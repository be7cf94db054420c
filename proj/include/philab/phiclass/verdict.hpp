#pragma once

#include <string>

namespace philab {

enum class Truth { True, False, Inconclusive };

inline std::string to_string(Truth t) {
    switch (t) {
        case Truth::True: return "true";
        case Truth::False: return "false";
        case Truth::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

inline Truth truth(bool b) { return b ? Truth::True : Truth::False; }

/// One decided property. A true answer from a bounded search carries
/// `bounded` and does not count as definite; a false answer always comes
/// with a witness and is definite.
struct Verdict {
    Truth value = Truth::Inconclusive;
    bool bounded = false;
    std::string witness;
    std::string method;
    std::string citation;

    bool definite() const { return value == Truth::False || (value == Truth::True && !bounded); }

    static Verdict yes(std::string method, std::string citation = {}) {
        return {Truth::True, false, {}, std::move(method), std::move(citation)};
    }
    static Verdict up_to_bound(std::string method, std::string citation = {}) {
        return {Truth::True, true, {}, std::move(method), std::move(citation)};
    }
    static Verdict no(std::string witness, std::string method, std::string citation = {}) {
        return {Truth::False, false, std::move(witness), std::move(method), std::move(citation)};
    }
    static Verdict unknown(std::string reason, std::string method = "inconclusive") {
        return {Truth::Inconclusive, false, std::move(reason), std::move(method), {}};
    }
};

}  // namespace philab
