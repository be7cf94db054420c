#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "philab/finring/construct.hpp"
#include "philab/idealcalc/ideal.hpp"
#include "philab/phiclass/report.hpp"

namespace philab {

/// Recursive-descent parser for ring specs:
///
///   ring   := "Zn:" n | "trunc:" p ":" e ("," e)* | "prod:" ring "|" ring
///           | "triv:" ring "|" module | "divext:" domain | "selfext:" domain
///           | "(" ring ")"
///   module := "self" | "Zn:" k | "quot:" name ("," name)*
///   domain := "Z" | "Zloc:" p | "quad:" d ":" f
///
/// Syntax errors are ParseError with the byte offset into the spec;
/// constructor errors (TooLarge, InvalidModulus, ...) pass through unchanged.
class RingSpecParser {
public:
    explicit RingSpecParser(std::string_view text, std::size_t cap = kDefaultOrderCap) : s_(text), cap_(cap) {}

    AnyRing parse() {
        skip_ws();
        if (at_end()) fail("empty ring spec");
        AnyRing r = ring();
        skip_ws();
        if (!at_end()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return r;
    }

    Domain parse_domain() {
        Domain d = domain();
        if (!at_end()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return d;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

    bool at_end() const { return pos_ >= s_.size(); }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(std::string_view tok) {
        if (s_.substr(pos_, tok.size()) != tok) return false;
        pos_ += tok.size();
        return true;
    }
    void expect(std::string_view tok) {
        if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
    }

    std::int64_t integer(bool allow_sign = false) {
        const std::size_t start = pos_;
        bool neg = false;
        if (allow_sign && !at_end() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
        if (at_end() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected an integer");
        std::int64_t v = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            if (v > (INT64_MAX - 9) / 10) {
                pos_ = start;
                fail("integer out of range");
            }
            v = v * 10 + (s_[pos_++] - '0');
        }
        return neg ? -v : v;
    }

    RingPtr finite_ring() {
        AnyRing r = ring();
        if (auto* f = std::get_if<RingPtr>(&r)) return *f;
        fail("a finite ring is required here");
    }

    AnyRing ring() {
        if (accept("(")) {
            AnyRing r = ring();
            expect(")");
            return r;
        }
        if (accept("Zn:")) {
            const auto n = integer();
            return make_zn(n, cap_);
        }
        if (accept("trunc:")) {
            const auto p = integer();
            expect(":");
            std::vector<std::int64_t> exps{integer()};
            while (accept(",")) exps.push_back(integer());
            return make_truncated_poly(p, exps, cap_);
        }
        if (accept("prod:")) {
            const auto a = finite_ring();
            expect("|");
            const auto b = finite_ring();
            return make_product(a, b, cap_);
        }
        if (accept("triv:")) {
            const auto a = finite_ring();
            expect("|");
            const auto m = module(a);
            return make_trivial_ext(a, m, cap_);
        }
        if (accept("divext:")) {
            const auto d = domain();
            return DividedExtRing(d, ModuleTag::FractionsModD);
        }
        if (accept("selfext:")) {
            const auto d = domain();
            return DividedExtRing(d, ModuleTag::SelfModule);
        }
        fail("unknown ring constructor");
    }

    FiniteModule module(const RingPtr& a) {
        if (accept("self")) return make_self_module(a);
        if (accept("Zn:")) {
            const auto k = integer();
            return make_cyclic_module(a, k);
        }
        if (accept("quot:")) {
            std::vector<Elem> gens;
            std::string text;
            do {
                const std::size_t name_start = pos_;
                while (!at_end() && s_[pos_] != ',' && s_[pos_] != ')' && s_[pos_] != '|') ++pos_;
                const std::string name(s_.substr(name_start, pos_ - name_start));
                const auto e = a->find(name);
                if (!e) {
                    pos_ = name_start;
                    fail("no element '" + name + "' in " + a->label());
                }
                gens.push_back(*e);
                text += (text.empty() ? "" : ",") + name;
            } while (accept(","));
            return make_quotient_module(a, span(a, gens).members(), "quot:" + text);
        }
        fail("unknown module spec (self, Zn:<k>, quot:<gens>)");
    }

    Domain domain() {
        if (accept("Zloc:")) {
            const auto p = integer();
            return Domain::localized(p);
        }
        if (accept("quad:")) {
            const auto d = integer(true);
            expect(":");
            const auto f = integer();
            return Domain::quadratic(d, f);
        }
        if (accept("Z")) return Domain::integers();
        fail("unknown domain (Z, Zloc:<p>, quad:<d>:<f>)");
    }

    std::string_view s_;
    std::size_t cap_;
    std::size_t pos_ = 0;
};

inline AnyRing parse_ring(std::string_view spec, std::size_t cap = kDefaultOrderCap) {
    return RingSpecParser(spec, cap).parse();
}

}  // namespace philab
