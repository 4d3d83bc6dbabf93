#pragma once

#include "confighom/errors.hpp"

#include <cstdint>
#include <string>

namespace confighom {

// Coefficient ring for homology. Serialized as "Z", "Q", or "Fp:<p>".
struct Coefficients {
    enum class Kind { Z, Q, Fp };

    Kind kind = Kind::Z;
    std::int64_t p = 0; // prime characteristic, meaningful only for Fp

    static Coefficients integers() { return {Kind::Z, 0}; }
    static Coefficients rationals() { return {Kind::Q, 0}; }
    static Coefficients mod(std::int64_t prime);

    bool is_field() const { return kind != Kind::Z; }
    bool is_mod2() const { return kind == Kind::Fp && p == 2; }

    bool operator==(const Coefficients& o) const {
        return kind == o.kind && (kind != Kind::Fp || p == o.p);
    }
    bool operator!=(const Coefficients& o) const { return !(*this == o); }

    std::string to_string() const;
    static Coefficients parse(const std::string& text);
};

inline Coefficients Coefficients::mod(std::int64_t prime) {
    if (prime < 2) throw ValidationError("field characteristic must be a prime >= 2");
    for (std::int64_t d = 2; d * d <= prime; ++d)
        if (prime % d == 0)
            throw ValidationError("field characteristic must be prime, got " +
                                  std::to_string(prime));
    return {Kind::Fp, prime};
}

inline std::string Coefficients::to_string() const {
    switch (kind) {
        case Kind::Z: return "Z";
        case Kind::Q: return "Q";
        case Kind::Fp: return "Fp:" + std::to_string(p);
    }
    return "Z";
}

inline Coefficients Coefficients::parse(const std::string& text) {
    if (text == "Z") return integers();
    if (text == "Q") return rationals();
    if (text.rfind("Fp:", 0) == 0) {
        std::size_t pos = 0;
        std::int64_t prime = 0;
        try {
            prime = std::stoll(text.substr(3), &pos);
        } catch (const std::exception&) {
            throw ValidationError("bad coefficient string: " + text);
        }
        if (pos != text.size() - 3)
            throw ValidationError("bad coefficient string: " + text);
        return mod(prime);
    }
    throw ValidationError("bad coefficient string: " + text);
}

} // namespace confighom
