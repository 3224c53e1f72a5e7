#include "wsd/weights.hpp"

#include <algorithm>

namespace wsd {

bool WeightData::positive() const {
    return std::all_of(weights.begin(), weights.end(),
                       [](const Rational& a) { return a > 0; });
}

WeightData makeWeightData(std::vector<Rational> weights, int genus, int betaDegree) {
    if (genus < 0) throw std::invalid_argument("negative genus");
    if (betaDegree < 0) throw std::invalid_argument("negative beta degree");
    for (const Rational& a : weights)
        if (a < 0 || a > 1)
            throw std::invalid_argument("weight outside [0,1]: " + toString(a));
    return WeightData{std::move(weights), genus, betaDegree};
}

std::vector<Rational> parseWeightList(const std::string& text,
                                      const std::optional<Rational>& epsilon) {
    std::vector<Rational> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string token = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                        : comma - pos);
        pos = comma == std::string::npos ? text.size() + 1 : comma + 1;
        if (token.empty()) throw std::invalid_argument("empty weight token");

        int repeat = 1;
        std::size_t caret = token.rfind('^');
        if (caret != std::string::npos) {
            repeat = std::stoi(token.substr(caret + 1));
            if (repeat <= 0) throw std::invalid_argument("bad repetition count in " + token);
            token = token.substr(0, caret);
        }
        Rational value;
        if (token == "e") {
            if (!epsilon)
                throw std::invalid_argument("weight token 'e' used without --epsilon");
            value = *epsilon;
        } else {
            value = parseRational(token);
        }
        for (int i = 0; i < repeat; ++i) out.push_back(value);
    }
    return out;
}

bool inDomain(const WeightData& w) {
    if (w.genus == 0 && w.betaDegree == 0) {
        Rational sum = 0;
        for (const Rational& a : w.weights) sum += a;
        return sum > 2;
    }
    if (w.genus == 1 && w.betaDegree == 0) {
        for (const Rational& a : w.weights)
            if (a != 0) return true;
        return false;  // the excluded point (0^n)
    }
    return true;
}

bool dominates(const WeightData& a, const WeightData& b) {
    if (a.size() != b.size()) throw std::invalid_argument("weight data length mismatch");
    if (a.genus != b.genus || a.betaDegree != b.betaDegree)
        throw std::invalid_argument("weight data context (g, beta) mismatch");
    for (int i = 0; i < a.size(); ++i)
        if (a.weights[i] < b.weights[i]) return false;
    return true;
}

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

Rational perturbationBound(const WeightData& w) {
    const int n = w.size();
    if (n > 30) throw CapacityError("perturbation bound: too many weights");
    // Smallest positive distance of any subset sum (|I| >= 2) from 1.
    Rational bound = 1;
    std::vector<Rational> sum(std::size_t(1) << n, Rational(0));
    for (unsigned mask = 1; mask < sum.size(); ++mask) {
        unsigned low = mask & (mask - 1);
        int bit = __builtin_ctz(mask);
        sum[mask] = sum[low] + w.weights[bit];
        if (__builtin_popcount(mask) < 2) continue;
        Rational slack = sum[mask] - 1;
        if (slack < 0) slack = -slack;
        if (slack != 0 && slack < bound) bound = slack;
    }
    for (const Rational& a : w.weights)
        if (a > 0 && a < bound) bound = a;
    if (w.genus == 0 && w.betaDegree == 0) {
        Rational slack = sum.back() - 2;
        if (slack < 0) slack = -slack;
        if (slack != 0 && slack < bound) bound = slack;
    }
    // A decrease of delta_i < bound/(n+1) per weight moves any subset sum by
    // less than bound, so no wall inequality can flip sides.
    return bound / Rational(n + 1);
}

WeightData perturbGeneric(const WeightData& w, std::uint64_t seed) {
    if (!w.positive()) throw std::invalid_argument("perturbGeneric requires positive weights");
    const Rational scale = perturbationBound(w);
    WeightData out = w;
    for (int i = 0; i < w.size(); ++i) {
        std::uint64_t m = 1 + (mix64(seed * 0x100000001B3ull + std::uint64_t(i)) & 0xFFFFF);
        out.weights[i] -= scale * Rational(BigInt(m), BigInt(1) << 21);
    }
    return out;
}

WeightData perturbGeneric(const WeightData& w, std::uint64_t seed,
                          const std::function<bool(const WeightData&)>& accept,
                          int maxAttempts) {
    for (int attempt = 0; attempt < maxAttempts; ++attempt) {
        WeightData candidate = perturbGeneric(w, seed + std::uint64_t(attempt));
        if (!accept || accept(candidate)) return candidate;
    }
    throw std::runtime_error("perturbGeneric: no accepted perturbation found");
}

}  // namespace wsd
