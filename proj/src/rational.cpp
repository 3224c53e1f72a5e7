#include "wsd/rational.hpp"

#include <cctype>
#include <sstream>

namespace wsd {

BigInt factorial(unsigned n) {
    BigInt result = 1;
    for (unsigned i = 2; i <= n; ++i) result *= i;
    return result;
}

BigInt oddDoubleFactorial(int n) {
    if (n < -1) throw std::invalid_argument("oddDoubleFactorial: n < -1");
    BigInt result = 1;
    for (int i = 3; i <= 2 * n + 1; i += 2) result *= i;
    return result;
}

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (unsigned i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result /= i;
    }
    return result;
}

Rational parseRational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty rational literal");

    auto parseInt = [](const std::string& part) -> BigInt {
        if (part.empty()) throw std::invalid_argument("empty integer in rational literal");
        std::size_t start = (part[0] == '+' || part[0] == '-') ? 1 : 0;
        if (start == part.size()) throw std::invalid_argument("sign without digits: " + part);
        for (std::size_t i = start; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i])))
                throw std::invalid_argument("bad rational literal: " + part);
        return BigInt(part);
    };

    std::size_t slash = s.find('/');
    if (slash == std::string::npos) return Rational(parseInt(s));
    BigInt num = parseInt(s.substr(0, slash));
    BigInt den = parseInt(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + s);
    return Rational(num, den);
}

std::string toString(const Rational& value) {
    std::ostringstream os;
    os << value;
    return os.str();
}

}  // namespace wsd
