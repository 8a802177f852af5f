#include "gameprob/numeric.hpp"

namespace gameprob {

std::string to_fraction_string(const Rational& r) {
    BigInt num = numerator_of(r);
    BigInt den = denominator_of(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::string to_percent_string(const Rational& r) {
    if (r == 0) return "0%";
    if (r == 1) return "100%";
    // percent * 10^4, rounded half away from zero
    Rational scaled = r * 1'000'000;
    BigInt num = numerator_of(scaled);
    BigInt den = denominator_of(scaled);
    bool negative = num < 0;
    if (negative) num = -num;
    BigInt q = (2 * num + den) / (2 * den);
    std::string digits = q.str();
    while (digits.size() < 5) digits.insert(digits.begin(), '0');
    std::string out = digits.substr(0, digits.size() - 4) + "." + digits.substr(digits.size() - 4) + "%";
    return negative ? "-" + out : out;
}

}  // namespace gameprob
