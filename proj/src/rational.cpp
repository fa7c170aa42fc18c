#include "ababfree/rational.hpp"

#include "ababfree/errors.hpp"

namespace abab {

namespace {

bool valid_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
}

// Strip an explicit '+' so the big-int constructor only ever sees "-" or digits.
std::string normalized_token(const std::string& s) {
    return s[0] == '+' ? s.substr(1) : s;
}

} // namespace

Rat parse_rational(const std::string& text) {
    std::string num = text;
    std::string den = "1";
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    if (!valid_integer_token(num) || !valid_integer_token(den)) {
        fail(ErrorKind::Parse, "malformed rational \"" + text + "\"");
    }
    BigInt p(normalized_token(num));
    BigInt q(normalized_token(den));
    if (q == 0) {
        fail(ErrorKind::Parse, "zero denominator in rational \"" + text + "\"");
    }
    return Rat(std::move(p), std::move(q));
}

std::string format_rational(const Rat& value) {
    BigInt num = numerator(value);
    BigInt den = denominator(value);
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

} // namespace abab
