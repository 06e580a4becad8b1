#include "nwe/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace nwe {

namespace {

bool valid_integer_token(const std::string& s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && s[0] == '-') i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::parse(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!valid_integer_token(s, true))
            throw std::runtime_error("Rational: malformed value '" + s + "'");
        return Rational(mpq_class(mpz_class(s), 1));
    }
    const std::string num = s.substr(0, slash);
    const std::string den = s.substr(slash + 1);
    if (!valid_integer_token(num, true) || !valid_integer_token(den, false))
        throw std::runtime_error("Rational: malformed value '" + s + "'");
    mpz_class d(den);
    if (d == 0) throw std::runtime_error("Rational: zero denominator in '" + s + "'");
    mpq_class q(mpz_class(num), d);
    q.canonicalize();
    return Rational(std::move(q));
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace nwe
