#include "singpack/rational.hpp"

#include <ostream>
#include <algorithm>
#include <cctype>

namespace singpack {

Rational::Rational(long n, long d) {
    if (d == 0) throw std::invalid_argument("rational: zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("rational: division by zero");
    v_ /= o.v_;
    return *this;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isdigit(c); });
}

} // namespace

Rational Rational::parse(std::string_view s) {
    // strip surrounding whitespace
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) throw std::invalid_argument("rational: empty string");

    bool neg = false;
    if (s.front() == '+' || s.front() == '-') {
        neg = s.front() == '-';
        s.remove_prefix(1);
        if (s.empty()) throw std::invalid_argument("rational: sign only");
    }

    std::string body(s);
    mpq_class v;
    if (auto slash = body.find('/'); slash != std::string::npos) {
        std::string num = body.substr(0, slash);
        std::string den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw std::invalid_argument("rational: bad fraction '" + body + "'");
        v = mpq_class(mpz_class(num), mpz_class(den));
        if (v.get_den() == 0) throw std::invalid_argument("rational: zero denominator");
    } else if (auto dot = body.find('.'); dot != std::string::npos) {
        std::string whole = body.substr(0, dot);
        std::string frac = body.substr(dot + 1);
        if (whole.empty()) whole = "0";
        if (!all_digits(whole) || (!frac.empty() && !all_digits(frac)))
            throw std::invalid_argument("rational: bad decimal '" + body + "'");
        mpz_class scale = 1;
        for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
        mpz_class n = mpz_class(whole) * scale + (frac.empty() ? mpz_class(0) : mpz_class(frac));
        v = mpq_class(n, scale);
    } else {
        if (!all_digits(body))
            throw std::invalid_argument("rational: bad integer '" + body + "'");
        v = mpq_class(mpz_class(body));
    }
    v.canonicalize();
    if (neg) v = -v;
    return Rational(std::move(v));
}

std::string Rational::str() const {
    if (is_integral()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace singpack
