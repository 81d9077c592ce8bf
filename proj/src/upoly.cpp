#include "nbt/upoly.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <sstream>

namespace nbt {

UPoly<Rat> to_rat(const UPoly<Int>& f) {
    std::vector<Rat> v;
    v.reserve(f.c.size());
    for (auto& x : f.c) v.emplace_back(x);
    return UPoly<Rat>(std::move(v));
}

UPoly<Int> to_int_checked(const UPoly<Rat>& f) {
    std::vector<Int> v;
    v.reserve(f.c.size());
    for (auto& x : f.c) {
        require(boost::multiprecision::denominator(x) == 1, "to_int_checked: non-integer coefficient");
        v.push_back(boost::multiprecision::numerator(x));
    }
    return UPoly<Int>(std::move(v));
}

Int discriminant_int(const UPoly<Int>& f) {
    int m = f.deg();
    require(m >= 1, "discriminant of a constant");
    Rat res = resultant(to_rat(f), to_rat(derivative(f)));
    Rat d = res / Rat(f.lead());
    if ((i64(m) * (m - 1) / 2) % 2) d = -d;
    require(boost::multiprecision::denominator(d) == 1, "discriminant: non-integer result");
    return boost::multiprecision::numerator(d);
}

std::string to_human(const UPoly<Int>& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = f.deg(); i >= 0; --i) {
        Int a = f.coeff(size_t(i));
        if (a == 0) continue;
        bool neg = a < 0;
        Int mag = neg ? Int(-a) : a;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (i == 0) {
            os << mag;
        } else {
            if (mag != 1) os << mag << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

UPoly<Int> parse_human_int(const std::string& s) {
    size_t i = 0;
    auto skip = [&] {
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    };
    std::vector<std::pair<i64, Int>> terms;
    skip();
    if (i >= s.size()) throw Error("parse_human_int: empty input");
    bool any = false;
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
        sign = s[i] == '-' ? -1 : 1;
        ++i;
    }
    while (true) {
        skip();
        Int coef = 1;
        bool saw_num = false;
        if (i < s.size() && std::isdigit((unsigned char)s[i])) {
            Int n = 0;
            while (i < s.size() && std::isdigit((unsigned char)s[i])) {
                n = n * 10 + (s[i] - '0');
                ++i;
            }
            coef = n;
            saw_num = true;
        }
        skip();
        if (i < s.size() && s[i] == '*') {
            ++i;
            skip();
        }
        i64 e = 0;
        if (i < s.size() && s[i] == 'x') {
            ++i;
            e = 1;
            skip();
            if (i < s.size() && s[i] == '^') {
                ++i;
                skip();
                if (i >= s.size() || !std::isdigit((unsigned char)s[i]))
                    throw Error("parse_human_int: missing exponent");
                i64 n = 0;
                while (i < s.size() && std::isdigit((unsigned char)s[i])) {
                    n = n * 10 + (s[i] - '0');
                    ++i;
                }
                e = n;
            }
        } else if (!saw_num) {
            throw Error("parse_human_int: expected a term at position " + std::to_string(i));
        }
        terms.emplace_back(e, sign > 0 ? coef : Int(-coef));
        any = true;
        skip();
        if (i >= s.size()) break;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else {
            throw Error("parse_human_int: unexpected character '" + std::string(1, s[i]) + "'");
        }
    }
    require(any, "parse_human_int: no terms");
    i64 dmax = 0;
    for (auto& [e, a] : terms) dmax = std::max(dmax, e);
    std::vector<Int> v(size_t(dmax) + 1, Int(0));
    for (auto& [e, a] : terms) v[size_t(e)] += a;
    return UPoly<Int>(std::move(v));
}

std::string to_csv(const UPoly<Int>& f) {
    std::ostringstream os;
    for (size_t i = 0; i < f.c.size(); ++i) {
        if (i) os << ",";
        os << f.c[i];
    }
    return os.str();
}

UPoly<Int> parse_csv_int(const std::string& s) {
    std::vector<Int> v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) v.emplace_back(Int(tok));
    if (v.empty()) throw Error("parse_csv_int: empty input");
    return UPoly<Int>(std::move(v));
}

}  // namespace nbt
