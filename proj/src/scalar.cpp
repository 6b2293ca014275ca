#include "dox/scalar.hpp"

#include <cctype>

#include "dox/error.hpp"

namespace dox {

Scalar& Scalar::operator*=(const Scalar& o) {
    if (sgn(im) == 0 && sgn(o.im) == 0) {
        re *= o.re;
        return *this;
    }
    mpq_class r = re * o.re - im * o.im;
    mpq_class i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw internal_error("DivisionByZero", "inverse of zero scalar");
    if (sgn(im) == 0) return Scalar(mpq_class(1) / re);
    mpq_class n = re * re + im * im;
    return Scalar(re / n, -im / n);
}

std::string Scalar::str() const {
    if (sgn(im) == 0) return re.get_str();
    std::string imag;
    mpq_class a = abs(im);
    if (a == 1)
        imag = "i";
    else
        imag = a.get_str() + "*i";
    if (sgn(re) == 0) return (sgn(im) < 0 ? "-" : "") + imag;
    return re.get_str() + (sgn(im) < 0 ? "-" : "+") + imag;
}

namespace {

mpq_class parse_rational(const std::string& s, const std::string& whole) {
    if (s.empty()) throw parse_error("ParseError", "empty rational in scalar '" + whole + "'");
    size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    bool slash = false;
    if (start == s.size()) throw parse_error("ParseError", "bad rational '" + s + "'");
    for (size_t k = start; k < s.size(); ++k) {
        if (s[k] == '/') {
            if (slash || k == start || k + 1 == s.size())
                throw parse_error("ParseError", "bad rational '" + s + "'");
            slash = true;
        } else if (!std::isdigit(static_cast<unsigned char>(s[k]))) {
            throw parse_error("ParseError", "bad rational '" + s + "' in scalar '" + whole + "'");
        }
    }
    std::string body = s[0] == '+' ? s.substr(1) : s;
    mpq_class q;
    if (q.set_str(body, 10) != 0) throw parse_error("ParseError", "bad rational '" + s + "'");
    if (q.get_den() == 0) throw parse_error("ParseError", "zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

// Imaginary part written as "i", "-i", "b*i", "b/c*i".
mpq_class parse_imag(const std::string& s, const std::string& whole) {
    std::string t = s;
    bool neg = false;
    if (!t.empty() && (t[0] == '-' || t[0] == '+')) {
        neg = t[0] == '-';
        t = t.substr(1);
    }
    mpq_class v;
    if (t == "i") {
        v = 1;
    } else if (t.size() > 2 && t.compare(t.size() - 2, 2, "*i") == 0) {
        v = parse_rational(t.substr(0, t.size() - 2), whole);
    } else {
        throw parse_error("ParseError", "bad imaginary part in scalar '" + whole + "'");
    }
    return neg ? mpq_class(-v) : v;
}

}  // namespace

Scalar Scalar::parse(const std::string& s) {
    if (s.empty()) throw parse_error("ParseError", "empty scalar");
    if (s.back() != 'i') return Scalar(parse_rational(s, s));
    // Split at the last sign that is not the leading one.
    size_t split = std::string::npos;
    for (size_t k = s.size(); k-- > 1;) {
        if (s[k] == '+' || s[k] == '-') {
            split = k;
            break;
        }
    }
    if (split == std::string::npos) return Scalar(mpq_class(0), parse_imag(s, s));
    return Scalar(parse_rational(s.substr(0, split), s), parse_imag(s.substr(split), s));
}

Scalar Scalar::from_parts(const std::string& r, const std::string& i) {
    return Scalar(parse_rational(r, r), parse_rational(i, i));
}

}  // namespace dox
