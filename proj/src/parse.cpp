#include "abelcenter/parse.hpp"

#include <cctype>

namespace abelcenter {

namespace {

class Scanner {
public:
    explicit Scanner(const std::string& s) : s_(s) {}

    void skip_ws() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
    }

    bool done() {
        skip_ws();
        return pos_ >= s_.size();
    }

    size_t position() const { return pos_ + 1; }

    /* Consumes '+' or '-' (including U+2212) and returns the sign, or 0 if
     * the next character is not a sign. */
    int take_sign() {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '+') { ++pos_; return +1; }
        if (pos_ < s_.size() && s_[pos_] == '-') { ++pos_; return -1; }
        if (pos_ + 2 < s_.size() && static_cast<unsigned char>(s_[pos_]) == 0xE2 &&
            static_cast<unsigned char>(s_[pos_ + 1]) == 0x88 &&
            static_cast<unsigned char>(s_[pos_ + 2]) == 0x92) {
            pos_ += 3;
            return -1;
        }
        return 0;
    }

    bool peek_digit() {
        skip_ws();
        return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
    }

    bool take_char(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) { ++pos_; return true; }
        return false;
    }

    std::string take_digits() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError("expected digits", position());
        return s_.substr(start, pos_ - start);
    }

private:
    const std::string& s_;
    size_t pos_ = 0;
};

} // namespace

Poly parse_poly(const std::string& text) {
    Scanner sc(text);
    if (sc.done()) throw ParseError("empty polynomial", sc.position());

    std::vector<Rational> coeffs;
    auto add_term = [&coeffs](int e, const Rational& c) {
        if (static_cast<size_t>(e) >= coeffs.size()) coeffs.resize(static_cast<size_t>(e) + 1, Rational(0));
        coeffs[static_cast<size_t>(e)] += c;
    };

    bool first = true;
    while (true) {
        int sign = sc.take_sign();
        if (first) {
            if (sign == 0) sign = +1;
        } else {
            if (sign == 0) throw ParseError("expected '+' or '-' between terms", sc.position());
        }
        first = false;

        Rational coeff(1);
        bool saw_coeff = false;
        if (sc.peek_digit()) {
            std::string num = sc.take_digits();
            std::string den = "1";
            if (sc.take_char('/')) den = sc.take_digits();
            mpq_class q((mpz_class(num)), mpz_class(den));
            if (q.get_den() == 0) throw ParseError("zero denominator", sc.position());
            q.canonicalize();
            coeff = Rational(q);
            saw_coeff = true;
        }

        int exponent = 0;
        if (sc.take_char('x')) {
            exponent = 1;
            if (sc.take_char('^')) {
                size_t at = sc.position();
                std::string e = sc.take_digits();
                if (e.size() > 4) throw ParseError("exponent too large", at);
                exponent = std::stoi(e);
            }
        } else if (!saw_coeff) {
            throw ParseError("expected a coefficient or 'x'", sc.position());
        }

        add_term(exponent, sign < 0 ? -coeff : coeff);
        if (sc.done()) break;
    }
    return Poly(std::move(coeffs));
}

} // namespace abelcenter
