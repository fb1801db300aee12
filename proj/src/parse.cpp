#include <cctype>
#include <string>

#include "chow/poly.hpp"

namespace chow {

namespace {

// Grammar: poly := ['+'|'-'] term (('+'|'-') term)*
//          term := factor ('*' factor)*
//          factor := rational | varname ('^' nat)?
// A rational is `p` or `p/q` with optional sign handled at term level.
class Parser {
public:
    Parser(const std::string& text, SpacePtr space)
        : text_(text), space_(std::move(space)) {}

    Poly run() {
        std::vector<Term> terms;
        skip_ws();
        if (done()) fail(Errc::parse_error, "empty polynomial text");
        bool neg = eat_sign();
        terms.push_back(parse_term(neg));
        skip_ws();
        while (!done()) {
            char c = peek();
            if (c != '+' && c != '-')
                fail(Errc::parse_error, "expected '+' or '-' at position " + std::to_string(pos_));
            ++pos_;
            skip_ws();
            terms.push_back(parse_term(c == '-'));
            skip_ws();
        }
        return Poly::from_terms(space_, std::move(terms));
    }

private:
    bool done() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    bool eat_sign() {
        if (!done() && (peek() == '+' || peek() == '-')) {
            bool neg = peek() == '-';
            ++pos_;
            skip_ws();
            return neg;
        }
        return false;
    }

    Term parse_term(bool negative) {
        Rational coef(1);
        std::vector<Monomial::Entry> exps;
        bool expect_factor = true;
        while (expect_factor) {
            skip_ws();
            if (done()) fail(Errc::parse_error, "dangling '*' at end of input");
            char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                coef *= parse_rational_literal();
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                auto [v, e] = parse_var_power();
                exps.emplace_back(v, e);
            } else {
                fail(Errc::parse_error, "unexpected character '" + std::string(1, c) +
                                            "' at position " + std::to_string(pos_));
            }
            skip_ws();
            if (!done() && peek() == '*') {
                ++pos_;
            } else {
                expect_factor = false;
            }
        }
        if (negative) coef = -coef;
        return {Monomial(std::move(exps)), std::move(coef)};
    }

    Rational parse_rational_literal() {
        std::string num = parse_digits();
        if (!done() && peek() == '/') {
            ++pos_;
            std::string den = parse_digits();
            if (den.empty()) fail(Errc::parse_error, "missing denominator");
            return parse_rational(num + "/" + den);
        }
        return parse_rational(num);
    }

    std::string parse_digits() {
        std::string s;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) s += text_[pos_++];
        if (s.empty()) fail(Errc::parse_error, "expected digits at position " + std::to_string(pos_));
        return s;
    }

    std::pair<int, int> parse_var_power() {
        std::string name;
        while (!done() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
            name += text_[pos_++];
        auto v = space_->parse_var(name);
        if (!v) fail(Errc::parse_error, "unknown variable '" + name + "'");
        int e = 1;
        skip_ws();
        if (!done() && peek() == '^') {
            ++pos_;
            skip_ws();
            std::string digits = parse_digits();
            try {
                e = std::stoi(digits);
            } catch (const std::exception&) {
                fail(Errc::parse_error, "exponent out of range: " + digits);
            }
        }
        return {*v, e};
    }

    const std::string& text_;
    SpacePtr space_;
    size_t pos_ = 0;
};

} // namespace

Poly parse_poly(const std::string& text, const SpacePtr& space) {
    return Parser(text, space).run();
}

} // namespace chow
