#ifndef ARBOREAL_IO_HPP
#define ARBOREAL_IO_HPP

// Text forms: "x^4 - 49x^3 + 632x^2 - 777x + 1" or ascending coefficient
// lists "1,-777,632,-49,1"; branch maps "0:2,4:4,8:2".

#include "arboreal/certify.hpp"
#include "arboreal/poly.hpp"

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace arboreal {

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

namespace detail {

class Scanner {
public:
    explicit Scanner(std::string_view s) : s_(s) {}

    void skip_space() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool done() {
        skip_space();
        return i_ >= s_.size();
    }
    char peek() {
        skip_space();
        return i_ < s_.size() ? s_[i_] : '\0';
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++i_;
        return true;
    }
    std::size_t pos() const { return i_; }

    bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

    Integer integer() {
        skip_space();
        const std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (start == i_) fail("expected an integer");
        if (i_ < s_.size() && (s_[i_] == '.' || s_[i_] == '/' || s_[i_] == 'e' || s_[i_] == 'E'))
            fail("non-integer coefficient", i_);
        return Integer(std::string(s_.substr(start, i_ - start)));
    }

    [[noreturn]] void fail(const std::string& what) { fail(what, i_); }
    [[noreturn]] void fail(const std::string& what, std::size_t at) { throw ParseError(what, at); }

private:
    std::string_view s_;
    std::size_t i_ = 0;
};

inline IntPolynomial parse_expression(std::string_view text) {
    Scanner sc(text);
    std::vector<Integer> coeffs;
    if (sc.done()) sc.fail("empty polynomial");
    bool first = true;
    while (!sc.done()) {
        int sign = 1;
        if (sc.accept('+')) {
        } else if (sc.accept('-')) {
            sign = -1;
        } else if (!first) {
            sc.fail("expected '+' or '-'");
        }
        first = false;
        Integer c = 1;
        bool have_coeff = false;
        if (sc.at_digit()) {
            c = sc.integer();
            have_coeff = true;
            sc.accept('*');
        }
        std::size_t e = 0;
        if (sc.accept('x') || sc.accept('X')) {
            e = 1;
            if (sc.accept('^')) {
                const std::size_t at = sc.pos();
                const Integer ez = sc.integer();
                if (!ez.fits_ulong_p() || ez > 100000) sc.fail("exponent too large", at);
                e = ez.get_ui();
            }
        } else if (!have_coeff) {
            sc.fail("expected a term");
        }
        if (coeffs.size() <= e) coeffs.resize(e + 1);
        coeffs[e] += sign * c;
    }
    return IntPolynomial(std::move(coeffs));
}

inline IntPolynomial parse_coefficient_list(std::string_view text) {
    Scanner sc(text);
    std::vector<Integer> coeffs;
    if (sc.done()) sc.fail("empty coefficient list");
    do {
        int sign = 1;
        if (sc.accept('-')) sign = -1;
        else sc.accept('+');
        coeffs.push_back(sign * sc.integer());
    } while (sc.accept(','));
    if (!sc.done()) sc.fail("unexpected character");
    return IntPolynomial(std::move(coeffs));
}

}  // namespace detail

/// Either form is accepted; any 'x' selects the expression syntax.
inline IntPolynomial parse_polynomial(std::string_view text) {
    if (text.find_first_of("xX") != std::string_view::npos) return detail::parse_expression(text);
    return detail::parse_coefficient_list(text);
}

inline std::string format_polynomial(const IntPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        const Integer& c = p.coeff(static_cast<std::size_t>(i));
        if (c == 0) continue;
        const Integer mag = abs(c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (mag != 1 || i == 0) out += mag.get_str();
        if (i >= 1) out += "x";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

inline std::string format_coefficient_list(const IntPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& c : p.coefficients()) {
        if (!out.empty()) out += ",";
        out += c.get_str();
    }
    return out;
}

/// "0:2,4:4,8:2" (whitespace allowed); repeated keys are rejected.
inline CoefficientMap parse_coefficient_map(std::string_view text) {
    detail::Scanner sc(text);
    CoefficientMap out;
    if (sc.done()) sc.fail("empty branch map");
    do {
        const std::size_t at = sc.pos();
        const Integer k = sc.integer();
        if (!k.fits_slong_p()) sc.fail("key too large", at);
        if (!sc.accept(':')) sc.fail("expected ':'");
        const Integer a = sc.integer();
        if (!out.emplace(k.get_si(), a).second) sc.fail("repeated key", at);
    } while (sc.accept(','));
    if (!sc.done()) sc.fail("unexpected character");
    drop_zeros(out);
    return out;
}

inline std::string format_coefficient_map(const CoefficientMap& a) {
    std::string out;
    for (const auto& [k, ak] : a) {
        if (!out.empty()) out += ",";
        out += std::to_string(k) + ":" + ak.get_str();
    }
    return out;
}

/// <1^8 3^4 8 10 18^3>
inline std::string format_tree_name(const CoefficientMap& a) {
    std::string out = "<";
    for (const auto& [k, ak] : a) {
        if (out.size() > 1) out += " ";
        out += std::to_string(k);
        if (ak != 1) out += "^" + ak.get_str();
    }
    return out + ">";
}

}  // namespace arboreal

#endif
