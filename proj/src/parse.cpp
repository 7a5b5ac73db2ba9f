#include "lantern/parse.hpp"

#include <cctype>
#include <cstdlib>

namespace lantern {

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    std::size_t column() const { return pos + 1; }
    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    void skip_space() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos;
    }

    long integer(bool allow_sign) {
        std::size_t start = pos;
        bool neg = false;
        if (allow_sign && !done() && (peek() == '-' || peek() == '+')) {
            neg = peek() == '-';
            ++pos;
        }
        if (done() || !std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError(column(), "expected an integer");
        long v = 0;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (peek() - '0');
            if (v > 1000000)
                throw ParseError(start + 1, "integer out of range");
            ++pos;
        }
        return neg ? -v : v;
    }
};

}  // namespace

TwistWord parse_twist_word(const std::string& text, int n) {
    if (n < 1)
        throw std::invalid_argument("surface needs n >= 1");
    Cursor c{text};
    Letters letters;

    auto check_index = [&](long i, std::size_t col) {
        if (i < 1 || i > n)
            throw ParseError(col, "boundary index " + std::to_string(i) +
                                      " out of range 1.." + std::to_string(n));
    };

    for (;;) {
        c.skip_space();
        if (c.done())
            break;
        std::size_t col = c.column();
        char kind = c.peek();
        std::vector<int> enclosed;
        if (kind == 'd' || kind == 'g') {
            ++c.pos;
            c.skip_space();
            std::size_t icol = c.column();
            long i = c.integer(false);
            check_index(i, icol);
            if (kind == 'd') {
                enclosed = {static_cast<int>(i)};
            } else {
                if (i < 2)
                    throw ParseError(icol, "gamma index must be at least 2");
                for (int v = 1; v <= i; ++v)
                    enclosed.push_back(v);
            }
        } else if (kind == 't') {
            ++c.pos;
            if (c.done() || c.peek() != '{')
                throw ParseError(c.column(), "expected '{' after 't'");
            ++c.pos;
            for (;;) {
                c.skip_space();
                std::size_t icol = c.column();
                long i = c.integer(false);
                check_index(i, icol);
                if (!enclosed.empty() && i <= enclosed.back())
                    throw ParseError(icol, "enclosed indices must be strictly increasing");
                enclosed.push_back(static_cast<int>(i));
                c.skip_space();
                if (!c.done() && c.peek() == ',') {
                    ++c.pos;
                    continue;
                }
                break;
            }
            if (c.done() || c.peek() != '}')
                throw ParseError(c.column(), "expected '}' or ','");
            ++c.pos;
        } else {
            throw ParseError(col, std::string("unexpected character '") + kind + "'");
        }

        long exponent = 1;
        if (!c.done() && c.peek() == '^') {
            ++c.pos;
            std::size_t ecol = c.column();
            exponent = c.integer(true);
            if (exponent == 0)
                throw ParseError(ecol, "exponent must be nonzero");
        }

        Twist t = plain_twist(enclosed, exponent > 0 ? 1 : -1);
        for (long k = 0; k < std::labs(exponent); ++k)
            letters.push_back(t);
    }
    return make_word(n, std::move(letters));
}

std::string print_twist_word(const TwistWord& w) {
    std::string out;
    for (const auto& t : w.letters) {
        if (!t.conjugator.empty())
            throw std::invalid_argument("conjugated twists have no grammar form");
        if (!out.empty())
            out += ' ';
        if (t.curve.enclosed.size() == 1) {
            out += "d" + std::to_string(t.curve.enclosed[0]);
        } else if (is_gamma(t) || is_gamma(t.inverse())) {
            out += "g" + std::to_string(t.curve.enclosed.back());
        } else {
            out += "t{";
            for (std::size_t i = 0; i < t.curve.enclosed.size(); ++i) {
                if (i)
                    out += ',';
                out += std::to_string(t.curve.enclosed[i]);
            }
            out += '}';
        }
        if (t.sign < 0)
            out += "^-1";
    }
    return out;
}

}  // namespace lantern
