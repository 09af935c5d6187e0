#include "rado/equation.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

namespace rado {

LinearEquation::LinearEquation(std::vector<std::int64_t> coeffs) : coefficients(std::move(coeffs)) {
    if (coefficients.size() < 2) throw std::invalid_argument("equation needs at least 2 terms");
    for (std::int64_t c : coefficients)
        if (c == 0) throw std::invalid_argument("equation coefficients must be nonzero");
}

bool LinearEquation::is_reduced() const {
    std::int64_t g = 0;
    for (std::int64_t c : coefficients) g = std::gcd(g, c < 0 ? -c : c);
    return g == 1;
}

bool LinearEquation::is_additive_tuple() const {
    if (coefficients.size() % 2 != 0) return false;
    std::int64_t pos = 0, neg = 0;
    for (std::int64_t c : coefficients) {
        if (c == 1) ++pos;
        else if (c == -1) ++neg;
        else return false;
    }
    return pos == neg;
}

std::string LinearEquation::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(coefficients[i]);
    }
    return s + "]";
}

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() const { return pos >= text.size(); }
    char peek() const { return pos < text.size() ? text[pos] : '\0'; }
    std::size_t column() const { return pos + 1; }
};

std::int64_t parse_integer(Cursor& c) {
    c.skip_ws();
    std::size_t start = c.pos;
    bool neg = false;
    if (c.peek() == '+' || c.peek() == '-') {
        neg = c.peek() == '-';
        ++c.pos;
    }
    c.skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(c.peek())))
        throw ParseError("expected integer", c.column());
    std::int64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(c.peek()))) {
        v = v * 10 + (c.peek() - '0');
        if (v > (std::int64_t{1} << 40)) throw ParseError("coefficient too large", start + 1);
        ++c.pos;
    }
    return neg ? -v : v;
}

LinearEquation parse_bracket_list(const std::string& text) {
    Cursor c{text};
    c.skip_ws();
    ++c.pos;  // '['
    std::vector<std::int64_t> coeffs;
    c.skip_ws();
    if (c.peek() == ']') throw ParseError("empty coefficient list", c.column());
    while (true) {
        c.skip_ws();
        std::size_t at = c.column();
        std::int64_t v = parse_integer(c);
        if (v == 0) throw ParseError("zero coefficient", at);
        coeffs.push_back(v);
        c.skip_ws();
        if (c.peek() == ',') {
            ++c.pos;
            continue;
        }
        if (c.peek() == ']') {
            ++c.pos;
            break;
        }
        throw ParseError("expected ',' or ']'", c.column());
    }
    c.skip_ws();
    if (!c.done()) throw ParseError("trailing characters after ']'", c.column());
    if (coeffs.size() < 2) throw ParseError("equation needs at least 2 terms", 1);
    return LinearEquation(std::move(coeffs));
}

// One side of "2x - 2y + 3z = 0": a signed sum of integer*variable terms,
// with an optional literal 0 as a side on its own.
void parse_side(Cursor& c, int sign, std::vector<char>& order,
                std::map<char, std::int64_t>& coeff) {
    bool first = true;
    while (true) {
        c.skip_ws();
        int s = sign;
        if (c.peek() == '+' || c.peek() == '-') {
            if (c.peek() == '-') s = -s;
            ++c.pos;
            c.skip_ws();
        } else if (!first) {
            break;
        }
        std::size_t at = c.column();
        std::int64_t mag = 1;
        bool saw_digits = false;
        if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
            mag = 0;
            saw_digits = true;
            while (std::isdigit(static_cast<unsigned char>(c.peek()))) {
                mag = mag * 10 + (c.peek() - '0');
                if (mag > (std::int64_t{1} << 40)) throw ParseError("coefficient too large", at);
                ++c.pos;
            }
            c.skip_ws();
            if (c.peek() == '*') {
                ++c.pos;
                c.skip_ws();
            }
        }
        if (std::isalpha(static_cast<unsigned char>(c.peek()))) {
            char var = c.peek();
            ++c.pos;
            if (std::isalnum(static_cast<unsigned char>(c.peek())))
                throw ParseError("variables must be single letters", c.column());
            if (mag == 0) throw ParseError("zero coefficient", at);
            if (coeff.count(var)) throw ParseError(std::string("variable '") + var + "' repeated", at);
            order.push_back(var);
            coeff[var] = s * mag;
        } else if (saw_digits) {
            if (mag != 0) throw ParseError("constant terms other than 0 are not allowed", at);
            // bare zero term; contributes nothing
        } else {
            throw ParseError("expected a term", at);
        }
        first = false;
        c.skip_ws();
        if (c.done() || c.peek() == '=') break;
    }
}

LinearEquation parse_symbolic(const std::string& text) {
    Cursor c{text};
    std::vector<char> order;
    std::map<char, std::int64_t> coeff;
    parse_side(c, +1, order, coeff);
    c.skip_ws();
    if (c.peek() == '=') {
        ++c.pos;
        parse_side(c, -1, order, coeff);
        c.skip_ws();
    }
    if (!c.done()) throw ParseError("unexpected character", c.column());
    if (order.size() < 2) throw ParseError("equation needs at least 2 terms", 1);
    std::vector<std::int64_t> coeffs;
    coeffs.reserve(order.size());
    for (char v : order) coeffs.push_back(coeff[v]);
    return LinearEquation(std::move(coeffs));
}

}  // namespace

LinearEquation parse_equation(const std::string& text) {
    Cursor c{text};
    c.skip_ws();
    if (c.done()) throw ParseError("empty equation", 1);
    if (c.peek() == '[') return parse_bracket_list(text);
    return parse_symbolic(text);
}

bool zero_sum_subset_exists(const LinearEquation& eq) {
    const auto& a = eq.coefficients;
    const int k = eq.k();
    if (k > 30) throw std::invalid_argument("subset scan limited to k <= 30");
    int half = k / 2;
    auto sums_of = [&](int from, int to) {
        std::vector<std::int64_t> out;  // sums of nonempty subsets
        int len = to - from;
        for (int mask = 1; mask < (1 << len); ++mask) {
            std::int64_t s = 0;
            for (int i = 0; i < len; ++i)
                if (mask & (1 << i)) s += a[static_cast<std::size_t>(from + i)];
            out.push_back(s);
        }
        return out;
    };
    auto left = sums_of(0, half), right = sums_of(half, k);
    for (std::int64_t s : left)
        if (s == 0) return true;
    for (std::int64_t s : right)
        if (s == 0) return true;
    std::sort(right.begin(), right.end());
    for (std::int64_t s : left)
        if (std::binary_search(right.begin(), right.end(), -s)) return true;
    return false;
}

bool has_canceling_partition(const LinearEquation& eq) {
    if (eq.k() % 2 != 0) return false;
    std::map<std::int64_t, std::int64_t> mult;
    for (std::int64_t c : eq.coefficients) ++mult[c];
    for (const auto& [v, m] : mult) {
        auto it = mult.find(-v);
        if (it == mult.end() || it->second != m) return false;
    }
    return true;
}

LinearEquation additive_tuple_equation(int k) {
    if (k < 2 || k % 2 != 0) throw std::invalid_argument("additive tuple needs even k >= 2");
    std::vector<std::int64_t> c(static_cast<std::size_t>(k), 1);
    for (int i = k / 2; i < k; ++i) c[static_cast<std::size_t>(i)] = -1;
    return LinearEquation(std::move(c));
}

}  // namespace rado
