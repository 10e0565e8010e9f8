#pragma once

#include <map>
#include <string>
#include <vector>

#include "agcodes/place.hpp"

namespace agcodes {

/// Finite formal integer combination of places.  Zero coefficients are never
/// stored, so equality is map equality.
class Divisor {
public:
    Divisor() = default;

    static Divisor zero() { return Divisor(); }
    static Divisor single(const Place& p, long coeff = 1) {
        Divisor d;
        if (coeff != 0) d.c_[p] = coeff;
        return d;
    }

    long coeff(const Place& p) const {
        auto it = c_.find(p);
        return it == c_.end() ? 0 : it->second;
    }

    const std::map<Place, long>& terms() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int support_size() const { return int(c_.size()); }

    std::vector<Place> support() const {
        std::vector<Place> s;
        s.reserve(c_.size());
        for (const auto& [p, n] : c_) s.push_back(p);
        return s;
    }

    long degree() const {
        long d = 0;
        for (const auto& [p, n] : c_) d += n * p.degree();
        return d;
    }

    /// All coefficients nonnegative.
    bool is_effective() const {
        for (const auto& [p, n] : c_)
            if (n < 0) return false;
        return true;
    }

    friend Divisor operator+(const Divisor& a, const Divisor& b) {
        Divisor r = a;
        for (const auto& [p, n] : b.c_) {
            long v = r.coeff(p) + n;
            if (v == 0)
                r.c_.erase(p);
            else
                r.c_[p] = v;
        }
        return r;
    }
    friend Divisor operator-(const Divisor& a, const Divisor& b) { return a + (-b); }
    Divisor operator-() const {
        Divisor r;
        for (const auto& [p, n] : c_) r.c_[p] = -n;
        return r;
    }
    friend Divisor operator*(long k, const Divisor& d) {
        Divisor r;
        if (k != 0)
            for (const auto& [p, n] : d.c_) r.c_[p] = k * n;
        return r;
    }

    friend bool operator==(const Divisor& a, const Divisor& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Divisor& a, const Divisor& b) { return !(a == b); }

    std::string to_string() const {
        if (c_.empty()) return "0";
        std::string s;
        for (const auto& [p, n] : c_) {
            if (s.empty()) {
                if (n < 0) s += "-";
            } else {
                s += n < 0 ? " - " : " + ";
            }
            long a = n < 0 ? -n : n;
            s += std::to_string(a) + "*" + p.to_string();
        }
        return s;
    }

private:
    std::map<Place, long> c_;
};

/// Parse divisor text like "2*(x) - 1*(inf) + 1*(x^2+x+1)"; the coefficient
/// and '*' are optional ("(x)+(x-1)" works).  "0" is the zero divisor.
inline Divisor parse_divisor(std::string_view text, const FieldRef& F, int line = 1,
                             int column = 1) {
    Divisor out;
    size_t pos = 0;
    auto col = [&](size_t p) { return column + int(p); };
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (pos < text.size() && text[pos] == '0' &&
        text.find_first_not_of(" \t", pos + 1) == std::string_view::npos)
        return out;
    bool first = true;
    while (true) {
        skip_ws();
        if (pos == text.size()) {
            if (first) throw parse_error("empty divisor", line, col(pos));
            break;
        }
        long sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (!first) {
            throw parse_error("expected '+' or '-' between divisor terms", line, col(pos));
        }
        skip_ws();
        long k = 1;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            k = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                k = k * 10 + (text[pos] - '0');
                if (k > (1L << 40)) throw parse_error("coefficient too large", line, col(pos));
                ++pos;
            }
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                skip_ws();
            }
        }
        if (pos == text.size() || text[pos] != '(')
            throw parse_error("expected '(' starting a place", line, col(pos));
        size_t start = pos;
        int depth = 0;
        while (pos < text.size()) {
            if (text[pos] == '(') ++depth;
            if (text[pos] == ')' && --depth == 0) break;
            ++pos;
        }
        if (depth != 0) throw parse_error("unbalanced parentheses in place", line, col(start));
        ++pos;  // past ')'
        Place p = parse_place(text.substr(start, pos - start), F, line, col(start));
        out = out + Divisor::single(p, sign * k);
        first = false;
    }
    return out;
}

}  // namespace agcodes
