#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "schur/rootdata.hpp"

namespace schur {

/// One factor of a product in the generators: a divided power of a root
/// vector, a Cartan binomial, a bare unit K_i^e, a binomial in K_a K_b^-1,
/// or a weight idempotent.
enum class FactorKind { DividedRootPower, CartanBinomial, KPower, RootKBinomial, Idempotent };

struct KostantFactor {
    FactorKind kind = FactorKind::DividedRootPower;
    Root root{1, 2};    // DividedRootPower, RootKBinomial
    int m = 1;          // DividedRootPower exponent
    int index = 1;      // CartanBinomial, KPower
    long c = 0;         // CartanBinomial, RootKBinomial shift
    int t = 0;          // CartanBinomial, RootKBinomial size
    int exp = 1;        // KPower exponent
    Composition lambda;  // Idempotent

    static KostantFactor divided_power(Root r, int m) {
        KostantFactor f;
        f.kind = FactorKind::DividedRootPower;
        f.root = r;
        f.m = m;
        return f;
    }
    static KostantFactor cartan_binomial(int i, long c, int t) {
        KostantFactor f;
        f.kind = FactorKind::CartanBinomial;
        f.index = i;
        f.c = c;
        f.t = t;
        return f;
    }
    static KostantFactor k_power(int i, int exp) {
        KostantFactor f;
        f.kind = FactorKind::KPower;
        f.index = i;
        f.exp = exp;
        return f;
    }
    static KostantFactor root_k_binomial(Root r, long c, int t) {
        KostantFactor f;
        f.kind = FactorKind::RootKBinomial;
        f.root = r;
        f.c = c;
        f.t = t;
        return f;
    }
    static KostantFactor idempotent(Composition lam) {
        KostantFactor f;
        f.kind = FactorKind::Idempotent;
        f.lambda = std::move(lam);
        return f;
    }

    bool operator==(const KostantFactor& o) const {
        if (kind != o.kind) return false;
        switch (kind) {
            case FactorKind::DividedRootPower: return root == o.root && m == o.m;
            case FactorKind::CartanBinomial: return index == o.index && c == o.c && t == o.t;
            case FactorKind::KPower: return index == o.index && exp == o.exp;
            case FactorKind::RootKBinomial: return root == o.root && c == o.c && t == o.t;
            case FactorKind::Idempotent: return lambda == o.lambda;
        }
        return false;
    }
    bool operator!=(const KostantFactor& o) const { return !(*this == o); }

    std::string to_string() const {
        switch (kind) {
            case FactorKind::DividedRootPower: {
                std::string head = root.a < root.b ? "E(" + std::to_string(root.a) + "," + std::to_string(root.b) + ")"
                                                  : "F(" + std::to_string(root.b) + "," + std::to_string(root.a) + ")";
                if (m != 1) head += "^(" + std::to_string(m) + ")";
                return head;
            }
            case FactorKind::CartanBinomial:
                return "H(" + std::to_string(index) + ";" + std::to_string(c) + "|" + std::to_string(t) + ")";
            case FactorKind::KPower: {
                std::string head = "K(" + std::to_string(index) + ")";
                if (exp != 1) head += "^" + std::to_string(exp);
                return head;
            }
            case FactorKind::RootKBinomial:
                return "H(" + std::to_string(root.a) + "," + std::to_string(root.b) + ";" + std::to_string(c) +
                       "|" + std::to_string(t) + ")";
            case FactorKind::Idempotent: {
                std::string s = "1[";
                for (std::size_t i = 0; i < lambda.size(); ++i) {
                    if (i) s += ",";
                    s += std::to_string(lambda[i]);
                }
                return s + "]";
            }
        }
        return "?";
    }
};

using KostantMonomial = std::vector<KostantFactor>;

inline std::string monomial_to_string(const KostantMonomial& mono) {
    if (mono.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < mono.size(); ++i) {
        if (i) s += " ";
        s += mono[i].to_string();
    }
    return s;
}

inline int monomial_degree(const KostantMonomial& mono) {
    int deg = 0;
    for (const auto& f : mono)
        if (f.kind == FactorKind::DividedRootPower) deg += f.m;
    return deg;
}

/// Full content of a factor: m * eps_max(a,b) for a divided root power,
/// zero otherwise.
inline ContentVector factor_content(const KostantFactor& f, int n) {
    ContentVector chi(static_cast<std::size_t>(n), 0);
    if (f.kind == FactorKind::DividedRootPower)
        chi[static_cast<std::size_t>(std::max(f.root.a, f.root.b)) - 1] += f.m;
    return chi;
}

/// Left content: m * eps_a, reading the first written index.
inline ContentVector factor_content_left(const KostantFactor& f, int n) {
    ContentVector chi(static_cast<std::size_t>(n), 0);
    if (f.kind == FactorKind::DividedRootPower) chi[static_cast<std::size_t>(f.root.a) - 1] += f.m;
    return chi;
}

/// Right content: m * eps_b, reading the second written index.
inline ContentVector factor_content_right(const KostantFactor& f, int n) {
    ContentVector chi(static_cast<std::size_t>(n), 0);
    if (f.kind == FactorKind::DividedRootPower) chi[static_cast<std::size_t>(f.root.b) - 1] += f.m;
    return chi;
}

inline ContentVector content(const KostantMonomial& mono, int n) {
    ContentVector chi(static_cast<std::size_t>(n), 0);
    for (const auto& f : mono) chi = add_content(std::move(chi), factor_content(f, n));
    return chi;
}

inline ContentVector content_left(const KostantMonomial& mono, int n) {
    ContentVector chi(static_cast<std::size_t>(n), 0);
    for (const auto& f : mono) chi = add_content(std::move(chi), factor_content_left(f, n));
    return chi;
}

inline ContentVector content_right(const KostantMonomial& mono, int n) {
    ContentVector chi(static_cast<std::size_t>(n), 0);
    for (const auto& f : mono) chi = add_content(std::move(chi), factor_content_right(f, n));
    return chi;
}

/// Parser for the textual monomial syntax accepted on the command line:
///   E(1,2)^(2) F(1,3) X(3,1) H(1;0|2) H(1,2;-1|1) K(2)^-1 1[2,0,1]
/// Factors are juxtaposed (whitespace or '*').  E(i,j) and F(i,j) require
/// i < j and denote the raising and lowering vectors for eps_i - eps_j;
/// X(a,b) takes the written index order literally.
class MonomialParser {
public:
    explicit MonomialParser(std::string text) : text_(std::move(text)) {}

    KostantMonomial parse() {
        KostantMonomial mono;
        skip_sep();
        while (pos_ < text_.size()) {
            mono.push_back(parse_factor());
            skip_sep();
        }
        return mono;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("monomial parse error at position " + std::to_string(pos_) + ": " + what);
    }

    void skip_sep() {
        while (pos_ < text_.size() && (std::isspace(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '*'))
            ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    long parse_int() {
        std::size_t start = pos_;
        if (peek() == '+' || peek() == '-') ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start || (pos_ == start + 1 && !std::isdigit(static_cast<unsigned char>(text_[start]))))
            fail("expected integer");
        return std::stol(text_.substr(start, pos_ - start));
    }

    int parse_caret_exponent(bool parenthesized_ok) {
        if (peek() != '^') return 1;
        ++pos_;
        bool paren = false;
        if (peek() == '(') {
            if (!parenthesized_ok) fail("unexpected '('");
            paren = true;
            ++pos_;
        }
        long e = parse_int();
        if (paren) expect(')');
        return static_cast<int>(e);
    }

    KostantFactor parse_factor() {
        char head = peek();
        ++pos_;
        switch (head) {
            case 'E':
            case 'F':
            case 'X': {
                expect('(');
                int a = static_cast<int>(parse_int());
                expect(',');
                int b = static_cast<int>(parse_int());
                expect(')');
                int m = parse_caret_exponent(true);
                if (m < 0) fail("divided power exponent must be nonnegative");
                if (head != 'X' && !(a < b)) fail("E/F factors need first index < second index");
                Root r = head == 'F' ? Root(b, a) : Root(a, b);
                return KostantFactor::divided_power(r, m);
            }
            case 'H': {
                expect('(');
                int a = static_cast<int>(parse_int());
                int b = 0;
                bool pair = false;
                if (peek() == ',') {
                    ++pos_;
                    b = static_cast<int>(parse_int());
                    pair = true;
                }
                expect(';');
                long c = parse_int();
                expect('|');
                int t = static_cast<int>(parse_int());
                expect(')');
                if (t < 0) fail("binomial size must be nonnegative");
                if (pair) return KostantFactor::root_k_binomial(Root(a, b), c, t);
                return KostantFactor::cartan_binomial(a, c, t);
            }
            case 'K': {
                expect('(');
                int i = static_cast<int>(parse_int());
                expect(')');
                int e = parse_caret_exponent(true);
                return KostantFactor::k_power(i, e);
            }
            case '1': {
                expect('[');
                Composition lam;
                lam.push_back(static_cast<int>(parse_int()));
                while (peek() == ',') {
                    ++pos_;
                    lam.push_back(static_cast<int>(parse_int()));
                }
                expect(']');
                return KostantFactor::idempotent(std::move(lam));
            }
            default:
                fail("expected factor starting with E, F, X, H, K or 1");
        }
    }

    std::string text_;
    std::size_t pos_ = 0;
};

inline KostantMonomial parse_monomial(const std::string& text) {
    return MonomialParser(text).parse();
}

}  // namespace schur
