#ifndef CYV_CHOW_EXPR_HPP
#define CYV_CHOW_EXPR_HPP

// Class expressions:
//   expr    := term (('+' | '-') term)*
//   term    := ['-'] factor ('*' factor | '/' integer)*
//   factor  := primary ('^' integer)?
//   primary := integer | 's' integer ('_' integer)* | 'H' | '(' expr ')'
// Whitespace is ignored; offsets in errors refer to the original text.

#include <cctype>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

#include "cyv/chow/ring.hpp"
#include "cyv/error.hpp"

namespace cyv::chow {

namespace detail {

class ExprParser {
   public:
    ExprParser(std::string_view text, RingPtr ring) : text_(text), ring_(std::move(ring)) {}

    RingClass parse() {
        skip();
        if (pos_ >= text_.size()) throw SyntaxError(pos_, "empty expression");
        RingClass v = expr();
        skip();
        if (pos_ < text_.size()) throw SyntaxError(pos_, std::string("unexpected '") + text_[pos_] + "'");
        return v;
    }

   private:
    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    long integer() {
        skip();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) throw SyntaxError(pos_, "expected an integer");
        if (pos_ - start > 9) throw SyntaxError(start, "integer too large");
        return std::stol(std::string(text_.substr(start, pos_ - start)));
    }

    RingClass expr() {
        RingClass v = term();
        while (true) {
            if (accept('+'))
                v += term();
            else if (accept('-'))
                v -= term();
            else
                return v;
        }
    }
    RingClass term() {
        bool neg = accept('-');
        RingClass v = factor();
        while (true) {
            if (accept('*')) {
                v = v * factor();
            } else if (accept('/')) {
                const std::size_t at = pos_;
                const long d = integer();
                if (d == 0) throw SyntaxError(at, "division by zero");
                v = v * ratio(1, d);
            } else {
                return neg ? -v : v;
            }
        }
    }
    RingClass factor() {
        RingClass v = primary();
        if (accept('^')) {
            long e = integer();
            if (e > 64) throw SyntaxError(pos_, "exponent too large");
            v = v.pow(static_cast<unsigned>(e));
        }
        return v;
    }
    RingClass primary() {
        skip();
        if (pos_ >= text_.size()) throw SyntaxError(pos_, "unexpected end of expression");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            RingClass v = expr();
            if (!accept(')')) throw SyntaxError(pos_, "expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return one(ring_) * Rational(integer());
        if (c == 's') {
            const std::size_t start = pos_++;
            std::vector<int> parts{static_cast<int>(integer())};
            while (accept('_')) parts.push_back(static_cast<int>(integer()));
            for (std::size_t i = 1; i < parts.size(); ++i)
                if (parts[i] > parts[i - 1]) throw SyntaxError(start, "partition parts must be weakly decreasing");
            return schubert_anywhere(Partition(parts), start);
        }
        if (c == 'H') {
            const std::size_t start = pos_++;
            if (ring_->kind() != Ring::Kind::ProjBundle) throw SyntaxError(start, "H needs a projective bundle ring");
            return hyperplane(ring_);
        }
        throw SyntaxError(pos_, std::string("unexpected '") + c + "'");
    }

    // Schubert class on the innermost Grassmannian, pulled back to the ring.
    RingClass schubert_anywhere(const Partition& p, std::size_t at) const {
        std::vector<RingPtr> chain{ring_};
        while (chain.back()->kind() == Ring::Kind::ProjBundle) chain.push_back(chain.back()->base());
        if (chain.back()->kind() != Ring::Kind::Grassmannian) throw SyntaxError(at, "Schubert classes need a Grassmannian");
        RingClass v = schubert(chain.back(), p);
        for (std::size_t i = chain.size() - 1; i-- > 0;) v = pullback(chain[i], v);
        return v;
    }

    std::string_view text_;
    RingPtr ring_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline RingClass parse_class_expr(std::string_view text, const RingPtr& ring) {
    return detail::ExprParser(text, ring).parse();
}

/// Parses "g(K,N)" / "G(K,N)" into a Grassmannian ring.
inline RingPtr parse_ring_spec(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    int k = 0, n = 0;
    char tail = 0;
    if (s.size() < 6 || s[0] != 'g' || std::sscanf(s.c_str(), "g(%d,%d%c", &k, &n, &tail) != 3 || tail != ')' ||
        s.back() != ')' || s.find(')') != s.size() - 1)
        throw SyntaxError(0, "ring must look like g(K,N)");
    return Ring::grassmannian(k, n);
}

}  // namespace cyv::chow

#endif  // CYV_CHOW_EXPR_HPP
