#ifndef CYV_FIELD_HPP
#define CYV_FIELD_HPP

#include <concepts>
#include <cstdint>
#include <string>

#include "cyv/error.hpp"
#include "cyv/rational.hpp"

namespace cyv {

/// A field is a small object carrying whatever context its elements need
/// (a modulus, a minimal polynomial). Algorithms take the field by const
/// reference and never assume a default-constructed element is meaningful.
template <class F>
concept Field = requires(const F& f, const typename F::Element& a, const typename F::Element& b,
                         const Rational& q) {
    typename F::Element;
    { f.zero() } -> std::convertible_to<typename F::Element>;
    { f.one() } -> std::convertible_to<typename F::Element>;
    { f.add(a, b) } -> std::convertible_to<typename F::Element>;
    { f.sub(a, b) } -> std::convertible_to<typename F::Element>;
    { f.mul(a, b) } -> std::convertible_to<typename F::Element>;
    { f.neg(a) } -> std::convertible_to<typename F::Element>;
    { f.inv(a) } -> std::convertible_to<typename F::Element>;
    { f.is_zero(a) } -> std::convertible_to<bool>;
    { f.equal(a, b) } -> std::convertible_to<bool>;
    { f.from_rational(q) } -> std::convertible_to<typename F::Element>;
};

struct RationalField {
    using Element = Rational;

    Element zero() const { return 0; }
    Element one() const { return 1; }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element neg(const Element& a) const { return -a; }
    Element inv(const Element& a) const {
        if (a == 0) fail(ErrorCode::Internal, "division by zero in Q");
        return 1 / a;
    }
    Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }
    bool is_zero(const Element& a) const { return a == 0; }
    bool equal(const Element& a, const Element& b) const { return a == b; }
    Element from_rational(const Rational& q) const { return q; }
    std::string format(const Element& a) const { return to_string(a); }

    bool operator==(const RationalField&) const = default;
};

inline bool is_prime(std::uint64_t q) {
    if (q < 2) return false;
    for (std::uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

/// Z/q for a prime q < 2^31; elements are reduced representatives in [0, q).
class PrimeField {
   public:
    using Element = std::uint64_t;

    explicit PrimeField(std::uint64_t q) : q_(q) {
        if (q >= (1ULL << 31) || !is_prime(q)) fail(ErrorCode::BadPrime, std::to_string(q) + " is not a supported prime");
    }

    std::uint64_t modulus() const noexcept { return q_; }

    Element zero() const { return 0; }
    Element one() const { return 1; }
    Element add(Element a, Element b) const { return (a + b) % q_; }
    Element sub(Element a, Element b) const { return (a + q_ - b) % q_; }
    Element mul(Element a, Element b) const { return (a * b) % q_; }
    Element neg(Element a) const { return a == 0 ? 0 : q_ - a; }
    Element pow(Element a, std::uint64_t e) const {
        Element r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    Element inv(Element a) const {
        if (a == 0) fail(ErrorCode::Internal, "division by zero in F_q");
        return pow(a, q_ - 2);
    }
    Element div(Element a, Element b) const { return mul(a, inv(b)); }
    bool is_zero(Element a) const { return a == 0; }
    bool equal(Element a, Element b) const { return a == b; }
    Element from_int(long long v) const {
        long long m = v % static_cast<long long>(q_);
        return static_cast<Element>(m < 0 ? m + static_cast<long long>(q_) : m);
    }
    /// Reduction of a rational; BadPrime when q divides the denominator.
    Element from_rational(const Rational& r) const {
        Integer qz = static_cast<unsigned long>(q_);
        Integer den = r.get_den() % qz;
        if (den == 0) fail(ErrorCode::BadPrime, std::to_string(q_) + " divides a denominator");
        Integer num = r.get_num() % qz;
        if (num < 0) num += qz;
        return mul(num.get_ui(), inv(den.get_ui()));
    }
    std::string format(Element a) const { return std::to_string(a); }

    bool operator==(const PrimeField&) const = default;

   private:
    std::uint64_t q_;
};

}  // namespace cyv

#endif  // CYV_FIELD_HPP
