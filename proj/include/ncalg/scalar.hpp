#ifndef NCALG_SCALAR_HPP
#define NCALG_SCALAR_HPP

// Exact coefficient fields: the rationals (GMP-backed) and prime fields GF(p)
// with a runtime modulus. Every algebra object is templated on the scalar type
// K; the field is fixed per presentation and never mixed.

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace ncalg {

using Rational = mpq_class;

// Which field a presentation lives over. Carried alongside templated code so
// that scalars can be constructed from integer literals (GF(p) needs p).
struct FieldSpec {
    enum class Kind { rationals, prime };
    Kind kind = Kind::rationals;
    std::uint64_t p = 0;  // modulus when kind == prime

    bool operator==(const FieldSpec&) const = default;
};

inline FieldSpec field_rationals() { return FieldSpec{FieldSpec::Kind::rationals, 0}; }
inline FieldSpec field_prime(std::uint64_t p) { return FieldSpec{FieldSpec::Kind::prime, p}; }

inline std::string to_text(const FieldSpec& f) {
    return f.kind == FieldSpec::Kind::rationals ? std::string("Q")
                                                : "GF(" + std::to_string(f.p) + ")";
}

// ---------------------------------------------------------------------------
// GF(p). Elements carry their modulus; mixing moduli is a programming error.

struct GFp {
    std::uint64_t v = 0;
    std::uint64_t p = 0;  // 0 marks a default-constructed zero, compatible with any modulus

    GFp() = default;
    GFp(std::uint64_t value, std::uint64_t modulus) : v(value % modulus), p(modulus) {}

    bool operator==(const GFp& o) const { return v == o.v && (p == o.p || v == 0); }
    bool operator!=(const GFp& o) const { return !(*this == o); }
};

namespace detail {
inline std::uint64_t gfp_modulus(const GFp& a, const GFp& b) {
    if (a.p && b.p && a.p != b.p) throw std::logic_error("GFp: mixed moduli");
    return a.p ? a.p : b.p;
}
inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}
inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    for (; e; e >>= 1) {
        if (e & 1) r = mulmod_u64(r, a, p);
        a = mulmod_u64(a, a, p);
    }
    return r;
}
}  // namespace detail

inline GFp operator+(const GFp& a, const GFp& b) {
    std::uint64_t p = detail::gfp_modulus(a, b);
    if (!p) return GFp{};
    std::uint64_t s = a.v + b.v;
    if (s >= p) s -= p;
    return GFp{s, p};
}
inline GFp operator-(const GFp& a) {
    if (!a.p || a.v == 0) return a;
    return GFp{a.p - a.v, a.p};
}
inline GFp operator-(const GFp& a, const GFp& b) { return a + (-b); }
inline GFp operator*(const GFp& a, const GFp& b) {
    std::uint64_t p = detail::gfp_modulus(a, b);
    if (!p) return GFp{};
    return GFp{detail::mulmod_u64(a.v, b.v, p), p};
}
inline GFp inverse(const GFp& a) {
    if (!a.p || a.v == 0) throw std::domain_error("GFp: inverse of zero");
    // p is prime, so Fermat is both correct and branch-free.
    return GFp{detail::powmod_u64(a.v, a.p - 2, a.p), a.p};
}
inline GFp operator/(const GFp& a, const GFp& b) { return a * inverse(b); }

// ---------------------------------------------------------------------------
// Uniform scalar interface used by the templated layers.

inline bool is_zero(const Rational& a) { return sgn(a) == 0; }
inline bool is_zero(const GFp& a) { return a.v == 0; }

inline Rational inverse(const Rational& a) {
    if (is_zero(a)) throw std::domain_error("Rational: inverse of zero");
    return Rational(1) / a;
}

inline Rational scalar_from_int(long n, const FieldSpec&, const Rational*) { return Rational(n); }
inline GFp scalar_from_int(long n, const FieldSpec& f, const GFp*) {
    if (f.kind != FieldSpec::Kind::prime || f.p == 0)
        throw std::logic_error("GFp scalar requested without a prime field");
    long long m = static_cast<long long>(n % static_cast<long long>(f.p));
    if (m < 0) m += static_cast<long long>(f.p);
    return GFp{static_cast<std::uint64_t>(m), f.p};
}
template <class K>
K scalar_from_int(long n, const FieldSpec& f) {
    return scalar_from_int(n, f, static_cast<const K*>(nullptr));
}

inline std::string to_text(const Rational& a) {
    Rational c = a;
    c.canonicalize();
    return c.get_str();
}
inline std::string to_text(const GFp& a) { return std::to_string(a.v); }

}  // namespace ncalg

#endif
