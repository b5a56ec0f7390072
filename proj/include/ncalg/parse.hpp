#ifndef NCALG_PARSE_HPP
#define NCALG_PARSE_HPP

// Text input formats.
//
// Presentation files:
//   field Q;                    (or: field GF(7);)
//   gens x:1 y:1;               (":deg" optional, defaults to 1)
//   order deglex y>x;           (every generator exactly once, highest first)
//   rels y*x - x*y;             (comma-separated; may be absent for free algebras)
//
// Relation expressions admit integer scalars, +, -, *, parentheses, and
// juxtaposition as product. Statements end with ';' (the last one may omit
// it). Parse errors carry 1-based line/column positions.
//
// Family files (parsed against an existing presentation):
//   ideal a0 : ;                       (right ideal; empty generator list = 0)
//   ideal a1 : x, x*y - y*x;
//   witness a1 : x = x, J = a0, N = a1;
//
// A witness line records the decomposition I = J + x*R with colon ideal
// (x : J) = N used by the coherent-family checks.

#include <variant>

#include "presentation.hpp"

namespace ncalg {

struct ParseError : std::runtime_error {
    int line = 0;
    int col = 0;
    ParseError(const std::string& msg, int line_, int col_)
        : std::runtime_error(msg + " at line " + std::to_string(line_) + ", column " +
                             std::to_string(col_)),
          line(line_),
          col(col_) {}
};

using AnyPresentation = std::variant<Presentation<Rational>, Presentation<GFp>>;

// Parses and validates (homogeneity, order coverage, identifier rules).
AnyPresentation parse_presentation(const std::string& text);

// A single homogeneous expression / a comma-separated list, over P's generators.
template <class K>
Polynomial<K> parse_poly(const std::string& text, const Presentation<K>& P);
template <class K>
std::vector<Polynomial<K>> parse_poly_list(const std::string& text, const Presentation<K>& P);

template <class K>
struct FamilySpec {
    struct Member {
        std::string name;
        std::vector<Polynomial<K>> gens;  // right-ideal generators; empty = zero ideal
    };
    struct Witness {
        std::string member;  // the ideal I being witnessed
        Polynomial<K> x;
        std::string J;  // member name with I = J + x*R
        std::string N;  // member name with (x : J) = N
    };
    std::vector<Member> members;
    std::vector<Witness> witnesses;

    const Member* find(const std::string& name) const {
        for (const auto& m : members)
            if (m.name == name) return &m;
        return nullptr;
    }
};

template <class K>
FamilySpec<K> parse_family(const std::string& text, const Presentation<K>& P);

}  // namespace ncalg

#endif
