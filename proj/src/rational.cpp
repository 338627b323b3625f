#include "picalb/rational.hpp"

#include "picalb/errors.hpp"

#include <cctype>

namespace picalb {

std::string_view error_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
        case ErrorCode::ShapeMismatch: return "SHAPE_MISMATCH";
        case ErrorCode::NonCofinite: return "NON_COFINITE";
        case ErrorCode::InsufficientTruncation: return "INSUFFICIENT_TRUNCATION";
        case ErrorCode::UnstableTruncation: return "UNSTABLE_TRUNCATION";
        case ErrorCode::NotMonomialUnibranch: return "NOT_MONOMIAL_UNIBRANCH";
        case ErrorCode::Disconnected: return "DISCONNECTED";
        case ErrorCode::MissingCount: return "MISSING_COUNT";
        case ErrorCode::Schema: return "SCHEMA";
    }
    return "UNKNOWN";
}

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-') {
        throw Error(ErrorCode::Schema, "malformed rational '" + std::string(text) + "'");
    }
    if (num.front() == '+') num.remove_prefix(1);
    if (den.front() == '+') den.remove_prefix(1);
    Integer n(std::string(num), 10);
    Integer d(std::string(den), 10);
    if (d == 0) {
        throw Error(ErrorCode::Schema, "zero denominator in '" + std::string(text) + "'");
    }
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string format_rational(const Rational& value) {
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Integer ceil_rational(const Rational& value) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    return q;
}

Integer next_integer_above(const Rational& value) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    return q + 1;
}

}  // namespace picalb
