#pragma once

#include <stdexcept>
#include <string>

namespace tpq {

// Every failure carries a stable machine-readable code; the CLI maps these
// to exit 2 with {"error": code(), "detail": what()}.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& detail)
        : std::runtime_error(detail), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

#define TPQ_ERROR_KIND(Name, code_literal)                        \
    class Name : public Error {                                   \
    public:                                                       \
        explicit Name(const std::string& detail)                  \
            : Error(code_literal, detail) {}                      \
    }

TPQ_ERROR_KIND(NotAcyclic, "not_acyclic");
TPQ_ERROR_KIND(ExpansionTooLarge, "expansion_too_large");
TPQ_ERROR_KIND(ArityCapExceeded, "arity_cap_exceeded");
TPQ_ERROR_KIND(MissingRelation, "missing_relation");
TPQ_ERROR_KIND(DegenerateAtom, "degenerate_atom");
TPQ_ERROR_KIND(CapExceeded, "cap_exceeded");
TPQ_ERROR_KIND(VarsOutOfRange, "vars_out_of_range");
TPQ_ERROR_KIND(MethodInapplicable, "method_inapplicable");
TPQ_ERROR_KIND(NotLegal, "not_legal");
TPQ_ERROR_KIND(NotWinning, "not_winning");
TPQ_ERROR_KIND(NotNice, "not_nice");
TPQ_ERROR_KIND(NotMonotone, "not_monotone");
TPQ_ERROR_KIND(SandwichViolation, "sandwich_violation");
TPQ_ERROR_KIND(NotReduced, "not_reduced");
TPQ_ERROR_KIND(NoCoveringView, "no_covering_view");
TPQ_ERROR_KIND(OUnsupported, "o_unsupported");
TPQ_ERROR_KIND(CoreCapExceeded, "core_cap_exceeded");
TPQ_ERROR_KIND(ParseError, "parse_error");
TPQ_ERROR_KIND(InternalError, "internal_error");

#undef TPQ_ERROR_KIND

}  // namespace tpq
