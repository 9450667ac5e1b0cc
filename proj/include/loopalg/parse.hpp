#ifndef LOOPALG_PARSE_HPP
#define LOOPALG_PARSE_HPP

#include "loopalg/bv.hpp"

namespace loopalg {

struct ParseError : std::runtime_error {
    std::size_t position;  // byte offset into the input
    ParseError(std::string msg, std::size_t pos)
        : std::runtime_error(std::move(msg)), position(pos) {}
};

/// Grammar:
///   expr   := ['-'] tterm (('+'|'-') tterm)*
///   tterm  := term ('(x)' term)?
///   term   := factor ('*' factor)*
///   factor := scalar | gen ('^' int)? | '(' sum ')' ('^' uint)?
///   sum    := ['-'] term (('+'|'-') term)*
/// '(x)' always lexes as the tensor separator.  A negative exponent g^-k
/// stands for ginv^k and requires a generator named "<g>inv".  Scalars use
/// the ring's syntax (decimal integers, n/d rationals, 0/1 bits).
/// The left factor of a tensor lives on the loop side, the right factor on
/// the base side; a tensor-free term is taken loop-side when its generators
/// resolve there, else base-side.
LoopElement parse_loop_element(const LoopModel& M, const std::string& text);

/// Same grammar without the tensor separator, against one algebra.
Element parse_element(const PresentedAlgebra& A, const std::string& text);

}  // namespace loopalg

#endif
