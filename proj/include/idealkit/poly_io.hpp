#pragma once

#include <string_view>
#include <vector>

#include "idealkit/polynomial.hpp"

namespace idealkit {

// Grammar: terms joined by '+' / '-'; a term is [coef][*]var^e[*var^e...]
// with coef written as `a` or `a/b`. Whitespace is insignificant.
// Column numbers in ParseError are 1-based offsets into `text` shifted by
// `column_offset`; `line` is passed through for file diagnostics.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring, std::size_t line = 1,
                            std::size_t column_offset = 0);

// Comma-separated polynomial list. An empty list (blank text) is allowed.
std::vector<Polynomial> parse_polynomial_list(std::string_view text, const RingPtr& ring,
                                              std::size_t line = 1, std::size_t column_offset = 0);

Rational parse_rational(std::string_view text);

}  // namespace idealkit
