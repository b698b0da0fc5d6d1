#pragma once

#include <string>
#include <string_view>

#include "mbseg/types.hpp"

namespace mbseg {

// Decodes UTF-8 into code points. Throws DataError on malformed input.
SymbolString decode_utf8(std::string_view text);

std::string encode_utf8(SymbolView symbols);
std::string encode_utf8(Symbol symbol);
void append_utf8(std::string& out, Symbol symbol);

// ASCII-only lowercasing; non-ASCII symbols pass through unchanged.
Symbol ascii_lower(Symbol s);

}  // namespace mbseg
