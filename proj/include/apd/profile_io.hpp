#pragma once

#include <stdexcept>
#include <string>

#include "apd/profile.hpp"

namespace apd {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_no, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
};

// Text format:
//   # optional comments
//   candidates: a,b,c
//   vote: a,b
//   vote:
// Labels match [A-Za-z0-9_]+; whitespace around separators is ignored; an
// empty list after "vote:" is the empty vote.
ApprovalProfile parse_profile(const std::string& text);
ApprovalProfile load_profile(const std::string& path);

std::string serialize_profile(const ApprovalProfile& p);
void save_profile(const ApprovalProfile& p, const std::string& path);

}  // namespace apd
