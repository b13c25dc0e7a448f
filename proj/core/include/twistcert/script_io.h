#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "twistcert/presentation.h"

namespace twistcert {

// Line-oriented proof-script format:
//
//   start: <word>
//   step <k>: <RULE>(<params>) <LR|RL> @ <position>
//   ...
//   end: <word>
//
// Steps are numbered from 1 in order; '#' starts a comment; blank lines are
// ignored. Parameters are comma separated letters, e.g. CENTRAL(c3^-1,a1).
ProofScript parse_script(std::string_view text);
std::string format_script(const ProofScript& ps);

ProofScript read_script_file(const std::filesystem::path& path);
void write_script_file(const std::filesystem::path& path, const ProofScript& ps);

// Parses "RULE(p1,p2)".
Rule parse_rule(std::string_view text);

// Reads a whole file; throws Error when it cannot be opened.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace twistcert
