#pragma once

#include "cpvdw/response.hpp"

#include <filesystem>
#include <string>

namespace cpvdw::response {

//! Parses an atom definition (YAML). Values are taken in the unit system
//! of the run; `source` names the input in error messages, which have the
//! form "source:line:column: message". Throws ConfigError, or DomainError
//! for physically invalid values (also prefixed with the location).
//!
//!   label: sodium-like
//!   electric_transitions:
//!     - {omega: 3.2e15, mu_sq: 1.1e-58}
//!   magnetic_transitions: []
//!   beta_d: -1.0e-29          # or particles: [{q: ..., m: ..., r_sq: ...}]
AtomModel parse_atom(const std::string &text, const std::string &source);

//! Reads and parses a file; a missing or unreadable file is a ConfigError
//! naming the path.
AtomModel load_atom_file(const std::filesystem::path &path);

} // namespace cpvdw::response
