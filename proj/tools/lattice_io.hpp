#pragma once

#include "asa/cohomology.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace asa::cli {

class LatticeFormatError : public std::runtime_error {
public:
    explicit LatticeFormatError(const std::string& what) : std::runtime_error(what) {}
};

// Plain-text lattice description, whitespace-separated integers, '#' starts a
// comment running to end of line:
//
//   s                      group order
//   s rows of s entries    multiplication table, 0-based element indices
//   d                      lattice rank
//   s blocks of d*d        action matrix of each element, row-major
GLattice read_lattice(std::istream& in);
GLattice read_lattice_file(const std::string& path);

void write_lattice(std::ostream& out, const GLattice& lattice);

} // namespace asa::cli
