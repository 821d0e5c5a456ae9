#include "lattice_io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

namespace asa::cli {

namespace {

class TokenReader {
public:
    explicit TokenReader(std::istream& in) {
        std::string line;
        while (std::getline(in, line)) {
            if (auto hash = line.find('#'); hash != std::string::npos)
                line.erase(hash);
            std::istringstream words(line);
            std::string w;
            while (words >> w)
                tokens_.push_back(w);
        }
    }

    BigInt next_integer(const std::string& what) {
        if (pos_ >= tokens_.size())
            throw LatticeFormatError("malformed lattice file: unexpected end of input reading " + what);
        const std::string& tok = tokens_[pos_++];
        try {
            return parse_bigint(tok);
        } catch (const std::invalid_argument&) {
            throw LatticeFormatError("malformed lattice file: expected integer for " + what + ", got '" +
                                     tok + "'");
        }
    }

    std::size_t next_count(const std::string& what, std::size_t max) {
        BigInt v = next_integer(what);
        if (v < 0 || v > max)
            throw LatticeFormatError("malformed lattice file: " + what + " out of range: " + v.str());
        return v.convert_to<std::size_t>();
    }

    void expect_end() const {
        if (pos_ != tokens_.size())
            throw LatticeFormatError("malformed lattice file: trailing data starting at '" +
                                     tokens_[pos_] + "'");
    }

private:
    std::vector<std::string> tokens_;
    std::size_t pos_ = 0;
};

} // namespace

GLattice read_lattice(std::istream& in) {
    TokenReader reader(in);
    const std::size_t s = reader.next_count("group order", FiniteGroup::kMaxOrder);
    if (s == 0)
        throw LatticeFormatError("malformed lattice file: group order must be >= 1");
    std::vector<std::vector<std::size_t>> table(s, std::vector<std::size_t>(s));
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j)
            table[i][j] = reader.next_count("table entry", s - 1);
    const std::size_t d = reader.next_count("rank", 64);
    std::vector<IntegerMatrix> action;
    for (std::size_t g = 0; g < s; ++g) {
        IntegerMatrix m(d, d);
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c)
                m(r, c) = reader.next_integer("action matrix entry");
        action.push_back(std::move(m));
    }
    reader.expect_end();
    try {
        return GLattice(FiniteGroup(std::move(table)), d, std::move(action));
    } catch (const std::invalid_argument& e) {
        throw LatticeFormatError(std::string("malformed lattice file: ") + e.what());
    }
}

GLattice read_lattice_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw LatticeFormatError("malformed lattice file: cannot open '" + path + "'");
    return read_lattice(in);
}

void write_lattice(std::ostream& out, const GLattice& lattice) {
    const FiniteGroup& g = lattice.group();
    out << g.order() << '\n';
    for (const auto& row : g.table()) {
        for (std::size_t j = 0; j < row.size(); ++j)
            out << (j ? " " : "") << row[j];
        out << '\n';
    }
    out << lattice.rank() << '\n';
    for (const auto& m : lattice.actions()) {
        for (std::size_t r = 0; r < m.rows(); ++r) {
            for (std::size_t c = 0; c < m.cols(); ++c)
                out << (c ? " " : "") << m(r, c);
            out << '\n';
        }
    }
}

} // namespace asa::cli
