#include "hautus/errors.hpp"
#include "hautus/poly_text.hpp"
#include "hautus/polymatrix.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace hautus {

namespace {

bool is_blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '#';
    }
    return true;
}

} // namespace

PolyMatrix parse_matrix_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int nvars = -1;
    std::vector<std::vector<Poly>> rows;

    while (std::getline(in, line)) {
        ++lineno;
        if (is_blank_or_comment(line)) continue;

        if (nvars < 0) {
            // header: "vars: n"
            std::istringstream hdr(line);
            std::string kw;
            hdr >> kw;
            long n = -1;
            if (kw == "vars:") {
                hdr >> n;
            } else if (kw == "vars") {
                char colon = 0;
                hdr >> colon >> n;
                if (colon != ':') n = -1;
            }
            std::string rest;
            hdr >> rest;
            if (n < 1 || !rest.empty())
                throw parse_error("expected header 'vars: n' with a positive variable count",
                                  lineno, 1);
            nvars = static_cast<int>(n);
            continue;
        }

        std::vector<Poly> row;
        size_t start = 0;
        for (;;) {
            const size_t sep = line.find(';', start);
            const std::string_view entry =
                std::string_view(line).substr(start, sep == std::string::npos ? std::string::npos
                                                                              : sep - start);
            row.push_back(parse_poly(entry, nvars, lineno - 1, static_cast<int>(start)));
            if (sep == std::string::npos) break;
            start = sep + 1;
        }
        if (!rows.empty() && row.size() != rows.front().size())
            throw parse_error("row has " + std::to_string(row.size()) + " entries, expected " +
                                  std::to_string(rows.front().size()),
                              lineno, 1);
        rows.push_back(std::move(row));
    }

    if (nvars < 0) throw parse_error("missing 'vars: n' header", lineno + 1, 1);
    if (rows.empty()) throw parse_error("matrix has no rows", lineno + 1, 1);

    PolyMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()), nvars);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j)
            m.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
    return m;
}

PolyMatrix parse_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open matrix file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_matrix_text(buf.str());
}

std::string format_matrix(const PolyMatrix& m) {
    std::ostringstream out;
    out << "vars: " << m.nvars() << "\n";
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) out << "; ";
            out << poly_to_string(m.at(i, j));
        }
        out << "\n";
    }
    return out.str();
}

} // namespace hautus
