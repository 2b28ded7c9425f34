#include "grassclique/textio.hpp"

#include <sstream>
#include <stdexcept>

namespace grassclique {

MatFq parse_matrix(const std::string& text, FieldPtr field) {
    std::vector<std::vector<int>> rows;
    std::string row_text;
    std::string normalized = text;
    for (char& c : normalized)
        if (c == '\n' || c == '\r') c = ';';
    std::istringstream lines(normalized);
    while (std::getline(lines, row_text, ';')) {
        std::istringstream toks(row_text);
        std::vector<int> row;
        std::string tok;
        while (toks >> tok) {
            std::size_t used = 0;
            int v;
            try {
                v = std::stoi(tok, &used);
            } catch (const std::exception&) {
                throw std::invalid_argument("matrix entry '" + tok + "' is not an integer");
            }
            if (used != tok.size())
                throw std::invalid_argument("matrix entry '" + tok + "' is not an integer");
            if (v < 0 || v >= field->q())
                throw std::invalid_argument("matrix entry " + tok + " out of range for GF(" +
                                            std::to_string(field->q()) + ")");
            row.push_back(v);
        }
        if (row.empty()) continue;  // blank segment between separators
        if (!rows.empty() && row.size() != rows.front().size())
            throw std::invalid_argument("ragged rows in matrix text");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("empty matrix text");
    return MatFq::from_rows(std::move(field), rows);
}

std::string format_matrix(const MatFq& m) {
    std::ostringstream out;
    for (int i = 0; i < m.rows(); ++i) {
        if (i) out << "; ";
        for (int j = 0; j < m.cols(); ++j) {
            if (j) out << ' ';
            out << int(m.at(i, j));
        }
    }
    return out.str();
}

std::string format_vector(std::span<const std::uint8_t> v) {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ' ';
        out << int(v[i]);
    }
    return out.str();
}

}  // namespace grassclique
