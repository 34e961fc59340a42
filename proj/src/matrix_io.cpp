#include "sgm/matrix_io.hpp"

#include <fstream>
#include <sstream>

namespace sgm {

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

namespace {

template <class T>
void append_rows(std::ostringstream& out, const Matrix<T>& m, const char* row_sep,
                 const char* first_sep) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out << (i == 0 ? first_sep : row_sep);
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out << ' ';
            out << m(i, j).to_string();
        }
    }
}

const char* domain_name(const ExactMatrix& m) {
    return domain_of(m) == Domain::gf3 ? "gf3" : "dyadic";
}

template <class T>
Matrix<T> build(std::size_t rows, std::size_t cols, const std::vector<std::vector<std::string>>& cells) {
    if (cells.size() != rows) throw ParseError("expected " + std::to_string(rows) + " matrix rows");
    Matrix<T> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (cells[i].size() != cols) {
            throw ParseError("row " + std::to_string(i + 1) + " has " + std::to_string(cells[i].size()) +
                             " entries, expected " + std::to_string(cols));
        }
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = T::parse(cells[i][j]);
    }
    return m;
}

ExactMatrix assemble(const std::vector<std::string>& header,
                     const std::vector<std::vector<std::string>>& cells,
                     const std::vector<std::string>& labels) {
    if (header.size() != 3) throw ParseError("matrix header must be 'rows cols domain'");
    std::size_t rows = 0, cols = 0;
    try {
        rows = std::stoul(header[0]);
        cols = std::stoul(header[1]);
    } catch (const std::exception&) {
        throw ParseError("bad matrix dimensions");
    }
    ExactMatrix out;
    if (header[2] == "gf3") {
        out = build<Gf3>(rows, cols, cells);
    } else if (header[2] == "dyadic") {
        out = build<Dyadic>(rows, cols, cells);
    } else {
        throw ParseError("unknown domain '" + header[2] + "'");
    }
    if (!labels.empty()) std::visit([&](auto& m) { m.set_col_labels(labels); }, out);
    return out;
}

}  // namespace

std::string format_matrix(const ExactMatrix& m) {
    std::ostringstream out;
    std::visit(
        [&](const auto& x) {
            out << x.rows() << ' ' << x.cols() << ' ' << domain_name(m) << '\n';
            for (std::size_t i = 0; i < x.rows(); ++i) {
                for (std::size_t j = 0; j < x.cols(); ++j) {
                    if (j) out << ' ';
                    out << x(i, j).to_string();
                }
                out << '\n';
            }
            if (x.col_labels() != default_labels(x.cols())) {
                out << "labels";
                for (const auto& l : x.col_labels()) out << ' ' << l;
                out << '\n';
            }
        },
        m);
    return out.str();
}

ExactMatrix parse_matrix(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> labels;
    while (std::getline(in, line)) {
        auto toks = split_ws(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        if (header.empty()) {
            header = toks;
        } else if (toks[0] == "labels") {
            labels.assign(toks.begin() + 1, toks.end());
        } else {
            cells.push_back(toks);
        }
    }
    if (header.empty()) throw ParseError("empty matrix text");
    return assemble(header, cells, labels);
}

std::string flatten_matrix(const ExactMatrix& m) {
    std::ostringstream out;
    std::visit(
        [&](const auto& x) {
            out << x.rows() << ' ' << x.cols() << ' ' << domain_name(m);
            append_rows(out, x, " | ", " | ");
            if (x.col_labels() != default_labels(x.cols())) {
                out << " | labels";
                for (const auto& l : x.col_labels()) out << ' ' << l;
            }
        },
        m);
    return out.str();
}

ExactMatrix parse_flat_matrix(const std::string& text) {
    std::vector<std::vector<std::string>> parts;
    std::size_t start = 0;
    while (true) {
        auto bar = text.find('|', start);
        parts.push_back(split_ws(text.substr(start, bar == std::string::npos ? std::string::npos : bar - start)));
        if (bar == std::string::npos) break;
        start = bar + 1;
    }
    std::vector<std::string> labels;
    if (parts.size() > 1 && !parts.back().empty() && parts.back()[0] == "labels") {
        labels.assign(parts.back().begin() + 1, parts.back().end());
        parts.pop_back();
    }
    std::vector<std::vector<std::string>> cells(parts.begin() + 1, parts.end());
    return assemble(parts.front(), cells, labels);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << content;
}

}  // namespace sgm
