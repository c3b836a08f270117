// Copyright 2026 The oqec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "oqec/problem_file.hpp"

#include "json.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <variant>

namespace oqec {

using nlohmann::json;

ParseError::ParseError(std::string where, const std::string &what)
    : std::runtime_error(where + ": " + what), where_(std::move(where)) {}

namespace {

// A path into the document: object keys and array indices.
using PathStep = std::variant<std::string, std::size_t>;
using Path = std::vector<PathStep>;

Path operator/(Path path, PathStep step) {
    path.push_back(std::move(step));
    return path;
}

std::string path_string(const Path &path) {
    std::string out;
    for (const auto &step : path) {
        if (const auto *key = std::get_if<std::string>(&step)) {
            out += (out.empty() ? "" : ".") + *key;
        } else {
            out += "[" + std::to_string(std::get<std::size_t>(step)) + "]";
        }
    }
    return out.empty() ? "<root>" : out;
}

std::string line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

// Finds the byte offset of the value at `path` in text that is known to be
// valid JSON. Returns npos when the path does not exist.
class Locator {
  public:
    explicit Locator(std::string_view text) : text_(text) {}

    std::size_t find(const Path &path) const { return descend(skip_ws(0), path, 0); }

  private:
    static constexpr std::size_t npos = std::string_view::npos;

    std::size_t skip_ws(std::size_t pos) const {
        while (pos < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos]))) {
            ++pos;
        }
        return pos;
    }

    std::size_t skip_string(std::size_t pos) const {
        for (++pos; pos < text_.size() && text_[pos] != '"'; ++pos) {
            if (text_[pos] == '\\') {
                ++pos;
            }
        }
        return pos + 1;
    }

    std::size_t skip_value(std::size_t pos) const {
        if (pos >= text_.size()) {
            return pos;
        }
        const char c = text_[pos];
        if (c == '"') {
            return skip_string(pos);
        }
        if (c == '[' || c == '{') {
            int depth = 0;
            while (pos < text_.size()) {
                const char d = text_[pos];
                if (d == '"') {
                    pos = skip_string(pos);
                    continue;
                }
                if (d == '[' || d == '{') {
                    ++depth;
                } else if ((d == ']' || d == '}') && --depth == 0) {
                    return pos + 1;
                }
                ++pos;
            }
            return pos;
        }
        while (pos < text_.size() && text_[pos] != ',' && text_[pos] != ']' && text_[pos] != '}' &&
               !std::isspace(static_cast<unsigned char>(text_[pos]))) {
            ++pos;
        }
        return pos;
    }

    std::size_t descend(std::size_t pos, const Path &path, std::size_t depth) const {
        if (depth == path.size() || pos >= text_.size()) {
            return depth == path.size() ? pos : npos;
        }
        const PathStep &step = path[depth];
        const auto *key = std::get_if<std::string>(&step);
        if (text_[pos] != (key ? '{' : '[')) {
            return npos;
        }
        pos = skip_ws(pos + 1);
        for (std::size_t index = 0; pos < text_.size() && text_[pos] != (key ? '}' : ']'); ++index) {
            bool hit = false;
            if (key) {
                const std::size_t end = skip_string(pos);
                hit = text_.substr(pos + 1, end - pos - 2) == *key;
                pos = skip_ws(skip_ws(end) + 1);  // past ':'
            } else {
                hit = index == std::get<std::size_t>(step);
            }
            if (hit) {
                return descend(pos, path, depth + 1);
            }
            pos = skip_ws(skip_value(pos));
            if (pos < text_.size() && text_[pos] == ',') {
                pos = skip_ws(pos + 1);
            }
        }
        return npos;
    }

    std::string_view text_;
};

class Reader {
  public:
    explicit Reader(std::string_view text) : text_(text) {}

    [[noreturn]] void fail(const Path &path, const std::string &what) const {
        std::string where = path_string(path);
        const std::size_t pos = Locator(text_).find(path);
        if (pos != std::string_view::npos) {
            where += " (" + line_column(text_, pos) + ")";
        }
        throw ParseError(where, what);
    }

    Index positive_integer(const json &node, const Path &path) const {
        if (!node.is_number_integer() || node.get<long long>() <= 0) {
            fail(path, "expected a positive integer, found " + node.dump());
        }
        return static_cast<Index>(node.get<long long>());
    }

    ComplexMatrix matrix(const json &node, const Path &path, Index rows, Index cols) const {
        if (!node.is_array()) {
            fail(path, "expected a list of rows");
        }
        if (static_cast<Index>(node.size()) != rows) {
            fail(path, "expected " + std::to_string(rows) + " rows, found " + std::to_string(node.size()));
        }
        ComplexMatrix out(rows, cols);
        for (Index i = 0; i < rows; ++i) {
            const json &row = node[static_cast<std::size_t>(i)];
            const Path row_path = path / static_cast<std::size_t>(i);
            if (!row.is_array()) {
                fail(row_path, "expected a row of [re, im] entries");
            }
            if (static_cast<Index>(row.size()) != cols) {
                fail(row_path, "ragged row: expected " + std::to_string(cols) + " entries, found " +
                                   std::to_string(row.size()));
            }
            for (Index j = 0; j < cols; ++j) {
                const json &entry = row[static_cast<std::size_t>(j)];
                if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number()) {
                    fail(row_path / static_cast<std::size_t>(j),
                         "expected a [re, im] pair of numbers, found " + entry.dump());
                }
                out(i, j) = Complex(entry[0].get<double>(), entry[1].get<double>());
            }
        }
        return out;
    }

    std::vector<ComplexMatrix> matrix_list(const json &node, const Path &path, Index dim) const {
        if (!node.is_array() || node.empty()) {
            fail(path, "expected a non-empty list of matrices");
        }
        std::vector<ComplexMatrix> out;
        for (std::size_t a = 0; a < node.size(); ++a) {
            out.push_back(matrix(node[a], path / a, dim, dim));
        }
        return out;
    }

  private:
    std::string_view text_;
};

// Rows on one line each; numbers via nlohmann's shortest round-trip form.
void write_matrix(std::ostream &out, const ComplexMatrix &m, const std::string &indent) {
    out << "[\n";
    for (Index i = 0; i < m.rows(); ++i) {
        out << indent << "  [";
        for (Index j = 0; j < m.cols(); ++j) {
            out << (j ? ", " : "") << "[" << json(m(i, j).real()).dump() << ", " << json(m(i, j).imag()).dump()
                << "]";
        }
        out << "]" << (i + 1 < m.rows() ? "," : "") << "\n";
    }
    out << indent << "]";
}

void write_matrix_list(std::ostream &out, const std::vector<ComplexMatrix> &list) {
    out << "[\n";
    for (std::size_t a = 0; a < list.size(); ++a) {
        out << "    ";
        write_matrix(out, list[a], "    ");
        out << (a + 1 < list.size() ? "," : "") << "\n";
    }
    out << "  ]";
}

}  // namespace

QuantumChannel ProblemFile::channel() const {
    return QuantumChannel(kraus, dim, dim);
}

SubsystemDecomposition ProblemFile::decomposition() const {
    return SubsystemDecomposition(embedding, m, n);
}

std::optional<QuantumChannel> ProblemFile::recovery_channel() const {
    if (!recovery) {
        return std::nullopt;
    }
    return QuantumChannel(*recovery, dim, dim);
}

ProblemFile parse_problem(std::string_view text) {
    json root;
    try {
        root = json::parse(text.begin(), text.end());
    } catch (const json::parse_error &e) {
        throw ParseError(line_column(text, e.byte > 0 ? e.byte - 1 : 0), "malformed JSON");
    }
    const Reader reader(text);
    const Path top;
    if (!root.is_object()) {
        reader.fail(top, "expected a JSON object");
    }
    for (const char *key : {"dim", "kraus", "decomposition"}) {
        if (!root.contains(key)) {
            reader.fail(top, std::string("missing required field \"") + key + "\"");
        }
    }

    ProblemFile problem;
    problem.dim = reader.positive_integer(root["dim"], top / "dim");
    problem.kraus = reader.matrix_list(root["kraus"], top / "kraus", problem.dim);

    const json &dec = root["decomposition"];
    const Path dec_path = top / "decomposition";
    if (!dec.is_object() || !dec.contains("embedding") || !dec.contains("m") || !dec.contains("n")) {
        reader.fail(dec_path, "expected an object with \"embedding\", \"m\" and \"n\"");
    }
    problem.m = reader.positive_integer(dec["m"], dec_path / "m");
    problem.n = reader.positive_integer(dec["n"], dec_path / "n");
    if (problem.m * problem.n > problem.dim) {
        reader.fail(dec_path, "m * n = " + std::to_string(problem.m * problem.n) + " exceeds dim " +
                                  std::to_string(problem.dim));
    }
    problem.embedding = reader.matrix(dec["embedding"], dec_path / "embedding", problem.dim, problem.m * problem.n);
    try {
        (void)problem.decomposition();
    } catch (const DimensionError &e) {
        reader.fail(dec_path / "embedding", e.what());
    }

    if (root.contains("recovery") && !root["recovery"].is_null()) {
        problem.recovery = reader.matrix_list(root["recovery"], top / "recovery", problem.dim);
    }
    if (root.contains("tol")) {
        const json &tol = root["tol"];
        if (!tol.is_number() || tol.get<double>() <= 0) {
            reader.fail(top / "tol", "expected a positive number, found " + tol.dump());
        }
        problem.tol = tol.get<double>();
    }
    return problem;
}

ProblemFile read_problem(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_problem(buffer.str());
}

std::string serialize_problem(const ProblemFile &problem) {
    std::ostringstream out;
    out << "{\n  \"dim\": " << problem.dim << ",\n  \"kraus\": ";
    write_matrix_list(out, problem.kraus);
    out << ",\n  \"decomposition\": {\n    \"m\": " << problem.m << ",\n    \"n\": " << problem.n
        << ",\n    \"embedding\": ";
    write_matrix(out, problem.embedding, "    ");
    out << "\n  },\n";
    if (problem.recovery) {
        out << "  \"recovery\": ";
        write_matrix_list(out, *problem.recovery);
        out << ",\n";
    }
    out << "  \"tol\": " << json(problem.tol).dump() << "\n}\n";
    return out.str();
}

void write_problem(const ProblemFile &problem, const std::filesystem::path &path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << serialize_problem(problem);
    if (!out) {
        throw std::runtime_error("error while writing " + path.string());
    }
}

}  // namespace oqec
